#include "greenring/rules.hpp"

#include <algorithm>
#include <cstdlib>

namespace greenring {

int c_fn(int t) {
  // floor division, also for negative t
  int a = t + 1;
  return a >= 0 ? a / 2 : -((-a + 1) / 2);
}

namespace {

// m + (1 - (-1)^m)/2 and m + (1 + (-1)^m)/2.
int plus_if_odd(int m) { return m + (m % 2 != 0 ? 1 : 0); }
int plus_if_even(int m) { return m + (m % 2 == 0 ? 1 : 0); }

struct Builder {
  int n;
  Decomposition out;

  void add(const ModuleLabel& L, int mult) {
    if (mult > 0) out[L] += mult;
  }
  void V(int l, int r, int mult = 1) { add(ModuleLabel::simple(n, l, r), mult); }
  void P(int l, int r, int mult = 1) { add(ModuleLabel::proj(n, l, r), mult); }
  void Om(int m, int l, int r) { add(ModuleLabel::str(n, m, l, r), 1); }
  void M(int s, int l, int r, const ExtScalar& eta) { add(ModuleLabel::band(n, s, l, r, eta), 1); }
};

// Operands after normalization: first (l, r), second (l', r').
struct Pair {
  int n, l, lp, r, rp;
  int t() const { return l + lp - (n + 1); }
  int l1() const { return std::min(l, lp); }
  int l2() const { return std::max(l, lp); }
  int rr(int i) const { return r + rp + i; }
};

FieldElem q_int_checked(int n, int k) {
  FieldElem v = q_int(n, k);
  if (v.is_zero()) throw std::logic_error("band parameter map hits (" + std::to_string(k) + ")_q = 0");
  return v;
}

// η q^{2i−l+1}(l+l'−1−2i)_q/(l')_q
ExtScalar eta_down(const Pair& p, const ExtScalar& eta, int i) {
  FieldElem f = pow_q(p.n, 2 * i - p.l + 1) * q_int_checked(p.n, p.l + p.lp - 1 - 2 * i) / q_int_checked(p.n, p.lp);
  return ext_scale(f, eta);
}

// −η q^{l'}(2i−l−l'+1)_q/(l')_q
ExtScalar eta_up(const Pair& p, const ExtScalar& eta, int i) {
  FieldElem f = -(pow_q(p.n, p.lp) * q_int_checked(p.n, 2 * i - p.l - p.lp + 1) / q_int_checked(p.n, p.lp));
  return ext_scale(f, eta);
}

void record(RuleTrace& tr, const Pair& p) {
  tr.params["l"] = p.l;
  tr.params["l'"] = p.lp;
  tr.params["r"] = p.r;
  tr.params["r'"] = p.rp;
  tr.params["t"] = p.t();
  tr.params["c(t)"] = c_fn(p.t());
  tr.params["c(l+l'-1)"] = c_fn(p.l + p.lp - 1);
  tr.params["l1"] = p.l1();
  tr.params["l2"] = p.l2();
}

std::string simple_simple(Builder& b, const Pair& p) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  if (l + lp <= n + 1) {
    for (int i = 0; i <= l - 1; ++i) b.V(l + lp - 1 - 2 * i, p.rr(i));
    return "Prop 3.1(1)";
  }
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i));
  for (int i = t + 1; i <= l - 1; ++i) b.V(l + lp - 1 - 2 * i, p.rr(i));
  return "Prop 3.1(2)";
}

std::string simple_proj(Builder& b, const Pair& p) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  if (l + lp <= n) {
    for (int i = 0; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i));
    for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2);
    return "Thm 3.3";
  }
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2);
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i));
  for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2);
  return "Thm 3.5";
}

std::string simple_str(Builder& b, const Pair& p, int M) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t(), m = std::abs(M);
  if (l + lp <= n) {
    for (int i = 0; i <= p.l1() - 1; ++i) b.Om(M, l + lp - 1 - 2 * i, p.rr(i));
    for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), plus_if_odd(m));
    return "Prop 3.6";
  }
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.Om(M, l + lp - 1 - 2 * i, p.rr(i));
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), plus_if_even(m));
  for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), plus_if_odd(m));
  return "Prop 3.7";
}

std::string simple_band(Builder& b, const Pair& p, int s, const ExtScalar& eta) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  if (l + lp <= n) {
    for (int i = 0; i <= p.l1() - 1; ++i) b.M(s, l + lp - 1 - 2 * i, p.rr(i), eta_down(p, eta, i));
    for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), s);
    return "Thm 3.16";
  }
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.M(s, l + lp - 1 - 2 * i, p.rr(i), eta_down(p, eta, i));
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), s);
  for (int i = c_fn(l + lp - 1); i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), s);
  return "Thm 3.17";
}

std::string proj_str(Builder& b, const Pair& p, int M) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t(), m = std::abs(M);
  const int E = plus_if_even(m), O = plus_if_odd(m);
  const int cl = c_fn(l + lp - 1);
  if (l <= lp && l + lp <= n) {
    for (int i = 0; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), E);
    for (int i = lp; i <= l + lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), O);
    for (int i = cl; i <= lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * E);
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), 2 * O);
    return "Prop 4.1";
  }
  if (l <= lp) {
    for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2 * E);
    for (int i = t + 1; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), E);
    for (int i = lp; i <= n - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), O);
    for (int i = cl; i <= lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * E);
    return "Cor 4.2";
  }
  if (l + lp <= n) {
    for (int i = 0; i <= lp - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), E);
    for (int i = l; i <= l + lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), O);
    for (int i = cl; i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * O);
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), 2 * O);
    return "Cor 4.3";
  }
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2 * E);
  for (int i = t + 1; i <= lp - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), E);
  for (int i = l; i <= n - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), O);
  for (int i = cl; i <= l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * O);
  return "Cor 4.4";
}

// Requires l <= l'.
std::string proj_proj(Builder& b, const Pair& p) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  const int cl = c_fn(l + lp - 1);
  if (l + lp <= n) {
    for (int i = 0; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2);
    for (int i = lp; i <= lp + l - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2);
    for (int i = cl; i <= lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 4);
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), 4);
    return "Prop 4.5";
  }
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 4);
  for (int i = t + 1; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2);
  for (int i = lp; i <= n - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2);
  for (int i = cl; i <= lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 4);
  return "Cor 4.6";
}

std::string proj_band(Builder& b, const Pair& p, int s) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  const int cl = c_fn(l + lp - 1);
  if (l + lp <= n) {
    for (int i = 0; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), s);
    for (int i = p.l2(); i <= l + lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), s);
    for (int i = cl; i <= p.l2() - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * s);
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), 2 * s);
    return "Prop 4.7";
  }
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), 2 * s);
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), s);
  for (int i = p.l2(); i <= n - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), s);
  for (int i = cl; i <= p.l2() - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), 2 * s);
  return "Cor 4.8";
}

// Ω^{M1}V(l,r) ⊗ Ω^{M2}V(l',r') with l <= l'.
std::string str_str(Builder& b, const Pair& p, int M1, int M2, RuleTrace& tr) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  const int m = std::abs(M1), s = std::abs(M2);
  const int m1 = std::min(m, s), m2 = std::max(m, s);
  const bool first_pos = M1 > 0, same = (M1 > 0) == (M2 > 0), even = (m + s) % 2 == 0;
  const int cl = c_fn(l + lp - 1);
  tr.params["m"] = m;
  tr.params["s"] = s;
  tr.params["m1"] = m1;
  tr.params["m2"] = m2;
  const int expo = same ? M1 + M2 : (first_pos ? m - s : s - m);

  if (l + lp <= n) {
    for (int i = cl; i <= lp - 1; ++i)
      b.P(n + l + lp - 1 - 2 * i, p.rr(i), plus_if_odd(m) * plus_if_even(s));
    for (int i = 1; i <= c_fn(n - l - lp); ++i)
      b.P(l + lp - 1 + 2 * i, p.rr(-i), plus_if_odd(m) * plus_if_odd(s));
    for (int i = 0; i <= l - 1; ++i) b.Om(expo, l + lp - 1 - 2 * i, p.rr(i));
    if (same == even)
      for (int i = 0; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), same ? m * s : m1 * (m2 + 1));
    else
      for (int i = lp; i <= l + lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), same ? m * s : m1 * (m2 + 1));
    std::string tag = first_pos ? "Prop 5.2" : "Cor 5.3";
    return tag + (even ? "(1)" : "(2)");
  }
  for (int i = c_fn(t); i <= t; ++i)
    b.P(l + lp - 1 - 2 * i, p.rr(i), plus_if_even(m) * plus_if_even(s));
  for (int i = cl; i <= lp - 1; ++i)
    b.P(n + l + lp - 1 - 2 * i, p.rr(i), plus_if_odd(m) * plus_if_even(s));
  for (int i = t + 1; i <= l - 1; ++i) b.Om(expo, l + lp - 1 - 2 * i, p.rr(i));
  if (same == even)
    for (int i = t + 1; i <= l - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), same ? m * s : m1 * (m2 + 1));
  else
    for (int i = lp; i <= n - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), same ? m * s : m1 * (m2 + 1));
  if (first_pos) return std::string("Prop 5.4") + (even ? "(1)" : "(2)");
  // the second part is numbered (3) in the source
  return std::string("Cor 5.5") + (even ? "(1)" : "(2)");
}

// Ω^{M}V(l,r) ⊗ M_s(l',r',η).
std::string str_band(Builder& b, const Pair& p, int M, int s, const ExtScalar& eta) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t(), m = std::abs(M);
  const bool pos = M > 0, odd = m % 2 != 0;
  const int cl = c_fn(l + lp - 1);
  const int ms = m * s, m1s = (m + 1) * s;
  auto up = [&](int a, int z) {
    for (int i = a; i <= z; ++i) b.M(s, n + l + lp - 1 - 2 * i, p.rr(i), eta_up(p, eta, i));
  };
  auto down = [&](int a, int z) {
    for (int i = a; i <= z; ++i) b.M(s, l + lp - 1 - 2 * i, p.rr(i), eta_down(p, eta, i));
  };
  auto lo = [&](int a, int z, int k) {  // P(l+l'−1−2i, r+r'+i)
    for (int i = a; i <= z; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), k);
  };
  auto hi = [&](int a, int z, int k) {  // P(n+l+l'−1−2i, r+r'+i)
    for (int i = a; i <= z; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), k);
  };
  auto back = [&](int k) {  // P(l+l'−1+2i, r+r'−i)
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), k);
  };
  const std::string part = odd ? "(1)" : "(2)";

  if (l <= lp && l + lp <= n) {
    if (pos && odd) {
      up(lp, l + lp - 1), lo(0, l - 1, ms), hi(cl, lp - 1, m1s), back(m1s);
    } else if (pos) {
      down(0, l - 1), hi(lp, l + lp - 1, ms), hi(cl, lp - 1, ms), back(ms);
    } else if (odd) {
      up(lp, l + lp - 1), hi(lp, l + lp - 1, ms), hi(cl, lp - 1, m1s), back(m1s);
    } else {
      down(0, l - 1), lo(0, l - 1, ms), hi(cl, lp - 1, ms), back(ms);
    }
    return (pos ? "Prop 5.6" : "Cor 5.7") + part;
  }
  if (l <= lp) {
    if (pos && odd) {
      up(lp, n - 1), lo(t + 1, l - 1, ms), lo(c_fn(t), t, ms), hi(cl, lp - 1, m1s);
    } else if (pos) {
      down(t + 1, l - 1), hi(lp, n - 1, ms), lo(c_fn(t), t, m1s), hi(cl, lp - 1, ms);
    } else if (odd) {
      up(lp, n - 1), hi(lp, n - 1, ms), lo(c_fn(t), t, ms), hi(cl, lp - 1, m1s);
    } else {
      down(t + 1, l - 1), lo(t + 1, l - 1, ms), lo(c_fn(t), t, m1s), hi(cl, lp - 1, ms);
    }
    return (pos ? "Prop 5.8" : "Cor 5.11") + part;
  }
  if (l + lp <= n) {
    if (pos && odd) {
      up(l, l + lp - 1), lo(0, lp - 1, ms), hi(cl, l - 1, ms), back(m1s);
    } else if (pos) {
      down(0, lp - 1), hi(l, l + lp - 1, ms), hi(cl, l - 1, m1s), back(ms);
    } else if (odd) {
      up(l, l + lp - 1), hi(l, l + lp - 1, ms), hi(cl, l - 1, ms), back(m1s);
    } else {
      down(0, lp - 1), lo(0, lp - 1, ms), hi(cl, l - 1, m1s), back(ms);
    }
    return (pos ? "Prop 5.10" : "Cor 5.9") + part;
  }
  if (pos && odd) {
    up(l, n - 1), lo(t + 1, lp - 1, ms), lo(c_fn(t), t, ms), hi(cl, l - 1, ms);
  } else if (pos) {
    down(t + 1, lp - 1), hi(l, n - 1, ms), lo(c_fn(t), t, m1s), hi(cl, l - 1, m1s);
  } else if (odd) {
    up(l, n - 1), hi(l, n - 1, ms), lo(c_fn(t), t, ms), hi(cl, l - 1, ms);
  } else {
    down(t + 1, lp - 1), lo(t + 1, lp - 1, ms), lo(c_fn(t), t, m1s), hi(cl, l - 1, m1s);
  }
  return (pos ? "Prop 5.12" : "Cor 5.13") + part;
}

// M_m(l,r,α) ⊗ M_s(l',r',η), invariants distinct, l <= l'.
std::string band_band_distinct(Builder& b, const Pair& p, int m, int s) {
  const int l = p.l, lp = p.lp, n = p.n;
  for (int i = 1; i <= c_fn(n - lp + l); ++i) b.P(lp - l - 1 + 2 * i, p.rr(l - i), m * s);
  for (int i = c_fn(l + lp - 1); i <= lp - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), m * s);
  return l == 1 && lp == 1 ? "Lemma 5.15" : "Cor 5.17";
}

// M_m(l,r,α) ⊗ M_s(l',r',η), invariants equal, m >= s.
std::string band_band_equal(Builder& b, const Pair& p, int m, int s, const ExtScalar& eta) {
  const int l = p.l, lp = p.lp, n = p.n, t = p.t();
  const int cl = c_fn(l + lp - 1);
  if (l + lp <= n) {
    for (int i = 0; i <= p.l1() - 1; ++i) b.M(s, l + lp - 1 - 2 * i, p.rr(i), eta_down(p, eta, i));
    for (int i = p.l2(); i <= l + lp - 1; ++i) b.M(s, n + l + lp - 1 - 2 * i, p.rr(i), eta_up(p, eta, i));
    for (int i = 0; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), (m - 1) * s);
    for (int i = 1; i <= c_fn(n - l - lp); ++i) b.P(l + lp - 1 + 2 * i, p.rr(-i), m * s);
    for (int i = cl; i <= p.l2() - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), m * s);
    return l == 1 && lp == 1 ? "Lemma 5.21" : "Cor 5.23";
  }
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.M(s, l + lp - 1 - 2 * i, p.rr(i), eta_down(p, eta, i));
  for (int i = p.l2(); i <= n - 1; ++i) b.M(s, n + l + lp - 1 - 2 * i, p.rr(i), eta_up(p, eta, i));
  for (int i = t + 1; i <= p.l1() - 1; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), (m - 1) * s);
  for (int i = c_fn(t); i <= t; ++i) b.P(l + lp - 1 - 2 * i, p.rr(i), m * s);
  for (int i = cl; i <= p.l2() - 1; ++i) b.P(n + l + lp - 1 - 2 * i, p.rr(i), m * s);
  return "Cor 5.25";
}

ModuleLabel renormalize(int n, const ModuleLabel& L) {
  switch (L.kind) {
    case LabelKind::Simple: return ModuleLabel::simple(n, L.l, L.r);
    case LabelKind::Proj: return ModuleLabel::proj(n, L.l, L.r);
    case LabelKind::Str: return ModuleLabel::str(n, L.m, L.l, L.r);
    case LabelKind::Band: return ModuleLabel::band(n, L.m, L.l, L.r, L.eta);
  }
  throw UnreachableCase("unknown label kind");
}

const char* unit_rule(LabelKind k) {
  switch (k) {
    case LabelKind::Simple: return "Prop 3.1(1)";
    case LabelKind::Proj: return "Cor 3.4";
    case LabelKind::Str: return "Prop 3.6";
    case LabelKind::Band: return "Lemma 3.8";
  }
  return "";
}

}  // namespace

ModuleLabel shift_label(int n, const ModuleLabel& L, int dr) {
  ModuleLabel out = L;
  out.r = ((L.r + dr) % n + n) % n;
  return out;
}

Decomposition shift(int n, const Decomposition& D, int dr) {
  Decomposition out;
  for (const auto& [L, k] : D) out[shift_label(n, L, dr)] += k;
  return out;
}

ModuleLabel dualize_label(int n, const ModuleLabel& L) {
  switch (L.kind) {
    case LabelKind::Simple: return ModuleLabel::simple(n, L.l, 1 - L.l - L.r);
    case LabelKind::Proj: return ModuleLabel::proj(n, L.l, 1 - L.l - L.r);
    case LabelKind::Str: return ModuleLabel::str(n, -L.m, L.l, 1 - L.l - L.r);
    case LabelKind::Band:
      return ModuleLabel::band(n, L.m, n - L.l, 1 - L.r, ext_scale(-pow_q(n, L.l), L.eta));
  }
  throw UnreachableCase("unknown label kind");
}

Decomposition dualize(int n, const Decomposition& D) {
  Decomposition out;
  for (const auto& [L, k] : D) out[dualize_label(n, L)] += k;
  return out;
}

ExtScalar band_invariant(int n, const ModuleLabel& L) {
  if (L.kind != LabelKind::Band) throw std::invalid_argument("band_invariant needs a band label");
  return ext_scale(pow_q(n, 1 - L.l) * q_int(n, L.l), L.eta);
}

ExtScalar band_reduced_parameter(int n, const ModuleLabel& L) {
  if (L.kind != LabelKind::Band) throw std::invalid_argument("band_reduced_parameter needs a band label");
  return ext_scale((pow_q(n, 1 - L.l) * q_int(n, L.l)).inverse(), L.eta);
}

std::pair<Decomposition, RuleTrace> decompose_pair(int n, const ModuleLabel& L1, const ModuleLabel& L2) {
  RuleTrace tr;
  ModuleLabel A = renormalize(n, L1), B = renormalize(n, L2);
  if (A != L1 || B != L2) tr.steps.push_back("alias P(n,r) -> V(n,r)");

  Builder b{n, {}};
  auto unit = [&](const ModuleLabel& U, const ModuleLabel& X) {
    tr.steps.push_back("strip V(1," + std::to_string(U.r) + ")");
    tr.theorem = unit_rule(X.kind);
    tr.params["r"] = U.r;
    b.add(shift_label(n, X, U.r), 1);
    return std::make_pair(b.out, tr);
  };
  if (A.kind == LabelKind::Simple && A.l == 1) return unit(A, B);
  if (B.kind == LabelKind::Simple && B.l == 1) return unit(B, A);

  auto swap_ops = [&](const char* why) {
    std::swap(A, B);
    tr.steps.push_back(std::string("swap (") + why + ")");
  };
  if (static_cast<int>(A.kind) > static_cast<int>(B.kind)) swap_ops("kind order");

  auto pair = [&] { return Pair{n, A.l, B.l, A.r, B.r}; };
  switch (A.kind) {
    case LabelKind::Simple: {
      if (B.kind == LabelKind::Simple && A.l > B.l) swap_ops("l <= l'");
      Pair p = pair();
      record(tr, p);
      switch (B.kind) {
        case LabelKind::Simple: tr.theorem = simple_simple(b, p); break;
        case LabelKind::Proj: tr.theorem = simple_proj(b, p); break;
        case LabelKind::Str:
          tr.params["m"] = B.m;
          tr.theorem = simple_str(b, p, B.m);
          break;
        case LabelKind::Band:
          tr.params["s"] = B.m;
          tr.theorem = simple_band(b, p, B.m, B.eta);
          break;
      }
      break;
    }
    case LabelKind::Proj: {
      if (B.kind == LabelKind::Proj && A.l > B.l) swap_ops("l <= l'");
      Pair p = pair();
      record(tr, p);
      switch (B.kind) {
        case LabelKind::Proj: tr.theorem = proj_proj(b, p); break;
        case LabelKind::Str:
          tr.params["m"] = B.m;
          tr.theorem = proj_str(b, p, B.m);
          break;
        case LabelKind::Band:
          tr.params["s"] = B.m;
          tr.theorem = proj_band(b, p, B.m);
          break;
        default: throw UnreachableCase("projective paired with " + to_string(B));
      }
      break;
    }
    case LabelKind::Str: {
      if (B.kind == LabelKind::Str) {
        if (A.l > B.l) swap_ops("l <= l'");
        Pair p = pair();
        record(tr, p);
        tr.theorem = str_str(b, p, A.m, B.m, tr);
      } else if (B.kind == LabelKind::Band) {
        Pair p = pair();
        record(tr, p);
        tr.params["m"] = A.m;
        tr.params["s"] = B.m;
        tr.theorem = str_band(b, p, A.m, B.m, B.eta);
      } else {
        throw UnreachableCase("string paired with " + to_string(B));
      }
      break;
    }
    case LabelKind::Band: {
      if (B.kind != LabelKind::Band) throw UnreachableCase("band paired with " + to_string(B));
      const bool equal = band_reduced_parameter(n, A) == band_reduced_parameter(n, B);
      if (equal) {
        if (A.m < B.m) swap_ops("m >= s");
      } else if (A.l > B.l) {
        swap_ops("l <= l'");
      }
      Pair p = pair();
      record(tr, p);
      tr.params["m"] = A.m;
      tr.params["s"] = B.m;
      tr.theorem = equal ? band_band_equal(b, p, A.m, B.m, B.eta) : band_band_distinct(b, p, A.m, B.m);
      break;
    }
  }
  if (tr.theorem.empty()) throw UnreachableCase("no rule for " + to_string(L1) + " (x) " + to_string(L2));
  return {b.out, tr};
}

}  // namespace greenring
