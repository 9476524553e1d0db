#include "greenring/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace greenring {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return int(r < 0 ? r + n : r);
}

// Dense accumulator over basis indices that remembers which slots it touched.
class Accum {
 public:
  explicit Accum(int size) : v_(size), mark_(size, 0) {}
  void add(int x, const FieldElem& c) {
    if (c.is_zero()) return;
    if (!mark_[x]) {
      mark_[x] = 1;
      touched_.push_back(x);
    }
    v_[x] += c;
  }
  void add_mul(int x, const FieldElem& a, const FieldElem& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!mark_[x]) {
      mark_[x] = 1;
      touched_.push_back(x);
    }
    v_[x].add_mul(a, b);
  }
  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (int x : touched_) {
      if (!v_[x].is_zero()) out.emplace_back(x, std::move(v_[x]));
      v_[x] = FieldElem();
      mark_[x] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<FieldElem> v_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

SparseVec apply_table(const std::vector<SparseVec>& table, const SparseVec& x, Accum& acc) {
  for (const auto& [u, c] : x)
    for (const auto& [w, t] : table[u]) acc.add_mul(w, c, t);
  return acc.take();
}

SparseVec combine(const std::vector<std::pair<FieldElem, const SparseVec*>>& parts, Accum& acc) {
  for (const auto& [s, v] : parts)
    for (const auto& [u, c] : *v) acc.add_mul(u, s, c);
  return acc.take();
}

AlgebraElem pbw_multiply(const HopfContext& ctx, const AlgebraElem& x, const AlgebraElem& y);

}  // namespace

AlgebraElem AlgebraElem::monomial(int n, Monomial m, FieldElem coef) {
  AlgebraElem x(n);
  x.add_term(m, coef);
  return x;
}

AlgebraElem AlgebraElem::generator(int n, char g) {
  Monomial m{0, 0, 0, 0};
  m[HopfContext::gen_slot(g)] = 1;
  return monomial(n, m);
}

FieldElem AlgebraElem::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem() : it->second;
}

void AlgebraElem::add_term(const Monomial& m, const FieldElem& c) {
  for (int e : m)
    if (e < 0 || e >= n_) throw std::out_of_range("AlgebraElem: exponent out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElem& AlgebraElem::operator+=(const AlgebraElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElem& AlgebraElem::operator-=(const AlgebraElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElem operator*(const FieldElem& s, const AlgebraElem& x) {
  AlgebraElem r(x.n_);
  for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
  return r;
}

std::string AlgebraElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names = "abcd";
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int g = 0; g < 4; ++g)
      if (m[g] > 0) os << "*" << names[g] << (m[g] > 1 ? "^" + std::to_string(m[g]) : "");
  }
  return os.str();
}

int HopfContext::gen_slot(char g) {
  switch (g) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    case 'd': return 3;
    default: throw std::invalid_argument(std::string("unknown generator ") + g);
  }
}

const HopfContext& HopfContext::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HopfContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto* ctx = new HopfContext(n);
  cache.emplace(n, std::unique_ptr<HopfContext>(ctx));
  return *ctx;
}

Monomial HopfContext::unindex(int x) const {
  Monomial m;
  for (int g = 3; g >= 0; --g) {
    m[g] = x % n_;
    x /= n_;
  }
  return m;
}

IdemIndex HopfContext::idem_unindex(int x) const {
  Monomial m = unindex(x);
  return {m[0], m[1], m[2], m[3]};
}

int HopfContext::idem_index(int i, int beta, int gamma, int k) const {
  return index({i, mod(beta, n_), mod(gamma, n_), k});
}

std::pair<int, int> HopfContext::left_weight(int x) const {
  IdemIndex u = idem_unindex(x);
  return {mod(u.beta + u.i, n_), mod(u.gamma + u.i, n_)};
}

std::pair<int, int> HopfContext::right_weight(int x) const {
  IdemIndex u = idem_unindex(x);
  return {mod(u.beta + u.k, n_), mod(u.gamma + u.k, n_)};
}

HopfContext::HopfContext(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("HopfContext: n must be at least 3");
  antipode_.fill(AlgebraElem(n));
  build_tables();

  auto gen = [n](char g) { return AlgebraElem::generator(n, g); };
  AlgebraElem one = AlgebraElem::one(n);
  delta_[0] = {{FieldElem(1), gen('a'), gen('b')}, {FieldElem(1), one, gen('a')}};
  delta_[1] = {{FieldElem(1), gen('b'), gen('b')}};
  delta_[2] = {{FieldElem(1), gen('c'), gen('c')}};
  delta_[3] = {{FieldElem(1), gen('d'), gen('c')}, {FieldElem(1), one, gen('d')}};

  AlgebraElem b_inv = AlgebraElem::monomial(n, {0, n - 1, 0, 0});
  AlgebraElem c_inv = AlgebraElem::monomial(n, {0, 0, n - 1, 0});
  antipode_[0] = FieldElem(-1) * pbw_multiply(*this, gen('a'), b_inv);
  antipode_[1] = b_inv;
  antipode_[2] = c_inv;
  antipode_[3] = FieldElem(-1) * pbw_multiply(*this, gen('d'), c_inv);
}

void HopfContext::build_tables() {
  const int n = n_, N = dim();
  const CycloField& F = CycloField::get(n);
  Accum acc(N);
  for (auto& t : pbw_) t.assign(N, {});
  for (auto& t : idem_) t.assign(N, {});

  // PBW basis a^i b^j c^l d^k.
  for (int x = 0; x < N; ++x) {
    auto [i, j, l, k] = unindex(x);
    if (i + 1 < n) pbw_[0][x] = {{index({i + 1, j, l, k}), FieldElem(1)}};
    pbw_[1][x] = {{index({i, (j + 1) % n, l, k}), F.q_pow(i)}};  // b a^i = q^i a^i b
    pbw_[2][x] = {{index({i, j, (l + 1) % n, k}), F.q_pow(i)}};  // c a^i = q^i a^i c
  }
  // d·(a^i X): for i = 0 push d past b^j c^l; otherwise rewrite da = qad + 1 − bc.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
          int x = index({i, j, l, k});
          if (i == 0) {
            if (k + 1 < n) pbw_[3][x] = {{index({0, j, l, k + 1}), F.q_pow(j + l)}};
            continue;
          }
          int prev = index({i - 1, j, l, k});
          SparseVec ad = apply_table(pbw_[0], pbw_[3][prev], acc);
          SparseVec self = {{prev, FieldElem(1)}};
          SparseVec bc = apply_table(pbw_[1], apply_table(pbw_[2], self, acc), acc);
          pbw_[3][x] = combine({{F.q_pow(1), &ad}, {FieldElem(1), &self}, {FieldElem(-1), &bc}}, acc);
        }

  // Idempotent basis a^i e_{β,γ} d^k, using e a = a e', e d = d e'' and the
  // same inhomogeneous rule for d·a.
  for (int x = 0; x < N; ++x) {
    IdemIndex u = idem_unindex(x);
    if (u.i + 1 < n) idem_[0][x] = {{idem_index(u.i + 1, u.beta, u.gamma, u.k), FieldElem(1)}};
    idem_[1][x] = {{x, F.q_pow(u.i + u.beta)}};
    idem_[2][x] = {{x, F.q_pow(u.i + u.gamma)}};
  }
  for (int i = 0; i < n; ++i)
    for (int be = 0; be < n; ++be)
      for (int ga = 0; ga < n; ++ga)
        for (int k = 0; k < n; ++k) {
          int x = idem_index(i, be, ga, k);
          if (i == 0) {
            if (k + 1 < n) idem_[3][x] = {{idem_index(0, be - 1, ga - 1, k + 1), FieldElem(1)}};
            continue;
          }
          int prev = idem_index(i - 1, be, ga, k);
          SparseVec ad = apply_table(idem_[0], idem_[3][prev], acc);
          SparseVec self = {{prev, FieldElem(1)}};
          SparseVec bc = apply_table(idem_[1], apply_table(idem_[2], self, acc), acc);
          idem_[3][x] = combine({{F.q_pow(1), &ad}, {FieldElem(1), &self}, {FieldElem(-1), &bc}}, acc);
        }
}

SparseVec HopfContext::idem_multiply(const SparseVec& x, const SparseVec& y) const {
  Accum acc(dim()), out(dim());
  std::vector<SparseVec> dpow{y};  // d^k·y
  for (const auto& [u, cu] : x) {
    IdemIndex ui = idem_unindex(u);
    while (int(dpow.size()) <= ui.k) dpow.push_back(apply_table(idem_[3], dpow.back(), acc));
    SparseVec z;
    for (const auto& [w, cw] : dpow[ui.k]) {
      IdemIndex wi = idem_unindex(w);
      if (mod(ui.beta - wi.i, n_) == wi.beta && mod(ui.gamma - wi.i, n_) == wi.gamma) z.emplace_back(w, cw);
    }
    for (int t = 0; t < ui.i && !z.empty(); ++t) z = apply_table(idem_[0], z, acc);
    for (auto& [w, cw] : z) out.add_mul(w, cu, cw);
  }
  return out.take();
}

AlgebraElem HopfContext::idem_to_pbw(const SparseVec& x) const {
  const int n = n_;
  const CycloField& F = CycloField::get(n);
  FieldElem inv_n2 = FieldElem(Rational(1, (long long)n * n));
  AlgebraElem r(n);
  for (const auto& [u, c] : x) {
    IdemIndex ui = idem_unindex(u);
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        r.add_term({ui.i, j, l, ui.k}, c * inv_n2 * F.q_pow(-ui.beta * j - ui.gamma * l));
  }
  return r;
}

SparseVec HopfContext::pbw_to_idem(const AlgebraElem& x) const {
  const int n = n_;
  const CycloField& F = CycloField::get(n);
  Accum acc(dim());
  for (const auto& [m, c] : x.terms())
    for (int be = 0; be < n; ++be)
      for (int ga = 0; ga < n; ++ga) acc.add_mul(idem_index(m[0], be, ga, m[3]), c, F.q_pow(be * m[1] + ga * m[2]));
  return acc.take();
}

namespace {

AlgebraElem pbw_multiply(const HopfContext& ctx, const AlgebraElem& x, const AlgebraElem& y) {
  const int N = ctx.dim();
  Accum acc(N), out(N);
  SparseVec yv;
  for (const auto& [m, c] : y.terms()) yv.emplace_back(ctx.index(m), c);
  std::sort(yv.begin(), yv.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (const auto& [m, c] : x.terms()) {
    SparseVec z = yv;
    // a^i b^j c^l d^k · y: apply d first, a last.
    for (int g = 3; g >= 0; --g)
      for (int t = 0; t < m[g] && !z.empty(); ++t) {
        for (const auto& [u, cu] : z)
          for (const auto& [w, tw] : ctx.pbw_left(g, u)) acc.add_mul(w, cu, tw);
        z = acc.take();
      }
    for (const auto& [w, cw] : z) out.add_mul(w, c, cw);
  }
  AlgebraElem r(x.n());
  for (auto& [w, c] : out.take()) r.add_term(ctx.unindex(w), c);
  return r;
}

}  // namespace

AlgebraElem multiply(const AlgebraElem& x, const AlgebraElem& y) {
  if (x.n() != y.n()) throw std::invalid_argument("multiply: different n");
  return pbw_multiply(HopfContext::get(x.n()), x, y);
}

MatrixF left_mult_matrix(const AlgebraElem& x) {
  const HopfContext& ctx = HopfContext::get(x.n());
  const int N = ctx.dim();
  MatrixF M = MatrixF::Zero(N, N);
  for (int col = 0; col < N; ++col) {
    AlgebraElem y = multiply(x, AlgebraElem::monomial(x.n(), ctx.unindex(col)));
    for (const auto& [m, c] : y.terms()) M(ctx.index(m), col) = c;
  }
  return M;
}

const std::vector<AlgebraElem>& HopfContext::radical() const {
  std::call_once(radical_once_, [this] { compute_radical(); });
  return radical_;
}

const std::vector<SparseVec>& HopfContext::radical_idem() const {
  std::call_once(radical_once_, [this] { compute_radical(); });
  return radical_idem_;
}

const std::vector<AlgebraElem>& radical_basis(const HopfContext& ctx) { return ctx.radical(); }

void HopfContext::compute_radical() const {
  const int n = n_, N = dim();
  // τ(u) = trace of left multiplication by u; only degree-zero (i = k)
  // elements can have nonzero trace.
  std::vector<FieldElem> tau(N);
  for (int u = 0; u < N; ++u) {
    IdemIndex ui = idem_unindex(u);
    if (ui.i != ui.k) continue;
    FieldElem t;
    SparseVec su{{u, FieldElem(1)}};
    for (int v = 0; v < N; ++v) {
      if (left_weight(v) != right_weight(u)) continue;
      SparseVec prod = idem_multiply(su, {{v, FieldElem(1)}});
      for (const auto& [w, c] : prod)
        if (w == v) t += c;
    }
    tau[u] = t;
  }
  auto tau_of = [&](const SparseVec& z) {
    FieldElem t;
    for (const auto& [w, c] : z) t.add_mul(c, tau[w]);
    return t;
  };

  // Group basis elements by (left weight, right weight).
  std::map<std::array<int, 4>, std::vector<int>> classes;
  for (int u = 0; u < N; ++u) {
    auto [l1, l2] = left_weight(u);
    auto [r1, r2] = right_weight(u);
    classes[{l1, l2, r1, r2}].push_back(u);
  }
  for (const auto& [key, members] : classes) {
    auto partner_it = classes.find({key[2], key[3], key[0], key[1]});
    MatrixF G = MatrixF::Zero(Index(members.size()), 0);
    if (partner_it != classes.end()) {
      const auto& partner = partner_it->second;
      G = MatrixF::Zero(Index(members.size()), Index(partner.size()));
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b < partner.size(); ++b)
          G(Index(a), Index(b)) = tau_of(idem_multiply({{members[a], FieldElem(1)}}, {{partner[b], FieldElem(1)}}));
    }
    MatrixF K = G.cols() == 0 ? identity<FieldElem>(Index(members.size()))
                              : kernel_basis<FieldElem>(MatrixF(G.transpose()));
    for (Index c = 0; c < K.cols(); ++c) {
      SparseVec v;
      for (std::size_t a = 0; a < members.size(); ++a)
        if (!K(Index(a), c).is_zero()) v.emplace_back(members[a], K(Index(a), c));
      radical_idem_.push_back(std::move(v));
    }
  }
  (void)n;
  for (const auto& v : radical_idem_) radical_.push_back(idem_to_pbw(v));
}

namespace {

// Row-reduces sparse vectors into a basis (dense rref over the support).
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vs, int N) {
  std::vector<int> support;
  std::vector<int> where(N, -1);
  for (const auto& v : vs)
    for (const auto& [w, c] : v)
      if (where[w] < 0) {
        where[w] = int(support.size());
        support.push_back(w);
      }
  if (support.empty()) return {};
  MatrixF M = MatrixF::Zero(Index(vs.size()), Index(support.size()));
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& [w, c] : vs[r]) M(Index(r), where[w]) = c;
  Rref<FieldElem> e = rref<FieldElem>(M);
  std::vector<SparseVec> out;
  for (Index r = 0; r < e.rank; ++r) {
    SparseVec v;
    for (Index c = 0; c < e.R.cols(); ++c)
      if (!e.R(r, c).is_zero()) v.emplace_back(support[c], e.R(r, c));
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RadicalReport check_radical(const HopfContext& ctx) {
  const int n = ctx.n();
  RadicalReport rep;
  rep.dim_algebra = ctx.dim();
  const auto& J = ctx.radical_idem();
  rep.dim_radical = int(J.size());
  for (int l = 1; l <= n; ++l) rep.expected_quotient_dim += n * l * l;

  auto lw = [&](const SparseVec& v) { return ctx.left_weight(v.front().first); };
  auto rw = [&](const SparseVec& v) { return ctx.right_weight(v.front().first); };

  // J² grouped by (left weight of x, right weight of y); products with
  // mismatched middle weights vanish identically.
  std::map<std::array<int, 4>, std::vector<SparseVec>> prods;
  for (const auto& x : J)
    for (const auto& y : J) {
      if (rw(x) != lw(y)) continue;
      SparseVec p = ctx.idem_multiply(x, y);
      if (p.empty()) continue;
      auto [a, b] = lw(x);
      auto [c, d] = rw(y);
      prods[{a, b, c, d}].push_back(std::move(p));
    }
  std::vector<SparseVec> J2;
  for (auto& [key, vs] : prods)
    for (auto& v : span_basis(vs, ctx.dim())) J2.push_back(std::move(v));
  rep.dim_radical_sq = int(J2.size());

  rep.cube_vanishes = true;
  for (const auto& y : J2) {
    for (const auto& z : J)
      if (!ctx.idem_multiply(y, z).empty()) {
        rep.cube_vanishes = false;
        break;
      }
    if (!rep.cube_vanishes) break;
  }
  return rep;
}

}  // namespace greenring
