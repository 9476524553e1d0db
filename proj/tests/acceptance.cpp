// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "greenring/algebra.hpp"
#include "greenring/cli.hpp"

using namespace greenring;

namespace {

// Collects failure notes; the first few are printed under the verdict.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

int run(int number, const std::string& title, const std::function<void(Check&, std::ostream&)>& body) {
  Check c;
  std::ostringstream detail;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c, detail);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "criterion " << number << ": " << (c.failures ? "FAIL" : "PASS") << "  " << title << "  "
            << detail.str() << "(" << std::fixed << std::setprecision(1) << secs << "s)\n";
  for (const auto& s : c.notes) std::cout << "    " << s << "\n";
  std::cout.flush();
  return c.failures ? 1 : 0;
}

AlgebraElem power(const AlgebraElem& x, int k) {
  AlgebraElem r = AlgebraElem::one(x.n());
  for (int i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

SimpleMultiset times(int k, int l, int r, int n) { return {{{l, ((r % n) + n) % n}, k}}; }

std::vector<ExtScalar> default_etas() { return {ExtScalar(FieldElem(0)), ExtScalar(FieldElem(1)), ExtScalar::infinity()}; }

int jobs() { return std::max(1, int(std::thread::hardware_concurrency())); }

Decomposition oracle_of(int n, const Representation& M, const std::vector<ExtScalar>& etas, unsigned seed) {
  return decompose_oracle(M, candidate_pool(n, int(M.dim()), eta_closure(n, etas)), seed);
}

std::vector<ExtScalar> etas_of(std::initializer_list<const ModuleLabel*> labels) {
  std::vector<ExtScalar> out;
  for (const auto* L : labels)
    if (L->kind == LabelKind::Band) out.push_back(L->eta);
  return out;
}

nlohmann::json untimed(const PairRecord& r) {
  nlohmann::json j = to_json(r);
  j.erase("seconds");
  return j;
}

}  // namespace

int main() {
  int failed = 0;
  std::vector<std::vector<PairRecord>> n3_reports;

  failed += run(1, "algebra n=3,4,5", [](Check& c, std::ostream& d) {
    for (int n : {3, 4, 5}) {
      const HopfContext& ctx = HopfContext::get(n);
      FieldElem q = FieldElem::q(n);
      auto g = [n](char x) { return AlgebraElem::generator(n, x); };
      auto a = g('a'), b = g('b'), cc = g('c'), dd = g('d');
      auto one = AlgebraElem::one(n);
      bool rel = multiply(b, a) == q * multiply(a, b) && multiply(dd, b) == q * multiply(b, dd) &&
                 multiply(cc, a) == q * multiply(a, cc) && multiply(dd, cc) == q * multiply(cc, dd) &&
                 multiply(b, cc) == multiply(cc, b) && power(a, n).is_zero() && power(b, n) == one &&
                 power(cc, n) == one && power(dd, n).is_zero() &&
                 multiply(dd, a) - q * multiply(a, dd) == one - multiply(b, cc);
      c.expect(rel, "relations fail at n=" + std::to_string(n));
      RadicalReport r = check_radical(ctx);
      int expected = 0;
      for (int l = 1; l <= n; ++l) expected += n * l * l;
      c.expect(ctx.dim() == n * n * n * n && r.dim_algebra == n * n * n * n, "dim H wrong at n=" + std::to_string(n));
      c.expect(r.cube_vanishes, "J^3 != 0 at n=" + std::to_string(n));
      c.expect(r.dim_algebra - r.dim_radical == expected,
               "dim H/J = " + std::to_string(r.dim_algebra - r.dim_radical) + " at n=" + std::to_string(n));
      d << "n=" << n << " dim J=" << r.dim_radical << " ";
    }
  });

  failed += run(2, "constructors n=3,4", [](Check& c, std::ostream& d) {
    int count = 0;
    for (int n : {3, 4}) {
      for (const ModuleLabel& L : sweep_family(n, 2, 2, default_etas())) {
        const Representation& M = construct(n, L);
        c.expect(satisfies_relations(M), to_string(L) + " violates the relations");
        IndecomposableCertificate cert = is_indecomposable(M);
        c.expect(cert.indecomposable && cert.semisimple_dim == 1, to_string(L) + " is not absolutely indecomposable");
        ++count;
        const int l = L.l, r = L.r;
        if (L.kind == LabelKind::Proj) {
          c.expect(socle_labels(M) == times(1, l, r, n), "soc " + to_string(L));
          c.expect(top(M) == times(1, l, r, n), "top " + to_string(L));
          c.expect(top(submodule(M, radical(M))) == times(2, n - l, r + l, n), "rad/rad^2 " + to_string(L));
        } else if (L.kind == LabelKind::Str) {
          const int s = std::abs(L.m);
          const bool odd = s % 2 == 1;
          SimpleMultiset same = times(s, l, r, n), other = times(s, n - l, r + l, n);
          SimpleMultiset big_same = times(s + 1, l, r, n), big_other = times(s + 1, n - l, r + l, n);
          if (L.m > 0) {
            c.expect(socle_labels(M) == (odd ? same : other), "soc " + to_string(L));
            c.expect(top(M) == (odd ? big_other : big_same), "top " + to_string(L));
          } else {
            c.expect(socle_labels(M) == (odd ? big_other : big_same), "soc " + to_string(L));
            c.expect(top(M) == (odd ? same : other), "top " + to_string(L));
          }
        } else if (L.kind == LabelKind::Band) {
          ExtScalar eta = L.eta.is_infinity() ? L.eta : ExtScalar(-L.eta.value() * pow_q(n, l));
          c.expect(is_isomorphic(syzygy(M), construct(n, ModuleLabel::band(n, L.s(), n - l, r + l, eta))),
                   "syzygy of " + to_string(L));
        }
      }
    }
    d << count << " labels ";
  });

  failed += run(3, "duality n=3", [](Check& c, std::ostream& d) {
    const int n = 3;
    auto F = sweep_family(n, 2, 2, default_etas());
    for (const auto& L : F) {
      c.expect(dualize_label(n, dualize_label(n, L)) == L, "dualize_label not an involution on " + to_string(L));
      c.expect(is_isomorphic(dual(construct(n, L)), construct(n, dualize_label(n, L))),
               "dual of " + to_string(L) + " is not " + to_string(dualize_label(n, L)));
    }
    std::mt19937 rng(20240);
    std::uniform_int_distribution<std::size_t> pick(0, F.size() - 1);
    for (int t = 0; t < 20; ++t) {
      const ModuleLabel& a = F[pick(rng)];
      const ModuleLabel& b = F[pick(rng)];
      const ModuleLabel da = dualize_label(n, a), db = dualize_label(n, b);
      auto etas = etas_of({&a, &b, &da, &db});
      Decomposition lhs = oracle_of(n, dual(tensor(construct(n, a), construct(n, b))), etas, unsigned(t + 1));
      Decomposition rhs = oracle_of(n, tensor(dual(construct(n, b)), dual(construct(n, a))), etas, unsigned(t + 101));
      c.expect(lhs == rhs, "(M(x)N)* vs N*(x)M* for " + to_string(a) + ", " + to_string(b));
      c.expect(lhs == dualize(n, decompose_pair(n, a, b).first), "dualized rules for " + to_string(a) + ", " + to_string(b));
    }
    d << F.size() << " labels, 20 pairs ";
  });

  failed += run(4, "n=3 sweep, seeds 1,2,3", [&](Check& c, std::ostream& d) {
    std::size_t pairs = 0;
    for (unsigned seed : {1u, 2u, 3u}) {
      SweepOptions o;
      o.n = 3;
      o.seed = seed;
      o.jobs = jobs();
      auto recs = run_sweep(o);
      pairs = recs.size();
      for (const auto& r : recs)
        c.expect(r.status == "agree", "seed " + std::to_string(seed) + ": " + r.a + " (x) " + r.b + " " + r.status +
                                          " rules " + r.rules + " oracle " + r.oracle + " " + r.error);
      n3_reports.push_back(std::move(recs));
    }
    c.expect(pairs == 2850, "expected 2850 pairs, got " + std::to_string(pairs));
    d << pairs << " pairs x 3 seeds ";
  });

  failed += run(5, "n=4 sweep", [](Check& c, std::ostream& d) {
    SweepOptions o;
    o.n = 4;
    o.max_m = 1;
    o.max_s = 1;
    o.etas = "1,inf";
    o.jobs = jobs();
    auto recs = run_sweep(o);
    for (const auto& r : recs)
      c.expect(r.status == "agree", r.a + " (x) " + r.b + " " + r.status + " rules " + r.rules + " oracle " + r.oracle);
    d << recs.size() << " pairs ";
  });

  failed += run(6, "spot instances", [](Check& c, std::ostream& d) {
    const int n = 3;
    auto both = [&](const ModuleLabel& a, const ModuleLabel& b, const Decomposition& want) {
      std::string what = to_string(a) + " (x) " + to_string(b);
      Decomposition R = decompose_pair(n, a, b).first;
      Decomposition O = oracle_of(n, tensor(construct(n, a), construct(n, b)), etas_of({&a, &b}), 7);
      c.expect(R == want, what + ": rules give " + to_string(R));
      c.expect(O == want, what + ": oracle gives " + to_string(O));
    };
    auto V = [](int l, int r) { return ModuleLabel::simple(n, l, r); };
    auto P = [](int l, int r) { return ModuleLabel::proj(n, l, r); };
    both(V(2, 0), V(3, 0), {{P(2, 1), 1}});
    both(V(2, 0), P(2, 0), {{V(3, 0), 2}, {P(1, 1), 1}});
    both(ModuleLabel::band(n, 1, 1, 0, ExtScalar(FieldElem(0))), ModuleLabel::band(n, 1, 1, 0, ExtScalar(FieldElem(1))),
         {{P(1, 0), 1}, {V(3, 2), 1}});
    int twists = 0;
    for (const auto& X : sweep_family(n, 2, 2, default_etas()))
      for (int r = 0; r < n; ++r, ++twists) both(V(1, r), X, {{shift_label(n, X, r), 1}});
    d << 3 + twists << " instances ";
  });

  failed += run(7, "projectivity closure", [&](Check& c, std::ostream& d) {
    const int n = 3;
    auto F = sweep_family(n, 2, 2, default_etas());
    int with_projective = 0;
    std::set<ModuleLabel> outputs;
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t j = i; j < F.size(); ++j) {
        Decomposition R = decompose_pair(n, F[i], F[j]).first;
        for (const auto& [L, k] : R) outputs.insert(L);
        if (!F[i].is_projective(n) && !F[j].is_projective(n)) continue;
        ++with_projective;
        for (const auto& [L, k] : R)
          c.expect(L.is_projective(n), to_string(F[i]) + " (x) " + to_string(F[j]) + " has " + to_string(L));
      }
    for (const auto& recs : n3_reports)
      for (const auto& r : recs)
        if (r.projective_input) c.expect(r.projective_output, "oracle: " + r.a + " (x) " + r.b + " -> " + r.oracle);
    c.expect(!n3_reports.empty(), "no sweep reports to check");
    // Every label the rules produce is absolutely indecomposable.
    for (const auto& L : outputs) {
      IndecomposableCertificate cert = is_indecomposable(construct(n, L));
      c.expect(cert.indecomposable && cert.semisimple_dim == 1, to_string(L) + " is not absolutely indecomposable");
    }
    d << with_projective << " pairs, " << outputs.size() << " output labels certified ";
  });

  failed += run(8, "determinism across seeds", [&](Check& c, std::ostream& d) {
    c.expect(n3_reports.size() >= 2, "sweep reports missing");
    if (n3_reports.size() < 2) return;
    const auto& x = n3_reports[0];
    const auto& y = n3_reports[1];
    c.expect(x.size() == y.size(), "report lengths differ");
    std::size_t same = 0;
    for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
      bool eq = untimed(x[k]).dump() == untimed(y[k]).dump();
      same += eq;
      c.expect(eq, "line " + std::to_string(k) + " differs: " + x[k].a + " (x) " + x[k].b);
    }
    d << same << " identical lines ";
  });

  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all passed"))
            << "\n";
  return failed ? 1 : 0;
}
