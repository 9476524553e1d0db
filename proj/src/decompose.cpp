#include "greenring/decompose.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace greenring {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return int(r < 0 ? r + n : r);
}

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int kind_rank(LabelKind k) { return static_cast<int>(k); }

}  // namespace

ModuleLabel ModuleLabel::simple(int n, int l, int r) {
  require(1 <= l && l <= n, "V(l,r) needs 1 <= l <= n");
  ModuleLabel L;
  L.kind = LabelKind::Simple;
  L.l = l;
  L.r = mod(r, n);
  return L;
}

ModuleLabel ModuleLabel::proj(int n, int l, int r) {
  require(1 <= l && l <= n, "P(l,r) needs 1 <= l <= n");
  if (l == n) return simple(n, l, r);
  ModuleLabel L = simple(n, l, r);
  L.kind = LabelKind::Proj;
  return L;
}

ModuleLabel ModuleLabel::str(int n, int m, int l, int r) {
  require(1 <= l && l < n, "Om(m)V(l,r) needs 1 <= l < n");
  if (m == 0) return simple(n, l, r);
  ModuleLabel L = simple(n, l, r);
  L.kind = LabelKind::Str;
  L.m = m;
  return L;
}

ModuleLabel ModuleLabel::band(int n, int s, int l, int r, const ExtScalar& eta) {
  require(1 <= l && l < n, "M(s,l,r;eta) needs 1 <= l < n");
  require(s >= 1, "M(s,l,r;eta) needs s >= 1");
  ModuleLabel L = simple(n, l, r);
  L.kind = LabelKind::Band;
  L.m = s;
  L.eta = eta;
  return L;
}

bool operator==(const ModuleLabel& x, const ModuleLabel& y) {
  return x.kind == y.kind && x.l == y.l && x.r == y.r && x.m == y.m && x.eta == y.eta;
}

bool operator<(const ModuleLabel& x, const ModuleLabel& y) {
  if (x.kind != y.kind) return kind_rank(x.kind) < kind_rank(y.kind);
  if (x.l != y.l) return x.l < y.l;
  if (x.r != y.r) return x.r < y.r;
  if (x.m != y.m) return x.m < y.m;
  if (x.kind != LabelKind::Band || x.eta == y.eta) return false;
  return x.eta.to_string() < y.eta.to_string();
}

std::string to_string(const ModuleLabel& L) {
  std::ostringstream os;
  switch (L.kind) {
    case LabelKind::Simple: os << "V(" << L.l << "," << L.r << ")"; break;
    case LabelKind::Proj: os << "P(" << L.l << "," << L.r << ")"; break;
    case LabelKind::Str: os << "Om(" << L.m << ")V(" << L.l << "," << L.r << ")"; break;
    case LabelKind::Band:
      os << "M(" << L.m << "," << L.l << "," << L.r << ";" << compact(L.eta.to_string()) << ")";
      break;
  }
  return os.str();
}

int label_dim(int n, const ModuleLabel& L) {
  switch (L.kind) {
    case LabelKind::Simple: return L.l;
    case LabelKind::Proj: return 2 * n;
    case LabelKind::Str: {
      int am = std::abs(L.m);
      return am * n + (am % 2 == 0 ? L.l : n - L.l);
    }
    case LabelKind::Band: return L.m * n;
  }
  return 0;
}

int block_of(int n, const ModuleLabel& L) { return mod(2 * L.r + L.l - 1, n); }

const Representation& construct(int n, const ModuleLabel& L) {
  using Key = std::pair<int, std::string>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<Representation>> cache;
  Key key{n, to_string(L)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  Representation M;
  switch (L.kind) {
    case LabelKind::Simple: M = simple(n, L.l, L.r); break;
    case LabelKind::Proj: M = projective(n, L.l, L.r); break;
    case LabelKind::Band: M = band(n, L.m, L.l, L.r, L.eta); break;
    case LabelKind::Str: {
      int step = L.m > 0 ? 1 : -1;
      const Representation& prev = construct(n, ModuleLabel::str(n, L.m - step, L.l, L.r));
      M = step > 0 ? syzygy(prev) : cosyzygy(prev);
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(key, std::make_unique<Representation>(std::move(M)));
  return *it->second;
}

int total_dim(int n, const Decomposition& D) {
  int total = 0;
  for (const auto& [L, k] : D) total += k * label_dim(n, L);
  return total;
}

std::string to_string(const Decomposition& D) {
  std::string out;
  for (const auto& [L, k] : D) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += to_string(L);
  }
  return out.empty() ? "0" : out;
}

namespace {

FieldElem trace_of_product(const MatrixF& X, const MatrixF& Y) {
  FieldElem t(0);
  for (Index a = 0; a < X.rows(); ++a)
    for (Index b = 0; b < X.cols(); ++b)
      if (!X(a, b).is_zero() && !Y(b, a).is_zero()) t.add_mul(X(a, b), Y(b, a));
  return t;
}

// Gram matrix of the trace form on End(M); its rank is dim End/rad End.
MatrixF trace_gram(const std::vector<MatrixF>& E) {
  const Index k = Index(E.size());
  MatrixF G(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) G(i, j) = G(j, i) = trace_of_product(E[i], E[j]);
  return G;
}

Representation principal(const Representation& W, const std::vector<Index>& idx) {
  const Index k = Index(idx.size());
  Representation S{W.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) {
    MatrixF X(k, k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) X(a, b) = W.gen(g)(idx[a], idx[b]);
    S.gen(g) = std::move(X);
  }
  return S;
}

using WeightDims = std::map<Weight, int>;

WeightDims weight_dims(const Representation& W) {
  WeightDims wd;
  for (const Weight& w : basis_weights(W)) ++wd[w];
  return wd;
}

bool fits(const WeightDims& small, const WeightDims& big) {
  for (const auto& [w, k] : small) {
    auto it = big.find(w);
    if (it == big.end() || it->second < k) return false;
  }
  return true;
}

// Radical layers cut by weight: pairs (hi, lo) of weight-vector bases with
// lo ⊂ hi, both invariant under End(N).
std::vector<std::pair<MatrixF, MatrixF>> invariant_layers(const Representation& N) {
  const Index d = N.dim();
  std::vector<Weight> w = basis_weights(N);
  std::vector<MatrixF> series{identity<FieldElem>(d)};
  Representation cur = N;
  MatrixF embed = identity<FieldElem>(d);
  while (cur.dim() > 0) {
    MatrixF R = radical(cur);
    embed = mul<FieldElem>(embed, R);
    series.push_back(embed);
    cur = submodule(cur, R);
  }
  auto restrict_to = [&](const MatrixF& U, const Weight& t) {
    std::vector<Index> cols;
    for (Index c = 0; c < U.cols(); ++c)
      for (Index i = 0; i < d; ++i)
        if (!U(i, c).is_zero()) {
          if (w[i] == t) cols.push_back(c);
          break;
        }
    MatrixF S(d, Index(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) S.col(Index(k)) = U.col(cols[k]);
    return S;
  };
  std::set<Weight> ws(w.begin(), w.end());
  std::vector<std::pair<MatrixF, MatrixF>> out;
  for (std::size_t k = 0; k + 1 < series.size(); ++k)
    for (const Weight& t : ws) {
      MatrixF hi = restrict_to(series[k], t), lo = restrict_to(series[k + 1], t);
      if (hi.cols() > lo.cols()) out.emplace_back(std::move(hi), std::move(lo));
    }
  return out;
}

// Matrix of φ on the subquotient hi/lo, in the basis of hi-columns completing lo.
MatrixF induced(const MatrixF& phi, const MatrixF& hi, const MatrixF& lo) {
  // basis of hi: lo followed by complementary columns of hi
  MatrixF stack(hi.rows(), lo.cols() + hi.cols());
  stack << lo, hi;
  Rref<FieldElem> e = rref<FieldElem>(stack);
  std::vector<Index> comp;
  for (Index p : e.pivots)
    if (p >= lo.cols()) comp.push_back(p - lo.cols());
  const Index k = Index(comp.size());
  MatrixF basis(hi.rows(), lo.cols() + k);
  basis.leftCols(lo.cols()) = lo;
  for (Index c = 0; c < k; ++c) basis.col(lo.cols() + c) = hi.col(comp[c]);
  MatrixF out(k, k);
  for (Index c = 0; c < k; ++c) {
    VectorF img = mul<FieldElem>(phi, VectorF(basis.col(lo.cols() + c)));
    auto x = solve<FieldElem>(basis, img);
    if (!x) throw std::logic_error("induced: layer is not invariant");
    for (Index r = 0; r < k; ++r) out(r, c) = (*x)(lo.cols() + r);
  }
  return out;
}

bool nontrivial_fitting(const MatrixF& phi, MatrixF* ker, MatrixF* im) {
  auto [K, I] = fitting_split<FieldElem>(phi);
  if (K.cols() == 0 || I.cols() == 0) return false;
  *ker = std::move(K);
  *im = std::move(I);
  return true;
}

MatrixF combo(const std::vector<MatrixF>& E, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  MatrixF X = MatrixF::Zero(E[0].rows(), E[0].cols());
  for (const MatrixF& e : E) {
    int k = c(rng);
    if (k == 0) continue;
    for (Index j = 0; j < X.cols(); ++j)
      for (Index i = 0; i < X.rows(); ++i)
        if (!e(i, j).is_zero()) X(i, j).add_mul(FieldElem(k), e(i, j));
  }
  return X;
}

// Squarefree factors a_1, a_2, ... of p with p = Π a_i^i (Yun).
std::vector<PolyF> yun(const PolyF& p) {
  std::vector<PolyF> out;
  PolyF f = p.monic(), d = f.derivative();
  PolyF a = gcd(f, d);
  PolyF b = f / a, c = d / a;
  for (;;) {
    PolyF e = c - b.derivative();
    if (e.is_zero()) {
      out.push_back(b);
      break;
    }
    PolyF g = gcd(b, e);
    out.push_back(g);
    b = b / g;
    c = e / g;
    if (b.degree() <= 0) break;
  }
  return out;
}

// An endomorphism of N whose Fitting decomposition is nontrivial.
bool find_splitting(const Representation& N, const std::vector<MatrixF>& E, std::mt19937& rng, MatrixF* ker,
                    MatrixF* im) {
  for (const MatrixF& e : E)
    if (nontrivial_fitting(e, ker, im)) return true;

  const Index d = N.dim();
  auto layers = invariant_layers(N);
  const int budget = 32;
  for (int draw = 0; draw < budget; ++draw) {
    MatrixF phi = combo(E, rng);
    // eigenvalues on one-dimensional layers
    for (const auto& [hi, lo] : layers) {
      if (hi.cols() - lo.cols() != 1) continue;
      FieldElem lambda = induced(phi, hi, lo)(0, 0);
      MatrixF psi = phi - lambda * identity<FieldElem>(d);
      if (nontrivial_fitting(psi, ker, im)) return true;
    }
    // coprime factors of the minimal polynomial
    std::vector<PolyF> parts = yun(min_poly(phi));
    for (const PolyF& a : parts)
      if (a.degree() >= 1 && a.degree() < squarefree_part(min_poly(phi)).degree())
        if (nontrivial_fitting(eval_matrix(a, phi), ker, im)) return true;
  }
  // singular, non-nilpotent products on higher-dimensional layers
  for (const auto& [hi, lo] : layers) {
    if (hi.cols() - lo.cols() < 2) continue;
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < E.size(); ++j) {
        MatrixF p = mul<FieldElem>(E[i], E[j]);
        if (nontrivial_fitting(p, ker, im)) return true;
      }
  }
  return false;
}

void split_rec(const Representation& N, const MatrixF& basis, std::mt19937& rng, std::vector<Summand>& out) {
  std::vector<MatrixF> E = hom_space(N, N);
  if (E.size() <= 1 || rank<FieldElem>(trace_gram(E)) <= 1) {
    out.push_back({N, basis});
    return;
  }
  MatrixF K, I;
  if (!find_splitting(N, E, rng, &K, &I)) throw std::logic_error("split: no splitting endomorphism found");
  split_rec(submodule(N, K), mul<FieldElem>(basis, K), rng, out);
  split_rec(submodule(N, I), mul<FieldElem>(basis, I), rng, out);
}

}  // namespace

IndecomposableCertificate is_indecomposable(const Representation& M) {
  IndecomposableCertificate c;
  if (M.dim() == 0) return c;
  std::vector<MatrixF> E = hom_space(M, M);
  c.end_dim = int(E.size());
  c.semisimple_dim = int(rank<FieldElem>(trace_gram(E)));
  c.indecomposable = c.semisimple_dim == 1;
  return c;
}

std::map<int, Summand> central_blocks(const Representation& M) {
  auto [W, P] = to_weight_basis(M);
  std::vector<Weight> w = basis_weights(W);
  std::map<int, std::vector<Index>> cls;
  for (Index i = 0; i < W.dim(); ++i) cls[mod(w[i].beta - w[i].gamma, M.n)].push_back(i);
  std::map<int, Summand> out;
  for (const auto& [c, idx] : cls) {
    MatrixF B(M.dim(), Index(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) B.col(Index(k)) = P.col(idx[k]);
    out.emplace(c, Summand{principal(W, idx), std::move(B)});
  }
  return out;
}

std::vector<Summand> split_with_basis(const Representation& M, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Summand> out;
  for (auto& [c, blk] : central_blocks(M)) split_rec(blk.module, blk.basis, rng, out);
  return out;
}

std::vector<Representation> split(const Representation& M, unsigned seed) {
  std::vector<Representation> out;
  for (auto& s : split_with_basis(M, seed)) out.push_back(std::move(s.module));
  return out;
}

int multiplicity(const Representation& X, const Representation& N) {
  std::vector<MatrixF> F = hom_space(X, N);
  if (F.empty()) return 0;
  std::vector<MatrixF> G = hom_space(N, X);
  if (G.empty()) return 0;
  MatrixF L(Index(F.size()), Index(G.size()));
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) L(Index(i), Index(j)) = trace_of_product(G[j], F[i]);
  return int(rank<FieldElem>(L));
}

ModuleLabel identify(int n, const Representation& N, const std::vector<ModuleLabel>& candidates) {
  Representation W = to_weight_basis(N).first;
  WeightDims wd = weight_dims(W);
  for (const ModuleLabel& C : candidates) {
    if (label_dim(n, C) != N.dim()) continue;
    const Representation& X = construct(n, C);
    if (weight_dims(X) != wd) continue;
    if (find_isomorphism(X, W)) return C;
  }
  throw NoMatch("identify: no candidate is isomorphic to the given module of dimension " +
                std::to_string(N.dim()));
}

std::vector<ExtScalar> eta_closure(int n, const std::vector<ExtScalar>& inputs) {
  std::vector<ExtScalar> out{ExtScalar(FieldElem(0)), ExtScalar::infinity()};
  std::set<std::string> seen{"0", "inf"};
  auto add = [&](const ExtScalar& e) {
    if (seen.insert(e.to_string()).second) out.push_back(e);
  };
  for (const ExtScalar& eta : inputs) {
    if (eta.is_infinity() || eta.value().is_zero()) continue;
    for (int sign : {1, -1})
      for (int e = 0; e < n; ++e)
        for (int i = 1; i < n; ++i)
          for (int j = 1; j < n; ++j)
            add(ExtScalar(FieldElem(sign) * pow_q(n, e) * q_int(n, i) / q_int(n, j) * eta.value()));
  }
  return out;
}

std::vector<ModuleLabel> candidate_pool(int n, int max_dim, const std::vector<ExtScalar>& etas) {
  std::vector<ModuleLabel> out;
  for (int l = 1; l <= n && l <= max_dim; ++l)
    for (int r = 0; r < n; ++r) out.push_back(ModuleLabel::simple(n, l, r));
  if (2 * n <= max_dim)
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r) out.push_back(ModuleLabel::proj(n, l, r));
  for (int am = 1; am * n < max_dim; ++am)
    for (int sign : {1, -1})
      for (int l = 1; l < n; ++l)
        for (int r = 0; r < n; ++r) {
          ModuleLabel L = ModuleLabel::str(n, sign * am, l, r);
          if (label_dim(n, L) <= max_dim) out.push_back(L);
        }
  for (int s = 1; s * n <= max_dim; ++s)
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r)
        for (const ExtScalar& eta : etas) out.push_back(ModuleLabel::band(n, s, l, r, eta));
  return out;
}

namespace {

// Seeded change of basis inside each weight space: a permutation followed by
// one transvection. Denser changes of basis make the exact Hom solves blow up
// in coefficient size (a thousandfold slowdown on 36-dimensional products).
Representation scramble(const Representation& W, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(1, 2);
  const Index d = W.dim();
  std::vector<Weight> w = basis_weights(W);
  MatrixF G = identity<FieldElem>(d), Ginv = identity<FieldElem>(d);
  std::map<Weight, std::vector<Index>> groups;
  for (Index i = 0; i < d; ++i) groups[w[i]].push_back(i);
  for (const auto& [t, idx] : groups) {
    const Index k = Index(idx.size());
    std::vector<Index> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), Index(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    MatrixF L = MatrixF::Zero(k, k), U = identity<FieldElem>(k);
    for (Index a = 0; a < k; ++a) L(perm[std::size_t(a)], a) = FieldElem(1);
    if (k > 1) {
      Index a = Index(rng() % std::size_t(k));
      Index b = (a + 1 + Index(rng() % std::size_t(k - 1))) % k;
      U(a, b) = FieldElem(rng() % 2 ? c(rng) : -c(rng));
    }
    MatrixF g = mul<FieldElem>(L, U);
    MatrixF gi = *inverse_matrix<FieldElem>(g);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) {
        G(idx[a], idx[b]) = g(a, b);
        Ginv(idx[a], idx[b]) = gi(a, b);
      }
  }
  Representation out{W.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) out.gen(g) = mul<FieldElem>(Ginv, mul<FieldElem>(W.gen(g), G));
  return out;
}

bool pool_order(int n, const ModuleLabel& x, const ModuleLabel& y) {
  bool px = x.is_projective(n), py = y.is_projective(n);
  if (px != py) return px;
  int dx = label_dim(n, x), dy = label_dim(n, y);
  if (dx != dy) return dx > dy;
  return x < y;
}

}  // namespace

Decomposition decompose_oracle(const Representation& M, const std::vector<ModuleLabel>& pool, unsigned seed) {
  const int n = M.n;
  Decomposition out;
  if (M.dim() == 0) return out;
  std::vector<ModuleLabel> order = pool;
  std::sort(order.begin(), order.end(), [n](const auto& x, const auto& y) { return pool_order(n, x, y); });
  Representation W = scramble(to_weight_basis(M).first, seed);
  for (const auto& [cls, blk] : central_blocks(W)) {
    WeightDims rem = weight_dims(blk.module);
    int rem_dim = int(blk.module.dim());
    for (const ModuleLabel& L : order) {
      if (rem_dim == 0) break;
      if (block_of(n, L) != cls || label_dim(n, L) > rem_dim) continue;
      const Representation& X = construct(n, L);
      WeightDims wx = weight_dims(X);
      if (!fits(wx, rem)) continue;
      int k = multiplicity(X, blk.module);
      if (k == 0) continue;
      out[L] += k;
      rem_dim -= k * int(X.dim());
      for (const auto& [w, c] : wx) rem[w] -= k * c;
    }
    if (rem_dim != 0)
      throw NoMatch("decompose_oracle: " + std::to_string(rem_dim) + " dimensions of block " + std::to_string(cls) +
                    " match no candidate");
  }
  return out;
}

}  // namespace greenring
