#include "greenring/repmod.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

namespace greenring {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return int(r < 0 ? r + n : r);
}

MatrixF zeros(Index d) { return MatrixF::Zero(d, d); }

// Kronecker product with the second factor's index running fastest.
MatrixF kron(const MatrixF& X, const MatrixF& Y) {
  const Index dy = Y.rows();
  MatrixF K = MatrixF::Zero(X.rows() * dy, X.cols() * Y.cols());
  std::vector<std::pair<Index, Index>> ynz;
  for (Index j = 0; j < Y.cols(); ++j)
    for (Index i = 0; i < dy; ++i)
      if (!Y(i, j).is_zero()) ynz.emplace_back(i, j);
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i = 0; i < X.rows(); ++i) {
      if (X(i, j).is_zero()) continue;
      for (auto [a, b] : ynz) K(i * dy + a, j * Y.cols() + b) = X(i, j) * Y(a, b);
    }
  return K;
}

MatrixF mat_pow(const MatrixF& X, int e) {
  MatrixF R = identity<FieldElem>(X.rows());
  for (int i = 0; i < e; ++i) R = mul<FieldElem>(R, X);
  return R;
}

MatrixF scaled(MatrixF X, const FieldElem& s) {
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i = 0; i < X.rows(); ++i)
      if (!X(i, j).is_zero()) X(i, j) *= s;
  return X;
}

MatrixF hcat(const std::vector<MatrixF>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  MatrixF out(rows, cols);
  Index c = 0;
  for (const auto& b : blocks) {
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

// Weight of a weight vector, read from its first nonzero coordinate.
Weight column_weight(const MatrixF& V, Index col, const std::vector<Weight>& w) {
  for (Index i = 0; i < V.rows(); ++i)
    if (!V(i, col).is_zero()) return w[i];
  throw std::logic_error("column_weight: zero column");
}

// Image of a set of weight-vector columns, returned as weight vectors.
MatrixF graded_image(const MatrixF& cols, const std::vector<Weight>& w) {
  std::map<Weight, std::vector<Index>> buckets;
  for (Index c = 0; c < cols.cols(); ++c) {
    bool nz = false;
    for (Index i = 0; i < cols.rows() && !nz; ++i) nz = !cols(i, c).is_zero();
    if (nz) buckets[column_weight(cols, c, w)].push_back(c);
  }
  std::vector<MatrixF> parts;
  for (const auto& [wt, idx] : buckets) {
    MatrixF sub(cols.rows(), Index(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sub.col(Index(k)) = cols.col(idx[k]);
    parts.push_back(image_basis<FieldElem>(sub));
  }
  return hcat(parts, cols.rows());
}

std::vector<Index> indices_of_weight(const std::vector<Weight>& w, const Weight& t) {
  std::vector<Index> out;
  for (Index i = 0; i < Index(w.size()); ++i)
    if (w[i] == t) out.push_back(i);
  return out;
}

std::vector<Weight> distinct_weights(const std::vector<Weight>& w) {
  std::vector<Weight> out = w;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Kernel of a weight-preserving map F: Q → M computed one weight at a time,
// so the basis consists of weight vectors of Q.
MatrixF graded_kernel(const MatrixF& F, const std::vector<Weight>& wq) {
  std::vector<MatrixF> parts;
  for (const Weight& t : distinct_weights(wq)) {
    std::vector<Index> idx = indices_of_weight(wq, t);
    MatrixF sub(F.rows(), Index(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sub.col(Index(k)) = F.col(idx[k]);
    MatrixF K = kernel_basis<FieldElem>(sub);
    MatrixF E = MatrixF::Zero(F.cols(), K.cols());
    for (Index c = 0; c < K.cols(); ++c)
      for (std::size_t k = 0; k < idx.size(); ++k) E(idx[k], c) = K(Index(k), c);
    parts.push_back(E);
  }
  return hcat(parts, F.cols());
}

}  // namespace

const MatrixF& Representation::gen(int g) const {
  switch (g) {
    case 0: return A;
    case 1: return B;
    case 2: return C;
    default: return D;
  }
}

MatrixF& Representation::gen(int g) {
  switch (g) {
    case 0: return A;
    case 1: return B;
    case 2: return C;
    default: return D;
  }
}

std::optional<std::string> relation_failure(const Representation& M) {
  const int n = M.n;
  const Index d = M.dim();
  for (int g = 0; g < 4; ++g)
    if (M.gen(g).rows() != d || M.gen(g).cols() != d) return "generator matrices have inconsistent shapes";
  FieldElem q = FieldElem::q(n);
  auto eq = [](const MatrixF& X, const MatrixF& Y) { return X == Y; };
  const MatrixF I = identity<FieldElem>(d);
  const MatrixF &A = M.A, &B = M.B, &C = M.C, &D = M.D;
  if (!eq(mul<FieldElem>(B, A), scaled(mul<FieldElem>(A, B), q))) return "ba = qab fails";
  if (!eq(mul<FieldElem>(D, B), scaled(mul<FieldElem>(B, D), q))) return "db = qbd fails";
  if (!eq(mul<FieldElem>(C, A), scaled(mul<FieldElem>(A, C), q))) return "ca = qac fails";
  if (!eq(mul<FieldElem>(D, C), scaled(mul<FieldElem>(C, D), q))) return "dc = qcd fails";
  if (!eq(mul<FieldElem>(B, C), mul<FieldElem>(C, B))) return "bc = cb fails";
  if (!is_zero_matrix<FieldElem>(mat_pow(A, n))) return "a^n = 0 fails";
  if (!eq(mat_pow(B, n), I)) return "b^n = 1 fails";
  if (!eq(mat_pow(C, n), I)) return "c^n = 1 fails";
  if (!is_zero_matrix<FieldElem>(mat_pow(D, n))) return "d^n = 0 fails";
  MatrixF lhs = mul<FieldElem>(D, A) - scaled(mul<FieldElem>(A, D), q);
  if (!eq(lhs, I - mul<FieldElem>(B, C))) return "da - qad = 1 - bc fails";
  return std::nullopt;
}

std::optional<int> q_log(int n, const FieldElem& x) {
  const CycloField& F = CycloField::get(n);
  for (int e = 0; e < n; ++e)
    if (F.q_pow(e) == x) return e;
  return std::nullopt;
}

bool is_weight_basis(const Representation& M) {
  const Index d = M.dim();
  for (const MatrixF* X : {&M.B, &M.C})
    for (Index j = 0; j < d; ++j)
      for (Index i = 0; i < d; ++i) {
        if (i == j) {
          if (!q_log(M.n, (*X)(i, i))) return false;
        } else if (!(*X)(i, j).is_zero()) {
          return false;
        }
      }
  return true;
}

std::vector<Weight> basis_weights(const Representation& M) {
  std::vector<Weight> w(M.dim());
  for (Index i = 0; i < M.dim(); ++i) {
    auto b = q_log(M.n, M.B(i, i)), c = q_log(M.n, M.C(i, i));
    if (!b || !c) throw std::invalid_argument("basis_weights: not a weight basis");
    w[i] = {*b, *c};
  }
  return w;
}

std::pair<Representation, MatrixF> to_weight_basis(const Representation& M) {
  const Index d = M.dim();
  if (is_weight_basis(M)) return {M, identity<FieldElem>(d)};
  const CycloField& F = CycloField::get(M.n);
  std::vector<MatrixF> parts;
  for (int be = 0; be < M.n; ++be)
    for (int ga = 0; ga < M.n; ++ga) {
      MatrixF S(2 * d, d);
      S.topRows(d) = M.B;
      S.bottomRows(d) = M.C;
      for (Index i = 0; i < d; ++i) {
        S(i, i) -= F.q_pow(be);
        S(d + i, i) -= F.q_pow(ga);
      }
      MatrixF K = kernel_basis<FieldElem>(S);
      if (K.cols()) parts.push_back(K);
    }
  MatrixF P = hcat(parts, d);
  if (P.cols() != d) throw std::invalid_argument("to_weight_basis: b, c not simultaneously diagonalizable");
  auto Pinv = inverse_matrix<FieldElem>(P);
  Representation W{M.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) W.gen(g) = mul<FieldElem>(*Pinv, mul<FieldElem>(M.gen(g), P));
  return {W, P};
}

WeightDecomposition weight_decomposition(const Representation& M) {
  auto [W, P] = to_weight_basis(M);
  std::vector<Weight> w = basis_weights(W);
  WeightDecomposition out;
  for (int r = 0; r < M.n; ++r) {
    std::vector<Index> idx;
    for (Index i = 0; i < W.dim(); ++i)
      if (w[i].beta == r) idx.push_back(i);
    MatrixF E(M.dim(), Index(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) E.col(Index(k)) = P.col(idx[k]);
    out[r] = E;
  }
  return out;
}

Representation zero_module(int n) { return {n, MatrixF(0, 0), MatrixF(0, 0), MatrixF(0, 0), MatrixF(0, 0)}; }

Representation simple(int n, int l, int r) {
  if (l < 1 || l > n) throw std::invalid_argument("simple: need 1 <= l <= n");
  const CycloField& F = CycloField::get(n);
  Representation M{n, zeros(l), zeros(l), zeros(l), zeros(l)};
  for (int i = 1; i <= l; ++i) {
    int s = i - 1;
    if (i < l) M.A(s + 1, s) = FieldElem(1);
    if (i > 1) M.D(s - 1, s) = alpha(n, i - 1, l);
    M.B(s, s) = F.q_pow(r + i - 1);
    M.C(s, s) = F.q_pow(i - r - l);
  }
  return M;
}

Representation projective(int n, int l, int r) {
  if (l < 1 || l > n) throw std::invalid_argument("projective: need 1 <= l <= n");
  if (l == n) return simple(n, n, r);
  const CycloField& F = CycloField::get(n);
  const int d = 2 * n;
  Representation M{n, zeros(d), zeros(d), zeros(d), zeros(d)};
  // entries are written with 1-based indices
  auto setD = [&](int to, int from, const FieldElem& c) { M.D(to - 1, from - 1) += c; };
  for (int i = 1; i <= d; ++i) {
    if ((i < n) || (n + 1 <= i && i < d)) M.A(i, i - 1) = FieldElem(1);
    M.B(i - 1, i - 1) = i <= n ? F.q_pow(r + i - 1) : F.q_pow(r + l + i - 1);
    M.C(i - 1, i - 1) = i <= n ? F.q_pow(i - l - r) : F.q_pow(i - r);
    if (i == 1 || i == l + 1) {
      setD(d - l + i - 1, i, F.q_pow(i - 1));
    } else if (1 < i && i <= l) {
      setD(d - l + i - 1, i, F.q_pow(i - 1));
      setD(i - 1, i, alpha(n, i - 1, l));
    } else if (l + 1 < i && i <= n) {
      setD(i - 1, i, alpha(n, i - l - 1, n - l));
    } else if (i == n + 1 || i == d - l + 1) {
      // d v_i = 0
    } else if (n + 1 < i && i <= d - l) {
      setD(i - 1, i, alpha(n, i - n - 1, n - l));
    } else if (d - l + 1 < i && i <= d) {
      setD(i - 1, i, alpha(n, i - d + l - 1, l));
    }
  }
  return M;
}

Representation band(int n, int s, int l, int r, const ExtScalar& eta) {
  if (l < 1 || l >= n) throw std::invalid_argument("band: need 1 <= l < n");
  if (s < 1) throw std::invalid_argument("band: need s >= 1");
  const CycloField& F = CycloField::get(n);
  const int d = s * n;
  Representation M{n, zeros(d), zeros(d), zeros(d), zeros(d)};
  auto slot = [n](int i, int j) { return Index((j - 1) * n + (i - 1)); };
  const bool inf = eta.is_infinity();
  for (int j = 1; j <= s; ++j)
    for (int i = 1; i <= n; ++i) {
      Index v = slot(i, j);
      M.B(v, v) = F.q_pow(r + l + i - 1);
      M.C(v, v) = F.q_pow(i - r);
      // a-action
      if (i < n) {
        if (inf && i == n - l) {
          if (j > 1) M.A(slot(i + 1, j - 1), v) = FieldElem(1);
        } else {
          M.A(slot(i + 1, j), v) = FieldElem(1);
        }
      }
      // d-action
      if (i == 1) {
        if (inf) {
          M.D(slot(n, j), v) = FieldElem(1);
        } else {
          if (j > 1) M.D(slot(n, j - 1), v) += FieldElem(1);
          M.D(slot(n, j), v) += eta.value() * F.q_pow(l);
        }
      } else if (i <= n - l) {
        M.D(slot(i - 1, j), v) = alpha(n, i - 1, n - l);
      } else if (i == n - l + 1) {
        // d v = 0
      } else {
        M.D(slot(i - 1, j), v) = alpha(n, i - n + l - 1, l);
      }
    }
  return M;
}

MatrixF act(const AlgebraElem& x, const Representation& M) {
  const Index d = M.dim();
  MatrixF out = zeros(d);
  std::array<std::vector<MatrixF>, 4> pw;
  auto power = [&](int g, int e) -> const MatrixF& {
    auto& v = pw[g];
    if (v.empty()) v.push_back(identity<FieldElem>(d));
    while (int(v.size()) <= e) v.push_back(mul<FieldElem>(v.back(), M.gen(g)));
    return v[e];
  };
  for (const auto& [m, c] : x.terms()) {
    MatrixF t = power(0, m[0]);
    for (int g = 1; g < 4; ++g)
      if (m[g]) t = mul<FieldElem>(t, power(g, m[g]));
    out += scaled(t, c);
  }
  return out;
}

Representation tensor(const Representation& M, const Representation& N) {
  if (M.n != N.n) throw std::invalid_argument("tensor: different n");
  const HopfContext& ctx = HopfContext::get(M.n);
  Representation T{M.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) {
    MatrixF acc = zeros(M.dim() * N.dim());
    for (const auto& term : ctx.coproduct(HopfContext::generators[g]))
      acc += scaled(kron(act(term.left, M), act(term.right, N)), term.coef);
    T.gen(g) = std::move(acc);
  }
  return T;
}

Representation dual(const Representation& M) {
  const HopfContext& ctx = HopfContext::get(M.n);
  Representation T{M.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) T.gen(g) = act(ctx.antipode(HopfContext::generators[g]), M).transpose();
  return T;
}

Representation direct_sum(const Representation& M, const Representation& N) {
  if (M.n != N.n) throw std::invalid_argument("direct_sum: different n");
  const Index a = M.dim(), b = N.dim();
  Representation S{M.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) {
    MatrixF X = zeros(a + b);
    X.topLeftCorner(a, a) = M.gen(g);
    X.bottomRightCorner(b, b) = N.gen(g);
    S.gen(g) = std::move(X);
  }
  return S;
}

namespace {

// Rows of U used as coordinates for the subspace, and the inverse of U on them.
struct Chart {
  std::vector<Index> rows;
  MatrixF inv;
};

Chart chart_of(const MatrixF& U) {
  Rref<FieldElem> e = rref<FieldElem>(MatrixF(U.transpose()));
  if (e.rank != U.cols()) throw std::invalid_argument("submodule: columns are dependent");
  Chart ch;
  ch.rows = e.pivots;
  MatrixF UP(U.cols(), U.cols());
  for (Index k = 0; k < U.cols(); ++k) UP.row(k) = U.row(ch.rows[k]);
  ch.inv = *inverse_matrix<FieldElem>(UP);
  return ch;
}

}  // namespace

Representation submodule(const Representation& M, const MatrixF& U) {
  const Index k = U.cols();
  Representation S{M.n, {}, {}, {}, {}};
  if (k == 0) return zero_module(M.n);
  Chart ch = chart_of(U);
  for (int g = 0; g < 4; ++g) {
    MatrixF XU = mul<FieldElem>(M.gen(g), U);
    MatrixF XP(k, k);
    for (Index r = 0; r < k; ++r) XP.row(r) = XU.row(ch.rows[r]);
    S.gen(g) = mul<FieldElem>(ch.inv, XP);
  }
  return S;
}

Representation quotient(const Representation& M, const MatrixF& U) {
  const Index d = M.dim(), k = U.cols();
  if (k == 0) return M;
  Chart ch = chart_of(U);
  std::vector<char> used(d, 0);
  for (Index r : ch.rows) used[r] = 1;
  std::vector<Index> W;
  for (Index i = 0; i < d; ++i)
    if (!used[i]) W.push_back(i);
  const Index m = Index(W.size());
  MatrixF UW(m, k);
  for (Index a = 0; a < m; ++a) UW.row(a) = U.row(W[a]);
  MatrixF corr = mul<FieldElem>(UW, ch.inv);  // U_W U_P^{-1}
  Representation Q{M.n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) {
    const MatrixF& X = M.gen(g);
    MatrixF XWW(m, m), XPW(k, m);
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) XWW(a, b) = X(W[a], W[b]);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < m; ++b) XPW(a, b) = X(ch.rows[a], W[b]);
    Q.gen(g) = XWW - mul<FieldElem>(corr, XPW);
  }
  return Q;
}

std::pair<Representation, Representation> split_along(const Representation& M, const MatrixF& U, const MatrixF& W) {
  return {submodule(M, U), submodule(M, W)};
}

namespace {

std::vector<MatrixF> hom_space_weighted(const Representation& M, const Representation& N) {
  const Index dm = M.dim(), dn = N.dim();
  std::vector<Weight> wm = basis_weights(M), wn = basis_weights(N);
  // Unknowns T(i, j) with matching weights.
  std::vector<Index> var(std::size_t(dn * dm), -1);
  Index nv = 0;
  for (Index j = 0; j < dm; ++j)
    for (Index i = 0; i < dn; ++i)
      if (wn[i] == wm[j]) var[std::size_t(j * dn + i)] = nv++;
  if (nv == 0) return {};
  auto V = [&](Index i, Index j) { return var[std::size_t(j * dn + i)]; };

  std::vector<std::vector<std::pair<Index, FieldElem>>> rows;
  std::vector<std::pair<Index, FieldElem>> row;
  for (int g : {0, 3}) {
    const MatrixF& GM = M.gen(g);
    const MatrixF& GN = N.gen(g);
    // column nonzeros of GM and row nonzeros of GN
    std::vector<std::vector<Index>> colnz(dm), rownz(dn);
    for (Index j = 0; j < dm; ++j)
      for (Index k = 0; k < dm; ++k)
        if (!GM(k, j).is_zero()) colnz[j].push_back(k);
    for (Index i = 0; i < dn; ++i)
      for (Index k = 0; k < dn; ++k)
        if (!GN(i, k).is_zero()) rownz[i].push_back(k);
    for (Index j = 0; j < dm; ++j)
      for (Index i = 0; i < dn; ++i) {
        row.clear();
        // (T GM)(i, j) − (GN T)(i, j)
        for (Index k : colnz[j])
          if (V(i, k) >= 0) row.emplace_back(V(i, k), GM(k, j));
        for (Index k : rownz[i])
          if (V(k, j) >= 0) row.emplace_back(V(k, j), -GN(i, k));
        if (!row.empty()) rows.push_back(row);
      }
  }
  MatrixF S = MatrixF::Zero(Index(rows.size()), nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [v, c] : rows[r]) S(Index(r), v) += c;
  MatrixF K = kernel_basis<FieldElem>(S);
  std::vector<MatrixF> out;
  for (Index c = 0; c < K.cols(); ++c) {
    MatrixF T = MatrixF::Zero(dn, dm);
    for (Index j = 0; j < dm; ++j)
      for (Index i = 0; i < dn; ++i)
        if (V(i, j) >= 0) T(i, j) = K(V(i, j), c);
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace

std::vector<MatrixF> hom_space(const Representation& M, const Representation& N) {
  if (M.n != N.n) throw std::invalid_argument("hom_space: different n");
  if (M.dim() == 0 || N.dim() == 0) return {};
  if (is_weight_basis(M) && is_weight_basis(N)) return hom_space_weighted(M, N);
  auto [Mw, Pm] = to_weight_basis(M);
  auto [Nw, Pn] = to_weight_basis(N);
  MatrixF Pm_inv = *inverse_matrix<FieldElem>(Pm);
  std::vector<MatrixF> out;
  for (const MatrixF& T : hom_space_weighted(Mw, Nw)) out.push_back(mul<FieldElem>(Pn, mul<FieldElem>(T, Pm_inv)));
  return out;
}

std::optional<MatrixF> find_isomorphism(const Representation& M, const Representation& N, unsigned seed,
                                        int tries) {
  if (M.dim() != N.dim()) return std::nullopt;
  if (M.dim() == 0) return MatrixF(0, 0);
  std::vector<MatrixF> H = hom_space(M, N);
  const Index d = M.dim();
  for (const MatrixF& T : H)
    if (rank<FieldElem>(T) == d) return T;
  if (H.size() < 2) return std::nullopt;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < tries; ++t) {
    MatrixF T = MatrixF::Zero(d, d);
    for (const MatrixF& h : H) {
      int c = coef(rng);
      if (c) T += scaled(h, FieldElem(c));
    }
    if (rank<FieldElem>(T) == d) return T;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& M, const Representation& N) {
  return find_isomorphism(M, N).has_value();
}

namespace {

// Matrices of the radical basis elements acting on a weight-basis module.
std::vector<MatrixF> radical_actions(const Representation& M) {
  const HopfContext& ctx = HopfContext::get(M.n);
  const Index d = M.dim();
  std::vector<Weight> w = basis_weights(M);
  std::vector<MatrixF> Ap{identity<FieldElem>(d)}, Dp{identity<FieldElem>(d)};
  for (int e = 1; e < M.n; ++e) {
    Ap.push_back(mul<FieldElem>(Ap.back(), M.A));
    Dp.push_back(mul<FieldElem>(Dp.back(), M.D));
  }
  std::vector<MatrixF> out;
  for (const SparseVec& x : ctx.radical_idem()) {
    MatrixF X = zeros(d);
    for (const auto& [u, c] : x) {
      IdemIndex ui = ctx.idem_unindex(u);
      MatrixF PD = Dp[ui.k];
      for (Index i = 0; i < d; ++i)
        if (!(w[i].beta == ui.beta && w[i].gamma == ui.gamma)) PD.row(i).setZero();
      X += scaled(mul<FieldElem>(Ap[ui.i], PD), c);
    }
    if (!is_zero_matrix<FieldElem>(X)) out.push_back(std::move(X));
  }
  return out;
}

Representation weighted(const Representation& M, MatrixF* P) {
  auto [W, Q] = to_weight_basis(M);
  if (P) *P = Q;
  return W;
}

}  // namespace

MatrixF radical(const Representation& M) {
  if (M.dim() == 0) return MatrixF(0, 0);
  MatrixF P;
  Representation W = weighted(M, &P);
  std::vector<MatrixF> acts = radical_actions(W);
  MatrixF R = graded_image(hcat(acts, W.dim()), basis_weights(W));
  return mul<FieldElem>(P, R);
}

MatrixF socle(const Representation& M) {
  if (M.dim() == 0) return MatrixF(0, 0);
  MatrixF P;
  Representation W = weighted(M, &P);
  const Index d = W.dim();
  std::vector<MatrixF> acts = radical_actions(W);
  MatrixF stacked(Index(acts.size()) * d, d);
  for (std::size_t a = 0; a < acts.size(); ++a) stacked.middleRows(Index(a) * d, d) = acts[a];
  MatrixF K = acts.empty() ? identity<FieldElem>(d) : graded_kernel(stacked, basis_weights(W));
  return mul<FieldElem>(P, K);
}

SimpleMultiset semisimple_labels(const Representation& S) {
  SimpleMultiset out;
  if (S.dim() == 0) return out;
  Representation W = weighted(S, nullptr);
  std::vector<Weight> w = basis_weights(W);
  const int n = S.n;
  for (const Weight& t : distinct_weights(w)) {
    std::vector<Index> idx = indices_of_weight(w, t);
    MatrixF sub(W.dim(), Index(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sub.col(Index(k)) = W.D.col(idx[k]);
    Index hw = Index(idx.size()) - rank<FieldElem>(sub);
    if (hw == 0) continue;
    // highest weight vector of V(l, r): b = q^r, c = q^{1−r−l}
    int l = mod(-t.beta - t.gamma, n) + 1;
    out[{l, t.beta}] += int(hw);
  }
  return out;
}

SimpleMultiset top(const Representation& M) {
  Representation W = weighted(M, nullptr);
  return semisimple_labels(quotient(W, radical(W)));
}

SimpleMultiset socle_labels(const Representation& M) {
  Representation W = weighted(M, nullptr);
  return semisimple_labels(submodule(W, socle(W)));
}

int loewy_length(const Representation& M) {
  Representation cur = weighted(M, nullptr);
  int len = 0;
  while (cur.dim() > 0) {
    cur = submodule(cur, radical(cur));
    ++len;
  }
  return len;
}

Representation syzygy(const Representation& M) {
  if (M.dim() == 0) return zero_module(M.n);
  const int n = M.n;
  Representation W = weighted(M, nullptr);
  SimpleMultiset tp = top(W);
  MatrixF R = radical(W);
  Index have = rank<FieldElem>(R);
  MatrixF span = R;
  std::vector<Representation> covers;
  std::vector<MatrixF> maps;
  for (const auto& [lr, mult] : tp) {
    Representation P = projective(n, lr.first, lr.second);
    int picked = 0;
    for (const MatrixF& f : hom_space(P, W)) {
      if (picked == mult) break;
      MatrixF trial(W.dim(), span.cols() + 1);
      trial.leftCols(span.cols()) = span;
      trial.col(span.cols()) = f.col(0);
      Index r = rank<FieldElem>(trial);
      if (r == have) continue;
      have = r;
      span = std::move(trial);
      covers.push_back(P);
      maps.push_back(f);
      ++picked;
    }
    if (picked != mult) throw std::logic_error("syzygy: cover-surjection search failed");
  }
  Representation Q = covers.front();
  for (std::size_t i = 1; i < covers.size(); ++i) Q = direct_sum(Q, covers[i]);
  MatrixF F = hcat(maps, W.dim());
  if (rank<FieldElem>(F) != W.dim()) throw std::logic_error("syzygy: cover map is not surjective");
  MatrixF K = graded_kernel(F, basis_weights(Q));
  return submodule(Q, K);
}

Representation cosyzygy(const Representation& M) { return dual(syzygy(dual(M))); }

Representation string_module(int n, int m, int l, int r) {
  if (l < 1 || l >= n) throw std::invalid_argument("string_module: need 1 <= l < n");
  Representation M = simple(n, l, r);
  for (int i = 0; i < m; ++i) M = syzygy(M);
  for (int i = 0; i < -m; ++i) M = cosyzygy(M);
  return M;
}

std::string to_json(const Representation& M, const std::string& label) {
  nlohmann::json j;
  j["n"] = M.n;
  if (!label.empty()) j["label"] = label;
  j["dim"] = M.dim();
  static const char* names[] = {"A", "B", "C", "D"};
  for (int g = 0; g < 4; ++g) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < M.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Index k = 0; k < M.dim(); ++k) row.push_back(M.gen(g)(i, k).to_string());
      rows.push_back(row);
    }
    j[names[g]] = rows;
  }
  return j.dump();
}

Representation from_json(const std::string& text, std::string* label) {
  nlohmann::json j = nlohmann::json::parse(text);
  Representation M;
  M.n = j.at("n").get<int>();
  const Index d = j.at("dim").get<Index>();
  if (label) *label = j.value("label", std::string());
  static const char* names[] = {"A", "B", "C", "D"};
  for (int g = 0; g < 4; ++g) {
    const auto& rows = j.at(names[g]);
    if (Index(rows.size()) != d) throw std::invalid_argument("from_json: bad matrix shape");
    MatrixF X(d, d);
    for (Index i = 0; i < d; ++i) {
      if (Index(rows[i].size()) != d) throw std::invalid_argument("from_json: bad matrix shape");
      for (Index k = 0; k < d; ++k) X(i, k) = parse_field_elem(M.n, rows[i][k].get<std::string>());
    }
    M.gen(g) = std::move(X);
  }
  return M;
}

}  // namespace greenring
