#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "greenring/field.hpp"

namespace greenring {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixF = Matrix<FieldElem>;
using VectorF = Vector<FieldElem>;
using MatrixQ = Matrix<Rational>;

template <class Scalar>
struct Rref {
  Matrix<Scalar> R;
  std::vector<Index> pivots;
  Index rank = 0;
};

/// Reduced row-echelon form. Pivot = first nonzero entry in each column, so the
/// output is deterministic. Row operations skip zero entries, which keeps the
/// sparse systems produced by Hom solves cheap.
template <class Scalar>
Rref<Scalar> rref(Matrix<Scalar> M) {
  Rref<Scalar> out;
  const Index rows = M.rows(), cols = M.cols();
  std::vector<Index> nz;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(M(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) M.row(p).swap(M.row(r));
    Scalar inv = inverse(M(r, c));
    nz.clear();
    for (Index j = c; j < cols; ++j)
      if (!is_zero(M(r, j))) {
        M(r, j) *= inv;
        nz.push_back(j);
      }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(M(i, c))) continue;
      Scalar f = M(i, c);
      for (Index j : nz) M(i, j) -= f * M(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.R = std::move(M);
  return out;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& M) {
  return rref<Scalar>(M).rank;
}

/// Columns spanning the null space of M.
template <class Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& M) {
  Rref<Scalar> e = rref<Scalar>(M);
  const Index cols = M.cols();
  std::vector<char> is_pivot(cols, 0);
  for (Index p : e.pivots) is_pivot[p] = 1;
  Matrix<Scalar> K = Matrix<Scalar>::Zero(cols, cols - e.rank);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    K(f, k) = Scalar(1);
    for (Index i = 0; i < e.rank; ++i)
      if (!is_zero(e.R(i, f))) K(e.pivots[i], k) = -e.R(i, f);
    ++k;
  }
  return K;
}

/// Columns of M forming a basis of its column space (the pivot columns).
template <class Scalar>
Matrix<Scalar> image_basis(const Matrix<Scalar>& M) {
  Rref<Scalar> e = rref<Scalar>(M);
  Matrix<Scalar> B(M.rows(), e.rank);
  for (Index i = 0; i < e.rank; ++i) B.col(i) = M.col(e.pivots[i]);
  return B;
}

/// One solution x of M x = b, or nullopt when the system is inconsistent.
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& M, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(M.rows(), M.cols() + 1);
  aug.leftCols(M.cols()) = M;
  aug.col(M.cols()) = b;
  Rref<Scalar> e = rref<Scalar>(std::move(aug));
  if (e.rank > 0 && e.pivots.back() == M.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(M.cols());
  for (Index i = 0; i < e.rank; ++i) x(e.pivots[i]) = e.R(i, M.cols());
  return x;
}

/// Product that skips zero entries. Eigen's generic GEMM copies and multiplies
/// every entry, which is slow for exact scalars.
template <class Scalar>
Matrix<Scalar> mul(const Matrix<Scalar>& A, const Matrix<Scalar>& B) {
  Matrix<Scalar> C = Matrix<Scalar>::Zero(A.rows(), B.cols());
  for (Index k = 0; k < A.cols(); ++k) {
    for (Index j = 0; j < B.cols(); ++j) {
      const Scalar& b = B(k, j);
      if (is_zero(b)) continue;
      for (Index i = 0; i < A.rows(); ++i)
        if (!is_zero(A(i, k))) C(i, j).add_mul(A(i, k), b);
    }
  }
  return C;
}

template <class Scalar>
Vector<Scalar> mul(const Matrix<Scalar>& A, const Vector<Scalar>& v) {
  Vector<Scalar> out = Vector<Scalar>::Zero(A.rows());
  for (Index k = 0; k < A.cols(); ++k) {
    if (is_zero(v(k))) continue;
    for (Index i = 0; i < A.rows(); ++i)
      if (!is_zero(A(i, k))) out(i).add_mul(A(i, k), v(k));
  }
  return out;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& M) {
  for (Index j = 0; j < M.cols(); ++j)
    for (Index i = 0; i < M.rows(); ++i)
      if (!is_zero(M(i, j))) return false;
  return true;
}

template <class Scalar>
Matrix<Scalar> identity(Index d) {
  Matrix<Scalar> I = Matrix<Scalar>::Zero(d, d);
  for (Index i = 0; i < d; ++i) I(i, i) = Scalar(1);
  return I;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class Scalar>
std::optional<Matrix<Scalar>> inverse_matrix(const Matrix<Scalar>& M) {
  const Index d = M.rows();
  Matrix<Scalar> aug(d, 2 * d);
  aug.leftCols(d) = M;
  aug.rightCols(d) = identity<Scalar>(d);
  Rref<Scalar> e = rref<Scalar>(std::move(aug));
  if (e.rank < d || e.pivots[d - 1] != d - 1) return std::nullopt;
  return Matrix<Scalar>(e.R.rightCols(d));
}

/// Basis of ker(M^d), d = dim, together with a basis of im(M^d).
/// The two are complementary (Fitting).
template <class Scalar>
std::pair<Matrix<Scalar>, Matrix<Scalar>> fitting_split(const Matrix<Scalar>& M) {
  Matrix<Scalar> P = M;
  Index r = rank<Scalar>(P);
  for (;;) {
    if (r == 0) break;
    Matrix<Scalar> Q = mul<Scalar>(M, P);
    Index r2 = rank<Scalar>(Q);
    if (r2 == r) break;
    P = std::move(Q);
    r = r2;
  }
  return {kernel_basis<Scalar>(P), image_basis<Scalar>(P)};
}

template <class Scalar>
Matrix<Scalar> generalized_kernel(const Matrix<Scalar>& M) {
  return fitting_split<Scalar>(M).first;
}

/// Polynomial over Q(ζ_n), coefficients from x^0 upward, no trailing zeros.
class PolyF {
 public:
  PolyF() = default;
  explicit PolyF(std::vector<FieldElem> c) : c_(std::move(c)) { trim(); }
  static PolyF x_minus(const FieldElem& a) { return PolyF({-a, FieldElem(1)}); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  const FieldElem& operator[](int i) const { return c_[i]; }
  const FieldElem& lead() const { return c_.back(); }

  PolyF monic() const;
  PolyF derivative() const;
  friend PolyF operator+(const PolyF& a, const PolyF& b);
  friend PolyF operator-(const PolyF& a, const PolyF& b);
  friend PolyF operator*(const PolyF& a, const PolyF& b);
  friend bool operator==(const PolyF& a, const PolyF& b) { return a.c_ == b.c_; }
  static void divmod(const PolyF& a, const PolyF& b, PolyF* q, PolyF* r);
  friend PolyF operator/(const PolyF& a, const PolyF& b);
  friend PolyF operator%(const PolyF& a, const PolyF& b);

  FieldElem eval(const FieldElem& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

PolyF gcd(const PolyF& a, const PolyF& b);
PolyF lcm(const PolyF& a, const PolyF& b);
/// Product of the distinct irreducible factors (monic).
PolyF squarefree_part(const PolyF& p);

/// p(M).
MatrixF eval_matrix(const PolyF& p, const MatrixF& M);

/// Least-degree monic annihilator of M.
PolyF min_poly(const MatrixF& M);

/// Least-degree monic p with p(M) v = 0.
PolyF min_poly_vector(const MatrixF& M, const VectorF& v);

}  // namespace greenring
