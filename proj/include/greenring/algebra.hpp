#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "greenring/linalg.hpp"

namespace greenring {

/// Exponents (i, j, l, k) of the PBW monomial a^i b^j c^l d^k.
using Monomial = std::array<int, 4>;

/// An element of H_n(1,q) in the PBW basis. Zero coefficients are never stored.
class AlgebraElem {
 public:
  explicit AlgebraElem(int n = 3) : n_(n) {}
  static AlgebraElem one(int n) { return monomial(n, {0, 0, 0, 0}); }
  static AlgebraElem monomial(int n, Monomial m, FieldElem coef = FieldElem(1));
  /// One of the generators 'a', 'b', 'c', 'd'.
  static AlgebraElem generator(int n, char g);

  int n() const { return n_; }
  const std::map<Monomial, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const FieldElem& c);

  AlgebraElem& operator+=(const AlgebraElem& o);
  AlgebraElem& operator-=(const AlgebraElem& o);
  friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) { return a += b; }
  friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) { return a -= b; }
  friend AlgebraElem operator*(const FieldElem& s, const AlgebraElem& x);
  friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgebraElem& a, const AlgebraElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int n_;
  std::map<Monomial, FieldElem> terms_;
};

/// Sparse coordinate vector on n^4 basis indices, sorted by index.
using SparseVec = std::vector<std::pair<int, FieldElem>>;

/// Basis element a^i e_{β,γ} d^k of the idempotent basis, where e_{β,γ} is the
/// joint eigenprojection of b and c for eigenvalues q^β, q^γ. Left and right
/// multiplication by b and c act diagonally on it, which splits the trace form
/// into small blocks.
struct IdemIndex {
  int i, beta, gamma, k;
};

class HopfContext {
 public:
  struct CoproductTerm {
    FieldElem coef;
    AlgebraElem left, right;
  };

  static const HopfContext& get(int n);

  int n() const { return n_; }
  int dim() const { return n_ * n_ * n_ * n_; }
  static constexpr std::array<char, 4> generators = {'a', 'b', 'c', 'd'};

  const std::vector<CoproductTerm>& coproduct(char g) const { return delta_[gen_slot(g)]; }
  const AlgebraElem& antipode(char g) const { return antipode_[gen_slot(g)]; }

  /// Radical basis, computed on first use.
  const std::vector<AlgebraElem>& radical() const;
  /// The same radical basis in idempotent coordinates; each element lies in a
  /// single (left weight, right weight) class.
  const std::vector<SparseVec>& radical_idem() const;

  int index(const Monomial& m) const { return ((m[0] * n_ + m[1]) * n_ + m[2]) * n_ + m[3]; }
  Monomial unindex(int x) const;
  IdemIndex idem_unindex(int x) const;
  int idem_index(int i, int beta, int gamma, int k) const;

  /// Left multiplication tables: generator slot g (0..3 for a,b,c,d) times a
  /// basis element.
  const SparseVec& pbw_left(int g, int x) const { return pbw_[g][x]; }
  const SparseVec& idem_left(int g, int x) const { return idem_[g][x]; }

  /// x·y in the idempotent basis.
  SparseVec idem_multiply(const SparseVec& x, const SparseVec& y) const;
  AlgebraElem idem_to_pbw(const SparseVec& x) const;
  SparseVec pbw_to_idem(const AlgebraElem& x) const;

  /// Left and right (b, c)-weights of an idempotent basis element.
  std::pair<int, int> left_weight(int x) const;
  std::pair<int, int> right_weight(int x) const;

  static int gen_slot(char g);

 private:
  explicit HopfContext(int n);
  void build_tables();
  void compute_radical() const;

  int n_;
  std::array<std::vector<SparseVec>, 4> pbw_;
  std::array<std::vector<SparseVec>, 4> idem_;
  std::array<std::vector<CoproductTerm>, 4> delta_;
  std::array<AlgebraElem, 4> antipode_;
  mutable std::once_flag radical_once_;
  mutable std::vector<AlgebraElem> radical_;
  mutable std::vector<SparseVec> radical_idem_;
};

/// Normal-ordered product, by rewriting with the defining relations.
AlgebraElem multiply(const AlgebraElem& x, const AlgebraElem& y);
/// Matrix of y ↦ x·y in the PBW basis (n^4 × n^4).
MatrixF left_mult_matrix(const AlgebraElem& x);
/// Basis of the Jacobson radical J, from the characteristic-zero trace form.
const std::vector<AlgebraElem>& radical_basis(const HopfContext& ctx);

/// Result of the structural checks on the radical.
struct RadicalReport {
  int dim_algebra = 0;
  int dim_radical = 0;
  int dim_radical_sq = 0;
  bool cube_vanishes = false;
  int expected_quotient_dim = 0;
};
RadicalReport check_radical(const HopfContext& ctx);

}  // namespace greenring
