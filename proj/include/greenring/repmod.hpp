#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenring/algebra.hpp"
#include "greenring/linalg.hpp"

namespace greenring {

/// A module over H_n(1,q): the matrices of a, b, c, d on k^dim.
struct Representation {
  int n = 3;
  MatrixF A, B, C, D;

  Index dim() const { return A.rows(); }
  const MatrixF& gen(int g) const;
  MatrixF& gen(int g);
};

/// Joint eigenvalue exponents (β, γ) of b and c on a weight vector.
struct Weight {
  int beta = 0, gamma = 0;
  friend bool operator==(const Weight& x, const Weight& y) { return x.beta == y.beta && x.gamma == y.gamma; }
  friend bool operator<(const Weight& x, const Weight& y) {
    return x.beta != y.beta ? x.beta < y.beta : x.gamma < y.gamma;
  }
};

/// For each r ∈ Z_n, a basis (columns) of the q^r-eigenspace of b.
using WeightDecomposition = std::map<int, MatrixF>;

/// Simple labels appearing in a semisimple layer, keyed by (l, r).
using SimpleMultiset = std::map<std::pair<int, int>, int>;

/// Reason the ten relations fail, or nullopt if they all hold.
std::optional<std::string> relation_failure(const Representation& M);
inline bool satisfies_relations(const Representation& M) { return !relation_failure(M); }

/// Exponent e with x = q^e, if x is a power of q.
std::optional<int> q_log(int n, const FieldElem& x);

/// True when B and C are diagonal with powers of q on the diagonal.
bool is_weight_basis(const Representation& M);
/// Weights of the basis vectors; requires a weight basis.
std::vector<Weight> basis_weights(const Representation& M);
/// Change of basis to a weight basis: returns (M', P) with M' = P^{-1} M P.
std::pair<Representation, MatrixF> to_weight_basis(const Representation& M);
WeightDecomposition weight_decomposition(const Representation& M);

Representation simple(int n, int l, int r);
Representation projective(int n, int l, int r);
Representation band(int n, int s, int l, int r, const ExtScalar& eta);

/// Action of an algebra element: Σ c · A^i B^j C^l D^k.
MatrixF act(const AlgebraElem& x, const Representation& M);

Representation tensor(const Representation& M, const Representation& N);
Representation dual(const Representation& M);
Representation direct_sum(const Representation& M, const Representation& N);
Representation zero_module(int n);

/// Restriction to the submodule spanned by the columns of U (independent).
Representation submodule(const Representation& M, const MatrixF& U);
/// M / span(U), on the coordinate complement chosen by rref.
Representation quotient(const Representation& M, const MatrixF& U);
/// Block-diagonalize along M = span(U) ⊕ span(W): returns the two restrictions.
std::pair<Representation, Representation> split_along(const Representation& M, const MatrixF& U, const MatrixF& W);

/// Basis of Hom_H(M, N); each element is a dim N × dim M matrix.
std::vector<MatrixF> hom_space(const Representation& M, const Representation& N);
/// Some invertible element of Hom_H(M, N), if one exists among basis elements
/// and seeded random combinations.
std::optional<MatrixF> find_isomorphism(const Representation& M, const Representation& N, unsigned seed = 1,
                                        int tries = 24);
bool is_isomorphic(const Representation& M, const Representation& N);

/// rad M = J·M, as a basis of weight vectors (columns).
MatrixF radical(const Representation& M);
/// soc M = {m : J·m = 0}, as a basis of weight vectors (columns).
MatrixF socle(const Representation& M);
/// Composition factors of a semisimple module, read off from d-highest weights.
SimpleMultiset semisimple_labels(const Representation& S);
SimpleMultiset top(const Representation& M);
SimpleMultiset socle_labels(const Representation& M);
/// Number of steps of the radical series until zero.
int loewy_length(const Representation& M);

/// Ω M: kernel of a projective cover.
Representation syzygy(const Representation& M);
/// Ω^{-1} M = (Ω(M*))*.
Representation cosyzygy(const Representation& M);
/// Ω^m V(l, r); m = 0 gives the simple module.
Representation string_module(int n, int m, int l, int r);

/// Text bundle used by the on-disk cache: n, optional label, four matrices of
/// FieldElem strings.
std::string to_json(const Representation& M, const std::string& label = "");
Representation from_json(const std::string& text, std::string* label = nullptr);

}  // namespace greenring
