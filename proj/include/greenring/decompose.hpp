#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/repmod.hpp"

namespace greenring {

enum class LabelKind { Simple, Proj, Str, Band };

/// Name of an indecomposable: V(l,r), P(l,r), Ω^m V(l,r) or M_s(l,r,η).
///
/// Built through the factories, which reduce r mod n, send P(n,r) to V(n,r)
/// and Ω^0 V(l,r) to V(l,r), and reject out-of-range indices.
struct ModuleLabel {
  LabelKind kind = LabelKind::Simple;
  int l = 1;
  int r = 0;
  int m = 0;  // m for strings, s for bands
  ExtScalar eta;

  static ModuleLabel simple(int n, int l, int r);
  static ModuleLabel proj(int n, int l, int r);
  static ModuleLabel str(int n, int m, int l, int r);
  static ModuleLabel band(int n, int s, int l, int r, const ExtScalar& eta);

  int s() const { return m; }
  bool is_projective(int n) const { return kind == LabelKind::Proj || (kind == LabelKind::Simple && l == n); }
};

bool operator==(const ModuleLabel& x, const ModuleLabel& y);
inline bool operator!=(const ModuleLabel& x, const ModuleLabel& y) { return !(x == y); }
/// Sort order (kind, l, r, m/s, η text), used by tables and multisets.
bool operator<(const ModuleLabel& x, const ModuleLabel& y);

/// Canonical text in the expression grammar: "V(2,0)", "P(1,2)", "Om(-2)V(1,2)",
/// "M(1,2,0;q^2+1)".
std::string to_string(const ModuleLabel& L);
int label_dim(int n, const ModuleLabel& L);
/// β − γ mod n, constant on the weights of the module; bc^{-1} is central, so
/// summands of a module live in one class each.
int block_of(int n, const ModuleLabel& L);

/// The module named by L, cached per (n, label).
const Representation& construct(int n, const ModuleLabel& L);

using Decomposition = std::map<ModuleLabel, int>;
int total_dim(int n, const Decomposition& D);
std::string to_string(const Decomposition& D);

struct IndecomposableCertificate {
  bool indecomposable = false;
  int end_dim = 0;
  /// dim End(M)/rad End(M), from the trace form of End(M) acting on M.
  int semisimple_dim = 0;
};
IndecomposableCertificate is_indecomposable(const Representation& M);

/// Summand of a splitting: the module and the columns of M spanning it.
struct Summand {
  Representation module;
  MatrixF basis;
};

/// Splits M by central blocks, then by Fitting decompositions of endomorphisms.
/// The bases of the pieces together form an invertible matrix.
std::vector<Summand> split_with_basis(const Representation& M, unsigned seed = 1);
std::vector<Representation> split(const Representation& M, unsigned seed = 1);

/// Pieces of M cut out by the central element bc^{-1}, keyed by block.
std::map<int, Summand> central_blocks(const Representation& M);

/// Number of summands of N isomorphic to X, for X with End(X)/rad = k: the rank
/// of (f, g) ↦ tr(g∘f)/dim X on Hom(X, N) × Hom(N, X).
int multiplicity(const Representation& X, const Representation& N);

struct NoMatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The candidate isomorphic to N, by dimension and weight filters followed by
/// an explicit invertible intertwiner.
ModuleLabel identify(int n, const Representation& N, const std::vector<ModuleLabel>& candidates);

/// {0, ∞} together with ±q^e (i)_q/(j)_q·η for every input η, 0 ≤ e < n,
/// 1 ≤ i, j < n.
std::vector<ExtScalar> eta_closure(int n, const std::vector<ExtScalar>& inputs);

/// Every label of dimension at most max_dim, bands taking η from etas.
std::vector<ModuleLabel> candidate_pool(int n, int max_dim, const std::vector<ExtScalar>& etas);

/// Brute-force decomposition: multiplicities of pool members by the Hom pairing,
/// block by block, after a seeded change of weight basis. Throws NoMatch if the
/// pool does not account for all of M.
Decomposition decompose_oracle(const Representation& M, const std::vector<ModuleLabel>& pool, unsigned seed = 1);

}  // namespace greenring
