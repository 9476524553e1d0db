#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greenring/decompose.hpp"

namespace greenring {

/// Which closed-form rule produced a decomposition, and with which parameters.
struct RuleTrace {
  std::string theorem;
  /// Normalizations applied before dispatch, in order.
  std::vector<std::string> steps;
  /// l, l', r, r', t, c(t), l1, l2, m, s, m1, m2 as they apply.
  std::map<std::string, int> params;
};

/// A label pair that no rule covers. Indicates a dispatcher bug.
struct UnreachableCase : std::logic_error {
  using std::logic_error::logic_error;
};

/// floor((t+1)/2), for any integer t.
int c_fn(int t);

/// L1 ⊗ L2 by the closed-form tensor product rules.
std::pair<Decomposition, RuleTrace> decompose_pair(int n, const ModuleLabel& L1, const ModuleLabel& L2);

/// Label of the dual module.
ModuleLabel dualize_label(int n, const ModuleLabel& L);
Decomposition dualize(int n, const Decomposition& D);
/// Every r-index moved by dr, as for V(1,dr) ⊗ (−).
ModuleLabel shift_label(int n, const ModuleLabel& L, int dr);
Decomposition shift(int n, const Decomposition& D, int dr);

/// η q^{1−l}(l)_q; ∞ stays ∞.
ExtScalar band_invariant(int n, const ModuleLabel& L);
/// η / (q^{1−l}(l)_q). Two bands fall in the equal-invariant tensor regime
/// exactly when these agree.
ExtScalar band_reduced_parameter(int n, const ModuleLabel& L);

}  // namespace greenring
