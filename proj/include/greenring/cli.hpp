#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "greenring/rules.hpp"

namespace greenring {

/// Label | Tensor(lhs, rhs) | Dual(label).
struct LabelExpr {
  enum class Kind { Label, Tensor, Dual };
  Kind kind = Kind::Label;
  ModuleLabel label;             // Label and Dual
  std::vector<LabelExpr> args;   // Tensor: two operands
};

/// Parses the expression grammar
///
///   expr  := term (("(x)" | "⊗") term)*
///   term  := label | label "^*" | "(" expr ")"
///   label := V(l,r) | P(l,r) | Om(m)V(l,r) | M(s,l,r;scalar)
///
/// Tensor is left associative. Throws ParseError with the byte offset, for
/// syntax errors and for indices out of range for n.
LabelExpr parse_expr(int n, std::string_view text);
std::string to_string(const LabelExpr& e);

/// Rule-engine value of an expression, expanded bilinearly, with one trace per
/// pair product.
struct RulesResult {
  Decomposition decomposition;
  std::vector<std::pair<std::string, RuleTrace>> traces;  // "A (x) B" -> trace
};
RulesResult evaluate_rules(int n, const LabelExpr& e);

/// Module of an expression; leaves go through the on-disk cache if cache_dir
/// is non-empty.
Representation evaluate_module(int n, const LabelExpr& e, const std::string& cache_dir = "");
/// Band parameters of every leaf.
std::vector<ExtScalar> leaf_etas(const LabelExpr& e);
int tensor_depth(const LabelExpr& e);
Decomposition evaluate_oracle(int n, const LabelExpr& e, unsigned seed, const std::string& cache_dir = "");

/// Cached construct: <dir>/n<n>/<escaped label>.json, written on first use.
Representation cached_construct(int n, const ModuleLabel& L, const std::string& cache_dir);

nlohmann::json to_json(const RuleTrace& tr);
nlohmann::json summands_json(int n, const Decomposition& D);
/// Table sorted by label order: label, multiplicity, dimension.
void print_table(std::ostream& out, int n, const Decomposition& D);

enum ExitCode { kOk = 0, kParse = 2, kMismatch = 3, kInternal = 4 };

struct DecomposeOptions {
  int n = 3;
  std::string expr;
  std::string mode = "rules";  // rules | oracle | both
  unsigned seed = 1;
  bool json = false;
  std::string cache;
};
int cmd_decompose(const DecomposeOptions& o, std::ostream& out, std::ostream& err);

struct SweepOptions {
  int n = 3;
  int max_m = 2;
  int max_s = 2;
  std::string etas = "0,1,inf";
  unsigned seed = 1;
  int jobs = 1;
  std::string report;
  std::string cache;
};

/// Simples, projectives, Ω^{±m}V for 1 <= m <= max_m, bands with s <= max_s
/// and η from etas.
std::vector<ModuleLabel> sweep_family(int n, int max_m, int max_s, const std::vector<ExtScalar>& etas);
std::vector<ExtScalar> parse_eta_list(int n, std::string_view text);

struct PairRecord {
  std::string a, b;
  std::string theorem;
  int dim = 0;
  std::string status;  // agree | disagree | error
  std::string rules, oracle, error;
  bool projective_input = false;
  bool projective_output = true;
  double seconds = 0;
};
nlohmann::json to_json(const PairRecord& r);

/// Every unordered pair of the family, rules against oracle, on `jobs` threads.
/// Records come back in pair order.
std::vector<PairRecord> run_sweep(const SweepOptions& o);
int cmd_verify_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err);

int cmd_dual(int n, const std::string& expr, bool json, std::ostream& out, std::ostream& err);
int cmd_dim(int n, const std::string& expr, bool json, std::ostream& out, std::ostream& err);

}  // namespace greenring
