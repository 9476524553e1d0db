#include "greenring/cli.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace greenring {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------- parsing

namespace {

class ExprParser {
 public:
  ExprParser(int n, std::string_view s) : n_(n), s_(s) {}

  LabelExpr parse() {
    LabelExpr e = expr();
    ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
  }
  bool at(std::string_view tok) const { return s_.substr(pos_, tok.size()) == tok; }
  bool eat(std::string_view tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  LabelExpr expr() {
    LabelExpr lhs = term();
    for (;;) {
      ws();
      if (!eat("(x)") && !eat("\xE2\x8A\x97")) break;  // ⊗
      LabelExpr rhs = term();
      LabelExpr t;
      t.kind = LabelExpr::Kind::Tensor;
      t.args.push_back(std::move(lhs));
      t.args.push_back(std::move(rhs));
      lhs = std::move(t);
    }
    return lhs;
  }

  LabelExpr term() {
    ws();
    if (at("(x)")) fail("missing operand before '(x)'");
    if (eat("(")) {
      LabelExpr e = expr();
      ws();
      expect(")");
      return e;
    }
    LabelExpr e;
    e.label = label();
    if (eat("^*")) e.kind = LabelExpr::Kind::Dual;
    return e;
  }

  int integer() {
    ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail_at("expected an integer", start);
    if (pos_ - digits > 6) fail_at("integer too large", start);
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    ws();
    return v;
  }

  ModuleLabel label() {
    const std::size_t start = pos_;
    try {
      if (eat("V(")) {
        int l = integer();
        expect(",");
        int r = integer();
        expect(")");
        return ModuleLabel::simple(n_, l, r);
      }
      if (eat("P(")) {
        int l = integer();
        expect(",");
        int r = integer();
        expect(")");
        return ModuleLabel::proj(n_, l, r);
      }
      if (eat("Om(")) {
        int m = integer();
        expect(")V(");
        int l = integer();
        expect(",");
        int r = integer();
        expect(")");
        return ModuleLabel::str(n_, m, l, r);
      }
      if (eat("M(")) {
        int s = integer();
        expect(",");
        int l = integer();
        expect(",");
        int r = integer();
        expect(";");
        ExtScalar eta = scalar();
        expect(")");
        return ModuleLabel::band(n_, s, l, r, eta);
      }
    } catch (const std::invalid_argument& e) {
      fail_at(e.what(), start);
    }
    fail("expected a label V(..), P(..), Om(..)V(..) or M(..)");
  }

  // Up to the ')' closing the band label.
  ExtScalar scalar() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (ch == '(') ++depth;
      if (ch == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (pos_ == s_.size()) fail("unterminated band parameter");
    std::string_view text = s_.substr(start, pos_ - start);
    try {
      return parse_ext_scalar(n_, text);
    } catch (const ParseError& e) {
      fail_at("bad scalar '" + std::string(text) + "'", start + e.offset);
    }
  }

  int n_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string print_operand(const LabelExpr& e) {
  std::string s = to_string(e);
  return e.kind == LabelExpr::Kind::Tensor ? "(" + s + ")" : s;
}

ModuleLabel leaf_label(int n, const LabelExpr& e) {
  return e.kind == LabelExpr::Kind::Dual ? dualize_label(n, e.label) : e.label;
}

}  // namespace

LabelExpr parse_expr(int n, std::string_view text) { return ExprParser(n, text).parse(); }

std::string to_string(const LabelExpr& e) {
  switch (e.kind) {
    case LabelExpr::Kind::Label: return to_string(e.label);
    case LabelExpr::Kind::Dual: return to_string(e.label) + "^*";
    case LabelExpr::Kind::Tensor: {
      const LabelExpr& a = e.args[0];
      return (a.kind == LabelExpr::Kind::Tensor ? to_string(a) : print_operand(a)) + " (x) " +
             print_operand(e.args[1]);
    }
  }
  return {};
}

// ---------------------------------------------------------------- evaluation

RulesResult evaluate_rules(int n, const LabelExpr& e) {
  RulesResult out;
  if (e.kind != LabelExpr::Kind::Tensor) {
    out.decomposition[leaf_label(n, e)] = 1;
    return out;
  }
  RulesResult a = evaluate_rules(n, e.args[0]);
  RulesResult b = evaluate_rules(n, e.args[1]);
  out.traces = std::move(a.traces);
  out.traces.insert(out.traces.end(), b.traces.begin(), b.traces.end());
  for (const auto& [x, i] : a.decomposition)
    for (const auto& [y, j] : b.decomposition) {
      auto [D, tr] = decompose_pair(n, x, y);
      for (const auto& [L, k] : D) out.decomposition[L] += i * j * k;
      out.traces.emplace_back(to_string(x) + " (x) " + to_string(y), std::move(tr));
    }
  return out;
}

std::vector<ExtScalar> leaf_etas(const LabelExpr& e) {
  std::vector<ExtScalar> out;
  if (e.kind == LabelExpr::Kind::Tensor) {
    for (const auto& a : e.args)
      for (auto& x : leaf_etas(a)) out.push_back(std::move(x));
  } else if (e.label.kind == LabelKind::Band) {
    out.push_back(e.label.eta);
    // the dual's parameter is −ηq^l; the closure below covers it
  }
  return out;
}

int tensor_depth(const LabelExpr& e) {
  if (e.kind != LabelExpr::Kind::Tensor) return 0;
  return 1 + std::max(tensor_depth(e.args[0]), tensor_depth(e.args[1]));
}

namespace {

std::string escape_filename(const std::string& s) {
  std::ostringstream o;
  for (unsigned char ch : s) {
    if (std::isalnum(ch) || ch == '(' || ch == ')' || ch == ',' || ch == ';' || ch == '-' || ch == '+' || ch == '^')
      o << ch;
    else
      o << '%' << std::hex << std::setw(2) << std::setfill('0') << int(ch) << std::dec;
  }
  return o.str();
}

}  // namespace

Representation cached_construct(int n, const ModuleLabel& L, const std::string& cache_dir) {
  if (cache_dir.empty()) return construct(n, L);
  fs::path dir = fs::path(cache_dir) / ("n" + std::to_string(n));
  fs::path file = dir / (escape_filename(to_string(L)) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
  }
  const Representation& M = construct(n, L);
  fs::create_directories(dir);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream o(tmp);
    o << to_json(M, to_string(L));
  }
  fs::rename(tmp, file);
  return M;
}

Representation evaluate_module(int n, const LabelExpr& e, const std::string& cache_dir) {
  switch (e.kind) {
    case LabelExpr::Kind::Label: return cached_construct(n, e.label, cache_dir);
    case LabelExpr::Kind::Dual: return dual(cached_construct(n, e.label, cache_dir));
    case LabelExpr::Kind::Tensor:
      return tensor(evaluate_module(n, e.args[0], cache_dir), evaluate_module(n, e.args[1], cache_dir));
  }
  throw std::logic_error("unknown expression kind");
}

Decomposition evaluate_oracle(int n, const LabelExpr& e, unsigned seed, const std::string& cache_dir) {
  Representation M = evaluate_module(n, e, cache_dir);
  std::vector<ExtScalar> etas = leaf_etas(e);
  const int rounds = std::max(1, tensor_depth(e));
  for (int i = 0; i < rounds; ++i) etas = eta_closure(n, etas);
  return decompose_oracle(M, candidate_pool(n, static_cast<int>(M.dim()), etas), seed);
}

// ---------------------------------------------------------------- output

json to_json(const RuleTrace& tr) {
  json j;
  j["theorem"] = tr.theorem;
  j["steps"] = tr.steps;
  j["params"] = tr.params;
  return j;
}

json summands_json(int n, const Decomposition& D) {
  json arr = json::array();
  for (const auto& [L, k] : D) arr.push_back({{"label", to_string(L)}, {"mult", k}, {"dim", label_dim(n, L)}});
  return arr;
}

void print_table(std::ostream& out, int n, const Decomposition& D) {
  std::size_t w = 5;
  for (const auto& [L, k] : D) w = std::max(w, to_string(L).size());
  out << std::left << std::setw(int(w)) << "label" << "  mult  dim\n";
  for (const auto& [L, k] : D)
    out << std::left << std::setw(int(w)) << to_string(L) << "  " << std::right << std::setw(4) << k << "  "
        << std::setw(3) << label_dim(n, L) << "\n";
  out << "total dim " << total_dim(n, D) << "\n";
}

namespace {

std::string env_cache(const std::string& flag) {
  const char* env = std::getenv("GREENRING_CACHE");
  return env && *env ? std::string(env) : flag;
}

// Runs f, mapping exceptions to exit codes.
template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const NoMatch& e) {
    err << "no match: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

// 3 <= n, with a warning past the tested range.
void check_n(int n, std::ostream& err) {
  if (n < 3) throw std::invalid_argument("--n must be at least 3");
  if (n > 12) err << "warning: n > 12 is outside the tested range\n";
}

}  // namespace

int cmd_decompose(const DecomposeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.mode != "rules" && o.mode != "oracle" && o.mode != "both")
      throw std::invalid_argument("--mode must be rules, oracle or both");
    check_n(o.n, err);
    LabelExpr e = parse_expr(o.n, o.expr);
    const std::string cache = env_cache(o.cache);

    json j;
    j["n"] = o.n;
    j["expr"] = to_string(e);
    j["mode"] = o.mode;
    std::optional<RulesResult> R;
    std::optional<Decomposition> O;
    if (o.mode != "oracle") R = evaluate_rules(o.n, e);
    if (o.mode != "rules") O = evaluate_oracle(o.n, e, o.seed, cache);
    const Decomposition& shown = R ? R->decomposition : *O;
    j["summands"] = summands_json(o.n, shown);
    if (R) {
      json tr = json::array();
      for (const auto& [what, t] : R->traces) {
        json x = to_json(t);
        x["product"] = what;
        tr.push_back(std::move(x));
      }
      j["trace"] = std::move(tr);
    }
    bool agree = true;
    if (R && O) {
      agree = R->decomposition == *O;
      j["agree"] = agree;
      if (!agree) j["oracle_summands"] = summands_json(o.n, *O);
    }

    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << to_string(e) << " at n=" << o.n << "\n";
      print_table(out, o.n, shown);
      if (R)
        for (const auto& [what, t] : R->traces) {
          out << "rule " << t.theorem << " for " << what;
          for (const auto& s : t.steps) out << "; " << s;
          out << "\n";
        }
      if (R && O) {
        out << (agree ? "oracle agrees\n" : "oracle DISAGREES:\n");
        if (!agree) print_table(out, o.n, *O);
      }
    }
    return agree ? kOk : kMismatch;
  });
}

// ---------------------------------------------------------------- sweep

std::vector<ModuleLabel> sweep_family(int n, int max_m, int max_s, const std::vector<ExtScalar>& etas) {
  std::vector<ModuleLabel> F;
  for (int l = 1; l <= n; ++l)
    for (int r = 0; r < n; ++r) F.push_back(ModuleLabel::simple(n, l, r));
  for (int l = 1; l < n; ++l)
    for (int r = 0; r < n; ++r) F.push_back(ModuleLabel::proj(n, l, r));
  for (int m = 1; m <= max_m; ++m)
    for (int sign : {1, -1})
      for (int l = 1; l < n; ++l)
        for (int r = 0; r < n; ++r) F.push_back(ModuleLabel::str(n, sign * m, l, r));
  for (int s = 1; s <= max_s; ++s)
    for (int l = 1; l < n; ++l)
      for (int r = 0; r < n; ++r)
        for (const auto& eta : etas) F.push_back(ModuleLabel::band(n, s, l, r, eta));
  return F;
}

std::vector<ExtScalar> parse_eta_list(int n, std::string_view text) {
  std::vector<ExtScalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (!item.empty()) {
      try {
        out.push_back(parse_ext_scalar(n, item));
      } catch (const ParseError& e) {
        throw ParseError("bad eta '" + std::string(item) + "'", start + e.offset);
      }
    }
    start = end + 1;
  }
  return out;
}

json to_json(const PairRecord& r) {
  json j{{"a", r.a},           {"b", r.b},         {"theorem", r.theorem}, {"dim", r.dim},
         {"status", r.status}, {"rules", r.rules}, {"oracle", r.oracle},   {"seconds", r.seconds}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

namespace {

PairRecord run_pair(int n, const ModuleLabel& a, const ModuleLabel& b, unsigned seed, const std::string& cache) {
  PairRecord rec;
  rec.a = to_string(a);
  rec.b = to_string(b);
  rec.dim = label_dim(n, a) * label_dim(n, b);
  rec.projective_input = a.is_projective(n) || b.is_projective(n);
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [R, tr] = decompose_pair(n, a, b);
    rec.theorem = tr.theorem;
    rec.rules = to_string(R);
    std::vector<ExtScalar> etas;
    for (const auto* L : {&a, &b})
      if (L->kind == LabelKind::Band) etas.push_back(L->eta);
    Representation M = tensor(cached_construct(n, a, cache), cached_construct(n, b, cache));
    Decomposition O = decompose_oracle(M, candidate_pool(n, rec.dim, eta_closure(n, etas)), seed);
    rec.oracle = to_string(O);
    for (const auto& [L, k] : O) rec.projective_output = rec.projective_output && L.is_projective(n);
    rec.status = O == R ? "agree" : "disagree";
  } catch (const NoMatch& e) {
    rec.status = "error";
    rec.error = std::string("no match: ") + e.what();
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = std::string("internal: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

unsigned pair_seed(unsigned seed, std::size_t index) {
  return seed * 2654435761u + static_cast<unsigned>(index) * 40503u + 1u;
}

}  // namespace

std::vector<PairRecord> run_sweep(const SweepOptions& o) {
  const std::vector<ModuleLabel> F = sweep_family(o.n, o.max_m, o.max_s, parse_eta_list(o.n, o.etas));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i; j < F.size(); ++j) pairs.emplace_back(i, j);
  std::vector<PairRecord> out(pairs.size());
  const std::string cache = env_cache(o.cache);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();)
      out[k] = run_pair(o.n, F[pairs[k].first], F[pairs[k].second], pair_seed(o.seed, k), cache);
  };
  const int jobs = std::max(1, o.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int cmd_verify_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_n(o.n, err);
    if (o.max_m < 0 || o.max_s < 0) throw std::invalid_argument("--max-m and --max-s must be nonnegative");
    auto t0 = std::chrono::steady_clock::now();
    std::vector<PairRecord> recs = run_sweep(o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.report.empty()) {
      std::ofstream rep(o.report);
      if (!rep) throw std::runtime_error("cannot write " + o.report);
      for (const auto& r : recs) rep << to_json(r).dump() << "\n";
    }
    int agree = 0, disagree = 0, errors = 0, internal = 0;
    const PairRecord* first_bad = nullptr;
    std::size_t first_index = 0;
    for (std::size_t k = 0; k < recs.size(); ++k) {
      const auto& r = recs[k];
      if (r.status == "agree") {
        ++agree;
        continue;
      }
      (r.status == "disagree" ? disagree : errors) += 1;
      if (r.error.rfind("internal", 0) == 0) ++internal;
      if (!first_bad) {
        first_bad = &r;
        first_index = k;
      }
    }
    out << "pairs " << recs.size() << "  agree " << agree << "  disagree " << disagree << "  errors " << errors
        << "  (" << std::fixed << std::setprecision(1) << secs << "s)\n";
    if (!first_bad) return kOk;
    out << "first failure: " << first_bad->a << " (x) " << first_bad->b << " [" << first_bad->theorem << "]\n";
    if (!first_bad->error.empty()) out << "  " << first_bad->error << "\n";
    if (first_bad->status == "disagree")
      out << "  rules  " << first_bad->rules << "\n  oracle " << first_bad->oracle << "\n";
    out << "reproduce: greenring decompose --n " << o.n << " --expr \"" << first_bad->a << " (x) " << first_bad->b
        << "\" --mode both --seed " << pair_seed(o.seed, first_index) << "\n";
    return internal > 0 && disagree == 0 ? kInternal : kMismatch;
  });
}

// ---------------------------------------------------------------- dual, dim

int cmd_dual(int n, const std::string& expr, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_n(n, err);
    LabelExpr e = parse_expr(n, expr);
    Decomposition D = dualize(n, evaluate_rules(n, e).decomposition);
    if (as_json) {
      out << json{{"n", n}, {"expr", to_string(e)}, {"dual", summands_json(n, D)}}.dump(2) << "\n";
    } else if (D.size() == 1 && D.begin()->second == 1) {
      out << to_string(D.begin()->first) << "\n";
    } else {
      out << to_string(D) << "\n";
    }
    return kOk;
  });
}

namespace {

long long expr_dim(int n, const LabelExpr& e) {
  if (e.kind == LabelExpr::Kind::Tensor) return expr_dim(n, e.args[0]) * expr_dim(n, e.args[1]);
  return label_dim(n, e.label);
}

}  // namespace

int cmd_dim(int n, const std::string& expr, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_n(n, err);
    LabelExpr e = parse_expr(n, expr);
    long long d = expr_dim(n, e);
    if (as_json)
      out << json{{"n", n}, {"expr", to_string(e)}, {"dim", d}}.dump(2) << "\n";
    else
      out << d << "\n";
    return kOk;
  });
}

}  // namespace greenring
