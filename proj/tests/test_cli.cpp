#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "greenring/cli.hpp"

using namespace greenring;

namespace {

const int n = 3;

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(n, text);
  } catch (const ParseError& e) {
    return e.offset;
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse_expr") {
  LabelExpr e = parse_expr(n, "V(2,0) (x) P(2,0)");
  REQUIRE(e.kind == LabelExpr::Kind::Tensor);
  CHECK(e.args[0].label == ModuleLabel::simple(n, 2, 0));
  CHECK(e.args[1].label == ModuleLabel::proj(n, 2, 0));

  LabelExpr d = parse_expr(n, "M(1,1,0;inf)^*");
  CHECK(d.kind == LabelExpr::Kind::Dual);
  CHECK(d.label == ModuleLabel::band(n, 1, 1, 0, ExtScalar::infinity()));

  CHECK(parse_expr(n, "Om(-2)V(1,2)").label == ModuleLabel::str(n, -2, 1, 2));
  CHECK(parse_expr(n, "M(1,2,0;q^2*(1+q))").label.eta == ExtScalar(pow_q(n, 2) * (FieldElem(1) + FieldElem::q(n))));
  CHECK(parse_expr(n, "V(1,0) \xE2\x8A\x97 V(2,1)").kind == LabelExpr::Kind::Tensor);
  CHECK(parse_expr(n, "P(3,1)").label == ModuleLabel::simple(n, 3, 1));

  LabelExpr g = parse_expr(n, "V(2,0) (x) (V(2,1) (x) V(1,0))");
  CHECK(g.args[1].kind == LabelExpr::Kind::Tensor);
  CHECK(to_string(g) == "V(2,0) (x) (V(2,1) (x) V(1,0))");
  CHECK(to_string(parse_expr(n, "(V(2,0)(x)V(2,1))(x)V(1,0)")) == "V(2,0) (x) V(2,1) (x) V(1,0)");
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("V(2,0) (x) Q(1,0)") == 11);
  CHECK(error_offset("V(2,0") == 5);
  CHECK(error_offset("V(4,0)") == 0);
  CHECK(error_offset("V(2,0) (x) M(1,1,0;q+)") == 21);
  CHECK(error_offset("V(2,0) V(1,0)") == 7);
  CHECK(error_offset("(x) V(1,0)") == 0);
  CHECK(error_offset("M(1,3,0;1)") == 0);
  CHECK(error_offset("Om(1)V(3,0)") == 0);
}

TEST_CASE("print round trips on the sweep family") {
  std::vector<ExtScalar> etas = parse_eta_list(n, "0,1,inf,q^2*(1+q),-1/2+q");
  CHECK(etas.size() == 5);
  for (const auto& L : sweep_family(n, 2, 2, etas)) {
    std::string text = to_string(L);
    CHECK(to_string(parse_expr(n, text)) == text);
    CHECK(parse_expr(n, text).label == L);
  }
  CHECK(sweep_family(n, 2, 2, parse_eta_list(n, "0,1,inf")).size() == 75);
  CHECK(sweep_family(n, 0, 0, {}).size() == 9 + 6);
}

TEST_CASE("decompose command") {
  std::ostringstream out, err;
  DecomposeOptions o;
  o.expr = "V(1,1) (x) V(2,0)";
  o.mode = "both";
  o.json = true;
  CHECK(cmd_decompose(o, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["agree"] == true);
  REQUIRE(j["summands"].size() == 1);
  CHECK(j["summands"][0]["label"] == "V(2,1)");
  CHECK(j["summands"][0]["mult"] == 1);
  CHECK(j["trace"][0]["theorem"] == "Prop 3.1(1)");

  std::ostringstream out2;
  o.expr = "V(2,0) (x) P(2,0)";
  o.mode = "rules";
  CHECK(cmd_decompose(o, out2, err) == 0);
  j = nlohmann::json::parse(out2.str());
  CHECK(j["summands"].size() == 2);
  CHECK(j["summands"][0]["label"] == "V(3,0)");
  CHECK(j["summands"][0]["mult"] == 2);
  CHECK(j["summands"][1]["label"] == "P(1,1)");
  CHECK(j["trace"][0]["theorem"] == "Thm 3.5");

  std::ostringstream out3;
  o.expr = "V(2,0) (x) V(2,0)";
  o.mode = "oracle";
  CHECK(cmd_decompose(o, out3, err) == 0);
  j = nlohmann::json::parse(out3.str());
  CHECK(j["summands"][0]["label"] == "V(1,1)");
  CHECK(j["summands"][1]["label"] == "V(3,0)");
  CHECK_FALSE(j.contains("trace"));

  std::ostringstream out4;
  o.expr = "V(2,0) (x) V(2,1)^* (x) M(1,1,0;1)";
  o.mode = "both";
  CHECK(cmd_decompose(o, out4, err) == 0);
  CHECK(nlohmann::json::parse(out4.str())["agree"] == true);

  std::ostringstream sink;
  o.expr = "V(2,0) (x)";
  CHECK(cmd_decompose(o, sink, sink) == 2);
  o.expr = "V(2,0)";
  o.mode = "fast";
  CHECK(cmd_decompose(o, sink, sink) == 2);
}

TEST_CASE("dual and dim commands") {
  std::ostringstream out, err;
  CHECK(cmd_dual(n, "V(2,0)", false, out, err) == 0);
  CHECK(out.str() == "V(2,2)\n");
  std::ostringstream o2;
  CHECK(cmd_dim(n, "P(1,0)", false, o2, err) == 0);
  CHECK(o2.str() == "6\n");
  std::ostringstream o3;
  CHECK(cmd_dim(n, "M(2,1,0;inf)", false, o3, err) == 0);
  CHECK(o3.str() == "6\n");
  std::ostringstream o4;
  CHECK(cmd_dim(n, "V(2,0) (x) Om(1)V(1,0)", true, o4, err) == 0);
  CHECK(nlohmann::json::parse(o4.str())["dim"] == 10);
  std::ostringstream o5;
  CHECK(cmd_dual(n, "M(1,1,0;1)", false, o5, err) == 0);
  CHECK(o5.str() == "M(1,2,1;-q)\n");
}

TEST_CASE("module cache reloads bit-exactly") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "greenring_cache_test";
  fs::remove_all(dir);
  std::vector<ModuleLabel> labels = {ModuleLabel::proj(n, 1, 2), ModuleLabel::str(n, -2, 2, 1),
                                     ModuleLabel::band(n, 2, 1, 0, ExtScalar(FieldElem::q(n) + FieldElem(1)))};
  for (const auto& L : labels) {
    Representation first = cached_construct(n, L, dir.string());
    Representation again = cached_construct(n, L, dir.string());
    CHECK(to_json(again) == to_json(construct(n, L)));
    CHECK(to_json(first) == to_json(again));
  }
  CHECK(std::distance(fs::directory_iterator(dir / "n3"), fs::directory_iterator{}) == 3);
  fs::remove_all(dir);
}

TEST_CASE("small sweep") {
  SweepOptions o;
  o.max_m = 0;
  o.max_s = 0;
  o.jobs = 2;
  auto recs = run_sweep(o);
  CHECK(recs.size() == 15 * 16 / 2);
  for (const auto& r : recs) CHECK_MESSAGE(r.status == "agree", std::string(r.a + " (x) " + r.b + ": " + r.error));

  std::ostringstream out, err;
  o.max_m = 1;
  o.max_s = 1;
  o.etas = "1";
  o.report = (std::filesystem::temp_directory_path() / "greenring_sweep.jsonl").string();
  CHECK(cmd_verify_sweep(o, out, err) == 0);
  std::ifstream rep(o.report);
  int lines = 0;
  for (std::string line; std::getline(rep, line); ++lines) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["status"] == "agree");
    CHECK_FALSE(j.contains("seed"));
  }
  CHECK(lines == 33 * 34 / 2);
  std::filesystem::remove(o.report);
}

TEST_CASE("n below 3 is rejected") {
  std::ostringstream out, err;
  CHECK(cmd_dim(2, "V(1,0)", false, out, err) == 2);
  CHECK(cmd_dual(2, "V(1,0)", false, out, err) == 2);
  SweepOptions o;
  o.n = 2;
  CHECK(cmd_verify_sweep(o, out, err) == 2);
  DecomposeOptions d;
  d.n = 13;
  d.expr = "V(1,0) (x) V(2,0)";
  std::ostringstream warn;
  CHECK(cmd_decompose(d, out, warn) == 0);
  CHECK(warn.str().find("warning") != std::string::npos);
}
