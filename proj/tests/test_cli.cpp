#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "jetsym/catalog.hpp"
#include "jetsym/cli.hpp"
#include "jetsym/io.hpp"

using namespace jetsym;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(JETSYM_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("jetsym_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("documented invocations") {
  const auto f = cli({"flags", "--model", "ek", "--k", "3", "--strong"});
  CHECK(f.code == 0);
  CHECK(has(f.out, "strong growth: (2,1,2,3)"));
  CHECK_FALSE(has(f.out, "weak growth"));

  const auto t = cli({"tanaka", "--builtin", "nk", "--k", "4", "--max-degree", "1"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "\ng0: 4, g1: 0\n"));

  const auto u = cli({"flags", "--model", "unknown-name"});
  CHECK(u.code == 2);
  CHECK(has(u.err, "unknown catalog model"));
}

TEST_CASE("invocation errors exit 2") {
  CHECK(cli({"flags", "--model", "ek", "--no-such-flag"}).code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({}).code == 2);
  const auto both = cli({"flags", "--model", "ek", "--file", data("e3.json")});
  CHECK(both.code == 2);
  CHECK(has(both.err, "exactly one model source"));
  CHECK(cli({"flags"}).code == 2);
  CHECK(cli({"reduce", "--model", "hilbert-cartan"}).code == 2);
  CHECK(cli({"flags", "--file", data("missing.json")}).code == 2);
}

TEST_CASE("parse errors carry a position") {
  const auto bad_json = temp_file("bad.json", "{\"chart\": [\"x\", ");
  const auto r = cli({"flags", "--file", bad_json});
  CHECK(r.code == 2);
  CHECK(has(r.err, "at position"));

  const auto bad_expr = temp_file("bad_expr.json", R"({"chart": ["x"], "generators": [{"x": "1 + * x"}]})");
  const auto e = cli({"flags", "--file", bad_expr});
  CHECK(e.code == 2);
  CHECK(has(e.err, "component 'x'"));
  CHECK(has(e.err, "at position 4"));
}

TEST_CASE("model files") {
  const auto e3 = cli({"flags", "--file", data("e3.json")});
  CHECK(e3.code == 0);
  CHECK(has(e3.out, "weak growth: (2,1,2,3)"));

  const auto g = cli({"reduce", "--file", data("goursat_pair.json")});
  CHECK(g.code == 0);
  CHECK(has(g.out, "weak growth: (2,1,1,1)"));

  const auto hc = cli({"symbol", "--file", data("hilbert_cartan.json")});
  CHECK(hc.code == 0);
  CHECK(has(hc.out, "symbol layer dims: (2,1,2)"));

  const auto h = cli({"tanaka", "--file", data("heisenberg.json"), "--max-degree", "2"});
  CHECK(h.code == 0);
  CHECK(has(h.out, "g0: 4, g1: 6, g2: 9"));
  CHECK(has(h.out, "cutoff reached"));
}

TEST_CASE("checks report failures with exit 1") {
  const auto s = cli({"check-symmetry", "--file", data("e3.json"), "--generating-functions", data("e3_generating_functions.json")});
  CHECK(s.code == 1);
  CHECK(has(s.out, "PASS u_x"));
  CHECK(has(s.out, "FAIL u_x u_y"));

  const auto f = cli({"check-symmetry", "--file", data("contact3.json"), "--fields", data("contact3_fields.json")});
  CHECK(f.code == 0);

  CHECK(cli({"nondeg", "--model", "s8-2e2e1"}).code == 1);
  CHECK(cli({"nondeg", "--model", "goursat-pair"}).code == 1);
  CHECK(cli({"nondeg", "--model", "ek", "--k", "3"}).code == 0);
}

TEST_CASE("commutators and gradings") {
  const auto c = cli({"commutators", "--model", "ek", "--k", "3"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "[X, L] = W_2^0"));
  CHECK(has(c.out, "[L, T] = X"));
  CHECK(has(c.out, "[R, T] = S1 - S2"));
  const auto g = cli({"grading", "--model", "ek", "--k", "3"});
  CHECK(g.code == 0);
  CHECK(has(g.out, "grading: pass"));
  CHECK(has(g.out, "bi-grading: pass"));

  CHECK(cli({"grading", "--fields", data("contact3_fields.json"), "--weights", data("contact3_weights.json")}).code == 0);
  const auto w = temp_file("weights.json", R"({"A": -2, "B": -1, "C": -1, "D": 0, "E": 1})");
  CHECK(cli({"grading", "--fields", data("contact3_fields.json"), "--weights", w}).code == 1);
}

TEST_CASE("solver through the command line") {
  const auto s = cli({"solve-sym", "--file", data("contact3.json"), "--degree", "1"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "degree 1: dimension 5"));
  const auto e = cli({"solve-sym", "--model", "ek", "--k", "3"});
  CHECK(has(e.out, "weighted degree 0: dimension 12"));
  const auto b = cli({"solve-sym", "--file", data("contact3.json"), "--degree", "2", "--budget", "10"});
  CHECK(b.code == 2);
  CHECK(has(b.err, "budget exceeded"));
}

TEST_CASE("lbt through the command line") {
  const auto r = cli({"lbt", "--model", "ek", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "rank 12 -> 12, kernel 0 (injective)"));
  CHECK(has(r.out, "image matches the listed basis: yes"));
}

TEST_CASE("catalog lists every model") {
  const auto r = cli({"catalog"});
  CHECK(r.code == 0);
  const std::string out = "\n" + r.out;
  for (const auto& e : catalog_entries())
    CHECK_MESSAGE((has(out, "\n" + e.name + " ") || has(out, "\n" + e.name + ":")), e.name);
}

TEST_CASE("json reports are deterministic and validate") {
  const std::vector<std::string> args = {"symbol", "--model", "ek", "--k", "3", "--seed", "7", "--json"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json doc = parse_json(a.out);
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("result").at("layer_dims") == Json({2, 1, 2, 3}));

  const auto path = temp_file("report.json", a.out);
  const auto v = cli({"validate", path});
  CHECK(v.code == 0);
  CHECK(has(v.out, "valid"));

  Json tampered = doc;
  tampered["result"]["layer_dims"] = Json({2, 1, 2});
  const auto t = cli({"validate", temp_file("tampered.json", tampered.dump())});
  CHECK(t.code == 1);
  CHECK(has(t.out, "/result/layer_dims"));

  CHECK(cli({"validate", temp_file("plain.json", "{\"a\": 1}")}).code == 2);
}

TEST_CASE("file readers") {
  const auto a = lie_algebra_from_json(read_json_file(data("heisenberg.json")));
  CHECK(a.dim() == 3);
  CHECK(a.layer(-1).size() == 2);
  CHECK(lie_algebra_from_json(parse_json(to_json(a).dump())).bracket(0, 1) == a.bracket(0, 1));

  const auto e = equation_from_json(read_json_file(data("e3.json")));
  CHECK(e.order() == 3);
  CHECK(e.value({2, 1}) == ek(3).value({2, 1}));

  // Fields survive printing and re-parsing.
  const auto fields = fields_from_json(read_json_file(data("contact3_fields.json")));
  for (const auto& [name, X] : fields) {
    const Json j = {{"fields", {{{"name", name}, {"components", to_json(X)}}}}};
    CHECK(fields_from_json(j, X.vars())[0].second == X);
  }
  CHECK_THROWS_AS(lie_algebra_from_json(parse_json(R"({"layers": {"-1": ["a", "a"]}})")), Error);
  CHECK_THROWS_AS(equation_from_json(parse_json(R"({"base": ["x", "y"], "order": 2, "top": {"3": "0"}})")), Error);
}
