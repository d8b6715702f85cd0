#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mpk/driver.hpp"
#include "mpk/parser.hpp"
#include "testing.hpp"

using namespace mpk;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class Cmd>
Run run(Cmd cmd, const std::string& path, const Options& o = {}) {
  std::ostringstream out, err;
  int code = cmd(path, o, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("mpk_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("check") {
  Options il;
  il.system = System::IL_EM1;
  Run ok = run(cmd_check, testing::corpus("mp_from_em1.pf"), il);
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("ok: ", 0) == 0);

  Options hmp;
  hmp.system = System::IL_HMP;
  hmp.json = true;
  Run bad = run(cmd_check, testing::corpus("mp_from_em1.pf"), hmp);
  CHECK(bad.code == kExitFailure);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j["ok"] == false);
  CHECK(j["error"]["code"] == "BadSystemConstruct");
  CHECK(j["error"]["path"].get<std::string>().size() > 1);
  CHECK(j["error"].contains("message"));

  fs::path d = scratch("check");
  write(d / "syntax.pf", "goal Q;\nproof (x");
  Run parse = run(cmd_check, (d / "syntax.pf").string());
  CHECK(parse.code == kExitParse);
  CHECK(parse.err.find("2:") != std::string::npos);
  Run missing = run(cmd_check, (d / "nope.pf").string());
  CHECK(missing.code == kExitParse);
}

TEST_CASE("normalize and extract") {
  Options tr;
  tr.trace = true;
  Run n = run(cmd_normalize, testing::corpus("rec_demo.pf"), tr);
  CHECK(n.code == kExitOk);
  CHECK(n.out.find("rec-succ") != std::string::npos);
  CHECK(n.out.find("rec-zero") != std::string::npos);

  Options low;
  low.fuel = 2;
  CHECK(run(cmd_normalize, testing::corpus("rec_demo.pf"), low).code == kExitFuel);
  CHECK(run(cmd_extract, testing::corpus("rec_exists.pf"), low).code == kExitFuel);

  Run x = run(cmd_extract, testing::corpus("two_witness.pf"));
  CHECK(x.code == kExitOk);
  CHECK(x.out == "a\nb\na\n");

  // the emitted disjunction is itself a checkable proof file
  fs::path d = scratch("extract");
  Options em;
  em.emit_disjunction = (d / "disj.pf").string();
  REQUIRE(run(cmd_extract, testing::corpus("two_witness.pf"), em).code == kExitOk);
  Run back = run(cmd_check, em.emit_disjunction->c_str());
  CHECK(back.code == kExitOk);
  ProofFile pf = parse_proof_file(read_file(*em.emit_disjunction));
  CHECK(pf.goal->kind == FormulaKind::Or);

  // a disjunction goal is not extractable
  CHECK(run(cmd_extract, testing::corpus("ha_disj.pf")).code == kExitFailure);
}

TEST_CASE("eval") {
  Options o;
  o.model = testing::corpus("semantics/p_is_a.model");
  Run t = run(cmd_eval, testing::corpus("semantics/two_models.f"), o);
  CHECK(t.code == kExitOk);
  CHECK(t.out == "true\n");
  o.model = testing::corpus("semantics/p_is_b.model");
  CHECK(run(cmd_eval, testing::corpus("semantics/two_models.f"), o).out == "false\n");
  CHECK(run(cmd_eval, testing::corpus("semantics/two_models.f")).code == kExitFailure);
}

TEST_CASE("corpus run, JSON round trip and a corrupted copy") {
  RunReport r = cmd_corpus(MPK_CORPUS_DIR, {});
  CHECK(r.failed == 0);
  CHECK(r.passed == r.files.size());
  CHECK(r.files.size() >= 10);
  CHECK(std::is_sorted(r.files.begin(), r.files.end(),
                       [](const FileReport& a, const FileReport& b) { return a.path < b.path; }));

  nlohmann::json j = to_json(r);
  RunReport back = run_report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back) == j);
  j["total"] = 1;
  CHECK_THROWS(run_report_from_json(j));
  CHECK_THROWS(run_report_from_json(nlohmann::json{{"files", 3}}));

  // the same report twice: no timestamps
  CHECK(to_json(cmd_corpus(MPK_CORPUS_DIR, {})).dump() == to_json(r).dump());

  fs::path d = scratch("corpus");
  for (const auto& e : fs::directory_iterator(MPK_CORPUS_DIR))
    if (e.path().extension() == ".pf") fs::copy_file(e.path(), d / e.path().filename());
  std::string text = read_file((d / "two_witness.pf").string());
  auto at = text.find("hypo[P(b)]");
  REQUIRE(at != std::string::npos);
  text.replace(at, 10, "hypo[P(a)]");
  write(d / "two_witness.pf", text);
  RunReport c = cmd_corpus(d.string(), {});
  REQUIRE(c.failed == 1);
  for (const auto& f : c.files) CHECK(f.ok() == (fs::path(f.path).filename() != "two_witness.pf"));
  std::ostringstream out;
  CHECK(print_corpus(c, {}, out) == kExitFailure);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("default fuel from the environment") {
  setenv("MPK_FUEL", "17", 1);
  CHECK(default_fuel() == 17);
  setenv("MPK_FUEL", "x", 1);
  CHECK(default_fuel() == kDefaultFuel);
  unsetenv("MPK_FUEL");
  CHECK(default_fuel() == kDefaultFuel);
}
