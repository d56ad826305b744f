#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult raw_run(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return raw_run(std::string(ISA_CLI_PATH) + " " + args + " 2>/dev/null");
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "isa_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

Json strip_timing(Json j) {
  if (j.contains("members"))
    for (auto& m : j["members"]) m.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("gen round-trips through validate with exit 0") {
  auto dir = temp_dir();
  auto path = (dir / "b22.json").string();
  CHECK(run("gen brandt --group cyclic:2 --index 2 --out " + path).code == 0);
  auto r = run("validate " + path);
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["order"] == 9);

  CHECK(run("gen symmetric-inverse --n 2 --out " + (dir / "si2.json").string()).code == 0);
  auto si = Json::parse(run("validate " + (dir / "si2.json").string()).out);
  CHECK(si["order"] == 7);

  CHECK(run("gen semilattice-chain --n 3 --out " + (dir / "chain3.json").string()).code == 0);
  CHECK(run("validate " + (dir / "chain3.json").string()).code == 0);

  CHECK(run("gen product --left cyclic:2 --right chain:2 --out " +
            (dir / "prod.json").string()).code == 0);
  CHECK(Json::parse(run("validate " + (dir / "prod.json").string()).out)["order"] == 4);

  CHECK(run("gen clifford --group cyclic:2 --levels 2 --out " +
            (dir / "cliff.json").string()).code == 0);
  CHECK(Json::parse(run("validate " + (dir / "cliff.json").string()).out)["order"] == 4);
}

TEST_CASE("gen rejects unknown families and bad parameters") {
  CHECK(run("gen frobnicate").code == 2);
  CHECK(run("gen group --spec cyclic:0").code == 2);
  CHECK(run("gen group --spec dihedral:3").code == 2);
  CHECK(run("gen brandt --group chain:2 --index 2").code == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("analyze").code == 2);
}

TEST_CASE("validate distinguishes axiom violations from malformed input") {
  auto dir = temp_dir();
  auto left_zero = dir / "left_zero.json";
  write_file(left_zero, R"({"name":"lz","order":2,"table":[[0,0],[1,1]]})");
  auto r = run("validate " + left_zero.string());
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"] == "NonUniqueInverse");

  auto not_square = dir / "not_square.json";
  write_file(not_square, R"({"name":"bad","table":[[0,1],[1]]})");
  CHECK(run("validate " + not_square.string()).code == 2);

  auto not_json = dir / "not_json.json";
  write_file(not_json, "не[json");
  CHECK(run("validate " + not_json.string()).code == 2);

  CHECK(run("validate " + (dir / "missing.json").string()).code == 2);
}

TEST_CASE("analyze emits certificates with the documented exit codes") {
  auto dir = temp_dir();
  auto z4 = dir / "z4.json";
  REQUIRE(run("gen group --spec cyclic:4 --out " + z4.string()).code == 0);

  auto mean = run("analyze " + z4.string() + " --what mean");
  CHECK(mean.code == 0);
  auto mj = Json::parse(mean.out);
  CHECK(mj["feasible"] == true);
  CHECK(mj["certificate"]["mu"].size() == 4);

  auto all = run("analyze " + z4.string() + " --what all");
  CHECK(all.code == 0);
  auto aj = Json::parse(all.out);
  CHECK(aj["mean_feasible"] == true);
  CHECK(aj["classical_diagonal"] == true);
  CHECK(aj["module_diagonal"] == true);
  CHECK(aj["h1_regular"] == 0);
  CHECK(aj["pushforward_ok"] == true);
  CHECK(aj["crosscheck_ok"] == true);

  auto b22 = dir / "b22a.json";
  REQUIRE(run("gen brandt --group cyclic:2 --index 2 --out " + b22.string()).code == 0);
  auto dm = run("analyze " + b22.string() + " --what diagonal-module");
  CHECK(dm.code == 0);
  CHECK(Json::parse(dm.out)["feasible"] == true);

  // The algebra of the 9-element Brandt semigroup is unital and semisimple,
  // so the classical system is feasible as well.
  auto dc = run("analyze " + b22.string() + " --what diagonal-classical");
  CHECK(dc.code == 0);
  auto dcj = Json::parse(dc.out);
  CHECK(dcj["feasible"] == true);
  CHECK(dcj["certificate"]["residuals"].empty());

  auto one_sided = run("analyze " + b22.string() + " --what diagonal-classical --one-sided-omega");
  CHECK(one_sided.code == 0);
  CHECK(Json::parse(one_sided.out)["feasible"] == true);

  auto gi = run("analyze " + b22.string() + " --what group-image");
  CHECK(gi.code == 0);
  auto gij = Json::parse(gi.out);
  CHECK(gij["classes"].size() == 1);           // the zero collapses everything
  CHECK(gij["quotient_table"] == Json::parse("[[0]]"));

  auto h1 = run("analyze " + z4.string() + " --what h1");
  CHECK(h1.code == 0);
  auto h1j = Json::parse(h1.out);
  CHECK(h1j["dim_H1"] == 0);
  CHECK(h1j["derivations"] == "linear");

  auto right_mean = run("analyze " + b22.string() + " --what mean --side right");
  CHECK(right_mean.code == 0);
  CHECK(Json::parse(right_mean.out)["side"] == "right");

  CHECK(run("analyze " + (dir / "nonexistent.json").string() + " --what mean").code == 2);
}

TEST_CASE("report walks a corpus directory, tolerating invalid members") {
  auto dir = temp_dir() / "corpus";
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(dir)) fs::remove(e.path());
  REQUIRE(run("gen group --spec cyclic:3 --out " + (dir / "a_z3.json").string()).code == 0);
  REQUIRE(run("gen semilattice-chain --n 2 --out " + (dir / "b_chain.json").string()).code == 0);
  write_file(dir / "c_bad.json", R"({"name":"lz","table":[[0,0],[1,1]]})");

  auto r = run("report --corpus " + dir.string());
  CHECK(r.code == 1);  // the invalid member fails the run, others complete
  auto j = Json::parse(r.out);
  REQUIRE(j["members"].size() == 3);
  CHECK(j["members"][0]["valid"] == true);
  CHECK(j["members"][1]["valid"] == true);
  CHECK(j["members"][2]["valid"] == false);
  CHECK(j["ok"] == false);

  fs::remove(dir / "c_bad.json");
  auto good = run("report --corpus " + dir.string());
  CHECK(good.code == 0);
  CHECK(Json::parse(good.out)["ok"] == true);

  auto empty_dir = temp_dir() / "empty_corpus";
  fs::create_directories(empty_dir);
  auto er = run("report --corpus " + empty_dir.string());
  CHECK(er.code == 0);
  CHECK(Json::parse(er.out)["members"].empty());
}

TEST_CASE("report output is deterministic apart from timings") {
  auto dir = temp_dir() / "det_corpus";
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(dir)) fs::remove(e.path());
  REQUIRE(run("gen group --spec cyclic:2 --out " + (dir / "z2.json").string()).code == 0);
  REQUIRE(run("gen brandt --group cyclic:1 --index 2 --out " + (dir / "b.json").string()).code ==
          0);
  auto r1 = run("report --corpus " + dir.string());
  auto r2 = run("report --corpus " + dir.string());
  CHECK(strip_timing(Json::parse(r1.out)) == strip_timing(Json::parse(r2.out)));
}

TEST_CASE("the order cap rejects oversize semigroups") {
  auto dir = temp_dir();
  auto path = (dir / "si4.json").string();
  // Order 209 exceeds the default cap of 40.
  CHECK(run("gen symmetric-inverse --n 4 --out " + path).code == 2);
  // Raising the cap lets the same member through gen and validate.
  auto gen = raw_run("ISA_MAX_ORDER=250 " + std::string(ISA_CLI_PATH) +
                     " gen symmetric-inverse --n 4 --out " + path + " 2>/dev/null");
  CHECK(gen.code == 0);
  auto ok = raw_run("ISA_MAX_ORDER=250 " + std::string(ISA_CLI_PATH) + " validate " + path +
                    " 2>/dev/null");
  CHECK(ok.code == 0);
  CHECK(run("validate " + path).code == 2);
}
