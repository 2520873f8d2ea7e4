#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qlogic/cli.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(args); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("ks on the Cabello fixture finds no assignment") {
  const auto r = run({"ks", "--file", qtest::fixture("cabello18.scenario")});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["result"]["count"] == 0);
  CHECK(r.report["verdict"] == true);
}

TEST_CASE("the counit on the blocks of MO2 is an isomorphism") {
  const auto r = run({"counit", "--lattice", "mo2", "--ideal", "blocks"});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["verdict"] == true);
  const auto single = run({"counit", "--lattice", "mo2", "--ideal", "block:0", "--assert"});
  CHECK(single.exit_code == kExitAssert);
  CHECK(single.report["verdict"] == false);
  CHECK_FALSE(single.report["counterexamples"].empty());
}

TEST_CASE("check rejects broken.json with the validation exit code") {
  const auto r = run({"check", "--lattice", qtest::fixture("broken.json")});
  CHECK(r.exit_code == kExitValidation);
  CHECK(r.report["error"]["kind"] == "ValidationError");
  CHECK(r.report["verdict"] == false);
}

TEST_CASE("exit codes by error family") {
  CHECK(run({}).exit_code == kExitUsage);
  CHECK(run({"frobnicate"}).exit_code == kExitUsage);
  CHECK(run({"check", "--lattice", "mo2", "--colour", "red"}).exit_code == kExitUsage);
  CHECK(run({"check", "--lattice", "/nonexistent.json"}).exit_code == kExitParse);
  CHECK(run({"ks", "--file", qtest::fixture("mo2.greechie")}).exit_code == kExitParse);
  CHECK(run({"check", "--lattice", qtest::fixture("o6.json")}).exit_code == kExitValidation);
  CHECK(run({"homs", "--source", "2^6", "--target", "2"}).exit_code == kExitSizeBound);
  CHECK(run({"ks", "--file", qtest::fixture("two_contexts.scenario"), "--assert"}).exit_code == kExitAssert);
  CHECK(run({"scenario", "--b", "2"}).exit_code == kExitSemantic);
  CHECK(run({"omega", "--atoms", "3"}).exit_code == kExitSemantic);
}

TEST_CASE("every error kind has a distinct family") {
  CHECK(exit_code_for(ErrorKind::UsageError) == 1);
  CHECK(exit_code_for(ErrorKind::ParseError) == 2);
  CHECK(exit_code_for(ErrorKind::ValidationError) == 3);
  CHECK(exit_code_for(ErrorKind::SizeBound) == 4);
  for (auto k : {ErrorKind::ClosureFailure, ErrorKind::NotAPartialOrder, ErrorKind::NonInjectiveCover,
                 ErrorKind::NotLocalized, ErrorKind::ScenarioMismatch, ErrorKind::ZeroConditioningEvent})
    CHECK(exit_code_for(k) == kExitSemantic);
}

TEST_CASE("help is not an error") {
  const auto r = run({"--help"});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.human.find("counit") != std::string::npos);
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> commands{
      {"check", "--lattice", "mo3"},
      {"blocks", "--lattice", qtest::fixture("g12.greechie")},
      {"homs", "--source", "2^2", "--target", "mo2", "--list"},
      {"frames", "--lattice", "mo2", "--list"},
      {"colimit", "--representable", "2"},
      {"colimit", "--lattice", "mo2"},
      {"counit", "--lattice", "mo3", "--ideal", "blocks"},
      {"cocycles", "--lattice", "mo3", "--ideal", "blocks"},
      {"omega"},
      {"truth"},
      {"classify", "--lattice", "mo2", "--block", "0", "--ideal", "blocks"},
      {"scenario"},
      {"ks", "--file", qtest::fixture("peres_mermin24.scenario")},
      {"states", "--lattice", "mo2", "--constraint", "a = 1", "--constraint", "b = 1"},
      {"lueders", "--file", qtest::fixture("superposition.json")},
      {"lueders", "--file", qtest::fixture("superposition_complex.json")},
      {"lueders", "--example"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const auto r = run(args);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["schema"] == kReportSchema);
    CHECK(r.report["command"] == args[0]);
    CHECK(r.report["inputs"]["digest"].get<std::string>().size() == 16);
    CHECK(r.report.contains("verdict"));
  }
}

TEST_CASE("reported values") {
  CHECK(run({"homs", "--source", "2^2", "--target", "mo2"}).report["result"]["count"] == 6);
  CHECK(run({"lueders", "--file", qtest::fixture("superposition.json")}).report["result"]["value"] == "1/2");
  CHECK(run({"truth"}).report["result"]["criterion_holds"] == 8);
  const auto states = run({"states", "--lattice", "mo2", "--constraint", "a + a* <= 1/2"});
  CHECK(states.report["verdict"] == false);
  CHECK(states.report["result"].contains("certificate"));
}

TEST_CASE("reports are byte-identical across runs and match the --json file") {
  const auto path = (std::filesystem::temp_directory_path() / "qlogic_cli_report.json").string();
  const std::vector<std::string> args{"cocycles", "--lattice", qtest::fixture("mo3.greechie"), "--ideal", "blocks",
                                      "--json", path};
  const auto first = run(args);
  const auto written = slurp(path);
  const auto second = run(args);
  CHECK(first.report_text() == second.report_text());
  CHECK(written == first.report_text());
  CHECK(slurp(path) == written);
  std::remove(path.c_str());
}

TEST_CASE("the digest covers the input files") {
  const auto a = run({"check", "--lattice", qtest::fixture("mo2.json")});
  const auto b = run({"check", "--lattice", qtest::fixture("mo2.greechie")});
  CHECK(a.report["inputs"]["digest"] != b.report["inputs"]["digest"]);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

// Required keys and closed objects, as declared in the shipped schema.
TEST_CASE("reports follow the shipped schema") {
  const auto schema = nlohmann::json::parse(slurp(std::string(QLOGIC_FIXTURES) + "/../schema/report.schema.json"));
  auto conforms = [](const nlohmann::ordered_json& value, const nlohmann::json& s) {
    for (const auto& key : s["required"])
      if (!value.contains(key.get<std::string>())) return false;
    for (const auto& [key, _] : value.items())
      if (!s["properties"].contains(key)) return false;
    return true;
  };
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--lattice", "mo2"}, {"check", "--lattice", qtest::fixture("broken.json")}, {"frobnicate"}, {"truth"}}) {
    CAPTURE(args[0]);
    const auto r = run(args);
    CHECK(r.report["schema"] == schema["properties"]["schema"]["const"]);
    CHECK(conforms(r.report, schema));
    CHECK(conforms(r.report["inputs"], schema["properties"]["inputs"]));
    if (r.report.contains("error")) CHECK(conforms(r.report["error"], schema["properties"]["error"]));
  }
}
