#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "stallings/equations.hpp"
#include "stallings/equivalence.hpp"
#include "stallings/io.hpp"

using namespace stallings;
using namespace fixtures;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STALLINGS_DATA_DIR) + "/" + name; }

nlohmann::json report(const Result& r) { return nlohmann::json::parse(r.out); }

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "stallings_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"eqw", data("pg_am.json"), "-u", "x,y", "-v", "X,Y"}).code == cli::kTrue);
  CHECK(run({"eqw", data("pg_dinf.json"), "-u", "a,b", "-v", "b,a"}).code == cli::kFalse);
  CHECK(run({"sat", data("z3_pregroup.json"), "-f", "exists x . x != x"}).code == cli::kFalse);
  CHECK(run({"sat", data("z3_pregroup.json"), "-f", "exists x . x = 1"}).code == cli::kTrue);
  CHECK(run({"check", data("hnn_z2.json")}).code == cli::kTrue);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"check", data("missing.json")}).code == cli::kInputError);
  CHECK(run({"reduce", data("pg_dinf.json"), "-w", "a,zz"}).code == cli::kInputError);
  CHECK(run({"sat", data("z3_pregroup.json"), "-f", "exists x . M(x)"}).code == cli::kInputError);
  CHECK(run({"sat", data("z3_pregroup.json"), "-f", "x = 1"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verdicts match the library") {
  const auto& d = pg_dinf();
  auto r = run({"reduce", data("pg_dinf.json"), "-w", "a,a,b"});
  CHECK(report(r)["reduced"] == format_word(d, reduce(d, w(d, "a,a,b"))));

  r = run({"mul", data("pg_dinf.json"), "-u", "a,b", "-v", "b,a"});
  CHECK(report(r)["product"] == "1");
  r = run({"inv", data("pg_am.json"), "-u", "x,y"});
  CHECK(report(r)["verdict"] == "ok");
  CHECK(report(r)["inverse"] == u_inv(canonical(pg_am(), w(pg_am(), "x,y"))).str());

  r = run({"check", data("pg_am.json")});
  CHECK(report(r)["verdict"] == "true");

  r = run({"iso", data("pg_dinf.json"), data("pg_dinf.json"), "--subset", "a"});
  CHECK(r.code == cli::kTrue);
  r = run({"iso", data("pg_dinf.json"), data("z3_pregroup.json"), "--subset", "a"});
  CHECK(r.code == cli::kFalse);

  r = run({"charform", data("pg_dinf.json"), "--subset", "a"});
  auto expected = characteristic_sentence(d.structure(), {d.element("a")});
  CHECK(parse_formula(report(r)["sentence"].get<std::string>(), pregroup_signature()) == expected);
  r = run({"charform", data("pg_dinf.json"), "--subset", "a", "--in", data("z3_pregroup.json")});
  CHECK(r.code == cli::kFalse);

  r = run({"variety", data("z3_group.json"), "-e", "x*x = y"});
  CHECK(report(r)["solutions"].size() == 3);
  r = run({"core", data("z3_group.json"), "-e", "x = x", "-e", "x*x = y", "-e", "(x*x)*0 = y"});
  CHECK(report(r)["core"].size() == 1);

  r = run({"transfer", data("pg_am.json"), data("pg_am.json"), "--words", "x,y;X,Y"});
  CHECK(r.code == cli::kTrue);
  CHECK(report(r)["verdict"] == "pass");
  r = run({"transfer", data("pg_dinf.json"), data("z3_pregroup.json"), "--words", "a"});
  CHECK(r.code == cli::kFalse);

  r = run({"harness", data("specs/hnn_z2.json"), data("specs/hnn_z2.json"), "--subset-size", "2"});
  CHECK(r.code == cli::kTrue);
}

TEST_CASE("construct writes a structure and a sidecar") {
  auto dir = scratch_dir();
  auto out = dir / "am.json";
  auto r = run({"-o", out.string(), "construct", "amalgam", data("specs/amalgam_z4_z4.json")});
  REQUIRE(r.code == cli::kTrue);
  auto doc = load_structure_document(out);
  auto p = spregroup_from_document(doc);
  CHECK(p.structure().carrier() == pg_am().structure().carrier());
  auto side = nlohmann::json::parse(read_text_file(dir / "am.sidecar.json"));
  CHECK(side["B:c"] == "c");
  CHECK(read_text_file(out) == read_text_file(data("pg_am.json")));
}

TEST_CASE("outputs are deterministic and --pretty is plain text") {
  std::vector<std::string> args{"transfer", data("pg_am.json"), data("pg_am.json"), "--words", "x,y;y"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> h{"harness", data("specs/free_z2_z2.json"), data("specs/free_z2_z2.json")};
  CHECK(run(h).out == run(h).out);
  auto pretty = run({"--pretty", "eqw", data("pg_am.json"), "-u", "x,y", "-v", "X,Y"});
  CHECK(pretty.out.rfind("verdict: true", 0) == 0);
}
