#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cuboid/cli.hpp"
#include "cuboid/emit.hpp"

using namespace cuboid;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

Json load_schema(const std::string& name) {
  std::ifstream f(std::string(SCHEMA_DIR) + "/" + name);
  REQUIRE(f.good());
  return Json::parse(f);
}

void check_schema(const Json& doc, const std::string& schema_name) {
  std::string why;
  bool ok = json_matches_schema(doc, load_schema(schema_name), &why);
  CAPTURE(schema_name);
  CAPTURE(why);
  CHECK(ok);
}

}  // namespace

TEST_CASE("missing required flag: exit 2 with help text") {
  Run r = run({"enclose", "--p-tilde", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--q-tilde") != std::string::npos);
}

TEST_CASE("unknown subcommand: exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("scan") != std::string::npos);
}

TEST_CASE("poly json matches its schema") {
  Run r = run({"poly", "--kind", "transformed"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "poly.json");
  CHECK(doc["monomials"] == 108);
}

TEST_CASE("derive json matches its schema and the published field names") {
  Run r = run({"derive", "--family", "T3"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "derive.json");
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["family"] == "T3");
  CHECK(doc[0]["tail_monomials"] == 490);
  CHECK(doc[0]["tail_sha256"].get<std::string>().size() == 64);
}

TEST_CASE("newton json matches its schema") {
  Run r = run({"newton"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "newton.json");
  CHECK(doc["exponents"] == Json::array({"2", "4", "6"}));
}

TEST_CASE("enclose json matches its schema") {
  Run r = run({"enclose", "--p-tilde", "1", "--q-tilde", "3600", "--B", "1"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "enclose.json");
  REQUIRE(doc.size() == 5);
  for (const auto& rec : doc) CHECK(rec["applicable"] == true);
}

TEST_CASE("enclose tsv output") {
  Run r = run({"enclose", "--p-tilde", "1", "--q-tilde", "10", "--B", "1",
               "--format", "tsv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("family\tapplicable") != std::string::npos);
  CHECK(r.out.find("T3\t1\treal\t10006/1+0/1*sqrt2") != std::string::npos);
}

TEST_CASE("certify json matches its schema; single family exits 0") {
  Run r = run({"certify", "--family", "T5", "--B", "3"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "certify.json");
  for (const auto& rec : doc) CHECK(rec["verdict"] == "certified");
}

TEST_CASE("roots json matches its schema") {
  Run r = run({"roots", "--p-tilde", "1", "--q-tilde", "40", "--B", "2",
               "--width", "1e-3"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "roots.json");
}

TEST_CASE("regions json matches its schema") {
  Run r = run({"regions", "--p", "60", "--q", "2"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  check_schema(doc, "regions.json");
  CHECK(doc["linear"] == true);
}

TEST_CASE("scan writes schema-conforming jsonl and a summary") {
  Run r = run({"scan", "--B", "3", "--q-from", "3600", "--q-to", "3600"});
  REQUIRE(r.code == 0);
  // stdout carries the jsonl lines followed by the summary object
  std::istringstream is(r.out);
  std::string line;
  Json line_schema = load_schema("certificate.json");
  int lines = 0;
  std::string rest;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '{' && line.back() == '}') {
      Json doc = Json::parse(line);
      std::string why;
      bool ok = json_matches_schema(doc, line_schema, &why);
      CAPTURE(why);
      CHECK(ok);
      ++lines;
    } else {
      rest += line;
    }
  }
  CHECK(lines >= 5);
  Json summary = Json::parse(rest);
  check_schema(summary, "scan_summary.json");
  CHECK(summary["certified_points"] == summary["points"]);
}

TEST_CASE("identical configuration yields byte-identical output") {
  std::vector<std::string> cfg{"certify", "--family", "T3"};
  Run a = run(cfg), b = run(cfg);
  CHECK(a.out == b.out);
  std::vector<std::string> scan_cfg{"scan", "--B", "2", "--q-from", "3600", "--q-to", "3601"};
  std::vector<std::string> scan_cfg8 = scan_cfg;
  scan_cfg8.push_back("--workers");
  scan_cfg8.push_back("8");
  CHECK(run(scan_cfg).out == run(scan_cfg8).out);
}

TEST_CASE("svg emitters produce well-formed documents") {
  Run r = run({"newton", "--svg", "/tmp/cuboid_newton_test.svg", "--out", "/dev/null"});
  REQUIRE(r.code == 0);
  std::ifstream f("/tmp/cuboid_newton_test.svg");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("<svg") == 0);
  CHECK(ss.str().rfind("</svg>") != std::string::npos);

  Run r2 = run({"regions", "--svg", "/tmp/cuboid_regions_test.svg", "--max-q", "12"});
  REQUIRE(r2.code == 0);
  std::ifstream f2("/tmp/cuboid_regions_test.svg");
  std::stringstream ss2;
  ss2 << f2.rdbuf();
  CHECK(ss2.str().find("<svg") == 0);
  CHECK(ss2.str().find("#ffc0cb") != std::string::npos);  // nonlinear pink present
}

TEST_CASE("ancillary export through the cli") {
  Run r = run({"derive", "--family", "T3", "--ancillary", "/tmp/cuboid_anc_test.txt",
               "--out", "/dev/null"});
  REQUIRE(r.code == 0);
  std::ifstream f("/tmp/cuboid_anc_test.txt");
  int tail_lines = 0, headers = 0;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') ++headers;
    else ++tail_lines;
  }
  CHECK(tail_lines == 490);
  CHECK(headers == 2);
}
