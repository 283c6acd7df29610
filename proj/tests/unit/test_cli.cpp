#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = quintic::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

void check_header(const json& doc, const char* command, long num, long den) {
  CHECK(doc.at("command") == command);
  CHECK(doc.at("r").at("num") == num);
  CHECK(doc.at("r").at("den") == den);
  CHECK(doc.at("precision_bits") == 512);
  CHECK(doc.at("tol_exp") == 120);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("kr") {
  const Run one = run({"kr", "--r", "1"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "k        = 0.70710678118654752440084436210484903928483593768847"));

  const Run five = run({"kr", "--r", "5", "--digits", "30"});
  CHECK(five.code == 0);
  CHECK(contains(five.out, "k        = 0.118876945802600101192746842842"));

  CHECK(run({"kr", "--r", "0"}).code == 2);
  CHECK(run({"kr", "--r", "abc"}).code == 2);
  CHECK(run({"kr"}).code == 2);
  CHECK(run({"--prec", "40", "kr", "--r", "1"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("kr json carries the same numbers as text") {
  const Run text = run({"kr", "--r", "3/2"});
  const Run js = run({"kr", "--r", "3/2", "--json"});
  REQUIRE(js.code == 0);
  const json doc = js.doc();
  check_header(doc, "kr", 3, 2);
  for (const char* key : {"k", "k_comp", "q", "K", "K_comp", "residual"}) {
    CAPTURE(key);
    REQUIRE(doc.at("modulus").at(key).is_string());
    CHECK(contains(text.out, doc.at("modulus").at(key).get<std::string>()));
  }
}

TEST_CASE("ladder") {
  const Run a = run({"--json", "ladder", "--r0", "5", "--n", "3"});
  REQUIRE(a.code == 0);
  const json doc = a.doc();
  check_header(doc, "ladder", 5, 1);
  const json& levels = doc.at("ladder").at("levels");
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].at("r").at("num") == 125);
  CHECK(levels[1].at("r").at("num") == 3125);
  CHECK(levels[2].at("r").at("num") == 78125);
  for (const auto& level : levels) CHECK(level.at("certified") == true);
  CHECK(doc.at("ladder").at("all_certified") == true);

  const Run b = run({"ladder", "--r0", "25", "--n", "1"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "r = 625"));
  CHECK(contains(b.out, "certified"));

  CHECK(run({"ladder", "--r0", "5", "--n", "0"}).code == 2);
  CHECK(run({"ladder", "--r0", "5", "--seed-k", "zero"}).code == 2);
  CHECK(run({"ladder", "--r0", "1/625"}).code == 4);
}

TEST_CASE("ladder certification failure prints the trace") {
  const Run bad = run({"--json", "ladder", "--r0", "5", "--seed-k", "0.1188"});
  CHECK(bad.code == 4);
  const json doc = bad.doc();
  REQUIRE(doc.at("ladder").at("levels").size() == 1);
  CHECK(doc.at("ladder").at("levels")[0].at("certified") == false);
  CHECK(doc.at("ladder").at("seeds").at("source") == "override");
  CHECK(contains(bad.err, "certification failure"));
}

TEST_CASE("table") {
  const Run t = run({"table", "--r0", "5", "--n", "2"});
  CHECK(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "r,k,residual");
  std::getline(lines, line);
  CHECK(line.rfind("125,9.4398328881141586", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("3125,2.928070743634497", 0) == 0);
}

TEST_CASE("rrcf") {
  for (const char* r : {"1", "4", "5"}) {
    CAPTURE(r);
    const Run res = run({"--json", "rrcf", "--r", r});
    REQUIRE(res.code == 0);
    CHECK(res.doc().at("rrcf").at("agree") == true);
  }
  CHECK(contains(run({"rrcf", "--r", "4"}).out, "0.2840790438404122960282918"));
  CHECK(run({"rrcf", "--r", "-1"}).code == 2);
}

TEST_CASE("verify") {
  const Run all = run({"--json", "verify", "--r", "1"});
  REQUIRE(all.code == 0);
  const json doc = all.doc();
  check_header(doc, "verify", 1, 1);
  CHECK(doc.at("report").at("entries").size() == 16);
  CHECK(doc.at("report").at("all_pass") == true);

  const Run one = run({"--json", "verify", "--r", "5", "--ids", "eq15-depressed"});
  REQUIRE(one.code == 0);
  CHECK(one.doc().at("report").at("entries").size() == 1);

  const Run two = run({"verify", "--r", "2", "--ids", "eq6-eta8,k-reciprocal"});
  CHECK(two.code == 0);
  CHECK(contains(two.out, "2/2 identities pass"));

  const Run bogus = run({"verify", "--r", "5", "--ids", "bogus"});
  CHECK(bogus.code == 2);
  CHECK(contains(bogus.err, "eq5-eta-quotient"));
}

TEST_CASE("audit") {
  const Run a = run({"--json", "audit"});
  REQUIRE(a.code == 0);
  const json rows = a.doc().at("audit");
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.at("canonical_certified") == true);
    CHECK(row.at("verbatim_holds") == false);
  }
}

TEST_CASE("cache hit equals cache miss") {
  TempFile cache("quintic_cli_test_cache.txt");
  {
    std::ofstream seed(cache.path);
    seed << "this is not an entry\n";
  }
  const Run miss = run({"--json", "--cache", cache.path.string(), "kr", "--r", "7"});
  REQUIRE(miss.code == 0);
  CHECK(contains(miss.err, "skipping"));
  CHECK(miss.doc().at("modulus").at("from_cache") == false);

  const Run hit = run({"--json", "--cache", cache.path.string(), "kr", "--r", "7"});
  REQUIRE(hit.code == 0);
  CHECK(hit.doc().at("modulus").at("from_cache") == true);
  CHECK(hit.doc().at("modulus").at("k") == miss.doc().at("modulus").at("k"));
  CHECK(hit.doc().at("modulus").at("k_comp") == miss.doc().at("modulus").at("k_comp"));

  // Stored at 576 working bits; a 1024-bit request must not reuse it.
  const Run wider = run({"--json", "--prec", "1024", "--cache", cache.path.string(), "kr", "--r", "7"});
  REQUIRE(wider.code == 0);
  CHECK(wider.doc().at("modulus").at("from_cache") == false);

  std::ifstream in(cache.path);
  std::string line;
  int entries = 0;
  while (std::getline(in, line)) entries += line.rfind("7/1 ", 0) == 0;
  CHECK(entries == 2);

  const Run ladder_hit = run({"--cache", cache.path.string(), "ladder", "--r0", "5"});
  CHECK(ladder_hit.code == 0);
  const Run ladder_again = run({"--cache", cache.path.string(), "ladder", "--r0", "5"});
  CHECK(ladder_again.out == ladder_hit.out);
}
