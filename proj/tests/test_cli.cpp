#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "psl4cd/cli.hpp"
#include "psl4cd/subgroups.hpp"
#include "support.hpp"

using namespace psl4cd;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/psl4cd_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("utility commands print plain text") {
  CHECK(run({"zsigmondy", "13", "4"}).out == "5 17 (smallest 5)\n");
  CHECK(run({"zsigmondy", "2", "6"}).out == "none\n");
  CHECK(run({"factor", "2380"}).out == "2^2 5 7 17\n");
  CHECK(run({"power", "4826809"}).out == "13^6\n");
  const Run not_power = run({"power", "12"});
  CHECK(not_power.code == kExitPass);
  CHECK(not_power.out == "12 is not a perfect power\n");
}

TEST_CASE("malformed utility arguments exit with the usage code") {
  CHECK(run({"factor", "abc"}).code == kExitUsage);
  CHECK(run({"factor"}).code == kExitUsage);
  CHECK(run({"zsigmondy", "13"}).code == kExitUsage);
  CHECK(run({"zsigmondy", "1", "4"}).code == kExitUsage);
  CHECK(run({"zsigmondy", "13", "0"}).code == kExitUsage);
  CHECK(run({"power", "-5"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("invalid q exits with the usage code") {
  const Run not_prime_power = run({"degrees", "--q", "12"});
  CHECK(not_prime_power.code == kExitUsage);
  CHECK(not_prime_power.err.find("NotPrimePower") != std::string::npos);
  CHECK(run({"verify", "--q", "11", "--check", "all"}).code == kExitUsage);
  CHECK(run({"eliminate", "--q", "9"}).code == kExitUsage);
  CHECK(run({"verify", "--q", "200000"}).code == kExitUsage);
  CHECK(run({"verify", "--q-range", "100..13"}).code == kExitUsage);
  CHECK(run({"verify", "--q-range", "24..24"}).code == kExitUsage);
  CHECK(run({"verify", "--q-range", "5..20"}).code == kExitUsage);
  CHECK(run({"verify", "--q-range", "13-20"}).code == kExitUsage);
  CHECK(run({"verify", "--q", "13", "--q-range", "13..20"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", "--q", "13", "--check", "9.9"}).code == kExitUsage);
  CHECK(run({"degrees", "--q", "13", "--mode", "some"}).code == kExitUsage);
  CHECK(run({"--jobs", "0", "verify", "--q", "13"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "verify", "--q", "13"}).code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
  const Run help = run({"--help"});
  CHECK(help.code == kExitPass);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("degrees lists 2379 as q*P3 at q = 13") {
  const Run r = run({"degrees", "--q", "13", "--mode", "certain"});
  REQUIRE(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  bool found = false;
  for (const auto& d : doc["degrees"]) {
    if (d["value"] == "2379") {
      found = true;
      CHECK(d["exprs"] == Json::array({"q*P3"}));
      CHECK(d["conditions"].size() == d["exprs"].size());
    }
  }
  CHECK(found);
}

TEST_CASE("possible degrees at q = 13 have at most 32 nontrivial values") {
  const Run r = run({"degrees", "--q", "13", "--mode", "possible"});
  REQUIRE(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  std::size_t nontrivial = 0;
  for (const auto& d : doc["degrees"]) nontrivial += d["value"] != "1";
  CHECK(nontrivial <= 32);
  CHECK(doc["summary"]["nontrivial"] == nontrivial);
}

TEST_CASE("verify 3.3 at q = 13 reports the consecutive pair") {
  const Run r = run({"verify", "--q", "13", "--check", "3.3"});
  REQUIRE(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["q"] == 13);
  REQUIRE(doc["checks"].size() == 1);
  bool pair = false;
  for (const auto& w : doc["checks"][0]["witnesses"]) {
    const auto& v = w["values"];
    for (std::size_t i = 0; i + 1 < v.size(); ++i) pair = pair || (v[i] == "2379" && v[i + 1] == "2380");
  }
  CHECK(pair);
}

TEST_CASE("single-q verify uses the check schema") {
  const Json doc = Json::parse(run({"verify", "--q", "16"}).out);
  CHECK(doc["tool"] == kToolName);
  CHECK(doc["version"] == kToolVersion);
  REQUIRE(doc["checks"].size() == check_ids().size());
  for (std::size_t i = 0; i < check_ids().size(); ++i) {
    const auto& c = doc["checks"][i];
    CHECK(c["id"] == check_ids()[i]);
    CHECK(c.contains("status"));
    CHECK(c["witnesses"].is_array());
    CHECK(c["details"].is_string());
  }
  CHECK_FALSE(doc.contains("duration_ms"));
}

TEST_CASE("verify accepts comma separated and repeated check ids") {
  const Json doc = Json::parse(run({"verify", "--q", "13", "--check", "3.1,7.4", "--check", "3.1"}).out);
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["id"] == "3.1");
  CHECK(doc["checks"][1]["id"] == "7.4");
}

TEST_CASE("verify over 13..100 passes") {
  const Run r = run({"verify", "--q-range", "13..100", "--check", "all"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  CHECK(doc["q_range"] == "13..100");
  CHECK(doc["results"].size() == prime_powers_in(13, 100).size());
  CHECK(doc["summary"]["fail"] == 0);
}

TEST_CASE("summary counts equal the tally of the contained checks") {
  const Json doc = Json::parse(run({"verify", "--q-range", "13..60"}).out);
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t vacuous = 0;
  for (const auto& r : doc["results"]) {
    for (const auto& c : r["checks"]) {
      ++total;
      pass += c["status"] == "pass";
      vacuous += c["status"] == "vacuous";
    }
  }
  CHECK(doc["summary"]["total"] == total);
  CHECK(doc["summary"]["pass"] == pass);
  CHECK(doc["summary"]["vacuous"] == vacuous);
  CHECK(doc["summary"]["fail"] == total - pass - vacuous);
}

TEST_CASE("eliminate at q = 13 leaves PSL4(13)") {
  const Run r = run({"eliminate", "--q", "13"});
  CHECK(r.code == kExitPass);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["status"] == "pass");
  CHECK(doc["checks"][0]["details"].get<std::string>().find("survivor: PSL4(13)") != std::string::npos);
}

TEST_CASE("eliminate over 13..199 passes") {
  CHECK(run({"eliminate", "--q-range", "13..199"}).code == kExitPass);
}

TEST_CASE("sporadic data file replaces the built-in table") {
  const std::string survivor = temp_file("survivor.txt", "# unbeatable\nX generic_small 1000000000000 2,3\n");
  const Run failing = run({"eliminate", "--q", "13", "--sporadic-data", survivor});
  CHECK(failing.code == kExitFail);
  const Json doc = Json::parse(failing.out);
  CHECK(doc["checks"][0]["status"] == "fail");
  CHECK(failing.out.find("counterexample: unexpected survivors") != std::string::npos);

  const std::string weak = temp_file("weak.txt", "Y many_degrees 100 -\n");
  const Run passing = run({"eliminate", "--q", "13", "--sporadic-data", weak});
  CHECK(passing.code == kExitPass);
  CHECK(passing.out.find("\"Y") != std::string::npos);
  CHECK(passing.out.find("O'N") == std::string::npos);

  const std::string broken = temp_file("broken.txt", "Z many_degrees\n");
  const Run malformed = run({"eliminate", "--q", "13", "--sporadic-data", broken});
  CHECK(malformed.code == kExitUsage);
  CHECK(malformed.err.find("line 1") != std::string::npos);
  CHECK(run({"eliminate", "--q", "13", "--sporadic-data", "/nonexistent/facts.txt"}).code == kExitUsage);
  std::remove(survivor.c_str());
  std::remove(weak.c_str());
  std::remove(broken.c_str());
}

TEST_CASE("reports are byte-stable across runs and job counts") {
  for (const std::string command : {"verify", "eliminate"}) {
    const std::vector<std::string> base = {command, "--q-range", "13..80"};
    const Run first = run(base);
    const Run second = run(base);
    CHECK(first.out == second.out);
    std::vector<std::string> threaded = {"--jobs", "3"};
    threaded.insert(threaded.end(), base.begin(), base.end());
    CHECK(run(threaded).out == first.out);
    std::vector<std::string> md = {"--format", "md"};
    md.insert(md.end(), base.begin(), base.end());
    CHECK(run(md).out == run(md).out);
  }
}

TEST_CASE("global options work after the subcommand") {
  const Run r = run({"verify", "--q", "13", "--check", "3.3", "--format", "md"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("# psl4cd verify q=13", 0) == 0);
  CHECK(r.out.find("| 3.3 | pass |") != std::string::npos);
}

TEST_CASE("timing adds a duration only on request") {
  const Json doc = Json::parse(run({"--timing", "verify", "--q", "13", "--check", "3.1"}).out);
  REQUIRE(doc.contains("duration_ms"));
  CHECK(doc["duration_ms"].get<double>() >= 0.0);
}

TEST_CASE("markdown escapes table separators") {
  RunReport report;
  report.command = "verify";
  report.q = 13;
  CheckReport c;
  c.id = "x";
  c.details = "a|b";
  report.results.push_back({13, {c}});
  CHECK(to_markdown(report).find("| x | pass | a\\|b |") != std::string::npos);
}

TEST_CASE("sweep keeps input order under parallel workers") {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t i = 0; i < 200; ++i) qs.push_back(psl4cd::testing::uniform(1, 1000000));
  for (unsigned jobs : {1U, 2U, 7U, 500U}) {
    const auto out = sweep(qs, [](std::uint64_t q) { return QResult{q * 3, {}}; }, jobs);
    REQUIRE(out.size() == qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) CHECK(out[i].q == qs[i] * 3);
  }
}

TEST_CASE("sweep rethrows a worker exception") {
  const std::vector<std::uint64_t> qs = {1, 2, 3, 4, 5, 6};
  auto work = [](std::uint64_t q) {
    if (q == 4) throw DomainError("boom");
    return QResult{q, {}};
  };
  CHECK_THROWS_AS(sweep(qs, work, 3), DomainError);
  CHECK_THROWS_AS(sweep(qs, work, 1), DomainError);
}

TEST_CASE("parse_q_range") {
  CHECK(parse_q_range("13..499") == std::pair<std::uint64_t, std::uint64_t>{13, 499});
  CHECK(parse_q_range("13..13") == std::pair<std::uint64_t, std::uint64_t>{13, 13});
  CHECK_THROWS_AS(parse_q_range("13.499"), DomainError);
  CHECK_THROWS_AS(parse_q_range("..499"), DomainError);
  CHECK_THROWS_AS(parse_q_range("20..13"), DomainError);
}

TEST_CASE("tables command emits every row") {
  const Json doc = Json::parse(run({"tables"}).out);
  CHECK(doc["degree_rows"].size() == psl4_degree_rows().size());
  CHECK(doc["subgroup_rows"].size() == dump_subgroup_rows().size());
}
