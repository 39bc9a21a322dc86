#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "captower/catalog.hpp"
#include "commands.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("captower_cli_" + name)).string();
}

}  // namespace

TEST_CASE("ap") {
  Run r = run({"ap", "--group", "81_4"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "(444;4)"));
  CHECK(has(r.out, "[(9,3)^3;(9,3)]"));
  CHECK(has(r.out, "Distinguished"));
  Run t = run({"ap", "--group", "trivial"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "pattern empty"));
  CHECK(run({"ap", "--group", "no_such_group"}).code == 4);
  CHECK(run({"ap", "--group", "81_4", "--emit", "xml"}).code == 4);
  CHECK(run({}).code == 4);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cover and aut") {
  Run c = run({"cover", "--group", "729_9"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "multiplicator    5"));
  CHECK(has(c.out, "nucleus          3"));
  Run a = run({"aut", "--group", "81_4"});
  CHECK(a.code == 0);
  CHECK(has(a.out, "486"));
  CHECK(has(a.out, "S3"));
}

TEST_CASE("descend") {
  Run r = run({"descend", "--group", "729_9", "--step", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "step 1: 15 descendants"));
  CHECK(run({"descend", "--group", "729_9", "--step", "1", "--budget", "1"}).code == 3);
}

TEST_CASE("tree") {
  Run t = run({"tree", "--group", "trivial", "--emit", "dot"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "digraph"));
  Run a = run({"tree", "--group", "C3xC3", "--max-order", "3^4", "--emit", "dot"});
  Run b = run({"tree", "--group", "C3xC3", "--max-order", "81", "--emit", "dot"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"tree", "--group", "729_9", "--max-order", "3^7", "--budget", "1"}).code == 3);

  std::string path = temp_path("tree.dot");
  std::filesystem::remove(path);
  CHECK(run({"tree", "--group", "C3xC3", "--max-order", "81", "--emit", "dot", "--out", path}).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("identify and survey") {
  Run i = run({"identify", "--kappa", "4444"});
  CHECK(i.code == 0);
  CHECK(has(i.out, "<81,4>"));
  CHECK(has(i.out, "l3 = 2"));
  CHECK(run({"identify", "--kappa", "9999"}).code == 4);
  CHECK(run({"identify", "--kappa", "1234*", "--tau2", "garbage"}).code == 4);

  Run s = run({"survey"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "61/14/14/6"));
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--criterion", "6"}).code == 0);
  // drop one distinguished row: the counts no longer match
  std::ifstream in(cap::data_dir() + "/table1.csv");
  std::string path = temp_path("survey.csv"), line;
  std::ofstream out(path);
  bool dropped = false;
  while (std::getline(in, line)) {
    if (!dropped && line == "1,199,4444") {
      dropped = true;
      continue;
    }
    out << line << '\n';
  }
  out.close();
  REQUIRE(dropped);
  CHECK(run({"verify", "--criterion", "6", "--data", path}).code == 2);
  CHECK(run({"verify", "--criterion", "8"}).code == 4);
}
