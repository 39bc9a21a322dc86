#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "captower/catalog.hpp"
#include "captower/fieldlab.hpp"

using namespace cap;

namespace {

std::string survey_path() { return data_dir() + "/table1.csv"; }

std::string temp_csv(const std::string& body) {
  static int k = 0;
  auto p = std::filesystem::temp_directory_path() / ("captower_survey_" + std::to_string(++k) + ".csv");
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("primes congruent to 1 mod 9") {
  CHECK(primes_1_mod_9(18).empty());
  CHECK(primes_1_mod_9(200) == std::vector<long long>{19, 37, 73, 109, 127, 163, 181, 199});
  std::vector<long long> naive;
  for (long long n = 2; n <= 20000; ++n) {
    bool pr = true;
    for (long long d = 2; d < n && pr; ++d) pr = n % d != 0;
    if (pr && n % 9 == 1) naive.push_back(n);
  }
  CHECK(primes_1_mod_9(20000) == naive);
}

TEST_CASE("cubic residues") {
  CHECK(is_cubic_residue(1, 19));
  for (long long p : {19LL, 199LL}) {
    std::vector<bool> cube(p, false);
    for (long long x = 1; x < p; ++x) cube[x * x % p * x % p] = true;
    for (long long a = 1; a < p; ++a) CHECK(is_cubic_residue(a, p) == cube[a]);
  }
  CHECK_THROWS_AS(is_cubic_residue(3, 17), std::invalid_argument);
  CHECK_THROWS_AS(is_cubic_residue(3, 21), std::invalid_argument);
  CHECK_THROWS_AS(is_cubic_residue(38, 19), std::invalid_argument);
}

TEST_CASE("survey file") {
  auto rows = load_survey(survey_path());
  REQUIRE(rows.size() == 95);
  CHECK(rows[0].p == 199);
  CHECK(rows[0].cls == CapitulationClass::Distinguished);
  CHECK(rows[4].p == 1297);
  CHECK(rows[4].cls == CapitulationClass::HarmonicVariant2);
  CHECK(rows[50].p == 10459);
  CHECK(rows[50].cls == CapitulationClass::Total);
  for (const auto& r : rows) CHECK(r.p % 9 == 1);

  CHECK_THROWS_AS(load_survey(temp_csv("i,p,k\n1,199,4444\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey(temp_csv("index,p,kappa\n1,201,4444\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey(temp_csv("index,p,kappa\n1,31,4444\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey(temp_csv("index,p,kappa\n1,199,4443\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey(temp_csv("index,p,kappa\n1,199,4444,x\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey(temp_csv("index,p,kappa\n1,19x,4444\n")), std::runtime_error);
  CHECK_THROWS_AS(load_survey("/nonexistent/survey.csv"), std::runtime_error);
  CHECK(load_survey(temp_csv("index,p,kappa\n")).empty());
}

TEST_CASE("survey statistics") {
  auto rows = load_survey(survey_path());
  SurveyStats s = survey_statistics(rows);
  CHECK(s.total == 95);
  CHECK(s.counts[CapitulationClass::Distinguished] == 61);
  CHECK(s.counts[CapitulationClass::HarmonicVariant1] == 14);
  CHECK(s.counts[CapitulationClass::HarmonicVariant2] == 14);
  CHECK(s.counts[CapitulationClass::Total] == 6);
  CHECK(s.two_stage == 89);
  CHECK(s.two_stage_percent() == doctest::Approx(100.0 * 89 / 95));

  SurveyStats e = survey_statistics({});
  CHECK(e.total == 0);
  CHECK(e.two_stage_percent() == 0.0);

  std::mt19937_64 rng(9);
  std::shuffle(rows.begin(), rows.end(), rng);
  SurveyStats t = survey_statistics(rows);
  CHECK(t.counts == s.counts);
  CHECK(t.two_stage == s.two_stage);
}

TEST_CASE("tower candidates") {
  auto rows = load_survey(survey_path());
  FieldRecord d = tower_candidates(rows[0]);
  CHECK(d.candidates == std::vector<std::string>{"<81,4>"});
  CHECK(d.verdict == "l3 = 2");
  FieldRecord h = tower_candidates(rows[4]);
  CHECK_FALSE(h.candidates.empty());
  CHECK(std::find(h.candidates.begin(), h.candidates.end(), "<2187,180>/<2187,190>(x2)") != h.candidates.end());
  FieldRecord t = tower_candidates(rows[50]);
  CHECK(t.verdict.rfind("l3 >= 2", 0) == 0);
  FieldRecord bad = rows[0];
  bad.kappa_code = "1111";
  CHECK_THROWS_AS(tower_candidates(bad), std::invalid_argument);
}
