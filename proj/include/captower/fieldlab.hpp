// Prime radicands, cubic residues and the survey of pure metacyclic fields
// Q(zeta_3, p^(1/3)) with p = 1 mod 9.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "captower/genealogy.hpp"

namespace cap {

std::vector<long long> primes_1_mod_9(long long bound);
bool is_prime(long long n);
// a^((p-1)/3) == 1 mod p; p must be a prime = 1 mod 3 not dividing a.
bool is_cubic_residue(long long a, long long p);

struct FieldRecord {
  int index = 0;
  long long p = 0;
  std::string kappa_code;  // "4444", "1234", "1234*", "0004"
  CapitulationClass cls = CapitulationClass::Other;
  std::vector<std::string> candidates;
  std::string verdict;
};

CapitulationClass class_of_code(const std::string& code);  // throws on unknown codes
// CSV with header "index,p,kappa".
std::vector<FieldRecord> load_survey(const std::string& path);

struct SurveyStats {
  int total = 0;
  std::map<CapitulationClass, int> counts;
  int two_stage = 0;  // distinguished and both harmonic variants
  double percent(CapitulationClass c) const;
  double two_stage_percent() const;
};

SurveyStats survey_statistics(const std::vector<FieldRecord>& records);

// Attaches candidates and verdict; results are cached per class.
FieldRecord tower_candidates(FieldRecord r);

}  // namespace cap
