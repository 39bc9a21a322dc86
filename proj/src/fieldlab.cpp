#include "captower/fieldlab.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cap {

namespace {

long long powmod(long long b, long long e, long long m) {
  __int128 r = 1, x = b % m;
  if (x < 0) x += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
  }
  return (long long)r;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> primes_1_mod_9(long long bound) {
  std::vector<long long> out;
  for (long long p = 19; p <= bound; p += 18)
    if (is_prime(p)) out.push_back(p);
  return out;
}

bool is_cubic_residue(long long a, long long p) {
  if (!is_prime(p) || p % 3 != 1) throw std::invalid_argument("modulus must be a prime = 1 mod 3");
  if (a % p == 0) throw std::invalid_argument("a is divisible by p");
  return powmod(a, (p - 1) / 3, p) == 1;
}

CapitulationClass class_of_code(const std::string& code) {
  if (code == "4444") return CapitulationClass::Distinguished;
  if (code == "1234") return CapitulationClass::HarmonicVariant1;
  if (code == "1234*") return CapitulationClass::HarmonicVariant2;
  if (code == "0004") return CapitulationClass::Total;
  throw std::invalid_argument("unknown capitulation code '" + code + "'");
}

std::vector<FieldRecord> load_survey(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open survey " + path);
  std::string line;
  if (!std::getline(in, line) || line != "index,p,kappa") throw std::runtime_error("survey header must be index,p,kappa");
  std::vector<FieldRecord> out;
  int ln = 1;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c, extra;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',') || std::getline(ss, extra, ','))
      throw std::runtime_error("line " + std::to_string(ln) + ": malformed row");
    FieldRecord r;
    try {
      size_t used = 0;
      r.index = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      r.p = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    } catch (const std::logic_error&) {
      throw std::runtime_error("line " + std::to_string(ln) + ": malformed number");
    }
    if (!is_prime(r.p) || r.p % 9 != 1) throw std::runtime_error("line " + std::to_string(ln) + ": p is not a prime = 1 mod 9");
    r.kappa_code = c;
    try {
      r.cls = class_of_code(c);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(ln) + ": " + e.what());
    }
    out.push_back(r);
  }
  return out;
}

double SurveyStats::percent(CapitulationClass c) const {
  auto it = counts.find(c);
  return total && it != counts.end() ? 100.0 * it->second / total : 0.0;
}

double SurveyStats::two_stage_percent() const { return total ? 100.0 * two_stage / total : 0.0; }

SurveyStats survey_statistics(const std::vector<FieldRecord>& records) {
  SurveyStats s;
  for (const auto& r : records) {
    ++s.total;
    ++s.counts[r.cls];
    if (r.cls == CapitulationClass::Distinguished || r.cls == CapitulationClass::HarmonicVariant1 ||
        r.cls == CapitulationClass::HarmonicVariant2)
      ++s.two_stage;
  }
  return s;
}

FieldRecord tower_candidates(FieldRecord r) {
  static std::mutex mu;
  static std::map<CapitulationClass, IdentifyResult> cache;
  r.cls = class_of_code(r.kappa_code);
  IdentifyResult res;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r.cls);
    if (it == cache.end()) it = cache.emplace(r.cls, identify_tower_group(r.cls)).first;
    res = it->second;
  }
  // vertices sharing an id (one per root, or fingerprint twins) are listed once
  std::vector<std::pair<std::string, int>> seen;
  for (const auto& c : res.candidates) {
    std::string label = c.paper_id.empty() ? c.root + ":" + c.coord : c.paper_id;
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == label; });
    if (it == seen.end()) seen.push_back({label, 1});
    else ++it->second;
  }
  for (const auto& [label, k] : seen) r.candidates.push_back(k > 1 ? label + "(x" + std::to_string(k) + ")" : label);
  r.verdict = res.verdict;
  return r;
}

}  // namespace cap
