// Scripted checks of the reproduced results, grouped by acceptance criterion.
#pragma once

#include <string>
#include <vector>

namespace cap {

struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BatteryOptions {
  std::string catalog_path;  // default catalog when empty
  std::string survey_path;   // <data_dir>/table1.csv when empty
  bool strict_frattini = false;
  unsigned seed = 12345;     // random transversals
};

// Criteria 1..7; each adds its subchecks, including wall-clock limits.
std::vector<Check> run_criterion(int criterion, const BatteryOptions& opt = {});
std::vector<Check> run_battery(const BatteryOptions& opt = {});

}  // namespace cap
