// Named presentations loaded from catalog files.
#pragma once

#include <string>
#include <vector>

#include "captower/pcgroup.hpp"

namespace cap {

// Data directory: $CAPTOWER_DATA_DIR if set, else the directory compiled in.
std::string data_dir();

class Catalog {
 public:
  std::vector<CatalogEntry> entries;

  static Catalog load(const std::string& path);
  static Catalog load_default();  // <data_dir>/catalog.txt

  bool has(const std::string& name) const;
  const PcPresentation& get(const std::string& name) const;  // throws std::out_of_range
};

// A catalog name, or an inline presentation such as "gens a,b; pow a^9=1".
PcPresentation resolve_group(const std::string& selector, const Catalog& catalog);

}  // namespace cap
