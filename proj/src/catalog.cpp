#include "captower/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cap {

std::string data_dir() {
  if (const char* env = std::getenv("CAPTOWER_DATA_DIR"); env && *env) return env;
#ifdef CAPTOWER_DATA_DIR
  return CAPTOWER_DATA_DIR;
#else
  return "data";
#endif
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Catalog c;
  c.entries = parse_catalog(ss.str());
  return c;
}

Catalog Catalog::load_default() { return load(data_dir() + "/catalog.txt"); }

bool Catalog::has(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return true;
  return false;
}

const PcPresentation& Catalog::get(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.pres;
  throw std::out_of_range("no catalog entry '" + name + "'");
}

PcPresentation resolve_group(const std::string& selector, const Catalog& catalog) {
  if (catalog.has(selector)) return catalog.get(selector);
  if (selector.find("gens") != std::string::npos) return parse_presentation(selector);
  throw std::out_of_range("unknown group '" + selector + "'");
}

}  // namespace cap
