// Shared fixtures for the unit tests.
#pragma once

#include <set>
#include <vector>

#include "captower/catalog.hpp"
#include "captower/genealogy.hpp"

namespace test {

inline const cap::Catalog& catalog() {
  static const cap::Catalog c = cap::Catalog::load_default();
  return c;
}

inline const cap::PcPresentation& group(const std::string& name) { return catalog().get(name); }

inline std::vector<std::string> labels(const cap::PcPresentation& P) {
  std::vector<std::string> out;
  for (const auto& g : P.gens) out.push_back(g.label);
  return out;
}

inline cap::Elem word(const cap::PcPresentation& P, const std::string& w) {
  return cap::collect(cap::parse_word(w, labels(P)), P);
}

// Closure of a generating set by brute-force multiplication.
inline std::set<cap::Elem> brute_closure(const std::vector<cap::Elem>& gens, const cap::PcPresentation& P) {
  std::set<cap::Elem> seen = {cap::identity()};
  std::vector<cap::Elem> todo = {cap::identity()};
  while (!todo.empty()) {
    cap::Elem a = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      cap::Elem b = cap::multiply(a, g, P);
      if (seen.insert(b).second) todo.push_back(b);
    }
  }
  return seen;
}

}  // namespace test
