// Helpers shared by the genealogy sources.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "captower/genealogy.hpp"

namespace cap::detail {

// Images in `dst` of all generators of the weighted presentation `src`,
// given images of its weight-1 generators. No homomorphism check.
std::vector<Elem> extend_images(const PcPresentation& src, const PcPresentation& dst,
                                const std::vector<Elem>& layer1_images);

Elem apply_images(const std::vector<Elem>& img, const Elem& e, const PcPresentation& dst);

// Word in a pcgs: (generator, power) pairs composed left to right, so
// [(a,1),(b,2)] means a o b^2. Negative powers use the inverses.
using AutWord = std::vector<std::pair<int, int>>;
Automorphism eval_word(const AutWord& w, const AutGroup& A, const PcPresentation& G);

// Aut(D) from a pcgs of the stabilizer in Aut(G), where G = D / (last layer)
// shares the first G.n generators with D.
AutGroup lift_to_descendant(const PcPresentation& D, const PcPresentation& G, const std::vector<Automorphism>& stab,
                            const std::vector<Automorphism>& stab_inv, const std::vector<int>& rel_order);

// Subspaces of F_p^d as packed RREF keys.
std::string subspace_key(Mat rows, int d);
Mat key_to_rows(const std::string& key, int d);

// Orbit of a point under a pcgs acting on the left, with the stabilizer.
struct PcOrbit {
  std::vector<std::string> points;
  std::vector<int> parent, gen, pw;  // t_q = a_gen^pw o t_parent (q > 0)
  std::vector<AutWord> stab_words, stab_inv_words;
  std::vector<int> stab_rel;         // relative orders, top first
};

template <class Act>
PcOrbit pc_orbit(const std::string& start, const std::vector<int>& rel_order, Act act,
                 std::unordered_map<std::string, int>* index_out = nullptr) {
  PcOrbit O;
  std::unordered_map<std::string, int> index;
  O.points.push_back(start);
  O.parent.push_back(-1);
  O.gen.push_back(-1);
  O.pw.push_back(0);
  index[start] = 0;
  auto word_of = [&](int q) {
    AutWord w;
    while (q > 0) {
      w.emplace_back(O.gen[q], O.pw[q]);
      q = O.parent[q];
    }
    return w;
  };
  std::vector<AutWord> sw, siw;
  std::vector<int> srel;
  for (int j = int(rel_order.size()) - 1; j >= 0; --j) {
    std::string img = act(j, start);
    auto it = index.find(img);
    if (it != index.end()) {
      // t^-1 o a_j fixes the start point
      AutWord t = word_of(it->second);
      AutWord s;
      for (auto r = t.rbegin(); r != t.rend(); ++r) s.emplace_back(r->first, -r->second);
      s.emplace_back(j, 1);
      AutWord si{{j, -1}};
      si.insert(si.end(), t.begin(), t.end());
      sw.push_back(s);
      siw.push_back(si);
      srel.push_back(rel_order[j]);
      continue;
    }
    const int L = int(O.points.size());
    for (int k = 1; k < rel_order[j]; ++k)
      for (int q = 0; q < L; ++q) {
        std::string np = act(j, O.points[(k - 1) * L + q]);
        index[np] = int(O.points.size());
        O.points.push_back(np);
        O.parent.push_back(q);
        O.gen.push_back(j);
        O.pw.push_back(k);
      }
  }
  O.stab_words.assign(sw.rbegin(), sw.rend());
  O.stab_inv_words.assign(siw.rbegin(), siw.rend());
  O.stab_rel.assign(srel.rbegin(), srel.rend());
  if (index_out) *index_out = std::move(index);
  return O;
}

}  // namespace cap::detail
