#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "captower/genealogy.hpp"

namespace cap {

namespace {

using Def = Definition::Kind;

// Coset-rep keyed table for one layer P_w / P_{w+1}.
struct LayerTable {
  std::vector<int> idx;  // basis indices of this layer
  std::unordered_map<Elem, std::vector<uint8_t>, ElemHash> coords;
};

}  // namespace

int rank_of_frattini_quotient(const PcPresentation& P) {
  return P.log_order() - frattini_subgroup(P).log_order();
}

std::vector<Elem> minimal_generators(const PcPresentation& P) {
  if (P.n == 0) return {};
  if (abelian_invariants(whole_group(P), derived_subgroup(P), P) == ATI{9, 3}) {
    auto g = canonical_generators(P);
    return {g.x, g.y};
  }
  Subgroup F = frattini_subgroup(P);
  std::vector<Elem> out;
  Subgroup cur = F;
  std::vector<Elem> cand;
  for (int i = 0; i < P.n; ++i) cand.push_back(gen_elem(i));
  for (const auto& e : canonical_transversal(F, P)) cand.push_back(e);
  for (const auto& e : cand) {
    if (contains(cur, e, P)) continue;
    out.push_back(e);
    cur = join(cur, subgroup_closure({e}, P), P);
  }
  return out;
}

PcPresentation standardize(const PcPresentation& P, const std::vector<Elem>& layer1) {
  const auto series = lower_exponent_p_series(P);
  const int c = int(series.size()) - 1;  // p-class
  std::vector<int> dim(c + 1, 0);
  for (int w = 1; w <= c; ++w) dim[w] = series[w - 1].log_order() - series[w].log_order();
  if (int(layer1.size()) != dim[1]) throw std::invalid_argument("generator count differs from rank of G/Phi(G)");

  std::vector<Elem> basis;
  std::vector<int> weight;
  std::vector<Definition> defs;
  std::vector<LayerTable> tables(c + 2);

  // adds b to the layer-w set if independent modulo P_{w+1}; updates the table
  auto try_add = [&](const Elem& b, int w, Definition def) {
    LayerTable& T = tables[w];
    const Subgroup& next = series[w];
    Elem rep = coset_rep(b, next, P);
    if (T.coords.empty()) T.coords[identity()] = {};
    if (T.coords.count(rep)) return false;
    std::unordered_map<Elem, std::vector<uint8_t>, ElemHash> grown;
    Elem bk = identity();
    for (int k = 0; k < P.p; ++k) {
      for (const auto& [e, v] : T.coords) {
        // elements are products (prod b^v) * b^k, which is the normal-form order
        Elem prod = coset_rep(multiply(e, bk, P), next, P);
        auto nv = v;
        nv.push_back(uint8_t(k));
        grown.emplace(prod, nv);
      }
      bk = multiply(bk, b, P);
    }
    T.coords.swap(grown);
    T.idx.push_back(int(basis.size()));
    basis.push_back(b);
    weight.push_back(w);
    defs.push_back(def);
    return true;
  };

  for (const auto& g : layer1)
    if (!try_add(g, 1, {Def::Generator, -1, -1}))
      throw std::invalid_argument("generators are dependent modulo the Frattini subgroup");

  for (int w = 1; w < c; ++w) {
    std::vector<int> prev = tables[w].idx;
    std::vector<int> first = tables[1].idx;
    for (int j : prev)
      for (int i : first) {
        if (int(tables[w + 1].idx.size()) == dim[w + 1]) break;
        if (w == 1 && i >= j) continue;
        try_add(commutator(basis[j], basis[i], P), w + 1, {Def::Commutator, j, i});
      }
    for (int j : prev) {
      if (int(tables[w + 1].idx.size()) == dim[w + 1]) break;
      try_add(power(basis[j], P.p, P), w + 1, {Def::Power, j, -1});
    }
    if (int(tables[w + 1].idx.size()) != dim[w + 1]) throw std::logic_error("layer basis incomplete");
  }

  const int n = int(basis.size());
  auto express = [&](Elem e) {
    Elem out;
    for (int w = 1; w <= c; ++w) {
      const LayerTable& T = tables[w];
      auto it = T.coords.find(coset_rep(e, series[w], P));
      if (it == T.coords.end()) throw std::logic_error("element outside layer");
      Elem part = identity();
      for (size_t k = 0; k < T.idx.size(); ++k) {
        out[T.idx[k]] = it->second[k];
        part = multiply(part, power(basis[T.idx[k]], it->second[k], P), P);
      }
      e = multiply(inverse(part, P), e, P);
    }
    if (!e.is_identity()) throw std::logic_error("express: residue not trivial");
    return out;
  };

  PcPresentation W(n, P.p);
  std::unordered_set<std::string> used;
  for (int k = 0; k < n; ++k) {
    std::string label;
    int d = basis[k].depth(P.n);
    if (basis[k] == gen_elem(d) && !used.count(P.gens[d].label)) label = P.gens[d].label;
    if (label.empty()) {
      for (int t = k + 1;; ++t) {
        label = "g" + std::to_string(t);
        if (!used.count(label) && P.label_index(label) < 0) break;
      }
    }
    used.insert(label);
    W.gens[k].label = label;
    W.gens[k].weight = weight[k];
    W.gens[k].def = defs[k];
    W.power[k] = express(power(basis[k], P.p, P));
    for (int i = 0; i < k; ++i) W.comm[k][i] = express(commutator(basis[k], basis[i], P));
  }
  W.finalize();
  return W;
}

PcPresentation standardize(const PcPresentation& P) { return standardize(P, minimal_generators(P)); }

int pclass_of(const PcPresentation& W) {
  int c = 0;
  for (const auto& g : W.gens) c = std::max(c, g.weight);
  return c;
}

int layer1_count(const PcPresentation& W) {
  int k = 0;
  for (const auto& g : W.gens) k += g.weight == 1;
  return k;
}

PcPresentation truncate_to_weight(const PcPresentation& W, int w) {
  int k = 0;
  while (k < W.n && W.gens[k].weight <= w) ++k;
  PcPresentation Q(k, W.p);
  auto cut = [&](Elem e) {
    for (int i = k; i < W.n; ++i) e[i] = 0;
    return e;
  };
  for (int i = 0; i < k; ++i) {
    Q.gens[i] = W.gens[i];
    Q.power[i] = cut(W.power[i]);
    for (int j = 0; j < i; ++j) Q.comm[i][j] = cut(W.comm[i][j]);
  }
  Q.finalize();
  return Q;
}

}  // namespace cap
