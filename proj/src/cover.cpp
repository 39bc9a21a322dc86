#include <stdexcept>

#include "captower/genealogy.hpp"

namespace cap {

namespace {

using Def = Definition::Kind;

bool is_definition(const PcPresentation& G, int j, int i) {
  // i < 0 marks the power relation of g_j
  for (const auto& g : G.gens) {
    if (i < 0 && g.def.kind == Def::Power && g.def.j == j) return true;
    if (i >= 0 && g.def.kind == Def::Commutator && g.def.j == j && g.def.i == i) return true;
  }
  return false;
}

}  // namespace

CoverData p_cover(const PcPresentation& G, int max_log) {
  if (!G.weighted()) throw std::invalid_argument("p_cover needs a weighted presentation");
  const int n = G.n, p = G.p;

  // one tail per non-defining relation
  struct Rel {
    int j, i;  // i < 0: power relation of g_j
  };
  std::vector<Rel> rels;
  for (int j = 0; j < n; ++j)
    if (!is_definition(G, j, -1)) rels.push_back({j, -1});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!is_definition(G, j, i)) rels.push_back({j, i});
  const int m = int(rels.size());

  TailData T;
  T.m = m;
  T.power_tail.assign(n, Vec(m, 0));
  T.comm_tail.assign(n, std::vector<Vec>(n, Vec(m, 0)));
  for (int r = 0; r < m; ++r) {
    if (rels[r].i < 0)
      T.power_tail[rels[r].j][r] = 1;
    else
      T.comm_tail[rels[r].j][rels[r].i][r] = 1;
  }

  Mat eqs;
  consistency_words(G, T, [&](const std::string& what, const TailedElem& l, const TailedElem& r) {
    if (l.g != r.g) throw std::invalid_argument("inconsistent presentation: " + what);
    Vec v(m, 0);
    bool nz = false;
    for (int k = 0; k < m; ++k) {
      v[k] = uint8_t((l.t[k] + p - r.t[k]) % p);
      nz |= v[k] != 0;
    }
    if (nz) eqs.push_back(std::move(v));
    return true;
  });
  auto piv = rref(eqs, m, p);

  std::vector<int> pivot_row(m, -1), free_index(m, -1);
  for (size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = int(r);
  std::vector<int> free_cols;
  for (int k = 0; k < m; ++k)
    if (pivot_row[k] < 0) {
      free_index[k] = int(free_cols.size());
      free_cols.push_back(k);
    }
  const int d = int(free_cols.size());
  if (n + d > max_log || n + d > kMaxGens) throw BudgetExceeded("p-covering group exceeds the size budget");

  // tail r written in the multiplicator basis
  auto tail_coords = [&](int r) {
    Vec v(d, 0);
    if (free_index[r] >= 0) {
      v[free_index[r]] = 1;
    } else {
      const Vec& row = eqs[pivot_row[r]];
      for (int f = 0; f < d; ++f) v[f] = uint8_t((p - row[free_cols[f]]) % p);
    }
    return v;
  };

  CoverData C;
  C.n = n;
  C.multiplicator_rank = d;
  C.pclass = pclass_of(G);
  PcPresentation& S = C.cover;
  S = PcPresentation(n + d, p);
  for (int k = 0; k < n; ++k) {
    S.gens[k] = G.gens[k];
    S.power[k] = G.power[k];
    for (int i = 0; i < k; ++i) S.comm[k][i] = G.comm[k][i];
  }
  for (int r = 0; r < m; ++r) {
    Vec v = tail_coords(r);
    Elem& target = rels[r].i < 0 ? S.power[rels[r].j] : S.comm[rels[r].j][rels[r].i];
    for (int f = 0; f < d; ++f) target[n + f] = v[f];
  }
  for (int f = 0; f < d; ++f) {
    const Rel& r = rels[free_cols[f]];
    auto& g = S.gens[n + f];
    g.label = "t" + std::to_string(f + 1);
    g.weight = C.pclass + 1;
    g.def = r.i < 0 ? Definition{Def::Power, r.j, -1} : Definition{Def::Commutator, r.j, r.i};
  }
  S.finalize();

  // nucleus: spanned by [g_k, g_i] (g_i of weight 1) and g_k^p for weight-c g_k
  Mat nuc;
  auto m_part = [&](const Elem& e) {
    Vec v(d, 0);
    for (int f = 0; f < d; ++f) v[f] = e[n + f];
    return v;
  };
  for (int k = 0; k < n; ++k) {
    if (G.gens[k].weight != C.pclass) continue;
    nuc.push_back(m_part(S.power[k]));
    for (int i = 0; i < k; ++i)
      if (G.gens[i].weight == 1) nuc.push_back(m_part(S.comm[k][i]));
  }
  C.nucleus_pivots = rref(nuc, d, p);
  C.nucleus = nuc;
  C.nucleus_rank = int(nuc.size());
  return C;
}

int relation_rank(const PcPresentation& P) {
  if (P.n == 0) return 0;
  return p_cover(standardize(P)).multiplicator_rank;
}

}  // namespace cap
