#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cap;

namespace {

std::set<Elem> brute_derived(const PcPresentation& P) {
  auto all = enumerate_elements(P);
  std::vector<Elem> comms;
  for (const auto& a : all)
    for (const auto& b : all) comms.push_back(commutator(a, b, P));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return test::brute_closure(comms, P);
}

// Textbook Smith normal form for small matrices: repeatedly move the entry
// of least absolute value to the corner and clear its row and column.
std::vector<long long> textbook_snf(std::vector<std::vector<long long>> a) {
  const size_t n = a.size(), m = a[0].size();
  std::vector<long long> d;
  for (size_t t = 0; t < std::min(n, m); ++t) {
    for (;;) {
      size_t bi = n, bj = m;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < m; ++j)
          if (a[i][j] && (bi == n || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) bi = i, bj = j;
      if (bi == n) {
        while (d.size() < m) d.push_back(0);
        return d;
      }
      std::swap(a[t], a[bi]);
      for (auto& r : a) std::swap(r[t], r[bj]);
      bool done = true;
      for (size_t i = t + 1; i < n; ++i) {
        long long q = a[i][t] / a[t][t];
        for (size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
        done &= a[i][t] == 0;
      }
      for (size_t j = t + 1; j < m; ++j) {
        long long q = a[t][j] / a[t][t];
        for (size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        done &= a[t][j] == 0;
      }
      if (!done) continue;
      size_t bad = n;
      for (size_t i = t + 1; i < n && bad == n; ++i)
        for (size_t j = t + 1; j < m; ++j)
          if (a[i][j] % a[t][t]) bad = i;
      if (bad == n) break;
      for (size_t j = t; j < m; ++j) a[t][j] += a[bad][j];
    }
    d.push_back(std::llabs(a[t][t]));
  }
  while (d.size() < m) d.push_back(0);
  return d;
}

}  // namespace

TEST_CASE("subgroup closure") {
  const PcPresentation& G = test::group("81_4");
  CHECK(subgroup_closure({identity()}, G).log_order() == 0);
  Subgroup H = subgroup_closure({power(test::word(G, "x"), 3, G), test::word(G, "y"), test::word(G, "s2")}, G);
  CHECK(G.log_order() - H.log_order() == 1);

  const PcPresentation& S = test::group("729_17");
  Subgroup Y = subgroup_closure({test::word(S, "y")}, S);
  CHECK(Y.order() == (long long)test::brute_closure({test::word(S, "y")}, S).size());
}

TEST_CASE("derived subgroup and series against brute force") {
  for (const auto& e : test::catalog().entries) {
    const PcPresentation& P = e.pres;
    if (P.n == 0 || P.log_order() > 6) continue;
    CHECK_MESSAGE(derived_subgroup(P).order() == (long long)brute_derived(P).size(), e.name);
  }
  const PcPresentation& A = test::group("C9xC3");
  SeriesData s = lower_central_series(A);
  CHECK(derived_subgroup(A).log_order() == 0);
  CHECK(s.nilpotency_class == 1);
  CHECK(frattini_subgroup(A).order() == 3);

  SeriesData g = lower_central_series(test::group("81_4"));
  CHECK(g.nilpotency_class == 2);
  CHECK(g.coclass == 2);
  SeriesData t = lower_central_series(test::group("729_9"));
  CHECK(t.nilpotency_class == 3);
  CHECK(t.coclass == 3);
}

TEST_CASE("Frattini subgroup is the intersection of the maximal subgroups") {
  for (const auto& e : test::catalog().entries) {
    const PcPresentation& P = e.pres;
    // with G/Phi of rank 2 each maximal subgroup is <Phi, a> for one a outside Phi
    if (P.log_order() > 6 || P.log_order() - frattini_subgroup(P).log_order() != 2) continue;
    // maximal subgroups contain Phi; they are the preimages of the hyperplanes of G/Phi
    Subgroup F = frattini_subgroup(P);
    auto all = enumerate_elements(P);
    std::set<Elem> inter(all.begin(), all.end());
    std::vector<Elem> outside;
    for (const auto& a : all)
      if (!contains(F, a, P)) outside.push_back(a);
    for (const auto& a : outside) {
      std::vector<Elem> gens = F.gens;
      gens.push_back(a);
      Subgroup M = subgroup_closure(gens, P);
      if (P.log_order() - M.log_order() != 1) continue;
      std::set<Elem> keep;
      for (const auto& g : inter)
        if (contains(M, g, P)) keep.insert(g);
      inter = keep;
    }
    CHECK_MESSAGE((long long)inter.size() == F.order(), e.name);
  }
}

TEST_CASE("abelian quotient invariants") {
  const PcPresentation& G = test::group("81_4");
  CHECK(abelian_quotient_invariants(G, whole_group(G)).empty());
  CHECK(abelian_quotient_invariants(G, trivial_subgroup()) == ATI{9, 3});
  Generators xy = canonical_generators(G);
  Lattice L = standard_subgroup_lattice(G, xy.x, xy.y);
  CHECK(abelian_invariants(L.h3[3], trivial_subgroup(), G) == ATI{9, 3});
  CHECK(abelian_invariants(L.h3[3], L.h9[3], G) == ATI{3});
}

TEST_CASE("quotients") {
  const PcPresentation& G = test::group("81_4");
  CHECK(are_isomorphic(quotient_presentation(G, trivial_subgroup()), G));
  PcPresentation Q = quotient_presentation(G, frattini_subgroup(G));
  CHECK(Q.log_order() == 2);
  CHECK(abelian_quotient_invariants(Q, trivial_subgroup()) == ATI{3, 3});
  const PcPresentation& S = test::group("729_17");
  PcPresentation A = quotient_presentation(S, derived_subgroup(S));
  CHECK(derived_subgroup(A).log_order() == 0);
  CHECK(abelian_quotient_invariants(A, trivial_subgroup()) == ATI{9, 3});
}

TEST_CASE("standard subgroup lattice") {
  for (const char* name : {"81_4", "729_9", "729_17", "2187_180"}) {
    const PcPresentation& G = test::group(name);
    Generators xy = canonical_generators(G);
    Lattice L = standard_subgroup_lattice(G, xy.x, xy.y);
    // H_{4,9} = <x^3, G'> is the intersection of the H_{i,3} and equals Phi(G)
    Subgroup inter = L.h3[0];
    for (int i = 1; i < 4; ++i) inter = intersection(inter, L.h3[i], G);
    CHECK(inter == L.h9[3]);
    CHECK(L.h9[3] == frattini_subgroup(G));
    // H_{4,3} is the product of the H_{i,9}
    Subgroup prod = L.h9[0];
    for (int i = 1; i < 4; ++i) prod = join(prod, L.h9[i], G);
    CHECK(prod == L.h3[3]);
    CHECK(abelian_quotient_invariants(G, L.derived).size() == 2);
    // H_{i,9} for i <= 3 lies in H_{4,3} and in no other H_{j,3}
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) CHECK(is_subgroup_of(L.h9[i], L.h3[j], G) == (j == 3));
  }
}

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form({{9, 0}, {0, 3}}) == std::vector<long long>{3, 9});
  CHECK(smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == std::vector<long long>{1, 1, 1});
  CHECK(smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<long long>{2, 6, 12});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ent(-9, 9);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<long long>> m(4, std::vector<long long>(4));
    for (auto& r : m)
      for (auto& x : r) x = ent(rng);
    auto d = smith_normal_form(m);
    CHECK(d == textbook_snf(m));
    // the 3-part agrees with the computation over Z/27
    auto dm = smith_normal_form_mod(m, 3, 3);
    for (size_t i = 0; i < d.size(); ++i) {
      long long v = 1, x = d[i];
      while (x && x % 3 == 0 && v < 27) x /= 3, v *= 3;
      if (d[i] == 0) v = 0;
      if (v == 27) v = 0;
      CHECK(dm[i] == v);
    }
  }
}
