#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cap;

namespace {

// Transfer kernel by the definition, over the full element list: for each g
// and transversal element t, find the t' with t'^-1 g t in H and multiply up
// those factors; g is in the kernel when the product lies in H'.
long long brute_kernel_order(const PcPresentation& P, const Subgroup& H) {
  auto all = enumerate_elements(P);
  std::vector<Elem> reps;
  for (const auto& a : all) {
    bool fresh = true;
    for (const auto& r : reps)
      if (contains(H, multiply(inverse(r, P), a, P), P)) fresh = false;
    if (fresh) reps.push_back(a);
  }
  Subgroup Hd = derived_subgroup_of(H, P);
  long long n = 0;
  for (const auto& g : all) {
    Elem v = identity();
    for (const auto& t : reps) {
      Elem gt = multiply(g, t, P);
      for (const auto& s : reps) {
        Elem h = multiply(inverse(s, P), gt, P);
        if (contains(H, h, P)) {
          v = multiply(v, h, P);
          break;
        }
      }
    }
    n += contains(Hd, v, P);
  }
  return n;
}

std::array<ATI, 4> tau_of(ATI a, ATI b) { return {a, a, a, b}; }

}  // namespace

TEST_CASE("canonical generators") {
  const PcPresentation& G = test::group("81_4");
  Generators xy = canonical_generators(G);
  Subgroup D = derived_subgroup(G);
  CHECK(element_order(xy.x, G) >= 9);
  CHECK(contains(D, power(xy.y, 3, G), G));
  // the presentation's own x, y qualify: same lattice up to relabeling
  CHECK(canonicalize_kappa(artin_pattern(G, {test::word(G, "x"), test::word(G, "y")})) ==
        canonicalize_kappa(artin_pattern(G)));
  const PcPresentation& A = test::group("C9xC3");
  Generators ab = canonical_generators(A);
  CHECK(element_order(ab.x, A) == 9);
  CHECK(element_order(ab.y, A) == 3);
  CHECK_THROWS_AS(canonical_generators(test::group("C3xC3")), std::invalid_argument);
}

TEST_CASE("transfers") {
  // H = G gives the identity map on G/G'
  const PcPresentation& G = test::group("81_4");
  Transfer id = artin_transfer(G, whole_group(G));
  Subgroup D = derived_subgroup(G);
  for (const auto& g : enumerate_elements(G)) CHECK(id.apply(g, G) == coset_rep(g, D, G));

  // abelian group: the transfer to an index-3 subgroup is cubing
  const PcPresentation& A = test::group("C9xC3");
  Generators xy = canonical_generators(A);
  Lattice L = standard_subgroup_lattice(A, xy.x, xy.y);
  for (const auto& H : L.h3) {
    Transfer t = artin_transfer(A, H);
    for (const auto& g : enumerate_elements(A)) CHECK(t.apply(g, A) == power(g, 3, A));
    // kernel: the elements of order dividing 3
    CHECK(transfer_kernel(A, H).order() == 9);
  }
  CHECK_THROWS_AS(artin_transfer(G, trivial_subgroup()), std::invalid_argument);
}

TEST_CASE("transfer kernels against the definition") {
  for (const char* name : {"81_3", "81_4", "729_9", "729_17"}) {
    const PcPresentation& G = test::group(name);
    Generators xy = canonical_generators(G);
    Lattice L = standard_subgroup_lattice(G, xy.x, xy.y);
    for (const auto& H : L.h3) CHECK_MESSAGE(transfer_kernel(G, H).order() == brute_kernel_order(G, H), name);
  }
}

TEST_CASE("kernels of <81,4> and <729,9>") {
  const PcPresentation& G = test::group("81_4");
  Generators xy = canonical_generators(G);
  Lattice L = standard_subgroup_lattice(G, xy.x, xy.y);
  for (const auto& H : L.h3) CHECK(transfer_kernel(G, H) == L.h9[3]);

  const PcPresentation& T = test::group("729_9");
  Generators tz = canonical_generators(T);
  Lattice M = standard_subgroup_lattice(T, tz.x, tz.y);
  for (int i = 0; i < 3; ++i) CHECK(transfer_kernel(T, M.h3[i]) == M.h3[3]);
}

TEST_CASE("transversal independence") {
  std::mt19937_64 rng(3);
  for (const char* name : {"81_4", "729_17", "2187_190"}) {
    const PcPresentation& G = test::group(name);
    Generators xy = canonical_generators(G);
    Lattice L = standard_subgroup_lattice(G, xy.x, xy.y);
    for (const auto& H : L.h3) {
      Transfer base = artin_transfer(G, H);
      for (int k = 0; k < 10; ++k) {
        Transfer t = artin_transfer(G, H, random_transversal(H, G, rng));
        for (int g = 0; g < G.n; ++g) CHECK(t.apply(gen_elem(g), G) == base.apply(gen_elem(g), G));
      }
    }
  }
}

TEST_CASE("Artin patterns") {
  ArtinPattern a = artin_pattern(test::group("81_4"));
  CHECK(a.kappa_string() == "(444;4)");
  CHECK(a.tau == tau_of({9, 3}, {9, 3}));
  CHECK(a.tau2 == tau_of({9}, {3, 3}));
  CHECK(a.kappa2[0] == a.kappa2[1]);
  CHECK(classify_capitulation(a) == CapitulationClass::Distinguished);

  ArtinPattern b = canonicalize_kappa(artin_pattern(test::group("729_17")));
  CHECK(b.kappa_string() == "(123;4)");
  CHECK(b.tau == tau_of({27, 3}, {9, 3, 3}));
  CHECK(classify_capitulation(b) == CapitulationClass::HarmonicVariant1);

  ArtinPattern c = canonicalize_kappa(artin_pattern(test::group("2187_190")));
  CHECK(c.kappa_string() == "(123;4)");
  CHECK(c.tau == tau_of({27, 3}, {9, 9, 3}));
  CHECK(classify_capitulation(c) == CapitulationClass::HarmonicVariant2);

  ArtinPattern d = artin_pattern(test::group("729_9"));
  CHECK(d.kappa_string() == "(000;4)");
  CHECK(d.tau == tau_of({9, 3, 3}, {3, 3, 3, 3}));
  CHECK(classify_capitulation(d) == CapitulationClass::Total);

  CHECK(artin_pattern(test::group("trivial")).empty);
}

TEST_CASE("classification and canonical kappa") {
  ArtinPattern p;
  p.kappa = {1, 3, 2, 4};
  p.tau = tau_of({27, 3}, {9, 3, 3});
  CHECK(classify_capitulation(p) == CapitulationClass::HarmonicVariant1);
  CHECK(canonicalize_kappa(p).kappa_string() == "(123;4)");
  p.kappa = {4, 4, 4, 4};
  p.tau = tau_of({9, 3}, {9, 3});
  CHECK(canonicalize_kappa(p).kappa_string() == "(444;4)");
  CHECK(classify_capitulation(p) == CapitulationClass::Distinguished);
  p.kappa = {0, 0, 0, 4};
  p.tau = tau_of({9, 3, 3}, {3, 3, 3, 3});
  CHECK(canonicalize_kappa(p).kappa_string() == "(000;4)");
  CHECK(classify_capitulation(p) == CapitulationClass::Total);
  p.kappa = {1, 2, 3, 0};
  CHECK(classify_capitulation(p) == CapitulationClass::Other);
}

TEST_CASE("relabeling the generators keeps the canonical pattern") {
  // x -> x y, y -> y x^3 is another admissible pair for G/G' of type (9,3)
  for (const char* name : {"729_17", "2187_180", "729_9"}) {
    const PcPresentation& G = test::group(name);
    Generators xy = canonical_generators(G);
    Generators other{multiply(xy.x, xy.y, G), multiply(xy.y, power(xy.x, 3, G), G)};
    CHECK(canonicalize_kappa(artin_pattern(G, other)).kappa == canonicalize_kappa(artin_pattern(G)).kappa);
    CHECK(canonicalize_kappa(artin_pattern(G, other)).tau == canonicalize_kappa(artin_pattern(G)).tau);
  }
}

TEST_CASE("orders on abelian type invariants") {
  CHECK(ati_le({9, 3}, {9, 3, 3}));
  CHECK(ati_le({3, 3}, {9, 3}));
  CHECK_FALSE(ati_le({27}, {9, 9}));
  CHECK(ati_dominates({27, 3, 3}, {9, 9, 3}));
  CHECK_FALSE(ati_dominates({9, 9, 3}, {27, 3, 3}));
  CHECK(ati_dominates({9, 3, 3}, {3, 3, 3, 3}));
  CHECK_FALSE(ati_dominates({3, 3, 3}, {3, 3, 3, 3}));
}
