#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cap;

namespace {

PcPresentation elementary(int r) {
  std::string s = "gens";
  for (int i = 0; i < r; ++i) s += std::string(i ? "," : " ") + char('a' + i);
  return parse_presentation(s);
}

// the step-1 child of <81,4> with G/G' of type (9,3) and the same pattern
PcPresentation child_243() {
  const PcPresentation& G = test::group("81_4");
  for (const auto& c : immediate_descendants(G, 1))
    if (abelian_quotient_invariants(c, derived_subgroup(c)) == ATI{9, 3} &&
        canonicalize_kappa(artin_pattern(c)).kappa == canonicalize_kappa(artin_pattern(G)).kappa)
      return c;
  throw std::runtime_error("no child");
}

}  // namespace

TEST_CASE("automorphism group orders agree with brute force") {
  for (const char* name : {"C3xC3", "C9xC3", "81_3", "81_4"}) {
    PcPresentation W = standardize(test::group(name));
    AutGroup A = automorphism_group(W);
    CHECK_MESSAGE((long long)A.order() == brute_force_aut_order(W), name);
    for (const auto& a : A.gens) CHECK(is_automorphism(a, W));
  }
  CHECK((long long)automorphism_group(standardize(test::group("81_4"))).order() == 486);
}

TEST_CASE("relation rank") {
  CHECK(relation_rank(elementary(1)) == 1);
  CHECK(relation_rank(elementary(2)) == 3);
  CHECK(relation_rank(elementary(3)) == 6);
  CHECK(relation_rank(test::group("81_4")) == 3);
  CHECK(relation_rank(child_243()) == 2);
  CoverData C = p_cover(standardize(test::group("729_9")));
  CHECK(C.multiplicator_rank == 5);
  CHECK(C.nucleus_rank == 3);
}

TEST_CASE("immediate descendants") {
  const PcPresentation& V = test::group("C3xC3");
  CHECK(immediate_descendants(V, 1).size() == 3);
  CHECK(immediate_descendants(V, 2).size() == 3);
  CHECK(immediate_descendants(V, 3).size() == 1);
  CHECK(immediate_descendants(test::group("C3"), 1).size() == 1);
  CHECK(count_allowable_subspaces(2, 1, 1) == 3);
  for (const auto& c : immediate_descendants(V, 1)) CHECK(c.log_order() == 3);
}

TEST_CASE("descendants of <729,9>") {
  const PcPresentation& T = test::group("729_9");
  CHECK(immediate_descendants(T, 1).size() == 15);
  CHECK(immediate_descendants(T, 2).size() == 61);
  CHECK(immediate_descendants(T, 3).size() == 37);
  PcPresentation W = standardize(T);
  CoverData C = p_cover(W);
  AutGroup A = automorphism_group(W);
  CHECK_THROWS_AS(immediate_descendants(W, A, C, 1, {false, 1}), BudgetExceeded);
}

TEST_CASE("steps beyond the nucleus rank are rejected") {
  for (const char* name : {"81_3", "81_4", "729_17", "2187_190"}) {
    const PcPresentation& G = test::group(name);
    CoverData C = p_cover(standardize(G));
    CHECK_THROWS_AS(immediate_descendants(G, C.nucleus_rank + 1), std::out_of_range);
  }
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(are_isomorphic(test::group("729_17"), test::group("729_20")));
  CHECK_FALSE(are_isomorphic(test::group("2187_180"), test::group("2187_190")));
  CHECK(are_isomorphic(test::group("729_17"), standardize(test::group("729_17"))));
  CHECK_FALSE(are_isomorphic(test::group("81_3"), test::group("81_4")));
  // a random generating pair of <81,4> gives an isomorphic presentation
  const PcPresentation& G = test::group("81_4");
  std::mt19937_64 rng(5);
  auto all = enumerate_elements(G);
  for (int t = 0; t < 5;) {
    Elem a = all[rng() % all.size()], b = all[rng() % all.size()];
    if (subgroup_closure({a, b}, G).log_order() != G.log_order()) continue;
    ++t;
    PcPresentation R = standardize(G, {a, b});
    CHECK(are_isomorphic(R, G));
    CHECK(fingerprint(R).hash() == fingerprint(G).hash());
  }
}

TEST_CASE("S3 action") {
  ActionReport r = s3_action_check(test::group("81_4"));
  CHECK(r.action == ActionClass::S3);
  CHECK(r.image_order == 6);
  CHECK(r.exact_witnesses);
  CHECK(s3_action_check(child_243()).action == ActionClass::C2);
  CHECK(s3_action_check(child_243(), true).action == ActionClass::S3);
  CHECK(s3_action_check(test::group("729_9")).action == ActionClass::S3);
  CHECK(s3_action_check(test::group("C9xC3")).action == ActionClass::S3);
}

TEST_CASE("trees") {
  TreeOptions o;
  o.max_log = 6;
  Tree t = build_tree(test::group("729_9"), o);
  CHECK(t.nodes.size() == 1);
  CHECK(emit_dot(t).find("digraph") != std::string::npos);

  TreeOptions d;
  d.max_log = 6;
  d.abelianization_bound = ATI{9, 3};
  Tree a = build_tree(test::group("C3xC3"), d);
  Tree b = build_tree(test::group("C3xC3"), d);
  CHECK(emit_dot(a) == emit_dot(b));
  CHECK(a.nodes.size() > 3);
  for (const auto& n : a.nodes)
    if (n.parent >= 0 && !n.pattern.empty && !a.nodes[n.parent].pattern.empty)
      CHECK(antitony_holds(a.nodes[n.parent].pattern, n.pattern));
  // <81,4> is the only (9,3) vertex of order 81 with an S3 action and pattern (444;4)
  int hits = 0;
  for (const auto& n : a.nodes)
    hits += n.fp.log_order == 4 && !n.pattern.empty && n.action == ActionClass::S3 &&
            canonicalize_kappa(n.pattern).kappa_string() == "(444;4)";
  CHECK(hits == 1);

  TreeOptions m;
  m.max_log = 10;
  Tree ml = build_tree(test::group("729_17"), m);
  CHECK(ml.mainline().size() == 4);
}

TEST_CASE("identification") {
  IdentifyResult d = identify_tower_group(CapitulationClass::Distinguished);
  REQUIRE(d.candidates.size() == 1);
  CHECK(d.candidates[0].fp.log_order == 4);
  CHECK(d.verdict == "l3 = 2");

  IdentifyOptions o;
  o.tau2 = std::array<ATI, 4>{ATI{9, 9}, ATI{9, 9}, ATI{9, 9}, ATI{9, 9, 3}};
  IdentifyResult h = identify_tower_group(CapitulationClass::HarmonicVariant2, o);
  CHECK(h.candidates.size() == 2);
  for (const auto& c : h.candidates) CHECK(c.fp.log_order == 7);
  CHECK(h.verdict == "l3 = 2");

  o.tau2 = std::array<ATI, 4>{ATI{3, 3, 3, 3}, ATI{3, 3, 3, 3}, ATI{3, 3, 3, 3}, ATI{3, 3, 3, 3, 3, 3}};
  CHECK_THROWS_AS(identify_tower_group(CapitulationClass::Distinguished, o), std::runtime_error);
}

TEST_CASE("paper ids") {
  PaperIdMap ids = PaperIdMap::load(data_dir() + "/paper_ids.txt");
  CHECK(ids.lookup(fingerprint(test::group("81_4"))) == "<81,4>");
  CHECK(ids.lookup(fingerprint(test::group("729_17"))) == "<729,17>/<729,20>");
  Fingerprint none;
  CHECK(ids.lookup(none).empty());
}
