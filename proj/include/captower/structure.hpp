// Subgroups, series, quotients and abelian invariants of pc groups.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "captower/pcgroup.hpp"

namespace cap {

// A subgroup stored as its canonical induced pc generating sequence:
// one generator per pivot depth, leading exponent 1, and zero exponents at
// the other pivots. Two subgroups are equal iff their sequences are equal.
struct Subgroup {
  std::vector<Elem> gens;  // sorted by depth

  int log_order() const { return int(gens.size()); }
  long long order() const;
  std::vector<int> pivots(int n) const;
  bool operator==(const Subgroup&) const = default;
};

// Strips the leading part of g using left multiplication by generators of H.
// The result is trivial iff g lies in H. `exps` (if given) receives the
// exponents of g with respect to H's generators.
Elem sift(const Elem& g, const Subgroup& H, const PcPresentation& P, std::vector<int>* exps = nullptr);
bool contains(const Subgroup& H, const Elem& g, const PcPresentation& P);
bool is_subgroup_of(const Subgroup& A, const Subgroup& B, const PcPresentation& P);

// Canonical representative of the left coset gN (zero at N's pivots).
Elem coset_rep(const Elem& g, const Subgroup& N, const PcPresentation& P);

Subgroup trivial_subgroup();
Subgroup whole_group(const PcPresentation& P);
Subgroup subgroup_closure(const std::vector<Elem>& gens, const PcPresentation& P);
Subgroup join(const Subgroup& A, const Subgroup& B, const PcPresentation& P);
Subgroup normal_closure(const std::vector<Elem>& gens, const PcPresentation& P);
// Normal closure inside H (H must contain gens).
Subgroup normal_closure_in(const std::vector<Elem>& gens, const Subgroup& H, const PcPresentation& P);
bool is_normal(const Subgroup& H, const PcPresentation& P);

std::vector<Elem> subgroup_elements(const Subgroup& H, const PcPresentation& P);
Subgroup intersection(const Subgroup& A, const Subgroup& B, const PcPresentation& P);

// [A, B] for normal subgroups A, B.
Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B, const PcPresentation& P);
Subgroup derived_subgroup(const PcPresentation& P);
Subgroup derived_subgroup_of(const Subgroup& H, const PcPresentation& P);
Subgroup frattini_subgroup(const PcPresentation& P);

struct SeriesData {
  std::vector<Subgroup> lower_central;  // G = gamma_1 > gamma_2 > ... > 1
  std::vector<Subgroup> derived;        // G > G' > G'' > ... > 1
  int nilpotency_class = 0;
  int coclass = 0;
  int derived_length = 0;
};

SeriesData lower_central_series(const PcPresentation& P);
// P_1 = G, P_{i+1} = [P_i, G] P_i^p, ending with the trivial group.
std::vector<Subgroup> lower_exponent_p_series(const PcPresentation& P);

// Abelian type invariants, weakly decreasing, entries > 1.
using ATI = std::vector<long long>;
std::string format_ati(const ATI& a);
ATI parse_ati(const std::string& s);

// Invariants of H / (H' N) for N <= H (N may be trivial).
ATI abelian_invariants(const Subgroup& H, const Subgroup& N, const PcPresentation& P);
// Invariants of (G/N)^ab; throws std::invalid_argument if N is not normal.
ATI abelian_quotient_invariants(const PcPresentation& P, const Subgroup& N);

PcPresentation quotient_presentation(const PcPresentation& P, const Subgroup& N);
// Image of an element of P in quotient_presentation(P, N).
Elem quotient_image(const Elem& g, const PcPresentation& P, const Subgroup& N);

// The eight subgroups G' <= H <= G of index 3 and 9 for G/G' of type (9,3).
struct Lattice {
  std::array<Subgroup, 4> h3;  // H_{1,3} .. H_{4,3}
  std::array<Subgroup, 4> h9;  // H_{1,9} .. H_{4,9}
  Subgroup derived;
  std::string name_of(const Subgroup& S, const PcPresentation& P) const;
};

Lattice standard_subgroup_lattice(const PcPresentation& P, const Elem& x, const Elem& y);
std::string format_lattice(const Lattice& L, const PcPresentation& P);

}  // namespace cap
