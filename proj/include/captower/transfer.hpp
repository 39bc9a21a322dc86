// Artin transfers, transfer kernels/targets and Artin patterns for G/G' of type (9,3).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "captower/structure.hpp"

namespace cap {

struct Generators {
  Elem x, y;
};

// Lexicographically least x of order 9 modulo G', then the least y with
// y^3 in G' and y outside <x, G'>. Throws if G/G' is not of type (9,3).
Generators canonical_generators(const PcPresentation& P);

// Left transversal of H: t_i with G = union t_i H.
std::vector<Elem> canonical_transversal(const Subgroup& H, const PcPresentation& P);
std::vector<Elem> random_transversal(const Subgroup& H, const PcPresentation& P, std::mt19937_64& rng);

// Transfer V(g) = prod h_i modulo H', where g t_i = t_{s(i)} h_i.
// Returned as the canonical representative of the coset V(g) H'.
struct Transfer {
  Subgroup H;
  Subgroup H_derived;
  std::vector<Elem> transversal;
  std::map<Elem, size_t> index;  // canonical coset rep -> transversal slot
  Elem apply(const Elem& g, const PcPresentation& P) const;
};

// Throws std::invalid_argument if H does not contain G'.
Transfer artin_transfer(const PcPresentation& P, const Subgroup& H,
                        std::optional<std::vector<Elem>> transversal = std::nullopt);
// Kernel of the transfer, as the subgroup of G containing G'.
Subgroup transfer_kernel(const PcPresentation& P, const Subgroup& H);

enum class CapitulationClass { Distinguished, HarmonicVariant1, HarmonicVariant2, Total, Other };
std::string to_string(CapitulationClass c);

struct ArtinPattern {
  bool empty = false;                // trivial group (tree vertices: G/G' not of type (9,3))
  std::array<int, 4> kappa{};        // 0..4, -1 if the kernel is no standard subgroup
  std::array<ATI, 4> tau;
  std::array<std::string, 4> kappa2;  // kernels for the second layer, by name
  std::array<ATI, 4> tau2;
  // bit 9b+a set when x^a y^b (a mod 9, b mod 3) lying in the kernel; relative to
  // the generators used, so only comparable along a descendant tree
  std::array<uint32_t, 4> kernel_mask{};

  std::string kappa_string() const;  // e.g. "(123;4)"
  std::string serialize() const;     // kappa=(1,2,3;4) tau=[(27,3),(27,3),(27,3);(9,3,3)]
  static ArtinPattern parse(const std::string& s);
  bool operator==(const ArtinPattern& o) const {
    return empty == o.empty && kappa == o.kappa && tau == o.tau && kappa2 == o.kappa2 && tau2 == o.tau2;
  }
};

ArtinPattern artin_pattern(const PcPresentation& P);
// Same, for given generators (used to test relabeling invariance).
ArtinPattern artin_pattern(const PcPresentation& P, const Generators& xy);

// Lexicographically least kappa under independent relabeling of positions
// 1-3 and kernel digits 1-3; tau is permuted with the positions.
ArtinPattern canonicalize_kappa(const ArtinPattern& ap);
CapitulationClass classify_capitulation(const ArtinPattern& ap);

// a is a quotient type of b: sorted componentwise a_i <= b_i.
bool ati_le(const ATI& a, const ATI& b);
// Dominance order on the exponent partitions: every partial sum of the sorted
// logarithms of a is at least the one of b. (27,3,3) dominates (9,9,3).
bool ati_dominates(const ATI& a, const ATI& b);

}  // namespace cap
