// p-group generation: weighted presentations, p-covering groups, automorphism
// groups, immediate descendants, isomorphism tests and descendant trees.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "captower/linalg.hpp"
#include "captower/structure.hpp"
#include "captower/transfer.hpp"

namespace cap {

// ---- weighted presentations ----

// Rewrites P on a pc basis refining the lower exponent-p central series,
// starting from the given generators of G/Phi(G). Every generator of weight
// >= 2 is defined as [g_j, g_i] (g_i of weight 1) or g_j^p and equals that
// relation's right-hand side exactly. Throws if `layer1` does not generate G.
PcPresentation standardize(const PcPresentation& P, const std::vector<Elem>& layer1);
// Uses canonical generators when G/G' is of type (9,3), else lex-least ones.
PcPresentation standardize(const PcPresentation& P);
std::vector<Elem> minimal_generators(const PcPresentation& P);

int rank_of_frattini_quotient(const PcPresentation& P);
int pclass_of(const PcPresentation& W);  // max weight of a weighted presentation
int layer1_count(const PcPresentation& W);
// W / P_{w+1}(W): keep generators of weight <= w.
PcPresentation truncate_to_weight(const PcPresentation& W, int w);

// ---- p-covering group ----

struct CoverData {
  PcPresentation cover;  // generators of G followed by a basis of the multiplicator M
  int n = 0;             // number of generators of G
  int multiplicator_rank = 0;
  int nucleus_rank = 0;
  Mat nucleus;  // RREF rows in M coordinates
  std::vector<int> nucleus_pivots;
  int pclass = 0;
};

// `G` must be weighted (see standardize). Throws BudgetExceeded when the cover
// would have more than 3^max_log elements.
CoverData p_cover(const PcPresentation& G, int max_log = 24);
int relation_rank(const PcPresentation& P);

// ---- automorphisms ----

struct Automorphism {
  std::vector<Elem> img;  // images of all pc generators
  bool operator==(const Automorphism&) const = default;
};

Elem apply(const Automorphism& a, const Elem& e, const PcPresentation& G);
Automorphism compose(const Automorphism& a, const Automorphism& b, const PcPresentation& G);  // a after b
Automorphism identity_automorphism(const PcPresentation& G);
// Extends images of the weight-1 generators through the definitions.
Automorphism from_generator_images(const PcPresentation& G, const std::vector<Elem>& layer1_images);
bool is_automorphism(const Automorphism& a, const PcPresentation& G);
// Action on G/Phi(G): row k holds the weight-1 exponents of the image of
// generator k.
Mat frattini_matrix(const Automorphism& a, const PcPresentation& G);

// Aut(G) for weighted G, as a polycyclic generating sequence (top first).
struct AutGroup {
  std::vector<Automorphism> gens;
  std::vector<Automorphism> inv;
  std::vector<int> rel_order;
  long double order() const;
  int log3_order() const;
};

// Aut(G) built from GL(d,3) through the lower exponent-p central series.
AutGroup automorphism_group(const PcPresentation& W);
// Brute-force Aut(G) (small groups only); returns the group order.
long long brute_force_aut_order(const PcPresentation& W);

// Action of an automorphism of G on the multiplicator of the cover (d x d,
// rows are images of basis vectors).
Mat multiplicator_action(const Automorphism& a, const CoverData& C, const PcPresentation& G);

// ---- descendants ----

struct Descendant {
  PcPresentation group;
  AutGroup aut;
  long long orbit_size = 0;
  int step = 0;
};

struct DescendantOptions {
  bool with_aut = true;  // also build Aut of each descendant
  long long max_points = 20'000'000;
};

long long count_allowable_subspaces(int d, int nu, int s);
// One representative per isomorphism class, in orbit discovery order.
std::vector<Descendant> immediate_descendants(const PcPresentation& W, const AutGroup& A, const CoverData& C,
                                              int step, const DescendantOptions& opt = {});
// Convenience form: standardizes, builds Aut(G) and the cover.
std::vector<PcPresentation> immediate_descendants(const PcPresentation& P, int step);

// ---- isomorphism ----

struct Fingerprint {
  int log_order = 0;
  int nilpotency_class = 0;
  int coclass = 0;
  ATI abelianization;
  std::string tau;        // serialized pattern or "-" outside the (9,3) scope
  std::string kappa;      // canonical kappa string
  int derived_length = 0;
  int relation_rank = -1;
  int nucleus_rank = -1;
  std::string text() const;
  std::string hash() const;  // 16 hex digits (FNV-1a of text())
};

Fingerprint fingerprint(const PcPresentation& P, const CoverData* cover = nullptr);
bool are_isomorphic(const PcPresentation& A, const PcPresentation& B, long long budget = 100'000'000);

// ---- S3 action ----

enum class ActionClass { S3, C3, C2, Trivial, Inconclusive };
std::string to_string(ActionClass a);

struct ActionReport {
  ActionClass action = ActionClass::Trivial;
  bool s3xc2 = false;         // image is the full Borel subgroup of order 12
  int image_order = 1;        // order of the image of Aut(G) in GL(2,3)
  // the image in Aut(G/G') has an S3 whose 3-cycle also moves the order-3
  // subgroups of G/G', as the Galois action on the class group must
  bool galois_s3 = false;
  std::optional<Automorphism> sigma;  // order-3 witness on G/Phi(G)
  std::optional<Automorphism> tau;    // involution witness
  bool exact_witnesses = false;       // sigma^3 = tau^2 = 1 and tau sigma tau = sigma^-1 in Aut(G)
};

// S3 when the image of Aut(G) in Aut(G/Phi(G)) contains S3; else C2 when
// Aut(G) has an involution; else C3 when it has an element of order 3.
// strict_frattini uses all of Aut(G/Phi(G)) = GL(2,3) instead of the image.
ActionReport s3_action_check(const PcPresentation& P, bool strict_frattini = false);
ActionReport s3_action_check(const PcPresentation& W, const AutGroup& A, bool strict_frattini = false);

// ---- trees ----

struct TreeNode {
  int id = 0;
  int parent = -1;
  int step = 0;
  std::vector<int> children;
  std::string coord;  // "R", "R-#1;2", "R-#1;2-#2;1"
  PcPresentation group;
  Fingerprint fp;
  ArtinPattern pattern;  // empty outside the (9,3) scope
  bool metabelian = false;
  ActionClass action = ActionClass::Trivial;
  bool s3xc2 = false;
  std::string paper_id;
  bool pruned = false;  // not expanded because of the antitony filter
};

struct PaperIdMap;

struct TreeOptions {
  int max_log = 10;
  int max_step = 3;
  int max_depth = -1;  // edges below the root; -1 for no limit
  bool same_abelianization = true;  // keep descendants with the root's G/G'
  // instead keep descendants whose G/G' is a quotient type of this one
  std::optional<ATI> abelianization_bound;
  bool metabelian_only = false;
  bool compute_action = true;
  bool strict_frattini = false;
  std::optional<ArtinPattern> target;  // antitony pruning target
  long long budget = 20'000'000;       // allowable subspaces per expansion
  const PaperIdMap* ids = nullptr;
};

struct Tree {
  std::vector<TreeNode> nodes;
  std::vector<int> count_per_log(int min_log, int max_log) const;
  // root, then while unique the metabelian child whose Aut image is S3 x C2
  std::vector<int> mainline() const;
};

Tree build_tree(const PcPresentation& root, const TreeOptions& opt);
std::string emit_dot(const Tree& t, const std::string& name = "tree");

// Antitony relation between a parent pattern and a child pattern.
bool antitony_holds(const ArtinPattern& parent, const ArtinPattern& child);
// Whether `current` can still lead to `target` under antitony.
bool may_reach(const ArtinPattern& current, const ArtinPattern& target);

// Curated paper identifiers: lines "order id fingerprint-hash [action]".
struct PaperIdMap {
  struct Entry {
    std::string id;  // "<order,id>"
    std::optional<ActionClass> action;
  };
  std::multimap<std::string, Entry> by_hash;
  static PaperIdMap load(const std::string& path);
  // "" when unknown; ambiguous hashes give all ids joined by '/'. Entries
  // with an action column are kept only when it agrees with `action`.
  std::string lookup(const Fingerprint& fp, std::optional<ActionClass> action = std::nullopt) const;
};

// ---- tower group identification ----

struct Candidate {
  std::string root;   // catalog name of the tree root
  std::string coord;  // tree coordinate below that root
  std::string paper_id;
  Fingerprint fp;
  ArtinPattern pattern;
  ActionClass action = ActionClass::Trivial;
  PcPresentation group;
};

struct IdentifyResult {
  CapitulationClass cls = CapitulationClass::Other;
  std::vector<Candidate> candidates;
  std::string verdict;  // "l3 = 2", "l3 >= 2", "l3 >= 3", "l3 >= 2 (l3 >= 3 if ...)"
  std::vector<std::string> notes;
};

struct IdentifyOptions {
  std::optional<std::array<ATI, 4>> tau2;  // positions 1-3 compared as a multiset
  int d2_min = 2;
  int d2_max = 5;
  bool require_s3 = true;
  bool strict_frattini = false;
  std::optional<int> max_log;  // default depends on the class
  // edges below the root; total capitulation defaults to immediate descendants
  std::optional<int> max_depth;
  std::string catalog_path;    // default catalog when empty
  const PaperIdMap* ids = nullptr;
};

// Searches the descendant trees that can carry the class's Artin pattern and
// keeps the metabelian vertices passing the filters. Throws
// std::runtime_error when nothing survives.
IdentifyResult identify_tower_group(CapitulationClass cls, const IdentifyOptions& opt = {});
// The required (kappa, tau) of a class, kappa in canonical form.
ArtinPattern class_pattern(CapitulationClass cls);

}  // namespace cap
