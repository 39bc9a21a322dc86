// Power-commutator presentations of finite p-groups and collection.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cap {

constexpr int kMaxGens = 32;

// Normal form g_1^e_1 ... g_n^e_n. Entries beyond n are zero.
struct Elem {
  std::array<uint8_t, kMaxGens> e{};

  uint8_t operator[](int i) const { return e[i]; }
  uint8_t& operator[](int i) { return e[i]; }
  bool operator==(const Elem&) const = default;
  auto operator<=>(const Elem&) const = default;

  bool is_identity() const;
  int depth(int n) const;  // first nonzero index, n if identity
  uint64_t pack() const;   // 2 bits per entry; only valid for exponents < 4
};

struct ElemHash {
  size_t operator()(const Elem& a) const;
};

// (generator, exponent) letters; exponents may be negative or exceed the order.
using Word = std::vector<std::pair<int, int>>;

Word word_of(const Elem& a, int n);

// How a generator arises from earlier ones in a weighted presentation.
struct Definition {
  enum class Kind { None, Generator, Power, Commutator };
  Kind kind = Kind::None;
  int j = -1;
  int i = -1;
};

struct GenInfo {
  std::string label;
  int aux_of = -1;  // generator this one is a 3-power of (composite-power refinement)
  int weight = 0;   // 0 when the presentation is not weighted
  Definition def;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PcPresentation {
 public:
  PcPresentation() = default;
  explicit PcPresentation(int n, int p = 3);

  int p = 3;
  int n = 0;
  std::vector<int> rel_order;                 // relative orders (p after refinement)
  std::vector<Elem> power;                    // g_i^{rel_order[i]}
  std::vector<std::vector<Elem>> comm;        // comm[j][i] = [g_j, g_i], j > i
  std::vector<GenInfo> gens;

  // Builds conjugation tables; must be called after relations are set.
  void finalize();
  bool finalized() const { return !conj_.empty() || n == 0; }

  int label_index(std::string_view label) const;  // -1 if absent
  bool weighted() const;
  int log_order() const;  // log_p |G| when all relative orders equal p
  bool is_refined() const;

  const Elem& conj(int j, int i) const { return conj_[j][i]; }

  bool operator==(const PcPresentation& o) const;

 private:
  std::vector<std::vector<Elem>> conj_;  // g_j^{g_i}
};

Elem identity();
Elem gen_elem(int i, int e = 1);

Elem collect(const Word& w, const PcPresentation& P);
Elem multiply(const Elem& a, const Elem& b, const PcPresentation& P);
Elem inverse(const Elem& a, const PcPresentation& P);
Elem power(const Elem& a, long long k, const PcPresentation& P);
Elem commutator(const Elem& a, const Elem& b, const PcPresentation& P);  // a^-1 b^-1 a b
Elem conjugate(const Elem& a, const Elem& b, const PcPresentation& P);   // b^-1 a b
long long element_order(const Elem& a, const PcPresentation& P);

// Collection with a central elementary abelian extension: every relation
// may carry a tail vector over F_p of length m, accumulated on each use.
struct TailData {
  int m = 0;
  std::vector<std::vector<uint8_t>> power_tail;             // [i]
  std::vector<std::vector<std::vector<uint8_t>>> comm_tail;  // [j][i]
};

struct TailedElem {
  Elem g;
  std::vector<uint8_t> t;
};

TailedElem multiply_tailed(const TailedElem& a, const TailedElem& b, const PcPresentation& P,
                           const TailData& T);

struct ConsistencyReport {
  bool ok = true;
  std::string failure;  // description of the first failing test word
  int k = -1, j = -1, i = -1;
};

ConsistencyReport check_consistency(const PcPresentation& P);

// All test words; `visit` gets (description, lhs, rhs) and returns false to stop.
// Works on tailed elements so the same list drives p-cover computation.
void consistency_words(const PcPresentation& P, const TailData& T,
                       const std::function<bool(const std::string&, const TailedElem&,
                                                const TailedElem&)>& visit);

std::vector<Elem> enumerate_elements(const PcPresentation& P, int max_log = 10);

std::string format_elem(const Elem& a, const PcPresentation& P);

// Catalog DSL.
struct CatalogEntry {
  std::string name;
  PcPresentation pres;
};

PcPresentation parse_presentation(std::string_view text);
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::string print_presentation(const PcPresentation& P, const std::string& name = "");
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace cap
