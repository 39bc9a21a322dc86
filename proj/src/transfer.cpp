#include "captower/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace cap {

namespace {

// Elements with zero exponents at the pivots of N, in lexicographic order.
std::vector<Elem> zero_pivot_elements(const Subgroup& N, const PcPresentation& P) {
  std::vector<bool> piv(P.n, false);
  for (int d : N.pivots(P.n)) piv[d] = true;
  std::vector<int> free;
  for (int i = 0; i < P.n; ++i)
    if (!piv[i]) free.push_back(i);
  std::vector<Elem> out;
  Elem cur;
  while (true) {
    out.push_back(cur);
    int k = int(free.size()) - 1;
    while (k >= 0) {
      if (++cur[free[k]] < P.rel_order[free[k]]) break;
      cur[free[k]] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

Elem random_element(const Subgroup& H, const PcPresentation& P, std::mt19937_64& rng) {
  Elem r;
  for (const auto& h : H.gens) r = multiply(r, power(h, int(rng() % P.p), P), P);
  return r;
}

}  // namespace

Generators canonical_generators(const PcPresentation& P) {
  Subgroup D = derived_subgroup(P);
  if (abelian_invariants(whole_group(P), D, P) != ATI{9, 3})
    throw std::invalid_argument("commutator quotient is not of type (9,3)");
  auto reps = zero_pivot_elements(D, P);
  Generators g;
  bool found = false;
  for (const auto& e : reps)
    if (!contains(D, power(e, 3, P), P)) {
      g.x = e;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("no element of order 9 modulo G'");
  Subgroup X = join(subgroup_closure({g.x}, P), D, P);
  for (const auto& e : reps)
    if (contains(D, power(e, 3, P), P) && !contains(X, e, P)) {
      g.y = e;
      return g;
    }
  throw std::logic_error("no second generator found");
}

std::vector<Elem> canonical_transversal(const Subgroup& H, const PcPresentation& P) {
  return zero_pivot_elements(H, P);
}

std::vector<Elem> random_transversal(const Subgroup& H, const PcPresentation& P, std::mt19937_64& rng) {
  auto t = zero_pivot_elements(H, P);
  for (auto& e : t) e = multiply(e, random_element(H, P, rng), P);
  return t;
}

Transfer artin_transfer(const PcPresentation& P, const Subgroup& H, std::optional<std::vector<Elem>> transversal) {
  if (!is_subgroup_of(derived_subgroup(P), H, P)) throw std::invalid_argument("subgroup does not contain G'");
  Transfer T;
  T.H = H;
  T.H_derived = derived_subgroup_of(H, P);
  T.transversal = transversal ? *transversal : canonical_transversal(H, P);
  for (size_t i = 0; i < T.transversal.size(); ++i) T.index[coset_rep(T.transversal[i], H, P)] = i;
  if (T.index.size() != T.transversal.size()) throw std::invalid_argument("not a transversal");
  return T;
}

Elem Transfer::apply(const Elem& g, const PcPresentation& P) const {
  Elem prod;
  for (const auto& t : transversal) {
    Elem u = multiply(g, t, P);
    auto it = index.find(coset_rep(u, H, P));
    if (it == index.end()) throw std::logic_error("transversal does not cover a coset");
    Elem h = multiply(inverse(transversal[it->second], P), u, P);
    prod = multiply(prod, h, P);
  }
  return coset_rep(prod, H_derived, P);
}

Subgroup transfer_kernel(const PcPresentation& P, const Subgroup& H) {
  Transfer T = artin_transfer(P, H);
  Subgroup D = derived_subgroup(P);
  std::vector<Elem> ker = D.gens;
  for (const auto& g : zero_pivot_elements(D, P))
    if (T.apply(g, P).is_identity()) ker.push_back(g);
  return subgroup_closure(ker, P);
}

std::string to_string(CapitulationClass c) {
  switch (c) {
    case CapitulationClass::Distinguished: return "Distinguished";
    case CapitulationClass::HarmonicVariant1: return "HarmonicVariant1";
    case CapitulationClass::HarmonicVariant2: return "HarmonicVariant2";
    case CapitulationClass::Total: return "Total";
    case CapitulationClass::Other: return "Other";
  }
  return "Other";
}

namespace {
char digit(int k) { return k < 0 ? '?' : char('0' + k); }
}  // namespace

std::string ArtinPattern::kappa_string() const {
  if (empty) return "()";
  std::string s = "(";
  for (int i = 0; i < 3; ++i) s += digit(kappa[i]);
  s += ';';
  s += digit(kappa[3]);
  return s + ")";
}

std::string ArtinPattern::serialize() const {
  if (empty) return "kappa=() tau=[]";
  std::ostringstream os;
  os << "kappa=(" << digit(kappa[0]) << ',' << digit(kappa[1]) << ',' << digit(kappa[2]) << ';'
     << digit(kappa[3]) << ") tau=[" << format_ati(tau[0]) << ',' << format_ati(tau[1]) << ','
     << format_ati(tau[2]) << ';' << format_ati(tau[3]) << ']';
  return os.str();
}

ArtinPattern ArtinPattern::parse(const std::string& s) {
  ArtinPattern ap;
  if (s == "kappa=() tau=[]") {
    ap.empty = true;
    return ap;
  }
  static const std::regex re(
      R"(kappa=\(([0-4?]),([0-4?]),([0-4?]);([0-4?])\) tau=\[(\([0-9,]+\)),(\([0-9,]+\)),(\([0-9,]+\));(\([0-9,]+\))\])");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad pattern '" + s + "'");
  for (int i = 0; i < 4; ++i) {
    char c = m[1 + i].str()[0];
    ap.kappa[i] = c == '?' ? -1 : c - '0';
    ap.tau[i] = parse_ati(m[5 + i].str());
  }
  return ap;
}

ArtinPattern artin_pattern(const PcPresentation& P, const Generators& xy) {
  Lattice L = standard_subgroup_lattice(P, xy.x, xy.y);
  ArtinPattern ap;
  for (int i = 0; i < 4; ++i) {
    Subgroup K = transfer_kernel(P, L.h3[i]);
    int k = -1;
    if (K == L.h3[3]) k = 0;
    for (int j = 0; j < 4; ++j)
      if (K == L.h9[j]) k = j + 1;
    ap.kappa[i] = k;
    ap.tau[i] = abelian_invariants(L.h3[i], {}, P);
    Elem ya = identity();
    for (int b = 0; b < 3; ++b, ya = multiply(ya, xy.y, P)) {
      Elem e = ya;
      for (int a = 0; a < 9; ++a, e = multiply(xy.x, e, P))
        if (contains(K, e, P)) ap.kernel_mask[i] |= 1u << (9 * b + a);
    }
    ap.kappa2[i] = L.name_of(transfer_kernel(P, L.h9[i]), P);
    ap.tau2[i] = abelian_invariants(L.h9[i], {}, P);
  }
  return ap;
}

ArtinPattern artin_pattern(const PcPresentation& P) {
  if (P.n == 0) {
    ArtinPattern ap;
    ap.empty = true;
    return ap;
  }
  return artin_pattern(P, canonical_generators(P));
}

ArtinPattern canonicalize_kappa(const ArtinPattern& ap) {
  if (ap.empty) return ap;
  std::array<int, 3> pos{0, 1, 2};
  std::optional<ArtinPattern> best;
  do {
    std::array<int, 3> dig{1, 2, 3};
    do {
      ArtinPattern c = ap;
      auto relabel = [&](int k) { return (k >= 1 && k <= 3) ? dig[k - 1] : k; };
      for (int i = 0; i < 3; ++i) {
        c.kappa[pos[i]] = relabel(ap.kappa[i]);
        c.tau[pos[i]] = ap.tau[i];
        c.kappa2[pos[i]] = ap.kappa2[i];
        c.tau2[pos[i]] = ap.tau2[i];
      }
      c.kappa[3] = relabel(ap.kappa[3]);
      if (!best || std::tie(c.kappa, c.tau) < std::tie(best->kappa, best->tau)) best = c;
    } while (std::next_permutation(dig.begin(), dig.end()));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return *best;
}

CapitulationClass classify_capitulation(const ArtinPattern& ap) {
  if (ap.empty) return CapitulationClass::Other;
  ArtinPattern c = canonicalize_kappa(ap);
  using K = std::array<int, 4>;
  if (c.kappa == K{4, 4, 4, 4}) return CapitulationClass::Distinguished;
  if (c.kappa == K{0, 0, 0, 4}) return CapitulationClass::Total;
  if (c.kappa == K{1, 2, 3, 4}) {
    if (c.tau[3] == ATI{9, 3, 3}) return CapitulationClass::HarmonicVariant1;
    if (c.tau[3] == ATI{9, 9, 3}) return CapitulationClass::HarmonicVariant2;
  }
  return CapitulationClass::Other;
}

bool ati_le(const ATI& a, const ATI& b) {
  ATI x = a, y = b;
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  if (x.size() > y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool ati_dominates(const ATI& a, const ATI& b) {
  auto logs = [](const ATI& v) {
    std::vector<int> l;
    for (long long e : v) {
      int k = 0;
      for (; e > 1; e /= 3) ++k;
      l.push_back(k);
    }
    std::sort(l.rbegin(), l.rend());
    return l;
  };
  auto x = logs(a), y = logs(b);
  x.resize(std::max(x.size(), y.size()), 0);
  y.resize(x.size(), 0);
  int sx = 0, sy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy) return false;
  }
  return true;
}

}  // namespace cap
