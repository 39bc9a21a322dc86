#include "captower/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "captower/linalg.hpp"

namespace cap {

long long Subgroup::order() const {
  long long r = 1;
  for (size_t i = 0; i < gens.size(); ++i) r *= 3;
  return r;
}

std::vector<int> Subgroup::pivots(int n) const {
  std::vector<int> out;
  for (const auto& g : gens) out.push_back(g.depth(n));
  return out;
}

Elem sift(const Elem& g, const Subgroup& H, const PcPresentation& P, std::vector<int>* exps) {
  Elem r = g;
  if (exps) exps->assign(H.gens.size(), 0);
  size_t k = 0;
  while (!r.is_identity()) {
    int d = r.depth(P.n);
    while (k < H.gens.size() && H.gens[k].depth(P.n) < d) ++k;
    if (k == H.gens.size() || H.gens[k].depth(P.n) != d) return r;
    int a = r[d];
    if (exps) (*exps)[k] = a;
    r = multiply(power(H.gens[k], -a, P), r, P);
  }
  return r;
}

bool contains(const Subgroup& H, const Elem& g, const PcPresentation& P) {
  return sift(g, H, P).is_identity();
}

bool is_subgroup_of(const Subgroup& A, const Subgroup& B, const PcPresentation& P) {
  for (const auto& a : A.gens)
    if (!contains(B, a, P)) return false;
  return true;
}

Elem coset_rep(const Elem& g, const Subgroup& N, const PcPresentation& P) {
  Elem r = g;
  for (const auto& h : N.gens) {
    int d = h.depth(P.n);
    if (r[d]) r = multiply(r, power(h, -int(r[d]), P), P);
  }
  return r;
}

Subgroup trivial_subgroup() { return {}; }

Subgroup whole_group(const PcPresentation& P) {
  Subgroup G;
  for (int i = 0; i < P.n; ++i) G.gens.push_back(gen_elem(i));
  return G;
}

namespace {

// Incremental closure: maintains one generator per depth and keeps the set
// closed under p-th powers and commutators.
class Closure {
 public:
  explicit Closure(const PcPresentation& P) : P_(P), slot_(P.n) {}

  explicit Closure(const PcPresentation& P, const Subgroup& H) : Closure(P) {
    for (const auto& h : H.gens) slot_[h.depth(P.n)] = h;
  }

  bool add(const Elem& g) {
    bool grew = false;
    std::vector<Elem> queue{g};
    while (!queue.empty()) {
      Elem r = sift_slots(queue.back());
      queue.pop_back();
      if (r.is_identity()) continue;
      int d = r.depth(P_.n);
      int lead = r[d];
      if (lead != 1) r = power(r, inv_mod(lead, P_.rel_order[d]), P_);
      slot_[d] = r;
      grew = true;
      queue.push_back(power(r, P_.p, P_));
      for (int k = 0; k < P_.n; ++k)
        if (k != d && slot_[k]) queue.push_back(commutator(r, *slot_[k], P_));
    }
    return grew;
  }

  bool has(const Elem& g) const { return sift_slots(g).is_identity(); }

  Subgroup result() const {
    Subgroup H;
    std::vector<int> piv;
    for (int d = 0; d < P_.n; ++d)
      if (slot_[d]) {
        H.gens.push_back(*slot_[d]);
        piv.push_back(d);
      }
    for (size_t a = 0; a < H.gens.size(); ++a)
      for (size_t b = a + 1; b < H.gens.size(); ++b) {
        int e = H.gens[a][piv[b]];
        if (e) H.gens[a] = multiply(H.gens[a], power(H.gens[b], -e, P_), P_);
      }
    return H;
  }

 private:
  Elem sift_slots(const Elem& g) const {
    Elem r = g;
    while (!r.is_identity()) {
      int d = r.depth(P_.n);
      if (!slot_[d]) return r;
      r = multiply(power(*slot_[d], -int(r[d]), P_), r, P_);
    }
    return r;
  }

  const PcPresentation& P_;
  std::vector<std::optional<Elem>> slot_;
};

// Normal closure under conjugation by `by`, starting from the closure state.
Subgroup close_normal(Closure& C, const std::vector<Elem>& by, const PcPresentation& P) {
  bool changed = true;
  while (changed) {
    changed = false;
    Subgroup H = C.result();
    for (const auto& h : H.gens)
      for (const auto& g : by) {
        Elem c = commutator(h, g, P);
        if (!C.has(c)) {
          C.add(c);
          changed = true;
        }
      }
  }
  return C.result();
}

}  // namespace

Subgroup subgroup_closure(const std::vector<Elem>& gens, const PcPresentation& P) {
  Closure C(P);
  for (const auto& g : gens) C.add(g);
  return C.result();
}

Subgroup join(const Subgroup& A, const Subgroup& B, const PcPresentation& P) {
  Closure C(P, A);
  for (const auto& g : B.gens) C.add(g);
  return C.result();
}

Subgroup normal_closure(const std::vector<Elem>& gens, const PcPresentation& P) {
  Closure C(P);
  for (const auto& g : gens) C.add(g);
  return close_normal(C, whole_group(P).gens, P);
}

Subgroup normal_closure_in(const std::vector<Elem>& gens, const Subgroup& H, const PcPresentation& P) {
  Closure C(P);
  for (const auto& g : gens) C.add(g);
  return close_normal(C, H.gens, P);
}

bool is_normal(const Subgroup& H, const PcPresentation& P) {
  for (const auto& h : H.gens)
    for (int i = 0; i < P.n; ++i)
      if (!contains(H, conjugate(h, gen_elem(i), P), P)) return false;
  return true;
}

std::vector<Elem> subgroup_elements(const Subgroup& H, const PcPresentation& P) {
  std::vector<Elem> out{identity()};
  // products h_1^a_1 ... h_k^a_k, built from the last generator upwards
  for (int k = int(H.gens.size()) - 1; k >= 0; --k) {
    std::vector<Elem> next;
    next.reserve(out.size() * P.p);
    Elem pw = identity();
    for (int a = 0; a < P.p; ++a) {
      for (const auto& e : out) next.push_back(multiply(pw, e, P));
      pw = multiply(pw, H.gens[k], P);
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup intersection(const Subgroup& A, const Subgroup& B, const PcPresentation& P) {
  const Subgroup& small = A.gens.size() <= B.gens.size() ? A : B;
  const Subgroup& big = &small == &A ? B : A;
  std::vector<Elem> common;
  for (const auto& e : subgroup_elements(small, P))
    if (contains(big, e, P)) common.push_back(e);
  return subgroup_closure(common, P);
}

Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B, const PcPresentation& P) {
  std::vector<Elem> gens;
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) gens.push_back(commutator(a, b, P));
  return normal_closure(gens, P);
}

Subgroup derived_subgroup(const PcPresentation& P) {
  std::vector<Elem> gens;
  for (int j = 0; j < P.n; ++j)
    for (int i = 0; i < j; ++i) gens.push_back(P.comm[j][i]);
  return normal_closure(gens, P);
}

Subgroup derived_subgroup_of(const Subgroup& H, const PcPresentation& P) {
  std::vector<Elem> gens;
  for (size_t j = 0; j < H.gens.size(); ++j)
    for (size_t i = 0; i < j; ++i) gens.push_back(commutator(H.gens[j], H.gens[i], P));
  return normal_closure_in(gens, H, P);
}

Subgroup frattini_subgroup(const PcPresentation& P) {
  Closure C(P, derived_subgroup(P));
  for (int i = 0; i < P.n; ++i) C.add(power(gen_elem(i), P.p, P));
  return C.result();
}

SeriesData lower_central_series(const PcPresentation& P) {
  SeriesData s;
  Subgroup G = whole_group(P);
  s.lower_central.push_back(G);
  while (!s.lower_central.back().gens.empty()) {
    Subgroup next = commutator_subgroup(s.lower_central.back(), G, P);
    if (next == s.lower_central.back()) throw std::logic_error("lower central series does not descend");
    s.lower_central.push_back(next);
  }
  s.derived.push_back(G);
  while (!s.derived.back().gens.empty()) s.derived.push_back(derived_subgroup_of(s.derived.back(), P));
  s.nilpotency_class = int(s.lower_central.size()) - 1;
  s.derived_length = int(s.derived.size()) - 1;
  s.coclass = P.log_order() - s.nilpotency_class;
  return s;
}

std::vector<Subgroup> lower_exponent_p_series(const PcPresentation& P) {
  std::vector<Subgroup> out{whole_group(P)};
  Subgroup G = out.back();
  while (!out.back().gens.empty()) {
    const Subgroup& cur = out.back();
    Closure C(P, commutator_subgroup(cur, G, P));
    for (const auto& h : cur.gens) C.add(power(h, P.p, P));
    out.push_back(C.result());
  }
  return out;
}

std::string format_ati(const ATI& a) {
  if (a.empty()) return "(1)";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

ATI parse_ati(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad ATI '" + s + "'");
  ATI out;
  std::string body = s.substr(1, s.size() - 2);
  if (body == "1" || body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

ATI abelian_invariants(const Subgroup& H, const Subgroup& N, const PcPresentation& P) {
  const size_t k = H.gens.size();
  if (k == 0) return {};
  std::vector<std::vector<long long>> rows;
  std::vector<int> ex;
  auto add_row = [&](const Elem& g, int i, long long coeff) {
    if (!sift(g, H, P, &ex).is_identity()) throw std::invalid_argument("element outside subgroup");
    std::vector<long long> row(k, 0);
    for (size_t c = 0; c < k; ++c) row[c] = -ex[c];
    if (i >= 0) row[i] += coeff;
    rows.push_back(row);
  };
  for (size_t i = 0; i < k; ++i) add_row(power(H.gens[i], P.p, P), int(i), P.p);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < j; ++i) add_row(commutator(H.gens[j], H.gens[i], P), -1, 0);
  for (const auto& g : N.gens) add_row(g, -1, 0);
  // the quotient has order at most p^k, so working mod p^(k+1) loses nothing
  ATI out;
  for (long long d : smith_normal_form_mod(rows, P.p, int(k) + 1)) {
    if (d == 0) throw std::logic_error("abelian_invariants: infinite quotient");
    if (d != 1) out.push_back(d);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

ATI abelian_quotient_invariants(const PcPresentation& P, const Subgroup& N) {
  if (!is_normal(N, P)) throw std::invalid_argument("subgroup is not normal");
  return abelian_invariants(whole_group(P), N, P);
}

Elem quotient_image(const Elem& g, const PcPresentation& P, const Subgroup& N) {
  Elem r = coset_rep(g, N, P);
  Elem out;
  std::vector<bool> piv(P.n, false);
  for (int d : N.pivots(P.n)) piv[d] = true;
  int k = 0;
  for (int i = 0; i < P.n; ++i)
    if (!piv[i]) out[k++] = r[i];
  return out;
}

PcPresentation quotient_presentation(const PcPresentation& P, const Subgroup& N) {
  if (!is_normal(N, P)) throw std::invalid_argument("subgroup is not normal");
  std::vector<int> map(P.n, -1), kept;
  std::vector<bool> piv(P.n, false);
  for (int d : N.pivots(P.n)) piv[d] = true;
  for (int i = 0; i < P.n; ++i)
    if (!piv[i]) {
      map[i] = int(kept.size());
      kept.push_back(i);
    }
  PcPresentation Q(int(kept.size()), P.p);
  for (size_t a = 0; a < kept.size(); ++a) {
    int i = kept[a];
    Q.gens[a] = P.gens[i];
    Q.gens[a].aux_of = P.gens[i].aux_of >= 0 ? map[P.gens[i].aux_of] : -1;
    auto& def = Q.gens[a].def;
    if (def.kind != Definition::Kind::None) {
      int j = def.j >= 0 ? map[def.j] : -1, ii = def.i >= 0 ? map[def.i] : -1;
      bool ok = (def.j < 0 || j >= 0) && (def.i < 0 || ii >= 0);
      def = ok ? Definition{def.kind, j, ii} : Definition{};
    }
    Q.power[a] = quotient_image(P.power[i], P, N);
    for (size_t b = 0; b < a; ++b) Q.comm[a][b] = quotient_image(P.comm[i][kept[b]], P, N);
  }
  Q.finalize();
  return Q;
}

std::string Lattice::name_of(const Subgroup& S, const PcPresentation& P) const {
  if (S == whole_group(P)) return "G";
  if (S == derived) return "G'";
  for (int i = 0; i < 4; ++i) {
    if (S == h3[i]) return "H_{" + std::to_string(i + 1) + ",3}";
    if (S == h9[i]) return "H_{" + std::to_string(i + 1) + ",9}";
  }
  return "index-" + std::to_string(P.log_order() - S.log_order()) + " subgroup";
}

Lattice standard_subgroup_lattice(const PcPresentation& P, const Elem& x, const Elem& y) {
  Lattice L;
  L.derived = derived_subgroup(P);
  const Subgroup& D = L.derived;
  auto in_d = [&](const Elem& g) { return contains(D, g, P); };
  Elem x3 = power(x, 3, P);
  if (in_d(x3) || !in_d(power(x3, 3, P)) || !in_d(power(y, 3, P)) ||
      P.log_order() - D.log_order() != 3)
    throw std::invalid_argument("x, y do not generate a commutator quotient of type (9,3)");
  auto H = [&](std::vector<Elem> g) {
    Closure C(P, D);
    for (const auto& e : g) C.add(e);
    return C.result();
  };
  Elem yi = inverse(y, P);
  L.h3 = {H({x}), H({multiply(x, y, P)}), H({multiply(x, yi, P)}), H({x3, y})};
  L.h9 = {H({y}), H({multiply(x3, y, P)}), H({multiply(x3, yi, P)}), H({x3})};
  if (contains(L.h3[0], y, P)) throw std::invalid_argument("y lies in <x, G'>");
  for (int i = 0; i < 4; ++i) {
    if (P.log_order() - L.h3[i].log_order() != 1 || P.log_order() - L.h9[i].log_order() != 2)
      throw std::logic_error("lattice subgroup has wrong index");
  }
  return L;
}

std::string format_lattice(const Lattice& L, const PcPresentation& P) {
  static const char* h3_def[] = {"<x,G'>", "<xy,G'>", "<xy^-1,G'>", "<x^3,y,G'>"};
  static const char* h9_def[] = {"<y,G'>", "<x^3y,G'>", "<x^3y^-1,G'>", "<x^3,G'>"};
  std::ostringstream os;
  for (int i = 0; i < 4; ++i)
    os << "H_{" << i + 1 << ",3} = " << h3_def[i] << "  order 3^" << L.h3[i].log_order() << "  ATI "
       << format_ati(abelian_invariants(L.h3[i], {}, P)) << '\n';
  for (int i = 0; i < 4; ++i)
    os << "H_{" << i + 1 << ",9} = " << h9_def[i] << "  order 3^" << L.h9[i].log_order() << "  ATI "
       << format_ati(abelian_invariants(L.h9[i], {}, P)) << '\n';
  os << "G' order 3^" << L.derived.log_order() << '\n';
  return os.str();
}

}  // namespace cap
