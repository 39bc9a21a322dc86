#include "captower/pcgroup.hpp"

#include <sstream>

namespace cap {

bool Elem::is_identity() const {
  for (uint8_t x : e)
    if (x) return false;
  return true;
}

int Elem::depth(int n) const {
  for (int i = 0; i < n; ++i)
    if (e[i]) return i;
  return n;
}

uint64_t Elem::pack() const {
  uint64_t r = 0;
  for (int i = 0; i < kMaxGens; ++i) r |= uint64_t(e[i] & 3) << (2 * i);
  return r;
}

size_t ElemHash::operator()(const Elem& a) const {
  uint64_t h = 1469598103934665603ull;
  for (uint8_t x : a.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return size_t(h);
}

Word word_of(const Elem& a, int n) {
  Word w;
  for (int i = 0; i < n; ++i)
    if (a[i]) w.emplace_back(i, a[i]);
  return w;
}

Elem identity() { return Elem{}; }

Elem gen_elem(int i, int e) {
  Elem a;
  a[i] = uint8_t(e);
  return a;
}

PcPresentation::PcPresentation(int n_, int p_) : p(p_), n(n_) {
  if (n > kMaxGens) throw BudgetExceeded("presentation has more than 32 generators");
  rel_order.assign(n, p);
  power.assign(n, Elem{});
  comm.assign(n, std::vector<Elem>(n));
  gens.resize(n);
  for (int i = 0; i < n; ++i) gens[i].label = "g" + std::to_string(i + 1);
}

void PcPresentation::finalize() {
  conj_.assign(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= i; ++k)
      if (power[i][k]) throw std::invalid_argument("power relation of " + gens[i].label + " involves an earlier generator");
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const Elem& c = comm[j][i];
      for (int k = 0; k <= j; ++k)
        if (c[k])
          throw std::invalid_argument("commutator [" + gens[j].label + "," + gens[i].label +
                                      "] involves a generator not later than " + gens[j].label);
      Elem g = c;
      g[j] = 1;
      conj_[j][i] = g;
    }
}

int PcPresentation::label_index(std::string_view label) const {
  for (int i = 0; i < n; ++i)
    if (gens[i].label == label) return i;
  return -1;
}

bool PcPresentation::weighted() const {
  if (n == 0) return true;
  for (const auto& g : gens)
    if (g.weight <= 0) return false;
  return true;
}

int PcPresentation::log_order() const {
  int s = 0;
  for (int r : rel_order) {
    int x = r;
    while (x > 1) {
      x /= p;
      ++s;
    }
  }
  return s;
}

bool PcPresentation::is_refined() const {
  for (int r : rel_order)
    if (r != p) return false;
  return true;
}

bool PcPresentation::operator==(const PcPresentation& o) const {
  if (p != o.p || n != o.n || rel_order != o.rel_order || power != o.power) return false;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (comm[j][i] != o.comm[j][i]) return false;
  for (int i = 0; i < n; ++i)
    if (gens[i].label != o.gens[i].label || gens[i].aux_of != o.gens[i].aux_of) return false;
  return true;
}

namespace {

struct NoTail {
  void on_power(int) {}
  void on_conj(int, int) {}
};

struct VecTail {
  const TailData& T;
  std::vector<uint8_t>& acc;
  int p;
  void add(const std::vector<uint8_t>& v) {
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k]) acc[k] = uint8_t((acc[k] + v[k]) % p);
  }
  void on_power(int i) { add(T.power_tail[i]); }
  void on_conj(int j, int i) { add(T.comm_tail[j][i]); }
};

inline void push_elem(std::vector<int>& st, const Elem& a, int n) {
  for (int k = n - 1; k >= 0; --k)
    for (int c = 0; c < a[k]; ++c) st.push_back(k);
}

// Collection from the left: consume letters from the stack (top first) into r.
template <class Sink>
void collect_stack(Elem& r, std::vector<int>& st, const PcPresentation& P, Sink& sink) {
  const int n = P.n;
  while (!st.empty()) {
    int i = st.back();
    st.pop_back();
    int last = -1;
    for (int k = n - 1; k > i; --k)
      if (r[k]) {
        last = k;
        break;
      }
    if (last < 0) {
      if (++r[i] == P.rel_order[i]) {
        r[i] = 0;
        sink.on_power(i);
        push_elem(st, P.power[i], n);
      }
      continue;
    }
    // r = u v with v in <g_{i+1},...>; r g_i = u g_i v^{g_i}
    Elem v;
    for (int k = i + 1; k <= last; ++k) {
      v[k] = r[k];
      r[k] = 0;
    }
    for (int k = last; k > i; --k)
      for (int c = 0; c < v[k]; ++c) {
        sink.on_conj(k, i);
        push_elem(st, P.conj(k, i), n);
      }
    st.push_back(i);
  }
}

template <class Sink>
void mul_into(Elem& r, const Elem& b, const PcPresentation& P, Sink& sink) {
  std::vector<int> st;
  st.reserve(64);
  push_elem(st, b, P.n);
  collect_stack(r, st, P, sink);
}

template <class Sink>
Elem inverse_impl(const Elem& a, const PcPresentation& P, Sink& sink) {
  Elem x, cur = a;
  for (int i = 0; i < P.n; ++i) {
    int e = cur[i];
    if (!e) continue;
    int f = P.rel_order[i] - e;
    std::vector<int> st(f, i);
    collect_stack(cur, st, P, sink);
    x[i] = uint8_t(f);
  }
  return x;
}

}  // namespace

Elem multiply(const Elem& a, const Elem& b, const PcPresentation& P) {
  Elem r = a;
  NoTail s;
  mul_into(r, b, P, s);
  return r;
}

Elem inverse(const Elem& a, const PcPresentation& P) {
  NoTail s;
  return inverse_impl(a, P, s);
}

Elem collect(const Word& w, const PcPresentation& P) {
  Elem r;
  NoTail s;
  std::vector<int> st;
  for (auto [g, e] : w) {
    if (g < 0 || g >= P.n) throw std::out_of_range("word letter out of range");
    if (e >= 0) {
      st.assign(e, g);
      collect_stack(r, st, P, s);
    } else {
      Elem gi = inverse(gen_elem(g), P);
      for (int c = 0; c < -e; ++c) mul_into(r, gi, P, s);
    }
  }
  return r;
}

Elem power(const Elem& a, long long k, const PcPresentation& P) {
  Elem base = k < 0 ? inverse(a, P) : a;
  if (k < 0) k = -k;
  Elem r;
  while (k) {
    if (k & 1) r = multiply(r, base, P);
    k >>= 1;
    if (k) base = multiply(base, base, P);
  }
  return r;
}

Elem commutator(const Elem& a, const Elem& b, const PcPresentation& P) {
  Elem ba = multiply(b, a, P);
  Elem ab = multiply(a, b, P);
  return multiply(inverse(ba, P), ab, P);
}

Elem conjugate(const Elem& a, const Elem& b, const PcPresentation& P) {
  return multiply(inverse(b, P), multiply(a, b, P), P);
}

long long element_order(const Elem& a, const PcPresentation& P) {
  long long k = 1;
  Elem x = a;
  while (!x.is_identity()) {
    x = multiply(x, a, P);
    ++k;
  }
  return k;
}

TailedElem multiply_tailed(const TailedElem& a, const TailedElem& b, const PcPresentation& P,
                           const TailData& T) {
  TailedElem r = a;
  r.t.resize(T.m, 0);
  for (int k = 0; k < T.m && k < int(b.t.size()); ++k) r.t[k] = uint8_t((r.t[k] + b.t[k]) % P.p);
  if (T.m == 0) {
    NoTail s;
    mul_into(r.g, b.g, P, s);
  } else {
    VecTail s{T, r.t, P.p};
    mul_into(r.g, b.g, P, s);
  }
  return r;
}

void consistency_words(const PcPresentation& P, const TailData& T,
                       const std::function<bool(const std::string&, const TailedElem&,
                                                const TailedElem&)>& visit) {
  const int n = P.n;
  auto g = [&](int i, int e = 1) { return TailedElem{gen_elem(i, e), std::vector<uint8_t>(T.m, 0)}; };
  auto pw = [&](int i) {
    TailedElem w{P.power[i], std::vector<uint8_t>(T.m, 0)};
    if (T.m) w.t = T.power_tail[i];
    return w;
  };
  auto mul = [&](const TailedElem& a, const TailedElem& b) { return multiply_tailed(a, b, P, T); };
  auto name = [&](int i) { return P.gens[i].label; };

  for (int k = n - 1; k >= 0; --k)
    for (int j = k - 1; j >= 0; --j)
      for (int i = j - 1; i >= 0; --i) {
        auto lhs = mul(mul(g(k), g(j)), g(i));
        auto rhs = mul(g(k), mul(g(j), g(i)));
        if (!visit("(" + name(k) + " " + name(j) + ") " + name(i), lhs, rhs)) return;
      }
  for (int j = n - 1; j >= 0; --j)
    for (int i = j - 1; i >= 0; --i) {
      auto lhs = mul(pw(j), g(i));
      auto rhs = mul(g(j, P.rel_order[j] - 1), mul(g(j), g(i)));
      if (!visit("(" + name(j) + "^p) " + name(i), lhs, rhs)) return;
      lhs = mul(g(j), pw(i));
      rhs = mul(mul(g(j), g(i)), g(i, P.rel_order[i] - 1));
      if (!visit(name(j) + " (" + name(i) + "^p)", lhs, rhs)) return;
    }
  for (int i = 0; i < n; ++i) {
    auto lhs = mul(pw(i), g(i));
    auto rhs = mul(g(i), pw(i));
    if (!visit("(" + name(i) + "^p) " + name(i), lhs, rhs)) return;
  }
}

ConsistencyReport check_consistency(const PcPresentation& P) {
  ConsistencyReport rep;
  TailData none;
  consistency_words(P, none, [&](const std::string& what, const TailedElem& l, const TailedElem& r) {
    if (l.g == r.g) return true;
    rep.ok = false;
    rep.failure = what + ": " + format_elem(l.g, P) + " != " + format_elem(r.g, P);
    return false;
  });
  return rep;
}

std::vector<Elem> enumerate_elements(const PcPresentation& P, int max_log) {
  if (P.log_order() > max_log) throw BudgetExceeded("group too large to enumerate");
  std::vector<Elem> out;
  Elem cur;
  while (true) {
    out.push_back(cur);
    int k = P.n - 1;
    while (k >= 0) {
      if (++cur[k] < P.rel_order[k]) break;
      cur[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::string format_elem(const Elem& a, const PcPresentation& P) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < P.n; ++i) {
    if (!a[i]) continue;
    if (!first) os << '*';
    first = false;
    os << P.gens[i].label;
    if (a[i] != 1) os << '^' << int(a[i]);
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace cap
