#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "internal.hpp"

namespace cap {

using namespace detail;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Gaussian binomial [n k]_3
long long gauss_binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(3, n - i) - 1;
    den *= ipow(3, i + 1) - 1;
  }
  return num / den;
}

// Calls f for every RREF matrix of `rank` rows in F_3^cols.
template <class F>
void for_each_rref(int rank, int cols, F f) {
  std::vector<int> piv(rank);
  auto rec_piv = [&](auto& self, int r, int from) -> void {
    if (r == rank) {
      std::vector<std::pair<int, int>> slots;  // (row, column) of free entries
      for (int i = 0; i < rank; ++i)
        for (int c = piv[i] + 1; c < cols; ++c) {
          bool is_piv = false;
          for (int t = i + 1; t < rank; ++t) is_piv |= piv[t] == c;
          if (!is_piv) slots.emplace_back(i, c);
        }
      Mat m(rank, Vec(cols, 0));
      for (int i = 0; i < rank; ++i) m[i][piv[i]] = 1;
      const long long total = ipow(3, int(slots.size()));
      for (long long x = 0; x < total; ++x) {
        long long y = x;
        for (auto [i, c] : slots) {
          m[i][c] = uint8_t(y % 3);
          y /= 3;
        }
        f(m, piv);
      }
      return;
    }
    for (int c = from; c <= cols - (rank - r); ++c) {
      piv[r] = c;
      self(self, r + 1, c + 1);
    }
  };
  rec_piv(rec_piv, 0, 0);
}

// Calls f with the key of every allowable subspace of codimension s.
template <class F>
void for_each_allowable(const CoverData& C, int s, F f) {
  const int d = C.multiplicator_rank, nu = C.nucleus_rank;
  std::vector<bool> is_npiv(d, false);
  for (int c : C.nucleus_pivots) is_npiv[c] = true;
  std::vector<int> comp;
  for (int c = 0; c < d; ++c)
    if (!is_npiv[c]) comp.push_back(c);
  for_each_rref(nu - s, nu, [&](const Mat& K, const std::vector<int>& kpiv) {
    std::vector<bool> kp(nu, false);
    for (int c : kpiv) kp[c] = true;
    std::vector<int> free;
    for (int c = 0; c < nu; ++c)
      if (!kp[c]) free.push_back(c);
    Mat base;
    for (const auto& row : K) base.push_back(vec_mul(row, C.nucleus));
    const int slots = int(comp.size()) * s;
    const long long total = ipow(3, slots);
    for (long long x = 0; x < total; ++x) {
      Mat U = base;
      long long y = x;
      for (int c : comp) {
        Vec v(d, 0);
        v[c] = 1;
        for (int t : free) {
          int a = int(y % 3);
          y /= 3;
          if (!a) continue;
          for (int k = 0; k < d; ++k) v[k] = uint8_t((v[k] + a * C.nucleus[t][k]) % 3);
        }
        U.push_back(v);
      }
      f(subspace_key(U, d));
    }
  });
}

// G*/U for a subspace U of the multiplicator.
PcPresentation quotient_of_cover(const CoverData& C, const Mat& Urows) {
  const int d = C.multiplicator_rank;
  Mat U = Urows;
  auto piv = rref(U, d);
  std::vector<bool> is_piv(d, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> keep;
  for (int c = 0; c < d; ++c)
    if (!is_piv[c]) keep.push_back(c);
  const PcPresentation& S = C.cover;
  const int n = C.n, nn = n + int(keep.size());
  auto reduce = [&](const Elem& e) {
    Vec v(d, 0);
    for (int f = 0; f < d; ++f) v[f] = e[n + f];
    reduce_vec(v, U, piv);
    Elem r;
    for (int k = 0; k < n; ++k) r[k] = e[k];
    for (size_t t = 0; t < keep.size(); ++t) r[n + int(t)] = v[keep[t]];
    return r;
  };
  PcPresentation D(nn, S.p);
  for (int k = 0; k < n; ++k) {
    D.gens[k] = S.gens[k];
    D.power[k] = reduce(S.power[k]);
    for (int i = 0; i < k; ++i) D.comm[k][i] = reduce(S.comm[k][i]);
  }
  for (size_t t = 0; t < keep.size(); ++t) {
    D.gens[n + int(t)] = S.gens[n + keep[t]];
    D.gens[n + int(t)].label = "t" + std::to_string(t + 1);
  }
  D.finalize();
  return D;
}

}  // namespace

long long count_allowable_subspaces(int d, int nu, int s) {
  if (s < 1 || s > nu) return 0;
  return gauss_binom(nu, s) * ipow(3, (d - nu) * s);
}

std::vector<Descendant> immediate_descendants(const PcPresentation& W, const AutGroup& A, const CoverData& C,
                                              int step, const DescendantOptions& opt) {
  const int d = C.multiplicator_rank, nu = C.nucleus_rank;
  if (nu == 0) return {};
  if (step < 1 || step > nu) throw std::out_of_range("step size outside 1..nucleus rank");
  const long long total = count_allowable_subspaces(d, nu, step);
  if (total > opt.max_points) throw BudgetExceeded("too many allowable subspaces");

  std::vector<Mat> acts;
  for (const auto& a : A.gens) acts.push_back(multiplicator_action(a, C, W));
  auto act = [&](int j, const std::string& key) { return subspace_key(mat_mul(key_to_rows(key, d), acts[j]), d); };

  std::unordered_set<std::string> seen;
  std::vector<Descendant> out;
  long long covered = 0;
  for_each_allowable(C, step, [&](const std::string& key) {
    if (seen.count(key)) return;
    PcOrbit O = pc_orbit(key, A.rel_order, act);
    for (const auto& q : O.points) seen.insert(q);
    covered += long(O.points.size());
    Descendant D;
    D.group = quotient_of_cover(C, key_to_rows(key, d));
    D.orbit_size = long(O.points.size());
    D.step = step;
    if (opt.with_aut) {
      std::vector<Automorphism> st, sti;
      for (size_t s = 0; s < O.stab_words.size(); ++s) {
        st.push_back(eval_word(O.stab_words[s], A, W));
        sti.push_back(eval_word(O.stab_inv_words[s], A, W));
      }
      D.aut = lift_to_descendant(D.group, W, st, sti, O.stab_rel);
    }
    out.push_back(std::move(D));
  });
  if (covered != total || long(seen.size()) != total) throw std::logic_error("orbit sizes do not add up");
  return out;
}

std::vector<PcPresentation> immediate_descendants(const PcPresentation& P, int step) {
  PcPresentation W = P.weighted() ? P : standardize(P);
  CoverData C = p_cover(W);
  AutGroup A = automorphism_group(W);
  std::vector<PcPresentation> out;
  for (auto& D : immediate_descendants(W, A, C, step, {.with_aut = false})) out.push_back(std::move(D.group));
  return out;
}

}  // namespace cap
