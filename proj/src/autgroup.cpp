#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "internal.hpp"

namespace cap {

namespace detail {

Elem apply_images(const std::vector<Elem>& img, const Elem& e, const PcPresentation& dst) {
  Elem r;
  for (size_t i = 0; i < img.size(); ++i)
    for (int k = 0; k < e[int(i)]; ++k) r = multiply(r, img[i], dst);
  return r;
}

std::vector<Elem> extend_images(const PcPresentation& src, const PcPresentation& dst,
                                const std::vector<Elem>& layer1_images) {
  std::vector<Elem> img;
  img.reserve(src.n);
  size_t next = 0;
  for (int k = 0; k < src.n; ++k) {
    const auto& def = src.gens[k].def;
    if (src.gens[k].weight == 1) {
      if (next >= layer1_images.size()) throw std::invalid_argument("too few generator images");
      img.push_back(layer1_images[next++]);
      continue;
    }
    Elem lhs, rhs;
    if (def.kind == Definition::Kind::Power) {
      lhs = power(img[def.j], src.p, dst);
      rhs = src.power[def.j];
    } else if (def.kind == Definition::Kind::Commutator) {
      lhs = commutator(img[def.j], img[def.i], dst);
      rhs = src.comm[def.j][def.i];
    } else {
      throw std::invalid_argument("generator without definition");
    }
    if (rhs[k] != 1) throw std::logic_error("definition does not end in its generator");
    rhs[k] = 0;
    for (int t = k + 1; t < src.n; ++t)
      if (rhs[t]) throw std::logic_error("definition involves later generators");
    img.push_back(multiply(inverse(apply_images(img, rhs, dst), dst), lhs, dst));
  }
  return img;
}

Automorphism eval_word(const AutWord& w, const AutGroup& A, const PcPresentation& G) {
  Automorphism r = identity_automorphism(G);
  for (auto [g, k] : w) {
    const Automorphism& a = k >= 0 ? A.gens[g] : A.inv[g];
    for (int t = 0; t < std::abs(k); ++t) r = compose(r, a, G);
  }
  return r;
}

std::string subspace_key(Mat rows, int d) {
  rref(rows, d);
  std::string key;
  key.push_back(char(rows.size()));
  int bits = 0;
  unsigned char cur = 0;
  for (const auto& r : rows)
    for (int c = 0; c < d; ++c) {
      cur |= uint8_t(r[c] << bits);
      bits += 2;
      if (bits == 8) {
        key.push_back(char(cur));
        cur = 0;
        bits = 0;
      }
    }
  if (bits) key.push_back(char(cur));
  return key;
}

Mat key_to_rows(const std::string& key, int d) {
  int nrows = key[0];
  Mat rows(nrows, Vec(d, 0));
  int pos = 0;
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < d; ++c, pos += 2) {
      unsigned char byte = key[1 + pos / 8];
      rows[r][c] = (byte >> (pos % 8)) & 3;
    }
  return rows;
}

namespace {

std::vector<Elem> layer1_of(const Automorphism& a, const PcPresentation& G) {
  std::vector<Elem> out;
  for (int k = 0; k < G.n; ++k)
    if (G.gens[k].weight == 1) out.push_back(a.img[k]);
  return out;
}

Elem embed(const Elem& e, int n) {
  Elem r;
  for (int i = 0; i < n; ++i) r[i] = e[i];
  return r;
}

}  // namespace

AutGroup lift_to_descendant(const PcPresentation& D, const PcPresentation& G, const std::vector<Automorphism>& stab,
                            const std::vector<Automorphism>& stab_inv, const std::vector<int>& rel_order) {
  AutGroup out;
  auto lift = [&](const Automorphism& a) {
    std::vector<Elem> l1;
    for (const auto& e : layer1_of(a, G)) l1.push_back(embed(e, G.n));
    return Automorphism{extend_images(D, D, l1)};
  };
  std::vector<int> l1idx;
  for (int k = 0; k < D.n; ++k)
    if (D.gens[k].weight == 1) l1idx.push_back(k);
  for (size_t s = 0; s < stab.size(); ++s) {
    Automorphism a = lift(stab[s]);
    Automorphism b = lift(stab_inv[s]);
    // a o b induces the identity on G, so it is x -> x m with m central
    Automorphism c = compose(a, b, D);
    std::vector<Elem> cinv;
    for (int k : l1idx) {
      Elem m = multiply(inverse(gen_elem(k), D), c.img[k], D);
      cinv.push_back(multiply(gen_elem(k), inverse(m, D), D));
    }
    Automorphism binv = compose(b, Automorphism{extend_images(D, D, cinv)}, D);
    out.gens.push_back(a);
    out.inv.push_back(binv);
    out.rel_order.push_back(rel_order[s]);
  }
  // central automorphisms x_k -> x_k t for t in the new layer
  for (int k : l1idx)
    for (int t = G.n; t < D.n; ++t) {
      std::vector<Elem> f, g;
      for (int l : l1idx) {
        f.push_back(l == k ? multiply(gen_elem(l), gen_elem(t), D) : gen_elem(l));
        g.push_back(l == k ? multiply(gen_elem(l), gen_elem(t, D.p - 1), D) : gen_elem(l));
      }
      out.gens.push_back({extend_images(D, D, f)});
      out.inv.push_back({extend_images(D, D, g)});
      out.rel_order.push_back(D.p);
    }
  return out;
}

}  // namespace detail

using namespace detail;

Elem apply(const Automorphism& a, const Elem& e, const PcPresentation& G) { return apply_images(a.img, e, G); }

Automorphism compose(const Automorphism& a, const Automorphism& b, const PcPresentation& G) {
  Automorphism r;
  r.img.reserve(b.img.size());
  for (const auto& e : b.img) r.img.push_back(apply(a, e, G));
  return r;
}

Automorphism identity_automorphism(const PcPresentation& G) {
  Automorphism r;
  for (int k = 0; k < G.n; ++k) r.img.push_back(gen_elem(k));
  return r;
}

Automorphism from_generator_images(const PcPresentation& G, const std::vector<Elem>& layer1_images) {
  return {extend_images(G, G, layer1_images)};
}

Mat frattini_matrix(const Automorphism& a, const PcPresentation& G) {
  std::vector<int> l1;
  for (int k = 0; k < G.n; ++k)
    if (G.gens[k].weight == 1) l1.push_back(k);
  Mat m;
  for (int k : l1) {
    Vec row;
    for (int l : l1) row.push_back(a.img[k][l]);
    m.push_back(row);
  }
  return m;
}

bool is_automorphism(const Automorphism& a, const PcPresentation& G) {
  if (int(a.img.size()) != G.n) return false;
  for (int i = 0; i < G.n; ++i) {
    if (power(a.img[i], G.rel_order[i], G) != apply(a, G.power[i], G)) return false;
    for (int j = 0; j < i; ++j)
      if (commutator(a.img[i], a.img[j], G) != apply(a, G.comm[i][j], G)) return false;
  }
  int d = layer1_count(G);
  return rank_of(frattini_matrix(a, G), d, G.p) == d;
}

long double AutGroup::order() const {
  long double r = 1;
  for (int k : rel_order) r *= k;
  return r;
}

int AutGroup::log3_order() const {
  int r = 0;
  for (int k : rel_order) r += k == 3;
  return r;
}

Mat multiplicator_action(const Automorphism& a, const CoverData& C, const PcPresentation& G) {
  const PcPresentation& S = C.cover;
  std::vector<Elem> l1;
  for (int k = 0; k < G.n; ++k)
    if (G.gens[k].weight == 1) l1.push_back(a.img[k]);  // tails zero: any lift works
  auto img = extend_images(S, S, l1);
  const int d = C.multiplicator_rank;
  Mat m(d, Vec(d, 0));
  for (int f = 0; f < d; ++f) {
    const Elem& e = img[C.n + f];
    for (int k = 0; k < C.n; ++k)
      if (e[k]) throw std::logic_error("multiplicator image outside the multiplicator");
    for (int g = 0; g < d; ++g) m[f][g] = e[C.n + g];
  }
  return m;
}

namespace {

// Automorphism of an elementary abelian group from matrix rows.
Automorphism from_matrix(const PcPresentation& Q, const Mat& m) {
  std::vector<Elem> l1;
  for (const auto& row : m) {
    Elem e;
    for (size_t l = 0; l < row.size(); ++l) e[int(l)] = row[l];
    l1.push_back(e);
  }
  return from_generator_images(Q, l1);
}

AutGroup root_aut(const PcPresentation& Q) {
  const int d = Q.n;
  AutGroup A;
  std::vector<Mat> gens;
  std::vector<int> rel;
  if (d == 1) {
    gens = {{{2}}};
    rel = {2};
  } else if (d == 2) {
    // GL(2,3) > SL(2,3) > Q8 > C4 > C2 > 1
    gens = {{{1, 0}, {0, 2}}, {{1, 1}, {0, 1}}, {{0, 1}, {2, 0}}, {{1, 1}, {1, 2}}, {{2, 0}, {0, 2}}};
    rel = {2, 3, 2, 2, 2};
  } else if (d > 2) {
    throw std::invalid_argument("automorphism groups implemented for at most two generators");
  }
  for (size_t k = 0; k < gens.size(); ++k) {
    Automorphism a = from_matrix(Q, gens[k]);
    // inverse as a power: orders in GL(2,3) divide 8 or 6
    Automorphism inv = identity_automorphism(Q), acc = a;
    Automorphism id = identity_automorphism(Q);
    std::vector<Automorphism> pw{id};
    while (!(pw.back() == id) || pw.size() == 1) pw.push_back(compose(pw.back(), a, Q));
    inv = pw[pw.size() - 2];
    A.gens.push_back(a);
    A.inv.push_back(inv);
    A.rel_order.push_back(rel[k]);
  }
  return A;
}

}  // namespace

AutGroup automorphism_group(const PcPresentation& W) {
  if (!W.weighted()) throw std::invalid_argument("automorphism_group needs a weighted presentation");
  const int c = pclass_of(W);
  if (W.n == 0) return {};
  PcPresentation Q = truncate_to_weight(W, 1);
  AutGroup A = root_aut(Q);
  for (int w = 1; w < c; ++w) {
    PcPresentation N = truncate_to_weight(W, w + 1);
    CoverData C = p_cover(Q, kMaxGens);
    // U = kernel of the multiplicator in cover(Q) -> N
    std::vector<Elem> l1;
    for (int k = 0; k < N.n; ++k)
      if (N.gens[k].weight == 1) l1.push_back(gen_elem(k));
    auto img = extend_images(C.cover, N, l1);
    const int d = C.multiplicator_rank;
    std::vector<int> top;
    for (int k = 0; k < N.n; ++k)
      if (N.gens[k].weight == w + 1) top.push_back(k);
    Mat eq;
    for (int t : top) {
      Vec row(d, 0);
      for (int f = 0; f < d; ++f) row[f] = img[C.n + f][t];
      eq.push_back(row);
    }
    Mat U = nullspace(eq, d);
    std::vector<Mat> acts;
    for (const auto& a : A.gens) acts.push_back(multiplicator_action(a, C, Q));
    auto act = [&](int j, const std::string& key) {
      return subspace_key(mat_mul(key_to_rows(key, d), acts[j]), d);
    };
    PcOrbit O = pc_orbit(subspace_key(U, d), A.rel_order, act);
    std::vector<Automorphism> st, sti;
    for (size_t s = 0; s < O.stab_words.size(); ++s) {
      st.push_back(eval_word(O.stab_words[s], A, Q));
      sti.push_back(eval_word(O.stab_inv_words[s], A, Q));
    }
    A = lift_to_descendant(N, Q, st, sti, O.stab_rel);
    Q = N;
  }
  return A;
}

long long brute_force_aut_order(const PcPresentation& W) {
  auto elems = enumerate_elements(W, 6);
  const int d = layer1_count(W);
  if (d != 2) throw std::invalid_argument("brute force implemented for two generators");
  long long count = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      Automorphism f{extend_images(W, W, {a, b})};
      if (is_automorphism(f, W)) ++count;
    }
  return count;
}

std::string to_string(ActionClass a) {
  switch (a) {
    case ActionClass::S3: return "S3";
    case ActionClass::C3: return "C3";
    case ActionClass::C2: return "C2";
    case ActionClass::Trivial: return "trivial";
    case ActionClass::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

using M2 = std::array<int, 4>;  // row-major 2x2 over F_3

M2 mul2(const M2& a, const M2& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
          (a[2] * b[1] + a[3] * b[3]) % 3};
}

M2 to_m2(const Mat& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }

int order2(const M2& a) {
  const M2 id{1, 0, 0, 1};
  M2 x = a;
  int k = 1;
  while (x != id) {
    x = mul2(x, a);
    ++k;
  }
  return k;
}

Automorphism aut_power(const Automorphism& a, long long k, const PcPresentation& G) {
  Automorphism r = identity_automorphism(G), b = a;
  while (k) {
    if (k & 1) r = compose(r, b, G);
    k >>= 1;
    if (k) b = compose(b, b, G);
  }
  return r;
}

long long aut_order(const Automorphism& a, const PcPresentation& G) {
  Automorphism id = identity_automorphism(G), x = a;
  long long k = 1;
  while (!(x == id)) {
    x = compose(x, a, G);
    if (++k > 100000) throw std::logic_error("automorphism order too large");
  }
  return k;
}

}  // namespace

ActionReport s3_action_check(const PcPresentation& W, const AutGroup& A, bool strict_frattini) {
  ActionReport rep;
  if (layer1_count(W) != 2) {
    rep.action = ActionClass::Trivial;
    return rep;
  }
  // image of Aut(G) in GL(2,3), each matrix with one automorphism inducing it
  std::map<M2, Automorphism> image;
  const M2 id{1, 0, 0, 1};
  image[id] = identity_automorphism(W);
  // finer image in Aut(G/G'), as permutations of the cosets of G'
  using Perm = std::vector<int>;
  std::map<Perm, M2> ab_image;
  std::optional<std::pair<Automorphism, Automorphism>> ab_s3;
  if (strict_frattini) {
    for (int e = 0; e < 81; ++e) {
      M2 m{e % 3, e / 3 % 3, e / 9 % 3, e / 27};
      if ((m[0] * m[3] - m[1] * m[2] + 9) % 3) image.emplace(m, Automorphism{});
    }
  } else {
    const Subgroup D = derived_subgroup(W);
    std::vector<Elem> reps{coset_rep(identity(), D, W)};
    std::map<Elem, int> index{{reps[0], 0}};
    for (size_t i = 0; i < reps.size(); ++i)
      for (int g = 0; g < 2; ++g) {
        Elem r = coset_rep(multiply(reps[i], gen_elem(g), W), D, W);
        if (index.emplace(r, int(reps.size())).second) reps.push_back(r);
      }
    auto perm_of = [&](const Automorphism& a) {
      Perm p(reps.size());
      for (size_t i = 0; i < reps.size(); ++i) p[i] = index.at(coset_rep(apply(a, reps[i], W), D, W));
      return p;
    };
    std::vector<Perm> gp;
    for (const auto& a : A.gens) gp.push_back(perm_of(a));
    std::map<Perm, Automorphism> auts;
    Perm pid(reps.size());
    for (size_t i = 0; i < pid.size(); ++i) pid[i] = int(i);
    auts[pid] = identity_automorphism(W);
    std::vector<Perm> queue{pid};
    while (!queue.empty()) {
      Perm m = queue.back();
      queue.pop_back();
      for (size_t g = 0; g < gp.size(); ++g) {
        Perm nm(m.size());
        for (size_t i = 0; i < m.size(); ++i) nm[i] = gp[g][m[i]];
        if (auts.count(nm)) continue;
        auts[nm] = compose(A.gens[g], auts[m], W);
        queue.push_back(nm);
      }
    }
    for (const auto& [p, a] : auts) {
      M2 m = to_m2(frattini_matrix(a, W));
      ab_image[p] = m;
      image.emplace(m, a);
    }
    // cosets whose cube is trivial
    std::vector<bool> omega(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) omega[i] = contains(D, power(reps[i], 3, W), W);
    auto mulp = [](const Perm& a, const Perm& b) {
      Perm r(a.size());
      for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
      return r;
    };
    auto orderp = [&](const Perm& a) {
      int o = 1;
      for (Perm x = a; x != pid; x = mulp(x, a)) ++o;
      return o;
    };
    // a Galois automorphism of order 3 moves G/Phi and also some element of
  // order 3 in G/G'
    for (const auto& [a, ma] : ab_image) {
      if (orderp(a) != 3 || ma == id) continue;
      bool moves_omega = false;
      for (size_t i = 0; i < a.size(); ++i) moves_omega |= omega[i] && a[i] != int(i);
      if (!moves_omega) continue;
      Perm ainv = mulp(a, a);
      for (const auto& [b, mb] : ab_image)
        if (orderp(b) == 2 && mulp(mulp(b, a), b) == ainv) {
          ab_s3 = std::make_pair(auts[a], auts[b]);
          break;
        }
      if (ab_s3) break;
    }
  }
  rep.image_order = int(image.size());
  std::optional<std::pair<M2, M2>> s3;
  bool has3 = false, has2 = false;
  for (const auto& [a, _] : image) {
    int o = order2(a);
    has3 |= o % 3 == 0;
    has2 |= o % 2 == 0;
    if (o != 3 || s3) continue;
    M2 ainv = mul2(a, a);
    for (const auto& [b, __] : image)
      if (order2(b) == 2 && mul2(mul2(b, a), b) == ainv) {
        s3 = std::make_pair(a, b);
        break;
      }
  }
  rep.galois_s3 = ab_s3.has_value();
  if (s3) {
    rep.action = ActionClass::S3;
    bool central_involution = false;
    for (const auto& [z, _] : image) {
      if (order2(z) != 2) continue;
      bool central = true;
      for (const auto& [g, __] : image) central &= mul2(z, g) == mul2(g, z);
      central_involution |= central;
    }
    rep.s3xc2 = rep.image_order == 12 && central_involution;
  } else if (has2) {
    // involutions of Aut(G) map to involutions: the kernel is a 3-group
    rep.action = ActionClass::C2;
  } else if (has3 || (!strict_frattini && A.log3_order() > 0)) {
    rep.action = ActionClass::C3;
  } else {
    rep.action = ActionClass::Trivial;
  }
  if (strict_frattini || !s3) return rep;

  // witnesses: an involution tau, and sigma = tau o iota with iota an involution
  const auto& sig0 = image[s3->first];
  const auto& tau0 = image[s3->second];
  long long ot = aut_order(tau0, W);
  long long odd = ot;
  while (odd % 2 == 0) odd /= 2;
  Automorphism tau = aut_power(tau0, odd, W);
  Automorphism iota0 = compose(tau, sig0, W);
  long long oi = aut_order(iota0, W);
  odd = oi;
  while (odd % 2 == 0) odd /= 2;
  Automorphism iota = aut_power(iota0, odd, W);
  // tau and iota generate a dihedral group; its rotation part has 3-power order
  Automorphism sigma = compose(tau, iota, W);
  sigma = aut_power(sigma, aut_order(sigma, W) / 3, W);
  rep.tau = tau;
  rep.sigma = sigma;
  Automorphism idw = identity_automorphism(W);
  rep.exact_witnesses = aut_power(sigma, 3, W) == idw && compose(tau, tau, W) == idw &&
                        compose(compose(tau, sigma, W), tau, W) == aut_power(sigma, 2, W);
  return rep;
}

ActionReport s3_action_check(const PcPresentation& P, bool strict_frattini) {
  PcPresentation W = P.weighted() ? P : standardize(P);
  return s3_action_check(W, automorphism_group(W), strict_frattini);
}

}  // namespace cap
