#include <cstdio>
#include <functional>
#include <set>

#include "internal.hpp"

namespace cap {

using namespace detail;

std::string Fingerprint::text() const {
  std::string s = "log=" + std::to_string(log_order) + ";class=" + std::to_string(nilpotency_class) +
                  ";coclass=" + std::to_string(coclass) + ";ab=" + format_ati(abelianization) + ";pattern=" + tau +
                  ";kappa=" + kappa + ";dl=" + std::to_string(derived_length) +
                  ";d2=" + std::to_string(relation_rank) + ";nu=" + std::to_string(nucleus_rank);
  return s;
}

std::string Fingerprint::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Fingerprint fingerprint(const PcPresentation& P, const CoverData* cover) {
  Fingerprint f;
  f.log_order = P.log_order();
  if (P.n == 0) {
    f.tau = f.kappa = "-";
    f.relation_rank = f.nucleus_rank = 0;
    return f;
  }
  SeriesData S = lower_central_series(P);
  f.nilpotency_class = S.nilpotency_class;
  f.coclass = S.coclass;
  f.derived_length = S.derived_length;
  f.abelianization = abelian_invariants(whole_group(P), derived_subgroup(P), P);
  if (f.abelianization == ATI{9, 3}) {
    ArtinPattern c = canonicalize_kappa(artin_pattern(P));
    f.tau = c.serialize();
    f.kappa = c.kappa_string();
  } else {
    f.tau = f.kappa = "-";
  }
  if (cover) {
    f.relation_rank = cover->multiplicator_rank;
    f.nucleus_rank = cover->nucleus_rank;
  } else {
    CoverData C = p_cover(P.weighted() ? P : standardize(P));
    f.relation_rank = C.multiplicator_rank;
    f.nucleus_rank = C.nucleus_rank;
  }
  return f;
}

bool are_isomorphic(const PcPresentation& A, const PcPresentation& B, long long budget) {
  if (A.log_order() != B.log_order()) return false;
  if (A.n == 0) return true;
  if (fingerprint(A).text() != fingerprint(B).text()) return false;
  PcPresentation WA = A.weighted() ? A : standardize(A);
  PcPresentation WB = B.weighted() ? B : standardize(B);
  const int c = pclass_of(WA);
  if (c != pclass_of(WB)) return false;
  std::vector<std::vector<int>> layerA(c + 2), layerB(c + 2);
  for (int k = 0; k < WA.n; ++k) layerA[WA.gens[k].weight].push_back(k);
  for (int k = 0; k < WB.n; ++k) layerB[WB.gens[k].weight].push_back(k);
  for (int w = 1; w <= c; ++w)
    if (layerA[w].size() != layerB[w].size()) return false;
  const int d = int(layerB[1].size());

  long long nodes = 0;
  // images known modulo P_{w+1}(B) determine every relation modulo P_{w+2}(B)
  auto holds_mod = [&](const std::vector<Elem>& l1, int w) {
    auto img = extend_images(WA, WB, l1);
    auto ok = [&](const Elem& lhs, const Elem& rhs) {
      Elem q = multiply(inverse(lhs, WB), rhs, WB);
      for (int k = 0; k < WB.n && WB.gens[k].weight <= w + 1; ++k)
        if (q[k]) return false;
      return true;
    };
    for (int j = 0; j < WA.n; ++j) {
      if (!ok(power(img[j], WA.p, WB), apply_images(img, WA.power[j], WB))) return false;
      for (int i = 0; i < j; ++i)
        if (!ok(commutator(img[j], img[i], WB), apply_images(img, WA.comm[j][i], WB))) return false;
    }
    return true;
  };

  // all tuples of d elements of the layer-w span, as exponent choices
  auto layer_tuples = [&](int w, const std::function<bool(const std::vector<Elem>&)>& f) {
    const auto& L = layerB[w];
    const int slots = d * int(L.size());
    long long total = 1;
    for (int i = 0; i < slots; ++i) total *= WB.p;
    std::vector<Elem> z(d);
    for (long long x = 0; x < total; ++x) {
      long long y = x;
      for (int i = 0; i < d; ++i) {
        z[i] = identity();
        for (int k : L) {
          z[i][k] = uint8_t(y % WB.p);
          y /= WB.p;
        }
      }
      if (f(z)) return true;
    }
    return false;
  };

  std::function<bool(const std::vector<Elem>&, int)> search = [&](const std::vector<Elem>& l1, int w) {
    if (++nodes > budget) throw BudgetExceeded("isomorphism search budget exhausted");
    if (!holds_mod(l1, w)) return false;
    if (w == c) return true;
    return layer_tuples(w + 1, [&](const std::vector<Elem>& z) {
      std::vector<Elem> next(d);
      for (int i = 0; i < d; ++i) next[i] = multiply(l1[i], z[i], WB);
      return search(next, w + 1);
    });
  };

  // isomorphisms form one Aut(B)-orbit, so level-1 images are only needed up
  // to right multiplication by the image of Aut(B) in GL(d,p)
  std::set<Mat> image{frattini_matrix(identity_automorphism(WB), WB)};
  {
    std::vector<Mat> gens, queue(image.begin(), image.end());
    for (const auto& a : automorphism_group(WB).gens) gens.push_back(frattini_matrix(a, WB));
    while (!queue.empty()) {
      Mat m = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        Mat n = mat_mul(m, g, WB.p);
        if (image.insert(n).second) queue.push_back(n);
      }
    }
  }
  std::set<Mat> covered;
  return layer_tuples(1, [&](const std::vector<Elem>& z) {
    Mat m;
    for (const auto& e : z) {
      Vec row;
      for (int k : layerB[1]) row.push_back(e[k]);
      m.push_back(row);
    }
    if (rank_of(m, d, WB.p) != d || covered.count(m)) return false;
    for (const auto& h : image) covered.insert(mat_mul(m, h, WB.p));
    return search(z, 1);
  });
}

}  // namespace cap
