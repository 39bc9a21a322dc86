#include "captower/linalg.hpp"

#include <utility>

namespace cap {

int inv_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

std::vector<int> rref(Mat& m, int cols, int p) {
  std::vector<int> piv;
  size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    int f = inv_mod(m[row][c], p);
    if (f != 1)
      for (int k = c; k < cols; ++k) m[row][k] = uint8_t(m[row][k] * f % p);
    for (size_t o = 0; o < m.size(); ++o) {
      if (o == row || m[o][c] == 0) continue;
      int g = p - m[o][c];
      for (int k = c; k < cols; ++k) m[o][k] = uint8_t((m[o][k] + g * m[row][k]) % p);
    }
    piv.push_back(c);
    ++row;
  }
  m.resize(row);
  return piv;
}

int rank_of(Mat m, int cols, int p) { return int(rref(m, cols, p).size()); }

Mat nullspace(Mat m, int cols, int p) {
  auto piv = rref(m, cols, p);
  std::vector<int> is_piv(cols, -1);
  for (size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = int(r);
  Mat out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f] >= 0) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = uint8_t((p - m[r][f]) % p);
    out.push_back(std::move(v));
  }
  return out;
}

void reduce_vec(Vec& v, const Mat& r, const std::vector<int>& pivots, int p) {
  for (size_t k = 0; k < pivots.size(); ++k) {
    int c = pivots[k];
    if (!v[c]) continue;
    int g = p - v[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] = uint8_t((v[j] + g * r[k][j]) % p);
  }
}

bool in_span(Vec v, const Mat& r, const std::vector<int>& pivots, int p) {
  reduce_vec(v, r, pivots, p);
  for (auto x : v)
    if (x) return false;
  return true;
}

Vec vec_mul(const Vec& v, const Mat& a, int p) {
  size_t cols = a.empty() ? 0 : a[0].size();
  Vec out(cols, 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (size_t j = 0; j < cols; ++j) out[j] = uint8_t((out[j] + v[i] * a[i][j]) % p);
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  Mat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mul(row, b, p));
  return out;
}

}  // namespace cap
