#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <limits>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "captower/linalg.hpp"

namespace cap {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("smith_normal_form: overflow");
  return r;
}

using Big = boost::multiprecision::cpp_int;
using BMat = std::vector<std::vector<Big>>;

}  // namespace

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> in) {
  const size_t rows = in.size();
  const size_t cols = rows ? in[0].size() : 0;
  // entries grow during elimination even when the divisors stay small
  BMat m(rows, std::vector<Big>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m[i][j] = in[i][j];
  auto row_op = [&](size_t a, size_t b, const Big& q) {
    for (size_t j = 0; j < cols; ++j) m[a][j] -= q * m[b][j];
  };
  auto col_op = [&](size_t a, size_t b, const Big& q) {
    for (auto& row : m) row[a] -= q * row[b];
  };

  std::vector<long long> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    size_t pr = rows, pc = cols;
    Big best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_op(i, t, Big(m[i][t] / m[t][t]));
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_op(j, t, Big(m[t][j] / m[t][t]));
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide the rest of the block
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
            break;
          }
    }
    Big d = abs(m[t][t]);
    if (d > std::numeric_limits<long long>::max()) throw std::overflow_error("smith_normal_form: divisor exceeds 64 bits");
    diag.push_back(static_cast<long long>(d));
    ++t;
  }
  size_t free_rank = cols - diag.size();
  for (size_t k = 0; k < free_rank; ++k) diag.push_back(0);
  return diag;
}

std::vector<long long> smith_normal_form_mod(std::vector<std::vector<long long>> m, long long p, int e) {
  long long M = 1;
  for (int i = 0; i < e; ++i) M = checked_mul(M, p);
  auto md = [M](__int128 x) { return (long long)(((x % M) + M) % M); };
  auto val = [&](long long x) {
    int v = 0;
    for (; x && x % p == 0; x /= p) ++v;
    return x ? v : e;
  };
  // inverse of a unit mod M by extended Euclid
  auto inv = [M](long long a) {
    long long g = M, x = 0, y = 1, r = a;
    while (r) {
      long long q = g / r;
      std::tie(g, r) = std::make_pair(r, g - q * r);
      std::tie(x, y) = std::make_pair(y, x - q * y);
    }
    return ((x % M) + M) % M;
  };
  for (auto& row : m)
    for (auto& x : row) x = md(x);
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> diag;
  for (size_t t = 0; t < rows && t < cols; ++t) {
    size_t pr = rows, pc = cols;
    int best = e;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (int v = val(m[i][j]); v < best) {
          best = v;
          pr = i;
          pc = j;
        }
    if (best == e) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    // pivot = p^best * unit; every other entry is divisible by p^best
    long long pb = 1;
    for (int i = 0; i < best; ++i) pb *= p;
    const long long u = inv(m[t][t] / pb);
    for (size_t i = t + 1; i < rows; ++i) {
      if (!m[i][t]) continue;
      long long q = md((__int128)(m[i][t] / pb) * u);
      for (size_t j = t; j < cols; ++j) m[i][j] = md(m[i][j] - (__int128)q * m[t][j]);
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (!m[t][j]) continue;
      long long q = md((__int128)(m[t][j] / pb) * u);
      for (size_t i = t; i < rows; ++i) m[i][j] = md(m[i][j] - (__int128)q * m[i][t]);
    }
    diag.push_back(pb);
  }
  while (diag.size() < cols) diag.push_back(0);
  return diag;
}

}  // namespace cap
