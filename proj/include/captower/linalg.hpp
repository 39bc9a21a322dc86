// Small dense linear algebra over F_p and Smith normal form over Z.
#pragma once

#include <cstdint>
#include <vector>

namespace cap {

using Vec = std::vector<uint8_t>;
using Mat = std::vector<Vec>;  // row-major, rows are vectors

int inv_mod(int a, int p);

// Reduced row echelon form in place; returns pivot columns. Zero rows removed.
std::vector<int> rref(Mat& m, int cols, int p = 3);
int rank_of(Mat m, int cols, int p = 3);

// Basis of {v : M v^T = 0}, i.e. the right nullspace of the row space.
Mat nullspace(Mat m, int cols, int p = 3);

// Reduce v modulo the row space of an RREF matrix with the given pivots.
void reduce_vec(Vec& v, const Mat& r, const std::vector<int>& pivots, int p = 3);

bool in_span(Vec v, const Mat& r, const std::vector<int>& pivots, int p = 3);

Vec vec_mul(const Vec& v, const Mat& a, int p = 3);  // row vector times matrix
Mat mat_mul(const Mat& a, const Mat& b, int p = 3);

// Elementary divisors d1 | d2 | ... (nonzero diagonal entries after SNF, plus
// zeros for free rank). Exact arithmetic; throws std::overflow_error only if a
// divisor does not fit in 64 bits.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m);
// Same over Z/p^e: divisors p^v with v < e; entries of valuation e come back as 0.
std::vector<long long> smith_normal_form_mod(std::vector<std::vector<long long>> m, long long p, int e);

}  // namespace cap
