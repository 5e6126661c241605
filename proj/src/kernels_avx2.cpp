// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 only. FMA stays disabled so that no multiply-add
// contraction can make results diverge from the scalar reference.

#include "ddccast/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace ddccast::kernels {
namespace {

double combine(__m256d acc, double tail[4]) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (int j = 0; j < 4; ++j) lanes[j] += tail[j];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double row_sum_avx2(const double* row, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(row + i));
  // Tail lanes pick up where the vector blocks stopped, which is lane 0.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t j = 0; i < n; ++i, ++j) lanes[j] += row[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double tree_available_avx2(const double* const* rows, std::size_t row_count,
                           std::size_t begin, std::size_t end, double capacity,
                           double* out) {
  const __m256d cap = _mm256_set1_pd(capacity);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    __m256d peak = zero;
    for (std::size_t r = 0; r < row_count; ++r)
      peak = _mm256_max_pd(peak, _mm256_loadu_pd(rows[r] + i));
    const __m256d avail = _mm256_max_pd(_mm256_sub_pd(cap, peak), zero);
    if (out != nullptr) _mm256_storeu_pd(out + (i - begin), avail);
    acc = _mm256_add_pd(acc, avail);
  }
  double tail[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; i < end; ++i, ++j) {
    double peak = 0.0;
    for (std::size_t r = 0; r < row_count; ++r) peak = std::max(peak, rows[r][i]);
    const double avail = std::max(capacity - peak, 0.0);
    if (out != nullptr) out[i - begin] = avail;
    tail[j] = avail;
  }
  return combine(acc, tail);
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, "avx2", &row_sum_avx2,
                                 &tree_available_avx2};

}  // namespace

const KernelTable* avx2_kernels_impl() { return &kAvx2Table; }

}  // namespace ddccast::kernels
