// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/kernels.hpp"

#include <algorithm>

namespace ddccast::kernels {
namespace {

double row_sum_scalar(const double* row, std::size_t n) {
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) lanes[i % 4] += row[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double tree_available_scalar(const double* const* rows, std::size_t row_count,
                             std::size_t begin, std::size_t end,
                             double capacity, double* out) {
  double lanes[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = begin; i < end; ++i) {
    double peak = 0.0;
    for (std::size_t r = 0; r < row_count; ++r) peak = std::max(peak, rows[r][i]);
    const double avail = std::max(capacity - peak, 0.0);
    if (out != nullptr) out[i - begin] = avail;
    lanes[(i - begin) % 4] += avail;
  }
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

constexpr KernelTable kScalarTable{Isa::kScalar, "scalar", &row_sum_scalar,
                                   &tree_available_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace ddccast::kernels
