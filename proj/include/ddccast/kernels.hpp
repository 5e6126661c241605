// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Slot-window reductions used by admission control and edge costing.
//
// Every variant accumulates into four lane-striped partial sums (slot
// begin+i lands in lane i % 4) and combines them as (l0 + l1) + (l2 + l3).
// The scalar reference follows the same order, so all variants are
// bit-identical and simulation output does not depend on the host ISA.

#include <cstddef>
#include <span>
#include <string_view>

namespace ddccast::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // Sum of row[0..n).
  double (*row_sum)(const double* row, std::size_t n);
  // For every slot i in [begin, end): max(capacity - max_r rows[r][i], 0),
  // written to out[i - begin] when out is non-null. Returns the sum.
  double (*tree_available)(const double* const* rows, std::size_t row_count,
                           std::size_t begin, std::size_t end, double capacity,
                           double* out);
};

const KernelTable& scalar_kernels();

/// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports_avx2();

/// Table chosen once per process: AVX2 when compiled and supported by the
/// CPU, scalar otherwise. DDCCAST_KERNELS=scalar forces the reference.
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline double row_sum(std::span<const double> row) {
  return active().row_sum(row.data(), row.size());
}

inline double tree_available(std::span<const double* const> rows,
                             std::size_t begin, std::size_t end,
                             double capacity, std::span<double> out = {}) {
  return active().tree_available(rows.data(), rows.size(), begin, end,
                                 capacity, out.empty() ? nullptr : out.data());
}

}  // namespace ddccast::kernels
