// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace ddccast {

using NodeId = std::uint32_t;
using EdgeIndex = std::size_t;
using Slot = std::int64_t;
using RequestId = std::uint64_t;

/// Tolerance for every rate/volume comparison in the scheduler.
inline constexpr double kEpsilon = 1e-9;

}  // namespace ddccast
