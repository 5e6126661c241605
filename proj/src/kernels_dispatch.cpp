// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "ddccast/kernels.hpp"

namespace ddccast::kernels {

#if DDCCAST_HAVE_AVX2
const KernelTable* avx2_kernels_impl();
#endif

const KernelTable* avx2_kernels() {
#if DDCCAST_HAVE_AVX2
  return avx2_kernels_impl();
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() {
#if DDCCAST_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const KernelTable& choose() {
  if (const char* forced = std::getenv("DDCCAST_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const KernelTable* avx2 = avx2_kernels(); avx2 != nullptr && cpu_supports_avx2())
    return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = choose();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

}  // namespace ddccast::kernels
