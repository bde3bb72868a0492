#pragma once

#include "chaoscert/kernels.hpp"

namespace chaoscert::kernels::detail {

const KernelTable& scalar_table();
#if CHAOSCERT_HAVE_AVX2
const KernelTable& avx2_table();
#endif

}  // namespace chaoscert::kernels::detail
