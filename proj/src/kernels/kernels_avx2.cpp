#include "kernels/kernels_internal.hpp"
#include "kernels/lane_scalar.hpp"
#include "kernels/lane_avx2.hpp"
#include "kernels/mathfun.hpp"

namespace chaoscert::kernels::detail {

const KernelTable& avx2_table() {
  static const KernelTable t{
      Isa::Avx2,
      &map_values_impl<Avx2Lane>,
      &iterate_residual_impl<Avx2Lane>,
      &peak_iterates_impl<Avx2Lane>,
      &peak_return_lhs_impl<Avx2Lane>,
      &lap_sign_step_impl<Avx2Lane>,
  };
  return t;
}

}  // namespace chaoscert::kernels::detail
