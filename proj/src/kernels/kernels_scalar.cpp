#include "kernels/kernels_internal.hpp"
#include "kernels/lane_scalar.hpp"
#include "kernels/mathfun.hpp"

#include "chaoscert/kernels.hpp"

namespace chaoscert::kernels {

namespace detail {

const KernelTable& scalar_table() {
  static const KernelTable t{
      Isa::Scalar,
      &map_values_impl<ScalarLane>,
      &iterate_residual_impl<ScalarLane>,
      &peak_iterates_impl<ScalarLane>,
      &peak_return_lhs_impl<ScalarLane>,
      &lap_sign_step_impl<ScalarLane>,
  };
  return t;
}

}  // namespace detail

double pollution_pow(double base, double beta) noexcept {
  return detail::pow_generic(base, detail::PowSpec::make(beta));
}

double map_value(double alpha, double beta, double k) noexcept {
  return detail::map_generic(alpha, k, detail::PowSpec::make(beta));
}

double exp_approx(double x) noexcept { return detail::exp_generic(x); }
double log_approx(double x) noexcept { return detail::log_generic(x); }

}  // namespace chaoscert::kernels
