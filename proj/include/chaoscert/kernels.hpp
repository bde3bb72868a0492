#pragma once

// Batch evaluation kernels for the pollution map f(k) = alpha * k * (1 - k)^beta.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant. Both are
// instantiated from the same lane-generic code with contraction disabled, so the
// two paths are bit-identical; the active variant is chosen once at startup and
// can be overridden with CHAOSCERT_KERNEL=scalar|avx2|auto or set_isa().

#include <optional>
#include <span>
#include <string_view>

namespace chaoscert::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;
bool isa_supported(Isa isa) noexcept;

/// Best supported ISA unless overridden by CHAOSCERT_KERNEL or set_isa().
Isa active_isa() noexcept;
/// Throws Error(InvalidArgument) if the ISA is not supported on this CPU.
void set_isa(Isa isa);

struct KernelTable {
  Isa isa;
  // out[i] = f(k[i]), no domain checks.
  void (*map_values)(double alpha, double beta, std::span<const double> k, std::span<double> out);
  // out[i] = f^n(k[i]) - k[i].
  void (*iterate_residual)(double alpha, double beta, int n, std::span<const double> k,
                           std::span<double> out);
  // f^2(m) and f^3(m) at the peak m = 1/(1+beta), one alpha per lane.
  void (*peak_iterates)(double beta, std::span<const double> alpha, std::span<double> f2m,
                        std::span<double> f3m);
  // 1 - alpha^2 q ((beta + 1 - alpha q)/(beta + 1))^beta with q = (beta/(beta+1))^beta.
  // Positive exactly when f^2(m) < m.
  void (*peak_return_lhs)(double beta, std::span<const double> alpha, std::span<double> out);
  // sign[i] *= sgn(m - orbit[i]); orbit[i] = f(orbit[i]).
  void (*lap_sign_step)(double alpha, double beta, std::span<double> orbit,
                        std::span<double> sign);
};

const KernelTable& table(Isa isa);
inline const KernelTable& active() { return table(active_isa()); }

/// (base)^beta as the map computes it: exp(beta * log|base|), 0 at base == 0 for
/// beta > 0, 1 for beta == 0, signed for integral beta and NaN otherwise when
/// base < 0. Same rounding as every kernel.
double pollution_pow(double base, double beta) noexcept;

/// Raw map value, bit-identical to map_values.
double map_value(double alpha, double beta, double k) noexcept;

/// Same exp/log approximations the kernels use; exposed for accuracy tests.
double exp_approx(double x) noexcept;
double log_approx(double x) noexcept;

}  // namespace chaoscert::kernels
