#include <atomic>
#include <cstdlib>
#include <string>

#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace chaoscert::kernels {

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("CHAOSCERT_KERNEL")) {
    const auto requested = parse_isa(env);
    if (requested && isa_supported(*requested)) return *requested;
  }
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return std::nullopt;
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if CHAOSCERT_HAVE_AVX2
      return __builtin_cpu_supports("avx2");
#else
      // TODO: NEON variant for aarch64 builds.
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa))
    throw Error(ErrorCode::InvalidArgument,
                "kernel ISA '" + std::string(isa_name(isa)) + "' is not supported on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

const KernelTable& table(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return detail::scalar_table();
    case Isa::Avx2:
#if CHAOSCERT_HAVE_AVX2
      if (isa_supported(Isa::Avx2)) return detail::avx2_table();
#endif
      break;
  }
  throw Error(ErrorCode::InvalidArgument,
              "kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
}

}  // namespace chaoscert::kernels
