#include <atomic>
#include <cassert>
#include <cstdlib>
#include <cstring>

#include "motifspec/kernels.hpp"

namespace motifspec::kernels {

namespace {

Isa detect() {
  const char* env = std::getenv("MOTIFSPEC_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  return avx2_available() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(MOTIFSPEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_available()) isa = Isa::kScalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
#if defined(MOTIFSPEC_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::dot(x.data(), y.data(), x.size());
#endif
  return scalar::dot(x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
#if defined(MOTIFSPEC_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::axpy(a, x.data(), y.data(), x.size());
#endif
  scalar::axpy(a, x.data(), y.data(), x.size());
}

void scale(double a, std::span<double> x) {
#if defined(MOTIFSPEC_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::scale(a, x.data(), x.size());
#endif
  scalar::scale(a, x.data(), x.size());
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
#if defined(MOTIFSPEC_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::rotate(x.data(), y.data(), x.size(), c, s);
#endif
  scalar::rotate(x.data(), y.data(), x.size(), c, s);
}

double max_abs(std::span<const double> x) {
#if defined(MOTIFSPEC_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::max_abs(x.data(), x.size());
#endif
  return scalar::max_abs(x.data(), x.size());
}

}  // namespace motifspec::kernels
