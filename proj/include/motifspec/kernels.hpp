#pragma once

// Dense double-precision vector kernels used by the eigensolvers and the
// orthogonalization routines. Each kernel has a portable scalar reference
// implementation and, on x86-64, an AVX2/FMA variant selected at runtime.

#include <cstddef>
#include <span>
#include <string_view>

namespace motifspec::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// True when the running CPU supports the AVX2 path and it was compiled in.
bool avx2_available();

// Instruction set currently used by the dispatching entry points. Resolved
// once from CPU features; MOTIFSPEC_ISA=scalar in the environment pins the
// reference path.
Isa active_isa();

// Overrides the dispatch choice (tests and benchmarks). Requesting kAvx2 on
// a machine without it falls back to kScalar; the effective value is
// returned.
Isa set_active_isa(Isa isa);

// sum_i x[i] * y[i]
double dot(std::span<const double> x, std::span<const double> y);

// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);

// x[i] *= a
void scale(double a, std::span<double> x);

// Plane rotation of two rows:
//   x'[i] = c * x[i] - s * y[i]
//   y'[i] = s * x[i] + c * y[i]
void rotate(std::span<double> x, std::span<double> y, double c, double s);

// max_i |x[i]|, 0 for an empty span.
double max_abs(std::span<const double> x);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
double max_abs(const double* x, std::size_t n);
}  // namespace scalar

#if defined(MOTIFSPEC_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
double max_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace motifspec::kernels
