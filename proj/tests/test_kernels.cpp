#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "motifspec/kernels.hpp"
#include "motifspec/linalg.hpp"

using namespace motifspec;
namespace k = motifspec::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Sizes straddle the 4-wide vector body and its scalar tail.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 67, 1000};

class IsaGuard {
 public:
  IsaGuard() : saved_(k::active_isa()) {}
  ~IsaGuard() { k::set_active_isa(saved_); }

 private:
  k::Isa saved_;
};

}  // namespace

TEST(Kernels, IsaNames) {
  EXPECT_EQ(k::isa_name(k::Isa::kScalar), "scalar");
  EXPECT_EQ(k::isa_name(k::Isa::kAvx2), "avx2");
}

TEST(Kernels, SetActiveIsaFallsBackWithoutAvx2) {
  IsaGuard guard;
  EXPECT_EQ(k::set_active_isa(k::Isa::kScalar), k::Isa::kScalar);
  EXPECT_EQ(k::active_isa(), k::Isa::kScalar);
  const auto got = k::set_active_isa(k::Isa::kAvx2);
  EXPECT_EQ(got, k::avx2_available() ? k::Isa::kAvx2 : k::Isa::kScalar);
}

TEST(Kernels, ScalarReferenceValues) {
  const std::vector<double> x{1, -2, 3};
  const std::vector<double> y{4, 5, -6};
  EXPECT_DOUBLE_EQ(k::scalar::dot(x.data(), y.data(), 3), 4 - 10 - 18);
  EXPECT_DOUBLE_EQ(k::scalar::max_abs(x.data(), 3), 3.0);
  EXPECT_DOUBLE_EQ(k::scalar::max_abs(x.data(), 0), 0.0);

  std::vector<double> z = y;
  k::scalar::axpy(2.0, x.data(), z.data(), 3);
  EXPECT_EQ(z, (std::vector<double>{6, 1, 0}));
  k::scalar::scale(-0.5, z.data(), 3);
  EXPECT_EQ(z, (std::vector<double>{-3, -0.5, -0.0}));

  std::vector<double> a{1, 0}, b{0, 1};
  k::scalar::rotate(a.data(), b.data(), 2, 0.0, 1.0);
  EXPECT_EQ(a, (std::vector<double>{0, -1}));
  EXPECT_EQ(b, (std::vector<double>{1, 0}));
}

#if defined(MOTIFSPEC_HAVE_AVX2)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!k::avx2_available()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  }
  std::mt19937_64 rng{7};
};

TEST_F(Avx2Equivalence, Dot) {
  for (std::size_t n : kSizes) {
    const auto x = random_vector(n, rng);
    const auto y = random_vector(n, rng);
    const double s = k::scalar::dot(x.data(), y.data(), n);
    const double v = k::avx2::dot(x.data(), y.data(), n);
    // Different summation order: agree to rounding of the absolute sum.
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) bound += std::fabs(x[i] * y[i]);
    EXPECT_NEAR(s, v, 1e-14 * (bound + 1.0)) << "n=" << n;
  }
}

TEST_F(Avx2Equivalence, AxpyScaleRotateMaxAbs) {
  for (std::size_t n : kSizes) {
    const auto x = random_vector(n, rng);
    const auto y = random_vector(n, rng);
    const double a = 0.37, c = std::cos(0.3), s = std::sin(0.3);

    auto ys = y, yv = y;
    k::scalar::axpy(a, x.data(), ys.data(), n);
    k::avx2::axpy(a, x.data(), yv.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ys[i], yv[i], 1e-15 * 8) << "axpy n=" << n;

    auto xs = x, xv = x;
    k::scalar::scale(a, xs.data(), n);
    k::avx2::scale(a, xv.data(), n);
    EXPECT_EQ(xs, xv) << "scale n=" << n;

    auto x1 = x, y1 = y, x2 = x, y2 = y;
    k::scalar::rotate(x1.data(), y1.data(), n, c, s);
    k::avx2::rotate(x2.data(), y2.data(), n, c, s);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(x1[i], x2[i], 1e-14) << "rotate n=" << n;
      EXPECT_NEAR(y1[i], y2[i], 1e-14) << "rotate n=" << n;
    }

    EXPECT_EQ(k::scalar::max_abs(x.data(), n), k::avx2::max_abs(x.data(), n)) << "max_abs n=" << n;
  }
}

TEST_F(Avx2Equivalence, MaxAbsFindsSignedExtremesAnywhere) {
  for (std::size_t n : {1u, 4u, 5u, 13u}) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::vector<double> x(n, 0.25);
      x[pos] = -9.0;
      EXPECT_EQ(k::avx2::max_abs(x.data(), n), 9.0);
    }
  }
}

TEST_F(Avx2Equivalence, JacobiAgreesAcrossIsas) {
  IsaGuard guard;
  const std::size_t n = 23;
  SymMatrix m(n);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, d(rng));
  }
  k::set_active_isa(k::Isa::kScalar);
  const auto a = jacobi_eigen(m);
  k::set_active_isa(k::Isa::kAvx2);
  const auto b = jacobi_eigen(m);
  ASSERT_EQ(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-12);
}

#endif

TEST(Kernels, DispatchMatchesScalar) {
  IsaGuard guard;
  std::mt19937_64 rng(3);
  for (auto isa : {k::Isa::kScalar, k::Isa::kAvx2}) {
    k::set_active_isa(isa);
    for (std::size_t n : kSizes) {
      const auto x = random_vector(n, rng);
      auto y = random_vector(n, rng);
      EXPECT_NEAR(k::dot(x, y), k::scalar::dot(x.data(), y.data(), n), 1e-12 * (n + 1));
      EXPECT_EQ(k::max_abs(x), k::scalar::max_abs(x.data(), n));
    }
  }
}
