#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace motifspec {

// Reduced fraction with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "3/2", or "2" when the denominator is 1.
  std::string to_string() const;
  // Inverse of to_string; nullopt on malformed input or a zero denominator.
  static std::optional<Rational> parse(const std::string& text);

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Best rational approximation p/q with q <= max_den, accepted only if it
// matches x to within tol. Used to label numerically found eigenvalues that
// happen to be simple fractions.
std::optional<Rational> recognize_rational(double x, std::int64_t max_den = 1000,
                                           double tol = 1e-12);

}  // namespace motifspec
