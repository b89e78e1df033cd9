#pragma once

// Univariate polynomials in the formal parameter lambda with exact rational
// coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lieomega {

using Rational = mpq_class;

class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  Coefficient(Rational value);  // NOLINT(google-explicit-constructor)

  /// lambda^power
  static Coefficient lambda(std::size_t power = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.size() <= 1; }
  bool is_one() const;

  /// Constant term; the whole value when is_constant().
  Rational constant() const;
  /// Coefficient of lambda^power.
  Rational at(std::size_t power) const;
  /// Highest power of lambda present; 0 for constants and zero.
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.size() - 1; }
  const std::vector<Rational>& terms() const noexcept { return terms_; }

  Rational evaluate(const Rational& lambda_value) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(Coefficient a);
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

  /// e.g. "3/2*l^2 - l + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> terms_;  // terms_[i] multiplies lambda^i; no trailing zeros
};

/// "p/q" or "p"
std::string to_string(const Rational& r);

}  // namespace lieomega
