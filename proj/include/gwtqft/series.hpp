#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gwtqft {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kDefaultOrder = 16;

/// Lowest-terms fraction string: "0", "-3", "7/5760".
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" into a canonical rational; throws ParseError.
Rational parse_rational(const std::string& text);

/// An element of Q[[t]] modulo t^N with exact rational coefficients.
///
/// Values are immutable once built. Binary arithmetic requires both operands
/// to carry the same order; a mismatch throws ErrorCode::OrderMismatch rather
/// than truncating.
class Series {
 public:
  /// The zero series of the given order (order >= 1).
  explicit Series(std::size_t order);
  /// Takes ownership of the coefficient list; coeffs[i] multiplies t^i.
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, std::size_t order);
  static Series monomial(const Rational& c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of t^i, or zero past the truncation order.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; order() for the zero series.
  std::size_t valuation() const;
  bool is_zero() const;
  bool is_unit() const { return coeffs_[0] != 0; }
  /// True when only the constant coefficient may be nonzero.
  bool is_constant() const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }

  friend bool operator==(const Series& a, const Series& b) = default;

  /// Same coefficients, re-truncated or zero-padded to a new order.
  Series with_order(std::size_t order) const;

 private:
  std::vector<Rational> coeffs_;
};

void require_same_order(const Series& a, const Series& b);

/// Writes the coefficients of every series, concatenated, as numerators over
/// their least common denominator, which is returned.
Integer common_numerators(std::span<const Series> series, std::vector<Integer>& out);

/// Multiplicative inverse; throws NotAUnit when the constant term is zero.
Series invert(const Series& a);

/// a^k by square-and-multiply; negative k inverts first.
Series int_pow(const Series& a, long k);

/// Formal exponential; requires a zero constant term (DomainError).
Series exp(const Series& a);
/// Formal logarithm; requires constant term 1 (DomainError).
Series log(const Series& a);

/// Square root with positive constant term; throws NoSquareRoot unless the
/// constant term is the square of a nonzero rational.
Series sqrt(const Series& a);

/// 2 sin(m t / 2) truncated at the given order.
Series two_sin_half(long m, std::size_t order);

/// a / t^k, zero padded back to a.order(); throws NotDivisible if a
/// nonzero coefficient sits below t^k.
Series divide_by_t_power(const Series& a, std::size_t k);

/// a * t^k, truncated at a.order().
Series multiply_by_t_power(const Series& a, std::size_t k);

/// Human-readable "1 + 1/2*t - t^3/24" style rendering (zero terms omitted).
std::string to_string(const Series& s);

}  // namespace gwtqft
