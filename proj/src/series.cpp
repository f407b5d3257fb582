#include "gwtqft/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gwtqft/error.hpp"

namespace gwtqft {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SeedError: return "SeedError";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::SingularChangeOfBasis: return "SingularChangeOfBasis";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexError: return "IndexError";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto bad = [&](std::size_t at, const std::string& why) -> Rational {
    throw ParseError(at, "invalid rational '" + text + "': " + why);
  };
  if (text.empty()) return bad(0, "empty");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  std::size_t digits = 0;
  bool slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    const char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
    } else if (c == '/' && !slash && digits > 0) {
      slash = true;
      digits = 0;
    } else {
      return bad(k, "unexpected character");
    }
  }
  if (digits == 0) return bad(text.size(), "missing digits");
  Rational q(text[0] == '+' ? text.substr(1) : text, 10);
  if (q.get_den() == 0) return bad(text.find('/') + 1, "zero denominator");
  q.canonicalize();
  return q;
}

Series::Series(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::DomainError, "series order must be positive");
  coeffs_.assign(order, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DomainError, "series order must be positive");
  for (auto& c : coeffs_) c.canonicalize();
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, std::size_t power, std::size_t order) {
  Series s(order);
  if (power < order) s.coeffs_[power] = c;
  return s;
}

Rational Series::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::size_t Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return coeffs_.size();
}

bool Series::is_zero() const { return valuation() == order(); }

bool Series::is_constant() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::OrderMismatch, "series orders differ (" + std::to_string(a.order()) +
                                              " vs " + std::to_string(b.order()) + ")");
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Integer common_numerators(std::span<const Series> series, std::vector<Integer>& out) {
  Integer den = 1;
  for (const auto& s : series)
    for (const auto& x : s.coeffs())
      if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  out.clear();
  for (const auto& s : series)
    for (const auto& x : s.coeffs()) out.push_back(sgn(x) != 0 ? Integer(x.get_num() * (den / x.get_den())) : Integer(0));
  return den;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  Series r(n);
  if (va + vb >= n) return r;
  std::vector<Integer> x, y;
  const Integer den = common_numerators({&a, 1}, x) * common_numerators({&b, 1}, y);
  Integer acc;
  for (std::size_t k = va + vb; k < n; ++k) {
    acc = 0;
    for (std::size_t i = va; i + vb <= k; ++i)
      if (sgn(x[i]) != 0 && sgn(y[k - i]) != 0) mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), y[k - i].get_mpz_t());
    if (sgn(acc) == 0) continue;
    Rational& c = r.coeffs_[k];
    c.get_num() = acc;
    c.get_den() = den;
    c.canonicalize();
  }
  return r;
}

Series& Series::operator*=(const Series& rhs) { return *this = *this * rhs; }

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series Series::with_order(std::size_t order) const {
  std::vector<Rational> c(order, Rational(0));
  std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), c.begin());
  return Series(std::move(c));
}

Series invert(const Series& a) {
  if (!a.is_unit()) throw Error(ErrorCode::NotAUnit, "series with zero constant term is not invertible");
  const std::size_t n = a.order();
  // Newton iteration b <- b (2 - a b); correct digits double each pass.
  Series b = Series::constant(Rational(1) / a[0], n);
  const Series two = Series::constant(2, n);
  for (std::size_t precision = 1; precision < n; precision *= 2) b = b * (two - a * b);
  return b;
}

Series int_pow(const Series& a, long k) {
  Series base = k < 0 ? invert(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  Series result = Series::constant(1, a.order());
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Series exp(const Series& a) {
  if (a[0] != 0) throw Error(ErrorCode::DomainError, "exp requires a zero constant term");
  const std::size_t n = a.order();
  // b' = a' b  =>  k b_k = sum_{j=1}^{k} j a_j b_{k-j}
  std::vector<Rational> b(n, Rational(0));
  b[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * a[j] * b[k - j];
    b[k] = acc / static_cast<long>(k);
  }
  return Series(std::move(b));
}

Series log(const Series& a) {
  if (a[0] != 1) throw Error(ErrorCode::DomainError, "log requires constant term 1");
  const std::size_t n = a.order();
  // l' = a'/a  =>  k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  std::vector<Rational> l(n, Rational(0));
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * l[j] * a[k - j];
    l[k] = acc / static_cast<long>(k);
  }
  return Series(std::move(l));
}

Series sqrt(const Series& a) {
  const Rational& c = a[0];
  if (c <= 0 || !mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
    throw Error(ErrorCode::NoSquareRoot, "constant term " + to_string(c) + " is not a nonzero rational square");
  const Integer num = ::sqrt(c.get_num());
  const Integer den = ::sqrt(c.get_den());
  const std::size_t n = a.order();
  std::vector<Rational> b(n, Rational(0));
  b[0] = Rational(num, den);
  b[0].canonicalize();
  const Rational twice = 2 * b[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= b[j] * b[k - j];
    b[k] = acc / twice;
  }
  return Series(std::move(b));
}

Series two_sin_half(long m, std::size_t order) {
  if (m < 1) throw Error(ErrorCode::DomainError, "two_sin_half needs m >= 1");
  std::vector<Rational> c(order, Rational(0));
  // 2 sin(x) with x = m t / 2: sum_k (-1)^k 2 x^{2k+1} / (2k+1)!
  Rational half_m(m, 2);
  half_m.canonicalize();
  Rational power = half_m;  // (m/2)^{2k+1}
  Integer factorial = 1;    // (2k+1)!
  for (std::size_t p = 1; p < order; p += 2) {
    const long k = static_cast<long>(p / 2);
    Rational term = 2 * power / Rational(factorial);
    c[p] = (k % 2 == 0) ? term : Rational(-term);
    power *= half_m * half_m;
    factorial *= static_cast<unsigned long>((p + 1) * (p + 2));
  }
  return Series(std::move(c));
}

Series divide_by_t_power(const Series& a, std::size_t k) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < std::min(k, n); ++i)
    if (a[i] != 0)
      throw Error(ErrorCode::NotDivisible,
                  "coefficient of t^" + std::to_string(i) + " is nonzero; cannot divide by t^" + std::to_string(k));
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = k; i < n; ++i) c[i - k] = a[i];
  return Series(std::move(c));
}

Series multiply_by_t_power(const Series& a, std::size_t k) {
  const std::size_t n = a.order();
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i + k < n; ++i) c[i + k] = a[i];
  return Series(std::move(c));
}

std::string to_string(const Series& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < s.order(); ++i) {
    const Rational& c = s[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << to_string(mag);
    if (i > 0) {
      if (mag != 1) out << '*';
      out << 't';
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  out << " + O(t^" << s.order() << ')';
  return out.str();
}

}  // namespace gwtqft
