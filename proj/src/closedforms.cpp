#include "gwtqft/closedforms.hpp"

#include "gwtqft/error.hpp"

namespace gwtqft {

namespace {

// 2 sin(m t / 2) / t, a unit with constant term m. Built one order higher so
// the shift loses nothing.
Series sine_factor(int m, std::size_t order) {
  return divide_by_t_power(two_sin_half(m, order + 1), 1).with_order(order);
}

void require_partition_of(int d, const Partition& alpha) {
  if (d < 1 || alpha.size() != d)
    throw Error(ErrorCode::DomainError, alpha.label() + " is not a partition of " + std::to_string(d));
}

}  // namespace

Series sine_quotient(std::size_t order) { return sine_factor(1, order); }

Series cap(int d, const Partition& alpha, std::size_t order) {
  require_partition_of(d, alpha);
  const int len = alpha.length();
  Series product = Series::constant(1, order);
  for (int part : alpha.parts()) product *= sine_factor(part, order);
  // t^d / prod(2 sin) = t^{d-l} / prod(2 sin / t)
  Series result = multiply_by_t_power(invert(product), static_cast<std::size_t>(d - len));
  Rational scale = Rational(1) / Rational(centralizer_order(alpha));
  if ((d - len) % 2 != 0) scale = -scale;
  return result * scale;
}

Series fp_genus0(int d, std::size_t order) {
  if (d < 1) throw Error(ErrorCode::DomainError, "fp_genus0 needs d >= 1");
  Series total(order);
  for (const Partition& alpha : enumerate_partitions(d)) {
    Series product = Series::constant(1, order);
    for (int part : alpha.parts()) product *= sine_factor(part, order);
    const Series term = multiply_by_t_power(int_pow(product, -2), static_cast<std::size_t>(2 * (d - alpha.length())));
    total += term * (Rational(1) / Rational(centralizer_order(alpha)));
  }
  return total;
}

Series d1_relative(int genus, int boundaries, std::size_t order) {
  if (genus < 0 || boundaries < 0) throw Error(ErrorCode::DomainError, "genus and boundary count must be >= 0");
  return int_pow(sine_quotient(order), 2L * genus - 2 + boundaries);
}

std::pair<Series, Series> d2_eigenvalues(std::size_t order) {
  const Series s4 = int_pow(sine_quotient(order), 4);
  // 4 sin(t/2) = 2 * (2 sin(t/2))
  const Series four_sin = two_sin_half(1, order) * Rational(2);
  const Series four = Series::constant(4, order);
  return {s4 * (four + four_sin), s4 * (four - four_sin)};
}

Series d2_closed(int genus, std::size_t order) {
  if (genus < 0) throw Error(ErrorCode::DomainError, "genus must be >= 0");
  const auto [plus, minus] = d2_eigenvalues(order);
  return int_pow(plus, genus - 1) + int_pow(minus, genus - 1);
}

FrobeniusAlgebra d1_algebra(std::size_t order) {
  const Series s = sine_quotient(order);
  const Series s_inv = invert(s);
  return FrobeniusAlgebra({Partition({1}).label()}, {s}, {s_inv}, {s_inv});
}

}  // namespace gwtqft
