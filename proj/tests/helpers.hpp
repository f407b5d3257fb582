#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gwtqft/series.hpp"

namespace testing {

inline gwtqft::Series series(std::initializer_list<const char*> coeffs) {
  std::vector<gwtqft::Rational> c;
  for (const char* s : coeffs) c.push_back(gwtqft::parse_rational(s));
  return gwtqft::Series(std::move(c));
}

inline gwtqft::Rational q(const char* s) { return gwtqft::parse_rational(s); }

// Small random rationals; enough variety to exercise reduction.
inline gwtqft::Series random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant = false) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<gwtqft::Rational> c(order);
  for (auto& x : c) {
    x = gwtqft::Rational(num(rng), den(rng));
    x.canonicalize();
  }
  if (unit_constant && c[0] == 0) c[0] = 1;
  return gwtqft::Series(std::move(c));
}

}  // namespace testing
