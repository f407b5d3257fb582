#pragma once

#include <cstddef>
#include <vector>

#include "gwtqft/partition.hpp"

namespace gwtqft {

/// Irreducible characters of S_d. Rows are representations and columns are
/// conjugacy classes, both in enumerate_partitions(d) order.
struct CharacterTable {
  int d = 0;
  std::vector<Partition> order;
  std::vector<std::vector<long>> values;  // values[rep][cls]

  long operator()(std::size_t rep, std::size_t cls) const { return values[rep][cls]; }
};

/// chi_lambda on the class of cycle type mu (Murnaghan-Nakayama rule).
long character(const Partition& lambda, const Partition& mu);

/// Cached per d; both orthogonality relations are verified before the table
/// is published (a failure throws std::logic_error).
const CharacterTable& character_table(int d);

/// Structure constants of the class sums K_alpha in the centre of Q[S_d]:
/// K_a K_b = sum_c a(a, b, c) K_c.
class ClassConstants {
 public:
  ClassConstants(int d, std::vector<Rational> data);

  int degree() const noexcept { return d_; }
  std::size_t rank() const noexcept { return n_; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  friend bool operator==(const ClassConstants&, const ClassConstants&) = default;

 private:
  int d_;
  std::size_t n_;
  std::vector<Rational> data_;
};

/// Character-formula evaluation; for d <= 4 it is also recomputed by
/// convolution over S_d and the two must agree.
ClassConstants class_product_constants(int d);

/// Direct convolution of class sums over the group (feasible for small d).
ClassConstants class_product_constants_by_convolution(int d);

}  // namespace gwtqft
