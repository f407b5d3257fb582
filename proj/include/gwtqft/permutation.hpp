#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gwtqft/partition.hpp"

namespace gwtqft {

/// One-line notation: perm[i] is the image of i (0-based).
using Permutation = std::vector<std::uint8_t>;

Permutation compose(const Permutation& p, const Permutation& q);  // p after q
Permutation inverse(const Permutation& p);
Partition cycle_type(const Permutation& p);

/// The elements of S_d in lexicographic one-line order, addressed by index.
/// Products are tabulated for d <= 6 and computed on demand above that.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int d);

  int degree() const noexcept { return d_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const noexcept { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const { return inverse_[a]; }
  /// Canonical index of a class (position in enumerate_partitions(d)).
  std::size_t class_of(std::size_t a) const { return class_[a]; }
  /// Indices of every element of cycle type enumerate_partitions(d)[c].
  const std::vector<std::size_t>& class_members(std::size_t c) const { return members_[c]; }

  std::size_t index_of(const Permutation& p) const;

 private:
  int d_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> class_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::uint32_t> table_;
};

}  // namespace gwtqft
