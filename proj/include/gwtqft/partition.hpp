#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gwtqft/series.hpp"

namespace gwtqft {

/// A partition of d: weakly decreasing positive parts. Used both as a cycle
/// type (conjugacy class of S_d) and as the label of an irreducible
/// representation.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into canonical (decreasing) order; rejects parts < 1.
  explicit Partition(std::vector<int> parts);

  /// (1, 1, ..., 1) of size d.
  static Partition ones(int d);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Number of parts equal to k.
  int multiplicity(int k) const;

  /// Rendered as "(2,1)"; the empty partition is "()".
  std::string label() const;
  /// Rendered as "2,1", the textual input syntax.
  std::string spec() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d, reverse-lexicographic: (d) first, (1^d) last.
/// d = 0 yields the single empty partition; d < 0 throws DomainError.
const std::vector<Partition>& enumerate_partitions(int d);

/// Position of a partition in enumerate_partitions(p.size()).
std::size_t partition_index(const Partition& p);

/// Order of the centralizer of a permutation of cycle type alpha:
/// prod_k k^{m_k} m_k!.
Integer centralizer_order(const Partition& alpha);

/// Number of permutations with cycle type alpha, d!/z(alpha).
Integer class_size(const Partition& alpha);

/// Dimension of the irreducible representation labelled by lambda (hook
/// length formula).
Integer hook_dimension(const Partition& lambda);

Integer factorial(int n);

/// Parses "2,1" (whitespace ignored) into a canonical partition; throws
/// ParseError with the offending byte offset relative to `base_offset`.
Partition parse_partition(const std::string& text, std::size_t base_offset = 0);

}  // namespace gwtqft
