#include "gwtqft/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gwtqft/error.hpp"

namespace gwtqft {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

SymmetricGroup::SymmetricGroup(int d) : d_(d) {
  if (d < 1 || d > 9) throw Error(ErrorCode::TooLarge, "symmetric group enumeration supports 1 <= d <= 9");
  Permutation p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = elements_.size();
  const auto& classes = enumerate_partitions(d);
  members_.resize(classes.size());
  inverse_.resize(n);
  class_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_of(inverse(elements_[i]));
    class_[i] = partition_index(cycle_type(elements_[i]));
    members_[class_[i]].push_back(i);
  }
  if (d <= 6) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint32_t>(index_of(compose(elements_[a], elements_[b])));
  }
}

std::size_t SymmetricGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_of(compose(elements_[a], elements_[b]));
}

std::size_t SymmetricGroup::index_of(const Permutation& p) const {
  // Lehmer code gives the lexicographic rank.
  std::size_t rank = 0;
  const std::size_t d = p.size();
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < d; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (d - i) + smaller;
  }
  return rank;
}

}  // namespace gwtqft
