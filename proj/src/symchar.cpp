#include "gwtqft/symchar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gwtqft/error.hpp"
#include "gwtqft/permutation.hpp"

namespace gwtqft {

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing first-column hook lengths

BetaSet beta_set(const std::vector<int>& rows) {
  const int len = static_cast<int>(rows.size());
  BetaSet beta(rows.size());
  for (int i = 0; i < len; ++i) beta[i] = rows[i] + (len - 1 - i);
  return beta;
}

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  // Cycles are consumed largest-first; `next` indexes the first unconsumed.
  long eval(const BetaSet& beta, std::size_t next) {
    if (next == cycles_.size()) return 1;
    auto key = std::make_pair(beta, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = cycles_[next];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - k;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      // Removing a k-rim hook slides bead beta[i] down to target; the hook's
      // height is the number of beads it jumps over.
      const auto height = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > target && b < beta[i]; });
      BetaSet next_beta = beta;
      next_beta[i] = target;
      std::sort(next_beta.begin(), next_beta.end(), std::greater<>());
      const long sub = eval(next_beta, next + 1);
      total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<BetaSet, std::size_t>, long> memo_;
};

}  // namespace

long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::DomainError, "character arguments " + lambda.label() + " and " + mu.label() +
                                            " are partitions of different integers");
  MurnaghanNakayama mn(mu.parts());
  return mn.eval(beta_set(lambda.parts()), 0);
}

namespace {

CharacterTable build_table(int d) {
  CharacterTable table;
  table.d = d;
  table.order = enumerate_partitions(d);
  const std::size_t n = table.order.size();
  table.values.assign(n, std::vector<long>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    MurnaghanNakayama mn(table.order[c].parts());
    for (std::size_t r = 0; r < n; ++r) table.values[r][c] = mn.eval(beta_set(table.order[r].parts()), 0);
  }

  std::vector<Integer> z(n);
  for (std::size_t c = 0; c < n; ++c) z[c] = centralizer_order(table.order[c]);
  for (std::size_t r1 = 0; r1 < n; ++r1) {
    if (Integer(table.values[r1][n - 1]) != hook_dimension(table.order[r1]))
      throw std::logic_error("character table: identity column differs from hook dimension");
    for (std::size_t r2 = 0; r2 < n; ++r2) {
      Rational row = 0;
      Integer col = 0;
      for (std::size_t c = 0; c < n; ++c) {
        row += Rational(table.values[r1][c] * table.values[r2][c]) / Rational(z[c]);
        col += table.values[c][r1] * table.values[c][r2];
      }
      if (row != (r1 == r2 ? 1 : 0)) throw std::logic_error("character table: row orthogonality failed");
      if (col != (r1 == r2 ? z[r1] : Integer(0))) throw std::logic_error("character table: column orthogonality failed");
    }
  }
  return table;
}

}  // namespace

const CharacterTable& character_table(int d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "character_table needs d >= 1");
  static std::mutex mutex;
  static std::map<int, CharacterTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_table(d)).first;
  return it->second;
}

ClassConstants::ClassConstants(int d, std::vector<Rational> data)
    : d_(d), n_(enumerate_partitions(d).size()), data_(std::move(data)) {
  if (data_.size() != n_ * n_ * n_) throw std::logic_error("class constants: wrong tensor size");
}

ClassConstants class_product_constants_by_convolution(int d) {
  const SymmetricGroup group(d);
  const auto& classes = enumerate_partitions(d);
  const std::size_t n = classes.size();
  std::vector<Integer> counts(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x : group.class_members(a))
        for (std::size_t y : group.class_members(b)) counts[(a * n + b) * n + group.class_of(group.multiply(x, y))] += 1;
  // Every element of class c appears equally often in K_a K_b.
  std::vector<Rational> data(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t i = (a * n + b) * n + c;
        data[i] = Rational(counts[i]) / Rational(class_size(classes[c]));
      }
  return ClassConstants(d, std::move(data));
}

ClassConstants class_product_constants(int d) {
  const CharacterTable& table = character_table(d);
  const std::size_t n = table.order.size();
  const Integer group_order = factorial(d);
  std::vector<Integer> sizes(n), dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    sizes[i] = class_size(table.order[i]);
    dims[i] = hook_dimension(table.order[i]);
  }
  std::vector<Rational> data(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Rational sum = 0;
        for (std::size_t r = 0; r < n; ++r)
          sum += Rational(Integer(table(r, a)) * table(r, b) * table(r, c)) / Rational(dims[r]);
        data[(a * n + b) * n + c] = Rational(sizes[a] * sizes[b]) / Rational(group_order) * sum;
      }
  ClassConstants result(d, std::move(data));
  if (d <= 4 && !(result == class_product_constants_by_convolution(d)))
    throw std::logic_error("class constants: character formula disagrees with convolution");
  return result;
}

}  // namespace gwtqft
