#include "gwtqft/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <sstream>

#include "gwtqft/error.hpp"

namespace gwtqft {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error(ErrorCode::DomainError, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) size_ += p;
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::label() const { return "(" + spec() + ")"; }

std::string Partition::spec() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  return out.str();
}

namespace {

std::vector<Partition> generate(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  // Parts chosen largest-first with each part bounded by the previous one,
  // which visits partitions in reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int d) {
  if (d < 0) throw Error(ErrorCode::DomainError, "cannot enumerate partitions of a negative integer");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, generate(d)).first;
  return it->second;
}

std::size_t partition_index(const Partition& p) {
  const auto& all = enumerate_partitions(p.size());
  // Reverse-lexicographic order means the list is sorted descending.
  auto it = std::lower_bound(all.begin(), all.end(), p, std::greater<>());
  if (it == all.end() || *it != p) throw std::logic_error("partition missing from enumeration");
  return static_cast<std::size_t>(it - all.begin());
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer centralizer_order(const Partition& alpha) {
  Integer z = 1;
  const auto& parts = alpha.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    Integer k_pow;
    mpz_ui_pow_ui(k_pow.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(mult));
    z *= k_pow * factorial(mult);
    i = j;
  }
  return z;
}

Integer class_size(const Partition& alpha) { return factorial(alpha.size()) / centralizer_order(alpha); }

Integer hook_dimension(const Partition& lambda) {
  const auto& rows = lambda.parts();
  Integer hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      const int arm = rows[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

Partition parse_partition(const std::string& text, std::size_t base_offset) {
  std::vector<int> parts;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) throw ParseError(base_offset + i, "expected a positive integer");
    if (text[i] == '-') throw ParseError(base_offset + i, "negative part");
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(base_offset + i, std::string("unexpected character '") + text[i] + "'");
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError(base_offset + start, "part too large");
      ++i;
    }
    if (value == 0) throw ParseError(base_offset + start, "parts must be positive");
    parts.push_back(static_cast<int>(value));
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',') throw ParseError(base_offset + i, std::string("unexpected character '") + text[i] + "'");
    ++i;
  }
  return Partition(std::move(parts));
}

}  // namespace gwtqft
