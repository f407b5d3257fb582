#include "gwtqft/tqft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/permutation.hpp"
#include "gwtqft/symchar.hpp"

namespace gwtqft {

void SurfaceSpec::validate() const {
  if (d < 1) throw Error(ErrorCode::DomainError, "degree must be >= 1");
  if (genus < 0) throw Error(ErrorCode::DomainError, "genus must be >= 0");
  for (const auto& b : boundaries)
    if (b.size() != d)
      throw Error(ErrorCode::DomainError, "boundary " + b.label() + " sums to " + std::to_string(b.size()) +
                                              ", expected " + std::to_string(d));
}

namespace {

int partition_labelled_degree(const FrobeniusAlgebra& a) {
  for (int d = 1; d <= 12; ++d) {
    const auto& parts = enumerate_partitions(d);
    if (parts.size() > a.rank()) break;
    if (parts.size() != a.rank()) continue;
    bool match = true;
    for (std::size_t i = 0; i < parts.size(); ++i) match = match && a.labels()[i] == parts[i].label();
    if (match) return d;
  }
  return 0;
}

Series evaluate_with_handle(const FrobeniusAlgebra& a, const AlgebraElement& handle, const SurfaceSpec& spec) {
  AlgebraElement x = a.unit();
  for (int i = 0; i < spec.genus; ++i) x = multiply(a, x, handle);
  for (const auto& b : spec.boundaries)
    x = multiply(a, x, AlgebraElement::basis_vector(partition_index(b), a.rank(), a.order()));
  return counit(a, x);
}

void require_valid_algebra(const FrobeniusAlgebra& a) {
  const auto report = check_axioms(a);
  if (!report.empty()) throw Error(ErrorCode::InvalidAlgebra, report.front());
}

Rational rational_pow(const Rational& base, long exponent) {
  Rational result = 1;
  const Rational b = exponent < 0 ? Rational(1) / base : base;
  for (long i = 0; i < std::labs(exponent); ++i) result *= b;
  return result;
}

}  // namespace

TqftModel TqftModel::d1() { return TqftModel(Kind::D1, 1, nullptr); }

TqftModel TqftModel::gauge() { return TqftModel(Kind::Gauge, 0, nullptr); }

TqftModel TqftModel::from_algebra(FrobeniusAlgebra algebra) {
  const int d = partition_labelled_degree(algebra);
  if (d == 0) throw Error(ErrorCode::InvalidAlgebra, "basis labels are not the partitions of any degree");
  require_valid_algebra(algebra);
  AlgebraElement handle = handle_element(algebra);
  auto state = std::make_shared<const AlgebraState>(AlgebraState{std::move(algebra), std::move(handle)});
  return TqftModel(Kind::Algebra, d, std::move(state));
}

TqftModel TqftModel::from_name(const std::string& name) {
  if (name == "d1") return d1();
  if (name == "dw") return gauge();
  throw Error(ErrorCode::DomainError, "unknown model '" + name + "' (expected d1 or dw)");
}

std::string TqftModel::name() const {
  switch (kind_) {
    case Kind::D1: return "d1";
    case Kind::Gauge: return "dw";
    case Kind::Algebra: return "algebra";
  }
  return "";
}

Rational gauge_invariant(const SurfaceSpec& spec) {
  spec.validate();
  const CharacterTable& table = character_table(spec.d);
  const Rational group_order(factorial(spec.d));
  Rational total = 0;
  for (std::size_t r = 0; r < table.order.size(); ++r) {
    const Rational dim(hook_dimension(table.order[r]));
    Rational term = rational_pow(group_order / dim, 2L * spec.genus - 2);
    for (const auto& alpha : spec.boundaries) {
      const long chi = table(r, partition_index(alpha));
      term *= Rational(chi) * group_order / (Rational(centralizer_order(alpha)) * dim);
    }
    total += term;
  }
  return total;
}

Series relative_tensor(const TqftModel& model, const SurfaceSpec& spec, std::size_t order) {
  spec.validate();
  if (model.degree() != 0 && model.degree() != spec.d)
    throw Error(ErrorCode::DomainError, "model '" + model.name() + "' has degree " + std::to_string(model.degree()) +
                                            ", surface has degree " + std::to_string(spec.d));
  switch (model.kind()) {
    case TqftModel::Kind::D1:
      return d1_relative(spec.genus, static_cast<int>(spec.boundaries.size()), order);
    case TqftModel::Kind::Gauge:
      return Series::constant(gauge_invariant(spec), order);
    case TqftModel::Kind::Algebra:
      return evaluate_with_handle(model.state_->algebra, model.state_->handle, spec);
  }
  throw std::logic_error("unhandled model kind");
}

Series evaluate_surface(const FrobeniusAlgebra& algebra, const SurfaceSpec& spec) {
  spec.validate();
  const int d = partition_labelled_degree(algebra);
  if (d != spec.d)
    throw Error(ErrorCode::DomainError, "algebra basis is not labelled by the partitions of " + std::to_string(spec.d));
  require_valid_algebra(algebra);
  return evaluate_with_handle(algebra, handle_element(algebra), spec);
}

// ---------------------------------------------------------------------------
// RelativeTensor

RelativeTensor::RelativeTensor(int d, int genus, std::vector<bool> raised, std::vector<Series> entries)
    : d_(d), genus_(genus), dim_(enumerate_partitions(d).size()), raised_(std::move(raised)),
      entries_(std::move(entries)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < raised_.size(); ++i) expected *= dim_;
  if (entries_.size() != expected) throw std::logic_error("relative tensor: wrong entry count");
}

RelativeTensor RelativeTensor::build(const TqftModel& model, int d, int genus, std::size_t arity, std::size_t order) {
  const auto& parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) count *= n;
  std::vector<Series> entries;
  entries.reserve(count);
  std::vector<std::size_t> index(arity, 0);
  for (std::size_t f = 0; f < count; ++f) {
    std::size_t rest = f;
    for (std::size_t s = arity; s-- > 0;) {
      index[s] = rest % n;
      rest /= n;
    }
    SurfaceSpec spec{d, genus, {}};
    for (std::size_t i : index) spec.boundaries.push_back(parts[i]);
    entries.push_back(relative_tensor(model, spec, order));
  }
  return RelativeTensor(d, genus, std::vector<bool>(arity, false), std::move(entries));
}

const Series& RelativeTensor::scalar() const {
  if (arity() != 0) throw Error(ErrorCode::IndexError, "scalar() on a tensor of arity " + std::to_string(arity()));
  return entries_.front();
}

std::size_t RelativeTensor::flat(std::span<const std::size_t> index) const {
  if (index.size() != arity()) throw Error(ErrorCode::IndexError, "index length differs from tensor arity");
  std::size_t f = 0;
  for (std::size_t i : index) {
    if (i >= dim_) throw Error(ErrorCode::IndexError, "partition index out of range");
    f = f * dim_ + i;
  }
  return f;
}

std::vector<std::size_t> RelativeTensor::unflat(std::size_t flat_index) const {
  std::vector<std::size_t> index(arity());
  for (std::size_t s = arity(); s-- > 0;) {
    index[s] = flat_index % dim_;
    flat_index /= dim_;
  }
  return index;
}

static RelativeTensor scale_slot(const RelativeTensor& t, std::size_t slot, bool raise) {
  if (slot >= t.arity()) throw Error(ErrorCode::IndexError, "slot " + std::to_string(slot) + " out of range");
  if (t.raised(slot) == raise)
    throw Error(ErrorCode::IndexError, "slot " + std::to_string(slot) + (raise ? " is already raised" : " is not raised"));
  const auto& parts = enumerate_partitions(t.degree());
  std::vector<Series> entries;
  entries.reserve(t.entry_count());
  for (std::size_t f = 0; f < t.entry_count(); ++f) {
    const Rational z(centralizer_order(parts[t.unflat(f)[slot]]));
    entries.push_back(t.flat_entry(f) * (raise ? z : Rational(1) / z));
  }
  std::vector<bool> raised = t.raised_slots();
  raised[slot] = raise;
  return RelativeTensor(t.degree(), t.genus(), std::move(raised), std::move(entries));
}

RelativeTensor raise_index(const RelativeTensor& t, std::size_t slot) { return scale_slot(t, slot, true); }

RelativeTensor lower_index(const RelativeTensor& t, std::size_t slot) { return scale_slot(t, slot, false); }

namespace {

std::vector<Rational> gluing_weights(int d, bool raised_a, bool raised_b) {
  if (raised_a && raised_b) throw Error(ErrorCode::IndexError, "cannot contract two raised slots");
  std::vector<Rational> w;
  for (const auto& p : enumerate_partitions(d))
    w.push_back(raised_a || raised_b ? Rational(1) : Rational(centralizer_order(p)));
  return w;
}

void require_compatible(const RelativeTensor& a, const RelativeTensor& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::DomainError, "tensors have different degrees");
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "tensors have different orders");
}

}  // namespace

RelativeTensor glue_separating(const RelativeTensor& a, const RelativeTensor& b) {
  require_compatible(a, b);
  if (a.arity() == 0 || b.arity() == 0) throw Error(ErrorCode::IndexError, "gluing needs a boundary on each side");
  const std::size_t ra = a.arity() - 1;
  const std::size_t rb = b.arity() - 1;
  const auto w = gluing_weights(a.degree(), a.raised(ra), b.raised(rb));
  const std::size_t n = a.dimension();

  std::vector<bool> raised(a.raised_slots().begin(), a.raised_slots().end() - 1);
  raised.insert(raised.end(), b.raised_slots().begin(), b.raised_slots().end() - 1);
  std::size_t count_a = 1, count_b = 1;
  for (std::size_t i = 0; i < ra; ++i) count_a *= n;
  for (std::size_t i = 0; i < rb; ++i) count_b *= n;

  std::vector<Series> entries;
  entries.reserve(count_a * count_b);
  for (std::size_t fa = 0; fa < count_a; ++fa)
    for (std::size_t fb = 0; fb < count_b; ++fb) {
      Series sum(a.order());
      for (std::size_t g = 0; g < n; ++g)
        sum += (a.flat_entry(fa * n + g) * b.flat_entry(fb * n + g)) * w[g];
      entries.push_back(std::move(sum));
    }
  return RelativeTensor(a.degree(), a.genus() + b.genus(), std::move(raised), std::move(entries));
}

RelativeTensor glue_nonseparating(const RelativeTensor& t) {
  if (t.arity() < 2) throw Error(ErrorCode::IndexError, "non-separating gluing needs at least two slots");
  const std::size_t r = t.arity() - 2;
  const auto w = gluing_weights(t.degree(), t.raised(r), t.raised(r + 1));
  const std::size_t n = t.dimension();
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= n;
  std::vector<Series> entries;
  entries.reserve(count);
  for (std::size_t f = 0; f < count; ++f) {
    Series sum(t.order());
    for (std::size_t g = 0; g < n; ++g) sum += t.flat_entry((f * n + g) * n + g) * w[g];
    entries.push_back(std::move(sum));
  }
  std::vector<bool> raised(t.raised_slots().begin(), t.raised_slots().end() - 2);
  return RelativeTensor(t.degree(), t.genus() + 1, std::move(raised), std::move(entries));
}

RelativeTensor compose(const RelativeTensor& first, const RelativeTensor& second, std::size_t circles) {
  require_compatible(first, second);
  if (circles == 0 || circles > first.arity() || circles > second.arity())
    throw Error(ErrorCode::IndexError, "cannot compose along " + std::to_string(circles) + " circles");
  const std::size_t keep_first = first.arity() - circles;
  const std::size_t keep_second = second.arity() - circles;
  for (std::size_t i = 0; i < circles; ++i) {
    if (!first.raised(keep_first + i)) throw Error(ErrorCode::IndexError, "outgoing slots of the first map must be raised");
    if (second.raised(i)) throw Error(ErrorCode::IndexError, "incoming slots of the second map must be lowered");
  }
  const std::size_t n = first.dimension();
  std::size_t count_a = 1, count_mid = 1, count_b = 1;
  for (std::size_t i = 0; i < keep_first; ++i) count_a *= n;
  for (std::size_t i = 0; i < circles; ++i) count_mid *= n;
  for (std::size_t i = 0; i < keep_second; ++i) count_b *= n;

  std::vector<bool> raised(first.raised_slots().begin(), first.raised_slots().begin() + static_cast<long>(keep_first));
  raised.insert(raised.end(), second.raised_slots().begin() + static_cast<long>(circles), second.raised_slots().end());
  std::vector<Series> entries;
  entries.reserve(count_a * count_b);
  for (std::size_t fa = 0; fa < count_a; ++fa)
    for (std::size_t fb = 0; fb < count_b; ++fb) {
      Series sum(first.order());
      for (std::size_t m = 0; m < count_mid; ++m)
        sum += first.flat_entry(fa * count_mid + m) * second.flat_entry(m * count_b + fb);
      entries.push_back(std::move(sum));
    }
  return RelativeTensor(first.degree(), first.genus() + second.genus() + static_cast<int>(circles) - 1,
                        std::move(raised), std::move(entries));
}

bool is_boundary_symmetric(const RelativeTensor& t) {
  for (std::size_t f = 0; f < t.entry_count(); ++f) {
    const auto index = t.unflat(f);
    for (std::size_t i = 0; i < t.arity(); ++i)
      for (std::size_t j = i + 1; j < t.arity(); ++j) {
        if (t.raised(i) != t.raised(j)) continue;
        auto swapped = index;
        std::swap(swapped[i], swapped[j]);
        if (t.at(swapped) != t.flat_entry(f)) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force Hurwitz counts

std::uint64_t default_hurwitz_budget() {
  const char* env = std::getenv("GWTQFT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultHurwitzBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::DomainError, std::string("GWTQFT_BUDGET is not an integer: ") + env);
  return value;
}

long double hurwitz_work(const SurfaceSpec& spec) {
  spec.validate();
  long double work = std::pow(static_cast<long double>(factorial(spec.d).get_d()), 2.0L * spec.genus);
  // The last boundary element is solved for, not enumerated.
  for (std::size_t j = 0; j + 1 < spec.boundaries.size(); ++j)
    work *= static_cast<long double>(class_size(spec.boundaries[j]).get_d());
  return work;
}

namespace {

class TupleCounter {
 public:
  TupleCounter(const SymmetricGroup& group, int genus, std::vector<std::size_t> classes)
      : group_(group), genus_(genus), classes_(std::move(classes)) {}

  std::uint64_t pairs_from(std::size_t prefix, int pair) const {
    if (pair == genus_) return boundaries_from(prefix, 0);
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < group_.order(); ++a) total += with_first(prefix, pair, a);
    return total;
  }

  // Fixes a_{pair} = a and enumerates b_{pair} onwards.
  std::uint64_t with_first(std::size_t prefix, int pair, std::size_t a) const {
    std::uint64_t total = 0;
    const std::size_t pa = group_.multiply(prefix, a);
    const std::size_t a_inv = group_.inverse_of(a);
    for (std::size_t b = 0; b < group_.order(); ++b) {
      const std::size_t next =
          group_.multiply(group_.multiply(group_.multiply(pa, b), a_inv), group_.inverse_of(b));
      total += pairs_from(next, pair + 1);
    }
    return total;
  }

  std::uint64_t boundaries_from(std::size_t prefix, std::size_t j) const {
    if (classes_.empty()) return prefix == group_.identity() ? 1 : 0;
    // The last boundary element is forced to be prefix^{-1}.
    if (j + 1 == classes_.size()) return group_.class_of(group_.inverse_of(prefix)) == classes_[j] ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t c : group_.class_members(classes_[j])) total += boundaries_from(group_.multiply(prefix, c), j + 1);
    return total;
  }

  int genus() const noexcept { return genus_; }
  const std::vector<std::size_t>& classes() const noexcept { return classes_; }
  const SymmetricGroup& group() const noexcept { return group_; }

 private:
  const SymmetricGroup& group_;
  int genus_;
  std::vector<std::size_t> classes_;
};

}  // namespace

Rational hurwitz_brute_force(const SurfaceSpec& spec, const HurwitzOptions& options) {
  const long double work = hurwitz_work(spec);
  if (work > static_cast<long double>(options.budget))
    throw Error(ErrorCode::TooLarge, "enumeration of " + std::to_string(static_cast<unsigned long long>(work)) +
                                         " tuples exceeds the budget of " + std::to_string(options.budget) +
                                         "; use the character formula (model dw) instead");
  const SymmetricGroup group(spec.d);
  std::vector<std::size_t> classes;
  for (const auto& b : spec.boundaries) classes.push_back(partition_index(b));
  const TupleCounter counter(group, spec.genus, classes);

  // Split the outermost free variable across workers; the sum is exact and
  // independent of the split.
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::size_t> outer;
  if (spec.genus > 0) {
    for (std::size_t a = 0; a < group.order(); ++a) outer.push_back(a);
  } else if (classes.size() >= 2) {
    outer = group.class_members(classes.front());
  }
  auto unit_of_work = [&](std::size_t x) -> std::uint64_t {
    if (spec.genus > 0) return counter.with_first(group.identity(), 0, x);
    return counter.boundaries_from(x, 1);
  };

  std::uint64_t count = 0;
  if (outer.empty()) {
    count = counter.pairs_from(group.identity(), 0);
  } else if (workers == 1 || outer.size() < 2) {
    for (std::size_t x : outer) count += unit_of_work(x);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < outer.size(); i += workers) partial[w] += unit_of_work(outer[i]);
      });
    for (auto& th : threads) th.join();
    for (auto p : partial) count += p;
  }
  return Rational(Integer(static_cast<unsigned long>(count))) / Rational(factorial(spec.d));
}

}  // namespace gwtqft
