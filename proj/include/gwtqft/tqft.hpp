#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gwtqft/frobenius.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/series.hpp"

namespace gwtqft {

/// A connected genus-g surface with ordered boundary circles, each labelled
/// by a partition of the degree d.
struct SurfaceSpec {
  int d = 1;
  int genus = 0;
  std::vector<Partition> boundaries;

  /// Throws DomainError unless d >= 1, genus >= 0 and every label sums to d.
  void validate() const;
};

/// Source of relative invariants:
///  - d1:      the degree-1 closed form (sin(t/2)/(t/2))^{2g-2+r};
///  - gauge:   the t = 0 sector, the S_d gauge theory (any degree);
///  - algebra: evaluation in a supplied Frobenius algebra whose basis is
///             labelled by the partitions of d in canonical order.
class TqftModel {
 public:
  enum class Kind { D1, Gauge, Algebra };

  static TqftModel d1();
  static TqftModel gauge();
  /// Validates the axioms and labels once; throws InvalidAlgebra.
  static TqftModel from_algebra(FrobeniusAlgebra algebra);
  /// Parses "d1" or "dw".
  static TqftModel from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  std::string name() const;
  /// Degree the model is restricted to, or 0 when any degree is accepted.
  int degree() const noexcept { return degree_; }
  const FrobeniusAlgebra* algebra() const noexcept { return state_ ? &state_->algebra : nullptr; }

 private:
  struct AlgebraState {
    FrobeniusAlgebra algebra;
    AlgebraElement handle;
  };
  friend Series relative_tensor(const TqftModel&, const SurfaceSpec&, std::size_t);

  TqftModel(Kind kind, int degree, std::shared_ptr<const AlgebraState> state)
      : kind_(kind), degree_(degree), state_(std::move(state)) {}

  Kind kind_;
  int degree_;
  std::shared_ptr<const AlgebraState> state_;
};

/// Z_d(g)_{alpha_1 ... alpha_r} for the given model. For algebra models the
/// order is the algebra's own and the argument is ignored.
Series relative_tensor(const TqftModel& model, const SurfaceSpec& spec, std::size_t order = kDefaultOrder);

/// counit(H^g e_{alpha_1} ... e_{alpha_r}) with H = m(Delta(1)); checks the
/// algebra's axioms first (InvalidAlgebra).
Series evaluate_surface(const FrobeniusAlgebra& algebra, const SurfaceSpec& spec);

/// The gauge-theory value as an exact rational:
/// sum_R (d!/dim R)^{2g-2} prod_i chi_R(alpha_i) d! / (z(alpha_i) dim R).
Rational gauge_invariant(const SurfaceSpec& spec);

/// Every entry Z_d(g)_{i_1 ... i_r} over index tuples into
/// enumerate_partitions(d), with per-slot raised/lowered bookkeeping.
class RelativeTensor {
 public:
  RelativeTensor(int d, int genus, std::vector<bool> raised, std::vector<Series> entries);

  static RelativeTensor build(const TqftModel& model, int d, int genus, std::size_t arity,
                              std::size_t order = kDefaultOrder);

  int degree() const noexcept { return d_; }
  int genus() const noexcept { return genus_; }
  std::size_t arity() const noexcept { return raised_.size(); }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t order() const noexcept { return entries_.front().order(); }
  bool raised(std::size_t slot) const { return raised_.at(slot); }
  const std::vector<bool>& raised_slots() const noexcept { return raised_; }

  const Series& at(std::span<const std::size_t> index) const { return entries_[flat(index)]; }
  const Series& flat_entry(std::size_t i) const { return entries_[i]; }
  std::size_t entry_count() const noexcept { return entries_.size(); }
  /// The single entry of an arity-0 tensor.
  const Series& scalar() const;

  std::size_t flat(std::span<const std::size_t> index) const;
  std::vector<std::size_t> unflat(std::size_t flat_index) const;

  friend bool operator==(const RelativeTensor&, const RelativeTensor&) = default;

 private:
  int d_;
  int genus_;
  std::size_t dim_;
  std::vector<bool> raised_;
  std::vector<Series> entries_;
};

/// Multiplies slot `slot` by z(beta) and marks it raised (IndexError when out
/// of range or already raised).
RelativeTensor raise_index(const RelativeTensor& t, std::size_t slot);
RelativeTensor lower_index(const RelativeTensor& t, std::size_t slot);

/// Glues the last slot of `a` to the last slot of `b`, summing over gamma with
/// weight z(gamma) (weight 1 when exactly one of the slots is raised). The
/// result has genus g_a + g_b and slots a[0..] followed by b[0..].
RelativeTensor glue_separating(const RelativeTensor& a, const RelativeTensor& b);

/// Traces the last two slots with weight z(gamma); genus increases by one.
RelativeTensor glue_nonseparating(const RelativeTensor& t);

/// Contracts the last `circles` slots of `first` (raised) with the first
/// `circles` slots of `second` (lowered), without weights. The result is the
/// cobordism of genus g_1 + g_2 + circles - 1.
RelativeTensor compose(const RelativeTensor& first, const RelativeTensor& second, std::size_t circles);

/// True when every permutation of slots sharing a raised/lowered state leaves
/// the entries unchanged.
bool is_boundary_symmetric(const RelativeTensor& t);

inline constexpr std::uint64_t kDefaultHurwitzBudget = 10'000'000;

/// Reads GWTQFT_BUDGET, falling back to kDefaultHurwitzBudget.
std::uint64_t default_hurwitz_budget();

/// Number of tuples actually enumerated, |S_d|^{2g} prod_{j<r} |c(alpha_j)|:
/// the last boundary element is determined by the others.
long double hurwitz_work(const SurfaceSpec& spec);

struct HurwitzOptions {
  std::uint64_t budget = kDefaultHurwitzBudget;
  unsigned workers = 1;
};

/// (1/d!) #{(a_1, b_1, ..., a_g, b_g, c_1, ..., c_r) : c_j in c(alpha_j),
/// prod [a_i, b_i] prod c_j = 1}. Throws TooLarge above the budget.
Rational hurwitz_brute_force(const SurfaceSpec& spec, const HurwitzOptions& options = {});

}  // namespace gwtqft
