// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures. Everything is exact: series are compared coefficient by
// coefficient over Q.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/frobenius.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/series.hpp"
#include "gwtqft/tqft.hpp"
#include "gwtqft/transforms.hpp"

using namespace gwtqft;

namespace {

constexpr std::size_t N = 16;

struct Outcome {
  bool passed = true;
  std::string note;

  void fail(const std::string& why) {
    if (passed) note = why;
    passed = false;
  }
};

Series from_strings(const std::vector<std::string>& c) {
  std::vector<Rational> q;
  for (const auto& s : c) q.push_back(parse_rational(s));
  return Series(std::move(q));
}

SurfaceSpec surface(int d, int g, std::vector<Partition> b = {}) { return {d, g, std::move(b)}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome annulus() {
  Outcome o;
  for (int d = 1; d <= 5; ++d) {
    std::vector<TqftModel> models = {TqftModel::gauge(), TqftModel::from_algebra(class_algebra(d, N))};
    if (d == 1) {
      models.push_back(TqftModel::d1());
      models.push_back(TqftModel::from_algebra(d1_algebra(N)));
    }
    for (const auto& m : models)
      for (const auto& a : enumerate_partitions(d))
        for (const auto& b : enumerate_partitions(d)) {
          const Rational want = a == b ? Rational(1) / Rational(centralizer_order(a)) : Rational(0);
          if (relative_tensor(m, surface(d, 0, {a, b}), N) != Series::constant(want, N))
            o.fail(m.name() + " d=" + std::to_string(d) + " " + a.label() + b.label());
        }
  }
  o.note = o.passed ? "d <= 5, models dw, class algebra, d1, d1 algebra" : o.note;
  return o;
}

Outcome degree_one() {
  Outcome o;
  const TqftModel m = TqftModel::d1();
  auto tensor = [&](int g, std::size_t r) { return RelativeTensor::build(m, 1, g, r, N); };
  for (int g = 0; g <= 4; ++g)
    for (std::size_t r = 0; r <= 3; ++r) {
      const Series s = relative_tensor(m, surface(1, g, std::vector<Partition>(r, Partition({1}))), N);
      if (s != int_pow(sine_quotient(N), 2 * g - 2 + static_cast<long>(r))) o.fail("closed form g=" + std::to_string(g));
      // Cut along a separating circle in every way.
      for (int g1 = 0; g1 <= g; ++g1)
        for (std::size_t r1 = 0; r1 <= r; ++r1)
          if (glue_separating(tensor(g1, r1 + 1), tensor(g - g1, r - r1 + 1)) != tensor(g, r))
            o.fail("separating g=" + std::to_string(g) + " r=" + std::to_string(r));
      // Cut along a non-separating circle.
      if (g >= 1 && glue_nonseparating(tensor(g - 1, r + 2)) != tensor(g, r))
        o.fail("non-separating g=" + std::to_string(g) + " r=" + std::to_string(r));
    }
  const Series displayed = from_strings({"1", "0", "1/12", "0", "1/240", "0", "1/6048", "0", "1/172800", "0",
                                         "1/5322240", "0", "691/118879488000", "0", "1/5748019200", "0"});
  if (relative_tensor(m, surface(1, 0), N) != displayed) o.fail("Z_1(0) expansion");
  return o;
}

Outcome caps() {
  Outcome o;
  for (int d = 1; d <= 5; ++d) {
    Series sum(N);
    for (const auto& a : enumerate_partitions(d)) {
      const Series c = cap(d, a, N);
      sum += c * c * Rational(centralizer_order(a));
    }
    if (sum != fp_genus0(d, N)) o.fail("d=" + std::to_string(d));
  }
  return o;
}

void multisets(int d, std::size_t r, std::size_t start, std::vector<Partition>& current,
               const std::function<void(const std::vector<Partition>&)>& visit) {
  if (current.size() == r) return visit(current);
  const auto& ps = enumerate_partitions(d);
  for (std::size_t i = start; i < ps.size(); ++i) {
    current.push_back(ps[i]);
    multisets(d, r, i, current, visit);
    current.pop_back();
  }
}

Outcome t_zero_sector() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t compared = 0, over_budget = 0;
  auto compare = [&](int d, int g, std::size_t max_r) {
    for (std::size_t r = 0; r <= max_r; ++r) {
      std::vector<Partition> current;
      multisets(d, r, 0, current, [&](const std::vector<Partition>& b) {
        const SurfaceSpec spec = surface(d, g, b);
        if (hurwitz_work(spec) > static_cast<long double>(kDefaultHurwitzBudget)) {
          ++over_budget;
          return;
        }
        ++compared;
        if (gauge_invariant(spec) != hurwitz_brute_force(spec, {kDefaultHurwitzBudget, 4}))
          o.fail("d=" + std::to_string(d) + " g=" + std::to_string(g));
      });
    }
  };
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g) compare(d, g, 2);
  for (int d = 1; d <= 3; ++d) compare(d, 3, 0);
  if (hurwitz_brute_force(surface(2, 2)) != 8) o.fail("Z0_2(2)");
  for (int d = 1; d <= 4; ++d)
    if (hurwitz_brute_force(surface(d, 1)) != static_cast<long>(enumerate_partitions(d).size()))
      o.fail("Z0_d(1), d=" + std::to_string(d));
  const double elapsed = seconds_since(start);
  if (elapsed > 60) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.passed) {
    std::ostringstream note;
    note << compared << " surfaces compared, " << over_budget << " over budget, " << elapsed << " s";
    o.note = note.str();
  }
  return o;
}

Outcome structure() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) {
    const FrobeniusAlgebra a = class_algebra(d, N);
    std::vector<Series> got = eigenvalues(a, central_idempotents(d, N));
    std::vector<Rational> want;
    for (const auto& p : enumerate_partitions(d)) {
      const Rational r = Rational(factorial(d)) / Rational(hook_dimension(p));
      want.push_back(r * r);
    }
    std::vector<Rational> constants;
    for (const auto& s : got) {
      if (!s.is_constant()) o.fail("non-constant eigenvalue, d=" + std::to_string(d));
      constants.push_back(s[0]);
    }
    std::sort(constants.begin(), constants.end());
    std::sort(want.begin(), want.end());
    if (constants != want) o.fail("eigenvalues, d=" + std::to_string(d));
    for (int g = 0; g <= 5; ++g) {
      Rational sum = 0;
      for (const auto& p : enumerate_partitions(d)) {
        Rational term = 1;
        const Rational r = Rational(factorial(d)) / Rational(hook_dimension(p));
        for (int k = 0; k < std::abs(2 * g - 2); ++k) term *= r;
        sum += g == 0 ? 1 / term : term;
      }
      if (closed_value(got, g) != Series::constant(sum, N))
        o.fail("closed value d=" + std::to_string(d) + " g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome lifting() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  auto small = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (int fixture = 0; fixture < 100; ++fixture) {
    const std::size_t n = 1 + static_cast<std::size_t>(fixture) % 5;  // rank up to p(4) = 5
    std::vector<Series> lambdas;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> c(N);
      do c[0] = small(); while (c[0] == 0);
      c[1] = small();
      c[3] = small();
      lambdas.emplace_back(std::move(c));
    }
    // New basis: rows of M = (identity + nilpotent strictly-upper integer part) + t K.
    SeriesMatrix m(n, N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> c(N);
        c[0] = i == j ? Rational(1) : (i < j ? Rational(num(rng)) : Rational(0));
        c[1] = small();
        c[2] = small();
        m(i, j) = Series(std::move(c));
      }
    const FrobeniusAlgebra a = conjugate_basis(semisimple_algebra(lambdas), m);
    std::vector<AlgebraElement> seeds;
    for (std::size_t i = 0; i < n; ++i)
      seeds.push_back(to_conjugated_coordinates(m, AlgebraElement::basis_vector(i, n, N)).constant_part());
    const LiftResult lifted = lift_idempotents(a, seeds);
    for (std::size_t k = 0; k < lifted.residual_valuations.size(); ++k)
      if (lifted.residual_valuations[k] < std::min<std::size_t>(std::size_t{1} << k, N))
        o.fail("fixture " + std::to_string(fixture) + ": residual after " + std::to_string(k) + " steps");
    std::vector<Series> got = eigenvalues_of_lifted(a, lifted);
    auto key = [](const Series& s) {
      std::string k;
      for (const auto& c : s.coeffs()) k += to_string(c) + ",";
      return k;
    };
    std::vector<std::string> g, w;
    for (const auto& s : got) g.push_back(key(s));
    for (const auto& s : lambdas) w.push_back(key(s));
    std::sort(g.begin(), g.end());
    std::sort(w.begin(), w.end());
    if (g != w) o.fail("fixture " + std::to_string(fixture) + ": eigenvalue multiset");
  }
  const double elapsed = seconds_since(start);
  if (elapsed > 10) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.passed) o.note = "100 fixtures, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome degree_two() {
  Outcome o;
  if (d2_closed(1, N) != Series::constant(2, N)) o.fail("Z_2(1)");
  if (d2_closed(0, N) != fp_genus0(2, N)) o.fail("Z_2(0)");
  const auto [plus, minus] = d2_eigenvalues(N);
  if (plus[0] != 4 || minus[0] != 4) o.fail("constant terms");
  for (const Series* l : {&plus, &minus}) {
    const Series r = sqrt(*l);
    if (r * r != *l) o.fail("square root");
  }
  return o;
}

Outcome connected_genus_one() {
  Outcome o;
  const std::size_t dmax = 6;
  std::vector<Series> rows = {Series::constant(1, N)};
  for (std::size_t d = 1; d <= dmax; ++d) {
    const Series z = relative_tensor(TqftModel::gauge(), surface(static_cast<int>(d), 1), N);
    if (z != Series::constant(static_cast<long>(enumerate_partitions(static_cast<int>(d)).size()), N))
      o.fail("Z_d(1) != p(d)");
    rows.push_back(z);
  }
  const BivariateSeries n = connected_from_disconnected(BivariateSeries(rows));
  for (std::size_t d = 1; d <= dmax; ++d) {
    Rational want = 0;
    for (std::size_t k = 1; k <= d; ++k)
      if (d % k == 0) want += Rational(1, static_cast<long>(k));
    if (n[d] != Series::constant(want, N)) o.fail("N_" + std::to_string(d) + "(1)");
  }
  return o;
}

Outcome concatenation() {
  Outcome o;
  const TqftModel m = TqftModel::gauge();
  auto raise_last = [](RelativeTensor t, std::size_t count) {
    for (std::size_t i = t.arity() - count; i < t.arity(); ++i) t = raise_index(t, i);
    return t;
  };
  for (int d = 1; d <= 3; ++d)
    for (std::size_t s = 1; s <= 2; ++s)
      for (int g1 = 0; g1 <= 2; ++g1)
        for (int g2 = 0; g2 <= 2; ++g2)
          for (std::size_t r = 0; r <= 2; ++r)
            for (std::size_t t = 0; t <= 2; ++t) {
              const auto w1 = raise_last(RelativeTensor::build(m, d, g1, r + s, N), s);
              const auto w2 = raise_last(RelativeTensor::build(m, d, g2, s + t, N), t);
              const int genus = g1 + g2 + static_cast<int>(s) - 1;
              const auto direct = raise_last(RelativeTensor::build(m, d, genus, r + t, N), t);
              if (compose(w1, w2, s) != direct)
                o.fail("d=" + std::to_string(d) + " s=" + std::to_string(s) + " g1=" + std::to_string(g1) +
                       " g2=" + std::to_string(g2));
            }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"annulus identity", annulus},
      {"degree-one theory and gluing", degree_one},
      {"caps glue to the genus-0 series", caps},
      {"t = 0 sector against enumeration", t_zero_sector},
      {"structure formula", structure},
      {"idempotent lifting", lifting},
      {"degree-two theory", degree_two},
      {"connected genus-one invariants", connected_genus_one},
      {"concatenation of cobordisms", concatenation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS " : "FAIL ") << i + 1 << ". " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << '\n';
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
  return failures;
}
