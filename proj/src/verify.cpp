#include "gwtqft/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/symchar.hpp"
#include "gwtqft/tqft.hpp"
#include "gwtqft/transforms.hpp"

namespace gwtqft {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"annulus", "d1",      "caps",      "hurwitz",      "structure",
                                                 "lifting", "d2",      "connected", "concatenation"};
  return names;
}

bool same_multiset(std::vector<Series> a, std::vector<Series> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

LiftingFixture random_lifting_fixture(std::mt19937_64& rng, std::size_t rank, std::size_t order) {
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> positive(1, 6);
  auto random_rational = [&] { return Rational(small(rng), positive(rng)); };

  std::vector<Series> lambdas;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Rational> c(order, Rational(0));
    c[0] = Rational(positive(rng) * (small(rng) < 0 ? -1 : 1), positive(rng));
    for (std::size_t k = 1; k < std::min<std::size_t>(order, 4); ++k) c[k] = random_rational();
    lambdas.emplace_back(std::move(c));
  }
  const FrobeniusAlgebra base = semisimple_algebra(lambdas);

  SeriesMatrix change = SeriesMatrix::identity(rank, order);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<Rational> c(order, Rational(0));
      if (i > j) c[0] = Rational(small(rng));
      else if (i == j) c[0] = 1;
      if (order > 1) c[1] = random_rational();
      if (order > 2) c[2] = random_rational();
      change(i, j) = Series(std::move(c));
    }
  FrobeniusAlgebra algebra = conjugate_basis(base, change);

  // The old idempotents f_i, written in the new basis and reduced mod t.
  std::vector<AlgebraElement> seeds;
  for (std::size_t i = 0; i < rank; ++i)
    seeds.push_back(
        to_conjugated_coordinates(change, AlgebraElement::basis_vector(i, rank, order)).constant_part());
  return {std::move(algebra), std::move(seeds), std::move(lambdas)};
}

namespace {

class Suite {
 public:
  Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

  void check(const std::string& what, const std::function<bool(std::string&)>& body) {
    CheckResult r{name_, what, false, ""};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string name_;
  std::vector<CheckResult>& out_;
};

SurfaceSpec surface(int d, int g, std::vector<Partition> b = {}) { return SurfaceSpec{d, g, std::move(b)}; }

void annulus(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("annulus", out);
  for (int d = 1; d <= o.max_d; ++d) {
    const auto& parts = enumerate_partitions(d);
    std::vector<TqftModel> models = {TqftModel::gauge(), TqftModel::from_algebra(class_algebra(d, o.order))};
    if (d == 1) models.push_back(TqftModel::d1());
    for (const auto& model : models)
      s.check("d=" + std::to_string(d) + " model " + model.name(), [&](std::string& detail) {
        for (const auto& a : parts)
          for (const auto& b : parts) {
            const Series got = relative_tensor(model, surface(d, 0, {a, b}), o.order);
            const Rational want = a == b ? Rational(1) / Rational(centralizer_order(a)) : Rational(0);
            if (got != Series::constant(want, o.order)) {
              detail = "Z(0)_{" + a.label() + b.label() + "} = " + to_string(got);
              return false;
            }
          }
        return true;
      });
  }
}

void d1_theory(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("d1", out);
  const TqftModel model = TqftModel::d1();
  s.check("separating gluing, g1+g2 <= 4, r <= 3", [&](std::string& detail) {
    for (int g1 = 0; g1 <= 4; ++g1)
      for (int g2 = 0; g1 + g2 <= 4; ++g2)
        for (std::size_t r1 = 0; r1 <= 3; ++r1)
          for (std::size_t r2 = 0; r1 + r2 <= 3; ++r2) {
            const auto glued = glue_separating(RelativeTensor::build(model, 1, g1, r1 + 1, o.order),
                                               RelativeTensor::build(model, 1, g2, r2 + 1, o.order));
            if (glued != RelativeTensor::build(model, 1, g1 + g2, r1 + r2, o.order)) {
              detail = "g1=" + std::to_string(g1) + " g2=" + std::to_string(g2);
              return false;
            }
          }
    return true;
  });
  s.check("non-separating gluing, g <= 4, r <= 3", [&](std::string& detail) {
    for (int g = 0; g + 1 <= 4; ++g)
      for (std::size_t r = 0; r <= 3; ++r)
        if (glue_nonseparating(RelativeTensor::build(model, 1, g, r + 2, o.order)) !=
            RelativeTensor::build(model, 1, g + 1, r, o.order)) {
          detail = "g=" + std::to_string(g) + " r=" + std::to_string(r);
          return false;
        }
    return true;
  });
  s.check("Z_1(0) = (sin(t/2)/(t/2))^-2 = genus-0 localization sum", [&](std::string&) {
    const Series z = relative_tensor(model, surface(1, 0), o.order);
    return z == int_pow(sine_quotient(o.order), -2) && z == fp_genus0(1, o.order);
  });
}

void caps(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("caps", out);
  for (int d = 1; d <= o.max_d; ++d)
    s.check("sum z(a) cap(a)^2 = genus-0 sum, d=" + std::to_string(d), [&](std::string& detail) {
      Series total(o.order);
      for (const auto& a : enumerate_partitions(d)) {
        const Series c = cap(d, a, o.order);
        total += (c * c) * Rational(centralizer_order(a));
      }
      const Series want = fp_genus0(d, o.order);
      detail = to_string(total);
      return total == want;
    });
}

std::vector<std::vector<Partition>> boundary_multisets(int d, int r) {
  const auto& parts = enumerate_partitions(d);
  std::vector<std::vector<Partition>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(idx.size()) == r) {
      std::vector<Partition> b;
      for (auto i : idx) b.push_back(parts[i]);
      out.push_back(std::move(b));
      return;
    }
    for (std::size_t i = start; i < parts.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

void hurwitz(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("hurwitz", out);
  const HurwitzOptions ho{o.budget, 1};
  auto compare = [&](int d, int g, int max_r, std::string& detail) {
    std::size_t checked = 0, skipped = 0;
    for (int r = 0; r <= max_r; ++r)
      for (const auto& b : boundary_multisets(d, r)) {
        const SurfaceSpec spec = surface(d, g, b);
        if (hurwitz_work(spec) > static_cast<long double>(o.budget)) {
          ++skipped;
          continue;
        }
        if (gauge_invariant(spec) != hurwitz_brute_force(spec, ho)) {
          detail = "mismatch at d=" + std::to_string(d) + " g=" + std::to_string(g);
          return false;
        }
        ++checked;
      }
    detail = std::to_string(checked) + " checked, " + std::to_string(skipped) + " over budget";
    return true;
  };
  for (int d = 1; d <= std::min(o.max_d, 4); ++d)
    for (int g = 0; g <= 2; ++g)
      s.check("character formula = enumeration, d=" + std::to_string(d) + " g=" + std::to_string(g),
              [&](std::string& detail) { return compare(d, g, 2, detail); });
  for (int d = 1; d <= std::min(o.max_d, 3); ++d)
    s.check("character formula = enumeration, d=" + std::to_string(d) + " g=3",
            [&](std::string& detail) { return compare(d, 3, 0, detail); });
  if (o.max_d >= 2)
    s.check("Z0_2(2) = 8", [&](std::string&) { return hurwitz_brute_force(surface(2, 2), ho) == 8; });
  for (int d = 1; d <= std::min(o.max_d, 4); ++d)
    s.check("Z0_d(1) = p(d), d=" + std::to_string(d), [&](std::string&) {
      return hurwitz_brute_force(surface(d, 1), ho) == static_cast<long>(enumerate_partitions(d).size());
    });
}

void structure(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("structure", out);
  for (int d = 1; d <= std::min(o.max_d, 6); ++d)
    s.check("eigenvalues and closed values, d=" + std::to_string(d), [&](std::string& detail) {
      const FrobeniusAlgebra a = class_algebra(d, o.order);
      const auto lambdas = eigenvalues(a, central_idempotents(d, o.order));
      std::vector<Series> want;
      for (const auto& p : enumerate_partitions(d)) {
        const Rational ratio = Rational(factorial(d)) / Rational(hook_dimension(p));
        want.push_back(Series::constant(ratio * ratio, o.order));
      }
      if (!same_multiset(lambdas, want)) {
        detail = "eigenvalue multiset differs";
        return false;
      }
      for (int g = 0; g <= 5; ++g) {
        Rational expected = 0;
        for (const auto& p : enumerate_partitions(d)) {
          const Rational ratio = Rational(factorial(d)) / Rational(hook_dimension(p));
          Rational term = 1;
          for (int k = 0; k < std::abs(2 * g - 2); ++k) term *= ratio;
          expected += 2 * g - 2 < 0 ? Rational(1) / term : term;
        }
        if (closed_value(lambdas, g) != Series::constant(expected, o.order)) {
          detail = "closed value differs at g=" + std::to_string(g);
          return false;
        }
      }
      return true;
    });
}

void lifting(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("lifting", out);
  s.check(std::to_string(o.lifting_fixtures) + " randomized fixtures recover their eigenvalues",
          [&](std::string& detail) {
            std::mt19937_64 rng(20240601);
            for (std::size_t i = 0; i < o.lifting_fixtures; ++i) {
              const std::size_t rank = 1 + i % 5;
              const LiftingFixture f = random_lifting_fixture(rng, rank, o.order);
              const LiftResult lifted = lift_idempotents(f.algebra, f.seeds);
              for (std::size_t k = 0; k < lifted.residual_valuations.size(); ++k) {
                const std::size_t bound = std::min<std::size_t>(std::size_t{1} << std::min<std::size_t>(k, 30), o.order);
                if (lifted.residual_valuations[k] < bound) {
                  detail = "fixture " + std::to_string(i) + ": residual below 2^k at k=" + std::to_string(k);
                  return false;
                }
              }
              if (!same_multiset(eigenvalues_of_lifted(f.algebra, lifted), f.eigenvalues)) {
                detail = "fixture " + std::to_string(i) + ": eigenvalues differ";
                return false;
              }
            }
            return true;
          });
}

void d2_theory(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("d2", out);
  s.check("Z_2(1) = 2", [&](std::string&) { return d2_closed(1, o.order) == Series::constant(2, o.order); });
  s.check("Z_2(0) = genus-0 localization sum", [&](std::string&) { return d2_closed(0, o.order) == fp_genus0(2, o.order); });
  s.check("eigenvalue constant terms are 4 and square roots exist", [&](std::string&) {
    const auto [plus, minus] = d2_eigenvalues(o.order);
    const Series rp = sqrt(plus), rm = sqrt(minus);
    return plus[0] == 4 && minus[0] == 4 && rp * rp == plus && rm * rm == minus;
  });
}

void connected(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("connected", out);
  const int top = std::max(o.max_d, 6);
  s.check("N_d(1) = sum_{k|d} 1/k with no positive t-powers, d <= " + std::to_string(top), [&](std::string& detail) {
    std::vector<Series> rows(static_cast<std::size_t>(top) + 1, Series(o.order));
    rows[0] = Series::constant(1, o.order);
    for (int d = 1; d <= top; ++d)
      rows[static_cast<std::size_t>(d)] = relative_tensor(TqftModel::gauge(), surface(d, 1), o.order);
    const BivariateSeries n = connected_from_disconnected(BivariateSeries(rows));
    for (int d = 1; d <= top; ++d) {
      Rational want = 0;
      for (int k = 1; k <= d; ++k)
        if (d % k == 0) want += Rational(1, k);
      if (n[static_cast<std::size_t>(d)] != Series::constant(want, o.order)) {
        detail = "d=" + std::to_string(d) + ": " + to_string(n[static_cast<std::size_t>(d)]);
        return false;
      }
    }
    return true;
  });
}

void concatenation(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Suite s("concatenation", out);
  const TqftModel model = TqftModel::gauge();
  auto raised_tail = [](RelativeTensor t, std::size_t count) {
    for (std::size_t i = t.arity() - count; i < t.arity(); ++i) t = raise_index(t, i);
    return t;
  };
  for (int d = 1; d <= std::min(o.max_d, 3); ++d)
    s.check("W(g1) then W(g2) = W(g1+g2+s-1), d=" + std::to_string(d), [&](std::string& detail) {
      for (std::size_t circles = 1; circles <= 2; ++circles)
        for (int g1 = 0; g1 <= 1; ++g1)
          for (int g2 = 0; g2 <= 1; ++g2)
            for (std::size_t in = 0; in <= 1; ++in)
              for (std::size_t outs = 0; outs <= 1; ++outs) {
                const auto first = raised_tail(RelativeTensor::build(model, d, g1, in + circles, o.order), circles);
                const auto second = raised_tail(RelativeTensor::build(model, d, g2, circles + outs, o.order), outs);
                const auto direct = raised_tail(
                    RelativeTensor::build(model, d, g1 + g2 + static_cast<int>(circles) - 1, in + outs, o.order), outs);
                if (compose(first, second, circles) != direct) {
                  std::ostringstream m;
                  m << "s=" << circles << " g1=" << g1 << " g2=" << g2 << " r=" << in << " t=" << outs;
                  detail = m.str();
                  return false;
                }
              }
      return true;
    });
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  static const std::map<std::string, void (*)(const VerifyOptions&, std::vector<CheckResult>&)> table = {
      {"annulus", annulus},     {"d1", d1_theory}, {"caps", caps},           {"hurwitz", hurwitz},
      {"structure", structure}, {"lifting", lifting}, {"d2", d2_theory}, {"connected", connected},
      {"concatenation", concatenation}};
  if (options.max_d < 1) throw Error(ErrorCode::DomainError, "max-d must be >= 1");
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) table.at(name)(options, out);
    return out;
  }
  auto it = table.find(suite);
  if (it == table.end()) throw Error(ErrorCode::DomainError, "unknown suite '" + suite + "'");
  it->second(options, out);
  return out;
}

}  // namespace gwtqft
