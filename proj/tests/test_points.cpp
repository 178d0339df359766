#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "vilenkin/builtin.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/points.hpp"

using namespace vilenkin;

namespace {

GroupSpec walsh(std::size_t levels) {
  const int p[] = {2};
  return GroupSpec::make(p, levels);
}

GridFunction character_function(const GroupSpec& g, Index k) {
  return make_function("character:" + std::to_string(k), g).f;
}

// Cell enumeration of W_n straight from its definition.
double w_oracle(const GridFunction& f, Index x, std::size_t n) {
  const GroupSpec& g = f.spec();
  const double cell = 1.0 / static_cast<double>(g.size());
  double total = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    for (int r = 1; r < g.radix(s); ++r) {
      const Index shift = static_cast<Index>(r) * g.place(s);
      const Index centre = oracle::sub(g, x, shift);
      for (Index t = 0; t < g.size(); ++t) {
        const auto d = oracle::digits(g, oracle::sub(g, t, centre));
        bool inside = true;
        for (std::size_t k = 0; k < n; ++k) inside = inside && d[k] == 0;
        if (!inside) continue;
        total += static_cast<double>(g.place(s)) * std::abs(f[t] - f[x]) * cell;
      }
    }
  }
  return total;
}

}  // namespace

TEST(LebesgueModulus, Examples) {
  const auto g = walsh(3);
  const auto indicator = make_function("indicator:1,0", g);
  EXPECT_DOUBLE_EQ(lebesgue_modulus(indicator.f, Element::generator(g, 0), 0), 0.5);
  const GridFunction one(g, std::vector<Complex>(g.size(), 1.0));
  for (std::size_t n = 0; n <= g.levels(); ++n) {
    EXPECT_EQ(lebesgue_modulus(one, Element::zero(g), n), 0.0);
    EXPECT_EQ(w_modulus(one, Element::zero(g), n), 0.0);
  }
  EXPECT_THROW(lebesgue_modulus(one, Element::zero(g), 4), RangeError);
  EXPECT_THROW(w_modulus(one, Element::zero(g), 4), RangeError);
}

TEST(LebesgueModulus, StepFunctionsVanishAtTheirRank) {
  const int p[] = {2, 3, 2, 3};
  const auto g = GroupSpec::make(p, 4);
  const auto step = make_function("random:3,2", g);
  for (Index x = 0; x < g.size(); ++x) {
    const auto e = Element::from_index(g, x);
    for (std::size_t n = step.rank; n <= g.levels(); ++n) {
      EXPECT_EQ(lebesgue_modulus(step.f, e, n), 0.0);
    }
    EXPECT_GE(lebesgue_modulus(step.f, e, 0), 0.0);
  }
}

TEST(WModulus, CharacterOneAtZero) {
  const auto g = walsh(6);
  const GridFunction f = character_function(g, 1);
  const auto zero = Element::zero(g);
  EXPECT_DOUBLE_EQ(w_modulus(f, zero, 1), 1.0);
  EXPECT_DOUBLE_EQ(w_modulus(f, zero, 2), 0.5);
  for (std::size_t n = 1; n <= g.levels(); ++n) {
    EXPECT_NEAR(w_modulus(f, zero, n), 2.0 / static_cast<double>(g.place(n)), 1e-15);
  }
}

TEST(WModulus, MatchesCellEnumeration) {
  const int p[] = {3, 2, 3};
  const auto g = GroupSpec::make(p, 3);
  const auto step = make_function("random:8,2", g);
  for (Index x = 0; x < g.size(); x += 5) {
    for (std::size_t n = 0; n <= g.levels(); ++n) {
      EXPECT_NEAR(w_modulus(step.f, Element::from_index(g, x), n), w_oracle(step.f, x, n),
                  1e-12);
    }
  }
}

TEST(Convergence, FejerIndicatorAtZero) {
  // S_1 f = 1/2 and S_k f = f for k >= 2, so |sigma_n f(0) - 1| = 1/(2n).
  const auto g = walsh(3);
  const auto f = make_function("indicator:1,0", g).f;
  const auto mean = MeanSpec::parse("constant", MeanForm::norlund);
  const auto ns = index_range(g, 2, 8, ConvergenceMode::all);
  const auto rows = convergence_profile(f, Element::zero(g), mean, ns, ConvergenceMode::all);
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) {
    oracle::Values sigma(g.size());
    for (Index k = 1; k <= row.n; ++k) {
      const auto s = oracle::partial_sum(g, oracle::values(f), k);
      sigma[0] += s[0] / static_cast<double>(row.n);
    }
    EXPECT_NEAR(row.err, std::abs(sigma[0] - 1.0), 1e-12);
    EXPECT_NEAR(row.err, 1.0 / (2.0 * static_cast<double>(row.n)), 1e-12);
    EXPECT_EQ(row.mean_id, "N:constant");
  }
}

TEST(Convergence, ConstantIsExact) {
  const auto g = walsh(4);
  const GridFunction one(g, std::vector<Complex>(g.size(), 1.0));
  const auto mean = MeanSpec::parse("nlog");
  const auto ns = index_range(g, 2, g.size(), ConvergenceMode::all);
  for (const auto& row : convergence_profile(one, 1.0, mean, ns, ConvergenceMode::all)) {
    EXPECT_LE(row.err, 1e-14);
  }
}

TEST(Convergence, BlockModePartialSums) {
  const auto g = walsh(6);
  const auto step = make_function("random:2,2", g);
  const auto ns = index_range(g, 1, g.size(), ConvergenceMode::block);
  ASSERT_EQ(ns, (std::vector<Index>{1, 2, 4, 8, 16, 32, 64}));
  const auto w = WeightSequence::parse("logpow:0.5");
  const MeanSpec mean{w, MeanForm::t};
  const auto block = index_range(g, 2, g.size(), ConvergenceMode::block);
  for (Index x = 0; x < g.size(); ++x) {
    const auto e = Element::from_index(g, x);
    const auto rows = convergence_profile(step.f, e, mean, block, ConvergenceMode::block);
    EXPECT_LE(rows.back().err, rows[1].err + 1e-12);
    double c = 0.0;
    for (Index k = 0; k < g.place(step.rank); ++k) {
      c = std::max(c, norm(partial_sum(step.f, k) - step.f, INFINITY));
    }
    for (const auto& row : rows) {
      if (row.n < g.place(step.rank)) continue;
      EXPECT_LE(row.err, w.Q(g.place(step.rank)) / w.Q(row.n) * c + 1e-10);
    }
  }
  const Index bad[] = {3};
  EXPECT_THROW(convergence_profile(step.f, 1.0, mean, bad, ConvergenceMode::block), RangeError);
}

TEST(Convergence, CsvFormat) {
  const std::vector<ConvergenceRow> rows = {{2, 0.25, "T:riesz", ConvergenceMode::all},
                                            {4, -0.0, "T:riesz", ConvergenceMode::block}};
  std::ostringstream out;
  write_csv(out, rows);
  EXPECT_EQ(out.str(), "n,err,mean_id,mode\n2,0.25,T:riesz,all\n4,0,T:riesz,block\n");
}

TEST(Maximal, ConstantAndCharacter) {
  const auto g = walsh(4);
  const GridFunction one(g, std::vector<Complex>(g.size(), 1.0));
  const auto fejer = MeanSpec::parse("constant", MeanForm::norlund);
  const auto m = maximal_profile(one, fejer, g.size());
  for (const auto v : m.sup.values()) EXPECT_NEAR(v.real(), 1.0, 1e-12);
  EXPECT_NEAR(m.weak_statistic, 1.0, 1e-12);

  const auto psi1 = maximal_profile(character_function(g, 1), fejer, g.size());
  for (Index x = 0; x < g.size(); ++x) {
    double brute = 0.0;
    for (Index n = 1; n <= g.size(); ++n) {
      brute = std::max(brute, std::abs(fejer_mean(character_function(g, 1), n)[x]));
    }
    EXPECT_NEAR(psi1.sup[x].real(), brute, 1e-12);
    EXPECT_LE(psi1.sup[x].real(), 1.0 + 1e-12);
  }
}
