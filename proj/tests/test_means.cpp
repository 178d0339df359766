#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "vilenkin/builtin.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/means.hpp"

using namespace vilenkin;

namespace {

GroupSpec mixed() {
  const int p[] = {2, 3, 2, 3};
  return GroupSpec::make(p, 4);
}

GroupSpec walsh(std::size_t levels) {
  const int p[] = {2};
  return GroupSpec::make(p, levels);
}

const char* kFamilies[] = {"constant", "cesaro:0.5", "icesaro:0.5", "power:0.5",
                           "riesz",    "nlog",       "logpow:0.5"};

}  // namespace

TEST(Means, RoutesAgree) {
  const auto g = mixed();
  const GridFunction f = random_function(g, 7);
  for (const char* name : kFamilies) {
    for (const auto form : {MeanForm::t, MeanForm::norlund}) {
      const auto mean = MeanSpec::parse(name, form);
      for (Index n = mean.first_valid(); n <= g.size(); ++n) {
        const GridFunction direct = mean.apply(f, n, MeanMethod::direct);
        const GridFunction abel = mean.apply(f, n, MeanMethod::abel);
        const GridFunction conv = mean.apply(f, n, MeanMethod::convolution);
        EXPECT_LE(max_abs_diff(direct.values(), abel.values()), 1e-10)
            << mean.id() << " n=" << n;
        EXPECT_LE(max_abs_diff(direct.values(), conv.values()), 1e-10)
            << mean.id() << " n=" << n;
      }
    }
  }
}

TEST(Means, DirectMatchesOracle) {
  const auto g = mixed();
  const GridFunction f = random_function(g, 3);
  const auto values = oracle::values(f);
  const auto w = WeightSequence::parse("riesz");
  for (Index n : {2u, 7u, 20u, 36u}) {
    oracle::Values t(g.size()), nt(g.size());
    for (Index k = 1; k <= n; ++k) {
      const auto s = oracle::partial_sum(g, values, k);
      for (Index x = 0; x < g.size(); ++x) {
        if (k < n) t[x] += w.q(k) * s[x] / w.Q(n);
        nt[x] += w.q(n - k) * s[x] / w.Q(n);
      }
    }
    EXPECT_LE(oracle::max_abs_diff(t, t_mean(f, w, n).values()), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(nt, norlund_mean(f, w, n).values()), 1e-12);
  }
}

TEST(Means, ReproduceConstants) {
  const auto g = mixed();
  const GridFunction one(g, std::vector<Complex>(g.size(), 1.0));
  for (const char* name : kFamilies) {
    const auto w = WeightSequence::parse(name);
    for (Index n = w.first_valid(); n <= g.size(); ++n) {
      for (const auto method : {MeanMethod::direct, MeanMethod::abel}) {
        const double scale = (w.Q(n) - w.q(0)) / w.Q(n);
        const GridFunction t = t_mean(one, w, n, method);
        for (const auto v : t.values()) EXPECT_NEAR(std::abs(v - scale), 0.0, 1e-12);
        const GridFunction nt = norlund_mean(one, w, n, method);
        for (const auto v : nt.values()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
      }
    }
  }
}

TEST(Means, RieszExpansionAtFour) {
  // R_4 f = (6/11)(S_1 + S_2/2 + S_3/3) on the first three characters.
  const auto g = walsh(3);
  std::vector<Complex> v(g.size());
  for (Index x = 0; x < g.size(); ++x) {
    v[x] = 1.0 + 2.0 * oracle::psi(g, 1, x) + 3.0 * oracle::psi(g, 2, x);
  }
  const GridFunction f(g, v);
  const GridFunction r = named_mean(NamedMean::riesz, f, 4);
  for (Index x = 0; x < g.size(); ++x) {
    const Complex expected = (6.0 / 11.0) * (1.0 + (1.0 + 2.0 * oracle::psi(g, 1, x)) / 2.0 +
                                             v[x] / 3.0);
    EXPECT_NEAR(std::abs(r[x] - expected), 0.0, 1e-12);
  }
}

TEST(Means, FejerMean) {
  const auto g = mixed();
  const GridFunction f = random_function(g, 11);
  const auto w = WeightSequence::parse("constant");
  for (Index n = 1; n <= g.size(); n += 5) {
    EXPECT_LE(max_abs_diff(fejer_mean(f, n).values(),
                           norlund_mean(f, w, n).values()),
              1e-12);
    EXPECT_LE(max_abs_diff(fejer_mean(f, n).values(),
                           named_mean(NamedMean::fejer, f, n).values()),
              1e-12);
  }
  EXPECT_LE(norm(fejer_mean(f, 0), INFINITY), 0.0);
}

TEST(Means, NamedMeans) {
  EXPECT_EQ(named_mean_spec(NamedMean::riesz).id(), "T:riesz");
  EXPECT_EQ(named_mean_spec(NamedMean::cesaro, 0.5).id(), "N:cesaro:0.5");
  EXPECT_EQ(named_mean_spec(NamedMean::inverse_cesaro, 0.5).id(), "T:icesaro:0.5");
  EXPECT_EQ(named_mean_spec(NamedMean::norlund_log).id(), "N:nlog");
  EXPECT_EQ(named_mean_spec(NamedMean::b_alpha, 0.25).id(), "T:logpow:0.25");
  EXPECT_EQ(parse_named_mean("v-alpha"), NamedMean::v_alpha);
  EXPECT_THROW(parse_named_mean("nope"), Error);
  EXPECT_EQ(parse_mean_method("abel"), MeanMethod::abel);
  EXPECT_THROW(parse_mean_method("fast"), Error);
}

TEST(Means, Errors) {
  const auto g = walsh(3);
  const GridFunction f = random_function(g, 1);
  const auto riesz = WeightSequence::parse("riesz");
  EXPECT_THROW(t_mean(f, riesz, 1), Error);
  EXPECT_THROW(t_mean(f, riesz, 9), RangeError);
  EXPECT_THROW(norlund_mean(f, riesz, 9), RangeError);
}

TEST(Means, StepRank) {
  const auto g = mixed();
  EXPECT_EQ(step_rank(GridFunction(g, std::vector<Complex>(g.size(), 2.0))), 0u);
  const auto indicator = make_function("indicator:2,1", g);
  EXPECT_EQ(indicator.rank, 2u);
  EXPECT_EQ(step_rank(indicator.f), 2u);
  EXPECT_EQ(step_rank(make_function("random:5,3", g).f), 3u);
}

TEST(Means, StepFunctionBoundHolds) {
  const auto g = walsh(6);
  const auto step = make_function("random:4,2", g);
  for (const char* name : {"riesz", "logpow:0.5", "constant", "power:0.5"}) {
    const auto w = WeightSequence::parse(name);
    for (Index n = 4; n <= g.size(); ++n) {
      const double err = norm(t_mean(step.f, w, n) - step.f, 1.0);
      EXPECT_LE(err, step_function_bound(step.f, w, n, step.rank, 1.0) + 1e-10)
          << name << " n=" << n;
    }
  }
  for (const char* name : {"cesaro:0.5", "nlog"}) {
    const auto mean = MeanSpec::parse(name);
    for (Index n = 4; n <= g.size(); ++n) {
      const double err = norm(mean.apply(step.f, n) - step.f, 2.0);
      EXPECT_LE(err, step_function_bound(step.f, mean, n, step.rank, 2.0) + 1e-10)
          << name << " n=" << n;
    }
  }
}

TEST(Means, LogPowerBoundTendsToZero) {
  const auto g = walsh(10);
  const auto step = make_function("random:9,2", g);
  const auto w = WeightSequence::parse("logpow:0.5");
  const double early = step_function_bound(step.f, w, 8, step.rank, 1.0);
  const double late = step_function_bound(step.f, w, g.size(), step.rank, 1.0);
  EXPECT_LT(late, early);
  EXPECT_LT(late, 0.01);
}
