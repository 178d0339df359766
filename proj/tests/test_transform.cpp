#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "vilenkin/builtin.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

GroupSpec group(std::initializer_list<int> pattern, std::size_t levels = 0) {
  std::vector<int> p(pattern);
  return GroupSpec::make(p, levels ? levels : p.size());
}

GridFunction indicator(const GroupSpec& g, Index cell, std::size_t rank) {
  GridFunction f(g);
  for (Index x = 0; x < g.size(); ++x) f[x] = g.in_interval(x, cell, rank) ? 1.0 : 0.0;
  return f;
}

}  // namespace

TEST(Rademacher, Values) {
  const auto g = group({2, 3});
  EXPECT_EQ(rademacher(g, 0, Element(g, {0, 2})), Complex(1.0, 0.0));
  EXPECT_EQ(rademacher(g, 0, Element(g, {1, 0})), Complex(-1.0, 0.0));
  const Complex w = rademacher(g, 1, Element(g, {0, 1}));
  EXPECT_NEAR(w.real(), -0.5, 1e-15);
  EXPECT_NEAR(w.imag(), 0.8660254037844386, 1e-15);
  EXPECT_NEAR(std::abs(w), 1.0, 1e-15);
  EXPECT_THROW(rademacher(g, 2, Element(g, {0, 0})), RangeError);
}

TEST(Psi, Values) {
  const auto g = group({2, 2, 2});
  EXPECT_EQ(psi(g, 3, Element(g, {1, 0, 1})), Complex(-1.0, 0.0));
  for (Index x = 0; x < g.size(); ++x) {
    EXPECT_EQ(psi(g, 0, Element::from_index(g, x)), Complex(1.0, 0.0));
  }
  EXPECT_THROW(psi(g, 8, Element::zero(g)), RangeError);
}

TEST(Psi, MatchesPhaseOracleAndIsCharacter) {
  const auto g = group({2, 3, 2, 3});
  const CharacterTable table(g);
  for (Index n = 0; n < g.size(); ++n) {
    EXPECT_EQ(table(n, 0), Complex(1.0, 0.0));
    for (Index x = 0; x < g.size(); ++x) {
      EXPECT_NEAR(std::abs(table(n, x) - oracle::psi(g, n, x)), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(table(n, x)), 1.0, 1e-15);
      for (Index y = 0; y < g.size(); y += 7) {
        EXPECT_NEAR(std::abs(table(n, g.add(x, y)) - table(n, x) * table(n, y)),
                    0.0, 1e-14);
      }
    }
  }
}

TEST(Forward, ConstantAndCharacter) {
  const auto g = group({2, 3, 2});
  GridFunction one(g);
  for (auto& v : one.values()) v = 1.0;
  for (const auto method : {Method::naive, Method::fast}) {
    const Spectrum s = forward(one, method);
    for (Index n = 0; n < g.size(); ++n) {
      EXPECT_NEAR(std::abs(s[n] - (n == 0 ? 1.0 : 0.0)), 0.0, 1e-15);
    }
    const Spectrum c = forward(character(g, 3), method);
    for (Index n = 0; n < g.size(); ++n) {
      EXPECT_NEAR(std::abs(c[n] - (n == 3 ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(Forward, FastMatchesNaiveAndOracle) {
  for (const auto& g : {group({2, 3, 2, 3, 2}), group({2}, 6), group({5, 3, 4}),
                        group({7})}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const GridFunction f = random_function(g, seed);
      const Spectrum fast = forward(f, Method::fast);
      const Spectrum naive = forward(f, Method::naive);
      EXPECT_LE(max_abs_diff(fast.values(), naive.values()), 1e-10);
      if (g.size() <= 64) {
        EXPECT_LE(oracle::max_abs_diff(oracle::coefficients(g, oracle::values(f)),
                                       fast.values()),
                  1e-12);
      }
    }
  }
}

TEST(Inverse, RoundTripAndSynthesis) {
  const auto g = group({2, 3, 2, 3});
  for (std::uint64_t seed = 11; seed < 16; ++seed) {
    const GridFunction f = random_function(g, seed);
    for (const auto method : {Method::naive, Method::fast}) {
      EXPECT_LE(max_abs_diff(inverse(forward(f, method), method).values(),
                             f.values()),
                1e-10);
    }
  }
  for (const Index k : {Index{0}, Index{5}, Index{35}}) {
    Spectrum delta(g);
    delta[k] = 1.0;
    EXPECT_LE(max_abs_diff(inverse(delta).values(), character(g, k).values()),
              1e-14);
  }
}

TEST(Transform, OrthonormalGram) {
  for (const auto& g : {group({2, 3, 2, 3}), group({2}, 6), group({3, 4, 3})}) {
    const CharacterTable table(g);
    double worst = 0.0;
    for (Index a = 0; a < g.size(); ++a) {
      for (Index b = 0; b < g.size(); ++b) {
        Complex acc{};
        for (Index x = 0; x < g.size(); ++x) acc += table(a, x) * std::conj(table(b, x));
        acc /= static_cast<double>(g.size());
        worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
      }
    }
    EXPECT_LE(worst, 1e-12);
  }
}

TEST(Transform, Parseval) {
  const auto g = group({2, 3, 2, 3});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridFunction f = random_function(g, seed);
    const Spectrum s = forward(f);
    double energy = 0.0;
    for (const auto c : s.values()) energy += std::norm(c);
    EXPECT_NEAR(std::pow(norm(f, 2.0), 2.0), energy, 1e-10);
  }
}

TEST(Transform, StepFunctionSpectrumVanishesBeyondRank) {
  const auto g = group({2, 3, 2, 3});
  for (std::size_t r = 0; r <= g.levels(); ++r) {
    const auto fn = make_function("random:7," + std::to_string(r), g);
    const Spectrum s = forward(fn.f);
    for (Index n = g.place(r); n < g.size(); ++n) EXPECT_EQ(std::abs(s[n]) < 1e-15, true);
  }
}

TEST(PartialSum, Characters) {
  const auto g = group({2, 2, 2});
  const GridFunction f = character(g, 3);
  EXPECT_LE(norm(partial_sum(f, 3), INFINITY), 1e-15);
  EXPECT_LE(max_abs_diff(partial_sum(f, 4).values(), f.values()), 1e-15);
  EXPECT_LE(norm(partial_sum(f, 0), INFINITY), 0.0);
  EXPECT_THROW(partial_sum(f, 9), RangeError);
}

TEST(PartialSum, CompletenessAndConvolutionOracle) {
  const auto g = group({2, 3, 2, 3});
  const GridFunction f = random_function(g, 3);
  EXPECT_LE(max_abs_diff(partial_sum(f, g.size()).values(), f.values()), 1e-12);
  const auto fv = oracle::values(f);
  for (Index n = 0; n <= g.size(); ++n) {
    const auto expected = oracle::convolve(g, fv, oracle::dirichlet(g, n));
    EXPECT_LE(oracle::max_abs_diff(expected, partial_sum(f, n).values()), 1e-10);
  }
}

TEST(Convolve, MatchesOracle) {
  const auto g = group({3, 2, 3});
  const GridFunction f = random_function(g, 1), h = random_function(g, 2);
  EXPECT_LE(oracle::max_abs_diff(oracle::convolve(g, oracle::values(f), oracle::values(h)),
                                 convolve(f, h).values()),
            1e-13);
}

TEST(Convolve, CharacterIsEigenfunction) {
  const auto g = group({2, 3, 2, 3});
  const GridFunction f = random_function(g, 9);
  const Spectrum s = forward(f);
  for (const Index n : {Index{0}, Index{4}, Index{17}, Index{35}}) {
    const GridFunction expected = character(g, n) * s[n];
    EXPECT_LE(max_abs_diff(convolve(f, character(g, n)).values(), expected.values()),
              1e-12);
  }
}

TEST(Convolve, DirichletBlockGivesPartialSum) {
  const auto g = group({2, 3, 2, 3});
  const GridFunction f = random_function(g, 21);
  for (std::size_t r = 0; r <= g.levels(); ++r) {
    GridFunction d(g, oracle::dirichlet(g, g.place(r)));
    EXPECT_LE(max_abs_diff(convolve(f, d).values(), partial_sum(f, g.place(r)).values()),
              1e-10);
  }
}

TEST(Convolve, YoungBoundAndConvolutionTheorem) {
  const auto g = group({2, 3, 2, 3});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GridFunction f = random_function(g, seed);
    const GridFunction h = random_function(g, seed + 100);
    const GridFunction fh = convolve(f, h);
    for (const double p : {1.0, 2.0}) {
      EXPECT_LE(norm(fh, p), norm(f, p) * norm(h, 1.0) + 1e-12);
    }
    const Spectrum a = forward(f), b = forward(h), c = forward(fh);
    for (Index n = 0; n < g.size(); ++n) EXPECT_NEAR(std::abs(c[n] - a[n] * b[n]), 0.0, 1e-10);
  }
  EXPECT_THROW(convolve(random_function(g, 1), random_function(group({2}, 3), 1)),
               SpecMismatch);
}

TEST(Norm, Characters) {
  const auto g = group({2, 3, 2});
  for (Index n = 0; n < g.size(); ++n) {
    for (const double p : {1.0, 1.5, 2.0, 3.0}) EXPECT_NEAR(norm(character(g, n), p), 1.0, 1e-14);
    EXPECT_NEAR(weak_norm(character(g, n), 1.0), 1.0, 1e-14);
  }
}

TEST(Norm, IndicatorStrongAndWeak) {
  const auto g = group({2, 2, 2});
  const GridFunction f = indicator(g, 0, 1);
  EXPECT_DOUBLE_EQ(norm(f, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(weak_norm(f, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(norm(f, 2.0), std::sqrt(0.5));
  EXPECT_THROW(norm(f, 0.5), RangeError);
  EXPECT_THROW(weak_norm(f, 0.0), RangeError);
}

TEST(Norm, WeakMatchesLevelSetEnumeration) {
  const auto g = group({2, 3, 2, 3});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GridFunction f = make_function("random:" + std::to_string(seed) + ",2", g).f;
    for (const double p : {0.5, 1.0, 2.0}) {
      // sup over lambda on a fine grid below each level value
      double best = 0.0;
      for (Index i = 0; i < g.size(); ++i) {
        const double lambda = std::abs(f[i]) * (1.0 - 1e-12);
        double measure = 0.0;
        for (Index x = 0; x < g.size(); ++x) measure += std::abs(f[x]) > lambda;
        best = std::max(best, lambda * std::pow(measure / g.size(), 1.0 / p));
      }
      EXPECT_NEAR(weak_norm(f, p), best, 1e-11);
      if (p >= 1.0) EXPECT_LE(weak_norm(f, p), norm(f, p) + 1e-12);
    }
  }
}

TEST(Csv, RoundTripAndErrors) {
  const auto g = group({2, 3});
  const GridFunction f = random_function(g, 4);
  std::stringstream ss;
  write_csv(ss, f);
  const GridFunction back = read_grid_csv(ss, g);
  EXPECT_LE(max_abs_diff(back.values(), f.values()), 1e-14);

  std::stringstream spec_csv;
  write_csv(spec_csv, forward(f));
  EXPECT_LE(max_abs_diff(read_spectrum_csv(spec_csv, g).values(), forward(f).values()),
            1e-14);

  std::stringstream bad_header("i,re,im\n");
  EXPECT_THROW(read_grid_csv(bad_header, g), Error);
  std::stringstream short_rows("index,re,im\n0,1,0\n");
  EXPECT_THROW(read_grid_csv(short_rows, g), Error);
  std::stringstream junk("index,re,im\n0,abc,0\n");
  EXPECT_THROW(read_grid_csv(junk, g), Error);
}
