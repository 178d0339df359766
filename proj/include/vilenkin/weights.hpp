#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

enum class WeightKind {
  constant,        // q_k = 1 (Fejer)
  cesaro,          // q_k = A_k^{alpha-1}, Norlund form: (C, alpha)
  inverse_cesaro,  // q_k = A_k^{alpha-1}, T form: U^alpha
  power,           // q_0 = 0, q_k = k^{alpha-1}: V^alpha
  riesz_log,       // q_0 = 0, q_k = 1/k, T form: R_n
  norlund_log,     // q_0 = 0, q_k = 1/k, Norlund form: L_n
  log_power,       // q_k = log^alpha(k+1): B^alpha
  table,           // user supplied
};

/// Which average of partial sums a weight family naturally parameterizes.
enum class MeanForm {
  t,        // (1/Q_n) sum_{k<n} q_k S_k f
  norlund,  // (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f
};

/// A_n^alpha = (alpha+1)...(alpha+n)/n!, with A_0^alpha = 1.
double cesaro_number(double alpha, Index n);

/// Nonnegative weights q_k with cumulative sums Q_n = sum_{k<n} q_k.
///
/// Values up to a fixed capacity are tabulated at construction; beyond it
/// they are computed on demand, so the object stays immutable.
class WeightSequence {
 public:
  static constexpr Index kDefaultCapacity = Index{1} << 14;

  /// Throws RangeError when alpha is outside (0, 1) for the parameterized
  /// kinds. `table` cannot be built this way.
  static WeightSequence make(WeightKind kind, double alpha = 0.0,
                             Index capacity = kDefaultCapacity);
  /// Accepts the CLI names: constant, cesaro:A, icesaro:A, power:A, riesz,
  /// nlog, logpow:A.
  static WeightSequence parse(std::string_view text,
                              Index capacity = kDefaultCapacity);
  /// Weights q_0..q_{L-1}; q(k) for k >= L throws RangeError.
  static WeightSequence from_table(std::vector<double> q);

  WeightKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  MeanForm natural_form() const;
  /// Canonical CLI name, e.g. "cesaro:0.5".
  std::string name() const;

  double q(Index k) const;
  double Q(Index n) const;
  /// Smallest n with Q(n) > 0.
  Index first_valid() const { return q(0) > 0.0 ? 1 : 2; }

 private:
  WeightSequence(WeightKind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  double compute_q(Index k) const;

  WeightKind kind_;
  double alpha_;
  std::vector<double> q_;
  std::vector<double> prefix_;  // prefix_[n] = Q(n), n <= q_.size()
};

enum class Monotonicity { both, non_increasing, non_decreasing, neither };

std::string to_string(Monotonicity m);

/// Finite-range evidence about a weight sequence.
struct WeightClass {
  Monotonicity monotonicity = Monotonicity::neither;
  Index n_max = 0;
  /// sup_{n <= n_max} n q_{n-1} / Q_n
  double fn01_sup = 0.0;
  /// sup_{n <= n_max} n q_0 / Q_n
  double fn011_sup = 0.0;
  /// The sup over (n_max/2, n_max] does not exceed the sup over
  /// [n_0, n_max/2] by more than kBoundedSlack.
  bool fn01_bounded = false;
  bool fn011_bounded = false;
  /// Q(n_max) / Q(n_max / 2)
  double growth_ratio = 0.0;
  bool regular = false;
  /// Q(0), ..., Q(n_max)
  std::vector<double> cumulative;

  bool non_increasing() const {
    return monotonicity == Monotonicity::both ||
           monotonicity == Monotonicity::non_increasing;
  }
  bool non_decreasing() const {
    return monotonicity == Monotonicity::both ||
           monotonicity == Monotonicity::non_decreasing;
  }
};

inline constexpr double kBoundedSlack = 1.05;
inline constexpr double kRegularGrowth = 1.01;

/// Monotonicity is decided on q_{n_0-1}, ..., q_{n_max-1}, i.e. a vanishing
/// q_0 is skipped. Throws RangeError for n_max < 4.
WeightClass classify(const WeightSequence& w, Index n_max);

/// Hypotheses of the kernel domination lemmas: non-increasing with
/// q_0/Q_n = O(1/n), or non-decreasing with q_{n-1}/Q_n = O(1/n).
bool domination_gate(const WeightClass& c);
/// Hypotheses of the T-mean convergence theorem: non-increasing, or
/// non-decreasing with q_{n-1}/Q_n = O(1/n).
bool convergence_gate(const WeightClass& c);
/// Hypothesis of the T_{M_n} subsequence theorem: non-decreasing.
bool block_gate(const WeightClass& c);

}  // namespace vilenkin
