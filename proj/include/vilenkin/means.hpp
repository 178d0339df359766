#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

/// Evaluation route for a summability mean. All three agree to rounding.
enum class MeanMethod {
  direct,       // weighted sum of partial sums
  abel,         // summation by parts onto Fejer means
  convolution,  // f * kernel by the convolution double sum
};

std::string to_string(MeanMethod m);
MeanMethod parse_mean_method(std::string_view name);

/// sigma_n f = (1/n) sum_{k=1}^{n} S_k f; sigma_0 f = 0.
GridFunction fejer_mean(const GridFunction& f, Index n);

/// T_n f = (1/Q_n) sum_{k<n} q_k S_k f, with S_0 f = 0.
/// Throws Error if Q_n = 0, RangeError if n > M_N.
GridFunction t_mean(const GridFunction& f, const WeightSequence& w, Index n,
                    MeanMethod method = MeanMethod::direct);

/// t_n f = (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f.
GridFunction norlund_mean(const GridFunction& f, const WeightSequence& w,
                          Index n, MeanMethod method = MeanMethod::direct);

/// A weight family together with the form it is averaged in.
struct MeanSpec {
  WeightSequence weights;
  MeanForm form;

  /// Uses the family's natural form unless one is given.
  static MeanSpec parse(std::string_view weights,
                        std::optional<MeanForm> form = std::nullopt);

  /// e.g. "T:riesz", "N:cesaro:0.5"
  std::string id() const;
  Index first_valid() const { return weights.first_valid(); }
  GridFunction apply(const GridFunction& f, Index n,
                     MeanMethod method = MeanMethod::direct) const;
};

enum class NamedMean {
  fejer,
  cesaro,
  inverse_cesaro,
  v_alpha,
  riesz,
  norlund_log,
  b_alpha,
};

NamedMean parse_named_mean(std::string_view name);
/// The weights and form a named mean reduces to.
MeanSpec named_mean_spec(NamedMean name, double alpha = 0.5);
GridFunction named_mean(NamedMean name, const GridFunction& f, Index n,
                        double alpha = 0.5);

/// Smallest r such that f is constant on every interval I_r(x).
std::size_t step_rank(const GridFunction& f, double tol = 1e-12);

/// (Q_{M_r}/Q_n) max_{k<M_r} ||S_k f - f||_p for a rank-r f and n >= M_r;
/// an upper bound for ||T_n f - f||_p.
double step_function_bound(const GridFunction& f, const WeightSequence& w,
                           Index n, std::size_t rank, double p);
/// Form-aware version: for the Norlund form the weight mass on the inexact
/// partial sums is sum_{k=1}^{M_r-1} q_{n-k} / Q_n.
double step_function_bound(const GridFunction& f, const MeanSpec& mean,
                           Index n, std::size_t rank, double p);

}  // namespace vilenkin
