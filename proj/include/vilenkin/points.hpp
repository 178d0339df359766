#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vilenkin/means.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// (1/|I_n(x)|) * integral over I_n(x) of |f(t) - f(x)|.
double lebesgue_modulus(const GridFunction& f, const Element& x, std::size_t n);

/// W_n f(x) = sum_{s<n} M_s sum_{r=1}^{m_s-1}
///            integral over I_n(x - r e_s) of |f(t) - f(x)|.
double w_modulus(const GridFunction& f, const Element& x, std::size_t n);

enum class ConvergenceMode {
  all,    // any n in range
  block,  // n restricted to M_0, ..., M_N
};

std::string to_string(ConvergenceMode m);

struct ConvergenceRow {
  Index n = 0;
  double err = 0.0;
  std::string mean_id;
  ConvergenceMode mode = ConvergenceMode::all;
};

/// |mean_n f(x) - f(x)| for each n. Block mode throws RangeError on an n
/// that is not some M_k.
std::vector<ConvergenceRow> convergence_profile(const GridFunction& f,
                                                const Element& x,
                                                const MeanSpec& mean,
                                                std::span<const Index> ns,
                                                ConvergenceMode mode);
/// ||mean_n f - f||_p for each n.
std::vector<ConvergenceRow> convergence_profile(const GridFunction& f, double p,
                                                const MeanSpec& mean,
                                                std::span<const Index> ns,
                                                ConvergenceMode mode);

/// n_0, ..., n_max, or the block indices M_k within that range.
std::vector<Index> index_range(const GroupSpec& spec, Index n_first,
                               Index n_max, ConvergenceMode mode);

/// CSV with header "n,err,mean_id,mode".
void write_csv(std::ostream& out, std::span<const ConvergenceRow> rows);

struct MaximalProfile {
  /// max_{n_0 <= n <= n_max} |mean_n f| pointwise
  GridFunction sup;
  /// sup_lambda lambda * mu(sup > lambda)
  double weak_statistic = 0.0;
};

MaximalProfile maximal_profile(const GridFunction& f, const MeanSpec& mean,
                               Index n_max);

}  // namespace vilenkin
