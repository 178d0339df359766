#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/transform.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

// All kernels are built from character sums on the grid. Conventions:
// D_0 = K_0 = 0.

/// D_n = sum_{k<n} psi_k. Throws RangeError for n > M_N.
GridFunction dirichlet(const GroupSpec& spec, Index n);
/// K_n = (1/n) sum_{k=1}^{n} D_k.
GridFunction fejer(const GroupSpec& spec, Index n);
/// T kernel F^{-1}_n = (1/Q_n) sum_{k<n} q_k D_k. Throws Error if Q_n = 0.
GridFunction t_kernel(const WeightSequence& w, Index n, const GroupSpec& spec);
/// Norlund kernel F_n = (1/Q_n) sum_{k=1}^{n} q_{n-k} D_k.
GridFunction norlund_kernel(const WeightSequence& w, Index n,
                            const GroupSpec& spec);

/// D_{M_n - j} against D_{M_n} - psi_{M_n-1} conj(D_j); max-abs over the grid.
double reflection_residual(const GroupSpec& spec, std::size_t rank, Index j);
/// The T kernel against its summation-by-parts form
/// (1/Q_n)(sum_{j=1}^{n-2} (q_j - q_{j+1}) j K_j + q_{n-1} (n-1) K_{n-1}).
double abel_kernel_residual(const WeightSequence& w, Index n,
                            const GroupSpec& spec);
/// F^{-1}_{M_n} against D_{M_n} - psi_{M_n-1} conj(F_{M_n}).
double block_residual(const WeightSequence& w, std::size_t rank,
                      const GroupSpec& spec);
/// |Q_n - (q_0 + sum_{j=1}^{n-2} (q_j - q_{j+1}) j + q_{n-1} (n-1))|.
double abel_weight_residual(const WeightSequence& w, Index n);

enum class Identity { reflection, abel_kernel, block };

struct IdentityParams {
  /// n for abel_kernel; the rank n of M_n for reflection and block.
  Index n = 0;
  /// j for reflection.
  Index j = 0;
  const WeightSequence* weights = nullptr;
};

/// Dispatches to the residual functions above.
double identity_residual(Identity kind, const IdentityParams& params,
                         const GroupSpec& spec);

enum class KernelFamily { dirichlet, fejer, t, norlund };

std::string to_string(KernelFamily f);
KernelFamily parse_kernel_family(const std::string& name);

struct KernelProfileRow {
  Index n = 0;
  double l1 = 0.0;        // integral of |kernel|
  Complex integral;       // integral of kernel
  double tail = 0.0;      // integral of |kernel| off I_rank(0)
};

/// Builds one kernel of `family`; `weights` is required for t and norlund.
GridFunction kernel(KernelFamily family, const WeightSequence* weights,
                    Index n, const GroupSpec& spec);

KernelProfileRow profile_row(const GridFunction& kernel, Index n,
                             std::size_t tail_rank);

/// One row per entry of `ns` (sorted ascending on output).
std::vector<KernelProfileRow> l1_profile(KernelFamily family,
                                         const WeightSequence* weights,
                                         std::span<const Index> ns,
                                         std::size_t tail_rank,
                                         const GroupSpec& spec);

/// CSV with header "n,l1,integral_re,integral_im,tail".
void write_csv(std::ostream& out, std::span<const KernelProfileRow> rows);

struct Domination {
  double c = 0.0;  // smallest admissible constant on the range
  Index n = 0;     // where it is attained
  Index x = 0;
};

/// |n| in the domination bound: max{l : M_l <= n}, which is the position of
/// the highest nonzero digit for n < M_N.
std::size_t kernel_order(const GroupSpec& spec, Index n);

/// max over n in `ns` and x of n|K_n(x)| / sum_{l<=|n|} M_l |K_{M_l}(x)|.
Domination domination_constant(std::span<const Index> ns,
                               const GroupSpec& spec);
/// Same with n|F^{-1}_n| in the numerator.
Domination t_domination_constant(const WeightSequence& w,
                                 std::span<const Index> ns,
                                 const GroupSpec& spec);

}  // namespace vilenkin
