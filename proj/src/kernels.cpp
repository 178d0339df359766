#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "vilenkin/csv.hpp"
#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

// Walks D_0 = 0, D_1, D_2, ... one character at a time.
class DirichletRun {
 public:
  explicit DirichletRun(const GroupSpec& spec) : table_(spec), d_(spec) {}

  const GridFunction& current() const { return d_; }
  Index k() const { return k_; }

  void advance() {
    for (Index x = 0; x < d_.size(); ++x) d_[x] += table_(k_, x);
    ++k_;
  }

 private:
  CharacterTable table_;
  GridFunction d_;
  Index k_ = 0;
};

void check_index(const GroupSpec& spec, Index n, const char* what) {
  if (n > spec.size()) {
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) +
                     " exceeds M_N = " + std::to_string(spec.size()));
  }
}

double positive_Q(const WeightSequence& w, Index n, const char* what) {
  const double Qn = w.Q(n);
  if (!(Qn > 0.0)) {
    throw Error(std::string(what) + ": Q_" + std::to_string(n) +
                " = 0 for weights " + w.name());
  }
  return Qn;
}

void add_scaled(GridFunction& acc, const GridFunction& g, double s) {
  for (Index x = 0; x < acc.size(); ++x) acc[x] += s * g[x];
}

}  // namespace

GridFunction dirichlet(const GroupSpec& spec, Index n) {
  check_index(spec, n, "dirichlet");
  DirichletRun run(spec);
  while (run.k() < n) run.advance();
  return run.current();
}

GridFunction fejer(const GroupSpec& spec, Index n) {
  check_index(spec, n, "fejer");
  GridFunction acc(spec);
  if (n == 0) return acc;
  DirichletRun run(spec);
  for (Index k = 1; k <= n; ++k) {
    run.advance();
    acc += run.current();
  }
  acc *= 1.0 / static_cast<double>(n);
  return acc;
}

GridFunction t_kernel(const WeightSequence& w, Index n, const GroupSpec& spec) {
  check_index(spec, n, "t_kernel");
  const double Qn = positive_Q(w, n, "t_kernel");
  GridFunction acc(spec);
  DirichletRun run(spec);
  for (Index k = 0; k < n; ++k) {
    add_scaled(acc, run.current(), w.q(k));
    run.advance();
  }
  acc *= 1.0 / Qn;
  return acc;
}

GridFunction norlund_kernel(const WeightSequence& w, Index n,
                            const GroupSpec& spec) {
  check_index(spec, n, "norlund_kernel");
  const double Qn = positive_Q(w, n, "norlund_kernel");
  GridFunction acc(spec);
  DirichletRun run(spec);
  for (Index k = 1; k <= n; ++k) {
    run.advance();
    add_scaled(acc, run.current(), w.q(n - k));
  }
  acc *= 1.0 / Qn;
  return acc;
}

double reflection_residual(const GroupSpec& spec, std::size_t rank, Index j) {
  if (rank > spec.levels()) {
    throw RangeError("reflection: rank " + std::to_string(rank) +
                     " exceeds resolution");
  }
  const Index M = spec.place(rank);
  if (j >= M) {
    throw RangeError("reflection: j = " + std::to_string(j) +
                     " must be below M_n = " + std::to_string(M));
  }
  const GridFunction lhs = dirichlet(spec, M - j);
  const GridFunction rhs =
      dirichlet(spec, M) - multiply(character(spec, M - 1), conj(dirichlet(spec, j)));
  return max_abs_diff(lhs.values(), rhs.values());
}

double abel_kernel_residual(const WeightSequence& w, Index n,
                            const GroupSpec& spec) {
  const GridFunction lhs = t_kernel(w, n, spec);
  const double Qn = w.Q(n);
  GridFunction rhs(spec);
  GridFunction sum_d(spec);  // D_1 + ... + D_j
  DirichletRun run(spec);
  for (Index j = 1; j + 1 <= n; ++j) {
    run.advance();
    sum_d += run.current();
    const GridFunction K = sum_d * (1.0 / static_cast<double>(j));
    const double jj = static_cast<double>(j);
    if (j + 2 <= n) add_scaled(rhs, K, (w.q(j) - w.q(j + 1)) * jj);
    if (j == n - 1) add_scaled(rhs, K, w.q(n - 1) * jj);
  }
  rhs *= 1.0 / Qn;
  return max_abs_diff(lhs.values(), rhs.values());
}

double block_residual(const WeightSequence& w, std::size_t rank,
                      const GroupSpec& spec) {
  if (rank > spec.levels()) {
    throw RangeError("block: rank " + std::to_string(rank) +
                     " exceeds resolution");
  }
  const Index M = spec.place(rank);
  const GridFunction lhs = t_kernel(w, M, spec);
  const GridFunction rhs =
      dirichlet(spec, M) -
      multiply(character(spec, M - 1), conj(norlund_kernel(w, M, spec)));
  return max_abs_diff(lhs.values(), rhs.values());
}

double abel_weight_residual(const WeightSequence& w, Index n) {
  if (n < 2) throw RangeError("abel weights: n must be at least 2");
  double rhs = w.q(0);
  for (Index j = 1; j + 2 <= n; ++j) {
    rhs += (w.q(j) - w.q(j + 1)) * static_cast<double>(j);
  }
  rhs += w.q(n - 1) * static_cast<double>(n - 1);
  return std::abs(w.Q(n) - rhs);
}

double identity_residual(Identity kind, const IdentityParams& params,
                         const GroupSpec& spec) {
  switch (kind) {
    case Identity::reflection:
      return reflection_residual(spec, params.n, params.j);
    case Identity::abel_kernel:
      if (!params.weights) throw Error("abel-kernel residual needs weights");
      return abel_kernel_residual(*params.weights, params.n, spec);
    case Identity::block:
      if (!params.weights) throw Error("block residual needs weights");
      return block_residual(*params.weights, params.n, spec);
  }
  throw Error("unknown identity");
}

std::string to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::dirichlet: return "dirichlet";
    case KernelFamily::fejer: return "fejer";
    case KernelFamily::t: return "t";
    case KernelFamily::norlund: return "norlund";
  }
  return "unknown";
}

KernelFamily parse_kernel_family(const std::string& name) {
  if (name == "dirichlet") return KernelFamily::dirichlet;
  if (name == "fejer") return KernelFamily::fejer;
  if (name == "t") return KernelFamily::t;
  if (name == "norlund") return KernelFamily::norlund;
  throw Error("unknown kernel family '" + name + "'");
}

GridFunction kernel(KernelFamily family, const WeightSequence* weights,
                    Index n, const GroupSpec& spec) {
  switch (family) {
    case KernelFamily::dirichlet:
      return dirichlet(spec, n);
    case KernelFamily::fejer:
      return fejer(spec, n);
    case KernelFamily::t:
    case KernelFamily::norlund:
      if (!weights) throw Error(to_string(family) + " kernel needs weights");
      return family == KernelFamily::t ? t_kernel(*weights, n, spec)
                                       : norlund_kernel(*weights, n, spec);
  }
  throw Error("unknown kernel family");
}

KernelProfileRow profile_row(const GridFunction& kernel, Index n,
                             std::size_t tail_rank) {
  const auto& spec = kernel.spec();
  if (tail_rank > spec.levels()) {
    throw RangeError("profile: tail rank " + std::to_string(tail_rank) +
                     " exceeds resolution");
  }
  KernelProfileRow row;
  row.n = n;
  double l1 = 0.0, tail = 0.0;
  Complex sum{};
  for (Index x = 0; x < kernel.size(); ++x) {
    const double a = std::abs(kernel[x]);
    l1 += a;
    sum += kernel[x];
    if (!spec.in_interval(x, 0, tail_rank)) tail += a;
  }
  const double size = static_cast<double>(kernel.size());
  row.l1 = l1 / size;
  row.integral = sum / size;
  row.tail = tail / size;
  return row;
}

std::vector<KernelProfileRow> l1_profile(KernelFamily family,
                                         const WeightSequence* weights,
                                         std::span<const Index> ns,
                                         std::size_t tail_rank,
                                         const GroupSpec& spec) {
  std::vector<Index> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  for (const Index n : sorted) check_index(spec, n, "l1_profile");
  std::vector<KernelProfileRow> rows;
  rows.reserve(sorted.size());
  for (const Index n : sorted) {
    rows.push_back(profile_row(kernel(family, weights, n, spec), n, tail_rank));
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const KernelProfileRow> rows) {
  out << "n,l1,integral_re,integral_im,tail\n";
  for (const auto& r : rows) {
    out << r.n << ',' << csv::real(r.l1) << ',' << csv::real(r.integral.real())
        << ',' << csv::real(r.integral.imag()) << ',' << csv::real(r.tail)
        << '\n';
  }
}

std::size_t kernel_order(const GroupSpec& spec, Index n) {
  std::size_t l = 0;
  while (l < spec.levels() && spec.place(l + 1) <= n) ++l;
  return l;
}

namespace {

// Both sides below this count as vanishing.
constexpr double kZero = 1e-12;

// `numerator(n)` must be called with strictly increasing n and return
// n |kernel_n| on the grid.
template <class Numerator>
Domination domination_impl(std::span<const Index> ns, const GroupSpec& spec,
                           Numerator&& numerator) {
  if (ns.empty()) throw RangeError("domination: empty range");
  std::vector<Index> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) throw RangeError("domination: n must be >= 1");
  check_index(spec, sorted.back(), "domination");

  // cumulative[l](x) = sum_{i<=l} M_i |K_{M_i}(x)|
  std::vector<std::vector<double>> cumulative(spec.levels() + 1,
                                              std::vector<double>(spec.size()));
  for (std::size_t l = 0; l <= spec.levels(); ++l) {
    const GridFunction K = fejer(spec, spec.place(l));
    const double M = static_cast<double>(spec.place(l));
    for (Index x = 0; x < spec.size(); ++x) {
      cumulative[l][x] = M * std::abs(K[x]) + (l ? cumulative[l - 1][x] : 0.0);
    }
  }

  Domination best;
  for (const Index n : sorted) {
    const std::vector<double> num = numerator(n);
    const auto& den = cumulative[kernel_order(spec, n)];
    for (Index x = 0; x < spec.size(); ++x) {
      double ratio;
      if (den[x] <= kZero) {
        ratio = num[x] <= kZero ? 0.0 : INFINITY;
      } else {
        ratio = num[x] / den[x];
      }
      if (ratio > best.c) best = {ratio, n, x};
    }
  }
  return best;
}

}  // namespace

Domination domination_constant(std::span<const Index> ns,
                               const GroupSpec& spec) {
  DirichletRun run(spec);
  GridFunction sum_d(spec);
  return domination_impl(ns, spec, [&](Index n) {
    while (run.k() < n) {
      run.advance();
      sum_d += run.current();
    }
    // n K_n = D_1 + ... + D_n
    std::vector<double> out(spec.size());
    for (Index x = 0; x < spec.size(); ++x) out[x] = std::abs(sum_d[x]);
    return out;
  });
}

Domination t_domination_constant(const WeightSequence& w,
                                 std::span<const Index> ns,
                                 const GroupSpec& spec) {
  DirichletRun run(spec);
  GridFunction weighted(spec);  // sum_{k<run.k()} q_k D_k
  return domination_impl(ns, spec, [&](Index n) {
    while (run.k() < n) {
      add_scaled(weighted, run.current(), w.q(run.k()));
      run.advance();
    }
    const double scale = static_cast<double>(n) / positive_Q(w, n, "domination");
    std::vector<double> out(spec.size());
    for (Index x = 0; x < spec.size(); ++x) {
      out[x] = scale * std::abs(weighted[x]);
    }
    return out;
  });
}

}  // namespace vilenkin
