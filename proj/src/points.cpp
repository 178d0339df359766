#include "vilenkin/points.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "vilenkin/csv.hpp"
#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

void check_rank(const GroupSpec& spec, std::size_t n, const char* what) {
  if (n > spec.levels()) {
    throw RangeError(std::string(what) + ": rank " + std::to_string(n) +
                     " exceeds resolution " + std::to_string(spec.levels()));
  }
}

// integral over I_n(center) of |f(t) - value|
double cell_integral(const GridFunction& f, Index center, std::size_t n,
                     Complex value) {
  const auto& spec = f.spec();
  const Index stride = spec.place(n);
  double acc = 0.0;
  for (Index t = center % stride; t < f.size(); t += stride) {
    acc += std::abs(f[t] - value);
  }
  return acc / static_cast<double>(f.size());
}

void check_block(const GroupSpec& spec, std::span<const Index> ns) {
  const auto places = spec.places();
  for (const Index n : ns) {
    if (std::find(places.begin(), places.end(), n) == places.end()) {
      throw RangeError("block mode: n = " + std::to_string(n) +
                       " is not of the form M_k");
    }
  }
}

template <class Error>
std::vector<ConvergenceRow> profile(const GridFunction& f, const MeanSpec& mean,
                                    std::span<const Index> ns,
                                    ConvergenceMode mode, Error&& error) {
  if (mode == ConvergenceMode::block) check_block(f.spec(), ns);
  std::vector<Index> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(sorted.size());
  const std::string id = mean.id();
  for (const Index n : sorted) {
    rows.push_back({n, error(mean.apply(f, n)), id, mode});
  }
  return rows;
}

}  // namespace

double lebesgue_modulus(const GridFunction& f, const Element& x, std::size_t n) {
  const auto& spec = f.spec();
  check_rank(spec, n, "lebesgue_modulus");
  const Index xi = x.index(spec);
  // |I_n(x)| = 1 / M_n
  return static_cast<double>(spec.place(n)) * cell_integral(f, xi, n, f[xi]);
}

double w_modulus(const GridFunction& f, const Element& x, std::size_t n) {
  const auto& spec = f.spec();
  check_rank(spec, n, "w_modulus");
  const Index xi = x.index(spec);
  double acc = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    double inner = 0.0;
    for (int r = 1; r < spec.radix(s); ++r) {
      const Index shift = static_cast<Index>(r) * spec.place(s);
      inner += cell_integral(f, spec.subtract(xi, shift), n, f[xi]);
    }
    acc += static_cast<double>(spec.place(s)) * inner;
  }
  return acc;
}

std::string to_string(ConvergenceMode m) {
  return m == ConvergenceMode::all ? "all" : "block";
}

std::vector<ConvergenceRow> convergence_profile(const GridFunction& f,
                                                const Element& x,
                                                const MeanSpec& mean,
                                                std::span<const Index> ns,
                                                ConvergenceMode mode) {
  const Index xi = x.index(f.spec());
  return profile(f, mean, ns, mode, [&](const GridFunction& g) {
    return std::abs(g[xi] - f[xi]);
  });
}

std::vector<ConvergenceRow> convergence_profile(const GridFunction& f, double p,
                                                const MeanSpec& mean,
                                                std::span<const Index> ns,
                                                ConvergenceMode mode) {
  return profile(f, mean, ns, mode,
                 [&](const GridFunction& g) { return norm(g - f, p); });
}

std::vector<Index> index_range(const GroupSpec& spec, Index n_first,
                               Index n_max, ConvergenceMode mode) {
  if (n_max > spec.size()) {
    throw RangeError("n_max = " + std::to_string(n_max) + " exceeds M_N = " +
                     std::to_string(spec.size()));
  }
  std::vector<Index> out;
  if (mode == ConvergenceMode::block) {
    for (const Index M : spec.places()) {
      if (M >= n_first && M <= n_max) out.push_back(M);
    }
  } else {
    for (Index n = n_first; n <= n_max; ++n) out.push_back(n);
  }
  return out;
}

void write_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "n,err,mean_id,mode\n";
  for (const auto& r : rows) {
    out << r.n << ',' << csv::real(r.err) << ',' << r.mean_id << ','
        << to_string(r.mode) << '\n';
  }
}

MaximalProfile maximal_profile(const GridFunction& f, const MeanSpec& mean,
                               Index n_max) {
  if (n_max > f.size()) throw RangeError("maximal_profile: n_max exceeds M_N");
  GridFunction sup(f.spec());
  for (Index n = mean.first_valid(); n <= n_max; ++n) {
    const GridFunction g = mean.apply(f, n);
    for (Index x = 0; x < f.size(); ++x) {
      sup[x] = std::max(sup[x].real(), std::abs(g[x]));
    }
  }
  const double weak = weak_norm(sup, 1.0);
  return {std::move(sup), weak};
}

}  // namespace vilenkin
