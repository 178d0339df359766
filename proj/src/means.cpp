#include "vilenkin/means.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"

namespace vilenkin {

namespace {

// Walks S_0 f = 0, S_1 f, S_2 f, ... adding one coefficient at a time.
class PartialSumRun {
 public:
  explicit PartialSumRun(const GridFunction& f)
      : table_(f.spec()), coeffs_(forward(f)), s_(f.spec()) {}

  const GridFunction& current() const { return s_; }
  Index k() const { return k_; }

  void advance() {
    const Complex c = coeffs_[k_];
    if (c != Complex{}) {
      for (Index x = 0; x < s_.size(); ++x) s_[x] += c * table_(k_, x);
    }
    ++k_;
  }

 private:
  CharacterTable table_;
  Spectrum coeffs_;
  GridFunction s_;
  Index k_ = 0;
};

void check_n(const GridFunction& f, Index n, const char* what) {
  if (n > f.size()) {
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) +
                     " exceeds M_N = " + std::to_string(f.size()));
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

std::string to_string(MeanMethod m) {
  switch (m) {
    case MeanMethod::direct: return "direct";
    case MeanMethod::abel: return "abel";
    case MeanMethod::convolution: return "convolution";
  }
  return "unknown";
}

MeanMethod parse_mean_method(std::string_view name) {
  if (name == "direct") return MeanMethod::direct;
  if (name == "abel") return MeanMethod::abel;
  if (name == "convolution") return MeanMethod::convolution;
  throw Error("unknown mean method '" + std::string(name) + "'");
}

GridFunction fejer_mean(const GridFunction& f, Index n) {
  check_n(f, n, "fejer_mean");
  GridFunction acc(f.spec());
  if (n == 0) return acc;
  PartialSumRun run(f);
  for (Index k = 1; k <= n; ++k) {
    run.advance();
    acc += run.current();
  }
  acc *= 1.0 / static_cast<double>(n);
  return acc;
}

GridFunction t_mean(const GridFunction& f, const WeightSequence& w, Index n,
                    MeanMethod method) {
  check_n(f, n, "t_mean");
  const double Qn = positive_Q(w, n, "t_mean");
  if (method == MeanMethod::convolution) {
    return convolve(f, t_kernel(w, n, f.spec()));
  }
  GridFunction acc(f.spec());
  PartialSumRun run(f);
  if (method == MeanMethod::direct) {
    for (Index k = 0; k < n; ++k) {
      add_scaled(acc, run.current(), w.q(k));
      run.advance();
    }
  } else {
    // (1/Q_n)(sum_{j=1}^{n-2} (q_j - q_{j+1}) j sigma_j f
    //         + q_{n-1} (n-1) sigma_{n-1} f)
    GridFunction sum_s(f.spec());
    for (Index j = 1; j + 1 <= n; ++j) {
      run.advance();
      sum_s += run.current();
      const double jj = static_cast<double>(j);
      const GridFunction sigma = sum_s * (1.0 / jj);
      if (j + 2 <= n) add_scaled(acc, sigma, (w.q(j) - w.q(j + 1)) * jj);
      if (j == n - 1) add_scaled(acc, sigma, w.q(n - 1) * jj);
    }
  }
  acc *= 1.0 / Qn;
  return acc;
}

GridFunction norlund_mean(const GridFunction& f, const WeightSequence& w,
                          Index n, MeanMethod method) {
  check_n(f, n, "norlund_mean");
  const double Qn = positive_Q(w, n, "norlund_mean");
  if (method == MeanMethod::convolution) {
    return convolve(f, norlund_kernel(w, n, f.spec()));
  }
  GridFunction acc(f.spec());
  PartialSumRun run(f);
  if (method == MeanMethod::direct) {
    for (Index k = 1; k <= n; ++k) {
      run.advance();
      add_scaled(acc, run.current(), w.q(n - k));
    }
  } else {
    // q_0 n sigma_n f + sum_{k=1}^{n-1} (q_{n-k} - q_{n-k-1}) k sigma_k f
    GridFunction sum_s(f.spec());
    for (Index k = 1; k <= n; ++k) {
      run.advance();
      sum_s += run.current();
      const double kk = static_cast<double>(k);
      const GridFunction sigma = sum_s * (1.0 / kk);
      if (k < n) {
        add_scaled(acc, sigma, (w.q(n - k) - w.q(n - k - 1)) * kk);
      } else {
        add_scaled(acc, sigma, w.q(0) * kk);
      }
    }
  }
  acc *= 1.0 / Qn;
  return acc;
}

MeanSpec MeanSpec::parse(std::string_view weights, std::optional<MeanForm> form) {
  WeightSequence w = WeightSequence::parse(weights);
  const MeanForm f = form.value_or(w.natural_form());
  return MeanSpec{std::move(w), f};
}

std::string MeanSpec::id() const {
  return (form == MeanForm::t ? "T:" : "N:") + weights.name();
}

GridFunction MeanSpec::apply(const GridFunction& f, Index n,
                             MeanMethod method) const {
  return form == MeanForm::t ? t_mean(f, weights, n, method)
                             : norlund_mean(f, weights, n, method);
}

NamedMean parse_named_mean(std::string_view name) {
  if (name == "fejer") return NamedMean::fejer;
  if (name == "cesaro") return NamedMean::cesaro;
  if (name == "inverse-cesaro") return NamedMean::inverse_cesaro;
  if (name == "v-alpha") return NamedMean::v_alpha;
  if (name == "riesz") return NamedMean::riesz;
  if (name == "norlund-log") return NamedMean::norlund_log;
  if (name == "b-alpha") return NamedMean::b_alpha;
  throw Error("unknown mean '" + std::string(name) + "'");
}

MeanSpec named_mean_spec(NamedMean name, double alpha) {
  switch (name) {
    case NamedMean::fejer:
      return {WeightSequence::make(WeightKind::constant), MeanForm::norlund};
    case NamedMean::cesaro:
      return {WeightSequence::make(WeightKind::cesaro, alpha), MeanForm::norlund};
    case NamedMean::inverse_cesaro:
      return {WeightSequence::make(WeightKind::inverse_cesaro, alpha),
              MeanForm::t};
    case NamedMean::v_alpha:
      return {WeightSequence::make(WeightKind::power, alpha), MeanForm::t};
    case NamedMean::riesz:
      return {WeightSequence::make(WeightKind::riesz_log), MeanForm::t};
    case NamedMean::norlund_log:
      return {WeightSequence::make(WeightKind::norlund_log), MeanForm::norlund};
    case NamedMean::b_alpha:
      return {WeightSequence::make(WeightKind::log_power, alpha), MeanForm::t};
  }
  throw Error("unknown mean");
}

GridFunction named_mean(NamedMean name, const GridFunction& f, Index n,
                        double alpha) {
  return named_mean_spec(name, alpha).apply(f, n);
}

std::size_t step_rank(const GridFunction& f, double tol) {
  const auto& spec = f.spec();
  for (std::size_t r = 0; r < spec.levels(); ++r) {
    const Index stride = spec.place(r);
    bool constant = true;
    for (Index x = stride; x < f.size() && constant; ++x) {
      constant = std::abs(f[x] - f[x % stride]) <= tol;
    }
    if (constant) return r;
  }
  return spec.levels();
}

double step_function_bound(const GridFunction& f, const WeightSequence& w,
                           Index n, std::size_t rank, double p) {
  const auto& spec = f.spec();
  if (rank > spec.levels()) throw RangeError("step bound: rank too large");
  const Index Mr = spec.place(rank);
  if (n < Mr) {
    throw RangeError("step bound: n = " + std::to_string(n) +
                     " is below M_r = " + std::to_string(Mr));
  }
  check_n(f, n, "step bound");
  const double Qn = positive_Q(w, n, "step bound");
  double worst = 0.0;
  PartialSumRun run(f);
  for (Index k = 0; k < Mr; ++k) {
    worst = std::max(worst, norm(run.current() - f, p));
    run.advance();
  }
  return w.Q(Mr) / Qn * worst;
}

double step_function_bound(const GridFunction& f, const MeanSpec& mean,
                           Index n, std::size_t rank, double p) {
  if (mean.form == MeanForm::t) {
    return step_function_bound(f, mean.weights, n, rank, p);
  }
  const auto& spec = f.spec();
  if (rank > spec.levels()) throw RangeError("step bound: rank too large");
  const Index Mr = spec.place(rank);
  if (n < Mr) {
    throw RangeError("step bound: n = " + std::to_string(n) +
                     " is below M_r = " + std::to_string(Mr));
  }
  check_n(f, n, "step bound");
  const double Qn = positive_Q(mean.weights, n, "step bound");
  double worst = 0.0, mass = 0.0;
  PartialSumRun run(f);
  for (Index k = 1; k < Mr; ++k) {
    run.advance();
    worst = std::max(worst, norm(run.current() - f, p));
    mass += mean.weights.q(n - k);
  }
  return mass / Qn * worst;
}

}  // namespace vilenkin
