#include "vilenkin/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "vilenkin/error.hpp"

namespace vilenkin {

double cesaro_number(double alpha, Index n) {
  double a = 1.0;
  for (Index k = 1; k <= n; ++k) {
    a *= (alpha + static_cast<double>(k)) / static_cast<double>(k);
  }
  return a;
}

namespace {

bool has_alpha(WeightKind kind) {
  switch (kind) {
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro:
    case WeightKind::power:
    case WeightKind::log_power:
      return true;
    default:
      return false;
  }
}

std::string alpha_text(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", alpha);
  return buf;
}

}  // namespace

WeightSequence WeightSequence::make(WeightKind kind, double alpha,
                                    Index capacity) {
  if (kind == WeightKind::table) {
    throw Error("weights: use from_table for tabulated weights");
  }
  if (has_alpha(kind)) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw RangeError("weights: alpha must lie in (0, 1), got " +
                       alpha_text(alpha));
    }
  } else {
    alpha = 0.0;
  }
  WeightSequence w(kind, alpha);
  w.q_.resize(capacity);
  w.prefix_.resize(capacity + 1);
  w.prefix_[0] = 0.0;
  if (kind == WeightKind::cesaro || kind == WeightKind::inverse_cesaro) {
    // A_k^{alpha-1} by the recurrence A_k = A_{k-1} (beta + k) / k.
    const double beta = alpha - 1.0;
    double a = 1.0;
    for (Index k = 0; k < capacity; ++k) {
      if (k > 0) a *= (beta + static_cast<double>(k)) / static_cast<double>(k);
      w.q_[k] = a;
    }
  } else {
    for (Index k = 0; k < capacity; ++k) w.q_[k] = w.compute_q(k);
  }
  for (Index k = 0; k < capacity; ++k) w.prefix_[k + 1] = w.prefix_[k] + w.q_[k];
  return w;
}

WeightSequence WeightSequence::parse(std::string_view text, Index capacity) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  double alpha = 0.0;
  const bool has_arg = colon != std::string_view::npos;
  if (has_arg) {
    const std::string_view arg = text.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), alpha);
    if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size()) {
      throw Error("weights: cannot parse parameter in '" + std::string(text) +
                  "'");
    }
  }
  WeightKind kind;
  if (head == "constant") kind = WeightKind::constant;
  else if (head == "cesaro") kind = WeightKind::cesaro;
  else if (head == "icesaro") kind = WeightKind::inverse_cesaro;
  else if (head == "power") kind = WeightKind::power;
  else if (head == "riesz") kind = WeightKind::riesz_log;
  else if (head == "nlog") kind = WeightKind::norlund_log;
  else if (head == "logpow") kind = WeightKind::log_power;
  else throw Error("weights: unknown family '" + std::string(head) + "'");
  if (has_alpha(kind) != has_arg) {
    throw Error("weights: family '" + std::string(head) +
                (has_arg ? "' takes no parameter" : "' needs ':ALPHA'"));
  }
  return make(kind, alpha, capacity);
}

WeightSequence WeightSequence::from_table(std::vector<double> q) {
  if (q.empty()) throw Error("weights: empty table");
  WeightSequence w(WeightKind::table, 0.0);
  w.prefix_.assign(q.size() + 1, 0.0);
  for (Index k = 0; k < q.size(); ++k) {
    if (!(q[k] >= 0.0) || !std::isfinite(q[k])) {
      throw RangeError("weights: q_" + std::to_string(k) +
                       " must be finite and nonnegative");
    }
    w.prefix_[k + 1] = w.prefix_[k] + q[k];
  }
  w.q_ = std::move(q);
  return w;
}

MeanForm WeightSequence::natural_form() const {
  switch (kind_) {
    case WeightKind::cesaro:
    case WeightKind::norlund_log:
      return MeanForm::norlund;
    default:
      return MeanForm::t;
  }
}

std::string WeightSequence::name() const {
  switch (kind_) {
    case WeightKind::constant: return "constant";
    case WeightKind::cesaro: return "cesaro:" + alpha_text(alpha_);
    case WeightKind::inverse_cesaro: return "icesaro:" + alpha_text(alpha_);
    case WeightKind::power: return "power:" + alpha_text(alpha_);
    case WeightKind::riesz_log: return "riesz";
    case WeightKind::norlund_log: return "nlog";
    case WeightKind::log_power: return "logpow:" + alpha_text(alpha_);
    case WeightKind::table: return "table";
  }
  return "unknown";
}

double WeightSequence::compute_q(Index k) const {
  const double kk = static_cast<double>(k);
  switch (kind_) {
    case WeightKind::constant:
      return 1.0;
    case WeightKind::cesaro:
    case WeightKind::inverse_cesaro:
      return cesaro_number(alpha_ - 1.0, k);
    case WeightKind::power:
      return k == 0 ? 0.0 : std::pow(kk, alpha_ - 1.0);
    case WeightKind::riesz_log:
    case WeightKind::norlund_log:
      return k == 0 ? 0.0 : 1.0 / kk;
    case WeightKind::log_power:
      return std::pow(std::log(kk + 1.0), alpha_);
    case WeightKind::table:
      break;
  }
  throw RangeError("weights: index " + std::to_string(k) +
                   " beyond the supplied table");
}

double WeightSequence::q(Index k) const {
  if (k < q_.size()) return q_[k];
  return compute_q(k);
}

double WeightSequence::Q(Index n) const {
  if (n < prefix_.size()) return prefix_[n];
  double acc = prefix_.back();
  for (Index k = prefix_.size() - 1; k < n; ++k) acc += compute_q(k);
  return acc;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::both: return "both";
    case Monotonicity::non_increasing: return "non-increasing";
    case Monotonicity::non_decreasing: return "non-decreasing";
    case Monotonicity::neither: return "neither";
  }
  return "neither";
}

WeightClass classify(const WeightSequence& w, Index n_max) {
  if (n_max < 4) throw RangeError("classify: n_max must be at least 4");
  WeightClass out;
  out.n_max = n_max;
  const Index n0 = w.first_valid();

  bool up = true, down = true;
  for (Index k = n0 - 1; k + 1 < n_max; ++k) {
    const double a = w.q(k), b = w.q(k + 1);
    if (b > a) down = false;
    if (b < a) up = false;
  }
  out.monotonicity = up && down ? Monotonicity::both
                     : down     ? Monotonicity::non_increasing
                     : up       ? Monotonicity::non_decreasing
                                : Monotonicity::neither;

  out.cumulative.resize(n_max + 1);
  double acc = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    out.cumulative[n] = acc;
    if (n < n_max) acc += w.q(n);
  }

  const Index half = n_max / 2;
  double fn01_head = 0.0, fn01_tail = 0.0, fn011_head = 0.0, fn011_tail = 0.0;
  const double q0 = w.q(0);
  for (Index n = n0; n <= n_max; ++n) {
    const double Qn = out.cumulative[n];
    const double nn = static_cast<double>(n);
    const double a = nn * w.q(n - 1) / Qn;
    const double b = nn * q0 / Qn;
    if (n <= half) {
      fn01_head = std::max(fn01_head, a);
      fn011_head = std::max(fn011_head, b);
    } else {
      fn01_tail = std::max(fn01_tail, a);
      fn011_tail = std::max(fn011_tail, b);
    }
  }
  out.fn01_sup = std::max(fn01_head, fn01_tail);
  out.fn011_sup = std::max(fn011_head, fn011_tail);
  out.fn01_bounded = fn01_tail <= kBoundedSlack * fn01_head;
  out.fn011_bounded = fn011_tail <= kBoundedSlack * fn011_head;
  out.growth_ratio = out.cumulative[n_max] / out.cumulative[half];
  out.regular = out.growth_ratio > kRegularGrowth;
  return out;
}

bool domination_gate(const WeightClass& c) {
  return (c.non_increasing() && c.fn011_bounded) ||
         (c.non_decreasing() && c.fn01_bounded);
}

bool convergence_gate(const WeightClass& c) {
  return c.non_increasing() || (c.non_decreasing() && c.fn01_bounded);
}

bool block_gate(const WeightClass& c) { return c.non_decreasing(); }

}  // namespace vilenkin
