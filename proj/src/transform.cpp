#include "vilenkin/transform.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "vilenkin/csv.hpp"
#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

constexpr std::size_t kMaxRootPeriod = std::size_t{1} << 20;

// exp(2 pi i j / m), exact at multiples of a quarter turn.
Complex unit_root(std::size_t j, std::size_t m) {
  j %= m;
  if ((4 * j) % m == 0) {
    switch (4 * j / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(j) /
                            static_cast<long double>(m);
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

std::vector<Complex> root_table(std::size_t m) {
  std::vector<Complex> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = unit_root(j, m);
  return out;
}

// In-place length-m DFT on x[0], x[stride], ..., x[(m-1)*stride].
// roots[j] = exp(sign * 2 pi i j / m). Fixed summation order.
void small_dft(Complex* x, Index stride, std::size_t m,
               const std::vector<Complex>& roots, std::vector<Complex>& scratch) {
  if (m == 2) {
    const Complex a = x[0], b = x[stride];
    x[0] = a + b;
    x[stride] = a - b;
    return;
  }
  for (std::size_t j = 0; j < m; ++j) scratch[j] = x[j * stride];
  for (std::size_t a = 0; a < m; ++a) {
    Complex acc = scratch[0];
    std::size_t e = 0;
    for (std::size_t b = 1; b < m; ++b) {
      e += a;
      if (e >= m) e -= m;
      acc += scratch[b] * roots[e];
    }
    x[a * stride] = acc;
  }
}

void fast_pass(const GroupSpec& spec, std::span<Complex> data, bool analysis) {
  const std::size_t n_levels = spec.levels();
  std::vector<Complex> scratch(static_cast<std::size_t>(spec.max_radix()));
  std::vector<std::vector<Complex>> tables(
      static_cast<std::size_t>(spec.max_radix()) + 1);
  for (std::size_t k = 0; k < n_levels; ++k) {
    const auto m = static_cast<std::size_t>(spec.radix(k));
    auto& roots = tables[m];
    if (roots.empty()) {
      roots = root_table(m);
      if (analysis) {
        for (auto& r : roots) r = std::conj(r);
      }
    }
    const Index stride = spec.place(k);
    const Index block = spec.place(k + 1);
    for (Index base = 0; base < data.size(); base += block) {
      for (Index off = 0; off < stride; ++off) {
        small_dft(data.data() + base + off, stride, m, roots, scratch);
      }
    }
  }
}

std::string csv_header_error(const std::string& what) {
  return "csv: " + what;
}

template <class S>
void write_samples(std::ostream& out, const S& s) {
  out << "index,re,im\n";
  for (Index i = 0; i < s.size(); ++i) {
    out << i << ',' << csv::real(s[i].real()) << ',' << csv::real(s[i].imag())
        << '\n';
  }
}

std::vector<Complex> read_samples(std::istream& in, const GroupSpec& spec) {
  std::string line;
  if (!std::getline(in, line)) throw Error(csv_header_error("empty input"));
  if (csv::split(line) != std::vector<std::string>{"index", "re", "im"}) {
    throw Error(csv_header_error("expected header 'index,re,im'"));
  }
  std::vector<Complex> values(spec.size());
  std::vector<bool> seen(spec.size(), false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = csv::split(line);
    if (cells.size() != 3) {
      throw Error(csv_header_error("line " + std::to_string(line_no) +
                                   ": expected 3 fields"));
    }
    try {
      const auto idx = static_cast<Index>(std::stoull(cells[0]));
      if (idx >= spec.size() || seen[idx]) {
        throw Error(csv_header_error("line " + std::to_string(line_no) +
                                     ": bad or repeated index"));
      }
      seen[idx] = true;
      values[idx] = {std::stod(cells[1]), std::stod(cells[2])};
    } catch (const std::logic_error&) {
      throw Error(csv_header_error("line " + std::to_string(line_no) +
                                   ": not a number"));
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(csv_header_error("expected " + std::to_string(spec.size()) +
                                 " rows"));
  }
  return values;
}

}  // namespace

template <class Tag>
Samples<Tag>::Samples(GroupSpec spec, std::vector<Complex> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.size() != spec_.size()) {
    throw SpecMismatch("samples: expected " + std::to_string(spec_.size()) +
                       " values, got " + std::to_string(values_.size()));
  }
}

template <class Tag>
Samples<Tag>& Samples<Tag>::operator+=(const Samples& o) {
  check_same_group(spec_, o.spec_);
  for (Index i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

template <class Tag>
Samples<Tag>& Samples<Tag>::operator-=(const Samples& o) {
  check_same_group(spec_, o.spec_);
  for (Index i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

template <class Tag>
Samples<Tag>& Samples<Tag>::operator*=(Complex s) {
  for (auto& v : values_) v *= s;
  return *this;
}

template class Samples<GridTag>;
template class Samples<SpectrumTag>;

void check_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) throw SpecMismatch("operands are defined on different groups");
}

Complex integral(const GridFunction& f) {
  Complex acc{};
  for (const auto v : f.values()) acc += v;
  return acc / static_cast<double>(f.size());
}

GridFunction conj(GridFunction f) {
  for (auto& v : f.values()) v = std::conj(v);
  return f;
}

GridFunction multiply(const GridFunction& f, const GridFunction& g) {
  check_same_group(f.spec(), g.spec());
  GridFunction out(f.spec());
  for (Index i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw SpecMismatch("max_abs_diff: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

Complex rademacher(const GroupSpec& spec, std::size_t k, const Element& x) {
  if (k >= spec.levels()) {
    throw RangeError("rademacher: coordinate " + std::to_string(k) +
                     " outside [0, " + std::to_string(spec.levels()) + ")");
  }
  check_conforms(spec, x);
  return unit_root(static_cast<std::size_t>(x[k]),
                   static_cast<std::size_t>(spec.radix(k)));
}

CharacterTable::CharacterTable(const GroupSpec& spec) : spec_(spec) {
  std::size_t period = 1;
  for (const int m : spec.radices()) {
    period = std::lcm(period, static_cast<std::size_t>(m));
    if (period > kMaxRootPeriod) {
      period = 0;
      break;
    }
  }
  period_ = period;
  if (period_ != 0) {
    roots_ = root_table(period_);
    for (const int m : spec.radices()) {
      scale_.push_back(period_ / static_cast<std::size_t>(m));
    }
  } else {
    per_radix_.resize(static_cast<std::size_t>(spec.max_radix()) + 1);
    for (const int m : spec.radices()) {
      auto& t = per_radix_[static_cast<std::size_t>(m)];
      if (t.empty()) t = root_table(static_cast<std::size_t>(m));
    }
  }
}

Complex CharacterTable::operator()(Index n, Index x) const {
  if (period_ != 0) {
    std::size_t phase = 0;
    for (std::size_t k = 0; k < spec_.levels(); ++k) {
      const auto m = static_cast<Index>(spec_.radix(k));
      phase += ((n % m) * (x % m) % m) * scale_[k];
      n /= m;
      x /= m;
    }
    return roots_[phase % period_];
  }
  Complex acc{1.0, 0.0};
  for (std::size_t k = 0; k < spec_.levels(); ++k) {
    const auto m = static_cast<Index>(spec_.radix(k));
    acc *= per_radix_[m][(n % m) * (x % m) % m];
    n /= m;
    x /= m;
  }
  return acc;
}

Complex psi(const GroupSpec& spec, Index n, const Element& x) {
  if (n >= spec.size()) {
    throw RangeError("psi: n = " + std::to_string(n) + " outside [0, " +
                     std::to_string(spec.size()) + ")");
  }
  check_conforms(spec, x);
  return CharacterTable(spec)(n, x.index(spec));
}

GridFunction character(const GroupSpec& spec, Index n) {
  if (n >= spec.size()) {
    throw RangeError("character: n = " + std::to_string(n) +
                     " outside [0, " + std::to_string(spec.size()) + ")");
  }
  const CharacterTable table(spec);
  GridFunction out(spec);
  for (Index x = 0; x < spec.size(); ++x) out[x] = table(n, x);
  return out;
}

Spectrum forward(const GridFunction& f, Method method) {
  const auto& spec = f.spec();
  const double scale = 1.0 / static_cast<double>(spec.size());
  if (method == Method::naive) {
    const CharacterTable table(spec);
    Spectrum out(spec);
    for (Index n = 0; n < spec.size(); ++n) {
      Complex acc{};
      for (Index x = 0; x < spec.size(); ++x) {
        acc += f[x] * std::conj(table(n, x));
      }
      out[n] = acc * scale;
    }
    return out;
  }
  std::vector<Complex> data(f.values().begin(), f.values().end());
  fast_pass(spec, data, /*analysis=*/true);
  for (auto& v : data) v *= scale;
  return Spectrum(spec, std::move(data));
}

GridFunction inverse(const Spectrum& s, Method method) {
  const auto& spec = s.spec();
  if (method == Method::naive) {
    const CharacterTable table(spec);
    GridFunction out(spec);
    for (Index x = 0; x < spec.size(); ++x) {
      Complex acc{};
      for (Index n = 0; n < spec.size(); ++n) acc += s[n] * table(n, x);
      out[x] = acc;
    }
    return out;
  }
  std::vector<Complex> data(s.values().begin(), s.values().end());
  fast_pass(spec, data, /*analysis=*/false);
  return GridFunction(spec, std::move(data));
}

GridFunction partial_sum(const GridFunction& f, Index n) {
  if (n > f.size()) {
    throw RangeError("partial_sum: n = " + std::to_string(n) +
                     " exceeds M_N = " + std::to_string(f.size()));
  }
  Spectrum s = forward(f);
  for (Index k = n; k < s.size(); ++k) s[k] = 0.0;
  return inverse(s);
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  check_same_group(f.spec(), g.spec());
  const auto& spec = f.spec();
  const Index size = spec.size();
  // Digit tables turn x - t into a per-coordinate lookup.
  std::vector<std::vector<int>> digits(size);
  for (Index i = 0; i < size; ++i) digits[i] = spec.digits(i);
  GridFunction out(spec);
  for (Index x = 0; x < size; ++x) {
    Complex acc{};
    for (Index t = 0; t < size; ++t) {
      Index diff = 0;
      for (std::size_t k = 0; k < spec.levels(); ++k) {
        const int m = spec.radix(k);
        const int d = digits[x][k] - digits[t][k];
        diff += static_cast<Index>(d < 0 ? d + m : d) * spec.place(k);
      }
      acc += f[diff] * g[t];
    }
    out[x] = acc / static_cast<double>(size);
  }
  return out;
}

double norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) {
    throw RangeError("norm: exponent must be >= 1, got " + std::to_string(p));
  }
  if (std::isinf(p)) {
    double worst = 0.0;
    for (const auto v : f.values()) worst = std::max(worst, std::abs(v));
    return worst;
  }
  double acc = 0.0;
  for (const auto v : f.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

double weak_norm(const GridFunction& f, double p) {
  if (!(p > 0.0)) {
    throw RangeError("weak_norm: exponent must be > 0, got " +
                     std::to_string(p));
  }
  std::vector<double> mags;
  mags.reserve(f.size());
  for (const auto v : f.values()) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  // Walking values in decreasing order, mu(|f| >= v) is the count so far;
  // lambda -> v from below realises the supremum.
  double best = 0.0;
  const double total = static_cast<double>(mags.size());
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] <= 0.0) break;
    if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;
    const double measure = static_cast<double>(i + 1) / total;
    best = std::max(best, mags[i] * std::pow(measure, 1.0 / p));
  }
  return best;
}

void write_csv(std::ostream& out, const GridFunction& f) { write_samples(out, f); }
void write_csv(std::ostream& out, const Spectrum& s) { write_samples(out, s); }

GridFunction read_grid_csv(std::istream& in, const GroupSpec& spec) {
  return GridFunction(spec, read_samples(in, spec));
}

Spectrum read_spectrum_csv(std::istream& in, const GroupSpec& spec) {
  return Spectrum(spec, read_samples(in, spec));
}

}  // namespace vilenkin
