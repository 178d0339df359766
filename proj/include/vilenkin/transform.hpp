#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// Complex samples indexed by Paley number over one group. `Tag` separates
/// grid values from spectral coefficients at the type level.
template <class Tag>
class Samples {
 public:
  explicit Samples(GroupSpec spec)
      : spec_(std::move(spec)), values_(spec_.size()) {}
  Samples(GroupSpec spec, std::vector<Complex> values);

  const GroupSpec& spec() const { return spec_; }
  Index size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  Complex operator[](Index i) const { return values_[i]; }
  Complex& operator[](Index i) { return values_[i]; }

  Samples& operator+=(const Samples& o);
  Samples& operator-=(const Samples& o);
  Samples& operator*=(Complex s);
  friend Samples operator+(Samples a, const Samples& b) { return a += b; }
  friend Samples operator-(Samples a, const Samples& b) { return a -= b; }
  friend Samples operator*(Samples a, Complex s) { return a *= s; }
  friend Samples operator*(Complex s, Samples a) { return a *= s; }

 private:
  GroupSpec spec_;
  std::vector<Complex> values_;
};

struct GridTag {};
struct SpectrumTag {};

/// f on the M_N rank-N cells of the grid.
using GridFunction = Samples<GridTag>;
/// Vilenkin-Fourier coefficients f^(0), ..., f^(M_N - 1).
using Spectrum = Samples<SpectrumTag>;

extern template class Samples<GridTag>;
extern template class Samples<SpectrumTag>;

/// Throws SpecMismatch when a and b live on different groups.
void check_same_group(const GroupSpec& a, const GroupSpec& b);

/// Haar integral: mean of the values.
Complex integral(const GridFunction& f);
/// Pointwise complex conjugate.
GridFunction conj(GridFunction f);
/// Pointwise product.
GridFunction multiply(const GridFunction& f, const GridFunction& g);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(const GroupSpec& spec, std::size_t k, const Element& x);

/// Evaluates Vilenkin characters psi_n(x) = prod_k r_k(x)^{n_k}.
///
/// The phase sum_k n_k x_k / m_k is accumulated exactly as an integer modulo
/// lcm(m_0, ..., m_{N-1}) and looked up in one table of roots of unity, so
/// psi_n(x) carries a single rounding regardless of N.
class CharacterTable {
 public:
  explicit CharacterTable(const GroupSpec& spec);
  Complex operator()(Index n, Index x) const;
  const GroupSpec& spec() const { return spec_; }

 private:
  GroupSpec spec_;
  std::size_t period_ = 0;  // 0 when the lcm is too large for a table
  std::vector<std::size_t> scale_;
  std::vector<Complex> roots_;
  std::vector<std::vector<Complex>> per_radix_;
};

Complex psi(const GroupSpec& spec, Index n, const Element& x);
/// psi_n sampled on the whole grid.
GridFunction character(const GroupSpec& spec, Index n);

enum class Method { naive, fast };

/// f^(n) = (1/M_N) sum_x f(x) conj(psi_n(x)).
///
/// `fast` runs one pass per coordinate k, applying length-m_k DFTs along
/// stride M_k: O(M_N * sum m_k). `naive` evaluates every character, O(M_N^2).
Spectrum forward(const GridFunction& f, Method method = Method::fast);
/// sum_n c_n psi_n, no normalization factor.
GridFunction inverse(const Spectrum& s, Method method = Method::fast);

/// S_n f = sum_{k<n} f^(k) psi_k; S_0 f = 0. Throws RangeError for n > M_N.
GridFunction partial_sum(const GridFunction& f, Index n);

/// (f * g)(x) = (1/M_N) sum_t f(x - t) g(t), evaluated by the double sum.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// ((1/M_N) sum |f|^p)^{1/p}, p >= 1; p = infinity gives the max.
double norm(const GridFunction& f, double p);
/// sup_lambda lambda * mu(|f| > lambda)^{1/p}, p > 0.
double weak_norm(const GridFunction& f, double p);

/// CSV with header "index,re,im".
void write_csv(std::ostream& out, const GridFunction& f);
void write_csv(std::ostream& out, const Spectrum& s);
GridFunction read_grid_csv(std::istream& in, const GroupSpec& spec);
Spectrum read_spectrum_csv(std::istream& in, const GroupSpec& spec);

}  // namespace vilenkin
