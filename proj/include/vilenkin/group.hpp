#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

using Index = std::size_t;

/// Finite-resolution model of a bounded Vilenkin group G_m.
///
/// The group is truncated after `levels()` coordinates, so every point is a
/// digit vector (x_0, ..., x_{N-1}) with x_j in Z_{m_j}. Points and characters
/// are both enumerated in Paley order: index = sum x_j * M_j, coordinate 0 is
/// the lowest-order digit. With that order the interval I_n(x) is the
/// arithmetic progression {index(x) mod M_n + k * M_n}.
class GroupSpec {
 public:
  /// Builds the group whose k-th radix is `pattern[k % pattern.size()]`,
  /// truncated at `levels` coordinates. Throws SizeError on a radix below 2,
  /// zero levels, an empty pattern, or an M_N that overflows.
  static GroupSpec make(std::span<const int> pattern, std::size_t levels);
  static GroupSpec make(std::span<const int> radices) {
    return make(radices, radices.size());
  }

  std::size_t levels() const { return radices_.size(); }
  /// M_N, the number of grid cells.
  Index size() const { return places_.back(); }
  int radix(std::size_t k) const { return radices_[k]; }
  /// M_k for 0 <= k <= N.
  Index place(std::size_t k) const { return places_[k]; }
  std::span<const int> radices() const { return radices_; }
  std::span<const Index> places() const { return places_; }
  int max_radix() const;

  /// Digit n_k of n in the mixed-radix system.
  int digit(Index n, std::size_t k) const {
    return static_cast<int>((n / places_[k]) % static_cast<Index>(radices_[k]));
  }
  std::vector<int> digits(Index n) const;
  Index index_of(std::span<const int> digits) const;

  /// |n|: position of the highest nonzero digit (0 for n = 0).
  std::size_t order(Index n) const;

  /// Coordinatewise sum / difference of two grid indices.
  Index add(Index a, Index b) const;
  Index subtract(Index a, Index b) const;

  /// Indices of I_n(x), in increasing order. Throws RangeError for n > N.
  std::vector<Index> interval(Index x, std::size_t rank) const;
  bool in_interval(Index t, Index x, std::size_t rank) const {
    return t % places_[rank] == x % places_[rank];
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec() = default;
  std::vector<int> radices_;
  std::vector<Index> places_;
};

/// A point of G_m at resolution N, stored as its digit vector.
class Element {
 public:
  /// Throws RangeError unless digits has N entries with 0 <= d_j < m_j.
  Element(const GroupSpec& spec, std::vector<int> digits);
  static Element from_index(const GroupSpec& spec, Index n);
  static Element zero(const GroupSpec& spec);
  /// e_s: the unit digit vector at coordinate s.
  static Element generator(const GroupSpec& spec, std::size_t s);

  std::span<const int> digits() const { return digits_; }
  int operator[](std::size_t j) const { return digits_[j]; }
  std::size_t size() const { return digits_.size(); }
  Index index(const GroupSpec& spec) const { return spec.index_of(digits_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  explicit Element(std::vector<int> digits) : digits_(std::move(digits)) {}
  std::vector<int> digits_;
};

Element add(const GroupSpec& spec, const Element& x, const Element& y);
Element subtract(const GroupSpec& spec, const Element& x, const Element& y);

/// Throws SpecMismatch unless x has N digits, each within its radix.
void check_conforms(const GroupSpec& spec, const Element& x);

/// Parses "2,3,2" style integer lists; throws Error with the offending token.
std::vector<int> parse_int_list(std::string_view text);
/// "1,0,1"
std::string format_digits(std::span<const int> digits);

}  // namespace vilenkin
