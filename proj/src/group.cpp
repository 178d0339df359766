#include "vilenkin/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {
// Grid sizes beyond this are useless in memory anyway and keep index
// arithmetic (a + b, a * m) far away from wraparound.
constexpr Index kMaxGridSize = Index{1} << 40;
}  // namespace

GroupSpec GroupSpec::make(std::span<const int> pattern, std::size_t levels) {
  if (pattern.empty()) throw SizeError("group: empty radix list");
  if (levels == 0) throw SizeError("group: resolution must be at least 1");
  GroupSpec spec;
  spec.radices_.reserve(levels);
  spec.places_.reserve(levels + 1);
  spec.places_.push_back(1);
  for (std::size_t k = 0; k < levels; ++k) {
    const int m = pattern[k % pattern.size()];
    if (m < 2) {
      throw SizeError("group: radix m_" + std::to_string(k) + " = " +
                      std::to_string(m) + " is less than 2");
    }
    const Index prev = spec.places_.back();
    if (prev > kMaxGridSize / static_cast<Index>(m)) {
      throw SizeError("group: M_N overflows at level " + std::to_string(k + 1));
    }
    spec.radices_.push_back(m);
    spec.places_.push_back(prev * static_cast<Index>(m));
  }
  return spec;
}

int GroupSpec::max_radix() const {
  return *std::max_element(radices_.begin(), radices_.end());
}

std::vector<int> GroupSpec::digits(Index n) const {
  if (n >= size()) {
    throw RangeError("digits: n = " + std::to_string(n) + " outside [0, " +
                     std::to_string(size()) + ")");
  }
  std::vector<int> out(levels());
  for (std::size_t k = 0; k < levels(); ++k) {
    out[k] = static_cast<int>(n % static_cast<Index>(radices_[k]));
    n /= static_cast<Index>(radices_[k]);
  }
  return out;
}

Index GroupSpec::index_of(std::span<const int> digits) const {
  if (digits.size() != levels()) {
    throw SpecMismatch("index_of: expected " + std::to_string(levels()) +
                       " digits, got " + std::to_string(digits.size()));
  }
  Index n = 0;
  for (std::size_t k = 0; k < levels(); ++k) {
    if (digits[k] < 0 || digits[k] >= radices_[k]) {
      throw RangeError("index_of: digit " + std::to_string(k) + " = " +
                       std::to_string(digits[k]) + " outside Z_" +
                       std::to_string(radices_[k]));
    }
    n += static_cast<Index>(digits[k]) * places_[k];
  }
  return n;
}

std::size_t GroupSpec::order(Index n) const {
  std::size_t top = 0;
  for (std::size_t k = 0; k < levels(); ++k) {
    if (digit(n, k) != 0) top = k;
  }
  return top;
}

Index GroupSpec::add(Index a, Index b) const {
  Index out = 0;
  for (std::size_t k = 0; k < levels(); ++k) {
    const auto m = static_cast<Index>(radices_[k]);
    out += ((a % m + b % m) % m) * places_[k];
    a /= m;
    b /= m;
  }
  return out;
}

Index GroupSpec::subtract(Index a, Index b) const {
  Index out = 0;
  for (std::size_t k = 0; k < levels(); ++k) {
    const auto m = static_cast<Index>(radices_[k]);
    out += ((a % m + m - b % m) % m) * places_[k];
    a /= m;
    b /= m;
  }
  return out;
}

std::vector<Index> GroupSpec::interval(Index x, std::size_t rank) const {
  if (rank > levels()) {
    throw RangeError("interval: rank " + std::to_string(rank) +
                     " exceeds resolution " + std::to_string(levels()));
  }
  if (x >= size()) throw RangeError("interval: point index out of range");
  const Index stride = places_[rank];
  std::vector<Index> out;
  out.reserve(size() / stride);
  for (Index t = x % stride; t < size(); t += stride) out.push_back(t);
  return out;
}

void check_conforms(const GroupSpec& spec, const Element& x) {
  if (x.size() != spec.levels()) {
    throw SpecMismatch("element has " + std::to_string(x.size()) +
                       " digits, group has " + std::to_string(spec.levels()) +
                       " levels");
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || x[j] >= spec.radix(j)) {
      throw SpecMismatch("element digit " + std::to_string(j) +
                         " outside Z_" + std::to_string(spec.radix(j)));
    }
  }
}

Element::Element(const GroupSpec& spec, std::vector<int> digits)
    : digits_(std::move(digits)) {
  if (digits_.size() != spec.levels()) {
    throw RangeError("element: expected " + std::to_string(spec.levels()) +
                     " digits, got " + std::to_string(digits_.size()));
  }
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (digits_[j] < 0 || digits_[j] >= spec.radix(j)) {
      throw RangeError("element: digit " + std::to_string(j) + " = " +
                       std::to_string(digits_[j]) + " outside Z_" +
                       std::to_string(spec.radix(j)));
    }
  }
}

Element Element::from_index(const GroupSpec& spec, Index n) {
  return Element(spec.digits(n));
}

Element Element::zero(const GroupSpec& spec) {
  return Element(std::vector<int>(spec.levels(), 0));
}

Element Element::generator(const GroupSpec& spec, std::size_t s) {
  if (s >= spec.levels()) {
    throw RangeError("generator: coordinate " + std::to_string(s) +
                     " outside [0, " + std::to_string(spec.levels()) + ")");
  }
  std::vector<int> d(spec.levels(), 0);
  d[s] = 1;
  return Element(std::move(d));
}

Element add(const GroupSpec& spec, const Element& x, const Element& y) {
  check_conforms(spec, x);
  check_conforms(spec, y);
  std::vector<int> d(spec.levels());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j] = (x[j] + y[j]) % spec.radix(j);
  }
  return Element(spec, std::move(d));
}

Element subtract(const GroupSpec& spec, const Element& x, const Element& y) {
  check_conforms(spec, x);
  check_conforms(spec, y);
  std::vector<int> d(spec.levels());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j] = (x[j] - y[j] + spec.radix(j)) % spec.radix(j);
  }
  return Element(spec, std::move(d));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error("cannot parse integer list '" + std::string(text) +
                  "' at token '" + std::string(tok) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string format_digits(std::span<const int> digits) {
  std::string out;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(digits[j]);
  }
  return out;
}

}  // namespace vilenkin
