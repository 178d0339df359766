#include "vilenkin/builtin.hpp"

#include <string>

#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"

namespace vilenkin {

namespace {

std::vector<int> args_of(std::string_view spec, std::string_view head,
                         std::size_t count) {
  const std::string_view rest = spec.substr(head.size() + 1);
  std::vector<int> args = parse_int_list(rest);
  if (args.size() != count) {
    throw Error("function '" + std::string(spec) + "': expected " +
                std::to_string(count) + " integer argument(s)");
  }
  for (const int a : args) {
    if (a < 0) throw Error("function '" + std::string(spec) + "': negative argument");
  }
  return args;
}

bool starts_with(std::string_view s, std::string_view head) {
  return s.size() > head.size() && s.substr(0, head.size()) == head &&
         s[head.size()] == ':';
}

}  // namespace

BuiltinFunction make_function(std::string_view spec, const GroupSpec& group) {
  if (spec == "constant") {
    GridFunction f(group);
    for (auto& v : f.values()) v = 1.0;
    return {std::move(f), 0};
  }
  if (starts_with(spec, "character")) {
    const auto k = static_cast<Index>(args_of(spec, "character", 1)[0]);
    if (k >= group.size()) {
      throw RangeError("function '" + std::string(spec) + "': index beyond M_N");
    }
    std::size_t rank = 0;
    while (group.place(rank) <= k) ++rank;
    return {character(group, k), rank};
  }
  if (starts_with(spec, "indicator")) {
    const auto a = args_of(spec, "indicator", 2);
    const auto rank = static_cast<std::size_t>(a[0]);
    if (rank > group.levels()) {
      throw RangeError("function '" + std::string(spec) + "': rank exceeds N");
    }
    const auto cell = static_cast<Index>(a[1]);
    if (cell >= group.place(rank)) {
      throw RangeError("function '" + std::string(spec) +
                       "': cell must be below M_rank");
    }
    GridFunction f(group);
    for (Index x = 0; x < group.size(); ++x) {
      f[x] = group.in_interval(x, cell, rank) ? 1.0 : 0.0;
    }
    return {std::move(f), rank};
  }
  if (starts_with(spec, "random")) {
    const auto a = args_of(spec, "random", 2);
    const auto rank = static_cast<std::size_t>(a[1]);
    if (rank > group.levels()) {
      throw RangeError("function '" + std::string(spec) + "': rank exceeds N");
    }
    SplitMix64 rng(static_cast<std::uint64_t>(a[0]));
    const Index cells = group.place(rank);
    std::vector<double> level(cells);
    for (auto& v : level) v = rng.symmetric();
    GridFunction f(group);
    for (Index x = 0; x < group.size(); ++x) f[x] = level[x % cells];
    return {std::move(f), rank};
  }
  throw Error("unknown function '" + std::string(spec) + "'");
}

GridFunction random_function(const GroupSpec& group, std::uint64_t seed) {
  SplitMix64 rng(seed);
  GridFunction f(group);
  for (auto& v : f.values()) {
    const double re = rng.symmetric();
    v = {re, rng.symmetric()};
  }
  return f;
}

}  // namespace vilenkin
