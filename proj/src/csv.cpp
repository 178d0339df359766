#include "vilenkin/csv.hpp"

#include <cmath>
#include <cstdio>

namespace vilenkin::csv {

std::string real(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 so output is byte-stable
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = line.find(',', pos);
    out.emplace_back(line.substr(pos, end == std::string_view::npos
                                          ? std::string_view::npos
                                          : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  for (auto& s : out) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  }
  return out;
}

}  // namespace vilenkin::csv
