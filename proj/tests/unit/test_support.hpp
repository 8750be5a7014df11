#pragma once

#include "koch/geometry.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace koch::testing {

inline Point P(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

inline Point P(std::string_view x, std::string_view y) {
  return {Rational::parse(x), Rational::parse(y)};
}

inline Line L(std::int64_t slope, std::int64_t offset) {
  return {Rational(slope), Rational(offset)};
}

/// Small random rational in [-range, range] with denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, int range, int den) {
  std::uniform_int_distribution<int> d(1, den);
  const int q = d(rng);
  std::uniform_int_distribution<int> n(-range * q, range * q);
  return Rational(n(rng), q);
}

/// n lines with random small rational slopes and offsets, redrawn until the
/// arrangement is simple (distinct slopes, no three concurrent).
inline std::vector<Line> random_simple_lines(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<Line> lines;
    for (std::size_t i = 0; i < n; ++i) {
      lines.push_back({random_rational(rng, 3, 4), random_rational(rng, 3, 4)});
    }
    bool simple = true;
    for (std::size_t i = 0; i < n && simple; ++i)
      for (std::size_t j = i + 1; j < n && simple; ++j)
        simple = !(lines[i].slope == lines[j].slope);
    for (std::size_t i = 0; i < n && simple; ++i)
      for (std::size_t j = i + 1; j < n && simple; ++j) {
        const Point v = intersect_lines(lines[i], lines[j]);
        for (std::size_t k = j + 1; k < n && simple; ++k)
          simple = point_side_of_line(v, lines[k]) != 0;
      }
    if (simple) return lines;
  }
}

}  // namespace koch::testing
