#pragma once

#include "koch/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace koch {

/// The Koch chain K_s: 2^s + 1 points stored in x order. Logical indices run
/// from -2^(s-1) to +2^(s-1); position 0 in `points` is the leftmost point.
struct Chain {
  int s = 0;
  std::vector<Point> points;
  /// Accepted flattening exponent k (factor 2^-k) for levels 2 .. s.
  std::vector<int> flatten_exponents;

  std::int64_t half_width() const {
    return static_cast<std::int64_t>(points.size() / 2);
  }
  std::int64_t logical_index(std::size_t position) const {
    return static_cast<std::int64_t>(position) - half_width();
  }
  std::size_t position(std::int64_t logical) const {
    return static_cast<std::size_t>(logical + half_width());
  }
  const Point& at(std::int64_t logical) const {
    return points.at(position(logical));
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Similarities with reflection that carry the baseline (-1,0)-(1,0) onto the
/// left and right legs of the triangle (-1,0), (0,-1), (1,0). Points below
/// the baseline land inside the triangle.
Point map_left(const Point& p);
Point map_right(const Point& p);

struct GenerateOptions {
  /// When set, one exponent per level 2 .. s is used verbatim instead of
  /// searching. Each level is still validated.
  std::optional<std::vector<int>> override_exponents;
  /// Largest exponent tried before giving up with FlatteningDivergence.
  int max_exponent = 64;
};

/// Builds K_s level by level, choosing for each level the smallest k such
/// that the copies flattened by 2^-k pass every validity check.
Chain generate_chain(int s, const GenerateOptions& options = {});

/// One witness of a failed validity check, in logical indices.
struct Violation {
  std::string check;
  std::vector<std::int64_t> indices;
};

struct ChainValidity {
  bool x_monotone = true;
  bool general_position = true;
  bool upper_shadow_ok = true;
  bool consecutive_edges_uncrossed = true;
  std::vector<Violation> violations;

  bool valid() const {
    return x_monotone && general_position && upper_shadow_ok &&
           consecutive_edges_uncrossed && violations.empty();
  }
};

struct ValidateOptions {
  /// Witnesses kept per check; the flags are exact regardless.
  std::size_t max_witnesses_per_check = 64;
};

ChainValidity validate_chain(const Chain& chain,
                             const ValidateOptions& options = {});

/// Orientation signs of every point triple of a chain.
class Chirotope {
 public:
  Chirotope(int s, std::size_t n, std::vector<std::int8_t> table)
      : s_(s), n_(n), table_(std::move(table)) {}

  int s() const { return s_; }
  std::size_t size() const { return n_; }

  /// Sign for three distinct positions in any order.
  int sign(std::size_t i, std::size_t j, std::size_t k) const;
  /// Same, addressed by logical index.
  int at(std::int64_t i, std::int64_t j, std::int64_t k) const;

  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  int s_;
  std::size_t n_;
  std::vector<std::int8_t> table_;  // n^3, filled for i < j < k
};

/// Throws Error{DegenerateTriple} if any triple is collinear.
Chirotope chirotope(const Chain& chain);

/// Orientation of every sorted triple of `points`, computed over a common
/// integer frame (all coordinates scaled by the lcm of their denominators).
/// Entry (i, j, k) with i < j < k lives at i*n*n + j*n + k.
std::vector<std::int8_t> orientation_table(const std::vector<Point>& points);

}  // namespace koch
