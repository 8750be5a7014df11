#pragma once

#include "koch/chain.hpp"
#include "koch/geometry.hpp"
#include "koch/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koch {

enum class FaceKind {
  Bounded,
  TopUnbounded,     // above every line
  BottomUnbounded,  // below every line
  LeftUnbounded,
  RightUnbounded,
};

const char* to_string(FaceKind kind) noexcept;

struct Face {
  /// Side of the face w.r.t. each line: +1 above, -1 below.
  std::vector<std::int8_t> sign_vector;
  /// Segments and rays on the boundary; clip-box edges never count.
  int edge_count = 0;
  FaceKind kind = FaceKind::Bounded;
  /// Arrangement vertex ids met along the boundary, in CCW order.
  std::vector<std::size_t> corners;
  /// Lines contributing a ray to this face.
  std::vector<std::size_t> ray_lines;
};

/// A simple arrangement of non-vertical lines, realised as a planar
/// subdivision clipped to the square [-M, M]^2.
struct Arrangement {
  int s = 0;  // Koch iteration the lines came from, 0 if unknown
  std::vector<Line> lines;
  /// One vertex per line pair (i, j), i < j, in lexicographic pair order.
  std::vector<Point> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> vertex_lines;
  /// For every line, the ids of its vertices sorted by x.
  std::vector<std::vector<std::size_t>> per_line_order;
  Rational clip_half_width;
  std::vector<Face> faces;

  std::size_t edge_count() const;
};

/// Line i is the dual of p_i. Throws Error{DuplicateSlope} if two points
/// share an x-coordinate.
std::vector<Line> dualize_chain(const Chain& chain);

struct BuildOptions {
  /// Overrides the default clip half-width 2 * max|coord| + 1. Must still
  /// contain every vertex strictly inside.
  std::optional<Rational> clip_half_width;
};

/// Needs at least two lines with pairwise distinct slopes. Throws
/// Error{ConcurrentLines} if three lines pass through one point.
Arrangement build_arrangement(std::vector<Line> lines,
                              const BuildOptions& options = {});

/// Convenience: dualize, then build, recording s.
Arrangement build_dual_arrangement(const Chain& chain,
                                   const BuildOptions& options = {});

using Histogram = std::map<int, std::int64_t>;

struct EuclideanCensus {
  int s = 0;
  int n = 0;
  Histogram bounded;
  int top_edges = 0;
  int bottom_edges = 0;
  Histogram left;
  Histogram right;

  friend bool operator==(const EuclideanCensus&,
                         const EuclideanCensus&) = default;
};

EuclideanCensus euclidean_census(const Arrangement& arr);

/// Bounded pentagons of K*_s: 3 * 2^(s-1) - 2s - 1.
std::int64_t expected_bounded_pentagons(int s);

/// One named check per face category of the expected census, plus the
/// overall face-size bound.
VerificationReport verify_face_census(const EuclideanCensus& census);

/// True iff N_s = 2 N_{s-1} + 1 + 2(s - 2) for every consecutive pair.
/// Censuses must be ordered by s with consecutive values.
bool pentagon_recurrence_check(const std::vector<EuclideanCensus>& censuses);

/// Closed-form counts every simple arrangement satisfies, measured on the
/// built structure itself (vertices, edges, faces, degree sum).
VerificationReport arrangement_structure_report(const Arrangement& arr);

}  // namespace koch
