#pragma once

#include "koch/arrangement.hpp"
#include "koch/report.hpp"

#include <cstddef>
#include <vector>

namespace koch {

/// Two unbounded faces with opposite sign vectors; in the projective plane
/// they are the two halves of one face.
struct AntipodalPair {
  std::size_t face = 0;
  std::size_t antipode = 0;
  int face_edges = 0;
  int antipode_edges = 0;

  /// The two rays on each side fuse pairwise across the line at infinity.
  int merged_edges() const { return face_edges + antipode_edges - 2; }
};

/// Perfect matching on the 2n unbounded faces, one entry per pair with
/// face < antipode. Throws Error{MissingAntipode} if some negated sign
/// vector is not realised.
std::vector<AntipodalPair> antipodal_pairs(const Arrangement& arr);

struct ProjectiveCensus {
  int s = 0;
  int n = 0;
  Histogram histogram;
  std::vector<AntipodalPair> pairing;
};

ProjectiveCensus projective_census(const Arrangement& arr);

/// Projective pentagon count of K*_s when s = 1 or
/// s >= 3: 3 * 2^(s-1) - 3.
std::int64_t expected_projective_pentagons(int s);

VerificationReport verify_projective_census(const ProjectiveCensus& census);

}  // namespace koch
