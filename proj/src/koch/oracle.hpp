#pragma once

#include "koch/arrangement.hpp"
#include "koch/geometry.hpp"
#include "koch/projective.hpp"
#include "koch/report.hpp"

#include <string>
#include <vector>

// Brute-force face census that never touches the face-tracing code. Each
// open edge of each line is sampled at one witness point; the two faces on
// either side of the edge are named by the witness's sign vector with the
// edge's own line forced to +1 and -1.

namespace koch::oracle {

EuclideanCensus signvector_census(const std::vector<Line>& lines, int s = 0);

/// Projective histogram from the same sampled faces, merging each unbounded
/// face with the one carrying the negated sign vector.
ProjectiveCensus signvector_projective_census(const std::vector<Line>& lines,
                                              int s = 0);

/// Counts implied by C(n,2) simple vertices, checked on a census alone.
VerificationReport arrangement_identities(const EuclideanCensus& census);

/// Field-by-field differences; empty means equal.
std::vector<std::string> compare_census(const EuclideanCensus& a,
                                        const EuclideanCensus& b);

}  // namespace koch::oracle
