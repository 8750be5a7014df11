#pragma once

#include "koch/rational.hpp"

namespace koch {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Non-vertical line y = slope * x - offset. The sign convention on the
/// offset makes the point (a, b) and the line y = a x - b duals of each
/// other.
struct Line {
  Rational slope;
  Rational offset;

  friend bool operator==(const Line&, const Line&) = default;

  Rational y_at(const Rational& x) const { return slope * x - offset; }
};

struct Segment {
  Point a;
  Point b;
};

/// Sign of det[q - p, r - p]: +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

Line dual_of_point(const Point& p);
Point dual_of_line(const Line& l);

/// Throws Error{ParallelLines} when the slopes coincide.
Point intersect_lines(const Line& l1, const Line& l2);

/// +1 when p lies strictly above l, -1 strictly below, 0 on it.
int point_side_of_line(const Point& p, const Line& l);

/// True iff the open segments meet in exactly one point. Touching at an
/// endpoint and collinear overlap are not proper crossings.
bool segments_cross_properly(const Segment& s1, const Segment& s2);

/// Mirror image under (x, y) -> (-x, y).
inline Point mirror_x(const Point& p) { return {-p.x, p.y}; }

}  // namespace koch
