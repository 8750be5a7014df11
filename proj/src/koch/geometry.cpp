#include "koch/geometry.hpp"

#include "koch/error.hpp"

namespace koch {

int orient(const Point& p, const Point& q, const Point& r) {
  const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det.sign();
}

Line dual_of_point(const Point& p) { return Line{p.x, p.y}; }

Point dual_of_line(const Line& l) { return Point{l.slope, l.offset}; }

Point intersect_lines(const Line& l1, const Line& l2) {
  if (l1.slope == l2.slope) {
    throw Error(ErrorCode::ParallelLines,
                "lines with equal slope " + l1.slope.to_string() +
                    " do not meet in a single point");
  }
  Rational x = (l1.offset - l2.offset) / (l1.slope - l2.slope);
  Rational y = l1.y_at(x);
  return Point{std::move(x), std::move(y)};
}

int point_side_of_line(const Point& p, const Line& l) {
  return (p.y - l.y_at(p.x)).sign();
}

bool segments_cross_properly(const Segment& s1, const Segment& s2) {
  const int o1 = orient(s1.a, s1.b, s2.a);
  const int o2 = orient(s1.a, s1.b, s2.b);
  const int o3 = orient(s2.a, s2.b, s1.a);
  const int o4 = orient(s2.a, s2.b, s1.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace koch
