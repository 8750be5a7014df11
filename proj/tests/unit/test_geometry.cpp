#include "koch/error.hpp"
#include "koch/geometry.hpp"
#include "unit/test_support.hpp"

#include <doctest.h>

#include <random>

using namespace koch;
using koch::testing::L;
using koch::testing::P;

namespace {

// Independent reference: homogeneous 3x3 determinant over int64, expanded
// along the first column.
int orient_int(std::int64_t px, std::int64_t py, std::int64_t qx, std::int64_t qy,
               std::int64_t rx, std::int64_t ry) {
  const std::int64_t det = (qx * ry - rx * qy) - (px * ry - rx * py) + (px * qy - qx * py);
  return (det > 0) - (det < 0);
}

}  // namespace

TEST_CASE("orient examples") {
  CHECK(orient(P(-1, 0), P(0, -1), P(1, 0)) == 1);
  CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
  CHECK(orient(P(-1, 0), P(1, 0), P(0, -1)) == -1);
}

TEST_CASE("property: orient matches an integer determinant and is antisymmetric") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-4, 4);  // small range makes collinear triples common
  int collinear = 0;
  for (int i = 0; i < 3000; ++i) {
    const int c[6] = {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const Point p = P(c[0], c[1]), q = P(c[2], c[3]), r = P(c[4], c[5]);
    const int o = orient(p, q, r);
    REQUIRE(o == orient_int(c[0], c[1], c[2], c[3], c[4], c[5]));
    CHECK(orient(q, p, r) == -o);
    CHECK(orient(p, r, q) == -o);
    CHECK(orient(r, q, p) == -o);
    CHECK(orient(q, r, p) == o);
    if (o == 0) ++collinear;
  }
  CHECK(collinear > 50);
}

TEST_CASE("duality maps points to lines and back") {
  CHECK(dual_of_point(P(-1, 0)) == L(-1, 0));  // y = -x
  CHECK(dual_of_point(P(0, -1)) == L(0, -1));  // y = 1
  CHECK(dual_of_point(P(1, 0)) == L(1, 0));    // y = x
  CHECK(dual_of_line(L(-1, 0)) == P(-1, 0));
  CHECK(dual_of_line(L(0, -1)) == P(0, -1));
  CHECK(dual_of_line(L(5, 7)) == P(5, 7));     // y = 5x - 7
}

TEST_CASE("intersect_lines") {
  CHECK(intersect_lines(L(-1, 0), L(0, -1)) == P(-1, 1));
  CHECK(intersect_lines(L(1, 0), L(0, -1)) == P(1, 1));
  try {
    (void)intersect_lines(L(1, 0), L(1, 1));
    FAIL("expected ParallelLines");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParallelLines);
  }
}

TEST_CASE("point_side_of_line") {
  CHECK(point_side_of_line(P(0, 0), L(0, -1)) == -1);
  CHECK(point_side_of_line(P(0, 2), L(0, -1)) == 1);
  CHECK(point_side_of_line(P(3, 3), L(1, 0)) == 0);
}

TEST_CASE("segments_cross_properly") {
  CHECK(segments_cross_properly({P(-1, 0), P(1, 0)}, {P(0, -1), P(0, 1)}));
  CHECK_FALSE(segments_cross_properly({P(-1, 0), P(1, 0)}, {P(1, 0), P(2, 1)}));
  CHECK_FALSE(segments_cross_properly({P(-1, 0), P(1, 0)}, {P(0, 1), P(2, 1)}));
  // T-junction and collinear overlap are not proper crossings.
  CHECK_FALSE(segments_cross_properly({P(-1, 0), P(1, 0)}, {P(0, 0), P(0, 1)}));
  CHECK_FALSE(segments_cross_properly({P(-1, 0), P(1, 0)}, {P(0, 0), P(2, 0)}));
}

TEST_CASE("property: duality preserves incidence and intersections lie on both lines") {
  std::mt19937_64 rng(1234);
  int incident = 0;
  for (int i = 0; i < 2000; ++i) {
    const Point p{testing::random_rational(rng, 3, 3), testing::random_rational(rng, 3, 3)};
    const Point q{testing::random_rational(rng, 3, 3), testing::random_rational(rng, 3, 3)};
    CHECK(dual_of_line(dual_of_point(p)) == p);
    const Line lp = dual_of_point(p);
    CHECK(dual_of_point(dual_of_line(lp)) == lp);
    const bool a = point_side_of_line(q, dual_of_point(p)) == 0;
    const bool b = point_side_of_line(p, dual_of_point(q)) == 0;
    CHECK(a == b);
    if (a) ++incident;
    if (!(p.x == q.x)) {
      const Point v = intersect_lines(dual_of_point(p), dual_of_point(q));
      CHECK(point_side_of_line(v, dual_of_point(p)) == 0);
      CHECK(point_side_of_line(v, dual_of_point(q)) == 0);
    }
  }
  CHECK(incident > 0);
}
