#include "koch/arrangement.hpp"

#include "koch/error.hpp"

#include <algorithm>
#include <numeric>

namespace koch {

const char* to_string(FaceKind kind) noexcept {
  switch (kind) {
    case FaceKind::Bounded: return "bounded";
    case FaceKind::TopUnbounded: return "top";
    case FaceKind::BottomUnbounded: return "bottom";
    case FaceKind::LeftUnbounded: return "left";
    case FaceKind::RightUnbounded: return "right";
  }
  return "unknown";
}

std::size_t Arrangement::edge_count() const {
  std::size_t total = 0;
  for (const auto& order : per_line_order) total += order.size() + 1;
  return total;
}

std::vector<Line> dualize_chain(const Chain& chain) {
  std::vector<Line> lines;
  lines.reserve(chain.points.size());
  for (const auto& p : chain.points) lines.push_back(dual_of_point(p));
  std::vector<Rational> slopes;
  for (const auto& l : lines) slopes.push_back(l.slope);
  std::sort(slopes.begin(), slopes.end());
  const auto dup = std::adjacent_find(slopes.begin(), slopes.end());
  if (dup != slopes.end()) {
    throw Error(ErrorCode::DuplicateSlope,
                "two chain points share x = " + dup->to_string());
  }
  return lines;
}

namespace {

constexpr std::int64_t kNoLine = -1;

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  std::int64_t line;  // kNoLine for clip-box edges
  int ray_side;       // -1 left ray, +1 right ray, 0 otherwise
};

// Half-plane index for a CCW angular sort starting at direction (1, 0).
int angular_half(const Point& d) {
  return (d.y.sign() > 0 || (d.y.sign() == 0 && d.x.sign() > 0)) ? 0 : 1;
}

bool ccw_before(const Point& d1, const Point& d2) {
  const int h1 = angular_half(d1);
  const int h2 = angular_half(d2);
  if (h1 != h2) return h1 < h2;
  return (d1.x * d2.y - d1.y * d2.x).sign() > 0;
}

// Planar subdivision made of the clipped lines and the clip-box boundary.
class Subdivision {
 public:
  std::size_t add_vertex(const Point& p) {
    points_.push_back(p);
    return points_.size() - 1;
  }

  std::size_t add_box_vertex(const Point& p) {
    auto [it, inserted] = box_lookup_.try_emplace({p.x, p.y}, points_.size());
    if (inserted) {
      points_.push_back(p);
      box_ids_.push_back(it->second);
    }
    return it->second;
  }

  void add_edge(std::size_t from, std::size_t to, std::int64_t line,
                int ray_side) {
    edges_.push_back({from, to, line, ray_side});
  }

  void close_box(const Rational& m) {
    // Walk each side in CCW order and chain the points lying on it.
    for (int side = 0; side < 4; ++side) {
      std::vector<std::size_t> on_side;
      for (std::size_t id : box_ids_) {
        const Point& p = points_[id];
        const bool hit = (side == 0 && p.y == -m) || (side == 1 && p.x == m) ||
                         (side == 2 && p.y == m) || (side == 3 && p.x == -m);
        if (hit) on_side.push_back(id);
      }
      std::sort(on_side.begin(), on_side.end(),
                [&](std::size_t a, std::size_t b) {
                  const Point& p = points_[a];
                  const Point& q = points_[b];
                  switch (side) {
                    case 0: return p.x < q.x;
                    case 1: return p.y < q.y;
                    case 2: return p.x > q.x;
                    default: return p.y > q.y;
                  }
                });
      for (std::size_t i = 0; i + 1 < on_side.size(); ++i) {
        add_edge(on_side[i], on_side[i + 1], kNoLine, 0);
      }
    }
  }

  // Half-edge h = 2e runs from edges_[e].from to edges_[e].to; h ^ 1 is its
  // twin. Returns each face as the cycle of half-edges keeping it on the
  // left.
  std::vector<std::vector<std::size_t>> trace_faces() const {
    const std::size_t nh = 2 * edges_.size();
    std::vector<std::vector<std::size_t>> outgoing(points_.size());
    for (std::size_t h = 0; h < nh; ++h) outgoing[origin(h)].push_back(h);

    std::vector<std::size_t> slot(nh);
    for (auto& out : outgoing) {
      std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
        return ccw_before(direction(a), direction(b));
      });
      for (std::size_t i = 0; i < out.size(); ++i) slot[out[i]] = i;
    }

    // Next boundary half-edge: the first one clockwise from the twin.
    std::vector<std::size_t> next(nh);
    for (std::size_t h = 0; h < nh; ++h) {
      const auto& around = outgoing[origin(h ^ 1)];
      const std::size_t k = slot[h ^ 1];
      next[h] = around[(k + around.size() - 1) % around.size()];
    }

    std::vector<bool> seen(nh, false);
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t start = 0; start < nh; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> cycle;
      std::size_t h = start;
      do {
        seen[h] = true;
        cycle.push_back(h);
        h = next[h];
      } while (h != start);
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  std::size_t origin(std::size_t h) const {
    const auto& e = edges_[h / 2];
    return (h % 2 == 0) ? e.from : e.to;
  }
  std::size_t dest(std::size_t h) const { return origin(h ^ 1); }
  const GraphEdge& edge(std::size_t h) const { return edges_[h / 2]; }
  const Point& point(std::size_t id) const { return points_[id]; }

  Point direction(std::size_t h) const {
    const Point& a = points_[origin(h)];
    const Point& b = points_[dest(h)];
    return {b.x - a.x, b.y - a.y};
  }

 private:
  std::vector<Point> points_;
  std::vector<GraphEdge> edges_;
  std::map<std::pair<Rational, Rational>, std::size_t> box_lookup_;
  std::vector<std::size_t> box_ids_;
};

// Closed x-interval of the line inside [-m, m]^2.
std::pair<Rational, Rational> clip_interval(const Line& l, const Rational& m) {
  if (l.slope.sign() == 0) return {-m, m};
  Rational t1 = (l.offset - m) / l.slope;
  Rational t2 = (l.offset + m) / l.slope;
  if (t2 < t1) std::swap(t1, t2);
  return {std::max(-m, t1), std::min(m, t2)};
}

}  // namespace

Arrangement build_arrangement(std::vector<Line> lines,
                              const BuildOptions& options) {
  const std::size_t n = lines.size();
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "an arrangement needs at least two lines");
  }

  Arrangement arr;
  arr.lines = std::move(lines);
  arr.per_line_order.assign(n, {});
  arr.vertices.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      arr.vertices.push_back(intersect_lines(arr.lines[i], arr.lines[j]));
      arr.vertex_lines.emplace_back(i, j);
      arr.per_line_order[i].push_back(arr.vertices.size() - 1);
      arr.per_line_order[j].push_back(arr.vertices.size() - 1);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& order = arr.per_line_order[i];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return arr.vertices[a].x < arr.vertices[b].x;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (arr.vertices[order[k]].x == arr.vertices[order[k + 1]].x) {
        const auto [a1, a2] = arr.vertex_lines[order[k]];
        const auto [b1, b2] = arr.vertex_lines[order[k + 1]];
        throw Error(ErrorCode::ConcurrentLines,
                    "lines " + std::to_string(a1) + "," + std::to_string(a2) +
                        "," + std::to_string(a1 == b1 || a2 == b1 ? b2 : b1) +
                        " meet at one point");
      }
    }
  }

  Rational max_coord(0);
  for (const auto& v : arr.vertices) {
    max_coord = std::max({max_coord, v.x.abs(), v.y.abs()});
  }
  const Rational m = options.clip_half_width.value_or(max_coord * 2 + 1);
  if (!(max_coord < m)) {
    throw Error(ErrorCode::InvalidArgument,
                "clip box does not strictly contain every vertex");
  }
  arr.clip_half_width = m;

  Subdivision graph;
  for (const auto& v : arr.vertices) graph.add_vertex(v);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& l = arr.lines[i];
    const auto [x_lo, x_hi] = clip_interval(l, m);
    const std::size_t entry = graph.add_box_vertex({x_lo, l.y_at(x_lo)});
    const std::size_t exit = graph.add_box_vertex({x_hi, l.y_at(x_hi)});
    const auto& order = arr.per_line_order[i];
    const auto line = static_cast<std::int64_t>(i);
    graph.add_edge(entry, order.front(), line, -1);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      graph.add_edge(order[k], order[k + 1], line, 0);
    }
    graph.add_edge(order.back(), exit, line, +1);
  }
  for (const Point& corner : {Point{-m, -m}, Point{m, -m}, Point{m, m},
                              Point{-m, m}}) {
    graph.add_box_vertex(corner);
  }
  graph.close_box(m);

  const std::size_t nv = arr.vertices.size();
  std::size_t outer_faces = 0;
  for (const auto& cycle : graph.trace_faces()) {
    Face face;
    face.sign_vector.assign(n, 0);
    int ray_side = 0;
    for (std::size_t h : cycle) {
      const GraphEdge& e = graph.edge(h);
      if (e.line == kNoLine) continue;
      ++face.edge_count;
      // Walking toward +x keeps the face above the line.
      const bool rightward = graph.direction(h).x.sign() > 0;
      face.sign_vector[static_cast<std::size_t>(e.line)] = rightward ? 1 : -1;
      if (e.ray_side != 0) {
        face.ray_lines.push_back(static_cast<std::size_t>(e.line));
        if (ray_side != 0 && ray_side != e.ray_side) {
          // Only the top and bottom faces mix left and right rays.
          ray_side = 2;
        } else if (ray_side == 0) {
          ray_side = e.ray_side;
        }
      }
      if (graph.dest(h) < nv) face.corners.push_back(graph.dest(h));
    }
    if (face.edge_count == 0) {
      ++outer_faces;
      continue;
    }
    if (!face.corners.empty()) {
      const Point& v = arr.vertices[face.corners.front()];
      for (std::size_t i = 0; i < n; ++i) {
        if (face.sign_vector[i] != 0) continue;
        face.sign_vector[i] =
            static_cast<std::int8_t>(point_side_of_line(v, arr.lines[i]));
      }
    }
    if (std::count(face.sign_vector.begin(), face.sign_vector.end(), 0) != 0) {
      throw Error(ErrorCode::Internal, "face sign vector left incomplete");
    }

    const bool all_plus = std::all_of(face.sign_vector.begin(),
                                      face.sign_vector.end(),
                                      [](std::int8_t v) { return v > 0; });
    const bool all_minus = std::all_of(face.sign_vector.begin(),
                                       face.sign_vector.end(),
                                       [](std::int8_t v) { return v < 0; });
    if (all_plus) {
      face.kind = FaceKind::TopUnbounded;
    } else if (all_minus) {
      face.kind = FaceKind::BottomUnbounded;
    } else if (ray_side == -1) {
      face.kind = FaceKind::LeftUnbounded;
    } else if (ray_side == 1) {
      face.kind = FaceKind::RightUnbounded;
    } else if (ray_side == 0) {
      face.kind = FaceKind::Bounded;
    } else {
      throw Error(ErrorCode::Internal,
                  "face with rays toward both sides is neither top nor bottom");
    }
    arr.faces.push_back(std::move(face));
  }

  const std::size_t expected_faces = 1 + n + n * (n - 1) / 2;
  if (outer_faces != 1 || arr.faces.size() != expected_faces) {
    throw Error(ErrorCode::Internal,
                "face tracing produced " + std::to_string(arr.faces.size()) +
                    " faces, expected " + std::to_string(expected_faces));
  }
  return arr;
}

Arrangement build_dual_arrangement(const Chain& chain,
                                   const BuildOptions& options) {
  Arrangement arr = build_arrangement(dualize_chain(chain), options);
  arr.s = chain.s;
  return arr;
}

EuclideanCensus euclidean_census(const Arrangement& arr) {
  EuclideanCensus census;
  census.s = arr.s;
  census.n = static_cast<int>(arr.lines.size());
  int tops = 0;
  int bottoms = 0;
  for (const auto& f : arr.faces) {
    switch (f.kind) {
      case FaceKind::Bounded: ++census.bounded[f.edge_count]; break;
      case FaceKind::TopUnbounded:
        census.top_edges = f.edge_count;
        ++tops;
        break;
      case FaceKind::BottomUnbounded:
        census.bottom_edges = f.edge_count;
        ++bottoms;
        break;
      case FaceKind::LeftUnbounded: ++census.left[f.edge_count]; break;
      case FaceKind::RightUnbounded: ++census.right[f.edge_count]; break;
    }
  }
  if (tops != 1 || bottoms != 1) {
    throw Error(ErrorCode::Internal, "expected exactly one top and one bottom face");
  }
  return census;
}

std::int64_t expected_bounded_pentagons(int s) {
  return 3 * (std::int64_t{1} << (s - 1)) - 2 * s - 1;
}

namespace {

std::string histogram_text(const Histogram& h) {
  std::string out = "{";
  for (const auto& [k, c] : h) {
    if (out.size() > 1) out += ",";
    out += std::to_string(k) + ":" + std::to_string(c);
  }
  return out + "}";
}

std::int64_t count_of(const Histogram& h, int k) {
  const auto it = h.find(k);
  return it == h.end() ? 0 : it->second;
}

// Exactly `expected` faces of size `special`, all others within `allowed`.
bool concentrated(const Histogram& h, int special, std::int64_t expected,
                  std::initializer_list<int> allowed) {
  for (const auto& [k, c] : h) {
    if (c == 0) continue;
    if (k == special) continue;
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      return false;
    }
  }
  return count_of(h, special) == expected;
}

int max_key(const Histogram& h) {
  int m = 0;
  for (const auto& [k, c] : h) {
    if (c > 0) m = std::max(m, k);
  }
  return m;
}

}  // namespace

VerificationReport verify_face_census(const EuclideanCensus& c) {
  VerificationReport r;
  const int s = c.s;
  if (s < 1 || s > 60) {
    r.add("faces.iteration_known", s, false,
          "census does not carry a Koch iteration s >= 1");
    return r;
  }
  r.add("faces.top_face_three_edges", s, c.top_edges == 3,
        "top face has " + std::to_string(c.top_edges) + " edges");
  r.add("faces.bottom_face_two_edges", s, c.bottom_edges == 2,
        "bottom face has " + std::to_string(c.bottom_edges) + " edges");
  r.add("faces.left_unbounded", s, concentrated(c.left, 4, s - 1, {2, 3}),
        "left " + histogram_text(c.left) + ", want " + std::to_string(s - 1) +
            " four-edge faces, others in {2,3}");
  r.add("faces.right_unbounded", s, concentrated(c.right, 4, s - 1, {2, 3}),
        "right " + histogram_text(c.right) + ", want " + std::to_string(s - 1) +
            " four-edge faces, others in {2,3}");
  const std::int64_t pentagons = expected_bounded_pentagons(s);
  r.add("faces.bounded_pentagons", s,
        concentrated(c.bounded, 5, pentagons, {3, 4}),
        "bounded " + histogram_text(c.bounded) + ", want " +
            std::to_string(pentagons) + " pentagons, others in {3,4}");
  const int max_unbounded =
      std::max({c.top_edges, c.bottom_edges, max_key(c.left), max_key(c.right)});
  r.add("faces.max_face_size", s,
        max_key(c.bounded) <= 5 && max_unbounded <= 4,
        "largest bounded " + std::to_string(max_key(c.bounded)) +
            ", largest unbounded " + std::to_string(max_unbounded));
  return r;
}

bool pentagon_recurrence_check(const std::vector<EuclideanCensus>& censuses) {
  for (std::size_t i = 1; i < censuses.size(); ++i) {
    const int s = censuses[i].s;
    if (censuses[i - 1].s != s - 1) return false;
    const std::int64_t prev = count_of(censuses[i - 1].bounded, 5);
    const std::int64_t cur = count_of(censuses[i].bounded, 5);
    if (cur != 2 * prev + 1 + 2 * (s - 2)) return false;
  }
  return true;
}

VerificationReport arrangement_structure_report(const Arrangement& arr) {
  VerificationReport r;
  const auto n = static_cast<std::int64_t>(arr.lines.size());
  const int s = arr.s;
  const auto faces = static_cast<std::int64_t>(arr.faces.size());
  std::int64_t bounded = 0;
  std::int64_t degree_sum = 0;
  for (const auto& f : arr.faces) {
    if (f.kind == FaceKind::Bounded) ++bounded;
    degree_sum += f.edge_count;
  }
  auto eq = [](std::int64_t got, std::int64_t want) {
    return std::to_string(got) + " (want " + std::to_string(want) + ")";
  };
  const auto vertices = static_cast<std::int64_t>(arr.vertices.size());
  const auto edges = static_cast<std::int64_t>(arr.edge_count());
  r.add("structure.vertices", s, vertices == n * (n - 1) / 2,
        eq(vertices, n * (n - 1) / 2));
  r.add("structure.edges", s, edges == n * n, eq(edges, n * n));
  r.add("structure.faces", s, faces == 1 + n + n * (n - 1) / 2,
        eq(faces, 1 + n + n * (n - 1) / 2));
  r.add("structure.bounded_faces", s, bounded == (n - 1) * (n - 2) / 2,
        eq(bounded, (n - 1) * (n - 2) / 2));
  r.add("structure.unbounded_faces", s, faces - bounded == 2 * n,
        eq(faces - bounded, 2 * n));
  r.add("structure.degree_sum", s, degree_sum == 2 * n * n,
        eq(degree_sum, 2 * n * n));
  return r;
}

}  // namespace koch
