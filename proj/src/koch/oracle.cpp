#include "koch/oracle.hpp"

#include "koch/error.hpp"

#include <algorithm>
#include <map>

namespace koch::oracle {

namespace {

struct SampledFace {
  int edges = 0;
  bool left_ray = false;
  bool right_ray = false;
};

using FaceMap = std::map<std::vector<std::int8_t>, SampledFace>;

FaceMap sample_faces(const std::vector<Line>& lines) {
  const std::size_t n = lines.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two lines");

  FaceMap faces;
  for (std::size_t i = 0; i < n; ++i) {
    const Line& own = lines[i];
    std::vector<Rational> xs;
    xs.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (lines[j].slope == own.slope) {
        throw Error(ErrorCode::ParallelLines, "oracle input has parallel lines");
      }
      xs.push_back((own.offset - lines[j].offset) / (own.slope - lines[j].slope));
    }
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
      throw Error(ErrorCode::ConcurrentLines,
                  "three lines meet on line " + std::to_string(i));
    }

    // Witness abscissae: one beyond each end, midpoints in between.
    std::vector<std::pair<Rational, int>> witnesses;
    witnesses.emplace_back(xs.front() - 1, -1);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      witnesses.emplace_back((xs[k] + xs[k + 1]) / 2, 0);
    }
    witnesses.emplace_back(xs.back() + 1, +1);

    for (const auto& [x, ray] : witnesses) {
      const Point w{x, own.y_at(x)};
      std::vector<std::int8_t> signs(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) signs[j] = static_cast<std::int8_t>(point_side_of_line(w, lines[j]));
      }
      for (std::int8_t own_sign : {std::int8_t{1}, std::int8_t{-1}}) {
        signs[i] = own_sign;
        SampledFace& f = faces[signs];
        ++f.edges;
        if (ray < 0) f.left_ray = true;
        if (ray > 0) f.right_ray = true;
      }
    }
  }
  return faces;
}

bool all_equal(const std::vector<std::int8_t>& v, std::int8_t x) {
  return std::all_of(v.begin(), v.end(), [x](std::int8_t e) { return e == x; });
}

}  // namespace

EuclideanCensus signvector_census(const std::vector<Line>& lines, int s) {
  EuclideanCensus census;
  census.s = s;
  census.n = static_cast<int>(lines.size());
  for (const auto& [signs, f] : sample_faces(lines)) {
    if (all_equal(signs, 1)) {
      census.top_edges = f.edges;
    } else if (all_equal(signs, -1)) {
      census.bottom_edges = f.edges;
    } else if (f.left_ray && f.right_ray) {
      throw Error(ErrorCode::Internal, "oracle face unbounded on both sides");
    } else if (f.left_ray) {
      ++census.left[f.edges];
    } else if (f.right_ray) {
      ++census.right[f.edges];
    } else {
      ++census.bounded[f.edges];
    }
  }
  return census;
}

ProjectiveCensus signvector_projective_census(const std::vector<Line>& lines,
                                              int s) {
  ProjectiveCensus census;
  census.s = s;
  census.n = static_cast<int>(lines.size());
  const FaceMap faces = sample_faces(lines);
  std::size_t index = 0;
  std::map<std::vector<std::int8_t>, std::size_t> ids;
  for (const auto& entry : faces) ids[entry.first] = index++;

  for (const auto& [signs, f] : faces) {
    if (!f.left_ray && !f.right_ray) {
      ++census.histogram[f.edges];
      continue;
    }
    std::vector<std::int8_t> negated(signs.size());
    std::transform(signs.begin(), signs.end(), negated.begin(),
                   [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
    const auto it = faces.find(negated);
    if (it == faces.end()) {
      throw Error(ErrorCode::MissingAntipode, "oracle face without antipode");
    }
    if (signs < negated) {
      AntipodalPair p{ids[signs], ids[negated], f.edges, it->second.edges};
      census.pairing.push_back(p);
      ++census.histogram[p.merged_edges()];
    }
  }
  return census;
}

VerificationReport arrangement_identities(const EuclideanCensus& c) {
  VerificationReport r;
  const std::int64_t n = c.n;
  std::int64_t bounded = 0;
  std::int64_t unbounded = 2;
  std::int64_t degree_sum = c.top_edges + c.bottom_edges;
  for (const auto& [k, count] : c.bounded) {
    bounded += count;
    degree_sum += k * count;
  }
  for (const auto* h : {&c.left, &c.right}) {
    for (const auto& [k, count] : *h) {
      unbounded += count;
      degree_sum += k * count;
    }
  }
  const std::int64_t want_bounded = (n - 1) * (n - 2) / 2;
  r.add("identity.bounded_faces", c.s, bounded == want_bounded,
        std::to_string(bounded) + " (want " + std::to_string(want_bounded) + ")");
  r.add("identity.unbounded_faces", c.s, unbounded == 2 * n,
        std::to_string(unbounded) + " (want " + std::to_string(2 * n) + ")");
  r.add("identity.degree_sum", c.s, degree_sum == 2 * n * n,
        std::to_string(degree_sum) + " (want " + std::to_string(2 * n * n) + ")");
  return r;
}

namespace {

void diff_histogram(const char* field, const Histogram& a, const Histogram& b,
                    std::vector<std::string>& out) {
  std::map<int, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& [k, c] : a) merged[k].first = c;
  for (const auto& [k, c] : b) merged[k].second = c;
  for (const auto& [k, pair] : merged) {
    if (pair.first != pair.second) {
      out.push_back(std::string(field) + "[" + std::to_string(k) +
                    "]: " + std::to_string(pair.first) + " vs " +
                    std::to_string(pair.second));
    }
  }
}

}  // namespace

std::vector<std::string> compare_census(const EuclideanCensus& a,
                                        const EuclideanCensus& b) {
  std::vector<std::string> out;
  auto scalar = [&out](const char* field, std::int64_t x, std::int64_t y) {
    if (x != y) {
      out.push_back(std::string(field) + ": " + std::to_string(x) + " vs " +
                    std::to_string(y));
    }
  };
  scalar("s", a.s, b.s);
  scalar("n", a.n, b.n);
  scalar("top_edges", a.top_edges, b.top_edges);
  scalar("bottom_edges", a.bottom_edges, b.bottom_edges);
  diff_histogram("bounded", a.bounded, b.bounded, out);
  diff_histogram("left", a.left, b.left, out);
  diff_histogram("right", a.right, b.right, out);
  return out;
}

}  // namespace koch::oracle
