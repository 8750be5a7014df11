#include "koch/projective.hpp"

#include "koch/error.hpp"

#include <algorithm>
#include <map>

namespace koch {

std::vector<AntipodalPair> antipodal_pairs(const Arrangement& arr) {
  std::map<std::vector<std::int8_t>, std::size_t> unbounded;
  for (std::size_t f = 0; f < arr.faces.size(); ++f) {
    if (arr.faces[f].kind != FaceKind::Bounded) {
      unbounded.emplace(arr.faces[f].sign_vector, f);
    }
  }

  std::vector<AntipodalPair> pairs;
  for (const auto& [signs, f] : unbounded) {
    std::vector<std::int8_t> negated(signs.size());
    std::transform(signs.begin(), signs.end(), negated.begin(),
                   [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
    const auto it = unbounded.find(negated);
    if (it == unbounded.end()) {
      throw Error(ErrorCode::MissingAntipode,
                  "unbounded face " + std::to_string(f) +
                      " has no face with the opposite sign vector");
    }
    const std::size_t g = it->second;
    if (f < g) {
      pairs.push_back({f, g, arr.faces[f].edge_count, arr.faces[g].edge_count});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AntipodalPair& a, const AntipodalPair& b) {
              return a.face < b.face;
            });
  if (pairs.size() * 2 != unbounded.size()) {
    throw Error(ErrorCode::Internal, "antipodal matching is not perfect");
  }
  return pairs;
}

ProjectiveCensus projective_census(const Arrangement& arr) {
  ProjectiveCensus census;
  census.s = arr.s;
  census.n = static_cast<int>(arr.lines.size());
  for (const auto& f : arr.faces) {
    if (f.kind == FaceKind::Bounded) ++census.histogram[f.edge_count];
  }
  census.pairing = antipodal_pairs(arr);
  for (const auto& p : census.pairing) ++census.histogram[p.merged_edges()];
  return census;
}

std::int64_t expected_projective_pentagons(int s) {
  return 3 * (std::int64_t{1} << (s - 1)) - 3;
}

VerificationReport verify_projective_census(const ProjectiveCensus& c) {
  VerificationReport r;
  const int s = c.s;
  const std::int64_t n = c.n;

  std::int64_t faces = 0;
  std::int64_t degree_sum = 0;
  std::int64_t pentagons = 0;
  int largest = 0;
  bool others_small = true;
  for (const auto& [k, count] : c.histogram) {
    if (count == 0) continue;
    faces += count;
    degree_sum += k * count;
    largest = std::max(largest, k);
    if (k == 5) pentagons = count;
    else if (k != 3 && k != 4) others_small = false;
  }

  r.add("projective.face_total", s, faces == 1 + n * (n - 1) / 2,
        std::to_string(faces) + " faces (want " +
            std::to_string(1 + n * (n - 1) / 2) + ")");
  r.add("projective.degree_sum", s, degree_sum == 2 * n * (n - 1),
        std::to_string(degree_sum) + " (want " +
            std::to_string(2 * n * (n - 1)) + ")");
  r.add("projective.max_face_size", s, largest <= 5,
        "largest face has " + std::to_string(largest) + " edges");

  if (s == 2) {
    // Both four-edge unbounded faces meet two-edge antipodes and merge into
    // tetragons, so only the bounded pentagon survives.
    r.add("projective.s2_pentagons", s, pentagons == 1 && others_small,
          std::to_string(pentagons) + " pentagons (want 1, formula would say " +
              std::to_string(expected_projective_pentagons(2)) + ")");
    std::int64_t tetragon_merges = 0;
    for (const auto& p : c.pairing) {
      const bool four_two = (p.face_edges == 4 && p.antipode_edges == 2) ||
                            (p.face_edges == 2 && p.antipode_edges == 4);
      if (four_two) ++tetragon_merges;
    }
    r.add("projective.s2_tetragon_merges", s, tetragon_merges == 2,
          std::to_string(tetragon_merges) +
              " four-edge faces merged with two-edge antipodes (want 2)");
    r.notes.push_back(
        "s=2: four-edge unbounded faces paired with two-edge antipodes "
        "combine to tetragons; the general pentagon formula does not apply");
  } else if (s >= 1 && s <= 60) {
    const std::int64_t want = expected_projective_pentagons(s);
    r.add("projective.pentagons", s, pentagons == want && others_small,
          std::to_string(pentagons) + " pentagons (want " +
              std::to_string(want) + "), others in {3,4}: " +
              (others_small ? "yes" : "no"));
  }
  return r;
}

}  // namespace koch
