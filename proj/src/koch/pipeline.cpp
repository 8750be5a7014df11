#include "koch/pipeline.hpp"

#include "koch/error.hpp"
#include "koch/oracle.hpp"
#include "koch/projective.hpp"

#include <sstream>

namespace koch {

namespace {

std::string witnesses(const ChainValidity& v, const std::string& check) {
  std::ostringstream os;
  int shown = 0;
  for (const auto& w : v.violations) {
    if (w.check != check) continue;
    if (shown++ == 3) {
      os << " ...";
      break;
    }
    os << " (";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
      os << (i ? "," : "") << w.indices[i];
    }
    os << ")";
  }
  return shown == 0 ? "ok" : "witnesses:" + os.str();
}

}  // namespace

VerificationReport chain_structure_report(const Chain& c) {
  VerificationReport r;
  const int s = c.s;
  const std::size_t want = (s >= 1 && s < 62) ? (std::size_t{1} << s) + 1 : 0;
  const bool sized = c.points.size() == want;
  r.add("chain.point_count", s, sized,
        std::to_string(c.points.size()) + " points (want " +
            std::to_string(want) + ")");
  if (!sized) return r;

  const std::int64_t hw = c.half_width();
  const bool anchors = c.at(-hw) == Point{Rational(-1), Rational(0)} &&
                       c.at(0) == Point{Rational(0), Rational(-1)} &&
                       c.at(hw) == Point{Rational(1), Rational(0)};
  r.add("chain.anchor_points", s, anchors, "p_-, p_0, p_+ at (-1,0),(0,-1),(1,0)");

  bool mirrored = true;
  for (std::int64_t i = 1; i <= hw; ++i) {
    if (c.at(-i) != mirror_x(c.at(i))) mirrored = false;
  }
  r.add("chain.mirror_symmetry", s, mirrored);

  // Strictly inside: y < 0, y > -x - 1 and y > x - 1.
  bool inside = true;
  for (std::int64_t i = -hw + 1; i < hw; ++i) {
    if (i == 0) continue;
    const Point& p = c.at(i);
    if (!(p.y.sign() < 0 && (p.x + p.y + 1).sign() > 0 &&
          (Rational(1) - p.x + p.y).sign() > 0)) {
      inside = false;
    }
  }
  r.add("chain.inside_triangle", s, inside);
  return r;
}

PipelineResult verify_chain(const Chain& chain, const PipelineOptions& options) {
  PipelineResult out;
  VerificationReport& r = out.report;
  const int s = chain.s;

  r.append(chain_structure_report(chain));
  const ChainValidity v = validate_chain(chain);
  r.add("chain.x_monotone", s, v.x_monotone, witnesses(v, "x_monotone"));
  r.add("chain.general_position", s, v.general_position,
        witnesses(v, "general_position"));
  r.add("chain.upper_shadow", s, v.upper_shadow_ok, witnesses(v, "upper_shadow"));
  r.add("chain.consecutive_edges_uncrossed", s, v.consecutive_edges_uncrossed,
        witnesses(v, "consecutive_edges_uncrossed"));

  Arrangement arr;
  try {
    arr = build_dual_arrangement(chain);
  } catch (const Error& e) {
    r.add("arrangement.build", s, false,
          std::string(to_string(e.code())) + ": " + e.what());
    return out;
  }
  r.add("arrangement.build", s, true);
  r.append(arrangement_structure_report(arr));

  const EuclideanCensus census = euclidean_census(arr);
  r.append(oracle::arrangement_identities(census));
  r.append(verify_face_census(census));

  std::optional<ProjectiveCensus> projective;
  try {
    projective = projective_census(arr);
    r.append(verify_projective_census(*projective));
  } catch (const Error& e) {
    r.add("projective.build", s, false,
          std::string(to_string(e.code())) + ": " + e.what());
  }

  if (s <= options.oracle_cap) {
    const auto lines = dualize_chain(chain);
    const auto diff =
        oracle::compare_census(census, oracle::signvector_census(lines, s));
    std::string detail;
    for (const auto& d : diff) detail += (detail.empty() ? "" : "; ") + d;
    r.add("oracle.euclidean_equal", s, diff.empty(),
          diff.empty() ? "builder and oracle agree" : detail);
    const auto oracle_h = oracle::signvector_projective_census(lines, s).histogram;
    r.add("oracle.projective_equal", s,
          projective && projective->histogram == oracle_h);
  }
  out.census = census;
  return out;
}

VerificationReport verify_range(int lo, int hi, const PipelineOptions& options) {
  VerificationReport r;
  if (lo < 1 || hi < lo) {
    throw Error(ErrorCode::InvalidArgument,
                "s-range must satisfy 1 <= lo <= hi, got " + std::to_string(lo) +
                    ".." + std::to_string(hi));
  }
  std::vector<EuclideanCensus> censuses;
  bool complete = true;
  for (int s = lo; s <= hi; ++s) {
    Chain chain;
    try {
      chain = generate_chain(s);
    } catch (const Error& e) {
      r.add("chain.generate", s, false,
            std::string(to_string(e.code())) + ": " + e.what());
      complete = false;
      continue;
    }
    r.add("chain.generate", s, true);
    PipelineResult one = verify_chain(chain, options);
    r.append(one.report);
    if (one.census) {
      if (s >= 2) censuses.push_back(*one.census);
    } else {
      complete = false;
    }
  }
  if (censuses.size() >= 2) {
    std::string detail = "N_s:";
    for (const auto& c : censuses) {
      const auto it = c.bounded.find(5);
      detail += " " + std::to_string(it == c.bounded.end() ? 0 : it->second);
    }
    r.add("faces.pentagon_recurrence", censuses.back().s,
          complete && pentagon_recurrence_check(censuses), detail);
  } else {
    r.notes.push_back("pentagon recurrence needs two consecutive s >= 2; skipped");
  }
  return r;
}

}  // namespace koch
