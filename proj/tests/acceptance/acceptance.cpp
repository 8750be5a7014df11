// Acceptance suite: prints one PASS/FAIL line per criterion.
//
//   koch_acceptance [--cli PATH] [--skip-stretch]
//
// Exit status is 0 iff criteria 1 to 9 pass. Criterion 10 is a performance
// stretch goal and is reported without affecting the exit status.

#include "koch/arrangement.hpp"
#include "koch/chain.hpp"
#include "koch/error.hpp"
#include "koch/json_io.hpp"
#include "koch/oracle.hpp"
#include "koch/projective.hpp"
#include "koch/render.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace koch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Built {
  Chain chain;
  Arrangement arr;
  EuclideanCensus census;
  ProjectiveCensus projective;
};

// Chains and arrangements for s = 1..6 are shared by several criteria.
std::map<int, Built>& koch_cache() {
  static std::map<int, Built> cache;
  return cache;
}

const Built& built(int s) {
  auto& cache = koch_cache();
  auto it = cache.find(s);
  if (it == cache.end()) {
    Built b;
    b.chain = generate_chain(s);
    b.arr = build_dual_arrangement(b.chain);
    b.census = euclidean_census(b.arr);
    b.projective = projective_census(b.arr);
    it = cache.emplace(s, std::move(b)).first;
  }
  return it->second;
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::int64_t total(const Histogram& h) {
  std::int64_t t = 0;
  for (const auto& [k, v] : h) t += v;
  return t;
}

std::int64_t count_at(const Histogram& h, int k) {
  const auto it = h.find(k);
  return it == h.end() ? 0 : it->second;
}

bool only_sizes(const Histogram& h, std::initializer_list<int> allowed) {
  for (const auto& [k, v] : h) {
    if (v == 0) continue;
    bool ok = false;
    for (int a : allowed) ok |= a == k;
    if (!ok) return false;
  }
  return true;
}

std::string hist_string(const Histogram& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : h) {
    os << (first ? "" : ",") << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<Line> random_simple_lines(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> den(1, 5);
  for (;;) {
    std::vector<Line> lines;
    for (std::size_t i = 0; i < n; ++i) {
      const int q1 = den(rng);
      const int q2 = den(rng);
      std::uniform_int_distribution<int> a(-4 * q1, 4 * q1);
      std::uniform_int_distribution<int> b(-4 * q2, 4 * q2);
      lines.push_back({Rational(a(rng), q1), Rational(b(rng), q2)});
    }
    bool simple = true;
    for (std::size_t i = 0; i < n && simple; ++i)
      for (std::size_t j = i + 1; j < n && simple; ++j)
        simple = !(lines[i].slope == lines[j].slope);
    for (std::size_t i = 0; i < n && simple; ++i)
      for (std::size_t j = i + 1; j < n && simple; ++j) {
        const Point v = intersect_lines(lines[i], lines[j]);
        for (std::size_t k = j + 1; k < n && simple; ++k)
          simple = point_side_of_line(v, lines[k]) != 0;
      }
    if (simple) return lines;
  }
}

Outcome euclidean_face_census() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int s = 1; s <= 6; ++s) {
    const auto& c = built(s).census;
    const std::string at = "s=" + std::to_string(s) + ": ";
    if (c.top_edges != 3) o.fail(at + "top has " + std::to_string(c.top_edges) + " edges");
    if (c.bottom_edges != 2) o.fail(at + "bottom has " + std::to_string(c.bottom_edges) + " edges");
    for (const Histogram* side : {&c.left, &c.right}) {
      if (count_at(*side, 4) != s - 1 || !only_sizes(*side, {2, 3, 4}))
        o.fail(at + "side histogram " + hist_string(*side));
    }
    const std::int64_t want = 3 * pow2(s - 1) - 2 * s - 1;
    if (count_at(c.bounded, 5) != want || !only_sizes(c.bounded, {3, 4, 5}))
      o.fail(at + "bounded " + hist_string(c.bounded) + ", want " + std::to_string(want) +
             " pentagons");
  }
  const double t = seconds_since(t0);
  if (t > 60.0) o.fail("took " + std::to_string(t) + " s (limit 60 s)");
  if (o.pass) {
    o.detail = "s=1..6 bounded pentagons";
    for (int s = 1; s <= 6; ++s) o.detail += " " + std::to_string(count_at(built(s).census.bounded, 5));
    o.detail += ", " + std::to_string(static_cast<int>(t * 1000)) + " ms";
  }
  return o;
}

Outcome projective_pentagon_census() {
  Outcome o;
  std::string counts;
  for (int s = 1; s <= 6; ++s) {
    const auto& h = built(s).projective.histogram;
    const std::string at = "s=" + std::to_string(s) + ": ";
    if (!only_sizes(h, {3, 4, 5})) o.fail(at + "face larger than 5 in " + hist_string(h));
    counts += " " + std::to_string(count_at(h, 5));
    if (s == 2) continue;
    const std::int64_t want = 3 * pow2(s - 1) - 3;
    if (count_at(h, 5) != want)
      o.fail(at + "projective " + hist_string(h) + ", want " + std::to_string(want) +
             " pentagons");
  }
  if (o.pass) o.detail = "projective pentagons for s=1..6:" + counts;
  return o;
}

Outcome s2_special_case() {
  Outcome o;
  const auto& b = built(2);
  const auto& h = b.projective.histogram;
  if (count_at(h, 5) != 1) o.fail("s=2 projective " + hist_string(h));
  int tetragon_merges = 0;
  for (const auto& p : b.projective.pairing) {
    const auto lo = std::min(p.face_edges, p.antipode_edges);
    const auto hi = std::max(p.face_edges, p.antipode_edges);
    if (lo == 2 && hi == 4 && p.merged_edges() == 4) ++tetragon_merges;
  }
  if (tetragon_merges != 2)
    o.fail("expected two 4+2 merges into tetragons, found " + std::to_string(tetragon_merges));
  const auto sampled = oracle::signvector_projective_census(b.arr.lines, 2);
  if (sampled.histogram != h) o.fail("oracle disagrees: " + hist_string(sampled.histogram));
  if (o.pass) o.detail = "projective " + hist_string(h) + ", oracle agrees, two 4+2 tetragon merges";
  return o;
}

Outcome recurrence() {
  Outcome o;
  std::string seq;
  for (int s = 2; s <= 6; ++s) {
    const std::int64_t n = count_at(built(s).census.bounded, 5);
    seq += (s == 2 ? "" : ",") + std::to_string(n);
    if (s == 2) continue;
    const std::int64_t prev = count_at(built(s - 1).census.bounded, 5);
    if (n != 2 * prev + 1 + 2 * (s - 2))
      o.fail("s=" + std::to_string(s) + ": " + std::to_string(n) + " vs 2*" +
             std::to_string(prev) + "+1+2*" + std::to_string(s - 2));
  }
  if (o.pass) o.detail = "N_2..N_6 = " + seq;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int s = 1; s <= 4; ++s) {
    const auto& b = built(s);
    const auto diff = oracle::compare_census(b.census, oracle::signvector_census(b.arr.lines, s));
    if (!diff.empty()) o.fail("s=" + std::to_string(s) + ": " + diff.front());
    if (oracle::signvector_projective_census(b.arr.lines, s).histogram != b.projective.histogram)
      o.fail("s=" + std::to_string(s) + ": projective histograms differ");
  }
  std::mt19937_64 rng(20240501);
  const int trials = 24;
  for (int t = 0; t < trials; ++t) {
    const auto lines = random_simple_lines(rng, 2 + static_cast<std::size_t>(t % 11));
    const Arrangement arr = build_arrangement(lines);
    const auto diff =
        oracle::compare_census(euclidean_census(arr), oracle::signvector_census(lines));
    if (!diff.empty()) o.fail("random set " + std::to_string(t) + ": " + diff.front());
    if (oracle::signvector_projective_census(lines).histogram != projective_census(arr).histogram)
      o.fail("random set " + std::to_string(t) + ": projective histograms differ");
  }
  const double secs = seconds_since(t0);
  if (secs > 30.0) o.fail("took " + std::to_string(secs) + " s (limit 30 s)");
  if (o.pass)
    o.detail = "s=1..4 and " + std::to_string(trials) + " random sets (n=2..12), " +
               std::to_string(static_cast<int>(secs * 1000)) + " ms";
  return o;
}

void check_identities(const Arrangement& arr, const std::string& label, Outcome& o) {
  const auto n = static_cast<std::int64_t>(arr.lines.size());
  const auto census = euclidean_census(arr);
  const auto proj = projective_census(arr);
  std::int64_t bounded = 0, unbounded = 0, degree = 0;
  for (const auto& f : arr.faces) {
    (f.kind == FaceKind::Bounded ? bounded : unbounded) += 1;
    degree += f.edge_count;
  }
  std::int64_t pfaces = 0, pdegree = 0;
  for (const auto& [k, v] : proj.histogram) {
    pfaces += v;
    pdegree += k * v;
  }
  const auto fail_if = [&](bool bad, const std::string& what) {
    if (bad) o.fail(label + ": " + what);
  };
  fail_if(static_cast<std::int64_t>(arr.vertices.size()) != n * (n - 1) / 2, "vertex count");
  fail_if(bounded != (n - 1) * (n - 2) / 2, "bounded face count");
  fail_if(bounded != total(census.bounded), "census bounded total");
  fail_if(unbounded != 2 * n, "unbounded face count");
  fail_if(degree != 2 * n * n, "Euclidean degree sum");
  fail_if(pfaces != 1 + n * (n - 1) / 2, "projective face count");
  fail_if(pdegree != 2 * n * (n - 1), "projective degree sum");
}

Outcome structural_identities() {
  Outcome o;
  int arrangements = 0;
  for (int s = 1; s <= 6; ++s, ++arrangements)
    check_identities(built(s).arr, "s=" + std::to_string(s), o);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t, ++arrangements)
    check_identities(build_arrangement(random_simple_lines(rng, 2 + t % 11)),
                     "random set " + std::to_string(t), o);
  if (o.pass) o.detail = std::to_string(arrangements) + " arrangements (K*_1..K*_6 and random)";
  return o;
}

Outcome order_type_stability() {
  Outcome o;
  int variants = 0;
  for (int s = 1; s <= 5; ++s) {
    const Chain base = generate_chain(s);
    const Chirotope reference = chirotope(base);
    for (int extra : {1, 2}) {
      std::vector<int> exps = base.flatten_exponents;
      for (auto& k : exps) k += extra;
      try {
        const Chain flatter = generate_chain(s, {.override_exponents = exps});
        if (!(chirotope(flatter) == reference))
          o.fail("s=" + std::to_string(s) + " +" + std::to_string(extra) + ": chirotope differs");
      } catch (const Error& e) {
        o.fail("s=" + std::to_string(s) + " +" + std::to_string(extra) + ": " + e.what());
      }
      ++variants;
    }
  }
  if (o.pass) o.detail = "s=1..5, " + std::to_string(variants) + " flatter variants match";
  return o;
}

Outcome chain_validity() {
  Outcome o;
  for (int s = 1; s <= 6; ++s) {
    const auto v = validate_chain(built(s).chain);
    const std::string at = "s=" + std::to_string(s) + ": ";
    if (!v.x_monotone) o.fail(at + "not x-monotone");
    if (!v.general_position) o.fail(at + "collinear triple");
    if (!v.upper_shadow_ok) o.fail(at + "upper shadow violated");
    if (!v.consecutive_edges_uncrossed) o.fail(at + "consecutive edge crossed");
  }
  if (o.pass) o.detail = "s=1..6, all four checks";
  return o;
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  const std::vector<std::pair<std::string, std::function<std::string()>>> producers = {
      {"chain json", [] { return io::chain_to_json(generate_chain(4)); }},
      {"census json",
       [] { return io::census_to_json(euclidean_census(build_dual_arrangement(generate_chain(4)))); }},
      {"projective json",
       [] {
         return io::projective_census_to_json(
             projective_census(build_dual_arrangement(generate_chain(4))));
       }},
      {"primal svg", [] { return render_svg(generate_chain(3), {}); }},
      {"dual svg", [] { return render_svg(generate_chain(2), {.mode = RenderMode::Dual}); }},
  };
  for (const auto& [name, make] : producers)
    if (make() != make()) o.fail(name + " differs between runs");

  int process_runs = 0;
  if (!cli.empty()) {
    for (const char* args : {"gen -s 4", "census -s 4", "census -s 4 --projective",
                             "census -s 3 --format table", "render -s 3",
                             "render -s 2 --dual"}) {
      const std::string cmd = "\"" + cli + "\" " + args;
      const std::string a = run_capture(cmd);
      const std::string b = run_capture(cmd);
      if (a.empty() || a.find("<exit") != std::string::npos)
        o.fail(std::string("'") + args + "' failed");
      else if (a != b)
        o.fail(std::string("'") + args + "' output differs between processes");
      ++process_runs;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(producers.size()) + " in-process outputs";
    if (process_runs > 0) o.detail += ", " + std::to_string(process_runs) + " CLI commands";
  }
  return o;
}

Outcome stretch() {
  Outcome o;
  const auto t0 = Clock::now();
  const Chain c = generate_chain(8);
  const Arrangement arr = build_dual_arrangement(c);
  const auto census = euclidean_census(arr);
  const auto proj = projective_census(arr);
  check_identities(arr, "s=8", o);
  const auto ids = oracle::arrangement_identities(census);
  if (!ids.all_pass()) o.fail("census identities failed");
  const double secs = seconds_since(t0);
  if (secs > 600.0) o.fail("took " + std::to_string(secs) + " s (limit 600 s)");
  if (o.pass)
    o.detail = "n=" + std::to_string(arr.lines.size()) + ", " +
               std::to_string(arr.vertices.size()) + " vertices, bounded pentagons " +
               std::to_string(count_at(census.bounded, 5)) + ", projective pentagons " +
               std::to_string(count_at(proj.histogram, 5)) + ", " +
               std::to_string(static_cast<int>(secs)) + " s";
  return o;
}

bool report(int id, const char* title, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << o.detail
            << ")" << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool skip_stretch = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--skip-stretch") {
      skip_stretch = true;
    } else {
      std::cerr << "usage: koch_acceptance [--cli PATH] [--skip-stretch]\n";
      return 2;
    }
  }

  bool ok = true;
  ok &= report(1, "Euclidean face census s=1..6", euclidean_face_census);
  ok &= report(2, "projective pentagon count s=1,3..6", projective_pentagon_census);
  ok &= report(3, "s=2 projective special case", s2_special_case);
  ok &= report(4, "bounded pentagon recurrence s=2..6", recurrence);
  ok &= report(5, "builder equals sign-vector oracle", oracle_equivalence);
  ok &= report(6, "structural identities", structural_identities);
  ok &= report(7, "order type stable under extra flattening", order_type_stability);
  ok &= report(8, "chain validity s<=6", chain_validity);
  ok &= report(9, "deterministic output", [&] { return determinism(cli); });
  if (skip_stretch) {
    std::cout << "SKIP  [10] s=8 census within 10 minutes (stretch)" << std::endl;
  } else {
    report(10, "s=8 census within 10 minutes (stretch)", stretch);
  }
  std::cout << (ok ? "acceptance: all blocking criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
