#include "koch/json_io.hpp"

#include "koch/error.hpp"

#include <json.hpp>

namespace koch::io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json histogram_json(const Histogram& h) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, c] : h) {
    if (c != 0) out[std::to_string(k)] = c;
  }
  return out;
}

Histogram histogram_from(const ordered_json& j) {
  Histogram h;
  for (const auto& [k, v] : j.items()) h[std::stoi(k)] = v.get<std::int64_t>();
  return h;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string chain_to_json(const Chain& chain) {
  ordered_json j;
  j["s"] = chain.s;
  j["flatten_exponents"] = chain.flatten_exponents;
  ordered_json pts = ordered_json::array();
  for (const auto& p : chain.points) {
    pts.push_back({p.x.to_string(), p.y.to_string()});
  }
  j["points"] = std::move(pts);
  return dump(j);
}

Chain chain_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    Chain chain;
    chain.s = j.at("s").get<int>();
    chain.flatten_exponents = j.at("flatten_exponents").get<std::vector<int>>();
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) {
        throw Error(ErrorCode::Parse, "each point must be a [x, y] pair");
      }
      chain.points.push_back({Rational::parse(p[0].get<std::string>()),
                              Rational::parse(p[1].get<std::string>())});
    }
    return chain;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("chain JSON: ") + e.what());
  }
}

std::string census_to_json(const EuclideanCensus& c) {
  ordered_json j;
  j["s"] = c.s;
  j["n"] = c.n;
  j["bounded"] = histogram_json(c.bounded);
  j["top_edges"] = c.top_edges;
  j["bottom_edges"] = c.bottom_edges;
  j["left"] = histogram_json(c.left);
  j["right"] = histogram_json(c.right);
  return dump(j);
}

EuclideanCensus census_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    EuclideanCensus c;
    c.s = j.at("s").get<int>();
    c.n = j.at("n").get<int>();
    c.bounded = histogram_from(j.at("bounded"));
    c.top_edges = j.at("top_edges").get<int>();
    c.bottom_edges = j.at("bottom_edges").get<int>();
    c.left = histogram_from(j.at("left"));
    c.right = histogram_from(j.at("right"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("census JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::Parse, std::string("census JSON: ") + e.what());
  }
}

std::string projective_census_to_json(const ProjectiveCensus& c) {
  ordered_json j;
  j["s"] = c.s;
  j["n"] = c.n;
  j["histogram"] = histogram_json(c.histogram);
  return dump(j);
}

std::string validity_to_json(const ChainValidity& v) {
  ordered_json j;
  j["valid"] = v.valid();
  j["x_monotone"] = v.x_monotone;
  j["general_position"] = v.general_position;
  j["upper_shadow_ok"] = v.upper_shadow_ok;
  j["consecutive_edges_uncrossed"] = v.consecutive_edges_uncrossed;
  ordered_json violations = ordered_json::array();
  for (const auto& w : v.violations) {
    violations.push_back({{"check", w.check}, {"indices", w.indices}});
  }
  j["violations"] = std::move(violations);
  return dump(j);
}

std::string report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["all_pass"] = r.all_pass();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"s", c.s}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return dump(j);
}

}  // namespace koch::io
