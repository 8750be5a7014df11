// koch: command-line front end over the libkoch C API.
//
// Exit codes: 0 success / every check passed, 1 verification failure,
// 2 usage or I/O error.

#include "koch.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(koch_status status, const std::string& what)
      : std::runtime_error(what), status(status) {}
  koch_status status;
};

void check(koch_status status) {
  if (status != KOCH_OK) {
    throw LibraryError(status, std::string(koch_status_string(status)) + ": " +
                                   koch_last_error());
  }
}

// Owns a string returned by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { koch_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using ChainHandle = std::unique_ptr<koch_chain, decltype(&koch_chain_free)>;
using ArrangementHandle =
    std::unique_ptr<koch_arrangement, decltype(&koch_arrangement_free)>;

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(item, &used);
      if (used != item.size() || k < 0) throw std::invalid_argument(item);
      out.push_back(k);
    } catch (const std::exception&) {
      throw UsageError("--flatten-exp expects comma-separated non-negative integers");
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return v;
    } catch (const std::exception&) {
      throw UsageError("malformed s-range '" + text + "', expected N or A..B");
    }
  };
  const auto dots = text.find("..");
  const int lo = to_int(dots == std::string::npos ? text : text.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : to_int(text.substr(dots + 2));
  if (lo < 1 || hi < lo) throw UsageError("s-range must satisfy 1 <= A <= B");
  return {lo, hi};
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw UsageError("cannot open '" + out_path + "' for writing");
  os << content;
  if (!os) throw UsageError("failed writing '" + out_path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

ChainHandle make_chain(int s, const std::string& exponents) {
  koch_chain* raw = nullptr;
  if (exponents.empty()) {
    check(koch_chain_generate(s, nullptr, 0, &raw));
  } else {
    const auto exps = parse_exponents(exponents);
    check(koch_chain_generate(s, exps.data(), exps.size(), &raw));
  }
  return ChainHandle(raw, &koch_chain_free);
}

ArrangementHandle make_arrangement(const koch_chain* chain) {
  koch_arrangement* raw = nullptr;
  check(koch_arrangement_build(chain, &raw));
  return ArrangementHandle(raw, &koch_arrangement_free);
}

std::string histogram_rows(const char* kind, const nlohmann::json& h) {
  // Keys are edge counts; print them in ascending numeric order.
  std::vector<std::pair<int, long>> rows;
  for (const auto& [k, v] : h.items()) rows.emplace_back(std::stoi(k), v.get<long>());
  std::sort(rows.begin(), rows.end());
  std::string out;
  char buf[96];
  for (const auto& [k, c] : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %5d %8ld\n", kind, k, c);
    out += buf;
  }
  return out;
}

std::string census_table(const std::string& json_text, bool projective) {
  const auto j = nlohmann::json::parse(json_text);
  std::string out = "s=" + std::to_string(j["s"].get<int>()) +
                    " n=" + std::to_string(j["n"].get<int>()) +
                    (projective ? " (projective)\n" : "\n");
  out += "kind       edges    count\n";
  if (projective) return out + histogram_rows("face", j["histogram"]);
  out += histogram_rows("bounded", j["bounded"]);
  out += histogram_rows("top", {{std::to_string(j["top_edges"].get<int>()), 1}});
  out += histogram_rows("bottom", {{std::to_string(j["bottom_edges"].get<int>()), 1}});
  out += histogram_rows("left", j["left"]);
  out += histogram_rows("right", j["right"]);
  return out;
}

std::string report_table(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  std::string out;
  for (const auto& c : j["checks"]) {
    out += std::string(c["pass"].get<bool>() ? "PASS" : "FAIL") + "  s=" +
           std::to_string(c["s"].get<int>()) + "  " + c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) out += "  " + detail;
    out += "\n";
  }
  for (const auto& note : j["notes"]) out += "note: " + note.get<std::string>() + "\n";
  out += j["all_pass"].get<bool>() ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

void require_format(const std::string& format) {
  if (format != "json" && format != "table") {
    throw UsageError("--format must be json or table");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koch chain and dual arrangement toolkit"};
  app.require_subcommand(1);

  int size = 0;
  std::string exponents;
  std::string out_path;
  std::string format = "json";

  auto* gen = app.add_subcommand("gen", "generate K_s as chain JSON");
  gen->add_option("-s,--size", size, "iteration s >= 1")->required()->check(CLI::PositiveNumber);
  gen->add_option("--flatten-exp", exponents, "per-level exponents k,k,... (levels 2..s)");
  gen->add_option("--out", out_path, "output path (default stdout)");

  bool projective = false;
  auto* census = app.add_subcommand("census", "face census of the dual arrangement");
  census->add_option("-s,--size", size, "iteration s >= 1")->required()->check(CLI::PositiveNumber);
  census->add_flag("--projective", projective, "merge antipodal unbounded faces");
  census->add_option("--format", format, "json or table");
  census->add_option("--flatten-exp", exponents, "per-level exponents");
  census->add_option("--out", out_path, "output path");

  std::string range_text;
  std::string chain_path;
  int oracle_cap = 4;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "check chains and face counts against the closed forms");
  auto* verify_size = verify->add_option("-s,--size", range_text, "N or A..B");
  auto* verify_range = verify->add_option("--range", range_text, "A..B");
  verify_size->excludes(verify_range);
  auto* verify_chain = verify->add_option("--chain", chain_path, "verify a chain JSON file");
  verify_chain->excludes(verify_size)->excludes(verify_range);
  verify->add_option("--oracle-cap", oracle_cap, "largest s cross-checked by the oracle");
  verify->add_option("--format", verify_format, "json or table");
  verify->add_option("--out", out_path, "output path");

  bool dual = false;
  bool primal = false;
  int width = 800;
  std::string clip;
  auto* render = app.add_subcommand("render", "draw the chain or its dual arrangement as SVG");
  render->add_option("-s,--size", size, "iteration s >= 1")->required()->check(CLI::PositiveNumber);
  auto* dual_flag = render->add_flag("--dual", dual, "draw the dual line arrangement");
  render->add_flag("--primal", primal, "draw the point chain (default)")->excludes(dual_flag);
  render->add_option("--width", width, "canvas width in pixels");
  render->add_option("--clip", clip, "dual window half-width as num/den");
  render->add_option("--flatten-exp", exponents, "per-level exponents");
  render->add_option("--out", out_path, "output path");

  auto* oracle = app.add_subcommand("oracle", "compare builder and sign-vector oracle censuses");
  oracle->add_option("-s,--size", size, "iteration s >= 1")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--flatten-exp", exponents, "per-level exponents");
  oracle->add_option("--format", format, "json or table");
  oracle->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      auto chain = make_chain(size, exponents);
      int valid = 0;
      LibString report;
      check(koch_chain_validate(chain.get(), &valid, &report.ptr));
      LibString json;
      check(koch_chain_to_json(chain.get(), &json.ptr));
      emit(json.str(), out_path);
      if (!valid) {
        std::cerr << report.str();
        return kExitFailed;
      }
      return kExitOk;
    }

    if (census->parsed()) {
      require_format(format);
      auto chain = make_chain(size, exponents);
      auto arr = make_arrangement(chain.get());
      LibString json;
      check(koch_arrangement_census_json(arr.get(), projective ? 1 : 0, &json.ptr));
      emit(format == "json" ? json.str() : census_table(json.str(), projective), out_path);
      return kExitOk;
    }

    if (verify->parsed()) {
      require_format(verify_format);
      int all_pass = 0;
      LibString report;
      if (!chain_path.empty()) {
        const std::string text = read_file(chain_path);
        koch_chain* raw = nullptr;
        check(koch_chain_from_json(text.c_str(), &raw));
        ChainHandle chain(raw, &koch_chain_free);
        check(koch_verify_chain(chain.get(), oracle_cap, &all_pass, &report.ptr));
      } else {
        const auto [lo, hi] = parse_range(range_text.empty() ? "1..5" : range_text);
        check(koch_verify_range(lo, hi, oracle_cap, &all_pass, &report.ptr));
      }
      emit(verify_format == "json" ? report.str() : report_table(report.str()), out_path);
      return all_pass ? kExitOk : kExitFailed;
    }

    if (render->parsed()) {
      auto chain = make_chain(size, exponents);
      LibString svg;
      check(koch_render_svg(chain.get(), dual ? KOCH_RENDER_DUAL : KOCH_RENDER_PRIMAL,
                            width, clip.empty() ? nullptr : clip.c_str(), &svg.ptr));
      emit(svg.str(), out_path);
      return kExitOk;
    }

    if (oracle->parsed()) {
      require_format(format);
      auto chain = make_chain(size, exponents);
      auto arr = make_arrangement(chain.get());
      int equal = 0;
      LibString oracle_json;
      LibString builder_json;
      check(koch_arrangement_oracle(arr.get(), &equal, &oracle_json.ptr));
      check(koch_arrangement_census_json(arr.get(), 0, &builder_json.ptr));
      std::string out;
      if (format == "json") {
        nlohmann::ordered_json j;
        j["equal"] = equal == 1;
        j["builder"] = nlohmann::ordered_json::parse(builder_json.str());
        j["oracle"] = nlohmann::ordered_json::parse(oracle_json.str());
        out = j.dump(2) + "\n";
      } else {
        out = "builder\n" + census_table(builder_json.str(), false) + "oracle\n" +
              census_table(oracle_json.str(), false) +
              (equal ? "censuses agree\n" : "censuses DIFFER\n");
      }
      emit(out, out_path);
      return equal ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.status == KOCH_E_INVALID_ARGUMENT || e.status == KOCH_E_PARSE;
    return usage ? kExitUsage : kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
