#include "koch.h"

#include "koch/arrangement.hpp"
#include "koch/chain.hpp"
#include "koch/error.hpp"
#include "koch/json_io.hpp"
#include "koch/oracle.hpp"
#include "koch/pipeline.hpp"
#include "koch/projective.hpp"
#include "koch/render.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct koch_chain {
  koch::Chain chain;
};

struct koch_arrangement {
  koch::Arrangement arr;
  koch::EuclideanCensus census;
  koch::ProjectiveCensus projective;
};

namespace {

thread_local std::string last_error;

koch_status status_of(koch::ErrorCode code) {
  using koch::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return KOCH_E_INVALID_ARGUMENT;
    case ErrorCode::ParallelLines: return KOCH_E_PARALLEL_LINES;
    case ErrorCode::DuplicateSlope: return KOCH_E_DUPLICATE_SLOPE;
    case ErrorCode::ConcurrentLines: return KOCH_E_CONCURRENT_LINES;
    case ErrorCode::DegenerateTriple: return KOCH_E_DEGENERATE_TRIPLE;
    case ErrorCode::FlatteningDivergence: return KOCH_E_FLATTENING_DIVERGENCE;
    case ErrorCode::ChainInvalid: return KOCH_E_CHAIN_INVALID;
    case ErrorCode::MissingAntipode: return KOCH_E_MISSING_ANTIPODE;
    case ErrorCode::Parse: return KOCH_E_PARSE;
    case ErrorCode::Internal: return KOCH_E_INTERNAL;
  }
  return KOCH_E_INTERNAL;
}

koch_status fail(koch_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
koch_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return KOCH_OK;
  } catch (const koch::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KOCH_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KOCH_E_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define KOCH_REQUIRE(cond)                                                  \
  do {                                                                      \
    if (!(cond)) {                                                          \
      return fail(KOCH_E_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    }                                                                       \
  } while (0)

}  // namespace

extern "C" {

const char* koch_status_string(koch_status status) {
  switch (status) {
    case KOCH_OK: return "ok";
    case KOCH_E_INVALID_ARGUMENT: return "invalid argument";
    case KOCH_E_PARALLEL_LINES: return "parallel lines";
    case KOCH_E_DUPLICATE_SLOPE: return "duplicate slope";
    case KOCH_E_CONCURRENT_LINES: return "concurrent lines";
    case KOCH_E_DEGENERATE_TRIPLE: return "degenerate triple";
    case KOCH_E_FLATTENING_DIVERGENCE: return "flattening divergence";
    case KOCH_E_CHAIN_INVALID: return "chain invalid";
    case KOCH_E_MISSING_ANTIPODE: return "missing antipode";
    case KOCH_E_PARSE: return "parse error";
    case KOCH_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* koch_last_error(void) { return last_error.c_str(); }

void koch_string_free(char* str) { std::free(str); }

koch_status koch_chain_generate(int s, const int* exponents,
                                size_t exponent_count, koch_chain** out) {
  KOCH_REQUIRE(out != nullptr);
  KOCH_REQUIRE(exponents != nullptr || exponent_count == 0);
  *out = nullptr;
  return guarded([&] {
    koch::GenerateOptions options;
    if (exponents != nullptr) {
      options.override_exponents.emplace(exponents, exponents + exponent_count);
    }
    *out = new koch_chain{koch::generate_chain(s, options)};
  });
}

koch_status koch_chain_from_json(const char* json, koch_chain** out) {
  KOCH_REQUIRE(json != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] { *out = new koch_chain{koch::io::chain_from_json(json)}; });
}

koch_status koch_chain_to_json(const koch_chain* chain, char** out) {
  KOCH_REQUIRE(chain != nullptr && out != nullptr);
  return guarded([&] { *out = copy_out(koch::io::chain_to_json(chain->chain)); });
}

koch_status koch_chain_info(const koch_chain* chain, int* s, size_t* point_count) {
  KOCH_REQUIRE(chain != nullptr);
  if (s != nullptr) *s = chain->chain.s;
  if (point_count != nullptr) *point_count = chain->chain.points.size();
  return KOCH_OK;
}

koch_status koch_chain_validate(const koch_chain* chain, int* valid,
                                char** report_json) {
  KOCH_REQUIRE(chain != nullptr && valid != nullptr);
  return guarded([&] {
    const auto validity = koch::validate_chain(chain->chain);
    *valid = validity.valid() ? 1 : 0;
    if (report_json != nullptr) {
      *report_json = copy_out(koch::io::validity_to_json(validity));
    }
  });
}

koch_status koch_chain_same_order_type(const koch_chain* a, const koch_chain* b,
                                       int* equal) {
  KOCH_REQUIRE(a != nullptr && b != nullptr && equal != nullptr);
  return guarded([&] {
    *equal = koch::chirotope(a->chain) == koch::chirotope(b->chain) ? 1 : 0;
  });
}

void koch_chain_free(koch_chain* chain) { delete chain; }

koch_status koch_arrangement_build(const koch_chain* chain,
                                   koch_arrangement** out) {
  KOCH_REQUIRE(chain != nullptr && out != nullptr);
  *out = nullptr;
  return guarded([&] {
    auto* handle = new koch_arrangement{};
    try {
      handle->arr = koch::build_dual_arrangement(chain->chain);
      handle->census = koch::euclidean_census(handle->arr);
      handle->projective = koch::projective_census(handle->arr);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

koch_status koch_arrangement_info(const koch_arrangement* arr, size_t* lines,
                                  size_t* vertices, size_t* faces) {
  KOCH_REQUIRE(arr != nullptr);
  if (lines != nullptr) *lines = arr->arr.lines.size();
  if (vertices != nullptr) *vertices = arr->arr.vertices.size();
  if (faces != nullptr) *faces = arr->arr.faces.size();
  return KOCH_OK;
}

koch_status koch_arrangement_census_json(const koch_arrangement* arr,
                                         int projective, char** out) {
  KOCH_REQUIRE(arr != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_out(projective ? koch::io::projective_census_to_json(arr->projective)
                               : koch::io::census_to_json(arr->census));
  });
}

koch_status koch_arrangement_face_count(const koch_arrangement* arr,
                                        int projective, int edge_count,
                                        long* count) {
  KOCH_REQUIRE(arr != nullptr && count != nullptr);
  long total = 0;
  if (projective) {
    const auto it = arr->projective.histogram.find(edge_count);
    if (it != arr->projective.histogram.end()) total = static_cast<long>(it->second);
  } else {
    for (const auto& f : arr->arr.faces) {
      if (f.edge_count == edge_count) ++total;
    }
  }
  *count = total;
  return KOCH_OK;
}

koch_status koch_arrangement_oracle(const koch_arrangement* arr, int* equal,
                                    char** oracle_json) {
  KOCH_REQUIRE(arr != nullptr && equal != nullptr);
  return guarded([&] {
    const auto& lines = arr->arr.lines;
    const auto euclid = koch::oracle::signvector_census(lines, arr->arr.s);
    const auto proj = koch::oracle::signvector_projective_census(lines, arr->arr.s);
    const bool same = koch::oracle::compare_census(arr->census, euclid).empty() &&
                      proj.histogram == arr->projective.histogram;
    *equal = same ? 1 : 0;
    if (oracle_json != nullptr) *oracle_json = copy_out(koch::io::census_to_json(euclid));
  });
}

void koch_arrangement_free(koch_arrangement* arr) { delete arr; }

koch_status koch_verify_range(int s_lo, int s_hi, int oracle_cap, int* all_pass,
                              char** report_json) {
  KOCH_REQUIRE(all_pass != nullptr);
  return guarded([&] {
    const auto report = koch::verify_range(s_lo, s_hi, {.oracle_cap = oracle_cap});
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json != nullptr) *report_json = copy_out(koch::io::report_to_json(report));
  });
}

koch_status koch_verify_chain(const koch_chain* chain, int oracle_cap,
                              int* all_pass, char** report_json) {
  KOCH_REQUIRE(chain != nullptr && all_pass != nullptr);
  return guarded([&] {
    const auto result = koch::verify_chain(chain->chain, {.oracle_cap = oracle_cap});
    *all_pass = result.report.all_pass() ? 1 : 0;
    if (report_json != nullptr) {
      *report_json = copy_out(koch::io::report_to_json(result.report));
    }
  });
}

koch_status koch_render_svg(const koch_chain* chain, koch_render_mode mode,
                            int width_px, const char* clip, char** svg) {
  KOCH_REQUIRE(chain != nullptr && svg != nullptr);
  KOCH_REQUIRE(mode == KOCH_RENDER_PRIMAL || mode == KOCH_RENDER_DUAL);
  return guarded([&] {
    koch::RenderOptions options;
    options.mode = mode == KOCH_RENDER_DUAL ? koch::RenderMode::Dual
                                            : koch::RenderMode::Primal;
    options.width_px = width_px;
    if (clip != nullptr) options.clip = koch::Rational::parse(clip);
    *svg = copy_out(koch::render_svg(chain->chain, options));
  });
}

}  // extern "C"
