#pragma once

#include "koch/arrangement.hpp"
#include "koch/chain.hpp"
#include "koch/projective.hpp"
#include "koch/report.hpp"

#include <string>
#include <string_view>

// Every rational is written as a "num/den" string; no floats ever appear.

namespace koch::io {

std::string chain_to_json(const Chain& chain);
/// Throws Error{Parse} on malformed input. Does not validate geometry.
Chain chain_from_json(std::string_view text);

std::string census_to_json(const EuclideanCensus& census);
EuclideanCensus census_from_json(std::string_view text);

std::string projective_census_to_json(const ProjectiveCensus& census);

std::string validity_to_json(const ChainValidity& validity);
std::string report_to_json(const VerificationReport& report);

}  // namespace koch::io
