#pragma once

#include <stdexcept>
#include <string>

namespace koch {

enum class ErrorCode {
  InvalidArgument,
  ParallelLines,
  DuplicateSlope,
  ConcurrentLines,
  DegenerateTriple,
  FlatteningDivergence,
  ChainInvalid,
  MissingAntipode,
  Parse,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the core carries one of the codes above so the C
// boundary can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace koch
