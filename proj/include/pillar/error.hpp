#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pillar {

enum class ErrorCode {
  parse,
  basis_mismatch,
  index_out_of_range,
  budget_exceeded,
  not_z_stable,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text parsers. position is the byte offset of the offending
// token in the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pillar
