#pragma once

#include <stdexcept>
#include <string>

namespace mcover {

// Violation of a documented precondition (bad vertex id, foreign edge,
// degree bound exceeded, unsupported parameter value, ...).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input text; `line` is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

// An exhaustive-search routine refused an input above its size limit.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mcover
