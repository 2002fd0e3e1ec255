#pragma once

#include <stdexcept>
#include <string>

namespace idealgraph {

/// Thrown when an exhaustive operation would exceed its configured cap.
/// Caps are explicit configuration; exceeding one is an error, never a
/// silent truncation of an exhaustive search.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ring-spec text that does not match the grammar. Carries the byte offset
/// of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace idealgraph
