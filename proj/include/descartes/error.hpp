#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace descartes {

/// Raised when an operation's mathematical precondition is violated
/// (zero polynomial, root at a Budan endpoint, a > b, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the text parsers. `position` is a 0-based offset into the input.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace descartes
