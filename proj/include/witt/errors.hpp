#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witt {

// Caller handed us something unusable: mismatched contexts, bad levels,
// invalid instances, unknown variables.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// Tripped the word-count guard on an oversized expansion.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace witt
