#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avmod {

/// Two values from different ambient dimensions were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element that must lie in U(L+) (or L+) received a generator of degree -1.
class LplusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed gauge module description.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or dimension error while parsing an expression. `position` is a
/// zero-based character offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace avmod
