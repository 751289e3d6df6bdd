#pragma once

#include <stdexcept>
#include <string>

namespace gph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (graph text, JSON, cycle notation).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size guard (faces, closure elements, coset rows, search
/// bounds) was hit before the computation finished.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same answer disagreed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Default size guards. Every long-running routine takes its cap as an
/// argument defaulting to one of these.
struct Caps {
  static constexpr std::size_t faces = 1'000'000;
  static constexpr std::size_t closure = 10'000'000;
  static constexpr std::size_t cosets = 1'000'000;
  static constexpr std::size_t flags = 2'000'000;
  static constexpr int automorphism_degree = 10;
  static constexpr int canonical_degree = 10;
  static constexpr int census_edges = 7;
};

}  // namespace gph
