#pragma once

#include <stdexcept>
#include <string>

namespace signedchroma {

/// Malformed textual input (graph files, arrangement files, orientation tokens).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation produced a result that contradicts an internal
/// consistency check (e.g. an overdetermined interpolation with no solution).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace signedchroma
