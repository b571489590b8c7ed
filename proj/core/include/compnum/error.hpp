#pragma once

#include <stdexcept>
#include <string>

namespace compnum {

/// Invalid graph/digraph construction or an out-of-range vertex argument.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural violation in a construction certificate (bad order, prefix
/// violation, added vertex used as a predator).
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace compnum
