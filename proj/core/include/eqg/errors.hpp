#pragma once

#include <stdexcept>
#include <string>

namespace eqg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group spec, subgroup selector or claim selector.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An input violates a structural invariant (Latin square, closure, normality, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded; the caller must supply the data explicitly.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqg
