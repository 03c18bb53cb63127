#pragma once

#include <stdexcept>
#include <string>

namespace dsmt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Input that is well formed but violates a model, bba or lattice contract.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// The requested quantity does not exist mathematically (e.g. Dempster's rule
/// under total conflict).
class DomainError : public Error {
  public:
    using Error::Error;
};

} // namespace dsmt
