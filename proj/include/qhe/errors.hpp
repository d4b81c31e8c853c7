#pragma once

#include <stdexcept>
#include <string>

namespace qhe {

// Base for every error raised by the library. Each subclass maps onto one
// CLI exit code (see tools/qhe_main.cpp).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A physical parameter lies outside its domain (gamma outside [0,1], beta <= 0, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

// A caller broke a structural precondition (non-symmetric matrix, NaN energies).
class ContractError : public Error {
  public:
    using Error::Error;
};

// Numerical failure: eigensolver non-convergence, cutoff non-convergence.
class SolverError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace qhe
