#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace trapzssq {

using cplx = std::complex<double>;

enum class ErrorKind {
  InvalidDiscretization,
  OutOfRange,
  DegenerateCurve,
  OnCurve,
  InvalidOrder,
  InvalidDensity,
  ContractViolation,
  Assembly,
  Solver,
  InvalidConfig,
  Io,
};

/// Library-wide exception. `kind()` lets callers (the CLI in particular)
/// map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trapzssq
