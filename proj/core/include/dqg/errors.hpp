#pragma once

#include <stdexcept>
#include <string>

namespace dqg {

/// Base of every error the library raises on a contract violation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgebraMismatch : public Error {
 public:
  explicit AlgebraMismatch(const std::string& what) : Error("algebra mismatch: " + what) {}
};

class NotInSpan : public Error {
 public:
  explicit NotInSpan(const std::string& what) : Error("not in span: " + what) {}
};

class WindowTooSmall : public Error {
 public:
  explicit WindowTooSmall(const std::string& what) : Error("window too small: " + what) {}
};

class UnitNotFound : public Error {
 public:
  explicit UnitNotFound(const std::string& what) : Error("unit not found: " + what) {}
};

class ReconstructionMismatch : public Error {
 public:
  explicit ReconstructionMismatch(const std::string& what)
      : Error("reconstruction mismatch: " + what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error("singular matrix: " + what) {}
};

}  // namespace dqg
