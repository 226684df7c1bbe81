#pragma once

#include <stdexcept>
#include <string>

namespace gupho {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument ranges (non-positive constants, a <= b, bad n, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// |sin(omega T)| fell below the configured floor in the real-time propagator.
class CausticError : public Error {
 public:
  explicit CausticError(const std::string& what) : Error(what) {}
};

/// Renyi order too close to 1; the von Neumann entropy is the right call.
class OrderOneError : public Error {
 public:
  explicit OrderOneError(const std::string& what) : Error(what) {}
};

/// Entropy has no interior maximum in the searched bracket (e.g. alpha = 0).
class NoMaximumError : public Error {
 public:
  explicit NoMaximumError(const std::string& what) : Error(what) {}
};

/// Quadrature grid fails a validity requirement (kernel not negligible at the edge).
class GridError : public Error {
 public:
  explicit GridError(const std::string& what) : Error(what) {}
};

}  // namespace gupho
