#ifndef CATSIM_ERRORS_HPP
#define CATSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catsim {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller passed an argument outside the documented domain.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// Cat amplitude too small: the odd-cat normalization diverges as beta -> 0.
class DegenerateAmplitudeError : public InvalidArgumentError {
 public:
  explicit DegenerateAmplitudeError(const std::string& what)
      : InvalidArgumentError(what) {}
};

/// A state failed a normalization / hermiticity precondition.
class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(const std::string& what) : Error(what) {}
};

/// Requested analytic state does not fit in the truncated basis.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double tail_mass)
      : Error(what), tail_mass(tail_mass) {}
  double tail_mass;
};

/// Normalizing a (numerically) zero vector, e.g. annihilating the vacuum.
class ZeroStateError : public Error {
 public:
  explicit ZeroStateError(const std::string& what) : Error(what) {}
};

/// Post-selecting on an outcome whose probability vanishes.
class ImpossibleOutcomeError : public Error {
 public:
  explicit ImpossibleOutcomeError(const std::string& what) : Error(what) {}
};

}  // namespace catsim

#endif
