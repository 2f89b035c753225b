#pragma once

#include <stdexcept>
#include <string>

namespace mddim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

// A term escaped the basis family or the truncation bound.
class BasisEscape : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

class UnsupportedInitialTerm : public Error {
 public:
  using Error::Error;
};

// Input to an inverse mapping carries an index outside the mapping domain.
// For the sine mappings this means secular elimination did not run.
class SecularResidue : public Error {
 public:
  using Error::Error;
};

// The unknown eigenvalue increment cannot be determined (zero slope).
class DegenerateCondition : public Error {
 public:
  using Error::Error;
};

class NormalizationInfeasible : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NonlinearAffine : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

class InvalidProblem : public Error {
 public:
  using Error::Error;
};

class OracleFailure : public Error {
 public:
  using Error::Error;
};

// Cancellation has eaten every significant digit of a result.
class PrecisionLoss : public Error {
 public:
  using Error::Error;
};

}  // namespace mddim
