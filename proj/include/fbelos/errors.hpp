#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbelos {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::string name, std::size_t offset);

  const std::string& name() const noexcept { return name_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

/// Raised by expression evaluation instead of producing NaN or an infinity.
class DomainError : public Error {
 public:
  DomainError(std::string node, double argument, const std::string& what);

  /// Serialized form of the node that failed.
  const std::string& node() const noexcept { return node_; }
  double argument() const noexcept { return argument_; }

 private:
  std::string node_;
  double argument_;
};

class NonDifferentiable : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(double best_estimate, double error_estimate, std::size_t evaluations);

  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_; }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  double best_;
  double error_;
  std::size_t evaluations_;
};

class NoBracket : public Error {
 public:
  using Error::Error;
};

struct AdmissibilityViolation {
  enum class Kind { EndpointNonzero, NonPositive, NotEvaluable };
  Kind kind;
  double x;
  double value;  // NaN when not evaluable
};

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(std::vector<AdmissibilityViolation> violations);
  explicit NotAdmissible(const std::string& reason);

  const std::vector<AdmissibilityViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<AdmissibilityViolation> violations_;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

class BadCusp : public Error {
 public:
  using Error::Error;
};

class NestingViolation : public Error {
 public:
  using Error::Error;
};

class BadSection : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class DegenerateParallelogram : public Error {
 public:
  using Error::Error;
};

class NoMeanValuePoint : public Error {
 public:
  using Error::Error;
};

class InfiniteSlope : public Error {
 public:
  using Error::Error;
};

class ParallelTangents : public Error {
 public:
  using Error::Error;
};

class NotARectangle : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class OverlayUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace fbelos
