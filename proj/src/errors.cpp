#include "fbelos/errors.hpp"

#include <sstream>

namespace fbelos {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

std::string describe(const std::vector<AdmissibilityViolation>& violations) {
  std::ostringstream os;
  os << "profile is not admissible (" << violations.size() << " violation"
     << (violations.size() == 1 ? "" : "s") << ")";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == 5) {
      os << "; ...";
      break;
    }
    os << "; ";
    switch (v.kind) {
      case AdmissibilityViolation::Kind::EndpointNonzero:
        os << "f(" << v.x << ") = " << v.value << " is not zero";
        break;
      case AdmissibilityViolation::Kind::NonPositive:
        os << "f(" << v.x << ") = " << v.value << " is not positive";
        break;
      case AdmissibilityViolation::Kind::NotEvaluable:
        os << "f(" << v.x << ") cannot be evaluated";
        break;
    }
  }
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error("syntax error at offset " + std::to_string(offset) + ": expected " +
            join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::string name, std::size_t offset)
    : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      name_(std::move(name)),
      offset_(offset) {}

DomainError::DomainError(std::string node, double argument, const std::string& what)
    : Error(what + " in " + node), node_(std::move(node)), argument_(argument) {}

NoConvergence::NoConvergence(double best_estimate, double error_estimate, std::size_t evaluations)
    : Error("quadrature did not converge (best estimate " + std::to_string(best_estimate) +
            ", error estimate " + std::to_string(error_estimate) + ")"),
      best_(best_estimate),
      error_(error_estimate),
      evaluations_(evaluations) {}

NotAdmissible::NotAdmissible(std::vector<AdmissibilityViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

NotAdmissible::NotAdmissible(const std::string& reason)
    : Error("profile is not admissible: " + reason) {}

}  // namespace fbelos
