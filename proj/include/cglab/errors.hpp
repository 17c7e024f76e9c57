#pragma once

#include <stdexcept>
#include <string>

namespace cglab {

/// Relator count or element count blew the configured budget. Carries how far
/// the computation got (completed_radius for balls, 0 otherwise).
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, int completed_radius = 0)
      : std::runtime_error(what), completed_radius(completed_radius) {}
  int completed_radius;
};

/// Ball too small for the requested walk length.
class InsufficientRadiusError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Presentation outside an oracle's soundness domain (e.g. C'(1/6) failed).
class UnsupportedPresentationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No usable count entry to bound an exponent with.
class UndefinedEstimateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// theta below the free-group value: Grigorchuk inversion has no eta >= 1/2.
class NoSolutionError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Locality window hypothesis not met (A < B): certificate refused.
class HypothesisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Count table does not cover the requested window exactly.
class IncompleteWindowError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inflated lengths fall outside the table in a diagnostic evaluation.
class CoverageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally invalid diagram (as opposed to a mere label mismatch).
class MalformedDiagramError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cglab
