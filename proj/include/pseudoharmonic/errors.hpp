#ifndef PSEUDOHARMONIC_ERRORS_HPP
#define PSEUDOHARMONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pseudoharmonic {

// Argument sits on (or too close to) a pole of the evaluated function.
// Carries the location of the nearest pole / singular point.
class PoleError : public std::domain_error {
public:
  PoleError(const std::string& what, double location)
      : std::domain_error(what), location_(location) {}
  double location() const { return location_; }

private:
  double location_ = 0.0;
};

// A case-reduced real evaluation left imaginary mass above tolerance.
// Signals a wrong sign-case reduction, not a numerical accident.
class ImaginaryLeakError : public std::domain_error {
public:
  ImaginaryLeakError(const std::string& what, double imag_mass)
      : std::domain_error(what), imag_mass_(imag_mass) {}
  double imag_mass() const { return imag_mass_; }

private:
  double imag_mass_ = 0.0;
};

// Real branch of a square root / inverse hyperbolic not available on the path.
class BranchError : public std::domain_error {
public:
  explicit BranchError(const std::string& what) : std::domain_error(what) {}
};

// sinh(2*Omega) (or its circular reduction) vanished where a frame quotient
// is required.
class SingularFrameError : public std::domain_error {
public:
  explicit SingularFrameError(const std::string& what) : std::domain_error(what) {}
};

// Jacobian of the map vanished, or a required null derivative is zero.
class DegeneratePointError : public std::domain_error {
public:
  explicit DegeneratePointError(const std::string& what) : std::domain_error(what) {}
};

// Parameter combination outside the admissible set of the requested case.
class InadmissibleCaseError : public std::domain_error {
public:
  explicit InadmissibleCaseError(const std::string& what) : std::domain_error(what) {}
};

// The independent reference integrator could not reach its tolerance.
class OracleFailure : public std::runtime_error {
public:
  explicit OracleFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pseudoharmonic

#endif
