#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace topedge {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cplx kI{0.0, 1.0};

enum class ErrorKind {
  InvalidArgument,
  GaplessInput,
  ResolutionInsufficient,
  CutoffInsufficient,
  WindowBoundary,
  BoundaryDegenerate,
  NotAFermiPoint,
  TrackingFailure,
  SymmetryViolation,
  Io,
  Usage,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Wrap an angle into [0, 2pi).
double wrap_angle(double x);

// Distance on the circle between two angles.
double angle_distance(double x, double y);

}  // namespace topedge
