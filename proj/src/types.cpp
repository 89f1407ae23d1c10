#include "topedge/types.hpp"

#include <cmath>

namespace topedge {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::GaplessInput: return "gapless-input";
    case ErrorKind::ResolutionInsufficient: return "resolution-insufficient";
    case ErrorKind::CutoffInsufficient: return "cutoff-insufficient";
    case ErrorKind::WindowBoundary: return "window-boundary";
    case ErrorKind::BoundaryDegenerate: return "boundary-degenerate";
    case ErrorKind::NotAFermiPoint: return "not-a-fermi-point";
    case ErrorKind::TrackingFailure: return "tracking-failure";
    case ErrorKind::SymmetryViolation: return "symmetry-violation";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::Usage: return "usage-error";
  }
  return "error";
}

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double angle_distance(double x, double y) {
  double d = wrap_angle(x - y);
  return std::min(d, kTwoPi - d);
}

}  // namespace topedge
