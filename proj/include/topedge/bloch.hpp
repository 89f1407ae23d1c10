#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topedge/types.hpp"

namespace topedge {

struct BlochFamily {
  std::string id;
  int dim = 0;   // torus dimension
  int rank = 0;  // fibre dimension
  std::function<Matrix(std::span<const double>)> eval;
  // Optional analytic d/dk_axis; central differences otherwise.
  std::function<Matrix(std::span<const double>, int)> derivative;
  bool gap_required = true;

  Matrix at(std::span<const double> k) const { return eval(k); }
  Matrix partial(std::span<const double> k, int axis) const;
};

struct SpectralProjector {
  Matrix matrix;
  int negative_count = 0;
};

SpectralProjector negative_projector(const Matrix& h, double tol = 1e-10);

// Optional per-site unitary rotation of the occupied and empty eigenframes.
using FrameGauge = std::function<std::pair<Matrix, Matrix>(std::size_t site, int occupied, int empty)>;

struct ChernOptions {
  int threads = 1;
  FrameGauge gauge;
  bool section_count = true;
  std::uint64_t seed = 42;
  int section_trials = 3;
};

struct SecondChernResult {
  double raw = 0.0;
  int rounded = 0;
  double quality = 0.0;  // |raw - rounded|
  double min_gap = 0.0;
  int grid = 0;
  bool resolution_warning = false;
  // Signed zero count of generic sections of the occupied bundle (rank 2 only).
  std::optional<int> section_count;
  std::vector<int> section_trials;
  // Integer reported downstream: the section count when it is consistent, the rounded value otherwise.
  int value = 0;
};

SecondChernResult second_chern_number(const BlochFamily& family, int grid, const ChernOptions& opts = {});

struct SymmetryCheck {
  bool symmetric = false;
  double max_deviation = 0.0;
  std::vector<double> worst_point;
};

SymmetryCheck check_ai_symmetry(const BlochFamily& family, int samples, std::uint64_t seed = 42);

// Reverse the orientation of one torus axis: k_axis -> -k_axis.
BlochFamily reversed_axis(const BlochFamily& family, int axis);

// Direct sum with a constant Hermitian block.
BlochFamily stabilized(const BlochFamily& family, const Matrix& block);

}  // namespace topedge
