#pragma once

#include <span>
#include <string>
#include <vector>

#include "topedge/types.hpp"

namespace topedge {

enum class BaseKind { Circle, Torus, Sphere };

// Circle and torus points are angle vectors; sphere points are unit vectors in R^(d+1).
// Sphere charts are graphs over the coordinate hyperplanes: chart 2j (+) and 2j+1 (-) solve for
// coordinate j. A chart is positive when (dX/du_1, ..., dX/du_d, outward normal) is positive in R^(d+1).
struct ParameterSpace {
  BaseKind kind = BaseKind::Torus;
  int dim = 1;

  static ParameterSpace circle() { return {BaseKind::Circle, 1}; }
  static ParameterSpace torus(int d) { return {BaseKind::Torus, d}; }
  static ParameterSpace sphere(int d) { return {BaseKind::Sphere, d}; }

  std::string name() const;
  int ambient_dim() const;
  int chart_count() const;
  bool periodic() const { return kind != BaseKind::Sphere; }

  std::vector<double> embed(int chart, std::span<const double> u) const;
  std::vector<double> chart_coords(int chart, std::span<const double> x) const;
  RealMatrix embed_jacobian(int chart, std::span<const double> u) const;  // ambient x dim
  int chart_orientation(int chart, std::span<const double> u) const;
  int best_chart(std::span<const double> x) const;
  // Box of chart coordinates to scan: [lo, hi] per axis.
  std::pair<double, double> scan_box() const;
  bool in_chart_domain(std::span<const double> u) const;
  double distance(std::span<const double> x, std::span<const double> y) const;
  std::vector<double> canonical(std::span<const double> x) const;
};

}  // namespace topedge
