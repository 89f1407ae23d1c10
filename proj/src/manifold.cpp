#include "topedge/manifold.hpp"

#include <cmath>

namespace topedge {

namespace {

constexpr double kSphereBox = 0.75;
constexpr double kSphereDomain = 0.98;

}  // namespace

std::string ParameterSpace::name() const {
  switch (kind) {
    case BaseKind::Circle: return "S1";
    case BaseKind::Torus: return "T" + std::to_string(dim);
    case BaseKind::Sphere: return "S" + std::to_string(dim);
  }
  return "?";
}

int ParameterSpace::ambient_dim() const { return kind == BaseKind::Sphere ? dim + 1 : dim; }

int ParameterSpace::chart_count() const { return kind == BaseKind::Sphere ? 2 * (dim + 1) : 1; }

std::vector<double> ParameterSpace::embed(int chart, std::span<const double> u) const {
  if (kind != BaseKind::Sphere) {
    std::vector<double> x(u.begin(), u.end());
    for (auto& v : x) v = wrap_angle(v);
    return x;
  }
  const int j = chart / 2;
  const double s = chart % 2 == 0 ? 1.0 : -1.0;
  double r2 = 0.0;
  for (double v : u) r2 += v * v;
  std::vector<double> x;
  x.reserve(dim + 1);
  for (int i = 0, m = 0; i <= dim; ++i) x.push_back(i == j ? s * std::sqrt(std::max(0.0, 1.0 - r2)) : u[m++]);
  return x;
}

std::vector<double> ParameterSpace::chart_coords(int chart, std::span<const double> x) const {
  if (kind != BaseKind::Sphere) return std::vector<double>(x.begin(), x.end());
  const int j = chart / 2;
  std::vector<double> u;
  for (int i = 0; i <= dim; ++i)
    if (i != j) u.push_back(x[i]);
  return u;
}

RealMatrix ParameterSpace::embed_jacobian(int chart, std::span<const double> u) const {
  if (kind != BaseKind::Sphere) return RealMatrix::Identity(dim, dim);
  const int j = chart / 2;
  const double s = chart % 2 == 0 ? 1.0 : -1.0;
  double r2 = 0.0;
  for (double v : u) r2 += v * v;
  const double h = std::sqrt(std::max(1e-300, 1.0 - r2));
  RealMatrix jac = RealMatrix::Zero(dim + 1, dim);
  for (int i = 0, m = 0; i <= dim; ++i) {
    if (i == j) {
      for (int c = 0; c < dim; ++c) jac(i, c) = -s * u[c] / h;
    } else {
      jac(i, m) = 1.0;
      ++m;
    }
  }
  return jac;
}

int ParameterSpace::chart_orientation(int chart, std::span<const double> u) const {
  if (kind != BaseKind::Sphere) return 1;
  RealMatrix frame(dim + 1, dim + 1);
  frame.leftCols(dim) = embed_jacobian(chart, u);
  auto x = embed(chart, u);
  for (int i = 0; i <= dim; ++i) frame(i, dim) = x[i];
  return frame.determinant() > 0 ? 1 : -1;
}

int ParameterSpace::best_chart(std::span<const double> x) const {
  if (kind != BaseKind::Sphere) return 0;
  int best = 0;
  for (int i = 1; i <= dim; ++i)
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  return 2 * best + (x[best] >= 0 ? 0 : 1);
}

std::pair<double, double> ParameterSpace::scan_box() const {
  if (kind == BaseKind::Sphere) return {-kSphereBox, kSphereBox};
  return {0.0, kTwoPi};
}

bool ParameterSpace::in_chart_domain(std::span<const double> u) const {
  if (kind != BaseKind::Sphere) return true;
  double r2 = 0.0;
  for (double v : u) r2 += v * v;
  return r2 < kSphereDomain;
}

double ParameterSpace::distance(std::span<const double> x, std::span<const double> y) const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = periodic() ? angle_distance(x[i], y[i]) : x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

std::vector<double> ParameterSpace::canonical(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  if (periodic())
    for (auto& v : out) v = wrap_angle(v);
  return out;
}

}  // namespace topedge
