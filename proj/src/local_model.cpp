#include "topedge/local_model.hpp"

#include <cmath>

namespace topedge {

namespace {

constexpr double kClauseTol = 1e-12;
constexpr double kUnitCircleTol = 1e-9;

cplx power(cplx base, int exponent) {
  cplx out{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

bool near(double x, double y) { return std::abs(x - y) < kClauseTol; }

}  // namespace

Eigen::Vector4cd EdgeVector::at(int site) const {
  cplx scale = power(decay, site - 1);
  return Eigen::Vector4cd(first * scale, 0.0, 0.0, last * scale);
}

Vector EdgeVector::materialize(int sites) const {
  Vector out = Vector::Zero(4 * sites);
  for (int n = 1; n <= sites; ++n) out.segment<4>(4 * (n - 1)) = at(n);
  double nrm = out.norm();
  if (nrm > 0) out /= nrm;
  return out;
}

const char* kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::NoSolution: return "none";
    case KernelKind::Dim1: return "dim1";
    case KernelKind::Dim2: return "dim2";
    case KernelKind::InfiniteDim: return "infinite";
  }
  return "none";
}

Matrix h_loc(const LocalModelParams& p, double k) {
  const cplx e = std::exp(kI * k);
  const cplx cb = std::conj(p.c);
  const cplx bb = std::conj(p.b);
  Matrix h(4, 4);
  h << p.a, cb - e, 0.0, bb,
       p.c - std::conj(e), -p.a, bb, 0.0,
       0.0, p.b, p.a, -p.c + std::conj(e),
       p.b, 0.0, -cb + e, -p.a;
  return h;
}

Matrix local_hopping_block() {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 1) = -1.0;
  a(3, 2) = 1.0;
  return a;
}

Matrix local_onsite_block(const LocalModelParams& p) {
  const cplx cb = std::conj(p.c);
  const cplx bb = std::conj(p.b);
  Matrix v(4, 4);
  v << p.a, cb, 0.0, bb,
       p.c, -p.a, bb, 0.0,
       0.0, p.b, p.a, -p.c,
       p.b, 0.0, -cb, -p.a;
  return v;
}

Matrix transfer_matrix(const LocalModelParams& p) {
  if (std::abs(p.c) == 0.0) throw Error(ErrorKind::InvalidArgument, "transfer matrix needs c != 0");
  const double a = p.a;
  const double e = p.energy;
  const cplx b = p.b, c = p.c;
  const cplx bb = std::conj(b), cb = std::conj(c);
  const double s = a * a + std::norm(b) + 1.0 - e * e;
  Matrix r(4, 4);
  r << c, -(a + e), bb, 0.0,
       -c * (a - e) / cb, s / cb, 0.0, -bb * c / cb,
       b * c / cb, 0.0, s / cb, -(a + e) * c / cb,
       0.0, -b, -(a - e), c;
  return r;
}

std::vector<Eigen::Vector4cd> recursion_seed_span(const LocalModelParams& p) {
  const double a = p.a, e = p.energy;
  return {Eigen::Vector4cd(std::conj(p.c), -(a - e), p.b, 0.0),
          Eigen::Vector4cd(0.0, -std::conj(p.b), -(a + e), std::conj(p.c))};
}

double discriminant(const LocalModelParams& p) {
  const double base = p.a * p.a + std::norm(p.b) - p.energy * p.energy;
  const double r = std::abs(p.c);
  return (base + (r - 1.0) * (r - 1.0)) * (base + (r + 1.0) * (r + 1.0));
}

KernelClassification kernel_classification(const LocalModelParams& p) {
  KernelClassification out;
  const double a = p.a, e = p.energy;
  const double abs_b = std::abs(p.b), abs_c = std::abs(p.c);
  const double bulk_edge = std::sqrt(a * a + abs_b * abs_b + 1.0);
  const double edge = std::sqrt(a * a + abs_b * abs_b);
  auto check_unit = [&](const char* tag) {
    if (std::abs(abs_c - 1.0) < kUnitCircleTol)
      throw Error(ErrorKind::BoundaryDegenerate, std::string(tag) + " with |c| = 1 lies on the bad locus");
  };

  if (abs_c < kClauseTol && near(std::abs(e), bulk_edge)) {
    out.kind = KernelKind::InfiniteDim;
    out.condition_tag = "flat-band";
    return out;
  }
  if (abs_b < kClauseTol && std::abs(a) < kClauseTol && std::abs(e) < kClauseTol) {
    check_unit("zero mode");
    if (abs_c < 1.0) {
      out.kind = KernelKind::Dim2;
      out.condition_tag = "double-zero-mode";
      out.basis.push_back({1.0, 0.0, p.c});
      out.basis.push_back({0.0, 1.0, p.c});
    } else {
      out.condition_tag = "none";
    }
    return out;
  }
  if (near(std::abs(e), edge) && std::abs(e) >= kClauseTol) {
    check_unit("edge energy");
    if (abs_c < 1.0) {
      out.kind = KernelKind::Dim1;
      out.condition_tag = "edge-mode";
      if (abs_b >= kClauseTol)
        out.basis.push_back({(a + e) / p.b, 1.0, p.c});
      else if (near(e, a))
        out.basis.push_back({1.0, 0.0, p.c});
      else
        out.basis.push_back({0.0, 1.0, p.c});
    } else {
      out.condition_tag = "none";
    }
    return out;
  }
  out.condition_tag = "none";
  return out;
}

Matrix effective_hamiltonian(double a, cplx b) {
  Matrix h(2, 2);
  h << a, std::conj(b), b, -a;
  return h;
}

}  // namespace topedge
