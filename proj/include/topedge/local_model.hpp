#pragma once

#include <string>
#include <vector>

#include "topedge/types.hpp"

namespace topedge {

struct LocalModelParams {
  double a = 0.0;
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};
  double energy = 0.0;
};

// Geometric edge vector psi(n) = c^(n-1) * (first, 0, 0, last), n >= 1, with 0^0 = 1.
struct EdgeVector {
  cplx first{0.0, 0.0};
  cplx last{0.0, 0.0};
  cplx decay{0.0, 0.0};

  Eigen::Vector4cd at(int site) const;
  // Stacked values on sites 1..sites, normalised to unit length.
  Vector materialize(int sites) const;
};

enum class KernelKind { NoSolution, Dim1, Dim2, InfiniteDim };

const char* kernel_kind_name(KernelKind kind);

struct KernelClassification {
  KernelKind kind = KernelKind::NoSolution;
  std::vector<EdgeVector> basis;
  std::string condition_tag;
};

Matrix h_loc(const LocalModelParams& p, double k);

// Fourier blocks: h_loc(k) = onsite + hopping e^{ik} + hopping^* e^{-ik}.
Matrix local_hopping_block();
Matrix local_onsite_block(const LocalModelParams& p);

// psi(n+1) = R psi(n) for solutions of (H - E) psi = 0 on the half line.
Matrix transfer_matrix(const LocalModelParams& p);

// The two vectors spanning the admissible values of psi(1).
std::vector<Eigen::Vector4cd> recursion_seed_span(const LocalModelParams& p);

double discriminant(const LocalModelParams& p);

KernelClassification kernel_classification(const LocalModelParams& p);

// Re(b) s1 + Im(b) s2 + a s3.
Matrix effective_hamiltonian(double a, cplx b);

}  // namespace topedge
