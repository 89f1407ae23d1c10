#pragma once

#include <span>
#include <vector>

#include "topedge/types.hpp"

namespace topedge {

struct GradedCliffordRep {
  int n = 0;
  int dim = 0;
  Matrix epsilon;
  std::vector<Matrix> gammas;
};

struct UngradedCliffordRep {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> gammas;
};

// Graded tensor product in Kronecker order: generators g (x) 1 then eps (x) g'.
GradedCliffordRep graded_tensor_product(const GradedCliffordRep& lhs, const GradedCliffordRep& rhs);

// Stable permutation of the basis putting the +1 eigenspace of epsilon first.
GradedCliffordRep block_sorted(const GradedCliffordRep& rep);

GradedCliffordRep standard_graded_rep(int n);
UngradedCliffordRep standard_ungraded_rep(int n);

Matrix clifford_mu(std::span<const Matrix> gammas, std::span<const double> x);
Matrix clifford_mu(const GradedCliffordRep& rep, std::span<const double> x);
Matrix clifford_mu(const UngradedCliffordRep& rep, std::span<const double> x);

// A cos t - gamma sin t; requires A and gamma to anticommute.
Matrix as_suspension(const Matrix& a, const Matrix& gamma_next, double t);

// Largest entrywise deviation from g_i g_j + g_j g_i = 2 delta_ij.
double clifford_relation_error(std::span<const Matrix> gammas);

// Dimension of the space of matrices commuting with every input matrix.
int commutant_dimension(std::span<const Matrix> mats, double tol = 1e-10);

}  // namespace topedge
