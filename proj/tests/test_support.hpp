#pragma once

#include <random>

#include "topedge/types.hpp"

namespace testsupport {

inline double max_abs(const topedge::Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline topedge::Matrix pauli(int i) {
  using topedge::cplx;
  topedge::Matrix s(2, 2);
  if (i == 1) s << 0, 1, 1, 0;
  if (i == 2) s << 0, cplx(0, -1), cplx(0, 1), 0;
  if (i == 3) s << 1, 0, 0, -1;
  return s;
}

inline topedge::Matrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  topedge::Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = topedge::cplx(g(rng), g(rng));
  return (m + m.adjoint()) / 2.0;
}

}  // namespace testsupport
