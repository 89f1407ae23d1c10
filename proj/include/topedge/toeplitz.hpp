#pragma once

#include <map>
#include <vector>

#include "topedge/bloch.hpp"
#include "topedge/types.hpp"

namespace topedge {

struct BlockSymbol {
  int rank = 0;
  std::map<int, Matrix> coeffs;  // Fourier degree -> block
  std::vector<double> source;    // parameter point the symbol was built at

  Matrix eval(double k) const;
  int max_degree() const;
};

BlockSymbol symbol_from_bulk(const BlochFamily& family, std::span<const double> k_par, int fourier_cutoff);

struct FredholmCheck {
  bool fredholm = false;
  double min_singular_value = 0.0;
};

FredholmCheck fredholm_check(const BlockSymbol& symbol, int samples);

// Smallest |eigenvalue| of the symbol over a uniform grid of S^1.
double symbol_gap(const BlockSymbol& symbol, int samples = 256);

struct TruncatedToeplitz {
  BlockSymbol symbol;
  int sites = 0;
  Matrix matrix;
};

TruncatedToeplitz truncate(const BlockSymbol& symbol, int sites);

struct EigenPair {
  double value = 0.0;
  Vector vector;
  double weight = 0.0;  // squared norm on the first ceil(N/2) sites
  bool certified = false;
};

struct LowEnergyWindow {
  double mu = 0.0;
  std::vector<EigenPair> pairs;

  std::vector<EigenPair> certified() const;
  std::vector<double> certified_values() const;
};

LowEnergyWindow low_energy_window(const TruncatedToeplitz& t, double mu, double loc_threshold = 0.9);

}  // namespace topedge
