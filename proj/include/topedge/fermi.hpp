#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topedge/bloch.hpp"
#include "topedge/local_model.hpp"
#include "topedge/manifold.hpp"
#include "topedge/toeplitz.hpp"

namespace topedge {

// Chain: 2x2 symbol [[a, conj(c) - e^{ik}], [c - e^{-ik}, -a]], sign coordinate a.
// LocalOdd: 4x4 local model, sign coordinates (Re b, Im b, a).
// LocalEven: 4x4 local model with a = 0, site grading diag(1,-1,1,-1), sign coordinates (Re b, Im b).
enum class EdgeModel { Chain, LocalOdd, LocalEven };

int sign_coordinate_count(EdgeModel model);
bool is_odd(EdgeModel model);

struct ParamMap {
  std::string id;
  ParameterSpace base;
  EdgeModel model = EdgeModel::LocalOdd;
  std::function<LocalModelParams(std::span<const double>)> params;
  // Optional: rows d(a, Re b, Im b, Re c, Im c)/d(ambient coordinates).
  std::function<RealMatrix(std::span<const double>)> params_jacobian;
  // Optional edge symbol override, e.g. from a bulk family; default comes from params.
  std::function<BlockSymbol(std::span<const double>)> symbol;

  BlockSymbol symbol_at(std::span<const double> point) const;
  RealVector sign_coordinates(std::span<const double> point) const;
};

BlockSymbol chain_symbol(const LocalModelParams& p);
BlockSymbol local_model_symbol(const LocalModelParams& p);

enum class JacobianMethod { Auto, Analytic, Differences };

struct FermiPoint {
  int chart = 0;
  std::vector<double> coords;  // chart coordinates
  std::vector<double> point;   // ambient point
  int sign = 0;
  RealMatrix jacobian;  // d(sign coordinates)/d(oriented chart coordinates)
  double det = 0.0;     // oriented determinant
  cplx c_value{0.0, 0.0};
  double residual = 0.0;
};

struct FermiSearch {
  std::vector<FermiPoint> points;
  std::vector<std::string> warnings;
  int candidates = 0;
};

FermiSearch find_fermi_points(const ParamMap& pm, int scan_resolution, int threads = 1);

// Oriented Jacobian of the sign coordinates in the chart of fp.
RealMatrix sign_jacobian(const ParamMap& pm, int chart, std::span<const double> coords, JacobianMethod method);
int sign_at(const ParamMap& pm, FermiPoint& fp, JacobianMethod method = JacobianMethod::Auto);

struct EdgeIndexResult {
  int index = 0;
  std::vector<FermiPoint> points;
  std::vector<std::string> warnings;
};

EdgeIndexResult edge_index(const ParamMap& pm, int scan_resolution, int threads = 1);

struct Certificate {
  bool ok = false;
  int window_dim = 0;
  int expected_dim = 0;
  double mu = 0.0;
  double max_error = 0.0;   // worst stencil mismatch against the effective Hamiltonian
  double tolerance = 0.0;
  int toeplitz_sign = 0;    // sign recomputed from the compressed window
  std::string note;
};

// Checks the truncated edge operator near fp against the effective Pauli block.
Certificate certify_fermi_point(const ParamMap& pm, const FermiPoint& fp, int sites);

struct SpectralFlowResult {
  int flow = 0;
  int samples = 0;
  int bisections = 0;
  double mu = 0.0;
};

SpectralFlowResult spectral_flow(const ParamMap& pm, int sites, std::optional<double> mu, int samples,
                                 bool reversed = false);

// Smallest half-gap of the edge symbols along the loop, used as the automatic window.
double auto_window(const ParamMap& pm, int samples);

struct EvennessReport {
  bool ok = false;
  bool symmetric = false;
  double symmetry_deviation = 0.0;
  bool pairing = false;
  bool fixed_points_clear = false;
  bool equal_signs = false;
  bool even = false;
  int index = 0;
  std::vector<FermiPoint> points;
  std::string violation;
  std::vector<double> offending_point;
};

EvennessReport check_evenness(const ParamMap& pm, int scan_resolution, int threads = 1, int symmetry_samples = 2000);

// Pullback along the reflection of the first coordinate, reversing the base orientation.
ParamMap reversed(const ParamMap& pm);

}  // namespace topedge
