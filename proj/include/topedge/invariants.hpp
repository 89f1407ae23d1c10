#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topedge/bloch.hpp"
#include "topedge/fermi.hpp"

namespace topedge {

using DiagnosticValue = std::variant<long long, double, bool, std::string>;

struct InvariantReport {
  std::string family;
  std::string command;
  std::optional<int> bulk_c2;
  std::optional<int> edge_index;
  std::vector<FermiPoint> fermi_points;
  std::vector<Certificate> certificates;
  std::optional<int> spectral_flow;
  std::optional<bool> evenness_ok;
  std::optional<bool> bulk_edge_ok;
  std::vector<std::string> warnings;
  std::map<std::string, DiagnosticValue> diagnostics;
  int fermi_dim = 0;  // chart coordinate count for tables
};

struct BulkEdgeOptions {
  int grid = 16;
  int scan_resolution = 64;
  int threads = 1;
  std::uint64_t seed = 42;
  int symmetry_samples = 10000;
};

// c2 of the bulk against minus the edge index of the compressed family.
InvariantReport verify_bulk_edge(const BlochFamily& bulk, const ParamMap& edge, const BulkEdgeOptions& opts);

// Closed-form kernel at the probe energy against the certified window of the truncated local model.
struct KernelComparison {
  KernelClassification classification;
  int expected_count = 0;
  int window_count = 0;            // certified eigenvalues within tolerance of the probe energy
  std::vector<double> window_values;
  double tolerance = 0.0;          // 10 |c|^N + 1e-10
  double mu = 0.0;
  double max_energy_error = 0.0;
  double min_cosine = 1.0;         // worst overlap of an exact kernel vector with the certified span
  bool comparable = true;          // false for the flat-band clause
  bool counts_agree = false;
};

KernelComparison compare_local_kernel(const LocalModelParams& p, int sites);

}  // namespace topedge
