#include "topedge/invariants.hpp"

#include <cmath>

namespace topedge {

InvariantReport verify_bulk_edge(const BlochFamily& bulk, const ParamMap& edge, const BulkEdgeOptions& opts) {
  InvariantReport rep;
  rep.family = bulk.id;
  rep.command = "verify-bec";
  rep.fermi_dim = edge.base.dim;

  SymmetryCheck sym = check_ai_symmetry(bulk, opts.symmetry_samples, opts.seed);
  rep.diagnostics["ai_symmetry_deviation"] = sym.max_deviation;
  if (!sym.symmetric) rep.warnings.push_back("bulk family is not time-reversal symmetric");

  ChernOptions copts;
  copts.threads = opts.threads;
  copts.seed = opts.seed;
  SecondChernResult c2 = second_chern_number(bulk, opts.grid, copts);
  rep.bulk_c2 = c2.value;
  rep.diagnostics["c2_raw"] = c2.raw;
  rep.diagnostics["c2_rounded"] = static_cast<long long>(c2.rounded);
  rep.diagnostics["c2_quality"] = c2.quality;
  rep.diagnostics["c2_min_gap"] = c2.min_gap;
  rep.diagnostics["grid"] = static_cast<long long>(opts.grid);
  if (c2.section_count) rep.diagnostics["c2_section_count"] = static_cast<long long>(*c2.section_count);
  if (c2.resolution_warning) rep.warnings.push_back("bulk curvature sum is not within 0.05 of an integer");
  if (c2.section_count && *c2.section_count != c2.rounded)
    rep.warnings.push_back("section count and rounded curvature sum disagree");

  EdgeIndexResult ei = edge_index(edge, opts.scan_resolution, opts.threads);
  rep.edge_index = ei.index;
  rep.fermi_points = ei.points;
  for (auto& w : ei.warnings) rep.warnings.push_back(w);
  rep.diagnostics["scan_resolution"] = static_cast<long long>(opts.scan_resolution);

  rep.bulk_edge_ok = *rep.bulk_c2 == -*rep.edge_index && sym.symmetric;
  return rep;
}

KernelComparison compare_local_kernel(const LocalModelParams& p, int sites) {
  KernelComparison out;
  out.classification = kernel_classification(p);
  switch (out.classification.kind) {
    case KernelKind::NoSolution: out.expected_count = 0; break;
    case KernelKind::Dim1: out.expected_count = 1; break;
    case KernelKind::Dim2: out.expected_count = 2; break;
    case KernelKind::InfiniteDim: out.comparable = false; break;
  }
  const double abs_c = std::abs(p.c);
  out.tolerance = 10.0 * std::pow(abs_c, sites) + 1e-10;
  if (!out.comparable) return out;

  TruncatedToeplitz t = truncate(local_model_symbol(p), sites);
  // The window is centred at zero; widen it past the probe energy and step off any eigenvalue on its edge.
  double mu = std::abs(p.energy) + 0.05;
  std::optional<LowEnergyWindow> window;
  for (int attempt = 0; attempt < 32 && !window; ++attempt) {
    try {
      window = low_energy_window(t, mu);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WindowBoundary) throw;
      mu += 0.0137;
    }
  }
  if (!window) throw Error(ErrorKind::WindowBoundary, "no admissible window around the probe energy");
  out.mu = mu;

  std::vector<Vector> near;
  for (const auto& pair : window->certified()) {
    if (std::abs(pair.value - p.energy) > out.tolerance) continue;
    out.window_values.push_back(pair.value);
    out.max_energy_error = std::max(out.max_energy_error, std::abs(pair.value - p.energy));
    near.push_back(pair.vector);
  }
  out.window_count = static_cast<int>(near.size());
  out.counts_agree = out.window_count == out.expected_count;

  if (!near.empty() && !out.classification.basis.empty()) {
    Matrix span(near.front().size(), static_cast<Eigen::Index>(near.size()));
    for (std::size_t i = 0; i < near.size(); ++i) span.col(static_cast<Eigen::Index>(i)) = near[i];
    Eigen::HouseholderQR<Matrix> qr(span);
    Matrix q = qr.householderQ() * Matrix::Identity(span.rows(), span.cols());
    for (const auto& ev : out.classification.basis) {
      Vector u = ev.materialize(sites);
      out.min_cosine = std::min(out.min_cosine, (q.adjoint() * u).norm());
    }
  } else if (!out.classification.basis.empty()) {
    out.min_cosine = 0.0;
  }
  return out;
}

}  // namespace topedge
