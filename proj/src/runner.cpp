#include "topedge/runner.hpp"

#include <cmath>
#include <iostream>

#include "topedge/acceptance.hpp"
#include "topedge/parallel.hpp"

namespace topedge {

namespace {

const ParamMap& need_edge(const CatalogEntry& e) {
  if (!e.edge) throw Error(ErrorKind::Usage, "family '" + e.id + "' has no edge parameter map");
  return *e.edge;
}

const BlochFamily& need_bulk(const CatalogEntry& e) {
  if (!e.bulk) throw Error(ErrorKind::Usage, "family '" + e.id + "' has no bulk Bloch family");
  return *e.bulk;
}

void add_chern(InvariantReport& rep, const SecondChernResult& c2) {
  rep.bulk_c2 = c2.value;
  rep.diagnostics["c2_raw"] = c2.raw;
  rep.diagnostics["c2_rounded"] = static_cast<long long>(c2.rounded);
  rep.diagnostics["c2_quality"] = c2.quality;
  rep.diagnostics["c2_min_gap"] = c2.min_gap;
  rep.diagnostics["grid"] = static_cast<long long>(c2.grid);
  if (c2.section_count) rep.diagnostics["c2_section_count"] = static_cast<long long>(*c2.section_count);
  if (c2.resolution_warning) rep.warnings.push_back("bulk curvature sum is not within 0.05 of an integer");
  if (c2.section_count && *c2.section_count != c2.rounded)
    rep.warnings.push_back("section count and rounded curvature sum disagree");
}

int run_bulk_chern(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep, int threads) {
  ChernOptions opts;
  opts.threads = threads;
  opts.seed = cfg.seed;
  add_chern(rep, second_chern_number(need_bulk(e), cfg.grid, opts));
  return 0;
}

int run_edge_index(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep, int threads, bool certify) {
  ParamMap pm = need_edge(e);
  if (cfg.reverse) pm = reversed(pm);
  rep.fermi_dim = pm.base.dim;
  EdgeIndexResult r = edge_index(pm, cfg.scan_resolution, threads);
  rep.edge_index = r.index;
  rep.fermi_points = r.points;
  for (auto& w : r.warnings) rep.warnings.push_back(w);
  rep.diagnostics["scan_resolution"] = static_cast<long long>(cfg.scan_resolution);
  if (!certify) return 0;
  int code = 0;
  for (const auto& fp : r.points) {
    Certificate cert = certify_fermi_point(pm, fp, cfg.sites);
    if (!cert.ok || cert.toeplitz_sign != fp.sign) {
      code = 1;
      rep.warnings.push_back("certificate failed: " + cert.note);
    }
    rep.certificates.push_back(cert);
  }
  rep.diagnostics["truncation"] = static_cast<long long>(cfg.sites);
  return code;
}

int run_spectral_flow(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep, int threads) {
  const ParamMap& pm = need_edge(e);
  if (pm.base.kind != BaseKind::Circle)
    throw Error(ErrorKind::Usage, "spectral flow needs a family over the circle");
  SpectralFlowResult sf = spectral_flow(pm, cfg.sites, cfg.mu, cfg.samples, cfg.reverse);
  rep.spectral_flow = sf.flow;
  rep.diagnostics["mu"] = sf.mu;
  rep.diagnostics["samples"] = static_cast<long long>(sf.samples);
  rep.diagnostics["bisections"] = static_cast<long long>(sf.bisections);
  rep.diagnostics["truncation"] = static_cast<long long>(cfg.sites);
  run_edge_index(cfg, e, rep, threads, false);
  if (*rep.edge_index != sf.flow) {
    rep.warnings.push_back("spectral flow differs from the Fermi-point sign sum");
    return 1;
  }
  return 0;
}

int run_local_kernel(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep) {
  if (!e.point) throw Error(ErrorKind::Usage, "local-kernel needs a local:<a>,<reb>,<imb>,<rec>,<imc> family");
  LocalModelParams p = *e.point;
  p.energy = cfg.energy;
  KernelComparison cmp = compare_local_kernel(p, cfg.sites);
  rep.diagnostics["energy"] = p.energy;
  rep.diagnostics["kernel_kind"] = std::string(kernel_kind_name(cmp.classification.kind));
  rep.diagnostics["condition"] = cmp.classification.condition_tag;
  rep.diagnostics["discriminant"] = discriminant(p);
  rep.diagnostics["truncation"] = static_cast<long long>(cfg.sites);
  if (!cmp.comparable) {
    rep.warnings.push_back("flat-band kernel has no finite window to compare against");
    return 0;
  }
  rep.diagnostics["expected_count"] = static_cast<long long>(cmp.expected_count);
  rep.diagnostics["window_count"] = static_cast<long long>(cmp.window_count);
  rep.diagnostics["window_mu"] = cmp.mu;
  rep.diagnostics["tolerance"] = cmp.tolerance;
  rep.diagnostics["max_energy_error"] = cmp.max_energy_error;
  if (!cmp.classification.basis.empty()) rep.diagnostics["min_cosine"] = cmp.min_cosine;
  if (!cmp.counts_agree) {
    rep.warnings.push_back("closed-form kernel and truncated window disagree");
    return 1;
  }
  return 0;
}

int run_verify_bec(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep, int threads) {
  BulkEdgeOptions opts;
  opts.grid = cfg.grid;
  opts.scan_resolution = cfg.scan_resolution;
  opts.threads = threads;
  opts.seed = cfg.seed;
  std::string command = rep.command;
  rep = verify_bulk_edge(need_bulk(e), need_edge(e), opts);
  rep.family = e.id;
  rep.command = command;
  return *rep.bulk_edge_ok ? 0 : 1;
}

int run_check_evenness(const RunConfig& cfg, const CatalogEntry& e, InvariantReport& rep, int threads) {
  const ParamMap& pm = need_edge(e);
  rep.fermi_dim = pm.base.dim;
  EvennessReport ev = check_evenness(pm, cfg.scan_resolution, threads);
  rep.evenness_ok = ev.ok;
  rep.fermi_points = ev.points;
  if (ev.symmetric) rep.edge_index = ev.index;
  rep.diagnostics["symmetry_deviation"] = ev.symmetry_deviation;
  rep.diagnostics["symmetric"] = ev.symmetric;
  rep.diagnostics["pairing"] = ev.pairing;
  rep.diagnostics["fixed_points_clear"] = ev.fixed_points_clear;
  rep.diagnostics["equal_signs"] = ev.equal_signs;
  rep.diagnostics["even"] = ev.even;
  if (!ev.ok) {
    rep.diagnostics["violation"] = ev.violation;
    if (!ev.offending_point.empty()) {
      std::string pt;
      for (double x : ev.offending_point) pt += (pt.empty() ? "" : " ") + std::to_string(x);
      rep.diagnostics["offending_point"] = pt;
    }
    return 1;
  }
  return 0;
}

int run_selftest(const RunConfig& cfg, InvariantReport& rep, int threads) {
  AcceptanceOptions opts;
  opts.threads = threads;
  opts.seed = cfg.seed;
  auto results = run_acceptance(std::cerr, opts);
  bool all = true;
  for (const auto& r : results) {
    std::string key = "criterion_" + std::string(r.id < 10 ? "0" : "") + std::to_string(r.id);
    rep.diagnostics[key] = r.pass;
    rep.diagnostics[key + "_detail"] = r.detail;
    rep.diagnostics[key + "_seconds"] = r.seconds;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Usage: return 2;
    case ErrorKind::Io: return 4;
    case ErrorKind::SymmetryViolation: return 1;
    default: return 3;
  }
}

RunOutcome run(const RunConfig& cfg) {
  RunOutcome out;
  out.report.command = command_name(cfg.command);
  out.report.family = cfg.family;
  const int threads = resolve_threads(cfg.threads);
  try {
    if (cfg.command == Command::Selftest) {
      out.exit_code = run_selftest(cfg, out.report, threads);
    } else {
      CatalogEntry e = resolve_family(cfg);
      out.report.family = e.id;
      out.report.diagnostics["description"] = e.description;
      switch (cfg.command) {
        case Command::BulkChern: out.exit_code = run_bulk_chern(cfg, e, out.report, threads); break;
        case Command::EdgeIndex: out.exit_code = run_edge_index(cfg, e, out.report, threads, true); break;
        case Command::FermiPoints: out.exit_code = run_edge_index(cfg, e, out.report, threads, false); break;
        case Command::SpectralFlow: out.exit_code = run_spectral_flow(cfg, e, out.report, threads); break;
        case Command::LocalKernel: out.exit_code = run_local_kernel(cfg, e, out.report); break;
        case Command::VerifyBec: out.exit_code = run_verify_bec(cfg, e, out.report, threads); break;
        case Command::CheckEvenness: out.exit_code = run_check_evenness(cfg, e, out.report, threads); break;
        case Command::Selftest: break;
      }
    }
  } catch (const Error& err) {
    out.exit_code = exit_code_for(err.kind());
    out.error = err.what();
  }
  out.report.diagnostics["threads"] = static_cast<long long>(threads);
  out.report.diagnostics["seed"] = static_cast<long long>(cfg.seed);
  return out;
}

}  // namespace topedge
