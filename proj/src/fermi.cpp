#include "topedge/fermi.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "topedge/parallel.hpp"

namespace topedge {

namespace {

constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonIterations = 50;
constexpr double kStationaryResidual = 1e-6;
constexpr double kDedupRadius = 1e-6;
constexpr double kUnitCircleGuard = 1e-6;
constexpr double kDegenerateDet = 1e-8;
constexpr double kDiffStep = 1e-6;
constexpr double kStencilStep = 1e-3;

std::vector<int> sign_rows(EdgeModel model) {
  switch (model) {
    case EdgeModel::Chain: return {0};
    case EdgeModel::LocalOdd: return {1, 2, 0};
    case EdgeModel::LocalEven: return {1, 2};
  }
  return {};
}

RealVector param_vector(const LocalModelParams& p) {
  RealVector v(5);
  v << p.a, p.b.real(), p.b.imag(), p.c.real(), p.c.imag();
  return v;
}

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os.precision(10);
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

int parity_sign(EdgeModel model, double det) {
  int s = det > 0 ? 1 : -1;
  return is_odd(model) ? -s : s;
}

// Grid index helpers over a d-dimensional box with `res` points per axis.
std::vector<int> unflatten(std::size_t flat, int d, int res) {
  std::vector<int> idx(d);
  for (int axis = d - 1; axis >= 0; --axis) {
    idx[axis] = static_cast<int>(flat % res);
    flat /= res;
  }
  return idx;
}

struct Seed {
  int chart = 0;
  std::vector<double> coords;
};

struct Refined {
  bool converged = false;
  bool stationary = false;  // stalled at a nonzero local minimum of the residual
  int chart = 0;
  std::vector<double> coords;
  double residual = 0.0;
};

// Unoriented Jacobian for Newton steps; never throws.
RealMatrix newton_jacobian(const ParamMap& pm, int chart, const std::vector<double>& u) {
  const auto& base = pm.base;
  const auto rows = sign_rows(pm.model);
  const int m = static_cast<int>(rows.size());
  RealMatrix jac(m, base.dim);
  if (pm.params_jacobian) {
    RealMatrix full = pm.params_jacobian(base.embed(chart, u)) * base.embed_jacobian(chart, u);
    for (int i = 0; i < m; ++i) jac.row(i) = full.row(rows[i]);
    return jac;
  }
  std::vector<double> up = u, dn = u;
  for (int j = 0; j < base.dim; ++j) {
    up[j] += kDiffStep;
    dn[j] -= kDiffStep;
    jac.col(j) = (pm.sign_coordinates(base.embed(chart, up)) - pm.sign_coordinates(base.embed(chart, dn))) / (2 * kDiffStep);
    up[j] = u[j];
    dn[j] = u[j];
  }
  return jac;
}

Refined refine(const ParamMap& pm, int chart, std::vector<double> u) {
  const auto& base = pm.base;
  auto residual_at = [&](int ch, std::span<const double> uu) {
    return pm.sign_coordinates(base.embed(ch, uu)).norm();
  };
  Refined out;
  double r = residual_at(chart, u);
  for (int it = 0; it <= kNewtonIterations; ++it) {
    if (r < kNewtonTol) {
      out.converged = true;
      break;
    }
    if (it == kNewtonIterations) break;
    RealVector s = pm.sign_coordinates(base.embed(chart, u));
    RealMatrix jac = newton_jacobian(pm, chart, u);
    RealVector step = jac.completeOrthogonalDecomposition().solve(s);
    double t = 1.0;
    std::vector<double> trial(u.size());
    double rn = r;
    while (t > 1e-6) {
      for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - t * step(static_cast<Eigen::Index>(i));
      if (base.in_chart_domain(trial)) {
        rn = residual_at(chart, trial);
        if (rn < r) break;
      }
      t *= 0.5;
    }
    if (t <= 1e-6) {
      RealVector grad = jac.transpose() * s;
      out.stationary = r > kStationaryResidual && grad.norm() <= 1e-8 * std::max(1.0, jac.norm()) * r;
      break;
    }
    u = trial;
    r = rn;
    auto x = base.embed(chart, u);
    int best = base.best_chart(x);
    if (best != chart) {
      chart = best;
      u = base.chart_coords(chart, x);
    }
  }
  out.chart = chart;
  out.coords = u;
  out.residual = r;
  return out;
}

}  // namespace

int sign_coordinate_count(EdgeModel model) { return static_cast<int>(sign_rows(model).size()); }

bool is_odd(EdgeModel model) { return model != EdgeModel::LocalEven; }

BlockSymbol chain_symbol(const LocalModelParams& p) {
  BlockSymbol sym;
  sym.rank = 2;
  Matrix hop = Matrix::Zero(2, 2);
  hop(0, 1) = -1.0;
  Matrix onsite(2, 2);
  onsite << p.a, std::conj(p.c), p.c, -p.a;
  sym.coeffs[0] = onsite;
  sym.coeffs[1] = hop;
  sym.coeffs[-1] = hop.adjoint();
  return sym;
}

BlockSymbol local_model_symbol(const LocalModelParams& p) {
  BlockSymbol sym;
  sym.rank = 4;
  sym.coeffs[0] = local_onsite_block(p);
  sym.coeffs[1] = local_hopping_block();
  sym.coeffs[-1] = local_hopping_block().adjoint();
  return sym;
}

BlockSymbol ParamMap::symbol_at(std::span<const double> point) const {
  if (symbol) return symbol(point);
  LocalModelParams p = params(point);
  BlockSymbol sym = model == EdgeModel::Chain ? chain_symbol(p) : local_model_symbol(p);
  sym.source.assign(point.begin(), point.end());
  return sym;
}

RealVector ParamMap::sign_coordinates(std::span<const double> point) const {
  RealVector all = param_vector(params(point));
  auto rows = sign_rows(model);
  RealVector out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out(static_cast<Eigen::Index>(i)) = all(rows[i]);
  return out;
}

RealMatrix sign_jacobian(const ParamMap& pm, int chart, std::span<const double> coords, JacobianMethod method) {
  const auto& base = pm.base;
  const int d = base.dim;
  const auto rows = sign_rows(pm.model);
  const int m = static_cast<int>(rows.size());
  bool analytic = method == JacobianMethod::Analytic || (method == JacobianMethod::Auto && pm.params_jacobian);
  if (analytic && !pm.params_jacobian)
    throw Error(ErrorKind::InvalidArgument, "family " + pm.id + " has no analytic Jacobian");

  RealMatrix jac(m, d);
  if (analytic) {
    RealMatrix full = pm.params_jacobian(base.embed(chart, coords)) * base.embed_jacobian(chart, coords);
    for (int i = 0; i < m; ++i) jac.row(i) = full.row(rows[i]);
  } else {
    auto central = [&](double h) {
      RealMatrix out(m, d);
      std::vector<double> up(coords.begin(), coords.end()), dn(coords.begin(), coords.end());
      for (int j = 0; j < d; ++j) {
        up[j] += h;
        dn[j] -= h;
        out.col(j) = (pm.sign_coordinates(base.embed(chart, up)) - pm.sign_coordinates(base.embed(chart, dn))) / (2 * h);
        up[j] = coords[j];
        dn[j] = coords[j];
      }
      return out;
    };
    RealMatrix coarse = central(kDiffStep);
    RealMatrix fine = central(kDiffStep / 2);
    double scale = std::max(fine.norm(), 1e-300);
    if ((coarse - fine).norm() > 1e-4 * scale)
      throw Error(ErrorKind::ResolutionInsufficient, "finite-difference Jacobian failed the Richardson check");
    jac = (4.0 * fine - coarse) / 3.0;
  }
  if (base.chart_orientation(chart, coords) < 0) jac.col(0) *= -1.0;
  return jac;
}

int sign_at(const ParamMap& pm, FermiPoint& fp, JacobianMethod method) {
  fp.jacobian = sign_jacobian(pm, fp.chart, fp.coords, method);
  fp.det = fp.jacobian.determinant();
  if (std::abs(fp.det) < kDegenerateDet)
    throw Error(ErrorKind::NotAFermiPoint, "degenerate Jacobian at " + format_point(fp.point));
  fp.sign = parity_sign(pm.model, fp.det);
  return fp.sign;
}

FermiSearch find_fermi_points(const ParamMap& pm, int scan_resolution, int threads) {
  const auto& base = pm.base;
  if (sign_coordinate_count(pm.model) != base.dim)
    throw Error(ErrorKind::InvalidArgument, "sign coordinates do not match the base dimension");
  if (scan_resolution < 8) throw Error(ErrorKind::InvalidArgument, "scan resolution too small");
  const int d = base.dim;
  const int res = scan_resolution;
  const auto [lo, hi] = base.scan_box();
  const double spacing = base.periodic() ? (hi - lo) / res : (hi - lo) / (res - 1);
  std::size_t cells = 1;
  for (int i = 0; i < d; ++i) cells *= static_cast<std::size_t>(res);

  std::vector<Seed> seeds;
  for (int chart = 0; chart < base.chart_count(); ++chart) {
    std::vector<double> g(cells, std::numeric_limits<double>::infinity());
    auto coords_of = [&](const std::vector<int>& idx) {
      std::vector<double> u(d);
      for (int i = 0; i < d; ++i) u[i] = lo + spacing * idx[i];
      return u;
    };
    parallel_for(cells, threads, [&](std::size_t flat) {
      auto u = coords_of(unflatten(flat, d, res));
      if (base.in_chart_domain(u)) g[flat] = pm.sign_coordinates(base.embed(chart, u)).norm();
    });
    // Local slope bound: a zero inside a cell forces g below slope * cell diameter.
    double slope = 0.0;
    for (std::size_t flat = 0; flat < cells; ++flat) {
      if (!std::isfinite(g[flat])) continue;
      auto idx = unflatten(flat, d, res);
      for (int axis = 0; axis < d; ++axis) {
        auto nb = idx;
        nb[axis] += 1;
        if (nb[axis] >= res) {
          if (!base.periodic()) continue;
          nb[axis] = 0;
        }
        std::size_t nf = 0;
        for (int i = 0; i < d; ++i) nf = nf * res + nb[i];
        if (std::isfinite(g[nf])) slope = std::max(slope, std::abs(g[nf] - g[flat]) / spacing);
      }
    }
    const double threshold = 2.0 * slope * spacing * std::sqrt(static_cast<double>(d));
    int offsets = 1;
    for (int i = 0; i < d; ++i) offsets *= 3;
    for (std::size_t flat = 0; flat < cells; ++flat) {
      if (!std::isfinite(g[flat]) || g[flat] > threshold) continue;
      auto idx = unflatten(flat, d, res);
      bool minimum = true;
      for (int off = 0; off < offsets && minimum; ++off) {
        if (off == (offsets - 1) / 2) continue;
        int code = off;
        std::size_t nf = 0;
        bool valid = true;
        for (int axis = 0; axis < d; ++axis) {
          int j = idx[axis] + code % 3 - 1;
          code /= 3;
          if (j < 0 || j >= res) {
            if (!base.periodic()) {
              valid = false;
              break;
            }
            j = (j + res) % res;
          }
          nf = nf * res + j;
        }
        if (valid && g[nf] < g[flat]) minimum = false;
      }
      if (minimum) seeds.push_back({chart, coords_of(idx)});
    }
  }

  std::vector<Refined> refined(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t i) { refined[i] = refine(pm, seeds[i].chart, seeds[i].coords); });

  FermiSearch out;
  out.candidates = static_cast<int>(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& r = refined[i];
    if (!r.converged && r.stationary) continue;
    if (!r.converged) {
      out.warnings.push_back("unrefined candidate in chart " + std::to_string(seeds[i].chart) + " near " +
                             format_point(seeds[i].coords) + ", residual " + std::to_string(r.residual));
      continue;
    }
    auto x = base.canonical(base.embed(r.chart, r.coords));
    bool dup = false;
    for (const auto& p : out.points)
      if (base.distance(p.point, x) < kDedupRadius) dup = true;
    if (dup) continue;
    LocalModelParams lp = pm.params(x);
    const double abs_c = std::abs(lp.c);
    if (std::abs(abs_c - 1.0) < kUnitCircleGuard)
      throw Error(ErrorKind::BoundaryDegenerate, "zero of the sign coordinates with |c| = 1 at " + format_point(x));
    if (abs_c > 1.0) continue;
    FermiPoint fp;
    fp.chart = base.best_chart(x);
    fp.coords = base.chart_coords(fp.chart, x);
    fp.point = x;
    fp.c_value = lp.c;
    fp.residual = pm.sign_coordinates(x).norm();
    out.points.push_back(std::move(fp));
  }
  for (auto& fp : out.points) sign_at(pm, fp);
  std::sort(out.points.begin(), out.points.end(), [](const FermiPoint& l, const FermiPoint& r) {
    if (l.chart != r.chart) return l.chart < r.chart;
    return l.coords < r.coords;
  });
  return out;
}

EdgeIndexResult edge_index(const ParamMap& pm, int scan_resolution, int threads) {
  FermiSearch search = find_fermi_points(pm, scan_resolution, threads);
  EdgeIndexResult out;
  out.points = std::move(search.points);
  out.warnings = std::move(search.warnings);
  for (const auto& fp : out.points) out.index += fp.sign;
  return out;
}

Certificate certify_fermi_point(const ParamMap& pm, const FermiPoint& fp, int sites) {
  const auto& base = pm.base;
  Certificate cert;
  cert.expected_dim = pm.model == EdgeModel::Chain ? 1 : 2;
  BlockSymbol center_sym = pm.symbol_at(fp.point);
  double gap = symbol_gap(center_sym);
  cert.mu = 0.5 * gap;
  if (gap < 1e-6) {
    cert.note = "bulk gap closes at the Fermi point";
    return cert;
  }
  TruncatedToeplitz center = truncate(center_sym, sites);
  std::vector<EigenPair> window = low_energy_window(center, cert.mu).certified();
  cert.window_dim = static_cast<int>(window.size());
  if (cert.window_dim != cert.expected_dim) {
    cert.note = "window dimension mismatch";
    return cert;
  }

  Matrix w(center.matrix.rows(), cert.window_dim);
  for (int j = 0; j < cert.window_dim; ++j) w.col(j) = window[j].vector;
  if (pm.model == EdgeModel::LocalEven) {
    Vector grading(center.matrix.rows());
    for (Eigen::Index i = 0; i < grading.size(); ++i) grading(i) = (i % 2 == 0) ? 1.0 : -1.0;
    Matrix g = w.adjoint() * grading.asDiagonal() * w;
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    w = w * es.eigenvectors().rowwise().reverse();  // even vector first
  }

  const int d = base.dim;
  auto compressed_coords = [&](std::span<const double> u) {
    Matrix h = w.adjoint() * truncate(pm.symbol_at(base.embed(fp.chart, u)), sites).matrix * w;
    RealVector out(sign_coordinate_count(pm.model));
    if (pm.model == EdgeModel::Chain) {
      out(0) = h(0, 0).real();
    } else {
      out(0) = h(1, 0).real();
      out(1) = h(1, 0).imag();
      if (pm.model == EdgeModel::LocalOdd) out(2) = 0.5 * (h(0, 0) - h(1, 1)).real();
    }
    return out;
  };

  cert.max_error = 0.0;
  cert.tolerance = 0.0;
  RealMatrix jac(sign_coordinate_count(pm.model), d);
  for (int s = -1; s < d; ++s) {
    for (int dir : {-1, 1}) {
      if (s < 0 && dir > 0) continue;
      std::vector<double> u = fp.coords;
      if (s >= 0) u[s] += dir * kStencilStep;
      auto x = base.embed(fp.chart, u);
      LocalModelParams lp = pm.params(x);
      std::vector<double> expected;
      if (pm.model == EdgeModel::Chain) {
        expected = {lp.a};
      } else {
        double e = std::sqrt((pm.model == EdgeModel::LocalOdd ? lp.a * lp.a : 0.0) + std::norm(lp.b));
        expected = {-e, e};
      }
      auto found = low_energy_window(truncate(pm.symbol_at(x), sites), cert.mu).certified_values();
      std::sort(found.begin(), found.end());
      const double tol = 10.0 * std::pow(std::abs(lp.c), sites) + 1e-8;
      cert.tolerance = std::max(cert.tolerance, tol);
      if (found.size() != expected.size()) {
        cert.note = "window dimension changes on the stencil";
        return cert;
      }
      for (std::size_t i = 0; i < found.size(); ++i) {
        double err = std::abs(found[i] - expected[i]);
        cert.max_error = std::max(cert.max_error, err);
        if (err > tol) cert.note = "effective block mismatch";
      }
    }
    if (s >= 0) {
      std::vector<double> up = fp.coords, dn = fp.coords;
      up[s] += kStencilStep;
      dn[s] -= kStencilStep;
      jac.col(s) = (compressed_coords(up) - compressed_coords(dn)) / (2 * kStencilStep);
    }
  }
  if (base.chart_orientation(fp.chart, fp.coords) < 0) jac.col(0) *= -1.0;
  double det = jac.determinant();
  cert.toeplitz_sign = std::abs(det) < kDegenerateDet ? 0 : parity_sign(pm.model, det);
  cert.ok = cert.note.empty() && cert.toeplitz_sign == fp.sign;
  if (cert.note.empty() && !cert.ok) cert.note = "compressed sign disagrees";
  return cert;
}

double auto_window(const ParamMap& pm, int samples) {
  double gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    std::vector<double> x{kTwoPi * j / samples};
    gap = std::min(gap, symbol_gap(pm.symbol_at(x)));
  }
  return 0.5 * gap;
}

namespace {

struct FlowSample {
  double t = 0.0;
  std::vector<double> values;
};

struct FlowContext {
  const ParamMap& pm;
  int sites;
  double mu;
  bool reversed;
  int bisections = 0;

  FlowSample sample(double t) {
    std::vector<double> x{reversed ? -t : t};
    FlowSample s;
    s.t = t;
    s.values = low_energy_window(truncate(pm.symbol_at(base_point(x)), sites), mu).certified_values();
    std::sort(s.values.begin(), s.values.end());
    return s;
  }

  std::vector<double> base_point(const std::vector<double>& x) const { return pm.base.canonical(x); }

  static int crossings(const std::vector<double>& from, const std::vector<double>& to, std::size_t offset_from,
                       std::size_t offset_to, std::size_t count) {
    int flow = 0;
    for (std::size_t i = 0; i < count; ++i) {
      double a = from[offset_from + i], b = to[offset_to + i];
      if (a >= 0 && b < 0) ++flow;
      if (a < 0 && b >= 0) --flow;
    }
    return flow;
  }

  bool ambiguous(const FlowSample& l, const FlowSample& r) const {
    double motion = 0.0;
    for (std::size_t i = 0; i < l.values.size(); ++i) motion = std::max(motion, std::abs(l.values[i] - r.values[i]));
    double spacing = std::numeric_limits<double>::infinity();
    for (const auto* s : {&l, &r})
      for (std::size_t i = 1; i < s->values.size(); ++i) spacing = std::min(spacing, s->values[i] - s->values[i - 1]);
    return spacing < 10.0 * motion;
  }

  // Values entering or leaving the window must do so away from zero.
  int partial_match(const FlowSample& l, const FlowSample& r) const {
    const auto& small = l.values.size() < r.values.size() ? l.values : r.values;
    const auto& large = l.values.size() < r.values.size() ? r.values : l.values;
    std::size_t best_offset = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t off = 0; off + small.size() <= large.size(); ++off) {
      double cost = 0.0;
      for (std::size_t i = 0; i < small.size(); ++i) cost += std::abs(small[i] - large[off + i]);
      if (cost < best_cost) {
        best_cost = cost;
        best_offset = off;
      }
    }
    for (std::size_t i = 0; i < large.size(); ++i) {
      bool matched = i >= best_offset && i < best_offset + small.size();
      if (!matched && std::abs(large[i]) < 0.5 * mu) {
        std::ostringstream os;
        os << "eigenvalue " << large[i] << " appears near zero between t = " << l.t << " and " << r.t;
        throw Error(ErrorKind::TrackingFailure, os.str());
      }
    }
    if (l.values.size() < r.values.size()) return crossings(l.values, r.values, 0, best_offset, small.size());
    return crossings(l.values, r.values, best_offset, 0, small.size());
  }

  int between(const FlowSample& l, const FlowSample& r, int depth) {
    bool same = l.values.size() == r.values.size();
    if (same && !ambiguous(l, r)) return crossings(l.values, r.values, 0, 0, l.values.size());
    if (depth >= 12) {
      if (!same) return partial_match(l, r);
      std::ostringstream os;
      os << "ambiguous eigenvalue pairing on [" << l.t << ", " << r.t << "]";
      throw Error(ErrorKind::TrackingFailure, os.str());
    }
    ++bisections;
    FlowSample m = sample(0.5 * (l.t + r.t));
    return between(l, m, depth + 1) + between(m, r, depth + 1);
  }
};

}  // namespace

SpectralFlowResult spectral_flow(const ParamMap& pm, int sites, std::optional<double> mu, int samples, bool reversed) {
  if (pm.base.kind != BaseKind::Circle) throw Error(ErrorKind::InvalidArgument, "spectral flow needs a loop");
  if (samples < 4) throw Error(ErrorKind::InvalidArgument, "too few loop samples");
  SpectralFlowResult out;
  out.samples = samples;
  out.mu = mu ? *mu : auto_window(pm, samples);
  FlowContext ctx{pm, sites, out.mu, reversed};
  for (int j = 0; j < samples; ++j) {
    std::vector<double> x{kTwoPi * j / samples};
    auto f = fredholm_check(pm.symbol_at(x), 64);
    if (!f.fredholm) throw Error(ErrorKind::GaplessInput, "edge symbol not invertible on the loop");
  }
  FlowSample prev = ctx.sample(0.0);
  const FlowSample first = prev;
  for (int j = 1; j <= samples; ++j) {
    FlowSample next = j == samples ? FlowSample{kTwoPi, first.values} : ctx.sample(kTwoPi * j / samples);
    out.flow += ctx.between(prev, next, 0);
    prev = std::move(next);
  }
  out.bisections = ctx.bisections;
  return out;
}

EvennessReport check_evenness(const ParamMap& pm, int scan_resolution, int threads, int symmetry_samples) {
  EvennessReport rep;
  if (pm.base.kind == BaseKind::Sphere) throw Error(ErrorKind::InvalidArgument, "evenness check needs a torus base");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, kTwoPi);
  const int d = pm.base.dim;
  std::vector<double> k(d), mk(d);
  for (int s = 0; s < symmetry_samples; ++s) {
    for (int i = 0; i < d; ++i) {
      k[i] = uni(rng);
      mk[i] = wrap_angle(-k[i]);
    }
    BlockSymbol lhs = pm.symbol_at(k);
    BlockSymbol rhs = pm.symbol_at(mk);
    double dev = 0.0;
    for (const auto& [m, c] : lhs.coeffs) {
      auto it = rhs.coeffs.find(m);
      Matrix other = it == rhs.coeffs.end() ? Matrix::Zero(c.rows(), c.cols()) : it->second;
      dev = std::max(dev, (c.conjugate() - other).cwiseAbs().maxCoeff());
    }
    for (const auto& [m, c] : rhs.coeffs)
      if (!lhs.coeffs.count(m)) dev = std::max(dev, c.cwiseAbs().maxCoeff());
    if (dev > rep.symmetry_deviation) {
      rep.symmetry_deviation = dev;
      if (dev >= 1e-10) rep.offending_point = k;
    }
  }
  rep.symmetric = rep.symmetry_deviation < 1e-10;
  if (!rep.symmetric) {
    rep.violation = "edge symbol is not time-reversal symmetric at " + format_point(rep.offending_point);
    return rep;
  }

  EdgeIndexResult ei = edge_index(pm, scan_resolution, threads);
  rep.points = ei.points;
  rep.index = ei.index;
  rep.pairing = true;
  rep.equal_signs = true;
  rep.fixed_points_clear = true;
  for (const auto& fp : ei.points) {
    bool fixed = true;
    for (double v : fp.point) fixed = fixed && std::min(angle_distance(v, 0.0), angle_distance(v, kPi)) < 1e-6;
    if (fixed) {
      rep.fixed_points_clear = false;
      rep.violation = "Fermi point at a time-reversal fixed point " + format_point(fp.point);
      rep.offending_point = fp.point;
    }
    std::vector<double> image(fp.point.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = wrap_angle(-fp.point[i]);
    const FermiPoint* partner = nullptr;
    for (const auto& other : ei.points)
      if (pm.base.distance(other.point, image) < 1e-8) partner = &other;
    if (!partner) {
      rep.pairing = false;
      rep.violation = "Fermi point without a time-reversed partner " + format_point(fp.point);
      rep.offending_point = fp.point;
    } else if (partner->sign != fp.sign) {
      rep.equal_signs = false;
      rep.violation = "time-reversed Fermi points carry opposite signs at " + format_point(fp.point);
      rep.offending_point = fp.point;
    }
  }
  rep.even = rep.index % 2 == 0;
  if (!rep.even && rep.violation.empty()) rep.violation = "odd edge index";
  rep.ok = rep.symmetric && rep.pairing && rep.fixed_points_clear && rep.equal_signs && rep.even;
  return rep;
}

ParamMap reversed(const ParamMap& pm) {
  ParamMap out = pm;
  out.id = pm.id + ":reversed";
  auto reflect = [kind = pm.base.kind](std::span<const double> x) {
    std::vector<double> y(x.begin(), x.end());
    y[0] = kind == BaseKind::Sphere ? -y[0] : wrap_angle(-y[0]);
    return y;
  };
  out.params = [inner = pm.params, reflect](std::span<const double> x) { return inner(reflect(x)); };
  if (pm.params_jacobian)
    out.params_jacobian = [inner = pm.params_jacobian, reflect](std::span<const double> x) {
      RealMatrix j = inner(reflect(x));
      j.col(0) *= -1.0;
      return j;
    };
  if (pm.symbol)
    out.symbol = [inner = pm.symbol, reflect](std::span<const double> x) { return inner(reflect(x)); };
  return out;
}

}  // namespace topedge
