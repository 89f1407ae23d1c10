#include "topedge/bloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "topedge/parallel.hpp"

namespace topedge {

namespace {

constexpr double kGapTol = 1e-10;
constexpr double kDiffStep = 1e-5;

struct SiteFrame {
  Matrix occupied;  // r x p
  Matrix empty;     // r x q
  RealVector values;
};

SiteFrame frame_of(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  if (vals.cwiseAbs().minCoeff() <= kGapTol)
    throw Error(ErrorKind::GaplessInput, "eigenvalue within 1e-10 of zero");
  int p = 0;
  while (p < vals.size() && vals(p) < 0) ++p;
  SiteFrame f;
  f.occupied = es.eigenvectors().leftCols(p);
  f.empty = es.eigenvectors().rightCols(vals.size() - p);
  f.values = vals;
  return f;
}

// Y with Y*hp - hq*Y = rhs (hp, hq Hermitian with disjoint spectra).
Matrix solve_sylvester(const Matrix& hp, const Matrix& hq, const Matrix& rhs) {
  const Eigen::Index q = hq.rows(), p = hp.rows();
  Matrix op = Matrix::Zero(p * q, p * q);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index l = 0; l < p; ++l)
      op.block(j * q, l * q, q, q) += hp(l, j) * Matrix::Identity(q, q);
  for (Eigen::Index j = 0; j < p; ++j) op.block(j * q, j * q, q, q) -= hq;
  Vector b = Eigen::Map<const Vector>(rhs.data(), p * q);
  Vector y = op.partialPivLu().solve(b);
  return Eigen::Map<Matrix>(y.data(), q, p);
}

// Projector and its four partial derivatives from gauge-rotated frames.
struct ProjectorJet {
  Matrix p;
  Matrix occupied;
  std::array<Matrix, 4> dp;
};

ProjectorJet projector_jet(const BlochFamily& family, std::span<const double> k, const Matrix& rot_occ,
                           const Matrix& rot_emp) {
  Matrix h = family.eval(k);
  SiteFrame f = frame_of(h);
  Matrix psi = rot_occ.size() ? Matrix(f.occupied * rot_occ) : f.occupied;
  Matrix phi = rot_emp.size() ? Matrix(f.empty * rot_emp) : f.empty;
  Matrix hp = psi.adjoint() * h * psi;
  Matrix hq = phi.adjoint() * h * phi;
  ProjectorJet jet;
  jet.p = psi * psi.adjoint();
  jet.occupied = psi;
  for (int mu = 0; mu < 4; ++mu) {
    Matrix y = solve_sylvester(hp, hq, phi.adjoint() * family.partial(k, mu) * psi);
    Matrix x = phi * y * psi.adjoint();
    jet.dp[mu] = x + x.adjoint();
  }
  return jet;
}

double curvature_density(const ProjectorJet& jet) {
  static const std::vector<std::pair<std::array<int, 4>, int>> perms = [] {
    std::vector<std::pair<std::array<int, 4>, int>> out;
    std::array<int, 4> a{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (a[i] > a[j]) ++inversions;
      out.push_back({a, inversions % 2 ? -1 : 1});
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
  }();
  cplx quartic{0.0, 0.0};
  for (const auto& [perm, sgn] : perms)
    quartic += static_cast<double>(sgn) *
               (jet.p * jet.dp[perm[0]] * jet.dp[perm[1]] * jet.dp[perm[2]] * jet.dp[perm[3]]).trace();
  auto omega = [&](int m, int n) { return (jet.p * (jet.dp[m] * jet.dp[n] - jet.dp[n] * jet.dp[m])).trace(); };
  cplx wedge = 2.0 * (omega(0, 1) * omega(2, 3) - omega(0, 2) * omega(1, 3) + omega(0, 3) * omega(1, 2));
  return (quartic - wedge).real();
}

std::array<double, 4> site_point(std::size_t site, int grid) {
  std::array<double, 4> k{};
  std::size_t rest = site;
  for (int axis = 3; axis >= 0; --axis) {
    k[axis] = kTwoPi * static_cast<double>(rest % grid) / grid;
    rest /= grid;
  }
  return k;
}

double torus_distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = angle_distance(x[i], y[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

struct SectionZero {
  bool found = false;
  std::array<double, 4> k{};
  int sign = 0;
};

double section_residual(const BlochFamily& family, std::span<const double> k, const Vector& v) {
  SiteFrame f = frame_of(family.eval(k));
  return (f.occupied.adjoint() * v).norm();
}

SectionZero newton_section_zero(const BlochFamily& family, std::array<double, 4> k, const Vector& v) {
  SectionZero out;
  double r = section_residual(family, k, v);
  for (int it = 0; it < 80; ++it) {
    ProjectorJet jet = projector_jet(family, k, Matrix(), Matrix());
    Vector f = jet.occupied.adjoint() * jet.p * v;
    RealMatrix jr(4, 4);
    RealVector fr(4);
    for (int c = 0; c < 2; ++c) {
      fr(2 * c) = f(c).real();
      fr(2 * c + 1) = f(c).imag();
    }
    for (int mu = 0; mu < 4; ++mu) {
      Vector col = jet.occupied.adjoint() * jet.dp[mu] * v;
      for (int c = 0; c < 2; ++c) {
        jr(2 * c, mu) = col(c).real();
        jr(2 * c + 1, mu) = col(c).imag();
      }
    }
    if (r < 1e-12) {
      double det = jr.determinant();
      if (std::abs(det) < 1e-12) return out;
      out.found = true;
      for (auto& x : k) x = wrap_angle(x);
      out.k = k;
      out.sign = det > 0 ? 1 : -1;
      return out;
    }
    RealVector step = jr.completeOrthogonalDecomposition().solve(fr);
    double t = 1.0;
    std::array<double, 4> trial{};
    double rn = r;
    while (t > 1e-4) {
      for (int i = 0; i < 4; ++i) trial[i] = k[i] - t * step(i);
      rn = section_residual(family, trial, v);
      if (rn < r) break;
      t *= 0.5;
    }
    if (t <= 1e-4) return out;
    k = trial;
    r = rn;
  }
  return out;
}

int count_section_zeros(const BlochFamily& family, int grid, const std::vector<SiteFrame>& frames, const Vector& v,
                        int threads) {
  const std::size_t sites = frames.size();
  std::vector<double> f(sites);
  for (std::size_t s = 0; s < sites; ++s) f[s] = (frames[s].occupied.adjoint() * v).squaredNorm();

  std::vector<double> sorted = f;
  std::size_t qi = static_cast<std::size_t>(0.03 * static_cast<double>(sites));
  std::nth_element(sorted.begin(), sorted.begin() + qi, sorted.end());
  const double threshold = sorted[qi];

  std::vector<std::size_t> seeds;
  for (std::size_t s = 0; s < sites; ++s) {
    bool keep = f[s] <= threshold;
    if (!keep) {
      keep = true;
      std::array<int, 4> idx{};
      std::size_t rest = s;
      for (int axis = 3; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(rest % grid);
        rest /= grid;
      }
      for (int off = 0; off < 81 && keep; ++off) {
        if (off == 40) continue;
        std::size_t nb = 0;
        int code = off;
        std::array<int, 4> shifted{};
        for (int axis = 0; axis < 4; ++axis) {
          shifted[axis] = (idx[axis] + code % 3 - 1 + grid) % grid;
          code /= 3;
        }
        for (int axis = 0; axis < 4; ++axis) nb = nb * grid + shifted[axis];
        if (f[nb] < f[s]) keep = false;
      }
    }
    if (keep) seeds.push_back(s);
  }

  std::vector<SectionZero> zeros(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t i) {
    try {
      zeros[i] = newton_section_zero(family, site_point(seeds[i], grid), v);
    } catch (const Error&) {
      zeros[i] = SectionZero{};
    }
  });

  std::vector<SectionZero> distinct;
  for (const auto& z : zeros) {
    if (!z.found) continue;
    bool dup = false;
    for (const auto& d : distinct)
      if (torus_distance(z.k, d.k) < 1e-6) dup = true;
    if (!dup) distinct.push_back(z);
  }
  int total = 0;
  for (const auto& d : distinct) total += d.sign;
  return total;
}

}  // namespace

Matrix BlochFamily::partial(std::span<const double> k, int axis) const {
  if (derivative) return derivative(k, axis);
  std::vector<double> kp(k.begin(), k.end()), km(k.begin(), k.end());
  kp[axis] += kDiffStep;
  km[axis] -= kDiffStep;
  return (eval(kp) - eval(km)) / (2.0 * kDiffStep);
}

SpectralProjector negative_projector(const Matrix& h, double tol) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::InvalidArgument, "projector input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  if (vals.size() > 0 && vals.cwiseAbs().minCoeff() <= tol)
    throw Error(ErrorKind::GaplessInput, "eigenvalue within tolerance of zero");
  SpectralProjector out;
  while (out.negative_count < vals.size() && vals(out.negative_count) < 0) ++out.negative_count;
  Matrix occ = es.eigenvectors().leftCols(out.negative_count);
  out.matrix = occ * occ.adjoint();
  return out;
}

SecondChernResult second_chern_number(const BlochFamily& family, int grid, const ChernOptions& opts) {
  if (family.dim != 4) throw Error(ErrorKind::InvalidArgument, "second Chern number needs a 4-torus family");
  if (grid < 8) throw Error(ErrorKind::InvalidArgument, "grid must be at least 8");
  const std::size_t sites = static_cast<std::size_t>(grid) * grid * grid * grid;
  const int threads = resolve_threads(opts.threads);

  std::vector<SiteFrame> frames(sites);
  std::vector<double> density(sites);
  std::vector<std::string> failures(sites);
  parallel_for(sites, threads, [&](std::size_t s) {
    try {
      auto k = site_point(s, grid);
      frames[s] = frame_of(family.eval(k));
      Matrix rot_occ, rot_emp;
      if (opts.gauge) {
        auto g = opts.gauge(s, static_cast<int>(frames[s].occupied.cols()), static_cast<int>(frames[s].empty.cols()));
        rot_occ = g.first;
        rot_emp = g.second;
      }
      density[s] = curvature_density(projector_jet(family, k, rot_occ, rot_emp));
    } catch (const Error& e) {
      failures[s] = e.what();
    }
  });
  for (std::size_t s = 0; s < sites; ++s)
    if (!failures[s].empty()) throw Error(ErrorKind::GaplessInput, "grid site " + std::to_string(s) + ": " + failures[s]);

  const long occupied = frames[0].occupied.cols();
  SecondChernResult out;
  out.grid = grid;
  out.min_gap = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t s = 0; s < sites; ++s) {
    if (frames[s].occupied.cols() != occupied)
      throw Error(ErrorKind::GaplessInput, "occupied rank changes across the grid");
    out.min_gap = std::min(out.min_gap, frames[s].values.cwiseAbs().minCoeff());
    sum += density[s];
  }
  const double cell = std::pow(kTwoPi / grid, 4);
  out.raw = sum * cell / (8.0 * kPi * kPi);
  out.rounded = static_cast<int>(std::lround(out.raw));
  out.quality = std::abs(out.raw - out.rounded);
  out.resolution_warning = out.quality > 0.05;
  out.value = out.rounded;

  if (opts.section_count && occupied == 2 && opts.section_trials > 0) {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    for (int t = 0; t < opts.section_trials; ++t) {
      Vector v(family.rank);
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(normal(rng), normal(rng));
      v.normalize();
      out.section_trials.push_back(count_section_zeros(family, grid, frames, v, threads));
    }
    bool agree = std::all_of(out.section_trials.begin(), out.section_trials.end(),
                             [&](int x) { return x == out.section_trials.front(); });
    if (agree) {
      out.section_count = out.section_trials.front();
      out.value = *out.section_count;
    } else {
      out.resolution_warning = true;
    }
  }
  return out;
}

SymmetryCheck check_ai_symmetry(const BlochFamily& family, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, kTwoPi);
  SymmetryCheck out;
  std::vector<double> k(family.dim), mk(family.dim);
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < family.dim; ++i) {
      k[i] = uni(rng);
      mk[i] = -k[i];
    }
    double dev = (family.eval(k).conjugate() - family.eval(mk)).cwiseAbs().maxCoeff();
    if (dev > out.max_deviation || out.worst_point.empty()) {
      out.max_deviation = dev;
      out.worst_point = k;
    }
  }
  out.symmetric = out.max_deviation < 1e-10;
  return out;
}

BlochFamily reversed_axis(const BlochFamily& family, int axis) {
  BlochFamily out = family;
  out.id = family.id + ":reversed" + std::to_string(axis);
  auto base = family;
  out.eval = [base, axis](std::span<const double> k) {
    std::vector<double> kk(k.begin(), k.end());
    kk[axis] = -kk[axis];
    return base.eval(kk);
  };
  out.derivative = [base, axis](std::span<const double> k, int mu) {
    std::vector<double> kk(k.begin(), k.end());
    kk[axis] = -kk[axis];
    Matrix d = base.partial(kk, mu);
    return mu == axis ? Matrix(-d) : d;
  };
  return out;
}

BlochFamily stabilized(const BlochFamily& family, const Matrix& block) {
  BlochFamily out = family;
  out.id = family.id + ":stab";
  out.rank = family.rank + static_cast<int>(block.rows());
  auto base = family;
  const int r = family.rank;
  out.eval = [base, block, r](std::span<const double> k) {
    Matrix h = Matrix::Zero(r + block.rows(), r + block.rows());
    h.topLeftCorner(r, r) = base.eval(k);
    h.bottomRightCorner(block.rows(), block.rows()) = block;
    return h;
  };
  out.derivative = [base, block, r](std::span<const double> k, int mu) {
    Matrix h = Matrix::Zero(r + block.rows(), r + block.rows());
    h.topLeftCorner(r, r) = base.partial(k, mu);
    return h;
  };
  return out;
}

}  // namespace topedge
