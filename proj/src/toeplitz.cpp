#include "topedge/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace topedge {

namespace {

constexpr int kFourierPoints = 256;
constexpr double kDropTol = 1e-13;
constexpr double kTailTol = 1e-10;
constexpr double kBoundaryTol = 1e-9;
constexpr double kDegenerateTol = 1e-8;
constexpr double kTunnellingTol = 1e-4;

}  // namespace

Matrix BlockSymbol::eval(double k) const {
  Matrix out = Matrix::Zero(rank, rank);
  for (const auto& [m, c] : coeffs) out += std::exp(kI * (static_cast<double>(m) * k)) * c;
  return out;
}

int BlockSymbol::max_degree() const {
  int deg = 0;
  for (const auto& [m, c] : coeffs) deg = std::max(deg, std::abs(m));
  return deg;
}

BlockSymbol symbol_from_bulk(const BlochFamily& family, std::span<const double> k_par, int fourier_cutoff) {
  if (static_cast<int>(k_par.size()) != family.dim - 1)
    throw Error(ErrorKind::InvalidArgument, "symbol needs " + std::to_string(family.dim - 1) + " transverse momenta");
  if (fourier_cutoff < 0 || fourier_cutoff >= kFourierPoints / 2)
    throw Error(ErrorKind::InvalidArgument, "fourier cutoff out of range");

  std::vector<Matrix> samples(kFourierPoints);
  std::vector<double> k(k_par.begin(), k_par.end());
  k.push_back(0.0);
  for (int j = 0; j < kFourierPoints; ++j) {
    k.back() = kTwoPi * j / kFourierPoints;
    samples[j] = family.eval(k);
  }
  auto coefficient = [&](int m) {
    Matrix c = Matrix::Zero(family.rank, family.rank);
    for (int j = 0; j < kFourierPoints; ++j)
      c += std::exp(-kI * (kTwoPi * m * j / kFourierPoints)) * samples[j];
    return Matrix(c / static_cast<double>(kFourierPoints));
  };

  double tail = 0.0;
  for (int m = fourier_cutoff + 1; m < kFourierPoints / 2; ++m)
    tail = std::max({tail, coefficient(m).norm(), coefficient(-m).norm()});
  if (tail > kTailTol)
    throw Error(ErrorKind::CutoffInsufficient,
                "Fourier tail " + std::to_string(tail) + " beyond degree " + std::to_string(fourier_cutoff));

  BlockSymbol sym;
  sym.rank = family.rank;
  sym.source = std::vector<double>(k_par.begin(), k_par.end());
  for (int m = 0; m <= fourier_cutoff; ++m) {
    Matrix plus = coefficient(m);
    Matrix minus = coefficient(-m);
    if (m == 0) {
      Matrix c0 = 0.5 * (plus + plus.adjoint());
      if (c0.norm() >= kDropTol) sym.coeffs[0] = c0;
      continue;
    }
    Matrix cm = 0.5 * (plus + minus.adjoint());
    if (cm.norm() < kDropTol) continue;
    sym.coeffs[m] = cm;
    sym.coeffs[-m] = cm.adjoint();
  }
  return sym;
}

FredholmCheck fredholm_check(const BlockSymbol& symbol, int samples) {
  FredholmCheck out;
  out.min_singular_value = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    Eigen::JacobiSVD<Matrix> svd(symbol.eval(kTwoPi * j / samples));
    out.min_singular_value = std::min(out.min_singular_value, svd.singularValues().minCoeff());
  }
  out.fredholm = out.min_singular_value > 1e-8;
  return out;
}

double symbol_gap(const BlockSymbol& symbol, int samples) {
  double gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(symbol.eval(kTwoPi * j / samples), Eigen::EigenvaluesOnly);
    gap = std::min(gap, es.eigenvalues().cwiseAbs().minCoeff());
  }
  return gap;
}

TruncatedToeplitz truncate(const BlockSymbol& symbol, int sites) {
  if (sites <= symbol.max_degree())
    throw Error(ErrorKind::InvalidArgument, "truncation shorter than the symbol bandwidth");
  const int r = symbol.rank;
  TruncatedToeplitz t;
  t.symbol = symbol;
  t.sites = sites;
  t.matrix = Matrix::Zero(r * sites, r * sites);
  for (const auto& [m, c] : symbol.coeffs) {
    if (m < 0) continue;
    for (int i = m; i < sites; ++i) {
      int j = i - m;
      t.matrix.block(i * r, j * r, r, r) = c;
      if (m > 0) t.matrix.block(j * r, i * r, r, r) = c.adjoint();
    }
  }
  return t;
}

std::vector<EigenPair> LowEnergyWindow::certified() const {
  std::vector<EigenPair> out;
  for (const auto& p : pairs)
    if (p.certified) out.push_back(p);
  return out;
}

std::vector<double> LowEnergyWindow::certified_values() const {
  std::vector<double> out;
  for (const auto& p : pairs)
    if (p.certified) out.push_back(p.value);
  return out;
}

LowEnergyWindow low_energy_window(const TruncatedToeplitz& t, double mu, double loc_threshold) {
  if (!(mu > 0)) throw Error(ErrorKind::InvalidArgument, "window radius must be positive");
  const int r = t.symbol.rank;
  const int head = r * ((t.sites + 1) / 2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(t.matrix);
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();

  std::vector<int> inside;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (std::abs(std::abs(vals(i)) - mu) < kBoundaryTol)
      throw Error(ErrorKind::WindowBoundary, "eigenvalue " + std::to_string(vals(i)) + " sits on the window edge");
    if (std::abs(vals(i)) < mu) inside.push_back(static_cast<int>(i));
  }

  LowEnergyWindow w;
  w.mu = mu;
  // Near-degenerate clusters are rotated to diagonalise the head weight, which separates the two ends.
  // States split only by end-to-end tunnelling are spread over both ends; they join a cluster over a wider gap.
  std::vector<double> raw_weight(inside.size());
  for (std::size_t i = 0; i < inside.size(); ++i) raw_weight[i] = vecs.col(inside[i]).head(head).squaredNorm();
  auto spread = [&](std::size_t i) { return raw_weight[i] > 1.0 - loc_threshold && raw_weight[i] < loc_threshold; };
  auto joined = [&](std::size_t i) {
    const double gap = vals(inside[i]) - vals(inside[i - 1]);
    const double scale = std::max(1.0, std::abs(vals(inside[i])));
    return gap < kDegenerateTol * scale || (gap < kTunnellingTol * scale && spread(i) && spread(i - 1));
  };
  std::size_t start = 0;
  while (start < inside.size()) {
    std::size_t stop = start + 1;
    while (stop < inside.size() && joined(stop)) ++stop;
    const Eigen::Index count = static_cast<Eigen::Index>(stop - start);
    Matrix block(t.matrix.rows(), count);
    for (Eigen::Index j = 0; j < count; ++j) block.col(j) = vecs.col(inside[start + j]);
    if (count > 1) {
      Matrix head_gram = block.topRows(head).adjoint() * block.topRows(head);
      Eigen::SelfAdjointEigenSolver<Matrix> rot(head_gram);
      block = block * rot.eigenvectors().rowwise().reverse();
    }
    for (Eigen::Index j = 0; j < count; ++j) {
      EigenPair p;
      p.vector = block.col(j);
      p.value = (p.vector.adjoint() * t.matrix * p.vector)(0, 0).real();
      Eigen::Index peak;
      p.vector.cwiseAbs().maxCoeff(&peak);
      p.vector *= std::conj(p.vector(peak)) / std::abs(p.vector(peak));
      p.weight = p.vector.head(head).squaredNorm();
      p.certified = p.weight >= loc_threshold;
      w.pairs.push_back(std::move(p));
    }
    start = stop;
  }
  return w;
}

}  // namespace topedge
