#include "topedge/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace topedge {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

GradedCliffordRep s2_raw() {
  GradedCliffordRep rep;
  rep.n = 2;
  rep.dim = 2;
  rep.epsilon = Matrix::Zero(2, 2);
  rep.epsilon(0, 0) = 1.0;
  rep.epsilon(1, 1) = -1.0;
  Matrix g1 = Matrix::Zero(2, 2);
  g1(0, 1) = 1.0;
  g1(1, 0) = 1.0;
  Matrix g2 = Matrix::Zero(2, 2);
  g2(0, 1) = -kI;
  g2(1, 0) = kI;
  rep.gammas = {g1, g2};
  return rep;
}

}  // namespace

GradedCliffordRep graded_tensor_product(const GradedCliffordRep& lhs, const GradedCliffordRep& rhs) {
  GradedCliffordRep out;
  out.n = lhs.n + rhs.n;
  out.dim = lhs.dim * rhs.dim;
  out.epsilon = kron(lhs.epsilon, rhs.epsilon);
  Matrix id_r = Matrix::Identity(rhs.dim, rhs.dim);
  for (const auto& g : lhs.gammas) out.gammas.push_back(kron(g, id_r));
  for (const auto& g : rhs.gammas) out.gammas.push_back(kron(lhs.epsilon, g));
  return out;
}

GradedCliffordRep block_sorted(const GradedCliffordRep& rep) {
  std::vector<int> order(rep.dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return rep.epsilon(i, i).real() > rep.epsilon(j, j).real();
  });
  Matrix perm = Matrix::Zero(rep.dim, rep.dim);
  for (int i = 0; i < rep.dim; ++i) perm(i, order[i]) = 1.0;
  GradedCliffordRep out;
  out.n = rep.n;
  out.dim = rep.dim;
  out.epsilon = perm * rep.epsilon * perm.adjoint();
  for (const auto& g : rep.gammas) out.gammas.push_back(perm * g * perm.adjoint());
  return out;
}

GradedCliffordRep standard_graded_rep(int n) {
  if (n < 2 || n % 2 != 0 || n > 12)
    throw Error(ErrorKind::InvalidArgument, "graded rep needs even n in [2, 12], got " + std::to_string(n));
  GradedCliffordRep acc = s2_raw();
  for (int m = 4; m <= n; m += 2) acc = graded_tensor_product(acc, s2_raw());
  return block_sorted(acc);
}

UngradedCliffordRep standard_ungraded_rep(int n) {
  if (n < 1 || n % 2 == 0 || n > 11)
    throw Error(ErrorKind::InvalidArgument, "ungraded rep needs odd n in [1, 11], got " + std::to_string(n));
  GradedCliffordRep big = standard_graded_rep(n + 1);
  int half = big.dim / 2;
  UngradedCliffordRep out;
  out.n = n;
  out.dim = half;
  for (int i = 0; i < n; ++i) out.gammas.push_back(big.gammas[i].block(0, half, half, half));
  return out;
}

Matrix clifford_mu(std::span<const Matrix> gammas, std::span<const double> x) {
  if (gammas.size() != x.size())
    throw Error(ErrorKind::InvalidArgument,
                "mu needs " + std::to_string(gammas.size()) + " coordinates, got " + std::to_string(x.size()));
  if (gammas.empty()) throw Error(ErrorKind::InvalidArgument, "mu of an empty generator list");
  Matrix out = Matrix::Zero(gammas[0].rows(), gammas[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * gammas[i];
  return out;
}

Matrix clifford_mu(const GradedCliffordRep& rep, std::span<const double> x) { return clifford_mu(rep.gammas, x); }
Matrix clifford_mu(const UngradedCliffordRep& rep, std::span<const double> x) { return clifford_mu(rep.gammas, x); }

Matrix as_suspension(const Matrix& a, const Matrix& gamma_next, double t) {
  if (a.rows() != gamma_next.rows() || a.cols() != gamma_next.cols())
    throw Error(ErrorKind::InvalidArgument, "suspension operands differ in size");
  double anti = (a * gamma_next + gamma_next * a).norm();
  if (anti >= 1e-12)
    throw Error(ErrorKind::InvalidArgument, "suspension generator does not anticommute, norm " + std::to_string(anti));
  return a * std::cos(t) - gamma_next * std::sin(t);
}

double clifford_relation_error(std::span<const Matrix> gammas) {
  double worst = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      Matrix m = gammas[i] * gammas[j] + gammas[j] * gammas[i];
      if (i == j) m -= 2.0 * Matrix::Identity(m.rows(), m.cols());
      worst = std::max(worst, m.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

int commutant_dimension(std::span<const Matrix> mats, double tol) {
  if (mats.empty()) return 0;
  const Eigen::Index d = mats[0].rows();
  // vec(MX - XM) = (I (x) M - M^T (x) I) vec(X)
  Matrix stacked(static_cast<Eigen::Index>(mats.size()) * d * d, d * d);
  Matrix id = Matrix::Identity(d, d);
  for (std::size_t k = 0; k < mats.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        kron(id, mats[k]) - kron(mats[k].transpose(), id);
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++rank;
  return static_cast<int>(d * d) - rank;
}

}  // namespace topedge
