#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "topedge/fermi.hpp"
#include "topedge/local_model.hpp"
#include "topedge/toeplitz.hpp"

using namespace topedge;
using testsupport::max_abs;

namespace {

LocalModelParams params(double a, cplx b, cplx c, double e = 0.0) {
  LocalModelParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.energy = e;
  return p;
}

// Fourier block of degree m by a plain quadrature of h_loc.
Matrix fourier_block(const LocalModelParams& p, int m) {
  constexpr int kPoints = 64;
  Matrix acc = Matrix::Zero(4, 4);
  for (int j = 0; j < kPoints; ++j) {
    double k = kTwoPi * j / kPoints;
    acc += h_loc(p, k) * std::exp(cplx(0.0, -m * k));
  }
  return acc / double(kPoints);
}

// Rows 1..rows of (T_N - E) applied to psi, with psi(0) = 0.
double half_line_residual(const LocalModelParams& p, const std::vector<Eigen::Vector4cd>& psi, int rows) {
  Matrix onsite = fourier_block(p, 0), up = fourier_block(p, 1), down = fourier_block(p, -1);
  double worst = 0.0;
  for (int n = 0; n < rows; ++n) {
    Eigen::Vector4cd r = (onsite - p.energy * Matrix::Identity(4, 4)) * psi[n] + down * psi[n + 1];
    if (n > 0) r += up * psi[n - 1];
    worst = std::max(worst, r.norm() / std::max({psi[n].norm(), psi[n + 1].norm(), 1e-300}));
  }
  return worst;
}

}  // namespace

TEST_CASE("symbol at the origin of parameter space") {
  Matrix h = h_loc(params(0, 0, 0), 0.0);
  Matrix want = Matrix::Zero(4, 4);
  want(0, 1) = want(1, 0) = -1.0;
  want(2, 3) = want(3, 2) = 1.0;
  CHECK(max_abs(h - want) == 0.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(2) == doctest::Approx(1.0));
  CHECK(es.eigenvalues()(3) == doctest::Approx(1.0));
}

TEST_CASE("symbol is Hermitian and matches its Fourier blocks") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int s = 0; s < 1000; ++s) {
    LocalModelParams p = params(u(rng), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)));
    double k = 3.0 * u(rng);
    Matrix h = h_loc(p, k);
    CHECK(max_abs(h - h.adjoint()) == 0.0);
    if (s < 20) {
      CHECK(max_abs(fourier_block(p, 0) - local_onsite_block(p)) <= 1e-14);
      CHECK(max_abs(fourier_block(p, 1) - local_hopping_block()) <= 1e-14);
      CHECK(max_abs(fourier_block(p, 2)) <= 1e-14);
    }
  }
}

TEST_CASE("transfer matrix determinant and spectrum") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int s = 0; s < 1000; ++s) {
    LocalModelParams p = params(u(rng), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), u(rng));
    if (std::abs(p.c) < 0.05) continue;
    Matrix r = transfer_matrix(p);
    CHECK(std::abs(r.determinant() - std::pow(p.c / std::conj(p.c), 2)) <= 1e-11);
    const double sv = p.a * p.a + std::norm(p.b) + std::norm(p.c) + 1.0 - p.energy * p.energy;
    Eigen::ComplexEigenSolver<Matrix> es(r);
    for (int i = 0; i < 4; ++i) {
      cplx l = es.eigenvalues()(i);
      CHECK(std::abs(std::conj(p.c) * l * l - sv * l + p.c) <= 1e-8 * std::max(1.0, std::norm(l)));
    }
  }
  CHECK_THROWS_AS(transfer_matrix(params(0.3, 0.2, 0.0)), Error);
}

TEST_CASE("recursion seeds generate half-line solutions") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    LocalModelParams p = params(u(rng), cplx(u(rng), u(rng)), std::polar(0.2 + 0.7 * std::abs(u(rng)), 3 * u(rng)));
    p.energy = 2.0 * u(rng);
    Matrix r = transfer_matrix(p);
    auto seeds = recursion_seed_span(p);
    std::vector<Eigen::Vector4cd> psi(51);
    psi[0] = cplx(u(rng), u(rng)) * seeds[0] + cplx(u(rng), u(rng)) * seeds[1];
    for (int n = 1; n <= 50; ++n) psi[n] = r * psi[n - 1];
    CHECK(half_line_residual(p, psi, 49) <= 1e-11);
  }
}

TEST_CASE("discriminant values") {
  CHECK(discriminant(params(0, 0, 0.5)) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(discriminant(params(0, 0, 1.0)) == 0.0);
  LocalModelParams p = params(0.6, 0.8, cplx(0.3, 0.2), 1.0);
  CHECK(discriminant(p) == doctest::Approx(std::pow(std::norm(p.c) - 1.0, 2)).epsilon(1e-12));
}

TEST_CASE("kernel classification clauses") {
  SUBCASE("double zero mode") {
    KernelClassification k = kernel_classification(params(0, 0, 0.5));
    CHECK(k.kind == KernelKind::Dim2);
    REQUIRE(k.basis.size() == 2);
    CHECK(k.basis[0].at(3) == Eigen::Vector4cd(0.25, 0, 0, 0));
    CHECK(k.basis[1].at(1) == Eigen::Vector4cd(0, 0, 0, 1));
  }
  SUBCASE("edge mode with b != 0") {
    KernelClassification k = kernel_classification(params(0.6, 0.8, 0.3, 1.0));
    CHECK(k.kind == KernelKind::Dim1);
    REQUIRE(k.basis.size() == 1);
    CHECK(std::abs(k.basis[0].first - 2.0) <= 1e-15);
    CHECK(k.basis[0].last == cplx(1.0));
  }
  SUBCASE("flat band") { CHECK(kernel_classification(params(0, 0, 0, 1.0)).kind == KernelKind::InfiniteDim); }
  SUBCASE("edge mode with b = 0, negative side") {
    KernelClassification k = kernel_classification(params(0.5, 0, 0.3, -0.5));
    CHECK(k.kind == KernelKind::Dim1);
    CHECK(k.basis[0].first == cplx(0.0));
    CHECK(k.basis[0].last == cplx(1.0));
  }
  SUBCASE("edge mode with b = 0, positive side") {
    KernelClassification k = kernel_classification(params(0.5, 0, 0.3, 0.5));
    CHECK(k.basis[0].first == cplx(1.0));
    CHECK(k.basis[0].last == cplx(0.0));
  }
  SUBCASE("generic energy") { CHECK(kernel_classification(params(0.6, 0.8, 0.3, 0.7)).kind == KernelKind::NoSolution); }
  SUBCASE("decay outside the disc") { CHECK(kernel_classification(params(0.6, 0.8, 1.3, 1.0)).kind == KernelKind::NoSolution); }
  SUBCASE("bad locus") { CHECK_THROWS_AS(kernel_classification(params(0.6, 0.8, cplx(0, 1), 1.0)), Error); }
}

TEST_CASE("kernel vectors solve the half-line equations") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 100; ++s) {
    LocalModelParams p = params(u(rng), cplx(u(rng), u(rng)), std::polar(0.8 * std::abs(u(rng)), 3 * u(rng)));
    p.energy = (s % 2 ? 1.0 : -1.0) * std::sqrt(p.a * p.a + std::norm(p.b));
    KernelClassification k = kernel_classification(p);
    REQUIRE(k.kind == KernelKind::Dim1);
    std::vector<Eigen::Vector4cd> psi;
    for (int n = 1; n <= 51; ++n) psi.push_back(k.basis[0].at(n));
    CHECK(half_line_residual(p, psi, 50) <= 1e-12);
  }
}

TEST_CASE("effective Hamiltonian") {
  CHECK(max_abs(effective_hamiltonian(0, 0)) == 0.0);
  CHECK(effective_hamiltonian(1, 0) == testsupport::pauli(3));
  Matrix h = effective_hamiltonian(0.3, cplx(0.4, -0.7));
  Matrix want = 0.4 * testsupport::pauli(1) - 0.7 * testsupport::pauli(2) + 0.3 * testsupport::pauli(3);
  CHECK(max_abs(h - want) <= 1e-15);
}
