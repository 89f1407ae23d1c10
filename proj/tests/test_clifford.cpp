#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "topedge/clifford.hpp"

using namespace topedge;
using testsupport::max_abs;
using testsupport::pauli;

TEST_CASE("two-generator representation is the clutching choice") {
  GradedCliffordRep s2 = standard_graded_rep(2);
  CHECK(s2.dim == 2);
  CHECK(s2.epsilon == pauli(3));
  CHECK(s2.gammas[0] == pauli(1));
  CHECK(s2.gammas[1] == pauli(2));
}

TEST_CASE("graded representations satisfy the Clifford relations") {
  for (int n : {2, 4, 6, 8, 10, 12}) {
    CAPTURE(n);
    GradedCliffordRep rep = standard_graded_rep(n);
    CHECK(rep.dim == (1 << (n / 2)));
    CHECK(static_cast<int>(rep.gammas.size()) == n);
    Matrix id = Matrix::Identity(rep.dim, rep.dim);
    CHECK(max_abs(rep.epsilon * rep.epsilon - id) <= 1e-14);
    CHECK(max_abs(rep.epsilon - rep.epsilon.adjoint()) <= 1e-14);
    for (int i = 0; i < n; ++i) {
      CHECK(max_abs(rep.gammas[i] - rep.gammas[i].adjoint()) <= 1e-14);
      CHECK(max_abs(rep.gammas[i] * rep.epsilon + rep.epsilon * rep.gammas[i]) <= 1e-14);
      for (int j = 0; j < n; ++j) {
        Matrix ac = rep.gammas[i] * rep.gammas[j] + rep.gammas[j] * rep.gammas[i];
        CHECK(max_abs(ac - (i == j ? 2.0 : 0.0) * id) <= 1e-14);
      }
    }
  }
}

TEST_CASE("grading is block diagonal with the even sector first") {
  GradedCliffordRep rep = standard_graded_rep(6);
  int half = rep.dim / 2;
  Matrix want = Matrix::Zero(rep.dim, rep.dim);
  want.topLeftCorner(half, half).setIdentity();
  want.bottomRightCorner(half, half) = -Matrix::Identity(half, half);
  CHECK(rep.epsilon == want);
}

TEST_CASE("invalid Clifford indices are rejected") {
  CHECK_THROWS_AS(standard_graded_rep(3), Error);
  CHECK_THROWS_AS(standard_graded_rep(0), Error);
  CHECK_THROWS_AS(standard_graded_rep(14), Error);
  CHECK_THROWS_AS(standard_ungraded_rep(2), Error);
}

TEST_CASE("ungraded representations for one and three generators") {
  UngradedCliffordRep one = standard_ungraded_rep(1);
  CHECK(one.dim == 1);
  CHECK(one.gammas[0](0, 0) == cplx(1.0, 0.0));
  UngradedCliffordRep three = standard_ungraded_rep(3);
  for (int i = 0; i < 3; ++i) CHECK(three.gammas[i] == pauli(i + 1));
  for (int n : {5, 7, 9, 11}) {
    UngradedCliffordRep rep = standard_ungraded_rep(n);
    CHECK(clifford_relation_error(rep.gammas) <= 1e-14);
    if (n <= 7) CHECK(commutant_dimension(rep.gammas) == 1);
  }
}

TEST_CASE("graded tensor product is associative up to the fixed ordering") {
  GradedCliffordRep lhs = block_sorted(graded_tensor_product(standard_graded_rep(2), standard_graded_rep(4)));
  GradedCliffordRep six = standard_graded_rep(6);
  CHECK(lhs.epsilon == six.epsilon);
  for (int i = 0; i < 6; ++i) CHECK(lhs.gammas[i] == six.gammas[i]);
  GradedCliffordRep rhs = block_sorted(graded_tensor_product(standard_graded_rep(4), standard_graded_rep(2)));
  CHECK(clifford_relation_error(rhs.gammas) <= 1e-14);
}

TEST_CASE("irreducibility through the commutant") {
  for (int n : {2, 4, 6}) {
    GradedCliffordRep rep = standard_graded_rep(n);
    std::vector<Matrix> all = rep.gammas;
    all.push_back(rep.epsilon);
    CHECK(commutant_dimension(all) == 1);
  }
  // A reducible pair: the direct sum of two copies.
  GradedCliffordRep s2 = standard_graded_rep(2);
  std::vector<Matrix> doubled;
  for (const auto& g : s2.gammas) {
    Matrix d = Matrix::Zero(4, 4);
    d.topLeftCorner(2, 2) = g;
    d.bottomRightCorner(2, 2) = g;
    doubled.push_back(d);
  }
  CHECK(commutant_dimension(doubled) == 4);
}

TEST_CASE("mu-map") {
  GradedCliffordRep rep = standard_graded_rep(4);
  std::vector<double> zero(4, 0.0);
  CHECK(max_abs(clifford_mu(rep, zero)) == 0.0);
  for (int i = 0; i < 4; ++i) {
    std::vector<double> e(4, 0.0);
    e[i] = 1.0;
    CHECK(clifford_mu(rep, e) == rep.gammas[i]);
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int s = 0; s < 50; ++s) {
    std::vector<double> x(4);
    double len2 = 0.0;
    for (auto& v : x) {
      v = u(rng);
      len2 += v * v;
    }
    Matrix m = clifford_mu(rep, x);
    CHECK(max_abs(m * m - len2 * Matrix::Identity(4, 4)) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-std::sqrt(len2)).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(-std::sqrt(len2)).epsilon(1e-12));
    CHECK(es.eigenvalues()(2) == doctest::Approx(std::sqrt(len2)).epsilon(1e-12));
    CHECK(es.eigenvalues()(3) == doctest::Approx(std::sqrt(len2)).epsilon(1e-12));
  }
  std::vector<double> wrong(3, 0.0);
  CHECK_THROWS_AS(clifford_mu(rep, wrong), Error);
}

TEST_CASE("suspension endpoints and anticommutation precondition") {
  GradedCliffordRep rep = standard_graded_rep(4);
  const Matrix& a = rep.gammas[0];
  const Matrix& g = rep.gammas[1];
  CHECK(max_abs(as_suspension(a, g, 0.0) - a) <= 1e-15);
  CHECK(max_abs(as_suspension(a, g, kPi / 2) + g) <= 1e-15);
  CHECK_THROWS_AS(as_suspension(a, a, 0.3), Error);
}

TEST_CASE("suspension stays invertible off the measure-zero set") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GradedCliffordRep rep = standard_graded_rep(6);
  std::span<const Matrix> gens(rep.gammas.data(), 5);
  for (int s = 0; s < 100; ++s) {
    std::vector<double> x(5);
    for (auto& v : x) v = u(rng);
    Matrix a = clifford_mu(gens, x);
    double t = 0.5 * kPi * u(rng);
    Matrix m = as_suspension(a, rep.gammas[5], t);
    Eigen::JacobiSVD<Matrix> svd_a(a), svd_m(m);
    double bound = std::max(svd_a.singularValues().minCoeff() * std::abs(std::cos(t)), std::abs(std::sin(t)));
    CHECK(svd_m.singularValues().minCoeff() >= bound - 1e-12);
  }
}
