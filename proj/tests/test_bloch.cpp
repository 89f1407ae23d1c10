#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "topedge/bloch.hpp"
#include "topedge/catalog.hpp"

using namespace topedge;
using testsupport::max_abs;

namespace {

BlochFamily constant_family(const Matrix& h, int dim) {
  BlochFamily f;
  f.id = "constant";
  f.dim = dim;
  f.rank = static_cast<int>(h.rows());
  f.eval = [h](std::span<const double>) { return h; };
  return f;
}

Matrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

}  // namespace

TEST_CASE("negative projectors") {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = -1;
  h(1, 1) = 1;
  SpectralProjector p = negative_projector(h);
  CHECK(p.negative_count == 1);
  CHECK(max_abs(p.matrix - Matrix(Eigen::Vector2cd(1, 0).asDiagonal())) <= 1e-15);
  SpectralProjector q = negative_projector(-Matrix::Identity(4, 4));
  CHECK(q.negative_count == 4);
  CHECK(max_abs(q.matrix - Matrix::Identity(4, 4)) <= 1e-15);
  CHECK_THROWS_AS(negative_projector(Matrix::Zero(2, 2)), Error);

  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    Matrix r = testsupport::random_hermitian(rng, 5);
    SpectralProjector pr = negative_projector(r);
    CHECK(max_abs(pr.matrix * pr.matrix - pr.matrix) <= 1e-12);
    CHECK(max_abs(pr.matrix - pr.matrix.adjoint()) <= 1e-12);
    CHECK(std::abs(pr.matrix.trace() - double(pr.negative_count)) <= 1e-12);
  }
}

TEST_CASE("H_1 at the origin has two occupied bands") {
  BlochFamily bulk = *lookup_family("hn:1").bulk;
  std::vector<double> k(4, 0.0);
  CHECK(negative_projector(bulk.at(k)).negative_count == 2);
}

TEST_CASE("analytic derivatives of the H_n bulk match differences") {
  BlochFamily bulk = *lookup_family("hn:2").bulk;
  REQUIRE(bulk.derivative);
  std::vector<double> k = {0.3, 1.1, -0.7, 2.2};
  for (int axis = 0; axis < 4; ++axis) {
    std::vector<double> kp = k, km = k;
    kp[axis] += 1e-5;
    km[axis] -= 1e-5;
    Matrix fd = (bulk.at(kp) - bulk.at(km)) / 2e-5;
    CHECK(max_abs(bulk.partial(k, axis) - fd) <= 1e-8);
  }
}

TEST_CASE("constant family has vanishing second Chern number") {
  Matrix h = Matrix::Zero(4, 4);
  h.diagonal() << -1, -1, 1, 1;
  SecondChernResult r = second_chern_number(constant_family(h, 4), 8);
  CHECK(std::abs(r.raw) <= 1e-14);
  CHECK(r.value == 0);
}

TEST_CASE("second Chern number of H_1 and its symmetries") {
  BlochFamily bulk = *lookup_family("hn:1").bulk;
  ChernOptions opts;
  SecondChernResult base = second_chern_number(bulk, 12, opts);
  CHECK(base.rounded == -2);
  REQUIRE(base.section_count);
  CHECK(*base.section_count == -2);
  CHECK(base.value == -2);

  ChernOptions raw_only;
  raw_only.section_count = false;
  SUBCASE("reversing one axis negates the curvature sum") {
    SecondChernResult rev = second_chern_number(reversed_axis(bulk, 2), 12, raw_only);
    CHECK(std::abs(rev.raw + base.raw) <= 1e-10);
  }
  SUBCASE("stabilising by a constant block leaves the sum unchanged") {
    Matrix block = Matrix::Zero(2, 2);
    block(0, 0) = -1;
    block(1, 1) = 1;
    SecondChernResult st = second_chern_number(stabilized(bulk, block), 12, raw_only);
    CHECK(std::abs(st.raw - base.raw) <= 1e-10);
  }
  SUBCASE("frame gauge invariance") {
    ChernOptions gauged = raw_only;
    gauged.gauge = [](std::size_t site, int occ, int empty) {
      std::mt19937_64 rng(977 + site);
      Matrix u = random_unitary(rng, occ);
      return std::make_pair(u, random_unitary(rng, empty));
    };
    CHECK(std::abs(second_chern_number(bulk, 12, gauged).raw - base.raw) <= 1e-12);
  }
  SUBCASE("thread count does not change the sum") {
    ChernOptions threaded = raw_only;
    threaded.threads = 3;
    CHECK(second_chern_number(bulk, 12, threaded).raw == base.raw);
  }
}

TEST_CASE("gapless grid point is reported") {
  BlochFamily f;
  f.dim = 4;
  f.rank = 2;
  f.eval = [](std::span<const double> k) {
    return Matrix(std::cos(k[0]) * testsupport::pauli(3) + std::cos(k[1]) * testsupport::pauli(1));
  };
  CHECK_THROWS_AS(second_chern_number(f, 8), Error);
}

TEST_CASE("class AI symmetry") {
  CHECK(check_ai_symmetry(*lookup_family("hn:1").bulk, 10000).symmetric);
  BlochFamily broken;
  broken.dim = 1;
  broken.rank = 2;
  broken.eval = [](std::span<const double> k) {
    return Matrix(std::sin(k[0]) * testsupport::pauli(1) + std::cos(k[0]) * testsupport::pauli(3));
  };
  SymmetryCheck bad = check_ai_symmetry(broken, 1000);
  CHECK_FALSE(bad.symmetric);
  CHECK(bad.max_deviation > 1.0);
  // Conjugation flips the sigma_2 term exactly as k -> -k flips sin k.
  BlochFamily odd_imaginary = broken;
  odd_imaginary.eval = [](std::span<const double> k) {
    return Matrix(std::sin(k[0]) * testsupport::pauli(2) + std::cos(k[0]) * testsupport::pauli(3));
  };
  CHECK(check_ai_symmetry(odd_imaginary, 1000).symmetric);
  Matrix real = Matrix::Zero(3, 3);
  real << 1, 2, 0, 2, -1, 3, 0, 3, 4;
  CHECK(check_ai_symmetry(constant_family(real, 2), 100).symmetric);
  CHECK_FALSE(check_ai_symmetry(*lookup_family("example3:broken").bulk, 1000).symmetric);
}
