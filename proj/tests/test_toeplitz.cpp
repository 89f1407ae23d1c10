#include "doctest.h"
#include "test_support.hpp"
#include "topedge/catalog.hpp"
#include "topedge/fermi.hpp"
#include "topedge/local_model.hpp"
#include "topedge/toeplitz.hpp"

using namespace topedge;
using testsupport::max_abs;

namespace {

LocalModelParams params(double a, cplx b, cplx c) {
  LocalModelParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  return p;
}

BlochFamily local_line(const LocalModelParams& p) {
  BlochFamily f;
  f.id = "line";
  f.dim = 1;
  f.rank = 4;
  f.eval = [p](std::span<const double> k) { return h_loc(p, k[0]); };
  return f;
}

}  // namespace

TEST_CASE("Fourier blocks of the local model family") {
  LocalModelParams p = params(0.3, cplx(0.2, -0.5), cplx(0.4, 0.1));
  BlockSymbol s = symbol_from_bulk(local_line(p), {}, 3);
  // Hand-written blocks: onsite V and forward hopping A.
  Matrix v(4, 4), a = Matrix::Zero(4, 4);
  cplx b = p.b, c = p.c, bb = std::conj(b), cb = std::conj(c);
  v << 0.3, cb, 0, bb, c, -0.3, bb, 0, 0, b, 0.3, -c, b, 0, -cb, -0.3;
  a(0, 1) = -1.0;
  a(3, 2) = 1.0;
  CHECK(s.max_degree() == 1);
  CHECK(max_abs(s.coeffs.at(0) - v) <= 1e-14);
  CHECK(max_abs(s.coeffs.at(1) - a) <= 1e-14);
  CHECK(max_abs(s.coeffs.at(-1) - a.adjoint()) <= 1e-14);
}

TEST_CASE("constant family has only the zeroth block") {
  BlochFamily f;
  f.dim = 2;
  f.rank = 2;
  f.eval = [](std::span<const double>) { return testsupport::pauli(3); };
  double kp[] = {0.4};
  BlockSymbol s = symbol_from_bulk(f, kp, 2);
  CHECK(s.coeffs.size() == 1);
  CHECK(s.coeffs.count(0) == 1);
}

TEST_CASE("H_n bulk restricts to a degree-one symbol") {
  CatalogEntry e = lookup_family("example3");
  double kp[] = {2 * kPi / 3, 4 * kPi / 3, 7 * kPi / 6};
  BlockSymbol s = symbol_from_bulk(*e.bulk, kp, 4);
  CHECK(s.max_degree() == 1);
}

TEST_CASE("tail beyond the cutoff is detected") {
  BlochFamily f;
  f.dim = 1;
  f.rank = 1;
  f.eval = [](std::span<const double> k) {
    Matrix m(1, 1);
    m(0, 0) = std::cos(3 * k[0]);
    return m;
  };
  CHECK_THROWS_AS(symbol_from_bulk(f, {}, 2), Error);
  CHECK_NOTHROW(symbol_from_bulk(f, {}, 3));
}

TEST_CASE("Fredholm property of local symbols") {
  CHECK(fredholm_check(local_model_symbol(params(0, 0, 0.5)), 256).fredholm);
  FredholmCheck bad = fredholm_check(local_model_symbol(params(0, 0, 1.0)), 256);
  CHECK_FALSE(bad.fredholm);
  CHECK(bad.min_singular_value <= 1e-12);
  FredholmCheck massive = fredholm_check(local_model_symbol(params(1, 0, 0)), 256);
  CHECK(massive.fredholm);
  // Each 2x2 block [[1, -e^{ik}], [-e^{-ik}, -1]] squares to 2.
  CHECK(massive.min_singular_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("truncation fills the block Toeplitz pattern") {
  BlockSymbol shift;
  shift.rank = 1;
  shift.coeffs[0] = Matrix::Zero(1, 1);
  shift.coeffs[1] = Matrix::Ones(1, 1);
  shift.coeffs[-1] = Matrix::Ones(1, 1);
  Matrix want(3, 3);
  want << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  CHECK(truncate(shift, 3).matrix == want);

  LocalModelParams p = params(0.3, cplx(0.2, 0.1), 0.5);
  BlockSymbol s = local_model_symbol(p);
  Matrix t = truncate(s, 2).matrix;
  Matrix v = local_onsite_block(p), a = local_hopping_block();
  CHECK(max_abs(t.block(0, 0, 4, 4) - v) == 0.0);
  CHECK(max_abs(t.block(4, 4, 4, 4) - v) == 0.0);
  CHECK(max_abs(t.block(0, 4, 4, 4) - a.adjoint()) == 0.0);
  CHECK(max_abs(t.block(4, 0, 4, 4) - a) == 0.0);
  CHECK_THROWS_AS(truncate(s, 1), Error);
}

TEST_CASE("low-energy windows of the local model") {
  SUBCASE("double zero mode") {
    LowEnergyWindow w = low_energy_window(truncate(local_model_symbol(params(0, 0, 0.5)), 60), 1.3);
    auto vals = w.certified_values();
    REQUIRE(vals.size() == 2);
    for (double v : vals) CHECK(std::abs(v) <= 1e-12);
  }
  SUBCASE("pair of edge modes at plus and minus one") {
    LowEnergyWindow w = low_energy_window(truncate(local_model_symbol(params(0.6, 0.8, 0.3)), 60), 1.3);
    auto vals = w.certified_values();
    REQUIRE(vals.size() == 2);
    std::sort(vals.begin(), vals.end());
    CHECK(std::abs(vals[0] + 1.0) <= 1e-12);
    CHECK(std::abs(vals[1] - 1.0) <= 1e-12);
  }
  SUBCASE("gapped point") {
    LowEnergyWindow w = low_energy_window(truncate(local_model_symbol(params(2, 0, 0)), 40), 1.3);
    CHECK(w.certified().empty());
  }
  SUBCASE("eigenvalue on the window edge") {
    CHECK_THROWS_AS(low_energy_window(truncate(local_model_symbol(params(0.6, 0.8, 0.3)), 60), 1.0), Error);
  }
}

TEST_CASE("window is stable under small changes of the radius") {
  TruncatedToeplitz t = truncate(local_model_symbol(params(0.2, cplx(0.1, 0.3), 0.4)), 60);
  auto a = low_energy_window(t, 0.9).certified_values();
  auto b = low_energy_window(t, 0.95).certified_values();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
}
