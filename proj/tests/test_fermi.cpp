#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"
#include "topedge/catalog.hpp"
#include "topedge/fermi.hpp"
#include "topedge/manifold.hpp"

using namespace topedge;

namespace {

TrigPolynomial constant(cplx v, int dim) {
  TrigPolynomial p;
  p.terms.push_back({v, std::vector<int>(dim, 0)});
  return p;
}

TrigPolynomial wave(cplx v, std::vector<int> freq) {
  TrigPolynomial p;
  p.terms.push_back({v, std::move(freq)});
  return p;
}

TrigPolynomial sum(TrigPolynomial a, const TrigPolynomial& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

double wrapped(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, angle_distance(a[i], b[i]));
  return s;
}

}  // namespace

TEST_CASE("sphere charts") {
  ParameterSpace s2 = ParameterSpace::sphere(2);
  CHECK(s2.chart_count() == 6);
  std::vector<double> north = {0.0, 0.0, 1.0};
  int chart = s2.best_chart(north);
  auto u = s2.chart_coords(chart, north);
  auto back = s2.embed(chart, u);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(north[i]).epsilon(1e-15));
  ParameterSpace s3 = ParameterSpace::sphere(3);
  std::vector<double> p = {0.1, -0.2, 0.3, std::sqrt(1 - 0.14)};
  for (int c = 0; c < s3.chart_count(); ++c) {
    // Chart 2j (2j + 1) covers the hemisphere with x_j > 0 (< 0).
    const double side = p[c / 2] * (c % 2 == 0 ? 1.0 : -1.0);
    if (side <= 0.0) continue;
    auto uc = s3.chart_coords(c, p);
    if (!s3.in_chart_domain(uc)) continue;
    auto e = s3.embed(c, uc);
    for (int i = 0; i < 4; ++i) CHECK(e[i] == doctest::Approx(p[i]).epsilon(1e-14));
  }
}

TEST_CASE("catalog edge indices") {
  SUBCASE("circle") {
    EdgeIndexResult r = edge_index(*lookup_family("example1").edge, 64);
    CHECK(r.index == 1);
    REQUIRE(r.points.size() == 1);
    CHECK(angle_distance(r.points[0].point[0], kPi) <= 1e-10);
  }
  SUBCASE("three-sphere") {
    EdgeIndexResult r = edge_index(*lookup_family("example2").edge, 64);
    CHECK(r.index == -1);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].det == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.points[0].point[3] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("three-torus") {
    EdgeIndexResult r = edge_index(*lookup_family("example3").edge, 64);
    CHECK(r.index == 2);
    REQUIRE(r.points.size() == 2);
    std::vector<std::vector<double>> want = {{2 * kPi / 3, 4 * kPi / 3, 7 * kPi / 6},
                                             {4 * kPi / 3, 2 * kPi / 3, 5 * kPi / 6}};
    for (const auto& w : want) {
      double best = 1e9;
      for (const auto& fp : r.points) best = std::min(best, wrapped(fp.point, w));
      CHECK(best <= 1e-8);
    }
    for (const auto& fp : r.points) {
      // Closed-form determinant sin(k1 - k2) sin(k2 + k3) of the sign-coordinate Jacobian.
      double closed = std::sin(fp.point[0] - fp.point[1]) * std::sin(fp.point[1] + fp.point[2]);
      CHECK(fp.det == doctest::Approx(closed).epsilon(1e-10));
      CHECK(fp.det == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-10));
      CHECK(fp.sign == 1);
    }
  }
  SUBCASE("two-sphere, even case") {
    EdgeIndexResult r = edge_index(*lookup_family("example4").edge, 64);
    CHECK(r.index == 1);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].det == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("analytic and difference Jacobians agree at catalog points") {
  for (std::string id : {"example2", "example3", "example4", "hn:2"}) {
    CAPTURE(id);
    const ParamMap& pm = *lookup_family(id).edge;
    for (const auto& fp : edge_index(pm, 32).points) {
      RealMatrix a = sign_jacobian(pm, fp.chart, fp.coords, JacobianMethod::Analytic);
      RealMatrix d = sign_jacobian(pm, fp.chart, fp.coords, JacobianMethod::Differences);
      CHECK((a - d).cwiseAbs().maxCoeff() <= 1e-7);
      FermiPoint x = fp, y = fp;
      CHECK(sign_at(pm, x, JacobianMethod::Analytic) == sign_at(pm, y, JacobianMethod::Differences));
    }
  }
}

TEST_CASE("gapped constant family has no Fermi points") {
  TrigFamilySpec spec;
  spec.id = "gapped";
  spec.a = constant(2.0, 3);
  spec.b = constant(0.0, 3);
  spec.c = constant(0.5, 3);
  EdgeIndexResult r = edge_index(*trig_family(spec).edge, 16);
  CHECK(r.index == 0);
  CHECK(r.points.empty());
}

TEST_CASE("degenerate zero is a hard error") {
  // a = 1 - cos k1 vanishes to second order.
  TrigFamilySpec spec;
  spec.id = "degenerate";
  spec.a = sum(constant(1.0, 3), sum(wave(-0.5, {1, 0, 0}), wave(-0.5, {-1, 0, 0})));
  spec.b = sum(sum(wave(cplx(0, -0.5), {0, 1, 0}), wave(cplx(0, 0.5), {0, -1, 0})),
               sum(wave(0.5, {0, 0, 1}), wave(-0.5, {0, 0, -1})));
  spec.c = constant(0.5, 3);
  CHECK_THROWS_AS(edge_index(*trig_family(spec).edge, 16), Error);
}

TEST_CASE("Fermi point on the unit circle of decays is a hard error") {
  TrigFamilySpec spec;
  spec.id = "boundary";
  spec.a = sum(wave(cplx(0, -0.5), {1, 0, 0}), wave(cplx(0, 0.5), {-1, 0, 0}));
  spec.b = sum(sum(wave(cplx(0, -0.5), {0, 1, 0}), wave(cplx(0, 0.5), {0, -1, 0})),
               sum(wave(cplx(0, -0.5), {0, 0, 1}), wave(cplx(0, 0.5), {0, 0, -1})));
  spec.c = constant(1.0, 3);
  try {
    edge_index(*trig_family(spec).edge, 16);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundaryDegenerate);
  }
}

TEST_CASE("scan resolution independence") {
  for (std::string id : {"example1", "example2", "example3", "example4", "hn:2"}) {
    CAPTURE(id);
    const ParamMap& pm = *lookup_family(id).edge;
    CHECK(edge_index(pm, 32).index == edge_index(pm, 64).index);
  }
}

TEST_CASE("orientation reversal negates the index") {
  for (std::string id : {"example1", "example2", "example3", "example4"}) {
    CAPTURE(id);
    const ParamMap& pm = *lookup_family(id).edge;
    CHECK(edge_index(reversed(pm), 32).index == -edge_index(pm, 32).index);
  }
}

TEST_CASE("thread count does not change the located points") {
  const ParamMap& pm = *lookup_family("hn:2").edge;
  EdgeIndexResult one = edge_index(pm, 32, 1);
  EdgeIndexResult many = edge_index(pm, 32, 4);
  REQUIRE(one.points.size() == many.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) CHECK(one.points[i].point == many.points[i].point);
}

TEST_CASE("certificates at the Fermi points") {
  for (std::string id : {"example2", "example3", "example4"}) {
    CAPTURE(id);
    const ParamMap& pm = *lookup_family(id).edge;
    for (const auto& fp : edge_index(pm, 32).points) {
      Certificate c = certify_fermi_point(pm, fp, 60);
      CHECK(c.ok);
      CHECK(c.window_dim == c.expected_dim);
      CHECK(c.max_error <= c.tolerance);
      CHECK(c.toeplitz_sign == fp.sign);
    }
  }
}

TEST_CASE("spectral flow") {
  const ParamMap& pm = *lookup_family("example1").edge;
  SpectralFlowResult sf = spectral_flow(pm, 60, std::nullopt, 512);
  CHECK(sf.flow == 1);
  CHECK(sf.flow == edge_index(pm, 64).index);

  TrigFamilySpec spec;
  spec.id = "flat";
  spec.model = EdgeModel::Chain;
  spec.dim = 1;
  spec.a = constant(1.0, 1);
  spec.b = constant(0.0, 1);
  spec.c = constant(0.4, 1);
  CHECK(spectral_flow(*trig_family(spec).edge, 40, std::nullopt, 64).flow == 0);
}

TEST_CASE("evenness under k -> -k") {
  EvennessReport ev = check_evenness(*lookup_family("example3").edge, 32);
  CHECK(ev.ok);
  CHECK(ev.index == 2);
  EvennessReport hn = check_evenness(*lookup_family("hn:3").edge, 32);
  CHECK(hn.ok);
  CHECK(hn.index == 6);
  EvennessReport broken = check_evenness(*lookup_family("example3:broken").edge, 32);
  CHECK_FALSE(broken.ok);
  CHECK_FALSE(broken.symmetric);
  CHECK_FALSE(broken.offending_point.empty());
}
