#include "topedge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "topedge/catalog.hpp"
#include "topedge/clifford.hpp"
#include "topedge/invariants.hpp"

namespace topedge {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED " << what << "; ";
    }
  }
};

double torus_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = angle_distance(a[i], b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

double euclid_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Largest distance from an expected point to the nearest located one; infinity on a count mismatch.
double match_error(const std::vector<FermiPoint>& found, const std::vector<std::vector<double>>& expected,
                   bool periodic) {
  if (found.size() != expected.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& want : expected) {
    double best = INFINITY;
    for (const auto& fp : found)
      best = std::min(best, periodic ? torus_distance(fp.point, want) : euclid_distance(fp.point, want));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<std::vector<double>> union_formula(int n) {
  std::vector<std::vector<double>> pts;
  for (int l = 1; l <= n; ++l) {
    double shift = 2.0 * (l - 1) * kPi / n;
    pts.push_back({2.0 * kPi / (3.0 * n) + shift, 4.0 * kPi / 3.0, 7.0 * kPi / 6.0});
    pts.push_back({4.0 * kPi / (3.0 * n) + shift, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0});
  }
  return pts;
}

Matrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

// --- criteria -------------------------------------------------------------

void spectral_flow_example1(Check& c) {
  const ParamMap& pm = *lookup_family("example1").edge;
  SpectralFlowResult sf = spectral_flow(pm, 60, std::nullopt, 512);
  c.detail << "sf = " << sf.flow << " (mu " << sf.mu << ", " << sf.bisections << " bisections); ";
  c.expect(sf.flow == 1, "sf == 1");
}

void edge_example2(Check& c, int threads) {
  EdgeIndexResult r = edge_index(*lookup_family("example2").edge, 64, threads);
  double err = match_error(r.points, {{0.0, 0.0, 0.0, 1.0}}, false);
  c.detail << "index = " << r.index << ", points = " << r.points.size() << ", location error " << err << "; ";
  c.expect(r.index == -1, "index == -1");
  c.expect(err <= 1e-8, "Fermi point at (x,y,z,w) = (0,0,0,1) within 1e-8");
}

void edge_example3(Check& c, int threads) {
  EdgeIndexResult r = edge_index(*lookup_family("example3").edge, 64, threads);
  double err = match_error(r.points, union_formula(1), true);
  double det_err = 0.0;
  for (const auto& fp : r.points) det_err = std::max(det_err, std::abs(fp.det + std::sqrt(3.0) / 2.0));
  c.detail << "index = " << r.index << ", location error " << err << ", det error " << det_err << "; ";
  c.expect(r.index == 2, "index == 2");
  c.expect(err <= 1e-8, "both Fermi points within 1e-8");
  c.expect(!r.points.empty() && det_err <= 1e-10, "det J = -sqrt(3)/2 within 1e-10");
}

void edge_example4(Check& c, int threads) {
  EdgeIndexResult r = edge_index(*lookup_family("example4").edge, 64, threads);
  double err = match_error(r.points, {{0.0, 0.0, 1.0}}, false);
  c.detail << "index = " << r.index << ", location error " << err << "; ";
  c.expect(r.index == 1, "index == 1");
  c.expect(err <= 1e-8, "Fermi point at (y,z,w) = (0,0,1) within 1e-8");
}

void edge_hn(Check& c, int n, int threads) {
  auto t0 = Clock::now();
  EdgeIndexResult r = edge_index(*lookup_family("hn:" + std::to_string(n)).edge, 64, threads);
  double err = match_error(r.points, union_formula(n), true);
  c.detail << "n=" << n << ": index " << r.index << ", " << r.points.size() << " points, error " << err << "; ";
  c.expect(r.index == 2 * n, "index == 2n for n=" + std::to_string(n));
  c.expect(err <= 1e-8, "Fermi set matches the union formula for n=" + std::to_string(n));
  c.expect(std::chrono::duration<double>(Clock::now() - t0).count() < 120.0, "under 2 min for n=" + std::to_string(n));
}

void bulk_hn(Check& c, int threads, std::uint64_t seed) {
  for (int n : {1, 2}) {
    BlochFamily bulk = *lookup_family("hn:" + std::to_string(n)).bulk;
    for (int grid : {12, 16}) {
      ChernOptions opts;
      opts.threads = threads;
      opts.seed = seed;
      auto t0 = Clock::now();
      SecondChernResult r = second_chern_number(bulk, grid, opts);
      double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      c.detail << "n=" << n << " grid " << grid << ": raw " << std::setprecision(6) << r.raw << " rounded "
               << r.rounded;
      if (r.section_count) c.detail << " section count " << *r.section_count;
      c.detail << "; ";
      std::string tag = " (n=" + std::to_string(n) + ", grid " + std::to_string(grid) + ")";
      c.expect(r.rounded == -2 * n, "raw rounds to -2n" + tag);
      c.expect(std::abs(r.raw - r.rounded) < 0.02, "|raw - rounded| < 0.02" + tag);
      c.expect(secs < 180.0, "under 3 min" + tag);
    }
  }
}

void bulk_edge(Check& c, int threads, std::uint64_t seed) {
  for (std::string id : {"hn:1", "hn:2", "hn:1:stab"}) {
    CatalogEntry e = lookup_family(id);
    BulkEdgeOptions opts;
    opts.threads = threads;
    opts.seed = seed;
    InvariantReport rep = verify_bulk_edge(*e.bulk, *e.edge, opts);
    c.detail << id << ": c2 " << *rep.bulk_c2 << ", edge " << *rep.edge_index << "; ";
    c.expect(rep.bulk_edge_ok.value_or(false), "bulk-edge identity for " + id);
  }
}

void evenness(Check& c, int threads) {
  for (std::string id : {"example3", "hn:2", "hn:3"}) {
    EvennessReport ev = check_evenness(*lookup_family(id).edge, 64, threads);
    c.detail << id << ": " << (ev.ok ? "even" : ev.violation) << " (index " << ev.index << "); ";
    c.expect(ev.ok && ev.pairing && ev.fixed_points_clear && ev.equal_signs && ev.even, "evenness of " + id);
  }
  EvennessReport broken = check_evenness(*lookup_family("example3:broken").edge, 64, threads);
  c.detail << "example3:broken: " << (broken.ok ? "passed" : "violation (" + broken.violation + ")") << "; ";
  c.expect(!broken.ok && !broken.symmetric, "symmetry violation on the perturbed family");
}

void local_oracle(Check& c, std::uint64_t seed) {
  constexpr int kSites = 60;
  constexpr int kSamples = 500;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  int count_failures = 0, vector_failures = 0, probes = 0, vector_probes = 0;
  double worst_cos = 1.0, worst_cos_abs_c = 0.0, worst_energy = 0.0;
  std::vector<double> failed_abs_c;

  auto probe = [&](const LocalModelParams& p) {
    KernelComparison k = compare_local_kernel(p, kSites);
    ++probes;
    if (!k.comparable) return;
    if (!k.counts_agree) ++count_failures;
    worst_energy = std::max(worst_energy, k.max_energy_error / k.tolerance);
    if (!k.classification.basis.empty()) {
      ++vector_probes;
      if (k.min_cosine < worst_cos) {
        worst_cos = k.min_cosine;
        worst_cos_abs_c = std::abs(p.c);
      }
      if (k.min_cosine < 1.0 - 1e-8) {
        ++vector_failures;
        failed_abs_c.push_back(std::abs(p.c));
      }
    }
  };

  for (int s = 0; s < kSamples; ++s) {
    LocalModelParams p;
    p.a = 1.5 * unit(rng);
    p.b = std::polar(1.5 * std::abs(unit(rng)), angle(rng));
    p.c = std::polar(radius(rng), angle(rng));
    const double edge = std::sqrt(p.a * p.a + std::norm(p.b));
    const double tol = 10.0 * std::pow(std::abs(p.c), kSites) + 1e-10;
    double e = 0.0;
    do {
      e = 3.0 * unit(rng);
    } while (std::abs(std::abs(e) - edge) < 2.0 * tol);
    p.energy = e;
    probe(p);
    // The same point at both exact edge energies.
    for (double sgn : {1.0, -1.0}) {
      p.energy = sgn * edge;
      probe(p);
    }
  }
  // Double zero mode (a = b = E = 0).
  for (double r : {0.2, 0.5, 0.8}) {
    LocalModelParams p;
    p.c = std::polar(r, 0.7);
    probe(p);
  }
  c.detail << probes << " probes, " << count_failures << " count/energy disagreements, worst energy error "
           << worst_energy << " x tol; " << vector_probes << " vector probes, worst cosine " << std::setprecision(12)
           << worst_cos << " at |c| = " << std::setprecision(4) << worst_cos_abs_c;
  if (!failed_abs_c.empty())
    c.detail << ", " << vector_failures << " below 1 - 1e-8 (smallest such |c| "
             << *std::min_element(failed_abs_c.begin(), failed_abs_c.end()) << ")";
  c.detail << "; ";
  c.expect(count_failures == 0, "window count and energies agree with the classification");
  c.expect(vector_failures == 0, "exact kernel vectors reach cosine 1 - 1e-8");
}

void transfer_identities(Check& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double det_err = 0.0, root_err = 0.0;
  for (int s = 0; s < 1000; ++s) {
    LocalModelParams p;
    p.a = 2.0 * unit(rng);
    p.b = std::polar(2.0 * std::abs(unit(rng)), angle(rng));
    p.c = std::polar(0.1 + 1.9 * std::abs(unit(rng)), angle(rng));
    p.energy = 3.0 * unit(rng);
    Matrix r = transfer_matrix(p);
    cplx want = std::pow(p.c / std::conj(p.c), 2);
    det_err = std::max(det_err, std::abs(r.determinant() - want));
    // Roots of conj(c) l^2 - s l + c with s = a^2 + |b|^2 + |c|^2 + 1 - E^2, each twice.
    const double sv = p.a * p.a + std::norm(p.b) + std::norm(p.c) + 1.0 - p.energy * p.energy;
    cplx disc = std::sqrt(cplx(sv * sv - 4.0 * std::norm(p.c), 0.0));
    cplx l1 = (sv + disc) / (2.0 * std::conj(p.c));
    cplx l2 = (sv - disc) / (2.0 * std::conj(p.c));
    // Each root is a semisimple double eigenvalue, so the quadratic annihilates R.
    Matrix q = (r - l1 * Matrix::Identity(4, 4)) * (r - l2 * Matrix::Identity(4, 4));
    double scale = std::max({1.0, std::abs(l1), std::abs(l2)});
    root_err = std::max(root_err, q.cwiseAbs().maxCoeff() / (scale * std::max(1.0, r.cwiseAbs().maxCoeff())));
    Eigen::ComplexEigenSolver<Matrix> es(r);
    for (Eigen::Index i = 0; i < 4; ++i) {
      cplx l = es.eigenvalues()(i);
      cplx resid = std::conj(p.c) * l * l - sv * l + p.c;
      root_err = std::max(root_err, std::abs(resid) / std::max(1.0, std::abs(l) * std::abs(l) * std::abs(p.c)));
    }
  }
  c.detail << "det error " << det_err << ", root error " << root_err << "; ";
  c.expect(det_err <= 1e-11, "det R = (c/conj c)^2 within 1e-11");
  c.expect(root_err <= 1e-11, "eigenvalues of R solve the quadratic within 1e-11");

  // Half-line recursion: psi(1) in the seed span, psi(n+1) = R psi(n), checked on rows 1..49 of N = 50.
  constexpr int kSites = 50;
  double rec_err = 0.0;
  for (int s = 0; s < 200; ++s) {
    LocalModelParams p;
    p.a = unit(rng);
    p.b = std::polar(std::abs(unit(rng)), angle(rng));
    p.c = std::polar(0.2 + 0.7 * std::abs(unit(rng)), angle(rng));
    p.energy = std::sqrt(p.a * p.a + std::norm(p.b)) * (unit(rng) > 0 ? 1.0 : -1.0);
    Matrix r = transfer_matrix(p);
    auto seeds = recursion_seed_span(p);
    cplx w1(unit(rng), unit(rng)), w2(unit(rng), unit(rng));
    Vector psi = Vector::Zero(4 * (kSites + 1));
    psi.segment<4>(0) = w1 * seeds[0] + w2 * seeds[1];
    for (int n = 1; n <= kSites; ++n) psi.segment<4>(4 * n) = r * psi.segment<4>(4 * (n - 1));
    TruncatedToeplitz t = truncate(local_model_symbol(p), kSites);
    Vector head = psi.head(4 * kSites);
    Vector resid = t.matrix * head - p.energy * head;
    for (int n = 0; n < kSites - 1; ++n) {
      double local = 0.0;
      for (int m = std::max(0, n - 1); m <= n + 1; ++m) local = std::max(local, head.segment<4>(4 * m).norm());
      rec_err = std::max(rec_err, resid.segment<4>(4 * n).norm() / std::max(local, 1e-300));
    }
  }
  c.detail << "recursion residual " << rec_err << " (relative to the local amplitude); ";
  c.expect(rec_err <= 1e-11, "recursion solves the half-line equations within 1e-11");
}

void clifford_suite(Check& c, std::uint64_t seed) {
  double rel = 0.0, herm = 0.0, unit_err = 0.0, grading = 0.0;
  bool dims = true, irreducible = true;
  for (int n : {2, 4, 6}) {
    GradedCliffordRep rep = standard_graded_rep(n);
    dims = dims && rep.dim == (1 << ((n + 1) / 2));
    rel = std::max(rel, clifford_relation_error(rep.gammas));
    Matrix id = Matrix::Identity(rep.dim, rep.dim);
    grading = std::max(grading, (rep.epsilon * rep.epsilon - id).cwiseAbs().maxCoeff());
    grading = std::max(grading, (rep.epsilon - rep.epsilon.adjoint()).cwiseAbs().maxCoeff());
    for (const auto& g : rep.gammas) {
      herm = std::max(herm, (g - g.adjoint()).cwiseAbs().maxCoeff());
      unit_err = std::max(unit_err, (g * g.adjoint() - id).cwiseAbs().maxCoeff());
      grading = std::max(grading, (g * rep.epsilon + rep.epsilon * g).cwiseAbs().maxCoeff());
    }
    std::vector<Matrix> all = rep.gammas;
    all.push_back(rep.epsilon);
    irreducible = irreducible && commutant_dimension(all) == 1;
  }
  for (int n : {1, 3, 5}) {
    UngradedCliffordRep rep = standard_ungraded_rep(n);
    rel = std::max(rel, clifford_relation_error(rep.gammas));
    Matrix id = Matrix::Identity(rep.dim, rep.dim);
    for (const auto& g : rep.gammas) {
      herm = std::max(herm, (g - g.adjoint()).cwiseAbs().maxCoeff());
      unit_err = std::max(unit_err, (g * g.adjoint() - id).cwiseAbs().maxCoeff());
    }
    irreducible = irreducible && commutant_dimension(rep.gammas) == 1;
  }
  // Pauli matrices for three generators.
  UngradedCliffordRep three = standard_ungraded_rep(3);
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, cplx(0, -1), cplx(0, 1), 0;
  s3 << 1, 0, 0, -1;
  bool pauli = three.gammas[0] == s1 && three.gammas[1] == s2 && three.gammas[2] == s3;

  GradedCliffordRep prod = block_sorted(graded_tensor_product(standard_graded_rep(2), standard_graded_rep(4)));
  GradedCliffordRep six = standard_graded_rep(6);
  bool assoc = prod.epsilon == six.epsilon;
  for (int i = 0; i < 6; ++i) assoc = assoc && prod.gammas[i] == six.gammas[i];

  // Isometry of the mu-map and the iterated suspension against its closed form.
  std::mt19937_64 rng(seed + 2);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double iso = 0.0, as_err = 0.0;
  for (int m : {1, 2}) {
    GradedCliffordRep big = standard_graded_rep(2 * m + 2);
    const Matrix& point = big.gammas[2 * m];
    std::span<const Matrix> gens(big.gammas.data(), 2 * m);
    for (int s = 0; s < 100; ++s) {
      std::vector<double> t(2 * m), x(2 * m);
      for (auto& v : t) v = 0.5 * kPi * unit(rng);
      Matrix a = point;
      for (int j = 0; j < 2 * m; ++j) a = as_suspension(a, gens[j], t[j]);
      double prod_cos = 1.0;
      for (int j = 2 * m - 1; j >= 0; --j) {
        x[j] = std::sin(t[j]) * prod_cos;
        prod_cos *= std::cos(t[j]);
      }
      double sq = 0.0;
      for (double v : x) sq += v * v;
      Matrix closed = std::sqrt(std::max(0.0, 1.0 - sq)) * point - clifford_mu(gens, x);
      as_err = std::max(as_err, (a - closed).cwiseAbs().maxCoeff());

      GradedCliffordRep rep = standard_graded_rep(2 * m);
      std::vector<double> y(2 * m);
      for (auto& v : y) v = unit(rng);
      double len = 0.0;
      for (double v : y) len += v * v;
      len = std::sqrt(len);
      Eigen::SelfAdjointEigenSolver<Matrix> es(clifford_mu(rep, y));
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        iso = std::max(iso, std::abs(std::abs(es.eigenvalues()(i)) - len));
      iso = std::max(iso, std::abs(es.eigenvalues().sum()));
    }
  }
  c.detail << "relations " << rel << ", hermitian " << herm << ", unitary " << unit_err << ", grading " << grading
           << ", isometry " << iso << ", suspension " << as_err << "; ";
  c.expect(rel <= 1e-14 && herm <= 1e-14 && unit_err <= 1e-14 && grading <= 1e-14, "Clifford relations within 1e-14");
  c.expect(dims, "graded dimensions 2^ceil(n/2)");
  c.expect(irreducible, "trivial commutants");
  c.expect(pauli, "three generators are the Pauli matrices");
  c.expect(assoc, "sorted S2 x S4 equals S6 exactly");
  c.expect(iso <= 1e-12, "mu-map eigenvalues are +-|x| with equal multiplicity");
  c.expect(as_err <= 1e-12, "iterated suspension equals its closed form within 1e-12");
}

void property_suite(Check& c, int threads, std::uint64_t seed) {
  for (std::string id : {"example1", "example2", "example3"}) {
    const ParamMap& pm = *lookup_family(id).edge;
    int fwd = edge_index(pm, 64, threads).index;
    int bwd = edge_index(reversed(pm), 64, threads).index;
    c.detail << id << " " << fwd << "/" << bwd << "; ";
    c.expect(bwd == -fwd && fwd != 0, "orientation reversal negates the index of " + id);
  }
  {
    const ParamMap& pm = *lookup_family("example1").edge;
    int fwd = spectral_flow(pm, 60, std::nullopt, 512).flow;
    int bwd = spectral_flow(pm, 60, std::nullopt, 512, true).flow;
    c.detail << "sf " << fwd << "/" << bwd << "; ";
    c.expect(bwd == -fwd && fwd != 0, "orientation reversal negates the spectral flow");
  }
  for (std::string id : {"example1", "example2", "example3", "example4", "hn:2"}) {
    const ParamMap& pm = *lookup_family(id).edge;
    int coarse = edge_index(pm, 32, threads).index;
    int fine = edge_index(pm, 64, threads).index;
    c.expect(coarse == fine, "scan 32 and 64 agree on " + id);
  }
  {
    BlochFamily bulk = *lookup_family("hn:1").bulk;
    ChernOptions plain;
    plain.threads = threads;
    plain.section_count = false;
    ChernOptions gauged = plain;
    gauged.gauge = [seed](std::size_t site, int occupied, int empty) {
      std::mt19937_64 rng(seed * 1000003u + site);
      Matrix u = random_unitary(rng, occupied);
      Matrix v = random_unitary(rng, empty);
      return std::make_pair(u, v);
    };
    double a = second_chern_number(bulk, 12, plain).raw;
    double b = second_chern_number(bulk, 12, gauged).raw;
    c.detail << "gauge shift " << std::abs(a - b) << "; ";
    c.expect(std::abs(a - b) <= 1e-12, "c2 raw is frame-gauge invariant within 1e-12");
  }
}

struct Spec {
  int id;
  const char* title;
  double limit;
  std::function<void(Check&)> body;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opts) {
  const int th = opts.threads;
  const std::uint64_t seed = opts.seed;
  std::vector<Spec> specs = {
      {1, "spectral flow of example1 is 1", 10.0, [](Check& c) { spectral_flow_example1(c); }},
      {2, "edge index of example2 is -1", 30.0, [th](Check& c) { edge_example2(c, th); }},
      {3, "edge index of example3 is 2", 60.0, [th](Check& c) { edge_example3(c, th); }},
      {4, "even edge index of example4 is 1", 30.0, [th](Check& c) { edge_example4(c, th); }},
      {5, "edge index of H_n is 2n for n = 1, 2, 3", 360.0,
       [th](Check& c) {
         for (int n : {1, 2, 3}) edge_hn(c, n, th);
       }},
      {6, "bulk c2 of H_n is -2n at grids 12 and 16", 720.0, [th, seed](Check& c) { bulk_hn(c, th, seed); }},
      {7, "bulk-edge identity for H_1, H_2 and stabilised H_1", 300.0,
       [th, seed](Check& c) { bulk_edge(c, th, seed); }},
      {8, "evenness under k -> -k and the broken family", 60.0, [th](Check& c) { evenness(c, th); }},
      {9, "local-model kernel against the truncated window", 180.0, [seed](Check& c) { local_oracle(c, seed); }},
      {10, "transfer-matrix identities", 10.0, [seed](Check& c) { transfer_identities(c, seed); }},
      {11, "Clifford representations and suspension", 5.0, [seed](Check& c) { clifford_suite(c, seed); }},
      {12, "orientation, resolution and gauge invariance", 300.0,
       [th, seed](Check& c) { property_suite(c, th, seed); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& spec : specs) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), spec.id) == opts.only.end()) continue;
    Check check;
    auto t0 = Clock::now();
    try {
      spec.body(check);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail << "FAILED with exception: " << e.what() << "; ";
    }
    CriterionResult r;
    r.id = spec.id;
    r.title = spec.title;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.limit_seconds = spec.limit;
    if (r.seconds > spec.limit) check.expect(false, "runtime within the limit");
    r.pass = check.pass;
    r.detail = check.detail.str();
    if (r.detail.size() >= 2 && r.detail.compare(r.detail.size() - 2, 2, "; ") == 0) r.detail.resize(r.detail.size() - 2);
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << r.id << ": " << r.title << " ["
        << std::fixed << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.limit_seconds
        << " s] " << r.detail << std::defaultfloat << std::setprecision(6) << "\n";
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace topedge
