#include "topedge/catalog.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace topedge {

namespace {

constexpr int kMaxTrigDegree = 4;

// d h_loc / d(a, Re b, Im b, Re c, Im c); h_loc is affine in these.
const std::array<Matrix, 5>& local_param_derivatives() {
  static const std::array<Matrix, 5> out = [] {
    std::array<Matrix, 5> d;
    LocalModelParams zero;
    Matrix h0 = h_loc(zero, 0.0);
    LocalModelParams p;
    p = zero;
    p.a = 1.0;
    d[0] = h_loc(p, 0.0) - h0;
    p = zero;
    p.b = 1.0;
    d[1] = h_loc(p, 0.0) - h0;
    p = zero;
    p.b = kI;
    d[2] = h_loc(p, 0.0) - h0;
    p = zero;
    p.c = 1.0;
    d[3] = h_loc(p, 0.0) - h0;
    p = zero;
    p.c = kI;
    d[4] = h_loc(p, 0.0) - h0;
    return d;
  }();
  return out;
}

ParamMap torus_local_map(const std::string& id, int n, double b_shift_imag) {
  ParamMap pm;
  pm.id = id;
  pm.base = ParameterSpace::torus(3);
  pm.model = EdgeModel::LocalOdd;
  const double nd = static_cast<double>(n);
  pm.params = [nd, b_shift_imag](std::span<const double> k) {
    LocalModelParams p;
    p.a = -std::cos(k[1] + k[2]);
    p.b = -1.0 - std::exp(-kI * (nd * k[0])) - std::exp(-kI * k[1]) + kI * b_shift_imag;
    p.c = -1.0 - std::exp(-kI * k[2]);
    return p;
  };
  pm.params_jacobian = [nd](std::span<const double> k) {
    RealMatrix j = RealMatrix::Zero(5, 3);
    const double s = std::sin(k[1] + k[2]);
    j(0, 1) = s;
    j(0, 2) = s;
    cplx db1 = kI * nd * std::exp(-kI * (nd * k[0]));
    cplx db2 = kI * std::exp(-kI * k[1]);
    cplx dc3 = kI * std::exp(-kI * k[2]);
    j(1, 0) = db1.real();
    j(2, 0) = db1.imag();
    j(1, 1) = db2.real();
    j(2, 1) = db2.imag();
    j(3, 2) = dc3.real();
    j(4, 2) = dc3.imag();
    return j;
  };
  return pm;
}

CatalogEntry example1() {
  CatalogEntry e;
  e.id = "example1";
  e.description = "two-band chain over S1: mass sin k, hopping ratio 3/2 + cos k";
  ParamMap pm;
  pm.id = e.id;
  pm.base = ParameterSpace::circle();
  pm.model = EdgeModel::Chain;
  pm.params = [](std::span<const double> k) {
    LocalModelParams p;
    p.a = std::sin(k[0]);
    p.c = 1.5 + std::cos(k[0]);
    return p;
  };
  pm.params_jacobian = [](std::span<const double> k) {
    RealMatrix j = RealMatrix::Zero(5, 1);
    j(0, 0) = std::cos(k[0]);
    j(3, 0) = -std::sin(k[0]);
    return j;
  };
  e.edge = pm;
  return e;
}

CatalogEntry example2() {
  CatalogEntry e;
  e.id = "example2";
  e.description = "local model over S3 in (x, y, z, w): a = x, b = y + iz, c = w - 1";
  ParamMap pm;
  pm.id = e.id;
  pm.base = ParameterSpace::sphere(3);
  pm.model = EdgeModel::LocalOdd;
  pm.params = [](std::span<const double> x) {
    LocalModelParams p;
    p.a = x[0];
    p.b = cplx(x[1], x[2]);
    p.c = x[3] - 1.0;
    return p;
  };
  pm.params_jacobian = [](std::span<const double>) {
    RealMatrix j = RealMatrix::Zero(5, 4);
    j(0, 0) = 1.0;
    j(1, 1) = 1.0;
    j(2, 2) = 1.0;
    j(3, 3) = 1.0;
    return j;
  };
  e.edge = pm;
  return e;
}

CatalogEntry example4() {
  CatalogEntry e;
  e.id = "example4";
  e.description = "graded local model (a = 0) over S2 in (y, z, w): b = y + iz, c = w - 1";
  ParamMap pm;
  pm.id = e.id;
  pm.base = ParameterSpace::sphere(2);
  pm.model = EdgeModel::LocalEven;
  pm.params = [](std::span<const double> x) {
    LocalModelParams p;
    p.b = cplx(x[0], x[1]);
    p.c = x[2] - 1.0;
    return p;
  };
  pm.params_jacobian = [](std::span<const double>) {
    RealMatrix j = RealMatrix::Zero(5, 3);
    j(1, 0) = 1.0;
    j(2, 1) = 1.0;
    j(3, 2) = 1.0;
    return j;
  };
  e.edge = pm;
  return e;
}

CatalogEntry hn_entry(const std::string& id, int n, double b_shift_imag, bool stab) {
  CatalogEntry e;
  e.id = id;
  std::ostringstream os;
  os << "local model over T3 with b = -1 - exp(-i " << n << " k1) - exp(-i k2)";
  if (b_shift_imag != 0.0) os << " + " << b_shift_imag << "i";
  if (stab) os << ", bulk stabilised by diag(-1, 1)";
  e.description = os.str();
  ParamMap pm = torus_local_map(id, n, b_shift_imag);
  BlochFamily bulk = bulk_from_local(pm);
  if (stab) {
    Matrix block = Matrix::Zero(2, 2);
    block(0, 0) = -1.0;
    block(1, 1) = 1.0;
    bulk = stabilized(bulk, block);
    bulk.id = id;
    pm.symbol = [bulk](std::span<const double> k) { return symbol_from_bulk(bulk, k, 2); };
  }
  e.edge = pm;
  e.bulk = bulk;
  return e;
}

int parse_positive(const std::string& text, const std::string& id) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (...) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorKind::Usage, "malformed family id '" + id + "'");
  if (v < 1) throw Error(ErrorKind::Usage, "family '" + id + "' needs n >= 1");
  return v;
}

double parse_double(const std::string& text, const std::string& id) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (...) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorKind::Usage, "malformed number in family id '" + id + "'");
  return v;
}

}  // namespace

cplx TrigPolynomial::eval(std::span<const double> k) const {
  cplx out{0.0, 0.0};
  for (const auto& t : terms) {
    double phase = 0.0;
    for (std::size_t i = 0; i < t.freq.size(); ++i) phase += t.freq[i] * k[i];
    out += t.coeff * std::exp(kI * phase);
  }
  return out;
}

cplx TrigPolynomial::partial(std::span<const double> k, int axis) const {
  cplx out{0.0, 0.0};
  for (const auto& t : terms) {
    double phase = 0.0;
    for (std::size_t i = 0; i < t.freq.size(); ++i) phase += t.freq[i] * k[i];
    out += t.coeff * (kI * static_cast<double>(t.freq[axis])) * std::exp(kI * phase);
  }
  return out;
}

BlochFamily bulk_from_local(const ParamMap& edge) {
  if (edge.model != EdgeModel::LocalOdd || edge.base.kind != BaseKind::Torus || edge.base.dim != 3)
    throw Error(ErrorKind::InvalidArgument, "bulk lift needs an odd local map on T3");
  BlochFamily f;
  f.id = edge.id;
  f.dim = 4;
  f.rank = 4;
  auto params = edge.params;
  auto jac = edge.params_jacobian;
  f.eval = [params](std::span<const double> k) { return h_loc(params(k.first(3)), k[3]); };
  if (jac) {
    f.derivative = [jac](std::span<const double> k, int axis) {
      if (axis == 3) return h_loc(LocalModelParams{}, k[3] + 0.5 * kPi);
      RealMatrix j = jac(k.first(3));
      const auto& d = local_param_derivatives();
      Matrix out = Matrix::Zero(4, 4);
      for (int r = 0; r < 5; ++r) out += j(r, axis) * d[r];
      return out;
    };
  }
  return f;
}

std::vector<std::vector<double>> hn_fermi_set(int n) {
  std::vector<std::vector<double>> out;
  for (int l = 1; l <= n; ++l) {
    out.push_back({kTwoPi / (3.0 * n) + 2.0 * (l - 1) * kPi / n, 4.0 * kPi / 3.0, 7.0 * kPi / 6.0});
    out.push_back({4.0 * kPi / (3.0 * n) + 2.0 * (l - 1) * kPi / n, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0});
  }
  return out;
}

CatalogEntry trig_family(const TrigFamilySpec& spec) {
  const int expected = spec.model == EdgeModel::Chain ? 1 : (spec.model == EdgeModel::LocalEven ? 2 : 3);
  if (spec.dim != expected)
    throw Error(ErrorKind::Usage, "inline family dimension does not match its edge model");
  for (const auto* poly : {&spec.a, &spec.b, &spec.c})
    for (const auto& t : poly->terms) {
      if (static_cast<int>(t.freq.size()) != spec.dim)
        throw Error(ErrorKind::Usage, "inline term frequency length differs from the torus dimension");
      for (int f : t.freq)
        if (std::abs(f) > kMaxTrigDegree) throw Error(ErrorKind::Usage, "inline term degree exceeds 4");
    }
  CatalogEntry e;
  e.id = spec.id;
  e.description = "inline trigonometric family";
  ParamMap pm;
  pm.id = spec.id;
  pm.base = spec.dim == 1 ? ParameterSpace::circle() : ParameterSpace::torus(spec.dim);
  pm.model = spec.model;
  pm.params = [spec](std::span<const double> k) {
    LocalModelParams p;
    p.a = spec.model == EdgeModel::LocalEven ? 0.0 : spec.a.eval(k).real();
    p.b = spec.model == EdgeModel::Chain ? cplx{} : spec.b.eval(k);
    p.c = spec.c.eval(k);
    return p;
  };
  pm.params_jacobian = [spec](std::span<const double> k) {
    RealMatrix j = RealMatrix::Zero(5, spec.dim);
    for (int axis = 0; axis < spec.dim; ++axis) {
      if (spec.model != EdgeModel::LocalEven) j(0, axis) = spec.a.partial(k, axis).real();
      if (spec.model != EdgeModel::Chain) {
        cplx db = spec.b.partial(k, axis);
        j(1, axis) = db.real();
        j(2, axis) = db.imag();
      }
      cplx dc = spec.c.partial(k, axis);
      j(3, axis) = dc.real();
      j(4, axis) = dc.imag();
    }
    return j;
  };
  e.edge = pm;
  if (spec.model == EdgeModel::LocalOdd) e.bulk = bulk_from_local(pm);
  return e;
}

CatalogEntry lookup_family(const std::string& id) {
  if (id == "example1") return example1();
  if (id == "example2") return example2();
  if (id == "example3") return hn_entry("example3", 1, 0.0, false);
  if (id == "example3:broken") return hn_entry("example3:broken", 1, 0.1, false);
  if (id == "example4") return example4();
  if (id.rfind("hn:", 0) == 0) {
    std::string rest = id.substr(3);
    bool stab = false;
    if (rest.size() > 5 && rest.substr(rest.size() - 5) == ":stab") {
      stab = true;
      rest = rest.substr(0, rest.size() - 5);
    }
    return hn_entry(id, parse_positive(rest, id), 0.0, stab);
  }
  if (id.rfind("local:", 0) == 0) {
    std::vector<double> v;
    std::stringstream ss(id.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_double(item, id));
    if (v.size() != 5) throw Error(ErrorKind::Usage, "local family needs a,reb,imb,rec,imc");
    CatalogEntry e;
    e.id = id;
    e.description = "single local-model point";
    LocalModelParams p;
    p.a = v[0];
    p.b = cplx(v[1], v[2]);
    p.c = cplx(v[3], v[4]);
    e.point = p;
    return e;
  }
  throw Error(ErrorKind::Usage, "unknown family id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"example1", "example2", "example3", "example3:broken", "example4", "hn:<n>", "hn:<n>:stab",
          "local:<a>,<reb>,<imb>,<rec>,<imc>"};
}

}  // namespace topedge
