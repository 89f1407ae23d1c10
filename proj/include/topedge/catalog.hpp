#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topedge/bloch.hpp"
#include "topedge/fermi.hpp"

namespace topedge {

// f(k) = sum_t coeff_t exp(i freq_t . k); real-valued entries take the real part.
struct TrigPolynomial {
  struct Term {
    cplx coeff{0.0, 0.0};
    std::vector<int> freq;
  };
  std::vector<Term> terms;

  cplx eval(std::span<const double> k) const;
  cplx partial(std::span<const double> k, int axis) const;
};

struct TrigFamilySpec {
  std::string id = "inline";
  EdgeModel model = EdgeModel::LocalOdd;
  int dim = 3;
  TrigPolynomial a, b, c;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::optional<ParamMap> edge;
  std::optional<BlochFamily> bulk;
  std::optional<LocalModelParams> point;
};

CatalogEntry lookup_family(const std::string& id);
CatalogEntry trig_family(const TrigFamilySpec& spec);
std::vector<std::string> catalog_ids();

// Bulk 4-torus family H(k, k4) = h_loc(params(k), k4) over an odd local edge map on T^3.
BlochFamily bulk_from_local(const ParamMap& edge);

// Closed form of the Fermi set of the H_n family.
std::vector<std::vector<double>> hn_fermi_set(int n);

}  // namespace topedge
