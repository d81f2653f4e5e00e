#pragma once
// Vanishing ideals of point sets: evaluation matrices, identifiability,
// reduced Groebner bases by Buchberger-Moeller, normal forms and minimal models.

#include <span>
#include <string>
#include <vector>

#include "doems/dataset.hpp"
#include "doems/modmat.hpp"
#include "doems/term_order.hpp"

namespace doems {

// Values of one monomial at every point of the data set, in point order.
std::vector<Residue> evaluation_vector(const DataSet& data, const Monomial& mono);

// Rows are the points, columns the monomials.
ModMatrix evaluation_matrix(const DataSet& data, std::span<const Monomial> monomials);

// True iff the square evaluation matrix is invertible over Z_p.
bool is_identifiable(const DataSet& data, std::span<const Monomial> monomials);

struct MarkedPolynomial {
  Monomial leading;
  Polynomial poly;  // monic in `leading`

  friend bool operator==(const MarkedPolynomial&, const MarkedPolynomial&) = default;
};

// Leading monomial first, e.g. "x2^2 + x2".
std::string to_string(const MarkedPolynomial& marked);

struct ReducedGB {
  TermOrder order;
  // Sorted by leading monomial in basis listing order.
  std::vector<MarkedPolynomial> polys;
};

struct GroebnerResult {
  ReducedGB gb;
  std::vector<Monomial> standard_monomials;  // basis listing order
};

GroebnerResult bm_reduced_gb(const DataSet& data, const TermOrder& order);

// Remainder of f on division by the marked basis; supported on standard monomials.
Polynomial normal_form(const Polynomial& f, const ReducedGB& gb);

struct IOData {
  DataSet inputs;
  std::vector<Residue> outputs;  // one per point, in sorted point order
};

// The unique polynomial supported on `basis` taking the given outputs;
// throws SingularSystem when the basis is not identifiable by the inputs.
Polynomial fit_minimal_model(const IOData& data, std::span<const Monomial> basis);

}  // namespace doems
