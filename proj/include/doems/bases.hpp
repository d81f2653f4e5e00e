#pragma once
// All model bases of a data set: order ideals of monomials that are
// identifiable by the data and realised as standard-monomial sets by some
// term order, with their corner generators and reduced Groebner bases.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doems/dataset.hpp"
#include "doems/fourier_motzkin.hpp"
#include "doems/ideals.hpp"

namespace doems {

struct ModelBasis {
  std::vector<Monomial> monomials;  // basis listing order

  std::size_t size() const noexcept { return monomials.size(); }
  bool contains(const Monomial& mono) const;
  friend bool operator==(const ModelBasis&, const ModelBasis&) = default;
};

ModelBasis make_basis(std::vector<Monomial> monomials);
// Lexicographic over the listing-ordered monomials.
bool basis_less(const ModelBasis& a, const ModelBasis& b);

// "{1,x1,x2,x3,x1x2}"
std::string to_string(const ModelBasis& basis);
ModelBasis parse_model_basis(std::string_view text, std::size_t n);

bool is_order_ideal(const ModelBasis& basis);

// All divisibility-closed m-subsets of the exponent box {0..p-1}^n, sorted by basis_less.
std::vector<ModelBasis> enumerate_order_ideals(unsigned p, std::size_t n, std::size_t m);

// Minimal generators of the monomials outside the order ideal (pure powers
// x_i^p included when x_i^(p-1) is in the basis).
std::vector<Monomial> corner_monomials(const ModelBasis& basis);

// For each corner c: c minus the combination of basis monomials agreeing with c on the data.
std::vector<MarkedPolynomial> border_polynomials(const DataSet& data, const ModelBasis& basis);

// Strictly positive integer weights making every corner heavier than the
// tail of its border polynomial, or nullopt when no term order realises the basis.
std::optional<IntVector> is_term_order_realizable(const DataSet& data, const ModelBasis& basis);

// Lex x1 > ... > xn refinement used with a certificate.
TermOrder certificate_order(const IntVector& weights);

struct BasisAnnotation {
  ModelBasis basis;
  std::vector<Monomial> corners;
  std::vector<MarkedPolynomial> gb;
  IntVector certificate;
};

struct BasisSearch {
  std::vector<BasisAnnotation> bases;
  // Identifiable order ideals that no term order realises.
  std::vector<ModelBasis> unrealizable;
};

BasisSearch search_model_bases(const DataSet& data);
std::vector<BasisAnnotation> enumerate_model_bases(const DataSet& data);

}  // namespace doems
