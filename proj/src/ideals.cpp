#include "doems/ideals.hpp"

#include <algorithm>
#include <set>

#include "doems/errors.hpp"
#include "doems/kernels.hpp"

namespace doems {

std::vector<Residue> evaluation_vector(const DataSet& data, const Monomial& mono) {
  if (mono.dim() != data.dim()) throw InvalidArgument("monomial/data set dimension mismatch");
  const FieldSpec& field = data.field();
  const std::size_t m = data.size();
  std::vector<Residue> values(m, 1);
  std::vector<Residue> factor(m);
  for (std::size_t k = 0; k < data.dim(); ++k) {
    if (mono[k] == 0) continue;
    for (std::size_t i = 0; i < m; ++i) factor[i] = field.pow(data[i][k], mono[k]);
    kernels::mul_mod(values, factor, static_cast<std::uint8_t>(field.p()));
  }
  return values;
}

ModMatrix evaluation_matrix(const DataSet& data, std::span<const Monomial> monomials) {
  ModMatrix out(data.field(), data.size(), monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    const auto column = evaluation_vector(data, monomials[c]);
    for (std::size_t r = 0; r < data.size(); ++r) out.at(r, c) = column[r];
  }
  return out;
}

bool is_identifiable(const DataSet& data, std::span<const Monomial> monomials) {
  if (monomials.size() != data.size()) {
    throw InvalidArgument("identifiability needs as many monomials as points");
  }
  return rank(evaluation_matrix(data, monomials)) == data.size();
}

std::string to_string(const MarkedPolynomial& marked) {
  return to_string(marked.poly, marked.leading);
}

GroebnerResult bm_reduced_gb(const DataSet& data, const TermOrder& order) {
  const std::size_t n = data.dim();
  if (order.dim() != n) throw InvalidArgument("term order dimension mismatch");
  const FieldSpec& field = data.field();
  const unsigned p = field.p();

  auto by_order = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(by_order)> pending(by_order);
  pending.insert(Monomial::one(n));

  IncrementalEchelon echelon(field, data.size(), data.size());
  std::vector<Monomial> standard;
  std::vector<MarkedPolynomial> gb;

  while (!pending.empty()) {
    const Monomial t = *pending.begin();
    pending.erase(pending.begin());
    const bool in_lt_ideal = std::any_of(gb.begin(), gb.end(), [&](const MarkedPolynomial& g) {
      return monomial_divides(g.leading, t);
    });
    if (in_lt_ideal) continue;

    auto outcome = echelon.reduce_or_insert(evaluation_vector(data, t));
    if (outcome.inserted) {
      standard.push_back(t);
      for (std::size_t i = 0; i < n; ++i) {
        // x_i^p agrees with x_i on Z_p, so exponents never need to pass p.
        if (t[i] < p) pending.insert(t * Monomial::variable(n, i));
      }
      continue;
    }
    // t - sum_j c_j s_j vanishes on the data.
    Polynomial g = Polynomial::monomial(field, t);
    for (std::size_t j = 0; j < outcome.coeffs.size(); ++j) {
      g.add_term(standard[j], field.neg(outcome.coeffs[j]));
    }
    gb.push_back(MarkedPolynomial{t, std::move(g)});
  }

  std::sort(standard.begin(), standard.end(), basis_order_less);
  std::sort(gb.begin(), gb.end(), [](const auto& a, const auto& b) {
    return basis_order_less(a.leading, b.leading);
  });
  return GroebnerResult{ReducedGB{order, std::move(gb)}, std::move(standard)};
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& gb) {
  const FieldSpec& field = f.field();
  Polynomial rest = f;
  Polynomial remainder(field, f.dim());
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    for (auto it = std::next(top); it != rest.terms().end(); ++it) {
      if (gb.order.less(top->first, it->first)) top = it;
    }
    const Monomial lead = top->first;
    const Residue coeff = top->second;
    auto divisor = std::find_if(gb.polys.begin(), gb.polys.end(), [&](const MarkedPolynomial& g) {
      return monomial_divides(g.leading, lead);
    });
    if (divisor == gb.polys.end()) {
      remainder.add_term(lead, coeff);
      rest.add_term(lead, field.neg(coeff));
      continue;
    }
    rest -= divisor->poly.times(lead / divisor->leading, coeff);
  }
  return remainder;
}

Polynomial fit_minimal_model(const IOData& data, std::span<const Monomial> basis) {
  const DataSet& inputs = data.inputs;
  if (data.outputs.size() != inputs.size()) {
    throw InvalidArgument("need exactly one output per input point");
  }
  if (basis.size() != inputs.size()) {
    throw InvalidArgument("model basis size must equal the number of points");
  }
  const FieldSpec& field = inputs.field();
  ModMatrix rhs(field, inputs.size(), 1);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (data.outputs[i] >= field.p()) throw InvalidArgument("output value outside Z_p");
    rhs.at(i, 0) = data.outputs[i];
  }
  const ModMatrix coeffs = solve(evaluation_matrix(inputs, basis), rhs);
  Polynomial model(field, inputs.dim());
  for (std::size_t j = 0; j < basis.size(); ++j) model.add_term(basis[j], coeffs.at(j, 0));
  return model;
}

}  // namespace doems
