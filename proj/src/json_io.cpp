#include "doems/json_io.hpp"

namespace doems {

namespace {

ojson monomial_list(std::span<const Monomial> monos) {
  ojson out = ojson::array();
  for (const Monomial& m : monos) out.push_back(to_string(m));
  return out;
}

ojson basis_list(std::span<const ModelBasis> bases) {
  ojson out = ojson::array();
  for (const ModelBasis& b : bases) out.push_back(to_string(b));
  return out;
}

}  // namespace

ojson to_json(const CatalogRecord& r) {
  ojson lt = ojson::array();
  for (const auto& corners : r.lt_generators) {
    ojson row = ojson::array();
    for (const Monomial& c : corners) row.push_back(to_string(c));
    lt.push_back(std::move(row));
  }
  ojson bases = ojson::array();
  for (const ModelBasis& b : r.bases) bases.push_back(to_string(b));
  return ojson{{"dataset", to_string(r.dataset)},
               {"p", r.p()},
               {"n", r.n()},
               {"m", r.m()},
               {"classlabel", r.classlabel},
               {"is_representative", r.is_representative},
               {"num_bases", r.num_bases()},
               {"bases", std::move(bases)},
               {"lt_generators", std::move(lt)},
               {"groebner_bases", r.groebner_bases}};
}

ojson to_json(const SummaryStats& stats) {
  ojson classes = ojson::array();
  for (const ClassSummary& cls : stats.classes) {
    classes.push_back(ojson{{"classlabel", cls.classlabel},
                            {"size", cls.size},
                            {"num_bases", cls.num_bases},
                            {"representative", to_string(cls.representative)},
                            {"bases", basis_list(cls.bases)}});
  }
  return ojson{{"p", stats.p},
               {"n", stats.n},
               {"m", stats.m},
               {"class_count", stats.classes.size()},
               {"total_sets", stats.total_sets},
               {"min_bases", stats.min_bases},
               {"max_bases", stats.max_bases},
               {"classes", std::move(classes)}};
}

ojson to_json(const WhatIfResult& result) {
  return ojson{{"dataset", to_string(result.base.dataset)},
               {"augmented", to_json(result.augmented)},
               {"base_bases", basis_list(result.base.bases)},
               {"new_monomials", monomial_list(result.new_monomials)}};
}

ojson to_json(const VerificationReport& report) {
  ojson checks = ojson::array();
  for (const Check& c : report.checks) {
    checks.push_back(ojson{{"name", c.name},
                           {"status", c.skipped ? "skipped" : c.passed ? "pass" : "fail"},
                           {"detail", c.detail}});
  }
  return ojson{{"p", report.p},
               {"n", report.n},
               {"m", report.m},
               {"passed", report.passed()},
               {"checks", std::move(checks)}};
}

ojson to_json(const DataSet& data, const GroebnerResult& result) {
  ojson gb = ojson::array();
  for (const MarkedPolynomial& g : result.gb.polys) gb.push_back(to_string(g));
  return ojson{{"dataset", to_string(data)},
               {"order", to_string(result.gb.order)},
               {"groebner_basis", std::move(gb)},
               {"standard_monomials", to_string(make_basis(result.standard_monomials))}};
}

ojson to_json(const DataSet& data, std::span<const BasisAnnotation> bases) {
  ojson list = ojson::array();
  for (const BasisAnnotation& ann : bases) {
    ojson gb = ojson::array();
    for (const MarkedPolynomial& g : ann.gb) gb.push_back(to_string(g));
    list.push_back(ojson{{"basis", to_string(ann.basis)},
                         {"lt_generators", monomial_list(ann.corners)},
                         {"groebner_basis", std::move(gb)},
                         {"certificate", ann.certificate}});
  }
  return ojson{{"dataset", to_string(data)}, {"num_bases", bases.size()}, {"bases", std::move(list)}};
}

}  // namespace doems
