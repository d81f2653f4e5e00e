#include "doems/bases.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "doems/errors.hpp"
#include "text_util.hpp"

namespace doems {

bool ModelBasis::contains(const Monomial& mono) const {
  return std::binary_search(monomials.begin(), monomials.end(), mono, basis_order_less);
}

ModelBasis make_basis(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), basis_order_less);
  if (std::adjacent_find(monomials.begin(), monomials.end()) != monomials.end()) {
    throw InvalidArgument("model basis repeats a monomial");
  }
  return ModelBasis{std::move(monomials)};
}

bool basis_less(const ModelBasis& a, const ModelBasis& b) {
  return std::lexicographical_compare(a.monomials.begin(), a.monomials.end(), b.monomials.begin(),
                                      b.monomials.end(), basis_order_less);
}

std::string to_string(const ModelBasis& basis) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
    if (i) out += ',';
    out += to_string(basis.monomials[i]);
  }
  return out + "}";
}

ModelBasis parse_model_basis(std::string_view text, std::size_t n) {
  std::string compact = detail::strip_spaces(text);
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw ParseError("model basis '" + compact + "' must be brace-wrapped");
  }
  compact = compact.substr(1, compact.size() - 2);
  if (compact.empty()) throw ParseError("empty model basis");
  std::vector<Monomial> monos;
  for (std::string_view token : detail::split(compact, ',')) {
    monos.push_back(parse_monomial(token, n));
  }
  std::vector<Monomial> sorted(monos);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("model basis '" + std::string(text) + "' repeats a monomial");
  }
  return make_basis(std::move(monos));
}

bool is_order_ideal(const ModelBasis& basis) {
  for (const Monomial& mono : basis.monomials) {
    for (std::size_t i = 0; i < mono.dim(); ++i) {
      if (mono[i] == 0) continue;
      std::vector<unsigned> e(mono.exponents().begin(), mono.exponents().end());
      --e[i];
      if (!basis.contains(Monomial(std::move(e)))) return false;
    }
  }
  return true;
}

namespace {

std::vector<Monomial> exponent_box(unsigned p, std::size_t n) {
  std::vector<Monomial> box;
  std::vector<unsigned> e(n, 0);
  while (true) {
    box.emplace_back(e);
    std::size_t k = n;
    while (k > 0 && e[k - 1] + 1 == p) e[--k] = 0;
    if (k == 0) break;
    ++e[k - 1];
  }
  std::sort(box.begin(), box.end(), basis_order_less);
  return box;
}

void collect_ideals(const std::vector<Monomial>& box,
                    const std::vector<std::vector<std::size_t>>& preds, std::size_t pos,
                    std::size_t m, std::vector<bool>& chosen, std::size_t count,
                    std::vector<ModelBasis>& out) {
  if (count == m) {
    std::vector<Monomial> monos;
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (chosen[i]) monos.push_back(box[i]);
    }
    out.push_back(ModelBasis{std::move(monos)});
    return;
  }
  if (pos == box.size() || count + (box.size() - pos) < m) return;
  const bool allowed =
      std::all_of(preds[pos].begin(), preds[pos].end(), [&](std::size_t q) { return chosen[q]; });
  if (allowed) {
    chosen[pos] = true;
    collect_ideals(box, preds, pos + 1, m, chosen, count + 1, out);
    chosen[pos] = false;
  }
  collect_ideals(box, preds, pos + 1, m, chosen, count, out);
}

}  // namespace

std::vector<ModelBasis> enumerate_order_ideals(unsigned p, std::size_t n, std::size_t m) {
  // Deciding monomials in degree order means every divisor is decided first.
  const std::vector<Monomial> box = exponent_box(p, n);
  if (m == 0 || m > box.size()) throw InvalidArgument("order ideal size out of range");
  std::vector<std::vector<std::size_t>> preds(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (box[i][k] == 0) continue;
      std::vector<unsigned> e(box[i].exponents().begin(), box[i].exponents().end());
      --e[k];
      const Monomial below(std::move(e));
      const auto it = std::find(box.begin(), box.end(), below);
      preds[i].push_back(static_cast<std::size_t>(it - box.begin()));
    }
  }
  std::vector<ModelBasis> out;
  std::vector<bool> chosen(box.size(), false);
  collect_ideals(box, preds, 0, m, chosen, 0, out);
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

std::vector<Monomial> corner_monomials(const ModelBasis& basis) {
  if (basis.monomials.empty()) throw InvalidArgument("empty model basis");
  const std::size_t n = basis.monomials.front().dim();
  std::set<Monomial> candidates;
  for (const Monomial& b : basis.monomials) {
    for (std::size_t i = 0; i < n; ++i) candidates.insert(b * Monomial::variable(n, i));
  }
  std::vector<Monomial> corners;
  for (const Monomial& c : candidates) {
    if (basis.contains(c)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (c[i] == 0) continue;
      minimal = basis.contains(c / Monomial::variable(n, i));
    }
    if (minimal) corners.push_back(c);
  }
  std::sort(corners.begin(), corners.end(), basis_order_less);
  return corners;
}

namespace {

std::optional<std::vector<MarkedPolynomial>> try_border_polynomials(
    const DataSet& data, const ModelBasis& basis, const std::vector<Monomial>& corners) {
  const FieldSpec& field = data.field();
  const ModMatrix eval = evaluation_matrix(data, basis.monomials);
  const ModMatrix rhs = evaluation_matrix(data, corners);
  const auto coeffs = try_solve(eval, rhs);
  if (!coeffs) return std::nullopt;
  std::vector<MarkedPolynomial> out;
  out.reserve(corners.size());
  for (std::size_t c = 0; c < corners.size(); ++c) {
    Polynomial poly = Polynomial::monomial(field, corners[c]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      poly.add_term(basis.monomials[j], field.neg(coeffs->at(j, c)));
    }
    out.push_back(MarkedPolynomial{corners[c], std::move(poly)});
  }
  return out;
}

void check_basis(const DataSet& data, const ModelBasis& basis) {
  if (basis.size() != data.size()) {
    throw InvalidArgument("model basis size must equal the number of points");
  }
  for (const Monomial& mono : basis.monomials) {
    if (mono.dim() != data.dim()) throw InvalidArgument("model basis dimension mismatch");
  }
}

// Realizability depends only on the set of exponent differences, which many
// data sets share, so results are memoised process-wide.
class RealizabilityCache {
 public:
  std::optional<IntVector> solve(std::vector<IntVector> rows, std::size_t n) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(rows); it != cache_.end()) return it->second;
    }
    auto result = solve_strict_homogeneous(rows, n);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(rows), result);
    return result;
  }

 private:
  std::mutex mutex_;
  std::map<std::vector<IntVector>, std::optional<IntVector>> cache_;
};

RealizabilityCache& realizability_cache() {
  static RealizabilityCache cache;
  return cache;
}

std::optional<IntVector> realize(const std::vector<MarkedPolynomial>& border, std::size_t n) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector unit(n, 0);
    unit[i] = 1;
    rows.push_back(std::move(unit));
  }
  for (const MarkedPolynomial& g : border) {
    for (const auto& [mono, coeff] : g.poly.terms()) {
      if (mono == g.leading) continue;
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) {
        diff[i] = static_cast<std::int64_t>(g.leading[i]) - static_cast<std::int64_t>(mono[i]);
      }
      rows.push_back(std::move(diff));
    }
  }
  return realizability_cache().solve(std::move(rows), n);
}

struct Shape {
  ModelBasis basis;
  std::vector<Monomial> corners;
};

// Cached order-ideal shapes and their corners per (p, n, m).
const std::vector<Shape>& shapes_cached(unsigned p, std::size_t n, std::size_t m) {
  static std::mutex mutex;
  static std::map<std::tuple<unsigned, std::size_t, std::size_t>, std::vector<Shape>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(p, n, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Shape> shapes;
    for (ModelBasis& b : enumerate_order_ideals(p, n, m)) {
      std::vector<Monomial> corners = corner_monomials(b);
      shapes.push_back(Shape{std::move(b), std::move(corners)});
    }
    it = cache.emplace(key, std::move(shapes)).first;
  }
  return it->second;
}

}  // namespace

std::vector<MarkedPolynomial> border_polynomials(const DataSet& data, const ModelBasis& basis) {
  check_basis(data, basis);
  auto out = try_border_polynomials(data, basis, corner_monomials(basis));
  if (!out) throw SingularSystem("model basis " + to_string(basis) + " is not identifiable");
  return std::move(*out);
}

std::optional<IntVector> is_term_order_realizable(const DataSet& data, const ModelBasis& basis) {
  check_basis(data, basis);
  if (!is_order_ideal(basis)) throw InvalidArgument("model basis is not an order ideal");
  auto border = try_border_polynomials(data, basis, corner_monomials(basis));
  if (!border) throw InvalidArgument("model basis " + to_string(basis) + " is not identifiable");
  return realize(*border, data.dim());
}

TermOrder certificate_order(const IntVector& weights) {
  std::vector<std::size_t> tie(weights.size());
  std::iota(tie.begin(), tie.end(), 0);
  return TermOrder::weighted(weights, std::move(tie));
}

BasisSearch search_model_bases(const DataSet& data) {
  BasisSearch search;
  for (const Shape& shape : shapes_cached(data.p(), data.dim(), data.size())) {
    auto border = try_border_polynomials(data, shape.basis, shape.corners);
    if (!border) continue;
    auto certificate = realize(*border, data.dim());
    if (!certificate) {
      search.unrealizable.push_back(shape.basis);
      continue;
    }
    search.bases.push_back(
        BasisAnnotation{shape.basis, shape.corners, std::move(*border), std::move(*certificate)});
  }
  return search;
}

std::vector<BasisAnnotation> enumerate_model_bases(const DataSet& data) {
  return search_model_bases(data).bases;
}

}  // namespace doems
