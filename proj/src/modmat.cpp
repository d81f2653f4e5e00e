#include "doems/modmat.hpp"

#include <algorithm>

#include "doems/errors.hpp"
#include "doems/kernels.hpp"

namespace doems {

ModMatrix::ModMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

namespace {

// row_dst -= factor * row_src
void subtract_multiple(std::span<Residue> dst, std::span<const Residue> src, Residue factor,
                       const FieldSpec& field) {
  if (factor == 0) return;
  kernels::axpy_mod(dst, src, field.neg(factor), static_cast<std::uint8_t>(field.p()));
}

void scale_row(std::span<Residue> row, Residue factor, const FieldSpec& field) {
  for (Residue& x : row) x = field.mul(x, factor);
}

}  // namespace

std::size_t rank(ModMatrix m) {
  const FieldSpec& field = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());
    }
    scale_row(m.row(r), field.inverse(m.at(r, c)), field);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      subtract_multiple(m.row(i), m.row(r), m.at(i, c), field);
    }
    ++r;
  }
  return r;
}

ModMatrix solve(const ModMatrix& a, const ModMatrix& b) {
  auto x = try_solve(a, b);
  if (!x) throw SingularSystem("coefficient matrix is singular over Z_" +
                               std::to_string(a.field().p()));
  return std::move(*x);
}

std::optional<ModMatrix> try_solve(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != a.cols()) throw InvalidArgument("solve needs a square coefficient matrix");
  if (b.rows() != a.rows()) throw InvalidArgument("right-hand side has the wrong row count");
  if (a.field() != b.field()) throw InvalidArgument("field mismatch in solve");
  const FieldSpec& field = a.field();
  const std::size_t n = a.rows();
  const std::size_t k = b.cols();

  ModMatrix aug(field, n, n + k);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), aug.row(r).begin() + n);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug.at(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      std::swap_ranges(aug.row(pivot).begin(), aug.row(pivot).end(), aug.row(c).begin());
    }
    scale_row(aug.row(c), field.inverse(aug.at(c, c)), field);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c) subtract_multiple(aug.row(i), aug.row(c), aug.at(i, c), field);
    }
  }
  ModMatrix x(field, n, k);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(aug.row(r).begin() + n, aug.row(r).end(), x.row(r).begin());
  }
  return x;
}

IncrementalEchelon::IncrementalEchelon(FieldSpec field, std::size_t length,
                                       std::size_t capacity)
    : field_(field), length_(length), capacity_(capacity) {}

void IncrementalEchelon::reduce(std::vector<Residue>& w, std::vector<Residue>& c) const {
  // Rows were inserted already reduced against their predecessors, so one
  // pass in insertion order clears every pivot column.
  for (const Row& row : rows_) {
    const Residue f = w[row.pivot];
    if (f == 0) continue;
    subtract_multiple(w, row.vec, f, field_);
    subtract_multiple(c, row.combo, f, field_);
  }
}

IncrementalEchelon::Outcome IncrementalEchelon::reduce_or_insert(std::span<const Residue> v) {
  if (v.size() != length_) throw InvalidArgument("vector length mismatch in echelon form");
  std::vector<Residue> w(v.begin(), v.end());
  std::vector<Residue> c(capacity_, 0);
  reduce(w, c);
  // Now w = v - sum_j (-c_j) u_j, i.e. w = v + sum_j c_j u_j.
  auto nz = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (nz == w.end()) {
    Outcome out;
    out.coeffs.resize(rows_.size());
    for (std::size_t j = 0; j < rows_.size(); ++j) out.coeffs[j] = field_.neg(c[j]);
    return out;
  }
  if (rows_.size() == capacity_) throw InternalInconsistency("echelon capacity exceeded");
  c[rows_.size()] = 1;
  const std::size_t pivot = static_cast<std::size_t>(nz - w.begin());
  const Residue inv = field_.inverse(w[pivot]);
  scale_row(w, inv, field_);
  scale_row(c, inv, field_);
  rows_.push_back(Row{std::move(w), std::move(c), pivot});
  return Outcome{true, {}};
}

std::optional<std::vector<Residue>> IncrementalEchelon::express(
    std::span<const Residue> v) const {
  if (v.size() != length_) throw InvalidArgument("vector length mismatch in echelon form");
  std::vector<Residue> w(v.begin(), v.end());
  std::vector<Residue> c(capacity_, 0);
  reduce(w, c);
  if (std::any_of(w.begin(), w.end(), [](Residue x) { return x != 0; })) return std::nullopt;
  std::vector<Residue> coeffs(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) coeffs[j] = field_.neg(c[j]);
  return coeffs;
}

}  // namespace doems
