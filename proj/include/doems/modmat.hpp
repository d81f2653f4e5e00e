#pragma once
// Dense linear algebra over Z_p on byte rows; row operations go through the
// dispatched kernels.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "doems/gf.hpp"

namespace doems {

class ModMatrix {
 public:
  ModMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::size_t rank(ModMatrix matrix);

// Solves A X = B for square A; throws SingularSystem when A is not invertible.
ModMatrix solve(const ModMatrix& a, const ModMatrix& b);
// Same, returning nullopt instead of throwing for singular A.
std::optional<ModMatrix> try_solve(const ModMatrix& a, const ModMatrix& b);

// Incremental row-echelon form over a growing list of vectors u_0, u_1, ...
// Each call either records v as a new independent vector or expresses it in
// terms of the ones already recorded.
class IncrementalEchelon {
 public:
  IncrementalEchelon(FieldSpec field, std::size_t length, std::size_t capacity);

  struct Outcome {
    bool inserted = false;
    // When !inserted: v = sum_j coeffs[j] * u_j over the recorded vectors.
    std::vector<Residue> coeffs;
  };

  Outcome reduce_or_insert(std::span<const Residue> v);
  // Same as above without recording; nullopt when v is independent.
  std::optional<std::vector<Residue>> express(std::span<const Residue> v) const;

  std::size_t count() const noexcept { return rows_.size(); }

 private:
  struct Row {
    std::vector<Residue> vec;    // reduced vector, pivot entry normalised to 1
    std::vector<Residue> combo;  // vec = sum_j combo[j] * u_j
    std::size_t pivot;
  };

  // Returns w = v - sum_j c_j u_j reduced against every row, and c.
  void reduce(std::vector<Residue>& w, std::vector<Residue>& c) const;

  FieldSpec field_;
  std::size_t length_;
  std::size_t capacity_;
  std::vector<Row> rows_;
};

}  // namespace doems
