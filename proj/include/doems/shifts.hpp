#pragma once
// Linear shifts: coordinatewise invertible affine maps x_k -> a_k x_k + b_k
// acting on data sets, and the equivalence classes they induce.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "doems/dataset.hpp"

namespace doems {

struct ShiftMap {
  std::vector<Residue> a;  // nonzero scalings
  std::vector<Residue> b;  // translations

  std::size_t dim() const noexcept { return a.size(); }
  friend bool operator==(const ShiftMap&, const ShiftMap&) = default;
};

ShiftMap identity_shift(std::size_t n);
// Checks a_k in 1..p-1 and b_k in 0..p-1.
void validate(const ShiftMap& map, const FieldSpec& field);
ShiftMap inverse(const ShiftMap& map, const FieldSpec& field);
Point apply_shift(const Point& x, const ShiftMap& map, const FieldSpec& field);

// "1*x1+0,2*x2+2"
std::string to_string(const ShiftMap& map);
ShiftMap parse_shift_map(std::string_view text, const FieldSpec& field, std::size_t n);

DataSet apply_shift(const DataSet& data, const ShiftMap& map);

// The full group of ((p-1)p)^n shift maps on Z_p^n with each map's action on
// grid indices precomputed. Maps are ordered scaling-major: a lexicographic,
// then b lexicographic, so map 0 is the identity.
class ShiftGroup {
 public:
  explicit ShiftGroup(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return maps_.size(); }
  std::size_t scaling_count() const noexcept { return scaling_count_; }
  std::size_t translation_count() const noexcept { return grid_.size(); }
  const ShiftMap& map(std::size_t i) const { return maps_[i]; }
  std::size_t index_of(std::size_t scaling, std::size_t translation) const {
    return scaling * translation_count() + translation;
  }
  // Image of every grid index under map i.
  std::span<const std::uint32_t> action(std::size_t i) const {
    return {images_.data() + i * grid_.size(), grid_.size()};
  }

  // Sorted image of a sorted index list.
  std::vector<std::uint32_t> apply(std::size_t i, std::span<const std::uint32_t> indices) const;

 private:
  Grid grid_;
  std::size_t scaling_count_;
  std::vector<ShiftMap> maps_;
  std::vector<std::uint32_t> images_;
};

std::optional<ShiftMap> shift_between(const DataSet& from, const DataSet& to);

struct EquivalenceClass {
  std::vector<DataSet> members;  // sorted ascending
  DataSet representative;
  std::string label;             // assigned by partition_all
};

bool is_staircase(const DataSet& data);

// Minimal set distance, ties broken by the point-list order.
DataSet find_representative(std::span<const DataSet> members);
inline DataSet find_representative(const EquivalenceClass& cls) {
  return find_representative(cls.members);
}

EquivalenceClass enumerate_class(const DataSet& data);

struct PartitionLimits {
  std::uint64_t max_sets = 5'000'000;  // C(p^n, m)
};

// Classes of all m-subsets of Z_p^n, labelled "p{p}n{n}m{m}-c{k}" after
// sorting by representative encoding.
std::vector<EquivalenceClass> partition_all(unsigned p, std::size_t n, std::size_t m,
                                            const PartitionLimits& limits = {});

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class ShiftMatrix {
 public:
  explicit ShiftMatrix(const DataSet& source);

  const DataSet& source() const noexcept { return source_; }
  std::size_t row_count() const noexcept { return translations_.size(); }
  std::size_t column_count() const noexcept { return scalings_.size(); }
  const std::vector<Residue>& translation(std::size_t row) const { return translations_[row]; }
  const std::vector<Residue>& scaling(std::size_t col) const { return scalings_[col]; }
  const DataSet& entry(std::size_t row, std::size_t col) const {
    return entries_[row * scalings_.size() + col];
  }
  const DataSet& entry(std::span<const Residue> b, std::span<const Residue> a) const;

 private:
  DataSet source_;
  std::vector<std::vector<Residue>> scalings_;
  std::vector<std::vector<Residue>> translations_;
  std::vector<DataSet> entries_;
};

ShiftMatrix shift_matrix(const DataSet& data);

struct ColumnStats {
  std::vector<Residue> scaling;
  std::size_t distinct = 0;    // p^exponent
  std::size_t repetition = 0;  // occurrences of each distinct set
  unsigned exponent = 0;
};

struct ShiftMatrixStats {
  std::vector<ColumnStats> columns;
  unsigned min_exponent = 0;
};

// Throws InternalInconsistency if a column's distinct count is not a power of
// p or its sets do not repeat equally often.
ShiftMatrixStats column_stats(const ShiftMatrix& matrix);

enum class ColumnRelation { identical, disjoint, overlapping };
ColumnRelation column_relation(const ShiftMatrix& matrix, std::size_t col_a, std::size_t col_b);

}  // namespace doems
