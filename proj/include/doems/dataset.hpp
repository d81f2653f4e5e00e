#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doems/gf.hpp"

namespace doems {

// A set of m >= 1 distinct points of Z_p^n, kept in ascending lexicographic order.
class DataSet {
 public:
  DataSet(FieldSpec field, std::size_t n, std::vector<Point> points);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned p() const noexcept { return field_.p(); }
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const Point& x) const;

  DataSet with_point(const Point& x) const;

  friend bool operator==(const DataSet&, const DataSet&) = default;
  // Tie-break order on equal-size sets: sorted point lists compared entry by entry.
  friend std::strong_ordering operator<=>(const DataSet& a, const DataSet& b) {
    return a.points_ <=> b.points_;
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<Point> points_;
};

// "000,001,010,100,110".
std::string to_string(const DataSet& data);
DataSet parse_dataset(std::string_view text, const FieldSpec& field, std::size_t n);

// Dense indexing of Z_p^n: index = sum x_i p^(n-i), so index order equals
// lexicographic point order.
class Grid {
 public:
  Grid(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }

  std::uint32_t index_of(const Point& x) const;
  Point point_at(std::uint32_t index) const;
  // Coordinate k of every grid point, in index order (structure of arrays).
  const std::vector<Residue>& coordinate_column(std::size_t k) const { return columns_[k]; }

  std::vector<std::uint32_t> indices_of(const DataSet& data) const;
  DataSet dataset_from(std::span<const std::uint32_t> indices) const;
  DataSet full() const;

 private:
  FieldSpec field_;
  std::size_t n_;
  std::uint32_t size_;
  std::vector<std::vector<Residue>> columns_;
};

// Largest grid the enumeration routines accept.
inline constexpr std::uint32_t kMaxGridSize = 1u << 16;

}  // namespace doems
