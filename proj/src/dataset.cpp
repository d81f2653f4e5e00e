#include "doems/dataset.hpp"

#include <algorithm>

#include "doems/errors.hpp"
#include "text_util.hpp"

namespace doems {

DataSet::DataSet(FieldSpec field, std::size_t n, std::vector<Point> points)
    : field_(field), n_(n), points_(std::move(points)) {
  if (n_ == 0) throw InvalidArgument("data set dimension must be positive");
  if (points_.empty()) throw InvalidArgument("data set must contain at least one point");
  for (const Point& x : points_) {
    if (x.dim() != n_) throw InvalidArgument("point dimension does not match data set");
    for (Residue c : x.coords()) {
      if (c >= field_.p()) throw InvalidArgument("point coordinate outside Z_p");
    }
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw InvalidArgument("data set contains a repeated point");
  }
}

bool DataSet::contains(const Point& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

DataSet DataSet::with_point(const Point& x) const {
  std::vector<Point> pts(points_);
  pts.push_back(x);
  return DataSet(field_, n_, std::move(pts));
}

std::string to_string(const DataSet& data) {
  std::string out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i) out += ',';
    out += to_string(data[i]);
  }
  return out;
}

DataSet parse_dataset(std::string_view text, const FieldSpec& field, std::size_t n) {
  std::string compact = detail::strip_spaces(text);
  if (compact.size() >= 2 && compact.front() == '{' && compact.back() == '}') {
    compact = compact.substr(1, compact.size() - 2);
  }
  if (compact.empty()) throw ParseError("empty data set");
  std::vector<Point> points;
  for (std::string_view token : detail::split(compact, ',')) {
    points.push_back(parse_point(token, field, n));
  }
  std::vector<Point> sorted(points);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("data set '" + std::string(text) + "' repeats a point");
  }
  return DataSet(field, n, std::move(points));
}

Grid::Grid(FieldSpec field, std::size_t n) : field_(field), n_(n), size_(1) {
  if (n == 0) throw InvalidArgument("grid dimension must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<std::uint64_t>(size_) * field.p() > kMaxGridSize) {
      throw UnsupportedParameters("grid Z_" + std::to_string(field.p()) + "^" +
                                  std::to_string(n) + " is too large");
    }
    size_ *= field.p();
  }
  columns_.assign(n, std::vector<Residue>(size_));
  for (std::uint32_t idx = 0; idx < size_; ++idx) {
    std::uint32_t rest = idx;
    for (std::size_t k = n; k-- > 0;) {
      columns_[k][idx] = static_cast<Residue>(rest % field.p());
      rest /= field.p();
    }
  }
}

std::uint32_t Grid::index_of(const Point& x) const {
  if (x.dim() != n_) throw InvalidArgument("point dimension does not match grid");
  std::uint32_t idx = 0;
  for (Residue c : x.coords()) idx = idx * field_.p() + c;
  return idx;
}

Point Grid::point_at(std::uint32_t index) const {
  std::vector<Residue> coords(n_);
  for (std::size_t k = 0; k < n_; ++k) coords[k] = columns_[k][index];
  return Point(std::move(coords));
}

std::vector<std::uint32_t> Grid::indices_of(const DataSet& data) const {
  if (data.field() != field_ || data.dim() != n_) {
    throw InvalidArgument("data set does not live on this grid");
  }
  std::vector<std::uint32_t> out;
  out.reserve(data.size());
  for (const Point& x : data.points()) out.push_back(index_of(x));
  return out;
}

DataSet Grid::dataset_from(std::span<const std::uint32_t> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::uint32_t idx : indices) pts.push_back(point_at(idx));
  return DataSet(field_, n_, std::move(pts));
}

DataSet Grid::full() const {
  std::vector<std::uint32_t> all(size_);
  for (std::uint32_t i = 0; i < size_; ++i) all[i] = i;
  return dataset_from(all);
}

}  // namespace doems
