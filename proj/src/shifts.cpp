#include "doems/shifts.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "doems/errors.hpp"
#include "doems/kernels.hpp"
#include "doems/radical.hpp"
#include "text_util.hpp"

namespace doems {

ShiftMap identity_shift(std::size_t n) {
  return ShiftMap{std::vector<Residue>(n, 1), std::vector<Residue>(n, 0)};
}

void validate(const ShiftMap& map, const FieldSpec& field) {
  if (map.a.size() != map.b.size()) throw InvalidArgument("shift map has ragged components");
  for (std::size_t k = 0; k < map.dim(); ++k) {
    if (map.a[k] == 0 || map.a[k] >= field.p()) {
      throw InvalidArgument("shift scaling a_" + std::to_string(k + 1) + " must be a unit mod p");
    }
    if (map.b[k] >= field.p()) {
      throw InvalidArgument("shift translation b_" + std::to_string(k + 1) + " outside Z_p");
    }
  }
}

ShiftMap inverse(const ShiftMap& map, const FieldSpec& field) {
  validate(map, field);
  ShiftMap inv{std::vector<Residue>(map.dim()), std::vector<Residue>(map.dim())};
  for (std::size_t k = 0; k < map.dim(); ++k) {
    inv.a[k] = field.inverse(map.a[k]);
    inv.b[k] = field.neg(field.mul(inv.a[k], map.b[k]));
  }
  return inv;
}

Point apply_shift(const Point& x, const ShiftMap& map, const FieldSpec& field) {
  if (x.dim() != map.dim()) throw InvalidArgument("point/shift dimension mismatch");
  std::vector<Residue> coords(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) {
    coords[k] = field.add(field.mul(map.a[k], x[k]), map.b[k]);
  }
  return Point(std::move(coords));
}

std::string to_string(const ShiftMap& map) {
  std::string out;
  for (std::size_t k = 0; k < map.dim(); ++k) {
    if (k) out += ',';
    out += std::to_string(map.a[k]) + "*x" + std::to_string(k + 1) + "+" +
           std::to_string(map.b[k]);
  }
  return out;
}

ShiftMap parse_shift_map(std::string_view text, const FieldSpec& field, std::size_t n) {
  const std::string compact = detail::strip_spaces(text);
  const auto parts = detail::split(compact, ',');
  if (parts.size() != n) throw ParseError("shift map '" + compact + "' needs " +
                                          std::to_string(n) + " components");
  ShiftMap map{std::vector<Residue>(n), std::vector<Residue>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::string_view part = parts[k];
    std::size_t pos = 0;
    const std::size_t a = detail::read_uint(part, pos);
    const std::string expect = "*x" + std::to_string(k + 1) + "+";
    if (part.substr(pos, expect.size()) != expect) {
      throw ParseError("shift component '" + std::string(part) + "' is not of the form a*x" +
                       std::to_string(k + 1) + "+b");
    }
    pos += expect.size();
    const std::size_t b = detail::read_uint(part, pos);
    if (pos != part.size()) throw ParseError("trailing text in shift component");
    if (a == 0 || a >= field.p() || b >= field.p()) {
      throw ParseError("shift component '" + std::string(part) + "' out of range");
    }
    map.a[k] = static_cast<Residue>(a);
    map.b[k] = static_cast<Residue>(b);
  }
  return map;
}

DataSet apply_shift(const DataSet& data, const ShiftMap& map) {
  if (data.dim() != map.dim()) throw InvalidArgument("data set/shift dimension mismatch");
  validate(map, data.field());
  const std::size_t m = data.size();
  const auto p = static_cast<std::uint8_t>(data.p());
  std::vector<std::vector<Residue>> columns(data.dim(), std::vector<Residue>(m));
  std::vector<Residue> column(m);
  for (std::size_t k = 0; k < data.dim(); ++k) {
    for (std::size_t i = 0; i < m; ++i) column[i] = data[i][k];
    kernels::affine_map(column, columns[k], map.a[k], map.b[k], p);
  }
  std::vector<Point> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Residue> coords(data.dim());
    for (std::size_t k = 0; k < data.dim(); ++k) coords[k] = columns[k][i];
    out.emplace_back(std::move(coords));
  }
  return DataSet(data.field(), data.dim(), std::move(out));
}

namespace {

// All length-n vectors over [lo, p), lexicographic with coordinate 1 most significant.
std::vector<std::vector<Residue>> all_vectors(std::size_t n, unsigned lo, unsigned p) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> cur(n, static_cast<Residue>(lo));
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] + 1u < p) {
        ++cur[k];
        break;
      }
      cur[k] = static_cast<Residue>(lo);
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

ShiftGroup::ShiftGroup(const Grid& grid) : grid_(grid), scaling_count_(1) {
  const FieldSpec& field = grid.field();
  const std::size_t n = grid.dim();
  const auto p = static_cast<std::uint8_t>(field.p());
  const auto scalings = all_vectors(n, 1, field.p());
  const auto translations = all_vectors(n, 0, field.p());
  scaling_count_ = scalings.size();
  maps_.reserve(scalings.size() * translations.size());
  images_.resize(scalings.size() * translations.size() * grid.size());

  std::vector<std::vector<Residue>> mapped(n, std::vector<Residue>(grid.size()));
  std::size_t slot = 0;
  for (const auto& a : scalings) {
    for (const auto& b : translations) {
      for (std::size_t k = 0; k < n; ++k) {
        kernels::affine_map(grid.coordinate_column(k), mapped[k], a[k], b[k], p);
      }
      std::uint32_t* image = images_.data() + slot * grid.size();
      for (std::uint32_t idx = 0; idx < grid.size(); ++idx) {
        std::uint32_t target = 0;
        for (std::size_t k = 0; k < n; ++k) target = target * p + mapped[k][idx];
        image[idx] = target;
      }
      maps_.push_back(ShiftMap{a, b});
      ++slot;
    }
  }
}

std::vector<std::uint32_t> ShiftGroup::apply(std::size_t i,
                                             std::span<const std::uint32_t> indices) const {
  const auto image = action(i);
  std::vector<std::uint32_t> out;
  out.reserve(indices.size());
  for (std::uint32_t idx : indices) out.push_back(image[idx]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ShiftMap> shift_between(const DataSet& from, const DataSet& to) {
  if (from.field() != to.field() || from.dim() != to.dim()) {
    throw InvalidArgument("shift_between needs data sets over the same Z_p^n");
  }
  if (from.size() != to.size()) throw InvalidArgument("shift_between needs equal-size data sets");
  const Grid grid(from.field(), from.dim());
  const ShiftGroup group(grid);
  const auto source = grid.indices_of(from);
  const auto target = grid.indices_of(to);
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group.apply(i, source) == target) return group.map(i);
  }
  return std::nullopt;
}

bool is_staircase(const DataSet& data) {
  // Downward closure follows from closure under single unit decrements.
  for (const Point& u : data.points()) {
    for (std::size_t k = 0; k < u.dim(); ++k) {
      if (u[k] == 0) continue;
      std::vector<Residue> below(u.coords().begin(), u.coords().end());
      --below[k];
      if (!data.contains(Point(std::move(below)))) return false;
    }
  }
  return true;
}

DataSet find_representative(std::span<const DataSet> members) {
  if (members.empty()) throw InvalidArgument("cannot pick a representative of an empty class");
  std::size_t best = 0;
  RadicalSum best_distance = set_distance(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    RadicalSum d = set_distance(members[i]);
    const auto cmp = radical_compare(d, best_distance);
    if (cmp < 0 || (cmp == 0 && members[i] < members[best])) {
      best = i;
      best_distance = std::move(d);
    }
  }
  return members[best];
}

namespace {

std::vector<DataSet> orbit(const ShiftGroup& group, std::span<const std::uint32_t> indices) {
  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) images.push_back(group.apply(i, indices));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<DataSet> members;
  members.reserve(images.size());
  for (const auto& img : images) members.push_back(group.grid().dataset_from(img));
  return members;
}

}  // namespace

EquivalenceClass enumerate_class(const DataSet& data) {
  const Grid grid(data.field(), data.dim());
  const ShiftGroup group(grid);
  std::vector<DataSet> members = orbit(group, grid.indices_of(data));
  DataSet rep = find_representative(members);
  return EquivalenceClass{std::move(members), std::move(rep), {}};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<EquivalenceClass> partition_all(unsigned p, std::size_t n, std::size_t m,
                                            const PartitionLimits& limits) {
  const FieldSpec field(p);
  const Grid grid(field, n);
  if (grid.size() > 64) {
    throw UnsupportedParameters("partition_all supports at most 64 grid points");
  }
  if (m == 0 || m > grid.size()) {
    throw UnsupportedParameters("m must lie in 1.." + std::to_string(grid.size()));
  }
  if (binomial(grid.size(), m) > limits.max_sets) {
    throw UnsupportedParameters("C(" + std::to_string(grid.size()) + ", " + std::to_string(m) +
                                ") data sets exceed the configured limit");
  }
  const ShiftGroup group(grid);

  auto to_mask = [](std::span<const std::uint32_t> idx) {
    std::uint64_t mask = 0;
    for (std::uint32_t i : idx) mask |= std::uint64_t{1} << i;
    return mask;
  };

  // Visit m-subsets in lexicographic order of their index lists.
  std::unordered_map<std::uint64_t, bool> seen;
  seen.reserve(static_cast<std::size_t>(binomial(grid.size(), m)) * 2);
  std::vector<std::vector<std::vector<std::uint32_t>>> class_members;
  std::vector<std::uint32_t> combo(m);
  for (std::size_t i = 0; i < m; ++i) combo[i] = static_cast<std::uint32_t>(i);
  const std::uint32_t size = grid.size();
  while (true) {
    if (!seen.contains(to_mask(combo))) {
      std::vector<std::vector<std::uint32_t>> images;
      for (std::size_t g = 0; g < group.size(); ++g) images.push_back(group.apply(g, combo));
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      for (const auto& img : images) seen.emplace(to_mask(img), true);
      class_members.push_back(std::move(images));
    }
    // next combination
    std::size_t i = m;
    while (i > 0 && combo[i - 1] == size - m + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < m; ++j) combo[j] = combo[j - 1] + 1;
  }

  std::vector<EquivalenceClass> classes;
  classes.reserve(class_members.size());
  for (const auto& idx_lists : class_members) {
    std::vector<DataSet> members;
    members.reserve(idx_lists.size());
    for (const auto& idx : idx_lists) members.push_back(grid.dataset_from(idx));
    DataSet rep = find_representative(members);
    classes.push_back(EquivalenceClass{std::move(members), std::move(rep), {}});
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return to_string(x.representative) < to_string(y.representative);
  });
  const std::string prefix =
      "p" + std::to_string(p) + "n" + std::to_string(n) + "m" + std::to_string(m) + "-c";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    classes[k].label = prefix + std::to_string(k + 1);
  }
  return classes;
}

ShiftMatrix::ShiftMatrix(const DataSet& source) : source_(source) {
  const Grid grid(source.field(), source.dim());
  const ShiftGroup group(grid);
  scalings_ = all_vectors(source.dim(), 1, source.p());
  translations_ = all_vectors(source.dim(), 0, source.p());
  const auto indices = grid.indices_of(source);
  entries_.reserve(scalings_.size() * translations_.size());
  for (std::size_t row = 0; row < translations_.size(); ++row) {
    for (std::size_t col = 0; col < scalings_.size(); ++col) {
      entries_.push_back(grid.dataset_from(group.apply(group.index_of(col, row), indices)));
    }
  }
}

const DataSet& ShiftMatrix::entry(std::span<const Residue> b, std::span<const Residue> a) const {
  const auto row = std::find_if(translations_.begin(), translations_.end(), [&](const auto& t) {
    return std::equal(t.begin(), t.end(), b.begin(), b.end());
  });
  const auto col = std::find_if(scalings_.begin(), scalings_.end(), [&](const auto& s) {
    return std::equal(s.begin(), s.end(), a.begin(), a.end());
  });
  if (row == translations_.end() || col == scalings_.end()) {
    throw InvalidArgument("no such shift matrix entry");
  }
  return entry(static_cast<std::size_t>(row - translations_.begin()),
               static_cast<std::size_t>(col - scalings_.begin()));
}

ShiftMatrix shift_matrix(const DataSet& data) { return ShiftMatrix(data); }

ShiftMatrixStats column_stats(const ShiftMatrix& matrix) {
  const unsigned p = matrix.source().p();
  ShiftMatrixStats stats;
  stats.min_exponent = static_cast<unsigned>(matrix.source().dim());
  for (std::size_t col = 0; col < matrix.column_count(); ++col) {
    std::map<DataSet, std::size_t> counts;
    for (std::size_t row = 0; row < matrix.row_count(); ++row) ++counts[matrix.entry(row, col)];
    ColumnStats cs;
    cs.scaling = matrix.scaling(col);
    cs.distinct = counts.size();
    cs.repetition = counts.begin()->second;
    for (const auto& [set, count] : counts) {
      if (count != cs.repetition) {
        throw InternalInconsistency("shift matrix column " + std::to_string(col) +
                                    " repeats its sets unequally");
      }
    }
    std::size_t power = 1;
    unsigned exponent = 0;
    while (power < cs.distinct) {
      power *= p;
      ++exponent;
    }
    if (power != cs.distinct) {
      throw InternalInconsistency("shift matrix column " + std::to_string(col) + " has " +
                                  std::to_string(cs.distinct) + " distinct sets, not a power of p");
    }
    cs.exponent = exponent;
    stats.min_exponent = std::min(stats.min_exponent, exponent);
    stats.columns.push_back(std::move(cs));
  }
  return stats;
}

ColumnRelation column_relation(const ShiftMatrix& matrix, std::size_t col_a, std::size_t col_b) {
  std::vector<DataSet> a;
  std::vector<DataSet> b;
  for (std::size_t row = 0; row < matrix.row_count(); ++row) {
    a.push_back(matrix.entry(row, col_a));
    b.push_back(matrix.entry(row, col_b));
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (a == b) return ColumnRelation::identical;
  std::vector<DataSet> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty() ? ColumnRelation::disjoint : ColumnRelation::overlapping;
}

}  // namespace doems
