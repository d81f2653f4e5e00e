#pragma once
// Exact sums of square roots c_1*sqrt(d_1) + ... with squarefree radicands.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "doems/dataset.hpp"

namespace doems {

class RadicalSum {
 public:
  using Terms = std::map<std::uint64_t, std::int64_t>;

  RadicalSum() = default;
  static RadicalSum sqrt_of(std::uint64_t value);
  // Builds c*sqrt(d) terms directly; radicands are squarefree-normalised.
  static RadicalSum from_terms(const Terms& terms);

  void add_sqrt(std::uint64_t value, std::int64_t times = 1);
  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum operator-(const RadicalSum& other) const;

  // radicand -> coefficient, zero coefficients never stored
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  double approx() const;

  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

 private:
  Terms terms_;
};

// "0", "3", "1 + sqrt2 + sqrt5", "2sqrt2".
std::string to_string(const RadicalSum& value);

// Exact ordering of real values. Equality is structural; otherwise the sign of
// the difference is found by interval bounds at doubling binary precision.
std::strong_ordering radical_compare(const RadicalSum& u, const RadicalSum& v);

// Sum over points of the Euclidean distance to the origin, coordinates read
// as the integers 0..p-1.
RadicalSum set_distance(const DataSet& data);

}  // namespace doems
