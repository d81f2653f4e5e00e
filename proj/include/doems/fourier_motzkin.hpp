#pragma once
// Exact feasibility of strict homogeneous integer systems by Fourier-Motzkin
// elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace doems {

using IntVector = std::vector<std::int64_t>;

// Finds w in Z^n with r . w > 0 for every row r, or nullopt if none exists.
// The returned vector is primitive (gcd 1). Every row must have length n.
std::optional<IntVector> solve_strict_homogeneous(std::span<const IntVector> rows,
                                                  std::size_t n);

}  // namespace doems
