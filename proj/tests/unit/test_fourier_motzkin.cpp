#include <doctest.h>

#include <random>

#include "doems/fourier_motzkin.hpp"

using namespace doems;

namespace {

bool satisfies(const std::vector<IntVector>& rows, const IntVector& w) {
  for (const auto& r : rows) {
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < w.size(); ++i) dot += r[i] * w[i];
    if (dot <= 0) return false;
  }
  return true;
}

std::int64_t cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Planar alternative: infeasible iff the origin lies in the convex hull of at
// most three rows.
bool planar_feasible(const std::vector<IntVector>& rows) {
  for (const auto& a : rows) {
    if (a[0] == 0 && a[1] == 0) return false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i];
      const auto& b = rows[j];
      if (cross(a, b) == 0 && a[0] * b[0] + a[1] * b[1] < 0) return false;
      for (std::size_t k = j + 1; k < rows.size(); ++k) {
        const auto& c = rows[k];
        const std::int64_t s1 = cross(a, b), s2 = cross(b, c), s3 = cross(c, a);
        if (s1 == 0 && s2 == 0 && s3 == 0) continue;
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("fourier_motzkin") {
  TEST_CASE("simple systems") {
    const std::vector<IntVector> a{{1, -1}, {1, 0}, {0, 1}};
    const auto w = solve_strict_homogeneous(a, 2);
    REQUIRE(w.has_value());
    CHECK(satisfies(a, *w));

    const std::vector<IntVector> b{{1, -1}, {-1, 1}};
    CHECK_FALSE(solve_strict_homogeneous(b, 2).has_value());

    const std::vector<IntVector> c{{0, 0, 0}};
    CHECK_FALSE(solve_strict_homogeneous(c, 3).has_value());

    const std::vector<IntVector> none;
    const auto any = solve_strict_homogeneous(none, 3);
    REQUIRE(any.has_value());
    CHECK(any->size() == 3);
  }

  TEST_CASE("planar systems agree with the convex-hull alternative") {
    std::mt19937 rng(31);
    for (int t = 0; t < 3000; ++t) {
      std::vector<IntVector> rows;
      const int k = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) {
        rows.push_back({static_cast<std::int64_t>(rng() % 9) - 4,
                        static_cast<std::int64_t>(rng() % 9) - 4});
      }
      const auto w = solve_strict_homogeneous(rows, 2);
      REQUIRE(w.has_value() == planar_feasible(rows));
      if (w) REQUIRE(satisfies(rows, *w));
    }
  }

  TEST_CASE("three-variable certificates are valid and never miss a grid witness") {
    std::mt19937 rng(37);
    for (int t = 0; t < 1500; ++t) {
      std::vector<IntVector> rows;
      const int k = 1 + static_cast<int>(rng() % 7);
      for (int i = 0; i < k; ++i) {
        rows.push_back({static_cast<std::int64_t>(rng() % 7) - 3,
                        static_cast<std::int64_t>(rng() % 7) - 3,
                        static_cast<std::int64_t>(rng() % 7) - 3});
      }
      const auto w = solve_strict_homogeneous(rows, 3);
      if (w) {
        REQUIRE(satisfies(rows, *w));
        continue;
      }
      for (std::int64_t x = -8; x <= 8; ++x) {
        for (std::int64_t y = -8; y <= 8; ++y) {
          for (std::int64_t z = -8; z <= 8; ++z) REQUIRE_FALSE(satisfies(rows, {x, y, z}));
        }
      }
    }
  }
}
