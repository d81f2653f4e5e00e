#include "doems/fourier_motzkin.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "doems/errors.hpp"

namespace doems {
namespace {

using boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalInconsistency("Fourier-Motzkin overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalInconsistency("Fourier-Motzkin overflow");
  return out;
}

// Strict homogeneous rows are invariant under positive scaling.
void make_primitive(IntVector& row) {
  std::int64_t g = 0;
  for (std::int64_t x : row) g = std::gcd(g, x);
  if (g > 1) {
    for (std::int64_t& x : row) x /= g;
  }
}

bool is_zero(const IntVector& row) {
  return std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; });
}

void dedupe(std::vector<IntVector>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

std::optional<IntVector> solve_strict_homogeneous(std::span<const IntVector> rows,
                                                  std::size_t n) {
  std::vector<std::vector<IntVector>> stages;
  stages.emplace_back();
  for (IntVector row : rows) {
    if (row.size() != n) throw InvalidArgument("constraint row has the wrong length");
    if (is_zero(row)) return std::nullopt;
    make_primitive(row);
    stages.back().push_back(std::move(row));
  }
  dedupe(stages.back());

  // stages[s] involves only variables 0 .. n-1-s.
  for (std::size_t var = n; var-- > 0;) {
    const auto& current = stages.back();
    std::vector<IntVector> next;
    std::vector<const IntVector*> pos;
    std::vector<const IntVector*> neg;
    for (const IntVector& row : current) {
      if (row[var] > 0) {
        pos.push_back(&row);
      } else if (row[var] < 0) {
        neg.push_back(&row);
      } else {
        next.push_back(row);
      }
    }
    for (const IntVector* up : pos) {
      for (const IntVector* down : neg) {
        const std::int64_t su = -(*down)[var];
        const std::int64_t sd = (*up)[var];
        IntVector combined(n);
        for (std::size_t j = 0; j < n; ++j) {
          combined[j] = checked_add(checked_mul(su, (*up)[j]), checked_mul(sd, (*down)[j]));
        }
        if (is_zero(combined)) return std::nullopt;  // 0 > 0
        make_primitive(combined);
        next.push_back(std::move(combined));
      }
    }
    dedupe(next);
    stages.push_back(std::move(next));
  }
  if (!stages.back().empty()) return std::nullopt;

  // Back-substitute, fixing variable k from the stage where it is the last one left.
  std::vector<cpp_rational> w(n, cpp_rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& system = stages[n - 1 - k];
    std::optional<cpp_rational> lower;
    std::optional<cpp_rational> upper;
    for (const IntVector& row : system) {
      if (row[k] == 0) continue;
      cpp_rational fixed = 0;
      for (std::size_t j = 0; j < k; ++j) fixed += cpp_rational(row[j]) * w[j];
      const cpp_rational bound = -fixed / cpp_rational(row[k]);
      if (row[k] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      if (!(*lower < *upper)) throw InternalInconsistency("Fourier-Motzkin back-substitution failed");
      // Prefer an integer strictly inside the interval.
      cpp_int candidate = boost::multiprecision::numerator(*lower) /
                          boost::multiprecision::denominator(*lower);
      while (cpp_rational(candidate) <= *lower) ++candidate;
      w[k] = cpp_rational(candidate) < *upper ? cpp_rational(candidate) : (*lower + *upper) / 2;
    } else if (lower) {
      cpp_int candidate = boost::multiprecision::numerator(*lower) /
                          boost::multiprecision::denominator(*lower);
      while (cpp_rational(candidate) <= *lower) ++candidate;
      w[k] = cpp_rational(candidate);
    } else if (upper) {
      cpp_int candidate = boost::multiprecision::numerator(*upper) /
                          boost::multiprecision::denominator(*upper);
      while (cpp_rational(candidate) >= *upper) --candidate;
      w[k] = cpp_rational(candidate);
    }
  }

  cpp_int scale = 1;
  for (const auto& x : w) {
    const cpp_int d = boost::multiprecision::denominator(x);
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  std::vector<cpp_int> ints(n);
  cpp_int g = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ints[k] = boost::multiprecision::numerator(w[k]) * (scale / boost::multiprecision::denominator(w[k]));
    g = boost::multiprecision::gcd(g, ints[k]);
  }
  IntVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cpp_int v = g > 1 ? cpp_int(ints[k] / g) : ints[k];
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
      throw InternalInconsistency("certificate does not fit 64 bits");
    }
    out[k] = static_cast<std::int64_t>(v);
  }
  for (const IntVector& row : rows) {
    cpp_int dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += cpp_int(row[j]) * out[j];
    if (dot <= 0) throw InternalInconsistency("Fourier-Motzkin produced an invalid point");
  }
  return out;
}

}  // namespace doems
