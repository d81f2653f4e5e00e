#include "doems/radical.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "doems/errors.hpp"

namespace doems {
namespace {

using boost::multiprecision::cpp_int;

// value = square^2 * squarefree
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value) {
  std::uint64_t square = 1;
  std::uint64_t rest = value;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square *= f;
    }
  }
  return {square, rest};
}

}  // namespace

RadicalSum RadicalSum::sqrt_of(std::uint64_t value) {
  RadicalSum out;
  out.add_sqrt(value);
  return out;
}

RadicalSum RadicalSum::from_terms(const Terms& terms) {
  RadicalSum out;
  for (const auto& [radicand, coeff] : terms) {
    if (radicand == 0 || coeff == 0) continue;
    const auto [square, squarefree] = split_square(radicand);
    auto& slot = out.terms_[squarefree];
    slot += coeff * static_cast<std::int64_t>(square);
    if (slot == 0) out.terms_.erase(squarefree);
  }
  return out;
}

void RadicalSum::add_sqrt(std::uint64_t value, std::int64_t times) {
  *this += from_terms({{value, times}});
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [radicand, coeff] : other.terms_) {
    auto& slot = terms_[radicand];
    slot += coeff;
    if (slot == 0) terms_.erase(radicand);
  }
  return *this;
}

RadicalSum RadicalSum::operator-(const RadicalSum& other) const {
  RadicalSum out(*this);
  for (const auto& [radicand, coeff] : other.terms_) {
    auto& slot = out.terms_[radicand];
    slot -= coeff;
    if (slot == 0) out.terms_.erase(radicand);
  }
  return out;
}

double RadicalSum::approx() const {
  double sum = 0.0;
  for (const auto& [radicand, coeff] : terms_) {
    sum += static_cast<double>(coeff) * std::sqrt(static_cast<double>(radicand));
  }
  return sum;
}

std::string to_string(const RadicalSum& value) {
  if (value.is_zero()) return "0";
  std::string out;
  for (const auto& [radicand, coeff] : value.terms()) {
    std::string term;
    if (radicand == 1) {
      term = std::to_string(coeff < 0 ? -coeff : coeff);
    } else {
      const std::int64_t mag = coeff < 0 ? -coeff : coeff;
      term = (mag == 1 ? std::string() : std::to_string(mag)) + "sqrt" + std::to_string(radicand);
    }
    if (out.empty()) {
      out = (coeff < 0 ? "-" : "") + term;
    } else {
      out += (coeff < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::strong_ordering radical_compare(const RadicalSum& u, const RadicalSum& v) {
  if (u == v) return std::strong_ordering::equal;
  // Distinct squarefree radicands are linearly independent over Q, so the
  // difference is a nonzero real and the refinement below terminates.
  const RadicalSum diff = u - v;
  for (unsigned bits = 32;; bits *= 2) {
    if (bits > 1u << 16) throw InternalInconsistency("radical comparison did not resolve");
    cpp_int lower = 0;
    cpp_int upper = 0;
    for (const auto& [radicand, coeff] : diff.terms()) {
      // floor(2^bits sqrt(d)) <= 2^bits sqrt(d) <= floor(...) + 1
      const cpp_int scaled = cpp_int(radicand) << (2 * bits);
      const cpp_int root = boost::multiprecision::sqrt(scaled);
      const cpp_int root_hi = (root * root == scaled) ? root : root + 1;
      const cpp_int c = coeff;
      if (coeff > 0) {
        lower += c * root;
        upper += c * root_hi;
      } else {
        lower += c * root_hi;
        upper += c * root;
      }
    }
    if (lower > 0) return std::strong_ordering::greater;
    if (upper < 0) return std::strong_ordering::less;
  }
}

RadicalSum set_distance(const DataSet& data) {
  RadicalSum total;
  for (const Point& x : data.points()) {
    std::uint64_t squared = 0;
    for (Residue c : x.coords()) squared += std::uint64_t{c} * c;
    total.add_sqrt(squared);
  }
  return total;
}

}  // namespace doems
