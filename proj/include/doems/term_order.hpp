#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doems/gf.hpp"

namespace doems {

// A monomial order: lex or grevlex under a variable priority, or a strictly
// positive weight vector refined by lex.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, weight };

  // priority lists variable indices (0-based), most significant first.
  static TermOrder lex(std::vector<std::size_t> priority);
  static TermOrder grevlex(std::vector<std::size_t> priority);
  static TermOrder weighted(std::vector<std::int64_t> weights, std::vector<std::size_t> tie_break);
  // lex with x1 > x2 > ... > xn.
  static TermOrder standard_lex(std::size_t n);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return priority_.size(); }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<std::size_t> priority, std::vector<std::int64_t> weights);

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::vector<std::int64_t> weights_;
};

// "lex:x1>x2", "grevlex:x2>x1", "w:3,1|lex:x1>x2"
std::string to_string(const TermOrder& order);
TermOrder parse_term_order(std::string_view text, std::size_t n);

// Every permutation of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t n);

}  // namespace doems
