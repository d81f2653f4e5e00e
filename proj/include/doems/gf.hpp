#pragma once
// Prime-field arithmetic, points of Z_p^n, monomials and polynomials over Z_p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace doems {

using Residue = std::uint8_t;

bool is_prime(unsigned value);

// The prime field Z_p. Residues are stored in a byte, so p <= 251.
class FieldSpec {
 public:
  explicit FieldSpec(unsigned p);

  unsigned p() const noexcept { return p_; }

  Residue reduce(long long value) const noexcept;
  Residue add(Residue a, Residue b) const noexcept { return static_cast<Residue>((a + b) % p_); }
  Residue sub(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((a + p_ - b) % p_);
  }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((unsigned{a} * b) % p_);
  }
  Residue neg(Residue a) const noexcept { return static_cast<Residue>((p_ - a) % p_); }
  Residue inverse(Residue a) const;
  // 0^0 = 1.
  Residue pow(Residue base, unsigned exponent) const noexcept;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  unsigned p_;
};

Residue field_inverse(Residue a, const FieldSpec& field);

// A point of Z_p^n. Ordered lexicographically by coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Residue> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Residue> coords() const noexcept { return coords_; }

  // Coordinatewise <=.
  bool precedes_or_equals(const Point& other) const;

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<Residue> coords_;
};

// Digit string, one character per coordinate ("110"); requires p <= 10.
std::string to_string(const Point& point);
Point parse_point(std::string_view text, const FieldSpec& field, std::size_t n);

// Monic monomial x1^e1 ... xn^en. Exponents normally stay below p; corner
// monomials of a staircase may carry the exponent p itself.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t index, unsigned power = 1);

  std::size_t dim() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;
  // Requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;

  // Storage order: lexicographic on exponent vectors. Used for map keys only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

bool monomial_divides(const Monomial& divisor, const Monomial& multiple);
Residue eval_monomial(const Point& x, const Monomial& mono, const FieldSpec& field);

// Graded lex with x1 > x2 > ... > xn; total and multiplicative.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

// Listing order for model bases: total degree ascending, then exponent
// vectors descending ("1, x1, x2, x3, x1x2").
bool basis_order_less(const Monomial& a, const Monomial& b);

// "1", "x1", "x2^2", "x1x2".
std::string to_string(const Monomial& mono);
Monomial parse_monomial(std::string_view text, std::size_t n);

// Polynomial over Z_p; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Residue>;

  Polynomial() = default;
  explicit Polynomial(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  static Polynomial monomial(FieldSpec field, const Monomial& mono, Residue coeff = 1);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Residue coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, Residue coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial scaled(Residue factor) const;
  Polynomial times(const Monomial& mono, Residue coeff) const;

  Residue evaluate(const Point& x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  FieldSpec field_{2};
  std::size_t n_ = 0;
  Terms terms_;
};

// Terms in decreasing grlex order, "x1x2 + 2x2 + 1"; the zero polynomial is "0".
std::string to_string(const Polynomial& poly);
// Same, but with the marked leading monomial printed first.
std::string to_string(const Polynomial& poly, const Monomial& leading);
Polynomial parse_polynomial(std::string_view text, const FieldSpec& field, std::size_t n);

}  // namespace doems
