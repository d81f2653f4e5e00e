#include "doems/gf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "doems/errors.hpp"
#include "text_util.hpp"

namespace doems {

bool is_prime(unsigned value) {
  if (value < 2) return false;
  for (unsigned d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(unsigned p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("field modulus " + std::to_string(p) + " is not prime");
  if (p > 251) throw InvalidArgument("field modulus " + std::to_string(p) + " exceeds 251");
}

Residue FieldSpec::reduce(long long value) const noexcept {
  const long long r = value % static_cast<long long>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

Residue FieldSpec::inverse(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no multiplicative inverse");
  // a^(p-2) by Fermat.
  return pow(a, p_ - 2);
}

Residue FieldSpec::pow(Residue base, unsigned exponent) const noexcept {
  unsigned result = 1 % p_;
  unsigned b = base % p_;
  while (exponent > 0) {
    if (exponent & 1u) result = (result * b) % p_;
    b = (b * b) % p_;
    exponent >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue field_inverse(Residue a, const FieldSpec& field) { return field.inverse(a); }

bool Point::precedes_or_equals(const Point& other) const {
  if (dim() != other.dim()) throw InvalidArgument("point dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

std::string to_string(const Point& point) {
  std::string out;
  out.reserve(point.dim());
  for (Residue c : point.coords()) {
    if (c > 9) throw InvalidArgument("digit-string point encoding needs p <= 10");
    out.push_back(static_cast<char>('0' + c));
  }
  return out;
}

Point parse_point(std::string_view text, const FieldSpec& field, std::size_t n) {
  text = detail::trim(text);
  if (text.size() != n) {
    throw ParseError("point '" + std::string(text) + "' does not have " + std::to_string(n) +
                     " coordinates");
  }
  std::vector<Residue> coords;
  coords.reserve(n);
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) ||
        static_cast<unsigned>(ch - '0') >= field.p()) {
      throw ParseError("point '" + std::string(text) + "' has a coordinate outside Z_" +
                       std::to_string(field.p()));
    }
    coords.push_back(static_cast<Residue>(ch - '0'));
  }
  return Point(std::move(coords));
}

Monomial Monomial::variable(std::size_t n, std::size_t index, unsigned power) {
  std::vector<unsigned> exps(n, 0);
  exps.at(index) = power;
  return Monomial(std::move(exps));
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (dim() != other.dim()) throw InvalidArgument("monomial dimension mismatch");
  std::vector<unsigned> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!monomial_divides(divisor, *this)) throw InvalidArgument("monomial does not divide");
  std::vector<unsigned> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= divisor.exps_[i];
  return Monomial(std::move(exps));
}

bool monomial_divides(const Monomial& divisor, const Monomial& multiple) {
  if (divisor.dim() != multiple.dim()) throw InvalidArgument("monomial dimension mismatch");
  for (std::size_t i = 0; i < divisor.dim(); ++i) {
    if (divisor[i] > multiple[i]) return false;
  }
  return true;
}

Residue eval_monomial(const Point& x, const Monomial& mono, const FieldSpec& field) {
  if (x.dim() != mono.dim()) throw InvalidArgument("point/monomial dimension mismatch");
  Residue value = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    value = field.mul(value, field.pow(x[i], mono[i]));
  }
  return value;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a <=> b;
}

bool basis_order_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return b < a;
}

std::string to_string(const Monomial& mono) {
  if (mono.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < mono.dim(); ++i) {
    if (mono[i] == 0) continue;
    out += 'x';
    out += std::to_string(i + 1);
    if (mono[i] > 1) {
      out += '^';
      out += std::to_string(mono[i]);
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  const std::string_view original = detail::trim(text);
  text = original;
  auto fail = [&](const std::string& why) {
    return ParseError("monomial '" + std::string(original) + "': " + why);
  };
  if (text.empty()) throw fail("empty");
  std::vector<unsigned> exps(n, 0);
  if (text == "1") return Monomial(std::move(exps));
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*' && pos > 0) ++pos;
    if (pos >= text.size() || text[pos] != 'x') throw fail("expected a variable x<i>");
    ++pos;
    const std::size_t index = detail::read_uint(text, pos);
    if (index == 0 || index > n) throw fail("variable index out of range 1.." + std::to_string(n));
    unsigned power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = static_cast<unsigned>(detail::read_uint(text, pos));
    }
    exps[index - 1] += power;
  }
  return Monomial(std::move(exps));
}

Polynomial Polynomial::monomial(FieldSpec field, const Monomial& mono, Residue coeff) {
  Polynomial poly(field, mono.dim());
  poly.add_term(mono, coeff);
  return poly;
}

Residue Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Residue{0} : it->second;
}

void Polynomial::add_term(const Monomial& mono, Residue coeff) {
  if (mono.dim() != n_) throw InvalidArgument("polynomial/monomial dimension mismatch");
  coeff = static_cast<Residue>(coeff % field_.p());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second = field_.add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.field_ != field_ || other.n_ != n_) throw InvalidArgument("polynomial ring mismatch");
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.field_ != field_ || other.n_ != n_) throw InvalidArgument("polynomial ring mismatch");
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, field_.neg(coeff));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out(*this);
  out -= other;
  return out;
}

Polynomial Polynomial::scaled(Residue factor) const {
  Polynomial out(field_, n_);
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, field_.mul(coeff, factor));
  return out;
}

Polynomial Polynomial::times(const Monomial& mono, Residue coeff) const {
  Polynomial out(field_, n_);
  for (const auto& [m, c] : terms_) out.add_term(m * mono, field_.mul(c, coeff));
  return out;
}

Residue Polynomial::evaluate(const Point& x) const {
  Residue value = 0;
  for (const auto& [mono, coeff] : terms_) {
    value = field_.add(value, field_.mul(coeff, eval_monomial(x, mono, field_)));
  }
  return value;
}

namespace {

std::string format_term(const Monomial& mono, Residue coeff) {
  if (mono.is_one()) return std::to_string(coeff);
  return (coeff == 1 ? std::string() : std::to_string(coeff)) + to_string(mono);
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace

std::string to_string(const Polynomial& poly) {
  std::vector<std::pair<Monomial, Residue>> terms(poly.terms().begin(), poly.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_compare(a.first, b.first) > 0; });
  std::vector<std::string> parts;
  for (const auto& [mono, coeff] : terms) parts.push_back(format_term(mono, coeff));
  return join_terms(parts);
}

std::string to_string(const Polynomial& poly, const Monomial& leading) {
  std::vector<std::pair<Monomial, Residue>> terms;
  for (const auto& term : poly.terms()) {
    if (term.first != leading) terms.push_back(term);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_compare(a.first, b.first) > 0; });
  std::vector<std::string> parts;
  if (Residue lc = poly.coefficient(leading); lc != 0) parts.push_back(format_term(leading, lc));
  for (const auto& [mono, coeff] : terms) parts.push_back(format_term(mono, coeff));
  return join_terms(parts);
}

Polynomial parse_polynomial(std::string_view text, const FieldSpec& field, std::size_t n) {
  const std::string compact = detail::strip_spaces(text);
  if (compact.empty()) throw ParseError("empty polynomial");
  Polynomial poly(field, n);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("polynomial '" + compact + "': expected '+' or '-'");
    }
    const std::size_t end = compact.find_first_of("+-", pos);
    std::string_view term = std::string_view(compact).substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? compact.size() : end;
    if (term.empty()) throw ParseError("polynomial '" + compact + "': empty term");

    long long coeff = 1;
    std::size_t cursor = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      coeff = static_cast<long long>(detail::read_uint(term, cursor));
      if (cursor < term.size() && term[cursor] == '*') ++cursor;
    }
    const std::string_view rest = term.substr(cursor);
    const Monomial mono = rest.empty() ? Monomial::one(n) : parse_monomial(rest, n);
    poly.add_term(mono, field.reduce(negative ? -coeff : coeff));
  }
  return poly;
}

}  // namespace doems
