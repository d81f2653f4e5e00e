#include "doems/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "doems/errors.hpp"
#include "text_util.hpp"

namespace doems {
namespace {

void check_permutation(const std::vector<std::size_t>& priority) {
  std::vector<std::size_t> sorted(priority);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidArgument("variable priority is not a permutation");
  }
}

std::strong_ordering lex_by(const std::vector<std::size_t>& priority, const Monomial& a,
                            const Monomial& b) {
  for (std::size_t v : priority) {
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> priority,
                     std::vector<std::int64_t> weights)
    : kind_(kind), priority_(std::move(priority)), weights_(std::move(weights)) {
  check_permutation(priority_);
  if (kind_ == Kind::weight) {
    if (weights_.size() != priority_.size()) throw InvalidArgument("weight vector length mismatch");
    for (std::int64_t w : weights_) {
      if (w < 1) throw InvalidArgument("weights must be positive integers");
    }
  }
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  return TermOrder(Kind::lex, std::move(priority), {});
}

TermOrder TermOrder::grevlex(std::vector<std::size_t> priority) {
  return TermOrder(Kind::grevlex, std::move(priority), {});
}

TermOrder TermOrder::weighted(std::vector<std::int64_t> weights,
                              std::vector<std::size_t> tie_break) {
  return TermOrder(Kind::weight, std::move(tie_break), std::move(weights));
}

TermOrder TermOrder::standard_lex(std::size_t n) {
  std::vector<std::size_t> priority(n);
  std::iota(priority.begin(), priority.end(), 0);
  return lex(std::move(priority));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw InvalidArgument("term order dimension mismatch");
  switch (kind_) {
    case Kind::lex:
      return lex_by(priority_, a, b);
    case Kind::grevlex: {
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        if (a[*it] != b[*it]) {
          return a[*it] < b[*it] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
      }
      return std::strong_ordering::equal;
    }
    case Kind::weight: {
      std::int64_t wa = 0;
      std::int64_t wb = 0;
      for (std::size_t i = 0; i < dim(); ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (auto c = wa <=> wb; c != 0) return c;
      return lex_by(priority_, a, b);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

std::string priority_string(const std::vector<std::size_t>& priority) {
  std::string out;
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (i) out += '>';
    out += "x" + std::to_string(priority[i] + 1);
  }
  return out;
}

std::vector<std::size_t> parse_priority(std::string_view text, std::size_t n) {
  std::vector<std::size_t> priority;
  for (std::string_view var : detail::split(text, '>')) {
    std::size_t pos = 0;
    if (var.empty() || var[0] != 'x') throw ParseError("expected x<i> in variable order");
    ++pos;
    const std::size_t idx = detail::read_uint(var, pos);
    if (pos != var.size() || idx == 0 || idx > n) {
      throw ParseError("bad variable '" + std::string(var) + "' in term order");
    }
    priority.push_back(idx - 1);
  }
  if (priority.size() != n) throw ParseError("term order must rank all " + std::to_string(n) +
                                             " variables");
  std::vector<std::size_t> sorted(priority);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParseError("term order repeats a variable");
  }
  return priority;
}

}  // namespace

std::string to_string(const TermOrder& order) {
  switch (order.kind()) {
    case TermOrder::Kind::lex: return "lex:" + priority_string(order.priority());
    case TermOrder::Kind::grevlex: return "grevlex:" + priority_string(order.priority());
    case TermOrder::Kind::weight: {
      std::string out = "w:";
      for (std::size_t i = 0; i < order.weights().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(order.weights()[i]);
      }
      return out + "|lex:" + priority_string(order.priority());
    }
  }
  return {};
}

TermOrder parse_term_order(std::string_view text, std::size_t n) {
  const std::string compact = detail::strip_spaces(text);
  const std::string_view s = compact;
  auto identity = [n] {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  if (s.starts_with("lex:")) return TermOrder::lex(parse_priority(s.substr(4), n));
  if (s == "lex") return TermOrder::lex(identity());
  if (s.starts_with("grevlex:")) return TermOrder::grevlex(parse_priority(s.substr(8), n));
  if (s == "grevlex") return TermOrder::grevlex(identity());
  if (s.starts_with("w:")) {
    const std::size_t bar = s.find('|');
    const std::string_view wpart = s.substr(2, bar == std::string_view::npos ? bar : bar - 2);
    std::vector<std::int64_t> weights;
    for (std::string_view w : detail::split(wpart, ',')) {
      std::size_t pos = 0;
      weights.push_back(static_cast<std::int64_t>(detail::read_uint(w, pos)));
      if (pos != w.size()) throw ParseError("bad weight '" + std::string(w) + "'");
    }
    if (weights.size() != n) throw ParseError("weight vector needs " + std::to_string(n) +
                                              " entries");
    if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w < 1; })) {
      throw ParseError("weights must be positive");
    }
    std::vector<std::size_t> tie = identity();
    if (bar != std::string_view::npos) {
      const std::string_view rest = s.substr(bar + 1);
      if (!rest.starts_with("lex:")) throw ParseError("weight order tie-break must be lex");
      tie = parse_priority(rest.substr(4), n);
    }
    return TermOrder::weighted(std::move(weights), std::move(tie));
  }
  throw ParseError("unknown term order '" + compact + "'");
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace doems
