#include "nlgraph/polynomial.hpp"

#include <sstream>

#include "nlgraph/error.hpp"

namespace nlgraph {

using Kind = ValuationError::Kind;

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i) {
  if (i >= arity) throw ValuationError(Kind::kBadIndex, "variable index out of range");
  Exponents e(arity, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

std::size_t Polynomial::total_degree() const {
  std::size_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t s = 0;
    for (auto a : e) s += a;
    best = std::max(best, s);
  }
  return best;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != arity_) throw ValuationError(Kind::kArityMismatch, "term arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_arity(const Polynomial& o) const {
  if (o.arity_ != arity_) throw ValuationError(Kind::kArityMismatch, "polynomial arity mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_arity(o);
  Polynomial out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return *this = std::move(out);
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial pow(const Polynomial& f, unsigned n) {
  Polynomial out = Polynomial::constant(f.arity(), 1);
  Polynomial base = f;
  while (n) {
    if (n & 1u) out *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return out;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.arity()) throw ValuationError(Kind::kArityMismatch, "compose: wrong number of images");
  if (images.empty()) return f;
  const std::size_t arity = images.front().arity();
  Polynomial out(arity);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= pow(images[i], e[i]);
    }
    out += term;
  }
  return out;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace nlgraph
