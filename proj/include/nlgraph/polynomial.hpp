#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlgraph {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients. Zero coefficients are never stored, so the zero polynomial
/// is the empty term map.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational& c);
  /// The coordinate function of variable `i` (0-based).
  static Polynomial variable(std::size_t arity, std::size_t i);
  static Polynomial monomial(Exponents exponents, const Rational& c = 1);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;

  /// Adds c * z^exponents, merging with an existing term.
  void add_term(const Exponents& exponents, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_same_arity(const Polynomial& o) const;

  std::size_t arity_;
  std::map<Exponents, Rational> terms_;
};

Polynomial pow(const Polynomial& f, unsigned n);

/// f(images[0], ..., images[d-1]); all images share one arity.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

/// Renders as a sum of "c*x1^a1*x2^a2" terms, lexicographically largest exponent first; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);
std::string to_string(const Rational& q);

}  // namespace nlgraph
