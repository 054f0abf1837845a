#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nlgraph/error.hpp"
#include "nlgraph/polynomial.hpp"

namespace nlgraph {

/// A value of T or +infinity, which is larger than every finite value and
/// absorbs addition.
template <class T>
class Extended {
 public:
  Extended(T v) : value_(std::move(v)) {}  // NOLINT: implicit by intent
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  const T& value() const {
    if (!value_) throw ValuationError(ValuationError::Kind::kPrecondition, "value is +infinity");
    return *value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
  friend std::weak_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.is_infinite() && b.is_infinite()) return std::weak_ordering::equivalent;
    if (a.is_infinite()) return std::weak_ordering::greater;
    if (b.is_infinite()) return std::weak_ordering::less;
    if (*a.value_ < *b.value_) return std::weak_ordering::less;
    if (*b.value_ < *a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  Extended() = default;
  std::optional<T> value_;
};

using ExtendedRational = Extended<Rational>;
using Order = Extended<std::uint64_t>;

/// Tuple of integers compared lexicographically.
using LexTuple = std::vector<std::int64_t>;
using LexValue = Extended<LexTuple>;

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
LexValue operator+(const LexValue& a, const LexValue& b);

/// Nonnegative rational weights, one per variable.
class Weights {
 public:
  /// Throws ValuationError if some weight is negative.
  explicit Weights(std::vector<Rational> beta);

  std::size_t arity() const { return beta_.size(); }
  const std::vector<Rational>& values() const { return beta_; }
  const Rational& operator[](std::size_t i) const { return beta_[i]; }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<Rational> beta_;
};

/// Ordered distinct variable indices; stage i takes the order along
/// variable stages[i], divides it out and sets that variable to zero.
class IteratedOrderSpec {
 public:
  /// Throws ValuationError on repeated or out-of-range indices.
  IteratedOrderSpec(std::size_t arity, std::vector<std::size_t> stages);

  std::size_t arity() const { return arity_; }
  const std::vector<std::size_t>& stages() const { return stages_; }
  bool covers_all_variables() const { return stages_.size() == arity_; }

 private:
  std::size_t arity_;
  std::vector<std::size_t> stages_;
};

/// Largest power of variable `i` dividing f; +infinity for f = 0.
Order ord_var(const Polynomial& f, std::size_t i);

/// min over the support of f of the weighted exponent sum.
ExtendedRational eval_monomial(const Weights& beta, const Polynomial& f);

/// Generators x1, ..., xd of the maximal ideal at the origin.
std::vector<Polynomial> maximal_ideal(std::size_t arity);

/// Minimum over a generating set; throws on an empty set.
ExtendedRational value_on_ideal(const Weights& beta, std::span<const Polynomial> gens);
LexValue value_on_ideal(const IteratedOrderSpec& spec, std::span<const Polynomial> gens);

/// Rescales beta so the ideal value becomes exactly 1. Throws
/// ValuationError(kNotInLink) when the ideal value is 0 or +infinity.
Weights normalize(const Weights& beta, std::span<const Polynomial> gens);

LexValue eval_iterated(const IteratedOrderSpec& spec, const Polynomial& f);

/// eval_monomial(beta, f) / value_on_ideal(beta, gens).
ExtendedRational pi_of_monomial(const Weights& beta, const Polynomial& f, std::span<const Polynomial> gens);

/// Image of an iterated valuation with maximal center: +infinity unless all
/// stages but the last vanish, otherwise the last stage's order. Throws
/// ValuationError(kCenterNotMaximal) unless the spec covers every variable.
Order pi_of_iterated(const IteratedOrderSpec& spec, const Polynomial& f);

/// The pair (t/b1, (1-t)/b2) on the segment b1*s1 + b2*s2 = 1.
std::pair<Rational, Rational> skeleton_weights(const Integer& b1, const Integer& b2, const Rational& t);

/// Parameter t of the segment point with coordinates (s1, s2). Requires
/// b1*s1 + b2*s2 = 1 exactly.
Rational retract_to_skeleton(const Integer& b1, const Integer& b2, const Rational& s1, const Rational& s2);

enum class MonomialOrder { kEqual, kLessEqual, kGreaterEqual, kIncomparable };

struct MonomialComparison {
  MonomialOrder order;
  /// For kIncomparable: a variable where the first weight is smaller and one
  /// where it is larger. The coordinate monomials witness both directions.
  std::optional<std::size_t> smaller_at;
  std::optional<std::size_t> larger_at;
};

MonomialComparison compare_monomial(const Weights& a, const Weights& b);

}  // namespace nlgraph
