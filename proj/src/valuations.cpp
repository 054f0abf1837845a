#include "nlgraph/valuations.hpp"

#include <algorithm>
#include <set>

namespace nlgraph {

using Kind = ValuationError::Kind;

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedRational::infinity();
  return a.value() + b.value();
}

LexValue operator+(const LexValue& a, const LexValue& b) {
  if (a.is_infinite() || b.is_infinite()) return LexValue::infinity();
  if (a.value().size() != b.value().size()) throw ValuationError(Kind::kArityMismatch, "lex tuples differ in length");
  LexTuple out(a.value().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.value()[i] + b.value()[i];
  return out;
}

Weights::Weights(std::vector<Rational> beta) : beta_(std::move(beta)) {
  for (const auto& b : beta_) {
    if (b < 0) throw ValuationError(Kind::kPrecondition, "weights must be nonnegative");
  }
}

IteratedOrderSpec::IteratedOrderSpec(std::size_t arity, std::vector<std::size_t> stages)
    : arity_(arity), stages_(std::move(stages)) {
  std::set<std::size_t> seen;
  for (auto i : stages_) {
    if (i >= arity_) throw ValuationError(Kind::kBadIndex, "stage variable out of range");
    if (!seen.insert(i).second) throw ValuationError(Kind::kPrecondition, "stage variables must be distinct");
  }
}

Order ord_var(const Polynomial& f, std::size_t i) {
  if (i >= f.arity()) throw ValuationError(Kind::kBadIndex, "variable index out of range");
  if (f.is_zero()) return Order::infinity();
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : f.terms()) best = std::min<std::uint64_t>(best, e[i]);
  return best;
}

ExtendedRational eval_monomial(const Weights& beta, const Polynomial& f) {
  if (beta.arity() != f.arity()) throw ValuationError(Kind::kArityMismatch, "weights and polynomial differ in arity");
  if (f.is_zero()) return ExtendedRational::infinity();
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) s += beta[i] * e[i];
    }
    if (!best || s < *best) best = s;
  }
  return *best;
}

std::vector<Polynomial> maximal_ideal(std::size_t arity) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back(Polynomial::variable(arity, i));
  return out;
}

ExtendedRational value_on_ideal(const Weights& beta, std::span<const Polynomial> gens) {
  if (gens.empty()) throw ValuationError(Kind::kEmptyIdeal, "empty generator list");
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& g : gens) best = std::min(best, eval_monomial(beta, g));
  return best;
}

LexValue value_on_ideal(const IteratedOrderSpec& spec, std::span<const Polynomial> gens) {
  if (gens.empty()) throw ValuationError(Kind::kEmptyIdeal, "empty generator list");
  LexValue best = LexValue::infinity();
  for (const auto& g : gens) best = std::min(best, eval_iterated(spec, g));
  return best;
}

namespace {

Rational ideal_value_in_link(const Weights& beta, std::span<const Polynomial> gens) {
  const ExtendedRational v = value_on_ideal(beta, gens);
  if (v.is_infinite() || v.value() == 0) {
    throw ValuationError(Kind::kNotInLink, "not in L(A,m): ideal value must lie strictly between 0 and +infinity");
  }
  return v.value();
}

}  // namespace

Weights normalize(const Weights& beta, std::span<const Polynomial> gens) {
  const Rational v = ideal_value_in_link(beta, gens);
  std::vector<Rational> out = beta.values();
  for (auto& b : out) b /= v;
  return Weights(std::move(out));
}

LexValue eval_iterated(const IteratedOrderSpec& spec, const Polynomial& f) {
  if (spec.arity() != f.arity()) throw ValuationError(Kind::kArityMismatch, "spec and polynomial differ in arity");
  if (f.is_zero()) return LexValue::infinity();
  LexTuple out;
  Polynomial cur = f;
  for (std::size_t var : spec.stages()) {
    const std::uint64_t a = ord_var(cur, var).value();
    out.push_back(static_cast<std::int64_t>(a));
    // Divide by x_var^a, then keep only the terms free of x_var.
    Polynomial next(cur.arity());
    for (const auto& [e, c] : cur.terms()) {
      if (e[var] == a) {
        Exponents shifted = e;
        shifted[var] = 0;
        next.add_term(shifted, c);
      }
    }
    cur = std::move(next);
  }
  return out;
}

ExtendedRational pi_of_monomial(const Weights& beta, const Polynomial& f, std::span<const Polynomial> gens) {
  const Rational v = ideal_value_in_link(beta, gens);
  const ExtendedRational x = eval_monomial(beta, f);
  if (x.is_infinite()) return x;
  return x.value() / v;
}

Order pi_of_iterated(const IteratedOrderSpec& spec, const Polynomial& f) {
  if (!spec.covers_all_variables()) {
    throw ValuationError(Kind::kCenterNotMaximal, "center not maximal: spec must cover every variable");
  }
  const LexValue v = eval_iterated(spec, f);
  if (v.is_infinite()) return Order::infinity();
  const LexTuple& t = v.value();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] != 0) return Order::infinity();
  }
  return t.empty() ? std::uint64_t{0} : static_cast<std::uint64_t>(t.back());
}

std::pair<Rational, Rational> skeleton_weights(const Integer& b1, const Integer& b2, const Rational& t) {
  if (b1 <= 0 || b2 <= 0) throw ValuationError(Kind::kPrecondition, "multiplicities must be positive");
  if (t < 0 || t > 1) throw ValuationError(Kind::kOutOfRange, "t must lie in [0, 1]");
  return {t / Rational(b1), (1 - t) / Rational(b2)};
}

Rational retract_to_skeleton(const Integer& b1, const Integer& b2, const Rational& s1, const Rational& s2) {
  if (b1 <= 0 || b2 <= 0) throw ValuationError(Kind::kPrecondition, "multiplicities must be positive");
  if (s1 < 0 || s2 < 0) throw ValuationError(Kind::kPrecondition, "values must be nonnegative");
  if (Rational(b1) * s1 + Rational(b2) * s2 != 1) {
    throw ValuationError(Kind::kPrecondition, "normalization violated: b1*s1 + b2*s2 must equal 1");
  }
  return Rational(b1) * s1;
}

MonomialComparison compare_monomial(const Weights& a, const Weights& b) {
  if (a.arity() != b.arity()) throw ValuationError(Kind::kArityMismatch, "weights differ in arity");
  MonomialComparison out{MonomialOrder::kEqual, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] < b[i] && !out.smaller_at) out.smaller_at = i;
    if (a[i] > b[i] && !out.larger_at) out.larger_at = i;
  }
  if (out.smaller_at && out.larger_at) {
    out.order = MonomialOrder::kIncomparable;
  } else if (out.smaller_at) {
    out.order = MonomialOrder::kLessEqual;
  } else if (out.larger_at) {
    out.order = MonomialOrder::kGreaterEqual;
  }
  return out;
}

}  // namespace nlgraph
