#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvar/rational.hpp"

namespace qvar::catalog {

/// a + b·x + c·y
struct AffineForm {
  Rational constant{0}, x{0}, y{0};
  Rational operator()(const Rational& px, const Rational& py) const { return constant + x * px + y * py; }
};

/// A distance on Q that is affine on each of the half-planes x < y and x > y,
/// zero on the diagonal, with finitely many exceptional pairs. Covers q4, the
/// asymmetric seminorm distance (y-x)⁺ and |x-y|.
struct CatalogDistance {
  struct Exception {
    Rational x, y, value;
  };
  std::string id;
  std::string formula;
  AffineForm below;  // x < y
  AffineForm above;  // x > y
  std::vector<Exception> exceptions;
  /// Hand-checked statement of the axioms it satisfies, and on which domain.
  std::string certificate;

  Rational operator()(const Rational& x, const Rational& y) const;
};

/// Closed interval of Q; missing bounds are unbounded.
struct Interval {
  std::optional<Rational> lo, hi;
  bool contains(const Rational& v) const { return (!lo || v >= *lo) && (!hi || v <= *hi); }
};

/// Polynomial with rational coefficients, ascending powers.
struct Polynomial {
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& v) const;
  /// p(c + e·t) as a polynomial in t.
  Polynomial compose_affine(const Rational& c, const Rational& e) const;
  Polynomial operator-(const Polynomial& other) const;
  /// Index of the first nonzero coefficient at or after `from`.
  std::optional<std::size_t> first_nonzero(std::size_t from = 0) const;
};

/// One piece of a piecewise function. Bounds may be open or closed.
struct Piece {
  enum class Kind { kPolynomial, kAbsolute, kInfinite };
  std::optional<Rational> lo, hi;
  bool lo_closed = true, hi_closed = true;
  Kind kind = Kind::kPolynomial;
  Polynomial poly;

  bool contains(const Rational& v) const;
};

/// Eventual behaviour of g(t) along t = 1/n → 0+: either +inf on the tail
/// or a polynomial in t.
struct Germ {
  bool infinite = false;
  Polynomial series;

  Rational limit() const { return series.coeffs.empty() ? Rational(0) : series.coeffs[0]; }
};

/// Piecewise objective on Q ∪ {+inf}.
struct CatalogFunction {
  std::string id;
  std::string formula;
  std::vector<Piece> pieces;
  /// Whole-function classifications, each a hand-checked statement.
  std::vector<std::string> certificates;

  ExtendedRational operator()(const Rational& x) const;
  /// Germ of n ↦ f(c + e/n); throws InvalidArgument if no piece covers it.
  Germ along(const Rational& c, const Rational& e) const;
  bool certified(std::string_view statement) const;
};

/// x_n = center + coefficient/n for n >= 1.
struct AffineSequence {
  std::string id;
  Rational center{0}, coefficient{0};

  Rational term(std::size_t n) const { return center + coefficient / Rational(static_cast<long>(n)); }
};

/// x ↦ offset + factor·x.
struct AffineRule {
  Rational offset{0}, factor{1};
  Rational operator()(const Rational& x) const { return offset + factor * x; }
};

/// A named countable instance: X = domain ∩ Q with a catalog distance, a
/// few named limit points, and optional objective/rule data.
struct CatalogEntry {
  std::string id;
  std::string description;
  std::string distance;  // CatalogDistance id
  Interval domain;
  std::vector<Rational> limits;
  std::vector<AffineSequence> sequences;
  std::optional<CatalogFunction> objective;
  std::optional<AffineRule> rule;
  /// Gelman-type data: successor bounds d(x',x) <= λ f(x), f(x') <= μ f(x).
  std::optional<Rational> lambda, mu, start;
  /// Declared limit of the successor iteration.
  std::optional<Rational> iteration_limit;
  /// Residual construction data: f = |h - g| on `residual_domain`, +inf
  /// elsewhere.
  std::optional<Polynomial> h, g;
  std::optional<Interval> residual_domain;
  std::vector<std::string> certificates;

  const AffineSequence& sequence(std::string_view id) const;
};

const std::vector<CatalogDistance>& distances();
const CatalogDistance& distance(std::string_view id);
const std::vector<CatalogEntry>& entries();
const CatalogEntry& entry(std::string_view id);

/// Residual f(x) = d₂(h(x), g(x)) for x in `domain`, +inf elsewhere, with
/// d₂ = |·-·| on Q.
CatalogFunction closed_graph_residual(const Polynomial& h, const Polynomial& g, const Interval& domain);

}  // namespace qvar::catalog
