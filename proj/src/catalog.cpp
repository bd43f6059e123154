#include "qvar/catalog.hpp"

#include <algorithm>

#include "qvar/error.hpp"

namespace qvar::catalog {

Rational CatalogDistance::operator()(const Rational& x, const Rational& y) const {
  for (const auto& e : exceptions)
    if (e.x == x && e.y == y) return e.value;
  if (x == y) return Rational(0);
  return x < y ? below(x, y) : above(x, y);
}

Rational Polynomial::operator()(const Rational& v) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& c, const Rational& e) const {
  // Horner in polynomial arithmetic: acc = acc·(c + e t) + a_k.
  std::vector<Rational> acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * c;
      next[i + 1] += acc[i] * e;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial{std::move(acc)};
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coeffs.size(), other.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
  for (std::size_t i = 0; i < other.coeffs.size(); ++i) out[i] -= other.coeffs[i];
  return Polynomial{std::move(out)};
}

std::optional<std::size_t> Polynomial::first_nonzero(std::size_t from) const {
  for (std::size_t i = from; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) return i;
  return std::nullopt;
}

bool Piece::contains(const Rational& v) const {
  if (lo && (lo_closed ? v < *lo : v <= *lo)) return false;
  if (hi && (hi_closed ? v > *hi : v >= *hi)) return false;
  return true;
}

ExtendedRational CatalogFunction::operator()(const Rational& x) const {
  for (const auto& p : pieces) {
    if (!p.contains(x)) continue;
    switch (p.kind) {
      case Piece::Kind::kInfinite:
        return ExtendedRational::infinity();
      case Piece::Kind::kAbsolute:
        return ExtendedRational(Rational(abs(p.poly(x))));
      case Piece::Kind::kPolynomial:
        return ExtendedRational(p.poly(x));
    }
  }
  throw InvalidArgument("function '" + id + "' is undefined at " + to_string(x));
}

Germ CatalogFunction::along(const Rational& c, const Rational& e) const {
  if (sgn(e) == 0) {
    const auto v = (*this)(c);
    if (v.is_infinite()) return Germ{true, {}};
    return Germ{false, Polynomial{{v.value()}}};
  }
  // The piece holding c + e·t for all small t > 0.
  const bool from_right = sgn(e) > 0;
  for (const auto& p : pieces) {
    const bool lo_ok = !p.lo || (from_right ? *p.lo <= c : *p.lo < c);
    const bool hi_ok = !p.hi || (from_right ? *p.hi > c : *p.hi >= c);
    if (!lo_ok || !hi_ok) continue;
    if (p.kind == Piece::Kind::kInfinite) return Germ{true, {}};
    auto series = p.poly.compose_affine(c, e);
    if (p.kind == Piece::Kind::kAbsolute) {
      if (auto k = series.first_nonzero(); k && sgn(series.coeffs[*k]) < 0) {
        for (auto& a : series.coeffs) a = -a;
      }
    }
    return Germ{false, std::move(series)};
  }
  throw InvalidArgument("function '" + id + "' has no piece covering the tail at " + to_string(c));
}

bool CatalogFunction::certified(std::string_view statement) const {
  return std::find(certificates.begin(), certificates.end(), statement) != certificates.end();
}

const AffineSequence& CatalogEntry::sequence(std::string_view seq_id) const {
  for (const auto& s : sequences)
    if (s.id == seq_id) return s;
  throw InvalidArgument("catalog entry '" + id + "' has no sequence '" + std::string(seq_id) + "'");
}

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial{std::vector<Rational>(c)}; }

std::vector<CatalogDistance> make_distances() {
  std::vector<CatalogDistance> out;
  out.push_back(CatalogDistance{
      "q4",
      "q4(x,y) = y-x if x <= y; 1+y-x if x > y and (x,y) != (1,0); 1 if (x,y) = (1,0)",
      {q(0), q(-1), q(1)},
      {q(1), q(-1), q(1)},
      {{q(1), q(0), q(1)}},
      "T1 quasi-metric on [0,1]: triangle inequality by case split on the order of x,y,z; "
      "q4(x,y) > 0 for x != y"});
  out.push_back(CatalogDistance{"du",
                                "d_u(x,y) = (y-x)+",
                                {q(0), q(-1), q(1)},
                                {q(0), q(0), q(0)},
                                {},
                                "quasi-metric on Q induced by the asymmetric seminorm u(a) = a+; "
                                "T0, not T1"});
  out.push_back(CatalogDistance{"abs",
                                "|x-y|",
                                {q(0), q(-1), q(1)},
                                {q(0), q(1), q(-1)},
                                {},
                                "metric on Q"});
  return out;
}

Piece piece(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed,
            Polynomial p, Piece::Kind kind = Piece::Kind::kPolynomial) {
  Piece out;
  out.lo = std::move(lo);
  out.hi = std::move(hi);
  out.lo_closed = lo_closed;
  out.hi_closed = hi_closed;
  out.poly = std::move(p);
  out.kind = kind;
  return out;
}

const AffineSequence kInvN{"inv-n", q(0), q(1)};
const AffineSequence kNegInvN{"neg-inv-n", q(0), q(-1)};
const AffineSequence kOneMinusInvN{"one-minus-inv-n", q(1), q(-1)};

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;
  const Interval unit{q(0), q(1)};
  const Interval line{};

  {
    CatalogEntry e;
    e.id = "q4-grid";
    e.description = "([0,1] ∩ Q, q4): a T1 quasi-metric space where x_n = 1/n has the two limits 0 and 1";
    e.distance = "q4";
    e.domain = unit;
    e.limits = {q(0), q(1, 2), q(1)};
    e.sequences = {kInvN, kOneMinusInvN};
    CatalogFunction f;
    f.id = "identity";
    f.formula = "f(x) = x";
    f.pieces = {piece(std::nullopt, true, std::nullopt, true, poly({q(0), q(1)}))};
    f.certificates = {"not-strict-decreasingly-lsc"};
    e.objective = f;
    e.certificates = {"T1", "quasi-metric"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "du-line";
    e.description = "(Q, d_u) with d_u(x,y) = (y-x)+";
    e.distance = "du";
    e.domain = line;
    e.limits = {q(-1), q(0), q(1)};
    e.sequences = {kInvN, kNegInvN};
    e.certificates = {"T0", "quasi-metric"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "example-a-phi";
    e.description = "phi(x) = x for x >= 0, -1 for x < 0 on (Q, |.|)";
    e.distance = "abs";
    e.domain = line;
    e.limits = {q(0)};
    e.sequences = {kNegInvN, kInvN};
    CatalogFunction f;
    f.id = "phi";
    f.formula = "phi(x) = x (x >= 0), -1 (x < 0)";
    f.pieces = {piece(q(0), true, std::nullopt, true, poly({q(0), q(1)})),
                piece(std::nullopt, true, q(0), false, poly({q(-1)}))};
    f.certificates = {"strict-decreasingly-lsc-at:0", "not-decreasingly-lsc-at:0"};
    e.objective = f;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "example-a-phi1";
    e.description = "phi1(x) = -x for x > 0, 1 for x <= 0 on (Q, |.|)";
    e.distance = "abs";
    e.domain = line;
    e.limits = {q(0)};
    e.sequences = {kNegInvN, kInvN};
    CatalogFunction f;
    f.id = "phi1";
    f.formula = "phi1(x) = -x (x > 0), 1 (x <= 0)";
    f.pieces = {piece(q(0), false, std::nullopt, true, poly({q(0), q(-1)})),
                piece(std::nullopt, true, q(0), true, poly({q(1)}))};
    f.certificates = {"decreasingly-lsc-at:0", "not-lsc-at:0"};
    e.objective = f;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "dirichlet";
    e.description = "phi = 0 on Q, 1 off Q, restricted to the rational points of (R, |.|)";
    e.distance = "abs";
    e.domain = line;
    e.limits = {q(0), q(1)};
    e.sequences = {kInvN, kNegInvN, kOneMinusInvN};
    CatalogFunction f;
    f.id = "dirichlet";
    f.formula = "phi(x) = 0 (x rational), 1 (x irrational); every catalog point is rational";
    f.pieces = {piece(std::nullopt, true, std::nullopt, true, poly({q(0)}))};
    f.certificates = {"strict-decreasingly-lsc"};
    e.objective = f;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gelman-halving";
    e.description = "([0,1] ∩ Q, |.|), f(x) = x, successor x' = x/2";
    e.distance = "abs";
    e.domain = unit;
    e.limits = {q(0)};
    e.sequences = {kInvN};
    CatalogFunction f;
    f.id = "identity";
    f.formula = "f(x) = x";
    f.pieces = {piece(std::nullopt, true, std::nullopt, true, poly({q(0), q(1)}))};
    f.certificates = {"condition-a"};
    e.objective = f;
    e.rule = AffineRule{q(0), q(1, 2)};
    e.lambda = q(1);
    e.mu = q(1, 2);
    e.start = q(1);
    e.iteration_limit = q(0);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "closed-graph-residual";
    e.description = "f(x) = |h(x) - g(x)| on A = [0,1] ∩ Q, +inf off A; h(x) = x, g(x) = x^2";
    e.distance = "abs";
    e.domain = line;
    e.limits = {q(0), q(1)};
    e.sequences = {kInvN, kOneMinusInvN};
    e.h = poly({q(0), q(1)});
    e.g = poly({q(0), q(0), q(1)});
    e.residual_domain = unit;
    e.objective = closed_graph_residual(*e.h, *e.g, unit);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogDistance>& distances() {
  static const std::vector<CatalogDistance> kDistances = make_distances();
  return kDistances;
}

const CatalogDistance& distance(std::string_view id) {
  for (const auto& d : distances())
    if (d.id == id) return d;
  throw InvalidArgument("unknown catalog distance '" + std::string(id) + "'");
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> kEntries = make_entries();
  return kEntries;
}

const CatalogEntry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw InvalidArgument("unknown catalog entry '" + std::string(id) + "'");
}

CatalogFunction closed_graph_residual(const Polynomial& h, const Polynomial& g, const Interval& domain) {
  CatalogFunction f;
  f.id = "residual";
  f.formula = "f(x) = |h(x) - g(x)| on A, +inf off A";
  if (domain.lo) f.pieces.push_back(piece(std::nullopt, true, domain.lo, false, {}, Piece::Kind::kInfinite));
  f.pieces.push_back(piece(domain.lo, true, domain.hi, true, h - g, Piece::Kind::kAbsolute));
  if (domain.hi) f.pieces.push_back(piece(domain.hi, false, std::nullopt, true, {}, Piece::Kind::kInfinite));
  // h continuous and g with closed graph on A.
  f.certificates = {"condition-a"};
  return f;
}

}  // namespace qvar::catalog
