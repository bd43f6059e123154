#include "qvar/iteration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qvar/error.hpp"
#include "qvar/random.hpp"
#include "qvar/topology.hpp"

namespace qvar {

EtaSpec EtaSpec::linear(Rational mu) {
  EtaSpec e;
  e.kind_ = Kind::kLinear;
  e.mu_ = std::move(mu);
  e.check();
  return e;
}

EtaSpec EtaSpec::piecewise(std::vector<std::pair<Rational, Rational>> points, Rational tail_slope) {
  EtaSpec e;
  e.kind_ = Kind::kPiecewiseLinear;
  e.points_ = std::move(points);
  e.tail_ = std::move(tail_slope);
  e.check();
  return e;
}

void EtaSpec::check() {
  audit_.clear();
  if (kind_ == Kind::kLinear) {
    if (sgn(mu_) <= 0 || mu_ >= 1) throw InvalidArgument("linear eta needs 0 < mu < 1, got " + qvar::to_string(mu_));
    audit_.push_back("eta(t) = " + qvar::to_string(mu_) + "t < t for t > 0 since mu < 1");
    audit_.push_back("eta(a) >= a means (mu - 1)a >= 0, so a = 0");
    return;
  }
  if (points_.empty() || sgn(points_.front().first) != 0 || sgn(points_.front().second) != 0) {
    throw InvalidArgument("piecewise eta must start at (0, 0)");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& [t, v] = points_[i];
    if (t <= points_[i - 1].first) throw InvalidArgument("eta breakpoints must be strictly increasing");
    if (sgn(v) < 0) throw InvalidArgument("eta must be nonnegative; eta(" + qvar::to_string(t) + ") < 0");
    if (v >= t) throw InvalidArgument("eta(t) < t fails at t = " + qvar::to_string(t));
  }
  if (sgn(tail_) < 0) throw InvalidArgument("eta tail slope must be nonnegative");
  // Past the last breakpoint η(t) - t has slope tail - 1 and starts below 0,
  // or at 0 when the last breakpoint is the origin.
  if (points_.size() == 1 ? tail_ >= 1 : tail_ > 1) {
    throw InvalidArgument("eta tail slope " + qvar::to_string(tail_) + " lets eta(t) reach t");
  }
  audit_.push_back("eta(t) - t is affine between breakpoints and negative at every breakpoint t > 0");
  audit_.push_back("tail slope " + qvar::to_string(tail_) + " keeps eta(t) < t past the last breakpoint");
  audit_.push_back("eta(a) >= a only at a = 0");
}

EtaSpec EtaSpec::parse(const std::string& text) {
  if (text.rfind("linear:", 0) == 0) return linear(parse_rational(text.substr(7)));
  if (text.rfind("pwl:", 0) == 0) {
    const std::string body = text.substr(4);
    const auto semi = body.find(";tail=");
    if (semi == std::string::npos) throw InvalidArgument("pwl eta needs ';tail=<slope>'");
    std::vector<std::pair<Rational, Rational>> pts;
    std::stringstream ss(body.substr(0, semi));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("pwl breakpoint '" + item + "' is not t=v");
      pts.emplace_back(parse_rational(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
    }
    return piecewise(std::move(pts), parse_rational(body.substr(semi + 6)));
  }
  throw InvalidArgument("eta must be linear:<mu> or pwl:<points>;tail=<slope>");
}

Rational EtaSpec::operator()(const Rational& t) const {
  if (sgn(t) < 0) throw InvalidArgument("eta is defined on t >= 0");
  if (kind_ == Kind::kLinear) return mu_ * t;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& [t0, v0] = points_[i - 1];
    const auto& [t1, v1] = points_[i];
    if (t <= t1) return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
  }
  const auto& [tl, vl] = points_.back();
  return vl + tail_ * (t - tl);
}

std::vector<Rational> EtaSpec::kinks() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points_.size(); ++i) out.push_back(points_[i].first);
  return out;
}

std::string EtaSpec::to_string() const {
  if (kind_ == Kind::kLinear) return "linear:" + qvar::to_string(mu_);
  std::string s = "pwl:";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    s += (i ? "," : "") + qvar::to_string(points_[i].first) + "=" + qvar::to_string(points_[i].second);
  }
  return s + ";tail=" + qvar::to_string(tail_);
}

bool IterationResult::ok() const {
  auto all = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.holds(); }); };
  return nonincreasing && all(telescoped) && all(limit_bounds) && all(gelman_bounds);
}

namespace {

constexpr std::size_t kTelescopeExhaustive = 256;

// Telescoped bounds over all pairs of a run, or a seeded sample of 256 pairs
// when there are more.
template <typename Dist>
void telescope(IterationResult& r, std::size_t length, std::size_t members, Dist&& dist) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t total = length * (length - 1) / 2;
  if (total <= kTelescopeExhaustive) {
    for (std::size_t n = 0; n < length; ++n)
      for (std::size_t m = n + 1; m < length; ++m) pairs.emplace_back(n, m);
  } else {
    r.telescoped_sampled = true;
    Rng rng(1);
    while (pairs.size() < kTelescopeExhaustive) {
      std::size_t a = rng.below(length), b = rng.below(length);
      if (a == b) continue;
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }
  for (const auto& [n, m] : pairs)
    for (std::size_t i = 0; i < members; ++i) {
      r.telescoped.push_back({n, m - n, i, r.gamma * dist(i, m, n), r.values[n] - r.values[m]});
    }
}

void monotonicity(IterationResult& r) {
  for (std::size_t k = 1; k < r.values.size(); ++k) {
    if (r.values[k] > r.values[k - 1]) r.nonincreasing = false;
    if (!(r.values[k] < r.values[k - 1])) r.strictly_decreasing = false;
  }
}

// Distances d(x̄, x_k) against f(x_k)/γ for every k and member.
template <typename Dist>
void limit_bounds(IterationResult& r, std::size_t members, Dist&& dist_to_limit) {
  for (std::size_t k = 0; k < r.values.size(); ++k)
    for (std::size_t i = 0; i < members; ++i) r.limit_bounds.push_back({k, i, dist_to_limit(i, k), r.values[k] / r.gamma});
}

void check_gamma(const Rational& gamma) {
  if (sgn(gamma) <= 0) throw InvalidArgument("gamma must be positive");
}

}  // namespace

IterationResult eta_iterate(const FQuasiGauge& gauge, const Objective& f, const Rational& gamma, const EtaSpec& eta,
                            const SuccessorTable& rule, PointIndex x0, std::size_t cap) {
  check_gamma(gamma);
  require_t1(gauge);
  require_proper(f, gauge.points());
  const std::size_t n = f.size();
  if (rule.size() != n) throw InvalidArgument("successor table needs one entry per point");
  if (x0 >= n) throw InvalidArgument("start point out of range");
  if (!f.in_domain(x0)) throw HypothesisViolation("start in dom f", {x0}, "f(x0) = +inf");
  for (PointIndex x = 0; x < n; ++x)
    if (f.in_domain(x) && sgn(f(x).value()) < 0) throw HypothesisViolation("nonnegative", {x}, "f(x) < 0");

  IterationResult r;
  r.gamma = gamma;
  r.eta = eta.to_string();
  for (PointIndex x = 0; x < n; ++x) {
    if (!f.in_domain(x) || sgn(f(x).value()) == 0) continue;
    if (!rule[x]) throw HypothesisViolation("successor", {x}, "no successor where 0 < f(x) < inf");
    const PointIndex y = *rule[x];
    if (y >= n) throw InvalidArgument("successor out of range");
    for (std::size_t i = 0; i < gauge.size(); ++i) {
      if (f(y) + gamma * ExtendedRational(gauge.member(i)(y, x)) > f(x)) {
        throw HypothesisViolation("descent", {x, y}, "f(x') + gamma d(x',x) > f(x) for '" + gauge.member(i).name() + "'");
      }
    }
    if (f(y) > ExtendedRational(eta(f(x).value()))) throw HypothesisViolation("eta", {x, y}, "f(x') > eta(f(x))");
  }
  r.audit.push_back("successor audited at every x with 0 < f(x) < inf");
  r.audit.push_back("condition (a) holds: a finite T1 space is discrete");

  PointIndex cur = x0;
  r.points.push_back(cur);
  r.values.push_back(f(cur).value());
  while (sgn(r.values.back()) > 0 && r.steps < cap) {
    cur = *rule[cur];
    r.points.push_back(cur);
    r.values.push_back(f(cur).value());
    ++r.steps;
  }
  r.terminated = sgn(r.values.back()) == 0;
  monotonicity(r);
  telescope(r, r.points.size(), gauge.size(),
            [&](std::size_t i, std::size_t a, std::size_t b) { return gauge.member(i)(r.points[a], r.points[b]); });
  if (r.terminated) {
    const PointIndex bar = r.points.back();
    r.limit = std::to_string(bar);
    limit_bounds(r, gauge.size(), [&](std::size_t i, std::size_t k) { return gauge.member(i)(bar, r.points[k]); });
  }
  return r;
}

namespace {

using catalog::CatalogEntry;
using catalog::CatalogFunction;
using catalog::Piece;

using Residual = std::function<std::optional<Rational>(const Rational&)>;
using Include = std::function<bool(const Rational&)>;

// Checks residual(x) <= 0 for every x in the bounded interval with include(x),
// assuming both are determined by affine pieces between the breakpoints. Each
// breakpoint is checked directly; each open segment is sampled at three
// points, confirmed affine, and its closure checked at the endpoints.
void audit_piecewise_affine(const catalog::Interval& domain, std::vector<Rational> breaks, const Include& include,
                            const Residual& residual, const std::string& name) {
  if (!domain.lo || !domain.hi) throw InvalidArgument("the symbolic rule audit needs a bounded domain");
  const Rational lo = *domain.lo, hi = *domain.hi;
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::erase_if(breaks, [&](const Rational& b) { return b < lo || b > hi; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto fail = [&](const Rational& x, const std::string& where) {
    throw HypothesisViolation(name, {}, "fails " + where + " x = " + to_string(x));
  };
  for (const auto& b : breaks) {
    if (!include(b)) continue;
    const auto v = residual(b);
    if (!v || sgn(*v) > 0) fail(b, "at");
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational& a = breaks[i];
    const Rational& b = breaks[i + 1];
    const Rational m1 = a + (b - a) / 4, m2 = a + (b - a) / 2, m3 = a + 3 * (b - a) / 4;
    if (!include(m2)) continue;
    const auto r1 = residual(m1), r2 = residual(m2), r3 = residual(m3);
    if (!r1 || !r2 || !r3) fail(m2, "inside the segment containing");
    const Rational slope = (*r2 - *r1) / (m2 - m1);
    if ((*r3 - *r1) / (m3 - m1) != slope) {
      throw InvalidArgument("rule audit '" + name + "' needs affine pieces; not affine near " + to_string(m2));
    }
    if (sgn(Rational(*r1 + (a - m1) * slope)) > 0) fail(a, "as the segment approaches");
    if (sgn(Rational(*r1 + (b - m1) * slope)) > 0) fail(b, "as the segment approaches");
  }
}

// Points where the objective, the rule or η change form.
std::vector<Rational> rule_breakpoints(const CatalogEntry& entry, const EtaSpec* eta) {
  const auto& f = *entry.objective;
  const auto& rule = *entry.rule;
  std::vector<Rational> f_breaks;
  for (const auto& p : f.pieces) {
    if (p.lo) f_breaks.push_back(*p.lo);
    if (p.hi) f_breaks.push_back(*p.hi);
    if (p.kind != Piece::Kind::kInfinite && p.poly.coeffs.size() == 2 && sgn(p.poly.coeffs[1]) != 0) {
      f_breaks.push_back(-p.poly.coeffs[0] / p.poly.coeffs[1]);
      if (eta)
        for (const auto& t : eta->kinks()) {
          f_breaks.push_back((t - p.poly.coeffs[0]) / p.poly.coeffs[1]);
          if (p.kind == Piece::Kind::kAbsolute) f_breaks.push_back((-t - p.poly.coeffs[0]) / p.poly.coeffs[1]);
        }
    }
  }
  std::vector<Rational> out = f_breaks;
  if (sgn(rule.factor) != 0) {
    for (const auto& b : f_breaks) out.push_back((b - rule.offset) / rule.factor);
  }
  if (rule.factor != 1) out.push_back(rule.offset / (1 - rule.factor));
  for (const auto& ex : catalog::distance(entry.distance).exceptions) out.push_back(ex.y);
  return out;
}

struct CatalogRuleView {
  const CatalogEntry& entry;
  const CatalogFunction& f;
  const catalog::CatalogDistance& d;
  const catalog::AffineRule& rule;

  explicit CatalogRuleView(const CatalogEntry& e)
      : entry(e), f(require_objective(e)), d(catalog::distance(e.distance)), rule(require_rule(e)) {}

  static const CatalogFunction& require_objective(const CatalogEntry& e) {
    if (!e.objective) throw InvalidArgument("catalog entry '" + e.id + "' has no objective");
    return *e.objective;
  }
  static const catalog::AffineRule& require_rule(const CatalogEntry& e) {
    if (!e.rule) throw InvalidArgument("catalog entry '" + e.id + "' has no successor rule");
    return *e.rule;
  }

  bool positive(const Rational& x) const {
    const auto v = f(x);
    return v.is_finite() && sgn(v.value()) > 0;
  }
  std::optional<Rational> value(const Rational& x) const {
    const auto v = f(x);
    if (v.is_infinite()) return std::nullopt;
    return v.value();
  }

  void audit_domain_and_sign(std::vector<std::string>& audit) const {
    const auto& dom = entry.domain;
    if (!dom.lo || !dom.hi) throw InvalidArgument("the symbolic rule audit needs a bounded domain");
    if (!dom.contains(rule(*dom.lo)) || !dom.contains(rule(*dom.hi))) {
      throw HypothesisViolation("successor", {}, "the rule leaves the domain");
    }
    audit_piecewise_affine(
        dom, rule_breakpoints(entry, nullptr), [&](const Rational& x) { return f(x).is_finite(); },
        [&](const Rational& x) { return std::optional<Rational>(-f(x).value()); }, "nonnegative");
    audit.push_back("rule maps " + describe_domain() + " into itself; f >= 0 on its domain");
  }

  std::string describe_domain() const { return "[" + to_string(*entry.domain.lo) + "," + to_string(*entry.domain.hi) + "]"; }
};

IterationResult catalog_run(const CatalogRuleView& view, const Rational& gamma, const EtaSpec& eta,
                            std::optional<Rational> start, std::size_t cap, std::vector<std::string> audit) {
  const auto& entry = view.entry;
  if (!start) start = entry.start;
  if (!start) throw InvalidArgument("catalog entry '" + entry.id + "' has no start; pass one");
  if (!entry.domain.contains(*start)) throw InvalidArgument("start lies outside the catalog domain");
  if (!view.value(*start)) throw HypothesisViolation("start in dom f", {}, "f(x0) = +inf");

  IterationResult r;
  r.gamma = gamma;
  r.eta = eta.to_string();
  r.audit = std::move(audit);
  Rational cur = *start;
  r.positions.push_back(cur);
  r.values.push_back(*view.value(cur));
  while (sgn(r.values.back()) > 0 && r.steps < cap) {
    cur = view.rule(cur);
    const auto v = view.value(cur);
    if (!v) throw std::logic_error("audited rule produced a point outside dom f");
    r.positions.push_back(cur);
    r.values.push_back(*v);
    ++r.steps;
  }
  r.terminated = sgn(r.values.back()) == 0;
  monotonicity(r);
  telescope(r, r.positions.size(), 1,
            [&](std::size_t, std::size_t a, std::size_t b) { return view.d(r.positions[a], r.positions[b]); });
  std::optional<Rational> bar;
  if (r.terminated) {
    bar = r.positions.back();
  } else if (entry.iteration_limit) {
    bar = *entry.iteration_limit;
    const auto fv = view.f(*bar);
    if (fv != ExtendedRational(0)) throw std::logic_error("declared iteration limit has f != 0");
    r.audit.push_back("declared limit " + to_string(*bar) + " has f = 0");
  }
  if (bar) {
    r.limit = to_string(*bar);
    limit_bounds(r, 1, [&](std::size_t, std::size_t k) { return view.d(*bar, r.positions[k]); });
  }
  return r;
}

void require_condition_a(const CatalogFunction& f) {
  if (!f.certified("condition-a")) {
    throw HypothesisViolation("condition-a", {}, "objective '" + f.id + "' has no condition (a) certificate");
  }
}

}  // namespace

IterationResult eta_iterate(const catalog::CatalogEntry& entry, const Rational& gamma, const EtaSpec& eta,
                            std::optional<Rational> start, std::size_t cap) {
  check_gamma(gamma);
  const CatalogRuleView view(entry);
  require_condition_a(view.f);
  std::vector<std::string> audit;
  view.audit_domain_and_sign(audit);
  const auto breaks = rule_breakpoints(entry, &eta);
  const Include positive = [&](const Rational& x) { return view.positive(x); };
  audit_piecewise_affine(
      entry.domain, breaks, positive,
      [&](const Rational& x) -> std::optional<Rational> {
        const Rational y = view.rule(x);
        const auto fy = view.value(y);
        if (!fy) return std::nullopt;
        return *fy + gamma * view.d(y, x) - *view.value(x);
      },
      "descent");
  audit_piecewise_affine(
      entry.domain, breaks, positive,
      [&](const Rational& x) -> std::optional<Rational> {
        const auto fy = view.value(view.rule(x));
        if (!fy) return std::nullopt;
        return *fy - eta(*view.value(x));
      },
      "eta");
  audit.push_back("f(x') + " + to_string(gamma) + " d(x',x) <= f(x) and f(x') <= eta(f(x)) on " +
                  view.describe_domain() + " where f > 0");
  audit.push_back("condition (a) certified for '" + view.f.id + "'");
  return catalog_run(view, gamma, eta, start, cap, std::move(audit));
}

namespace {

void check_gelman(const Rational& lambda, const Rational& mu) {
  if (sgn(lambda) <= 0) throw InvalidArgument("lambda must be positive");
  if (sgn(mu) <= 0 || mu >= 1) throw InvalidArgument("mu must lie in (0,1), got " + to_string(mu));
}

void gelman_bounds(IterationResult& r, const Rational& lambda, const Rational& mu, std::size_t members,
                   const std::function<Rational(std::size_t)>& dist_to_start) {
  if (!r.limit) return;
  const Rational bound = lambda * r.values.front() / (1 - mu);
  for (std::size_t i = 0; i < members; ++i) r.gelman_bounds.push_back({0, i, dist_to_start(i), bound});
}

}  // namespace

IterationResult gelman_reduce(const FQuasiGauge& gauge, const Objective& f, const Rational& lambda,
                              const Rational& mu, const SuccessorTable& rule, PointIndex x0, std::size_t cap) {
  check_gelman(lambda, mu);
  if (rule.size() != f.size()) throw InvalidArgument("successor table needs one entry per point");
  const Rational gamma = (1 - mu) / lambda;
  std::size_t pairs = 0;
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (!f.in_domain(x) || sgn(f(x).value()) <= 0 || !rule[x] || *rule[x] >= f.size()) continue;
    const PointIndex y = *rule[x];
    if (!f.in_domain(y)) throw HypothesisViolation("gelman-mu", {x, y}, "f(x') = +inf");
    const Rational fx = f(x).value(), fy = f(y).value();
    if (fy > mu * fx) throw HypothesisViolation("gelman-mu", {x, y}, "f(x') > mu f(x)");
    for (std::size_t i = 0; i < gauge.size(); ++i) {
      const Rational& d = gauge.member(i)(y, x);
      if (d > lambda * fx) throw HypothesisViolation("gelman-lambda", {x, y}, "d(x',x) > lambda f(x)");
      // (1-μ)·(d - λ fx) + λ·(fy - μ fx) = λ·(fy + γ d - fx), so both audited
      // inequalities give the γ-form.
      if ((1 - mu) * (d - lambda * fx) + lambda * (fy - mu * fx) != lambda * (fy + gamma * d - fx)) {
        throw std::logic_error("gelman reduction identity failed");
      }
    }
    ++pairs;
  }
  auto r = eta_iterate(gauge, f, gamma, EtaSpec::linear(mu), rule, x0, cap);
  r.audit.insert(r.audit.begin(), "(lambda, mu) = (" + to_string(lambda) + ", " + to_string(mu) + ") audited on " +
                                      std::to_string(pairs) + " pairs; gamma = (1-mu)/lambda = " + to_string(gamma));
  const PointIndex bar = r.points.back();
  gelman_bounds(r, lambda, mu, gauge.size(), [&](std::size_t i) { return gauge.member(i)(bar, x0); });
  return r;
}

IterationResult gelman_reduce(const catalog::CatalogEntry& entry, std::size_t cap) {
  if (!entry.lambda || !entry.mu) throw InvalidArgument("catalog entry '" + entry.id + "' has no (lambda, mu) data");
  const Rational lambda = *entry.lambda, mu = *entry.mu;
  check_gelman(lambda, mu);
  const CatalogRuleView view(entry);
  std::vector<std::string> audit;
  view.audit_domain_and_sign(audit);
  const auto breaks = rule_breakpoints(entry, nullptr);
  const Include positive = [&](const Rational& x) { return view.positive(x); };
  audit_piecewise_affine(
      entry.domain, breaks, positive,
      [&](const Rational& x) -> std::optional<Rational> { return view.d(view.rule(x), x) - lambda * *view.value(x); },
      "gelman-lambda");
  audit_piecewise_affine(
      entry.domain, breaks, positive,
      [&](const Rational& x) -> std::optional<Rational> {
        const auto fy = view.value(view.rule(x));
        if (!fy) return std::nullopt;
        return *fy - mu * *view.value(x);
      },
      "gelman-mu");
  audit.push_back("d(x',x) <= " + to_string(lambda) + " f(x) and f(x') <= " + to_string(mu) + " f(x) on " +
                  view.describe_domain() + " where f > 0");
  auto r = eta_iterate(entry, (1 - mu) / lambda, EtaSpec::linear(mu), std::nullopt, cap);
  r.audit.insert(r.audit.begin(), audit.begin(), audit.end());
  if (r.limit) {
    const Rational bar = parse_rational(*r.limit);
    gelman_bounds(r, lambda, mu, 1, [&](std::size_t) { return view.d(bar, r.positions.front()); });
  }
  return r;
}

catalog::CatalogFunction residual_objective(const catalog::CatalogEntry& entry) {
  if (!entry.h || !entry.g || !entry.residual_domain) {
    throw InvalidArgument("catalog entry '" + entry.id + "' has no residual data");
  }
  return catalog::closed_graph_residual(*entry.h, *entry.g, *entry.residual_domain);
}

Objective residual_on_points(const catalog::CatalogFunction& f, const std::vector<Rational>& points, std::string name) {
  std::vector<ExtendedRational> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(f(p));
  return Objective(std::move(name), std::move(values));
}

std::vector<ResidualCheck> closed_graph_checks(const catalog::CatalogEntry& entry) {
  const auto f = residual_objective(entry);
  const auto space = CountableSpace::of(entry);
  std::vector<ResidualCheck> out;
  for (const auto& seq : entry.sequences)
    for (const auto& y : entry.limits) {
      ResidualCheck c;
      c.sequence = seq.id;
      c.limit = y;
      c.value_at_limit = f(y);
      c.converges = converges_to(space, seq, y).holds;
      const auto germ = f.along(seq.center, seq.coefficient);
      if (!germ.infinite) c.tail_limit = germ.limit();
      c.applicable = c.converges && c.tail_limit && sgn(*c.tail_limit) == 0;
      if (c.applicable) c.holds = c.value_at_limit == ExtendedRational(0);
      out.push_back(c);
    }
  return out;
}

}  // namespace qvar
