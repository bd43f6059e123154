#include "qvar/spaces.hpp"

#include <algorithm>
#include <set>

#include "qvar/error.hpp"

namespace qvar {

PointSet::PointSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("point set must contain at least one point");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("point names must be nonempty");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate point name '" + n + "'");
  }
}

PointSet PointSet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return PointSet(std::move(names));
}

std::optional<PointIndex> PointSet::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - names_.begin());
}

PointIndex PointSet::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown point '" + name + "'");
}

QuasiPseudometric::QuasiPseudometric(std::string name, std::size_t n, std::vector<Rational> values)
    : name_(std::move(name)), n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw InvalidArgument("distance '" + name_ + "': expected " + std::to_string(n_ * n_) +
                          " entries, got " + std::to_string(values_.size()));
  }
  for (auto& v : values_) v.canonicalize();
}

QuasiPseudometric::QuasiPseudometric(std::string name, const std::vector<std::vector<Rational>>& rows)
    : name_(std::move(name)), n_(rows.size()) {
  values_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw InvalidArgument("distance '" + name_ + "': matrix is not square");
    }
    values_.insert(values_.end(), row.begin(), row.end());
  }
}

QuasiPseudometric QuasiPseudometric::zero(std::string name, std::size_t n) {
  return QuasiPseudometric(std::move(name), n, std::vector<Rational>(n * n, Rational(0)));
}

QuasiPseudometric QuasiPseudometric::discrete(std::string name, std::size_t n) {
  auto d = zero(std::move(name), n);
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      if (x != y) d.at(x, y) = 1;
  return d;
}

bool QuasiPseudometric::pointwise_leq(const QuasiPseudometric& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

std::vector<Rational> QuasiPseudometric::distinct_values() const {
  std::vector<Rational> out(values_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rational> QuasiPseudometric::min_positive() const {
  std::optional<Rational> best;
  for (const auto& v : values_)
    if (sgn(v) > 0 && (!best || v < *best)) best = v;
  return best;
}

QuasiPseudometric conjugate(const QuasiPseudometric& d) {
  auto out = d;
  for (PointIndex x = 0; x < d.size(); ++x)
    for (PointIndex y = 0; y < d.size(); ++y) out.at(x, y) = d(y, x);
  return out;
}

QuasiPseudometric symmetrize(const QuasiPseudometric& d) {
  auto out = d;
  for (PointIndex x = 0; x < d.size(); ++x)
    for (PointIndex y = 0; y < d.size(); ++y) out.at(x, y) = std::max(d(x, y), d(y, x));
  return out;
}

QuasiPseudometric scale(const QuasiPseudometric& d, const Rational& factor) {
  if (sgn(factor) <= 0) throw InvalidArgument("scale factor must be positive");
  auto out = d;
  for (PointIndex x = 0; x < d.size(); ++x)
    for (PointIndex y = 0; y < d.size(); ++y) out.at(x, y) = factor * d(x, y);
  return out;
}

FQuasiGauge::FQuasiGauge(std::vector<QuasiPseudometric> members, std::vector<std::size_t> relax,
                         bool symmetric)
    : members_(std::move(members)), relax_(std::move(relax)), symmetric_(symmetric) {
  if (members_.empty()) throw InvalidArgument("gauge must have at least one member");
  if (relax_.size() != members_.size()) throw InvalidArgument("relax map size does not match members");
  const std::size_t n = members_.front().size();
  std::set<std::string> names;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].size() != n) throw InvalidArgument("gauge members over different point sets");
    if (relax_[i] >= members_.size()) throw InvalidArgument("relax index out of range");
    if (!names.insert(members_[i].name()).second)
      throw InvalidArgument("duplicate gauge member '" + members_[i].name() + "'");
  }
}

FQuasiGauge FQuasiGauge::single(QuasiPseudometric d) {
  std::vector<QuasiPseudometric> m;
  m.push_back(std::move(d));
  return FQuasiGauge(std::move(m), {0});
}

std::optional<std::size_t> FQuasiGauge::find(const std::string& name) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].name() == name) return i;
  return std::nullopt;
}

FQuasiGauge conjugate_gauge(const FQuasiGauge& gauge) {
  std::vector<QuasiPseudometric> m;
  for (const auto& d : gauge.members()) m.push_back(conjugate(d));
  return FQuasiGauge(std::move(m), gauge.relax_map(), gauge.symmetric());
}

FQuasiGauge rescale_gauge(const FQuasiGauge& gauge, const std::vector<Rational>& factors) {
  if (factors.size() != gauge.size()) throw InvalidArgument("one factor per gauge member required");
  std::vector<QuasiPseudometric> m;
  for (std::size_t i = 0; i < gauge.size(); ++i) m.push_back(scale(gauge.member(i), factors[i]));
  return FQuasiGauge(std::move(m), gauge.relax_map(), gauge.symmetric());
}

bool ValidationReport::violates(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

namespace {

// First (x) with d(x,x) != 0, first (x,y) with d(x,y) < 0.
void check_diagonal_and_sign(const QuasiPseudometric& d, const std::string& diag_axiom,
                             const std::string& sign_axiom, ValidationReport& report) {
  const std::size_t n = d.size();
  for (PointIndex x = 0; x < n; ++x) {
    if (sgn(d(x, x)) != 0) {
      report.violations.push_back({diag_axiom, {x}, d.name() + "(x,x) = " + to_string(d(x, x))});
      break;
    }
  }
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (sgn(d(x, y)) < 0) {
        report.violations.push_back({sign_axiom, {x, y}, d.name() + "(x,y) = " + to_string(d(x, y))});
        return;
      }
    }
  }
}

// First triple with d(x,z) > w(x,y) + w(y,z).
std::optional<std::vector<PointIndex>> triangle_failure(const QuasiPseudometric& d,
                                                        const QuasiPseudometric& w) {
  const std::size_t n = d.size();
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      for (PointIndex z = 0; z < n; ++z)
        if (d(x, z) > w(x, y) + w(y, z)) return std::vector<PointIndex>{x, y, z};
  return std::nullopt;
}

}  // namespace

ValidationReport validate_quasi_pseudometric(const QuasiPseudometric& d, const PointSet& points,
                                             TriangleMode mode) {
  if (d.size() != points.size()) {
    throw InvalidArgument("distance '" + d.name() + "' has dimension " + std::to_string(d.size()) +
                          " but the point set has " + std::to_string(points.size()) + " points");
  }
  ValidationReport report;
  check_diagonal_and_sign(d, "QM1", "nonnegativity", report);
  if (mode == TriangleMode::kStrict) {
    if (auto t = triangle_failure(d, d)) {
      report.violations.push_back({"QM2", *t, "d(x,z) > d(x,y) + d(y,z)"});
    }
  }
  report.quasi_metric = true;
  for (PointIndex x = 0; x < d.size() && report.quasi_metric; ++x)
    for (PointIndex y = x + 1; y < d.size(); ++y)
      if (sgn(d(x, y)) == 0 && sgn(d(y, x)) == 0) {
        report.quasi_metric = false;
        break;
      }
  return report;
}

ValidationReport validate_f_quasi_gauge(const FQuasiGauge& gauge) {
  ValidationReport report;
  const std::size_t m = gauge.size();

  // (QF1) every pair has an upper bound among the members.
  for (std::size_t i = 0; i < m; ++i) {
    bool found_pair = false;
    for (std::size_t j = i + 1; j < m && !found_pair; ++j) {
      bool bounded = false;
      for (std::size_t k = 0; k < m && !bounded; ++k) {
        bounded = gauge.member(i).pointwise_leq(gauge.member(k)) &&
                  gauge.member(j).pointwise_leq(gauge.member(k));
      }
      if (!bounded) {
        report.violations.push_back({"QF1", {i, j},
                                     "members '" + gauge.member(i).name() + "' and '" +
                                         gauge.member(j).name() + "' have no upper bound"});
        found_pair = true;
      }
    }
    if (found_pair) break;
  }

  // (QF2)
  for (const auto& d : gauge.members()) {
    ValidationReport member_report;
    check_diagonal_and_sign(d, "QF2", "QF2", member_report);
    if (!member_report.valid()) {
      report.violations.push_back(member_report.violations.front());
      break;
    }
  }

  // (QF3) with the designated witness.
  for (std::size_t i = 0; i < m; ++i) {
    const auto& d = gauge.member(i);
    const auto& w = gauge.member(gauge.relax(i));
    if (!d.pointwise_leq(w)) {
      report.violations.push_back({"QF3", {}, "relax('" + d.name() + "') = '" + w.name() +
                                                  "' is not pointwise >= '" + d.name() + "'"});
      break;
    }
    if (auto t = triangle_failure(d, w)) {
      report.violations.push_back({"QF3", *t, "'" + d.name() + "'(x,z) > '" + w.name() +
                                                  "'(x,y) + '" + w.name() + "'(y,z)"});
      break;
    }
  }

  if (gauge.symmetric()) {
    for (const auto& d : gauge.members()) {
      std::optional<Violation> v;
      for (PointIndex x = 0; x < d.size() && !v; ++x)
        for (PointIndex y = x + 1; y < d.size() && !v; ++y)
          if (d(x, y) != d(y, x)) v = Violation{"QF4", {x, y}, "'" + d.name() + "' is not symmetric"};
      if (v) {
        report.violations.push_back(*v);
        break;
      }
    }
  }
  return report;
}

}  // namespace qvar
