#include "qvar/relation.hpp"

#include <algorithm>

#include "qvar/error.hpp"

namespace qvar {

Relation Relation::diagonal(std::size_t n) {
  Relation r(n);
  for (PointIndex x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

std::size_t Relation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool Relation::subset_of(const Relation& other) const {
  if (other.n_ != n_) throw InvalidArgument("relations over different point sets");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Relation Relation::intersect(const Relation& other) const {
  if (other.n_ != n_) throw InvalidArgument("relations over different point sets");
  Relation r(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && other.bits_[i];
  return r;
}

Relation entourage(const QuasiPseudometric& d, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw InvalidArgument("entourage threshold must be positive");
  Relation r(d.size());
  for (PointIndex x = 0; x < d.size(); ++x)
    for (PointIndex y = 0; y < d.size(); ++y)
      if (d(x, y) < epsilon) r.insert(x, y);
  return r;
}

Relation compose(const Relation& m, const Relation& n) {
  if (m.size() != n.size()) throw InvalidArgument("relations over different point sets");
  const std::size_t size = m.size();
  Relation r(size);
  for (PointIndex x = 0; x < size; ++x)
    for (PointIndex y = 0; y < size; ++y) {
      if (!m.contains(x, y)) continue;
      for (PointIndex z = 0; z < size; ++z)
        if (n.contains(y, z)) r.insert(x, z);
    }
  return r;
}

Relation invert(const Relation& r) {
  Relation out(r.size());
  for (PointIndex x = 0; x < r.size(); ++x)
    for (PointIndex y = 0; y < r.size(); ++y)
      if (r.contains(x, y)) out.insert(y, x);
  return out;
}

PointList section(const Relation& r, PointIndex x) {
  PointList out;
  for (PointIndex y = 0; y < r.size(); ++y)
    if (r.contains(x, y)) out.push_back(y);
  return out;
}

EntourageBasis gauge_basis(const FQuasiGauge& gauge) {
  Rational lo(1), hi(1);
  for (const auto& d : gauge.members()) {
    if (auto m = d.min_positive(); m && *m < lo) lo = *m;
    for (const auto& v : d.distinct_values())
      if (v > hi) hi = v;
  }
  // Smallest threshold at most lo/4, largest above hi.
  Rational eps(1);
  while (eps * 4 > lo) eps /= 2;
  EntourageBasis basis;
  for (; eps <= hi * 2; eps *= 2) {
    for (std::size_t i = 0; i < gauge.size(); ++i) basis.generators.push_back({i, eps});
  }
  return basis;
}

ValidationReport validate_basis(const EntourageBasis& basis, const FQuasiGauge& gauge) {
  ValidationReport report;
  std::vector<Relation> sets;
  sets.reserve(basis.generators.size());
  for (const auto& g : basis.generators) sets.push_back(entourage(gauge.member(g.member), g.epsilon));
  const auto diag = Relation::diagonal(gauge.points());

  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!diag.subset_of(sets[i])) {
      report.violations.push_back({"BQU1", {i}, "generator does not contain the diagonal"});
      break;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const bool halved = std::any_of(sets.begin(), sets.end(), [&](const Relation& c) {
      return compose(c, c).subset_of(sets[i]);
    });
    if (!halved) {
      report.violations.push_back({"BQU2", {i}, "no generator C with C∘C inside it"});
      break;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool ok = true;
    std::size_t bad = 0;
    for (std::size_t j = i + 1; j < sets.size() && ok; ++j) {
      const auto both = sets[i].intersect(sets[j]);
      ok = std::any_of(sets.begin(), sets.end(), [&](const Relation& b) { return b.subset_of(both); });
      bad = j;
    }
    if (!ok) {
      report.violations.push_back({"BQU3", {i, bad}, "intersection contains no generator"});
      break;
    }
  }
  return report;
}

bool gauge_compatibility(const QuasiPseudometric& d, const FQuasiGauge& gauge) {
  if (d.size() != gauge.points()) throw InvalidArgument("distance and gauge over different point sets");
  std::vector<Rational> thresholds;
  Rational top(0);
  for (const auto& v : d.distinct_values()) {
    if (sgn(v) > 0) thresholds.push_back(v);
    if (v > top) top = v;
  }
  thresholds.push_back(top + 1);

  // The smallest basic entourage of d0 is its zero set, reached at δ = min
  // positive value; a containment exists iff it exists for that δ.
  std::vector<Relation> smallest;
  for (const auto& d0 : gauge.members()) smallest.push_back(entourage(d0, d0.min_positive().value_or(Rational(1))));

  for (const auto& eps : thresholds) {
    const auto target = entourage(d, eps);
    const bool contained = std::any_of(smallest.begin(), smallest.end(),
                                       [&](const Relation& r) { return r.subset_of(target); });
    if (!contained) return false;
  }
  return true;
}

}  // namespace qvar
