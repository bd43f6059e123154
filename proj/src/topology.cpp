#include "qvar/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qvar/error.hpp"

namespace qvar {

std::vector<Rational> default_schedule() {
  std::vector<Rational> out;
  Rational eps(1);
  for (int k = 0; k <= 10; ++k, eps /= 2) out.push_back(eps);
  return out;
}

std::string Verdict::label() const {
  if (exact) return holds ? "true" : "false";
  return std::string(holds ? "consistent" : "inconsistent") + "-up-to-" + std::to_string(depth);
}

namespace {

// Turns per-index values v[i] (the largest gauge quantity tested at i) into
// schedule evidence: the first index from which every later value is < ε.
Verdict prefix_verdict(const std::vector<Rational>& values, std::size_t usable, std::size_t depth,
                       const std::vector<Rational>& schedule) {
  Verdict v;
  v.depth = depth;
  std::vector<Rational> suffix_max(values.size() + 1, Rational(0));
  for (std::size_t i = values.size(); i-- > 0;) suffix_max[i] = std::max(values[i], suffix_max[i + 1]);

  v.holds = true;
  for (const auto& eps : schedule) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < usable; ++i) {
      if (suffix_max[i] < eps) {
        first = i;
        break;
      }
    }
    if (!first) v.holds = false;
    v.schedule.push_back({eps, first});
  }
  for (std::size_t i = 0; i < usable; ++i) {
    if (sgn(suffix_max[i]) == 0) {
      v.zero_from = i;
      break;
    }
  }
  return v;
}

void check_prefix(const PointList& prefix, const FQuasiGauge& gauge) {
  if (prefix.empty()) throw InvalidArgument("sequence prefix must have at least one term");
  for (auto p : prefix)
    if (p >= gauge.points()) throw InvalidArgument("sequence term outside the instance");
}

Verdict prefix_cauchy(const PointList& prefix, const FQuasiGauge& gauge, const std::vector<Rational>& schedule,
                      bool right) {
  check_prefix(prefix, gauge);
  const std::size_t n = prefix.size();
  std::vector<Rational> worst(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& d : gauge.members()) {
        const Rational& v = right ? d(prefix[j], prefix[i]) : d(prefix[i], prefix[j]);
        if (v > worst[i]) worst[i] = v;
      }
  // The last index has no later term; evidence must rest on at least one pair.
  const std::size_t usable = n >= 2 ? n - 1 : 1;
  return prefix_verdict(worst, usable, n, schedule);
}

}  // namespace

Verdict converges_to(const PointList& prefix, PointIndex x, const FQuasiGauge& gauge,
                     const std::vector<Rational>& schedule) {
  check_prefix(prefix, gauge);
  if (x >= gauge.points()) throw InvalidArgument("limit candidate outside the instance");
  std::vector<Rational> worst(prefix.size(), Rational(0));
  for (std::size_t i = 0; i < prefix.size(); ++i)
    for (const auto& d : gauge.members())
      if (d(x, prefix[i]) > worst[i]) worst[i] = d(x, prefix[i]);
  return prefix_verdict(worst, prefix.size(), prefix.size(), schedule);
}

PointList limit_set(const PointList& prefix, const FQuasiGauge& gauge, const PointList& candidates,
                    const std::vector<Rational>& schedule) {
  PointList out;
  for (auto c : candidates)
    if (converges_to(prefix, c, gauge, schedule).holds) out.push_back(c);
  return out;
}

Verdict is_left_k_cauchy(const PointList& prefix, const FQuasiGauge& gauge, const std::vector<Rational>& schedule) {
  return prefix_cauchy(prefix, gauge, schedule, false);
}

Verdict is_right_k_cauchy(const PointList& prefix, const FQuasiGauge& gauge,
                          const std::vector<Rational>& schedule) {
  return prefix_cauchy(prefix, gauge, schedule, true);
}

Relation specialization_preorder(const FQuasiGauge& gauge) {
  Relation r(gauge.points());
  for (PointIndex s = 0; s < gauge.points(); ++s)
    for (PointIndex t = 0; t < gauge.points(); ++t) {
      bool zero = true;
      for (const auto& d : gauge.members()) zero = zero && sgn(d(s, t)) == 0;
      if (zero) r.insert(s, t);
    }
  return r;
}

CountableSpace CountableSpace::of(const catalog::CatalogEntry& entry) {
  return CountableSpace{&entry, {&catalog::distance(entry.distance)}};
}

namespace {

using catalog::AffineSequence;
using catalog::CatalogDistance;

Rational abs_q(const Rational& v) { return abs(v); }

// Largest n >= 1 with c + e/n == v, or 0.
std::size_t hits(const AffineSequence& seq, const Rational& v) {
  if (sgn(seq.coefficient) == 0 || v == seq.center) return 0;
  const Rational n = seq.coefficient / (v - seq.center);
  if (n.get_den() != 1 || sgn(n) <= 0) return 0;
  return n.get_num().get_ui();
}

void check_domain(const AffineSequence& seq, const catalog::Interval& domain) {
  if (!domain.contains(seq.term(1)) || !domain.contains(seq.center)) {
    throw InvalidArgument("sequence '" + seq.id + "' leaves the catalog domain");
  }
}

// Samples the closed form against direct evaluation; a mismatch means the
// catalog entry itself is wrong.
template <typename Eval>
void audit_tail(const TailForm& tail, Eval&& value_at, const std::string& what) {
  for (std::size_t n = tail.from; n < tail.from + 64; ++n) {
    const Rational v = value_at(n);
    if (abs_q(Rational(v - tail.limit)) * Rational(static_cast<long>(n)) > tail.slack) {
      throw std::logic_error("catalog closed form for " + what + " disagrees with direct evaluation at n = " +
                             std::to_string(n));
    }
  }
}

std::string describe(const TailForm& t, const std::string& quantity) {
  std::ostringstream os;
  os << quantity << " = " << to_string(t.limit) << " + r_n with |r_n| <= " << to_string(t.slack) << "/n for n >= "
     << t.from;
  return os.str();
}

// Increments d(x_a, x_b) along the sequence, for the pair orientation where
// the first argument is the later term (right) or the earlier term (left).
TailForm increment_tail(const CatalogDistance& d, const AffineSequence& seq, bool right) {
  TailForm t;
  const Rational& c = seq.center;
  const Rational& e = seq.coefficient;
  if (sgn(e) == 0) return t;
  // Later terms are closer to c: for e > 0 they are smaller.
  const bool first_smaller = (sgn(e) > 0) == right;
  const auto& form = first_smaller ? d.below : d.above;
  t.limit = form(c, c);
  t.slack = (abs_q(form.x) + abs_q(form.y)) * abs_q(e);
  for (const auto& ex : d.exceptions) t.from = std::max({t.from, hits(seq, ex.x) + 1, hits(seq, ex.y) + 1});
  return t;
}

Verdict cauchy(const CountableSpace& space, const AffineSequence& seq, bool right) {
  check_domain(seq, space.entry->domain);
  Verdict v;
  v.exact = true;
  v.holds = true;
  std::string cert;
  for (const auto* d : space.gauge) {
    const auto tail = increment_tail(*d, seq, right);
    // Sampled (n,k) audit of the increment bound.
    for (std::size_t n = tail.from; n < tail.from + 32; ++n)
      for (std::size_t k = 1; k <= 32; ++k) {
        const Rational value = right ? (*d)(seq.term(n + k), seq.term(n)) : (*d)(seq.term(n), seq.term(n + k));
        if (abs_q(Rational(value - tail.limit)) * Rational(static_cast<long>(n)) > tail.slack)
          throw std::logic_error("catalog increment bound disagrees with direct evaluation");
      }
    if (sgn(tail.limit) != 0) v.holds = false;
    if (!cert.empty()) cert += "; ";
    cert += describe(tail, right ? d->id + "(x_{n+k}, x_n)" : d->id + "(x_n, x_{n+k})") + " uniformly in k";
  }
  v.certificate = cert;
  return v;
}

}  // namespace

TailForm distance_tail(const CatalogDistance& d, const Rational& p, const AffineSequence& seq,
                       const catalog::Interval& domain) {
  if (!domain.contains(p)) throw InvalidArgument("point " + to_string(p) + " is outside the catalog domain");
  check_domain(seq, domain);
  const Rational& c = seq.center;
  const Rational& e = seq.coefficient;
  TailForm t;
  if (sgn(e) == 0) {
    t.limit = d(p, c);
    return t;
  }
  const bool term_above = p < c || (p == c && sgn(e) > 0);
  const auto& form = term_above ? d.below : d.above;
  t.limit = form(p, c);
  t.slack = abs_q(Rational(form.y * e));
  if (p != c) {
    const Rational gap = abs_q(Rational(p - c));
    const Rational ratio = abs_q(e) / gap;
    t.from = static_cast<std::size_t>(mpz_class(ratio.get_num() / ratio.get_den()).get_ui()) + 1;
  }
  for (const auto& ex : d.exceptions)
    if (ex.x == p) t.from = std::max(t.from, hits(seq, ex.y) + 1);
  return t;
}

Verdict converges_to(const CountableSpace& space, const AffineSequence& seq, const Rational& x) {
  Verdict v;
  v.exact = true;
  v.holds = true;
  std::string cert;
  for (const auto* d : space.gauge) {
    const auto tail = distance_tail(*d, x, seq, space.entry->domain);
    const std::string quantity = d->id + "(" + to_string(x) + ", x_n)";
    audit_tail(tail, [&](std::size_t n) { return (*d)(x, seq.term(n)); }, quantity);
    if (sgn(tail.limit) != 0) v.holds = false;
    if (!cert.empty()) cert += "; ";
    cert += describe(tail, quantity);
  }
  v.certificate = cert;
  return v;
}

std::vector<Rational> limit_set(const CountableSpace& space, const AffineSequence& seq,
                                const std::vector<Rational>& candidates) {
  std::vector<Rational> out;
  for (const auto& c : candidates)
    if (converges_to(space, seq, c).holds) out.push_back(c);
  return out;
}

Verdict is_left_k_cauchy(const CountableSpace& space, const AffineSequence& seq) { return cauchy(space, seq, false); }

Verdict is_right_k_cauchy(const CountableSpace& space, const AffineSequence& seq) { return cauchy(space, seq, true); }

ClassReport classify_semicontinuity(const CountableSpace& space, const catalog::CatalogFunction& f,
                                    const AffineSequence& seq, const Rational& y) {
  const auto conv = converges_to(space, seq, y);
  if (!conv.holds) {
    throw InvalidArgument("sequence '" + seq.id + "' does not converge to " + to_string(y));
  }
  const auto germ = f.along(seq.center, seq.coefficient);
  if (germ.infinite) {
    throw InvalidArgument("function '" + f.id + "' is +inf along the tail of '" + seq.id + "'");
  }
  ClassReport r;
  r.limit_point = y;
  r.converges = true;
  r.value_at_limit = f(y);
  r.limit_value = germ.limit();
  // f(x_n) = g(1/n): g increasing near 0 means f(x_n) decreasing in n.
  if (auto k = germ.series.first_nonzero(1)) {
    r.strictly_decreasing = sgn(germ.series.coeffs[*k]) > 0;
    r.nonincreasing = r.strictly_decreasing;
  } else {
    r.nonincreasing = true;
  }
  r.pairwise_distinct = sgn(seq.coefficient) != 0;
  r.inequality_holds = r.value_at_limit <= ExtendedRational(r.limit_value);
  r.lsc = r.inequality_holds;
  r.decreasingly_lsc = !r.nonincreasing || r.inequality_holds;
  r.strict_decreasingly_lsc = !r.strictly_decreasing || r.inequality_holds;
  r.nearly_lsc = !r.pairwise_distinct || r.inequality_holds;
  r.certificates = f.certificates;
  return r;
}

}  // namespace qvar
