#include "qvar/order.hpp"

#include "qvar/error.hpp"

namespace qvar {

bool Objective::proper() const {
  for (const auto& v : values_)
    if (v.is_finite()) return true;
  return false;
}

std::optional<Rational> Objective::infimum() const {
  std::optional<Rational> best;
  for (const auto& v : values_)
    if (v.is_finite() && (!best || v.value() < *best)) best = v.value();
  return best;
}

bool dominates(const FQuasiGauge& gauge, const Objective& phi, PointIndex x, PointIndex y) {
  const auto& fx = phi(x);
  if (fx.is_infinite()) return true;
  const auto& fy = phi(y);
  if (fy.is_infinite()) return false;
  for (const auto& d : gauge.members())
    if (fy.value() + d(y, x) > fx.value()) return false;
  return true;
}

PhiOrder::PhiOrder(const FQuasiGauge& gauge, const Objective& phi) : gauge_(&gauge), phi_(&phi) {
  if (phi.size() != gauge.points()) {
    throw InvalidArgument("objective '" + phi.name() + "' has " + std::to_string(phi.size()) +
                          " values for " + std::to_string(gauge.points()) + " points");
  }
}

PointList PhiOrder::lower_section(PointIndex x) const {
  PointList out;
  for (PointIndex y = 0; y < phi_->size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

SeparationClass separation_class(const FQuasiGauge& gauge) {
  SeparationClass out;
  const std::size_t n = gauge.points();
  auto all_zero = [&](PointIndex x, PointIndex y) {
    for (const auto& d : gauge.members())
      if (sgn(d(x, y)) != 0) return false;
    return true;
  };
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x == y || !all_zero(x, y)) continue;
      if (!out.t1_witness) out.t1_witness = {x, y};
      if (!out.t0_witness && all_zero(y, x)) out.t0_witness = {std::min(x, y), std::max(x, y)};
    }
  }
  out.value = !out.t1_witness ? Separation::kT1 : !out.t0_witness ? Separation::kT0 : Separation::kNeither;
  return out;
}

const char* to_string(Separation s) {
  switch (s) {
    case Separation::kT1:
      return "T1";
    case Separation::kT0:
      return "T0";
    case Separation::kNeither:
      return "neither";
  }
  return "neither";
}

void require_t1(const FQuasiGauge& gauge) {
  const auto sep = separation_class(gauge);
  if (!sep.t1()) {
    const auto [x, y] = *sep.t1_witness;
    throw HypothesisViolation("T1", {x, y}, "every gauge member vanishes on a pair of distinct points");
  }
}

void require_proper(const Objective& phi, std::size_t points) {
  if (phi.size() != points) throw InvalidArgument("objective '" + phi.name() + "' has the wrong size");
  if (!phi.proper()) throw HypothesisViolation("proper", {}, "objective '" + phi.name() + "' is +inf everywhere");
}

Descent minimal_element(const PhiOrder& order, PointIndex start) {
  const auto& phi = order.objective();
  require_t1(order.gauge());
  require_proper(phi, order.gauge().points());
  if (start >= phi.size()) throw InvalidArgument("start point out of range");
  if (!phi.in_domain(start)) throw HypothesisViolation("start in dom f", {start}, "objective is +inf at the start");

  Descent out{start, {}};
  for (;;) {
    std::optional<PointIndex> next;
    for (PointIndex y : order.lower_section(out.minimal)) {
      if (y == out.minimal) continue;
      if (!next || phi(y) < phi(*next)) next = y;
    }
    if (!next) return out;
    out.minimal = *next;
    out.trace.push_back(*next);
  }
}

}  // namespace qvar
