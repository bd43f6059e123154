#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvar/rational.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

/// f: X → Q ∪ {+inf} on a finite point set.
class Objective {
 public:
  Objective() = default;
  Objective(std::string name, std::vector<ExtendedRational> values)
      : name_(std::move(name)), values_(std::move(values)) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return values_.size(); }
  const ExtendedRational& operator()(PointIndex x) const { return values_.at(x); }
  const std::vector<ExtendedRational>& values() const noexcept { return values_; }

  bool in_domain(PointIndex x) const { return values_.at(x).is_finite(); }
  /// At least one finite value.
  bool proper() const;
  /// inf f(X) over a finite set; nullopt when f is not proper.
  std::optional<Rational> infimum() const;

  friend bool operator==(const Objective&, const Objective&) = default;

 private:
  std::string name_;
  std::vector<ExtendedRational> values_;
};

/// φ(y) + d(y,x) <= φ(x) for every gauge member d. +inf on the right always
/// holds; +inf on the left holds only against +inf.
bool dominates(const FQuasiGauge& gauge, const Objective& phi, PointIndex x, PointIndex y);

/// The relation induced by φ and a gauge: leq(x, y) holds iff
/// φ(y) + d(y,x) <= φ(x) for all d, i.e. y lies in the lower section of x.
class PhiOrder {
 public:
  /// Throws InvalidArgument if the objective and gauge sizes differ.
  PhiOrder(const FQuasiGauge& gauge, const Objective& phi);

  bool leq(PointIndex x, PointIndex y) const { return dominates(*gauge_, *phi_, x, y); }
  /// S_φ(x) = {y : leq(x, y)}, ascending.
  PointList lower_section(PointIndex x) const;

  const FQuasiGauge& gauge() const noexcept { return *gauge_; }
  const Objective& objective() const noexcept { return *phi_; }

 private:
  const FQuasiGauge* gauge_;
  const Objective* phi_;
};

enum class Separation { kT1, kT0, kNeither };

struct SeparationClass {
  Separation value = Separation::kNeither;
  /// First pair (x,y), x != y, with d(x,y) = 0 for all d (T1 failure).
  std::optional<std::pair<PointIndex, PointIndex>> t1_witness;
  /// First pair indistinguishable in both directions (T0 failure).
  std::optional<std::pair<PointIndex, PointIndex>> t0_witness;

  bool t1() const noexcept { return value == Separation::kT1; }
  bool t0() const noexcept { return value != Separation::kNeither; }
};

SeparationClass separation_class(const FQuasiGauge& gauge);
const char* to_string(Separation s);

struct Descent {
  PointIndex minimal;
  /// Points visited after the start, in order; empty if the start is minimal.
  PointList trace;
};

/// Brezis–Browder descent: repeatedly move to the point of S_φ(x)∖{x} with the
/// smallest φ (ties by index) until S_φ(x) = {x}. Requires a T1 gauge, a
/// proper φ and a start in dom φ; throws HypothesisViolation otherwise.
Descent minimal_element(const PhiOrder& order, PointIndex start);

/// Throws HypothesisViolation unless the gauge is T1.
void require_t1(const FQuasiGauge& gauge);
/// Throws HypothesisViolation unless φ is proper and sized to the gauge.
void require_proper(const Objective& phi, std::size_t points);

}  // namespace qvar
