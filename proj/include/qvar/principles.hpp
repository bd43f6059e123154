#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qvar/model.hpp"
#include "qvar/order.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

/// (E1) F(x,x) = 0, (E2) F(x,z) <= F(x,y) + F(y,z), (E4) inf_y F(x0,y) > -inf.
ValidationReport audit_equilibrium(const Bivariate& F, PointIndex x0);

/// ε > 0 (optional) and ξ: members → (0,∞), increasing for the pointwise order.
struct ScalingSpec {
  std::optional<Rational> epsilon;
  std::vector<Rational> xi;
};

/// z ≤ x0 with S_f(z) = {z}, found by Brezis–Browder descent from x0.
/// Preconditions (checked): T1 gauge, f proper, x0 in dom f.
Certificate ekeland_point(const FQuasiGauge& gauge, const Objective& f, PointIndex x0);

/// Ekeland point for the rescaled gauge {ε ξ(d) d}, plus d(z,x0) <= 1/ξ(d).
/// Without ε, ε = f(x0) - inf f; when that is zero any positive ε is
/// admissible and ε = 1 is used, which returns x0.
Certificate ekeland_scaled(const FQuasiGauge& gauge, const Objective& f, PointIndex x0, const ScalingSpec& spec);

/// The gauge used by ekeland_scaled for the given (resolved) ε.
FQuasiGauge scaled_gauge(const FQuasiGauge& gauge, const Rational& epsilon, const std::vector<Rational>& xi);
/// Throws InvalidArgument unless ξ is positive and increasing.
void check_scaling(const FQuasiGauge& gauge, const std::vector<Rational>& xi);

/// Weak: ∀x ∃y ∈ F(x) ∩ S_φ(x). Strong: ∀x, F(x) ⊆ S_φ(x). Throws
/// HypothesisViolation naming the first failing x.
void audit_caristi(const FQuasiGauge& gauge, const Objective& phi, const SetValuedMap& F, CaristiVariant variant);
/// z ∈ F(z) (weak) or F(z) = {z} (strong), at the Ekeland point of φ from
/// `start` (default: first point of dom φ).
Certificate caristi_fixed_point(const FQuasiGauge& gauge, const Objective& phi, const SetValuedMap& F,
                                CaristiVariant variant, std::optional<PointIndex> start = std::nullopt);

/// ∀x with f(x) > inf f: S_f(x)∖{x} ≠ ∅.
void audit_takahashi(const FQuasiGauge& gauge, const Objective& f);
/// z with f(z) = inf f(X), via the strong Caristi form with F = S_f.
Certificate takahashi_minimize(const FQuasiGauge& gauge, const Objective& f,
                               std::optional<PointIndex> start = std::nullopt);

/// ∀x with f(x) > inf f ∃x' != x: f(x') + γ d(x',x) <= f(x) for all d.
void audit_arutyunov(const FQuasiGauge& gauge, const Objective& f, const Rational& gamma);
/// x̄ with f(x̄) = inf f and d(x̄,x0) <= (f(x0) - inf f)/γ, via ekeland_scaled.
Certificate arutyunov_minimize(const FQuasiGauge& gauge, const Objective& f, const Rational& gamma, PointIndex x0);

/// z ∈ S(x0) with F(z,x) + d_x(x,z) > 0 for every x != z, via the Ekeland
/// point of F(x0, ·).
Certificate oettli_thera(const FQuasiGauge& gauge, const Bivariate& F, PointIndex x0);

enum class Direction { kEkToCar, kNotEkToNotCar, kEkToTak, kNotEkToNotTak, kEkOT };
const char* to_string(Direction d);
Direction parse_direction(const std::string& text);

struct EquivalenceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EquivalenceReport {
  Direction direction = Direction::kEkOT;
  bool applicable = false;
  std::vector<EquivalenceCheck> checks;
  /// The constructed selector for the negative directions.
  PointList selector;
  std::string verdict;

  bool confirmed() const;
};

struct EquivalenceOptions {
  std::optional<PointIndex> start;
  /// Selectors are enumerated exhaustively up to this many, sampled beyond.
  std::size_t exhaustive_limit = 4096;
  std::size_t samples = 256;
  std::uint64_t seed = 1;
};

/// Points z with ∀x != z ∃d: φ(z) < φ(x) + d(x,z) (weak Ekeland form).
PointList weak_ekeland_points(const FQuasiGauge& gauge, const Objective& phi);

/// Materialises the construction used by one direction of the equivalence
/// between the Ekeland, Caristi, Takahashi and Oettli–Théra forms on a
/// concrete instance, and checks it exhaustively.
EquivalenceReport equivalence_witness(Direction direction, const FQuasiGauge& gauge, const Objective& phi,
                                      const EquivalenceOptions& options = {});

}  // namespace qvar
