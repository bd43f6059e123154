#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvar/catalog.hpp"
#include "qvar/order.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

/// η: [0,∞) → [0,∞), either μt or a continuous piecewise-linear function
/// given by breakpoints (t, η(t)) starting at (0, 0) and a tail slope past the
/// last breakpoint. Continuity makes it usc.
class EtaSpec {
 public:
  enum class Kind { kLinear, kPiecewiseLinear };

  /// Throws InvalidArgument unless 0 < μ < 1.
  static EtaSpec linear(Rational mu);
  /// Throws InvalidArgument unless η(t) < t for every t > 0 and η >= 0.
  static EtaSpec piecewise(std::vector<std::pair<Rational, Rational>> points, Rational tail_slope);
  /// "linear:μ" or "pwl:t0=v0,t1=v1,...;tail=s".
  static EtaSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  const Rational& mu() const noexcept { return mu_; }
  const std::vector<std::pair<Rational, Rational>>& points() const noexcept { return points_; }
  const Rational& tail_slope() const noexcept { return tail_; }

  Rational operator()(const Rational& t) const;
  /// Arguments t > 0 at which η changes slope.
  std::vector<Rational> kinks() const;
  std::string to_string() const;

  /// The checks run at construction, as readable statements: η(t) < t for
  /// t > 0, and η(α) >= α only at α = 0.
  const std::vector<std::string>& audit() const noexcept { return audit_; }

 private:
  EtaSpec() = default;
  void check();

  Kind kind_ = Kind::kLinear;
  Rational mu_;
  std::vector<std::pair<Rational, Rational>> points_;
  Rational tail_;
  std::vector<std::string> audit_;
};

/// Successor x ↦ x' on a finite instance; nullopt where undefined.
using SuccessorTable = std::vector<std::optional<PointIndex>>;

/// γ d(x_{n+k}, x_n) <= f(x_n) - f(x_{n+k}) for one member.
struct TelescopeCheck {
  std::size_t n = 0, k = 0, member = 0;
  Rational lhs, rhs;
  bool holds() const { return lhs <= rhs; }
};

/// d(x̄, x_k) <= bound for one member.
struct LimitCheck {
  std::size_t k = 0, member = 0;
  Rational distance, bound;
  bool holds() const { return distance <= bound; }
};

struct IterationResult {
  /// f(x̄) = 0 reached. Otherwise the cap was hit and the run is only a
  /// prefix of a converging iteration.
  bool terminated = false;
  std::size_t steps = 0;
  PointList points;                // finite instances
  std::vector<Rational> positions;  // catalog instances
  std::vector<Rational> values;     // f(x_k)
  Rational gamma;
  std::string eta;
  bool nonincreasing = true;
  bool strictly_decreasing = true;
  std::vector<TelescopeCheck> telescoped;
  bool telescoped_sampled = false;
  /// Finite: the last iterate. Catalog: the entry's declared limit.
  std::optional<std::string> limit;
  /// d(x̄, x_k) <= f(x_k)/γ; the k = 0 entries are the theorem's bound.
  std::vector<LimitCheck> limit_bounds;
  /// Gelman form d(x̄, x0) <= λ f(x0)/(1-μ), when run through gelman_reduce.
  std::vector<LimitCheck> gelman_bounds;
  /// Rule audit statements.
  std::vector<std::string> audit;

  bool ok() const;
};

inline constexpr std::size_t kDefaultIterationCap = 10000;

/// x_{k+1} = rule(x_k) until f(x_k) = 0 or `cap` steps. The rule is audited
/// first at every x in dom f with f(x) > 0: f(x') + γ d(x',x) <= f(x) for all d
/// and f(x') <= η(f(x)). Requires f >= 0, a T1 gauge (which makes condition
/// (a) automatic) and x0 in dom f; throws HypothesisViolation otherwise.
IterationResult eta_iterate(const FQuasiGauge& gauge, const Objective& f, const Rational& gamma, const EtaSpec& eta,
                            const SuccessorTable& rule, PointIndex x0, std::size_t cap = kDefaultIterationCap);

/// Catalog form: objective, distance and affine successor rule come from the
/// entry. The rule audit is symbolic over the whole domain; the objective must
/// carry the "condition-a" certificate.
IterationResult eta_iterate(const catalog::CatalogEntry& entry, const Rational& gamma, const EtaSpec& eta,
                            std::optional<Rational> start = std::nullopt, std::size_t cap = kDefaultIterationCap);

/// Runs eta_iterate with γ = (1-μ)/λ and η(t) = μt after auditing the rule in
/// the form d(x',x) <= λ f(x), f(x') <= μ f(x). Rejects μ outside (0,1).
IterationResult gelman_reduce(const FQuasiGauge& gauge, const Objective& f, const Rational& lambda,
                              const Rational& mu, const SuccessorTable& rule, PointIndex x0,
                              std::size_t cap = kDefaultIterationCap);
/// Catalog form using the entry's λ, μ, rule and start.
IterationResult gelman_reduce(const catalog::CatalogEntry& entry, std::size_t cap = kDefaultIterationCap);

/// f(x) = |h(x) - g(x)| on the entry's residual domain, +inf elsewhere.
catalog::CatalogFunction residual_objective(const catalog::CatalogEntry& entry);
/// The residual evaluated on explicit rational points.
Objective residual_on_points(const catalog::CatalogFunction& f, const std::vector<Rational>& points,
                             std::string name = "f");

/// One (sequence, limit) pair of the condition-(a) check.
struct ResidualCheck {
  std::string sequence;
  Rational limit;
  bool converges = false;
  /// lim f(x_n), nullopt when f is +inf along the tail.
  std::optional<Rational> tail_limit;
  ExtendedRational value_at_limit;
  /// The pair exercises the condition: x_n → limit and f(x_n) → 0.
  bool applicable = false;
  bool holds = true;
};

/// Checks f(x_n) → 0 ⇒ f(limit) = 0 along every catalog sequence of the entry
/// and every declared limit it converges to.
std::vector<ResidualCheck> closed_graph_checks(const catalog::CatalogEntry& entry);

}  // namespace qvar
