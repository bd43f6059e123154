#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvar/catalog.hpp"
#include "qvar/order.hpp"
#include "qvar/relation.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

/// {1, 1/2, ..., 2^-10}
std::vector<Rational> default_schedule();

struct EpsilonStep {
  Rational epsilon;
  /// First prefix index from which every later prefix term satisfies the
  /// ε-condition; nullopt when even the last term fails it.
  std::optional<std::size_t> first_index;
};

/// Outcome of a sequence test. Prefix-based tests are never exact: they are
/// labelled consistent-up-to-N and carry the ε-schedule evidence. Catalog
/// tests are exact and carry the closed form they were decided by.
struct Verdict {
  bool exact = false;
  bool holds = false;
  std::size_t depth = 0;
  std::vector<EpsilonStep> schedule;
  /// Prefix tests: first index from which the tested quantity is exactly
  /// zero for every gauge member.
  std::optional<std::size_t> zero_from;
  std::string certificate;

  std::string label() const;
};

// Finite instances, explicit prefixes.

/// ∀d: d(x, x_n) < ε eventually, for every ε in the schedule.
Verdict converges_to(const PointList& prefix, PointIndex x, const FQuasiGauge& gauge,
                     const std::vector<Rational>& schedule = default_schedule());
PointList limit_set(const PointList& prefix, const FQuasiGauge& gauge, const PointList& candidates,
                    const std::vector<Rational>& schedule = default_schedule());
/// d(x_n, x_{n+k}) < ε for all n >= n0, k >= 1 within the prefix.
Verdict is_left_k_cauchy(const PointList& prefix, const FQuasiGauge& gauge,
                         const std::vector<Rational>& schedule = default_schedule());
/// d(x_{n+k}, x_n) < ε for all n >= n0, k >= 1 within the prefix.
Verdict is_right_k_cauchy(const PointList& prefix, const FQuasiGauge& gauge,
                          const std::vector<Rational>& schedule = default_schedule());

/// s ≤_τ t iff s lies in the closure of {t}, i.e. d(s,t) = 0 for every d.
Relation specialization_preorder(const FQuasiGauge& gauge);

// Countable catalog instances: exact verdicts from closed forms.

/// A countable space: a catalog entry together with the gauge members (catalog
/// distance ids) that generate its quasi-uniformity.
struct CountableSpace {
  const catalog::CatalogEntry* entry = nullptr;
  std::vector<const catalog::CatalogDistance*> gauge;

  static CountableSpace of(const catalog::CatalogEntry& entry);
};

/// Closed form of d(p, x_n) (or of the sequence increments) valid for n >= from.
struct TailForm {
  Rational limit;
  /// |value - limit| <= slack / n for n >= from.
  Rational slack;
  std::size_t from = 1;
};

/// d(p, c + e/n) for n >= from; throws InvalidArgument if p or the tail leaves
/// the domain.
TailForm distance_tail(const catalog::CatalogDistance& d, const Rational& p, const catalog::AffineSequence& seq,
                       const catalog::Interval& domain);

Verdict converges_to(const CountableSpace& space, const catalog::AffineSequence& seq, const Rational& x);
std::vector<Rational> limit_set(const CountableSpace& space, const catalog::AffineSequence& seq,
                                const std::vector<Rational>& candidates);
Verdict is_left_k_cauchy(const CountableSpace& space, const catalog::AffineSequence& seq);
Verdict is_right_k_cauchy(const CountableSpace& space, const catalog::AffineSequence& seq);

/// Per-(sequence, limit) semicontinuity evidence.
struct ClassReport {
  Rational limit_point;
  bool converges = false;
  ExtendedRational value_at_limit;
  /// lim f(x_n); the sequence must have a finite tail.
  Rational limit_value;
  bool strictly_decreasing = false;  // eventually strictly f-decreasing
  bool nonincreasing = false;        // eventually f-nonincreasing
  bool pairwise_distinct = false;
  /// f(y) <= lim f(x_n)
  bool inequality_holds = false;
  /// Each class is "holds for this pair" (vacuously when the sequence does not
  /// meet the class's hypothesis).
  bool lsc = false;
  bool decreasingly_lsc = false;
  bool strict_decreasingly_lsc = false;
  bool nearly_lsc = false;
  /// Stored whole-function certificates of the catalog function.
  std::vector<std::string> certificates;
};

/// Throws InvalidArgument if the sequence does not converge to y, or if f is
/// +inf along the tail and no certificate covers it.
ClassReport classify_semicontinuity(const CountableSpace& space, const catalog::CatalogFunction& f,
                                    const catalog::AffineSequence& seq, const Rational& y);

}  // namespace qvar
