#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qvar/rational.hpp"

namespace qvar {

using PointIndex = std::size_t;
using PointList = std::vector<PointIndex>;

/// A finite set of uniquely named points indexed 0..n-1.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> names);
  /// Points named p0..p{n-1}.
  static PointSet numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(PointIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Throws InvalidArgument for unknown names.
  PointIndex index_of(const std::string& name) const;
  std::optional<PointIndex> find(const std::string& name) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Asymmetric distance on a finite point set, stored as a dense n x n matrix.
/// Entries are finite and nonnegative once validated; construction only
/// checks the shape so that invalid matrices can be reported on.
class QuasiPseudometric {
 public:
  QuasiPseudometric() = default;
  QuasiPseudometric(std::string name, std::size_t n, std::vector<Rational> values);
  QuasiPseudometric(std::string name, const std::vector<std::vector<Rational>>& rows);
  static QuasiPseudometric zero(std::string name, std::size_t n);
  /// 1 off the diagonal, 0 on it.
  static QuasiPseudometric discrete(std::string name, std::size_t n);

  const std::string& name() const noexcept { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  std::size_t size() const noexcept { return n_; }

  const Rational& operator()(PointIndex x, PointIndex y) const { return values_[x * n_ + y]; }
  Rational& at(PointIndex x, PointIndex y) { return values_[x * n_ + y]; }

  /// Pointwise d <= other.
  bool pointwise_leq(const QuasiPseudometric& other) const;
  /// Sorted distinct values taken by the matrix.
  std::vector<Rational> distinct_values() const;
  /// Smallest strictly positive entry, if any.
  std::optional<Rational> min_positive() const;

  friend bool operator==(const QuasiPseudometric&, const QuasiPseudometric&) = default;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// d̄(x,y) = d(y,x).
QuasiPseudometric conjugate(const QuasiPseudometric& d);
/// dˢ(x,y) = max(d(x,y), d(y,x)).
QuasiPseudometric symmetrize(const QuasiPseudometric& d);
/// c·d for a positive rational c.
QuasiPseudometric scale(const QuasiPseudometric& d, const Rational& factor);

/// A finite F-quasi-gauge: members plus the designated relaxed-triangle
/// witness relax(d) for every member.
class FQuasiGauge {
 public:
  FQuasiGauge() = default;
  /// `relax[i]` is the index of the witness member for member i. Throws
  /// InvalidArgument on an empty member list, mismatched sizes or
  /// out-of-range relax indices.
  FQuasiGauge(std::vector<QuasiPseudometric> members, std::vector<std::size_t> relax,
              bool symmetric = false);
  /// Each member relaxes to itself.
  static FQuasiGauge single(QuasiPseudometric d);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t points() const noexcept { return members_.front().size(); }
  const QuasiPseudometric& member(std::size_t i) const { return members_.at(i); }
  const std::vector<QuasiPseudometric>& members() const noexcept { return members_; }
  std::size_t relax(std::size_t i) const { return relax_.at(i); }
  const std::vector<std::size_t>& relax_map() const noexcept { return relax_; }
  bool symmetric() const noexcept { return symmetric_; }
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const FQuasiGauge&, const FQuasiGauge&) = default;

 private:
  std::vector<QuasiPseudometric> members_;
  std::vector<std::size_t> relax_;
  bool symmetric_ = false;
};

/// Member-wise conjugate; the relax map is preserved.
FQuasiGauge conjugate_gauge(const FQuasiGauge& gauge);
/// Member i becomes factors[i]·d_i; the relax map is preserved.
FQuasiGauge rescale_gauge(const FQuasiGauge& gauge, const std::vector<Rational>& factors);

struct Violation {
  std::string axiom;
  std::vector<PointIndex> witness;  // points (or member indices for QF1)
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// (QM3): d(x,y) = 0 = d(y,x) forces x = y. Only meaningful for
  /// validate_quasi_pseudometric.
  bool quasi_metric = false;

  bool valid() const noexcept { return violations.empty(); }
  bool violates(const std::string& axiom) const;
};

enum class TriangleMode { kStrict, kGaugeRelaxed };

/// Checks (QM1), nonnegativity and, in strict mode, the triangle inequality
/// (QM2) exhaustively. Reports one witness per violated axiom. Throws
/// InvalidArgument if `d` does not match `points`.
ValidationReport validate_quasi_pseudometric(const QuasiPseudometric& d, const PointSet& points,
                                             TriangleMode mode);

/// Checks (QF1)-(QF3), plus (QF4) when the gauge is flagged symmetric.
ValidationReport validate_f_quasi_gauge(const FQuasiGauge& gauge);

}  // namespace qvar
