#pragma once

#include <cstddef>
#include <vector>

#include "qvar/spaces.hpp"

namespace qvar {

/// A binary relation on a finite point set, as an n x n membership matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  static Relation diagonal(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool contains(PointIndex x, PointIndex y) const { return bits_[x * n_ + y] != 0; }
  void insert(PointIndex x, PointIndex y) { bits_[x * n_ + y] = 1; }
  std::size_t count() const;

  bool subset_of(const Relation& other) const;
  Relation intersect(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

/// V_{d,ε} = {(x,y) : d(x,y) < ε}. Throws InvalidArgument for ε <= 0.
Relation entourage(const QuasiPseudometric& d, const Rational& epsilon);
/// M∘N = {(x,z) : ∃y, (x,y) ∈ M and (y,z) ∈ N}.
Relation compose(const Relation& m, const Relation& n);
Relation invert(const Relation& r);
/// U(x) = {y : (x,y) ∈ U}.
PointList section(const Relation& r, PointIndex x);

struct Generator {
  std::size_t member;  // index into the gauge
  Rational epsilon;
};

/// A finite family of basic entourages V_{d,ε} drawn from a gauge.
struct EntourageBasis {
  std::vector<Generator> generators;
};

/// Dyadic thresholds spanning the gauge's value range, fine enough that the
/// smallest threshold only admits zero distances.
EntourageBasis gauge_basis(const FQuasiGauge& gauge);

/// (BQU1)-(BQU3) checked exhaustively over the listed generators.
ValidationReport validate_basis(const EntourageBasis& basis, const FQuasiGauge& gauge);

/// True iff every V_{d,ε} contains some V_{d0,δ} with d0 in the gauge. Only
/// the thresholds realised by d (plus one above its maximum) are tested:
/// V_{d,ε} is piecewise constant in ε on a finite set.
bool gauge_compatibility(const QuasiPseudometric& d, const FQuasiGauge& gauge);

}  // namespace qvar
