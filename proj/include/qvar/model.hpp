#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvar/order.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

/// F: X ⇉ X with nonempty images.
class SetValuedMap {
 public:
  SetValuedMap() = default;
  /// Throws InvalidArgument on an empty image or an out-of-range point.
  SetValuedMap(std::string name, std::vector<PointList> images);
  /// Single-valued map x ↦ {f(x)}.
  static SetValuedMap from_selector(std::string name, const PointList& selector);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return images_.size(); }
  const PointList& operator()(PointIndex x) const { return images_.at(x); }
  const std::vector<PointList>& images() const noexcept { return images_; }
  bool contains(PointIndex x, PointIndex y) const;

  friend bool operator==(const SetValuedMap&, const SetValuedMap&) = default;

 private:
  std::string name_;
  std::vector<PointList> images_;
};

/// F: X × X → Q ∪ {+inf}.
class Bivariate {
 public:
  Bivariate() = default;
  Bivariate(std::string name, std::size_t n, std::vector<ExtendedRational> values);
  /// F(x,y) = f(y) - f(x); throws InvalidArgument unless f is finite everywhere.
  static Bivariate from_objective(const Objective& f, std::string name = "F");

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  const ExtendedRational& operator()(PointIndex x, PointIndex y) const { return values_[x * n_ + y]; }
  const std::vector<ExtendedRational>& values() const noexcept { return values_; }
  /// y ↦ F(x0, y)
  Objective slice(PointIndex x0) const;

  friend bool operator==(const Bivariate&, const Bivariate&) = default;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<ExtendedRational> values_;
};

enum class Principle { kEkeland, kEkelandScaled, kCaristi, kTakahashi, kArutyunov, kOettliThera };
enum class CaristiVariant { kWeak, kStrong };

const char* to_string(Principle p);
Principle parse_principle(const std::string& text);
const char* to_string(CaristiVariant v);

/// One exact inequality lhs <= rhs (or lhs < rhs when strict). `member` is the
/// gauge member involved; `point` the point x it is about (part II), or the
/// certified point otherwise.
struct Inequality {
  std::size_t member = 0;
  PointIndex point = 0;
  ExtendedRational lhs, rhs;
  bool strict = false;

  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Output of every solver. Each listed inequality is re-checkable from the
/// raw instance data alone.
struct Certificate {
  Principle principle = Principle::kEkeland;
  std::string objective;  // Ekeland, scaled, Caristi, Takahashi, Arutyunov
  std::string bivariate;  // Oettli–Théra
  std::string map;        // Caristi
  std::optional<PointIndex> start;
  PointIndex point = 0;
  std::optional<Rational> epsilon;
  std::vector<Rational> xi;
  std::optional<Rational> gamma;
  CaristiVariant variant = CaristiVariant::kWeak;
  std::optional<Rational> infimum;
  /// z below the start: f(z) + d(z,x0) <= f(x0) per member (scaled members
  /// for the scaled and Arutyunov forms; F-form for Oettli–Théra).
  std::vector<Inequality> part_i;
  /// One strict witness per x != z.
  std::vector<Inequality> part_ii;
  /// Distance bounds d(z,x0) <= ... per member.
  std::vector<Inequality> bounds;
  /// F(z) for the Caristi forms.
  PointList image;
  /// Descent trace from the start.
  PointList trace;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace qvar
