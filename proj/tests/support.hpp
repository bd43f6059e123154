#pragma once

// Builders and reference checks shared by the unit tests. The reference
// checks unfold definitions directly and never call library solvers.

#include <set>
#include <string>
#include <vector>

#include "qvar/model.hpp"
#include "qvar/random.hpp"
#include "qvar/spaces.hpp"

namespace qt {

using qvar::ExtendedRational;
using qvar::FQuasiGauge;
using qvar::Objective;
using qvar::PointIndex;
using qvar::PointList;
using qvar::QuasiPseudometric;
using qvar::Rational;

inline Rational q(const char* text) { return qvar::parse_rational(text); }
inline Rational q(long v) { return Rational(v); }
inline Rational q(int v) { return Rational(v); }
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline ExtendedRational inf() { return ExtendedRational::infinity(); }

inline QuasiPseudometric mat(const std::string& name, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().push_back(Rational(v));
  }
  return QuasiPseudometric(name, r);
}

inline Objective obj(const std::vector<ExtendedRational>& values, const std::string& name = "f") {
  return Objective(name, values);
}

/// Axioms violated by d, by a plain triple loop: "QM1", "QM2", "nonnegativity".
inline std::set<std::string> triple_loop_axioms(const QuasiPseudometric& d) {
  std::set<std::string> out;
  const auto n = d.size();
  for (PointIndex x = 0; x < n; ++x) {
    if (d(x, x) != 0) out.insert("QM1");
    for (PointIndex y = 0; y < n; ++y) {
      if (d(x, y) < 0) out.insert("nonnegativity");
      for (PointIndex z = 0; z < n; ++z)
        if (d(x, z) > d(x, y) + d(y, z)) out.insert("QM2");
    }
  }
  return out;
}

/// y ≤ x in the φ-order: φ(y) + d(y,x) ≤ φ(x) for all members.
inline bool ref_below(const FQuasiGauge& g, const Objective& f, PointIndex y, PointIndex x) {
  for (const auto& d : g.members())
    if (f(y) + ExtendedRational(d(y, x)) > f(x)) return false;
  return true;
}

/// Ekeland conclusion (i) and (ii) checked for a single candidate z.
inline bool ref_is_ekeland(const FQuasiGauge& g, const Objective& f, PointIndex x0, PointIndex z) {
  if (!ref_below(g, f, z, x0)) return false;
  for (PointIndex x = 0; x < f.size(); ++x) {
    if (x == z) continue;
    bool strict = false;
    for (const auto& d : g.members())
      if (f(z) < f(x) + ExtendedRational(d(x, z))) strict = true;
    if (!strict) return false;
  }
  return true;
}

inline PointList ref_ekeland_set(const FQuasiGauge& g, const Objective& f, PointIndex x0) {
  PointList out;
  for (PointIndex z = 0; z < f.size(); ++z)
    if (ref_is_ekeland(g, f, x0, z)) out.push_back(z);
  return out;
}

inline Rational ref_inf(const Objective& f) {
  bool seen = false;
  Rational best;
  for (const auto& v : f.values()) {
    if (v.is_infinite()) continue;
    if (!seen || v.value() < best) best = v.value();
    seen = true;
  }
  return best;
}

/// Random nonnegative matrix with zero diagonal; not closed under the triangle.
inline QuasiPseudometric random_matrix(qvar::Rng& rng, std::size_t n, const std::string& name = "d") {
  QuasiPseudometric d = QuasiPseudometric::zero(name, n);
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      if (x != y) d.at(x, y) = frac(rng.between(0, 6), rng.between(1, 3));
  return d;
}

/// Shortest-path closure of random_matrix: satisfies the triangle inequality.
inline QuasiPseudometric random_quasi_pseudometric(qvar::Rng& rng, std::size_t n, const std::string& name = "d") {
  auto d = random_matrix(rng, n, name);
  for (PointIndex k = 0; k < n; ++k)
    for (PointIndex x = 0; x < n; ++x)
      for (PointIndex y = 0; y < n; ++y)
        if (d(x, k) + d(k, y) < d(x, y)) d.at(x, y) = d(x, k) + d(k, y);
  return d;
}

}  // namespace qt
