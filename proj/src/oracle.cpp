#include "qvar/oracle.hpp"

#include <algorithm>
#include <functional>

#include "qvar/error.hpp"

namespace qvar::oracle {

namespace {

using Value = std::function<ExtendedRational(PointIndex)>;

// φ(y) + c·d(y,x) <= φ(x) for every member, with per-member factors c.
bool below_all(const FQuasiGauge& gauge, const std::vector<Rational>& factor, const Value& phi, PointIndex x,
               PointIndex y) {
  for (std::size_t i = 0; i < gauge.size(); ++i) {
    const ExtendedRational lhs = phi(y) + ExtendedRational(Rational(factor[i] * gauge.member(i)(y, x)));
    if (lhs > phi(x)) return false;
  }
  return true;
}

std::vector<Rational> ones(const FQuasiGauge& gauge) { return std::vector<Rational>(gauge.size(), Rational(1)); }

std::optional<Rational> infimum(const Objective& f) {
  std::optional<Rational> best;
  for (const auto& v : f.values())
    if (v.is_finite() && (!best || v.value() < *best)) best = v.value();
  return best;
}

}  // namespace

PointList enumerate_minimal(const FQuasiGauge& gauge, const Objective& phi) {
  const auto c = ones(gauge);
  const Value v = [&](PointIndex p) { return phi(p); };
  PointList out;
  for (PointIndex z = 0; z < phi.size(); ++z) {
    bool minimal = true;
    for (PointIndex y = 0; y < phi.size() && minimal; ++y)
      if (y != z && below_all(gauge, c, v, z, y)) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

PointList enumerate_ekeland(const FQuasiGauge& gauge, const Objective& f, PointIndex x0) {
  PointList out;
  for (PointIndex z = 0; z < f.size(); ++z) {
    bool ok = true;
    for (const auto& d : gauge.members()) ok = ok && f(z) + ExtendedRational(d(z, x0)) <= f(x0);
    for (PointIndex x = 0; x < f.size() && ok; ++x) {
      if (x == z) continue;
      bool strict = false;
      for (const auto& d : gauge.members()) strict = strict || f(z) < f(x) + ExtendedRational(d(x, z));
      ok = strict;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

PointList enumerate_takahashi(const Objective& f) {
  const auto alpha = infimum(f);
  PointList out;
  if (!alpha) return out;
  for (PointIndex z = 0; z < f.size(); ++z)
    if (f(z) == ExtendedRational(*alpha)) out.push_back(z);
  return out;
}

PointList enumerate_caristi_fixed(const SetValuedMap& F, CaristiVariant variant) {
  PointList out;
  for (PointIndex z = 0; z < F.size(); ++z) {
    const auto& img = F(z);
    const bool fixed = variant == CaristiVariant::kWeak ? std::find(img.begin(), img.end(), z) != img.end()
                                                        : img.size() == 1 && img.front() == z;
    if (fixed) out.push_back(z);
  }
  return out;
}

PointList enumerate_oettli_thera(const FQuasiGauge& gauge, const Bivariate& F, PointIndex x0) {
  const ExtendedRational zero(0);
  PointList out;
  for (PointIndex z = 0; z < F.size(); ++z) {
    bool ok = true;
    for (const auto& d : gauge.members()) ok = ok && F(x0, z) + ExtendedRational(d(z, x0)) <= zero;
    for (PointIndex x = 0; x < F.size() && ok; ++x) {
      if (x == z) continue;
      bool strict = false;
      for (const auto& d : gauge.members()) strict = strict || zero < F(z, x) + ExtendedRational(d(x, z));
      ok = strict;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(VerifyResult& r) : r_(r) {}

  void require(bool ok, const std::string& what) {
    if (!ok) r_.failures.push_back(what);
  }

  // The stated inequality must match the recomputed sides exactly and hold.
  void inequality(const Inequality& stated, const ExtendedRational& lhs, const ExtendedRational& rhs, bool strict,
                  const std::string& label) {
    ++r_.inequalities;
    require(stated.lhs == lhs, label + ": stated lhs " + stated.lhs.to_string() + " != " + lhs.to_string());
    require(stated.rhs == rhs, label + ": stated rhs " + stated.rhs.to_string() + " != " + rhs.to_string());
    require(stated.strict == strict, label + ": wrong strictness");
    require(strict ? lhs < rhs : lhs <= rhs, label + ": " + lhs.to_string() + (strict ? " < " : " <= ") +
                                                 rhs.to_string() + " fails");
  }

 private:
  VerifyResult& r_;
};

std::string at(const char* part, std::size_t member, PointIndex x) {
  return std::string(part) + "[d" + std::to_string(member) + ", x=" + std::to_string(x) + "]";
}

}  // namespace

VerifyResult verify_certificate(const CertificateContext& ctx, const Certificate& cert) {
  VerifyResult result;
  Checker check(result);
  if (!ctx.gauge) throw InvalidArgument("certificate check needs the instance gauge");
  const FQuasiGauge& gauge = *ctx.gauge;
  const std::size_t n = gauge.points();
  const std::size_t m = gauge.size();
  const bool ot = cert.principle == Principle::kOettliThera;
  if (ot && !ctx.bivariate) throw InvalidArgument("certificate names bivariate '" + cert.bivariate + "', not found");
  if (!ot && !ctx.objective) throw InvalidArgument("certificate names objective '" + cert.objective + "', not found");
  if (cert.principle == Principle::kCaristi && !ctx.map) {
    throw InvalidArgument("certificate names map '" + cert.map + "', not found");
  }
  if (ot ? ctx.bivariate->size() != n : ctx.objective->size() != n) {
    throw InvalidArgument("certificate data does not match the instance size");
  }

  const PointIndex z = cert.point;
  if (!cert.start || *cert.start >= n || z >= n) {
    check.require(false, "start or certified point missing or out of range");
    return result;
  }
  const PointIndex x0 = *cert.start;

  // Member factors of the gauge the Ekeland parts are stated for.
  std::vector<Rational> factor(m, Rational(1));
  if (cert.principle == Principle::kEkelandScaled) {
    if (!cert.epsilon || sgn(*cert.epsilon) <= 0 || cert.xi.size() != m) {
      check.require(false, "scaled certificate needs epsilon > 0 and one xi per member");
      return result;
    }
    for (std::size_t i = 0; i < m; ++i) {
      check.require(sgn(cert.xi[i]) > 0, "xi must be positive");
      factor[i] = *cert.epsilon * cert.xi[i];
    }
  } else if (cert.principle == Principle::kArutyunov) {
    if (!cert.gamma || sgn(*cert.gamma) <= 0) {
      check.require(false, "Arutyunov certificate needs gamma > 0");
      return result;
    }
    for (auto& c : factor) c = *cert.gamma;
  }
  auto dist = [&](std::size_t i, PointIndex a, PointIndex b) {
    return ExtendedRational(Rational(factor[i] * gauge.member(i)(a, b)));
  };

  // Objective along which the descent ran: f, or F(x0, ·).
  const Value g = ot ? Value([&](PointIndex y) { return (*ctx.bivariate)(x0, y); })
                     : Value([&](PointIndex y) { return (*ctx.objective)(y); });
  check.require(g(x0).is_finite(), "start lies outside the domain");

  std::vector<bool> seen(m, false);
  check.require(cert.part_i.size() == m, "part (i) needs one inequality per member");
  for (const auto& q : cert.part_i) {
    if (q.member >= m || seen[q.member] || q.point != z) {
      check.require(false, "part (i) entry with bad member or point");
      continue;
    }
    seen[q.member] = true;
    if (ot) {
      check.inequality(q, (*ctx.bivariate)(x0, z) + dist(q.member, z, x0), ExtendedRational(0), false,
                       at("part-i", q.member, z));
    } else {
      check.inequality(q, g(z) + dist(q.member, z, x0), g(x0), false, at("part-i", q.member, z));
    }
  }

  std::vector<bool> covered(n, false);
  check.require(cert.part_ii.size() + 1 == n, "part (ii) needs one witness per x != z");
  for (const auto& q : cert.part_ii) {
    if (q.member >= m || q.point >= n || q.point == z || covered[q.point]) {
      check.require(false, "part (ii) entry with bad member or point");
      continue;
    }
    covered[q.point] = true;
    const PointIndex x = q.point;
    if (ot) {
      check.inequality(q, ExtendedRational(0), (*ctx.bivariate)(z, x) + dist(q.member, x, z), true,
                       at("part-ii", q.member, x));
    } else {
      check.inequality(q, g(z), g(x) + dist(q.member, x, z), true, at("part-ii", q.member, x));
    }
  }

  // The descent trace is a chain in the order from x0 ending at z.
  PointIndex prev = x0;
  for (auto t : cert.trace) {
    if (t >= n) {
      check.require(false, "trace point out of range");
      break;
    }
    check.require(t != prev && below_all(gauge, factor, g, prev, t),
                  "trace step " + std::to_string(prev) + " -> " + std::to_string(t) + " is not a descent");
    prev = t;
  }
  check.require(prev == z, "trace does not end at the certified point");

  const std::optional<Rational> alpha = ot ? std::nullopt : infimum(*ctx.objective);
  if (!ot && !alpha) {
    check.require(false, "objective is +inf everywhere");
    return result;
  }
  switch (cert.principle) {
    case Principle::kEkeland:
    case Principle::kOettliThera:
      break;
    case Principle::kEkelandScaled: {
      check.require(g(x0) <= ExtendedRational(Rational(*alpha + *cert.epsilon)), "f(x0) > inf f + epsilon");
      check.require(cert.bounds.size() == m, "scaled bound needs one inequality per member");
      for (const auto& q : cert.bounds) {
        if (q.member >= m) continue;
        check.inequality(q, ExtendedRational(gauge.member(q.member)(z, x0)),
                         ExtendedRational(Rational(1 / cert.xi[q.member])), false, at("bound", q.member, z));
      }
      break;
    }
    case Principle::kArutyunov: {
      check.require(cert.infimum == alpha, "stated infimum differs from inf f");
      check.require(g(z) == ExtendedRational(*alpha), "f(z) != inf f");
      check.require(cert.bounds.size() == m, "Arutyunov bound needs one inequality per member");
      const Rational rhs = (g(x0).value() - *alpha) / *cert.gamma;
      for (const auto& q : cert.bounds) {
        if (q.member >= m) continue;
        check.inequality(q, ExtendedRational(gauge.member(q.member)(z, x0)), ExtendedRational(rhs), false,
                         at("bound", q.member, z));
      }
      break;
    }
    case Principle::kTakahashi:
      check.require(cert.infimum == alpha, "stated infimum differs from inf f");
      check.require(g(z) == ExtendedRational(*alpha), "f(z) != inf f");
      break;
    case Principle::kCaristi: {
      const auto& img = (*ctx.map)(z);
      check.require(cert.image == img, "stated image differs from F(z)");
      const bool fixed = cert.variant == CaristiVariant::kWeak
                             ? std::find(img.begin(), img.end(), z) != img.end()
                             : img == PointList{z};
      check.require(fixed, cert.variant == CaristiVariant::kWeak ? "z not in F(z)" : "F(z) != {z}");
      break;
    }
  }
  result.pass = result.failures.empty();
  return result;
}

}  // namespace qvar::oracle
