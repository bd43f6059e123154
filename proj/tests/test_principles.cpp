#include <doctest.h>

#include <algorithm>

#include "qvar/error.hpp"
#include "qvar/oracle.hpp"
#include "qvar/principles.hpp"
#include "support.hpp"

using namespace qvar;
using namespace qt;

namespace {

// p0..p3 with f(p_i) = 3 - i; d(p_j, p_i) = j - i for j > i, 10 the other way.
FQuasiGauge chain_gauge() {
  return FQuasiGauge::single(mat("d", {{0, 10, 10, 10}, {1, 0, 10, 10}, {2, 1, 0, 10}, {3, 2, 1, 0}}));
}
Objective chain_f() { return obj({q(3), q(2), q(1), q(0)}); }

bool in(const PointList& set, PointIndex x) { return std::find(set.begin(), set.end(), x) != set.end(); }

oracle::VerifyResult verify(const FQuasiGauge& g, const Objective* f, const Certificate& c,
                            const SetValuedMap* F = nullptr, const Bivariate* B = nullptr) {
  return oracle::verify_certificate({&g, f, F, B}, c);
}

// random finite T1 quasi-metric (positive off the diagonal after closure)
FQuasiGauge random_t1(Rng& rng, std::size_t n) {
  auto d = random_matrix(rng, n);
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex y = 0; y < n; ++y)
      if (x != y && d(x, y) == 0) d.at(x, y) = frac(1, 2);
  for (PointIndex k = 0; k < n; ++k)
    for (PointIndex x = 0; x < n; ++x)
      for (PointIndex y = 0; y < n; ++y)
        if (d(x, k) + d(k, y) < d(x, y)) d.at(x, y) = d(x, k) + d(k, y);
  return FQuasiGauge::single(d);
}

Objective random_f(Rng& rng, std::size_t n) {
  std::vector<ExtendedRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(frac(rng.between(0, 20), rng.between(1, 4)));
  return obj(v);
}

}  // namespace

TEST_SUITE("principles") {
  TEST_CASE("Ekeland on the chain") {
    const auto g = chain_gauge();
    const auto f = chain_f();
    const auto c = ekeland_point(g, f, 0);
    CHECK(c.point == 3);
    CHECK(c.part_i.size() == 1);
    CHECK(c.part_ii.size() == 3);
    CHECK(ref_is_ekeland(g, f, 0, c.point));
    CHECK(verify(g, &f, c).pass);
    // x0 already minimal
    CHECK(ekeland_point(g, f, 3).point == 3);
  }

  TEST_CASE("Ekeland on a singleton") {
    const auto g = FQuasiGauge::single(QuasiPseudometric::zero("d", 1));
    const auto f = obj({q(7)});
    const auto c = ekeland_point(g, f, 0);
    CHECK(c.point == 0);
    CHECK(c.part_ii.empty());
    CHECK(verify(g, &f, c).pass);
  }

  TEST_CASE("Ekeland refuses a non-T1 gauge and an infinite start") {
    const auto f = obj({q(1), q(0)});
    CHECK_THROWS_AS(ekeland_point(FQuasiGauge::single(mat("du", {{0, 1}, {0, 0}})), f, 0), HypothesisViolation);
    const auto g = FQuasiGauge::single(QuasiPseudometric::discrete("e", 2));
    CHECK_THROWS_AS(ekeland_point(g, obj({inf(), q(0)}), 0), HypothesisViolation);
  }

  TEST_CASE("Ekeland certificates on random T1 instances") {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng.below(7);
      const auto g = random_t1(rng, n);
      const auto f = random_f(rng, n);
      const PointIndex x0 = rng.below(n);
      const auto c = ekeland_point(g, f, x0);
      CHECK(verify(g, &f, c).pass);
      CHECK(in(ref_ekeland_set(g, f, x0), c.point));
      CHECK(ref_ekeland_set(g, f, x0) == oracle::enumerate_ekeland(g, f, x0));
      // z minimal in its own section
      const PhiOrder order(g, f);
      CHECK(order.lower_section(c.point) == PointList{c.point});
      CHECK(in(order.lower_section(x0), c.point));
    }
  }

  TEST_CASE("tampered certificates fail verification") {
    const auto g = chain_gauge();
    const auto f = chain_f();
    const auto c = ekeland_point(g, f, 0);
    SUBCASE("swapped sides") {
      auto bad = c;
      std::swap(bad.part_ii[0].lhs, bad.part_ii[0].rhs);
      CHECK(!verify(g, &f, bad).pass);
    }
    SUBCASE("z outside S(x0)") {
      // from x0 = p2, p0 is not below: f(p0) + d(p0,p2) = 13 > 1
      auto bad = ekeland_point(g, f, 2);
      bad.point = 0;
      CHECK(!verify(g, &f, bad).pass);
    }
    SUBCASE("dropped witness") {
      auto bad = c;
      bad.part_ii.pop_back();
      CHECK(!verify(g, &f, bad).pass);
    }
    SUBCASE("member out of range") {
      auto bad = c;
      bad.part_i[0].member = 5;
      CHECK(!verify(g, &f, bad).pass);
    }
    SUBCASE("missing objective") { CHECK_THROWS_AS(verify(g, nullptr, c), InvalidArgument); }
  }

  TEST_CASE("rescaling gauge and objective together keeps the Ekeland set") {
    Rng rng(103);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng.below(5);
      const auto g = random_t1(rng, n);
      const auto f = random_f(rng, n);
      const Rational c = frac(rng.between(1, 9), rng.between(1, 4));
      const auto gc = rescale_gauge(g, {c});
      std::vector<ExtendedRational> fc;
      for (const auto& v : f.values()) fc.push_back(c * v);
      const auto fcs = obj(fc);
      for (PointIndex x0 = 0; x0 < n; ++x0) {
        CHECK(oracle::enumerate_ekeland(g, f, x0) == oracle::enumerate_ekeland(gc, fcs, x0));
        // identical run thanks to deterministic tie-breaking
        CHECK(ekeland_point(g, f, x0).point == ekeland_point(gc, fcs, x0).point);
      }
    }
  }

  TEST_CASE("scaled Ekeland") {
    const auto g = chain_gauge();
    const auto f = chain_f();
    SUBCASE("xi = 1, epsilon = f(x0) - inf") {
      const auto c = ekeland_scaled(g, f, 0, {q(3), {q(1)}});
      CHECK(verify(g, &f, c).pass);
      CHECK(g.member(0)(c.point, 0) <= 1);
    }
    SUBCASE("x0 is the minimizer") {
      const auto c = ekeland_scaled(g, f, 3, {q("1/5"), {q(1)}});
      CHECK(c.point == 3);
      CHECK(verify(g, &f, c).pass);
    }
    SUBCASE("not epsilon-minimal") {
      CHECK_THROWS_AS(ekeland_scaled(g, f, 0, {q(1), {q(1)}}), HypothesisViolation);
    }
    SUBCASE("rescaled gauge stays valid") {
      Rng rng(107);
      for (int t = 0; t < 40; ++t) {
        const auto d = random_quasi_pseudometric(rng, 4, "d");
        auto top = scale(d, q(3));
        top.rename("top");
        const FQuasiGauge base({d, top}, {1, 1});
        REQUIRE(validate_f_quasi_gauge(base).valid());
        const auto scaled = scaled_gauge(base, frac(rng.between(1, 6), 2), {frac(rng.between(1, 4), 1), q(5)});
        CHECK(validate_f_quasi_gauge(scaled).valid());
      }
    }
  }

  TEST_CASE("scaled bound on random instances") {
    Rng rng(109);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng.below(5);
      const auto g = random_t1(rng, n);
      const auto f = random_f(rng, n);
      const PointIndex x0 = rng.below(n);
      const Rational gap = f(x0).value() - ref_inf(f);
      const Rational xi = frac(rng.between(1, 5), rng.between(1, 3));
      const auto c = ekeland_scaled(g, f, x0, {gap == 0 ? q(1) : gap, {xi}});
      CHECK(verify(g, &f, c).pass);
      CHECK(g.member(0)(c.point, x0) <= 1 / xi);
    }
  }

  TEST_CASE("Caristi") {
    const auto g = chain_gauge();
    const auto f = chain_f();
    SUBCASE("identity map") {
      const auto F = SetValuedMap::from_selector("F", {0, 1, 2, 3});
      const auto c = caristi_fixed_point(g, f, F, CaristiVariant::kWeak, 0);
      CHECK(c.point == ekeland_point(g, f, 0).point);
      CHECK(verify(g, &f, c, &F).pass);
    }
    SUBCASE("F = S is strong") {
      const PhiOrder order(g, f);
      std::vector<PointList> images;
      for (PointIndex x = 0; x < 4; ++x) images.push_back(order.lower_section(x));
      const SetValuedMap F("S", images);
      const auto c = caristi_fixed_point(g, f, F, CaristiVariant::kStrong);
      CHECK(F(c.point) == PointList{c.point});
      CHECK(verify(g, &f, c, &F).pass);
    }
    SUBCASE("weak hypothesis failure names x") {
      // p3 -> p0 climbs in f
      const auto F = SetValuedMap::from_selector("F", {1, 2, 3, 0});
      try {
        caristi_fixed_point(g, f, F, CaristiVariant::kWeak);
        FAIL("expected a refusal");
      } catch (const HypothesisViolation& e) {
        CHECK(e.witness().front() == 3);
      }
    }
  }

  TEST_CASE("Caristi selectors on random instances") {
    Rng rng(113);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 2 + rng.below(5);
      const auto g = random_t1(rng, n);
      const auto f = random_f(rng, n);
      const PhiOrder order(g, f);
      PointList sel;
      for (PointIndex x = 0; x < n; ++x) {
        const auto s = order.lower_section(x);
        sel.push_back(s[rng.below(s.size())]);
      }
      const auto F = SetValuedMap::from_selector("F", sel);
      const auto c = caristi_fixed_point(g, f, F, CaristiVariant::kWeak);
      CHECK(sel[c.point] == c.point);
      CHECK(in(oracle::enumerate_caristi_fixed(F, CaristiVariant::kWeak), c.point));
      CHECK(verify(g, &f, c, &F).pass);
    }
  }

  TEST_CASE("Takahashi") {
    const auto g = chain_gauge();
    SUBCASE("chain") {
      const auto f = chain_f();
      const auto c = takahashi_minimize(g, f);
      CHECK(c.point == 3);
      CHECK(c.infimum == std::optional<Rational>(q(0)));
      CHECK(verify(g, &f, c).pass);
    }
    SUBCASE("constant objective") {
      const auto f = obj({q(2), q(2), q(2), q(2)});
      const auto c = takahashi_minimize(g, f);
      CHECK(f(c.point) == ExtendedRational(q(2)));
    }
    SUBCASE("isolated non-minimizer") {
      const auto far = FQuasiGauge::single(scale(QuasiPseudometric::discrete("e", 2), q(10)));
      const auto f = obj({q(0), q(5)});
      try {
        takahashi_minimize(far, f);
        FAIL("expected a refusal");
      } catch (const HypothesisViolation& e) {
        CHECK(e.witness() == std::vector<std::size_t>{1});
      }
    }
  }

  TEST_CASE("Arutyunov") {
    const auto g = chain_gauge();
    const auto f = chain_f();
    SUBCASE("gamma = 1 on the chain") {
      const auto c = arutyunov_minimize(g, f, q(1), 0);
      CHECK(c.point == 3);
      CHECK(f(c.point) == ExtendedRational(q(0)));
      CHECK(g.member(0)(3, 0) <= (q(3) - 0) / q(1));
      CHECK(verify(g, &f, c).pass);
    }
    SUBCASE("f(x0) = inf returns x0") {
      const auto c = arutyunov_minimize(g, f, q(1), 3);
      CHECK(c.point == 3);
    }
    SUBCASE("gamma too large") { CHECK_THROWS_AS(arutyunov_minimize(g, f, q(10), 0), HypothesisViolation); }
  }

  TEST_CASE("Oettli-Thera") {
    SUBCASE("F = f(y) - f(x) reduces to Ekeland") {
      const auto g = chain_gauge();
      const auto f = chain_f();
      const auto B = Bivariate::from_objective(f);
      const auto c = oettli_thera(g, B, 0);
      CHECK(c.point == ekeland_point(g, f, 0).point);
      CHECK(verify(g, nullptr, c, nullptr, &B).pass);
      CHECK(oracle::enumerate_oettli_thera(g, B, 0) == oracle::enumerate_ekeland(g, f, 0));
    }
    SUBCASE("F = 0 fixes x0") {
      const auto g = FQuasiGauge::single(QuasiPseudometric::discrete("e", 3));
      const Bivariate B("F", 3, std::vector<ExtendedRational>(9, ExtendedRational(0)));
      const auto c = oettli_thera(g, B, 1);
      CHECK(c.point == 1);
      CHECK(verify(g, nullptr, c, nullptr, &B).pass);
    }
    SUBCASE("E1 violation") {
      const auto g = FQuasiGauge::single(QuasiPseudometric::discrete("e", 2));
      const Bivariate B("F", 2, {ExtendedRational(1), ExtendedRational(0), ExtendedRational(0), ExtendedRational(0)});
      CHECK(!audit_equilibrium(B, 0).valid());
      CHECK_THROWS_AS(oettli_thera(g, B, 0), HypothesisViolation);
    }
    SUBCASE("perturbed potential") {
      // F(x,y) = g(y) - g(x) + h(x,y) with h >= 0 vanishing on the diagonal and h(x,y) + h(y,z) >= h(x,z)
      Rng rng(127);
      for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng.below(4);
        const auto g = random_t1(rng, n);
        const auto f = random_f(rng, n);
        const auto h = random_quasi_pseudometric(rng, n, "h");
        std::vector<ExtendedRational> v;
        for (PointIndex x = 0; x < n; ++x)
          for (PointIndex y = 0; y < n; ++y) v.push_back(ExtendedRational(f(y).value() - f(x).value() + h(x, y)));
        const Bivariate B("F", n, v);
        const PointIndex x0 = rng.below(n);
        const auto c = oettli_thera(g, B, x0);
        CHECK(verify(g, nullptr, c, nullptr, &B).pass);
        CHECK(in(oracle::enumerate_oettli_thera(g, B, x0), c.point));
      }
    }
  }

  TEST_CASE("equivalences") {
    Rng rng(131);
    SUBCASE("Ek <-> OT and Ek -> Car on random instances") {
      for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng.below(4);
        const auto g = random_t1(rng, n);
        const auto f = random_f(rng, n);
        const auto ot = equivalence_witness(Direction::kEkOT, g, f);
        CHECK(ot.applicable);
        CHECK(ot.confirmed());
        const auto car = equivalence_witness(Direction::kEkToCar, g, f);
        CHECK(car.confirmed());
        const auto tak = equivalence_witness(Direction::kEkToTak, g, f);
        CHECK(tak.applicable);
      }
    }
    SUBCASE("not Ek -> not Car on a zero gauge") {
      const auto g = FQuasiGauge::single(QuasiPseudometric::zero("z", 3));
      const auto f = obj({q(1), q(1), q(1)});
      // no weak Ekeland point: f(z) < f(x) + 0 never holds
      CHECK(weak_ekeland_points(g, f).empty());
      const auto r = equivalence_witness(Direction::kNotEkToNotCar, g, f);
      CHECK(r.applicable);
      CHECK(r.confirmed());
      REQUIRE(r.selector.size() == 3);
      for (PointIndex x = 0; x < 3; ++x) {
        CHECK(r.selector[x] != x);
        CHECK(ref_below(g, f, r.selector[x], x));
      }
    }
    SUBCASE("not Ek directions are not applicable when Ek holds") {
      const auto r = equivalence_witness(Direction::kNotEkToNotCar, chain_gauge(), chain_f());
      CHECK(!r.applicable);
    }
  }
}
