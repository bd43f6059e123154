#include <doctest.h>

#include "qvar/catalog.hpp"
#include "qvar/error.hpp"
#include "qvar/relation.hpp"
#include "support.hpp"

using namespace qvar;
using namespace qt;

namespace {

QuasiPseudometric q4_grid() {
  // q4 on {0, 1/2, 1}, evaluated straight from its case definition.
  const std::vector<Rational> pts{q(0), q("1/2"), q(1)};
  QuasiPseudometric d = QuasiPseudometric::zero("q4", 3);
  for (PointIndex i = 0; i < 3; ++i)
    for (PointIndex j = 0; j < 3; ++j) {
      const auto& x = pts[i];
      const auto& y = pts[j];
      if (x <= y) d.at(i, j) = y - x;
      else if (x == 1 && y == 0) d.at(i, j) = 1;
      else d.at(i, j) = 1 + y - x;
    }
  return d;
}

QuasiPseudometric du_grid() {
  // d_u(a,b) = (b-a)+ on {-1, 0, 1}
  return mat("du", {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
}

}  // namespace

TEST_SUITE("core-spaces") {
  TEST_CASE("rationals and the extended line") {
    CHECK(parse_rational("6/4") == q("3/2"));
    CHECK(parse_rational("-2") == q(-2));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK(ExtendedRational(q(2)) < inf());
    CHECK(inf() + ExtendedRational(q(1)) == inf());
    CHECK(inf() == ExtendedRational::parse("inf"));
    CHECK_THROWS_AS(q(0) * inf(), UndefinedArithmetic);
    CHECK_THROWS_AS(q(-1) * inf(), UndefinedArithmetic);
    CHECK(q(2) * inf() == inf());
    CHECK_THROWS_AS(inf().value(), UndefinedArithmetic);
  }

  TEST_CASE("discrete metric is a quasi-metric") {
    const auto d = QuasiPseudometric::discrete("d", 3);
    const auto r = validate_quasi_pseudometric(d, PointSet::numbered(3), TriangleMode::kStrict);
    CHECK(r.valid());
    CHECK(r.quasi_metric);
  }

  TEST_CASE("q4 on {0, 1/2, 1}") {
    const auto d = q4_grid();
    // 27 triples, brute-forced here before trusting the validator.
    CHECK(triple_loop_axioms(d).empty());
    for (PointIndex x = 0; x < 3; ++x)
      for (PointIndex y = 0; y < 3; ++y)
        if (x != y) CHECK(d(x, y) > 0);
    const auto r = validate_quasi_pseudometric(d, PointSet::numbered(3), TriangleMode::kStrict);
    CHECK(r.valid());
    CHECK(r.quasi_metric);
    // the catalog distance agrees with the hand evaluation
    const auto& cat = catalog::distance("q4");
    const std::vector<Rational> pts{q(0), q("1/2"), q(1)};
    for (PointIndex i = 0; i < 3; ++i)
      for (PointIndex j = 0; j < 3; ++j) CHECK(cat(pts[i], pts[j]) == d(i, j));
  }

  TEST_CASE("nonzero diagonal is a QM1 violation") {
    auto d = QuasiPseudometric::discrete("d", 3);
    d.at(0, 0) = 1;
    const auto r = validate_quasi_pseudometric(d, PointSet::numbered(3), TriangleMode::kStrict);
    REQUIRE(r.violates("QM1"));
    for (const auto& v : r.violations)
      if (v.axiom == "QM1") CHECK(v.witness == PointList{0});
  }

  TEST_CASE("gauge-relaxed mode skips the triangle") {
    const auto d = mat("d", {{0, 5, 1}, {1, 0, 1}, {1, 1, 0}});  // d(0,1) > d(0,2)+d(2,1)
    const auto pts = PointSet::numbered(3);
    CHECK(validate_quasi_pseudometric(d, pts, TriangleMode::kStrict).violates("QM2"));
    CHECK(validate_quasi_pseudometric(d, pts, TriangleMode::kGaugeRelaxed).valid());
  }

  TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(validate_quasi_pseudometric(QuasiPseudometric::discrete("d", 2), PointSet::numbered(3),
                                                TriangleMode::kStrict),
                    InvalidArgument);
  }

  TEST_CASE("gauge examples") {
    const auto d = mat("d", {{0, 1, 2}, {1, 0, 1}, {2, 3, 0}});
    REQUIRE(triple_loop_axioms(d).empty());
    SUBCASE("singleton relaxing to itself") { CHECK(validate_f_quasi_gauge(FQuasiGauge::single(d)).valid()); }
    SUBCASE("{d, 2d} relaxing to 2d") {
      auto d2 = scale(d, q(2));
      d2.rename("2d");
      const FQuasiGauge g({d, d2}, {1, 1});
      CHECK(validate_f_quasi_gauge(g).valid());
      // QF3 by hand: d(x,z) <= 2d(x,y) + 2d(y,z)
      for (PointIndex x = 0; x < 3; ++x)
        for (PointIndex y = 0; y < 3; ++y)
          for (PointIndex z = 0; z < 3; ++z) CHECK(d(x, z) <= d2(x, y) + d2(y, z));
    }
    SUBCASE("incomparable members break QF1") {
      const auto a = mat("a", {{0, 1}, {2, 0}});
      const auto b = mat("b", {{0, 2}, {1, 0}});
      const FQuasiGauge g({a, b}, {0, 1});
      const auto r = validate_f_quasi_gauge(g);
      CHECK(r.violates("QF1"));
    }
    SUBCASE("empty gauge") { CHECK_THROWS(FQuasiGauge({}, {})); }
  }

  TEST_CASE("conjugate and symmetrization of d_u") {
    const auto d = du_grid();
    const auto c = conjugate(d);
    CHECK(c == [] {
      auto m = mat("du", {{0, 0, 0}, {1, 0, 0}, {2, 1, 0}});
      return m;
    }());
    const auto s = symmetrize(d);
    for (PointIndex x = 0; x < 3; ++x)
      for (PointIndex y = 0; y < 3; ++y) CHECK(s(x, y) == abs(Rational(long(x)) - Rational(long(y))));
    CHECK(conjugate(conjugate(d)) == d);
    const auto sym = QuasiPseudometric::discrete("e", 3);
    CHECK(conjugate(sym) == sym);
  }

  TEST_CASE("symmetrization keeps the triangle when d and its conjugate have it") {
    Rng rng(7);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
      const auto d = random_matrix(rng, 4);
      if (!triple_loop_axioms(d).empty() || !triple_loop_axioms(conjugate(d)).empty()) continue;
      CHECK(triple_loop_axioms(symmetrize(d)).empty());
      ++checked;
    }
    CHECK(checked > 0);
  }

  TEST_CASE("conjugate gauge preserves the relax map") {
    const auto d = mat("d", {{0, 1}, {3, 0}});
    auto d2 = scale(d, q(2));
    d2.rename("d2");
    const FQuasiGauge g({d, d2}, {1, 1});
    const auto c = conjugate_gauge(g);
    CHECK(c.relax_map() == g.relax_map());
    CHECK(c.member(0) == conjugate(d));
  }
}

TEST_SUITE("relations") {
  TEST_CASE("entourage of the discrete metric at 1/2 is the diagonal") {
    CHECK(entourage(QuasiPseudometric::discrete("d", 4), q("1/2")) == Relation::diagonal(4));
    CHECK_THROWS_AS(entourage(QuasiPseudometric::discrete("d", 2), q(0)), InvalidArgument);
  }

  TEST_CASE("entourage uses strict inequality") {
    const auto d = mat("d", {{0, 1}, {2, 0}});
    const auto v = entourage(d, q(1));
    CHECK(!v.contains(0, 1));
    CHECK(entourage(d, q(2)).contains(0, 1));
  }

  TEST_CASE("inverse entourage is the conjugate entourage") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      const auto d = random_matrix(rng, 5);
      const Rational eps = frac(rng.between(1, 8), 2);
      CHECK(invert(entourage(d, eps)) == entourage(conjugate(d), eps));
    }
  }

  TEST_CASE("half entourages of the relax member compose into V(d, eps)") {
    const auto d = mat("d", {{0, 1, 2}, {1, 0, 1}, {2, 3, 0}});
    auto d2 = scale(d, q(2));
    for (const char* e : {"1/2", "1", "3", "5"}) {
      const auto eps = q(e);
      const auto half = entourage(d2, eps / 2);
      CHECK(compose(half, half).subset_of(entourage(d, eps)));
    }
  }

  TEST_CASE("invert is an involution and compose is associative") {
    Rng rng(3);
    auto random_rel = [&](std::size_t n) {
      Relation r(n);
      for (PointIndex x = 0; x < n; ++x)
        for (PointIndex y = 0; y < n; ++y)
          if (rng.chance(1, 3)) r.insert(x, y);
      return r;
    };
    for (int t = 0; t < 100; ++t) {
      const auto a = random_rel(5), b = random_rel(5), c = random_rel(5);
      CHECK(invert(invert(a)) == a);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      // pair-level definition of composition
      const auto ab = compose(a, b);
      for (PointIndex x = 0; x < 5; ++x)
        for (PointIndex z = 0; z < 5; ++z) {
          bool via = false;
          for (PointIndex y = 0; y < 5; ++y) via = via || (a.contains(x, y) && b.contains(y, z));
          CHECK(ab.contains(x, z) == via);
        }
    }
  }

  TEST_CASE("section") {
    const auto d = mat("d", {{0, 1, 3}, {1, 0, 1}, {2, 3, 0}});
    CHECK(section(entourage(d, q(2)), 0) == PointList{0, 1});
  }

  TEST_CASE("basis of a valid gauge satisfies the basis axioms") {
    const auto d = mat("d", {{0, 1, 2}, {1, 0, 1}, {2, 3, 0}});
    auto d2 = scale(d, q(2));
    d2.rename("2d");
    const FQuasiGauge g({d, d2}, {1, 1});
    const auto basis = gauge_basis(g);
    CHECK(!basis.generators.empty());
    CHECK(validate_basis(basis, g).valid());
  }

  TEST_CASE("gauge compatibility") {
    const auto d0 = mat("d0", {{0, 1, 2}, {1, 0, 1}, {2, 3, 0}});
    const auto g = FQuasiGauge::single(d0);
    CHECK(gauge_compatibility(d0, g));
    CHECK(gauge_compatibility(scale(d0, q(2)), g));
    const auto zero = FQuasiGauge::single(QuasiPseudometric::zero("z", 3));
    CHECK(!gauge_compatibility(QuasiPseudometric::discrete("e", 3), zero));
  }

  TEST_CASE("compatibility is monotone in the gauge") {
    Rng rng(5);
    const auto zero = QuasiPseudometric::zero("z", 4);
    for (int t = 0; t < 40; ++t) {
      auto top = random_matrix(rng, 4, "top");
      const auto probe = random_matrix(rng, 4, "p");
      const FQuasiGauge small({zero, top}, {1, 1});
      auto bigger_top = top;
      // Entrywise max with the probe keeps QF1 with a single top.
      for (PointIndex x = 0; x < 4; ++x)
        for (PointIndex y = 0; y < 4; ++y) bigger_top.at(x, y) = std::max(top(x, y), probe(x, y));
      bigger_top.rename("top2");
      const FQuasiGauge big({zero, top, bigger_top}, {2, 2, 2});
      if (gauge_compatibility(probe, small)) CHECK(gauge_compatibility(probe, big));
    }
  }
}
