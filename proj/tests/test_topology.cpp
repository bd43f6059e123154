#include <doctest.h>

#include "qvar/catalog.hpp"
#include "qvar/relation.hpp"
#include "qvar/topology.hpp"
#include "support.hpp"

using namespace qvar;
using namespace qt;

namespace {

const catalog::CatalogEntry& q4() { return catalog::entry("q4-grid"); }

// q4 straight from its case definition.
Rational q4_ref(const Rational& x, const Rational& y) {
  if (x <= y) return y - x;
  if (x == 1 && y == 0) return 1;
  return 1 + y - x;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("q4: 1/n converges to 0 and to 1") {
    const auto space = CountableSpace::of(q4());
    const auto& seq = q4().sequence("inv-n");
    // q4(0,1/n) = q4(1,1/n) = 1/n
    for (long n = 2; n < 50; ++n) {
      CHECK(q4_ref(q(0), frac(1, n)) == frac(1, n));
      CHECK(q4_ref(q(1), frac(1, n)) == frac(1, n));
    }
    const auto at0 = converges_to(space, seq, q(0));
    CHECK(at0.exact);
    CHECK(at0.holds);
    const auto at1 = converges_to(space, seq, q(1));
    CHECK(at1.exact);
    CHECK(at1.holds);
    CHECK(!converges_to(space, seq, q("1/2")).holds);
  }

  TEST_CASE("q4: limit set and right K-Cauchy") {
    const auto space = CountableSpace::of(q4());
    const auto& seq = q4().sequence("inv-n");
    CHECK(limit_set(space, seq, {q(0), q("1/2"), q(1)}) == std::vector<Rational>{q(0), q(1)});
    const auto right = is_right_k_cauchy(space, seq);
    CHECK(right.exact);
    CHECK(right.holds);
    // q4(x_{n+k}, x_n) = 1/n - 1/(n+k) < 1/n, sampled directly
    for (long n = 1; n < 20; ++n)
      for (long k = 1; k < 20; ++k) CHECK(q4_ref(frac(1, n + k), frac(1, n)) < frac(1, n));
  }

  TEST_CASE("q4: 1/n is not left K-Cauchy") {
    // q4(x_n, x_{n+k}) = 1 + 1/(n+k) - 1/n stays near 1
    const auto space = CountableSpace::of(q4());
    const auto left = is_left_k_cauchy(space, q4().sequence("inv-n"));
    CHECK(left.exact);
    CHECK(!left.holds);
  }

  TEST_CASE("d_u: 1/n against candidates {0, -1}") {
    const auto& e = catalog::entry("du-line");
    const auto space = CountableSpace::of(e);
    // d_u(c, 1/n) = (1/n - c)+, which is 1/n + 1 at c = -1
    CHECK(limit_set(space, e.sequence("inv-n"), {q(0), q(-1)}) == std::vector<Rational>{q(0)});
  }

  TEST_CASE("finite prefixes") {
    const auto e = QuasiPseudometric::discrete("e", 3);
    const auto g = FQuasiGauge::single(e);
    SUBCASE("constant sequence") {
      const PointList seq(6, 1);
      const auto v = converges_to(seq, 1, g);
      CHECK(!v.exact);
      CHECK(v.holds);
      CHECK(v.zero_from == std::optional<std::size_t>(0));
      CHECK(is_left_k_cauchy(seq, g).holds);
      CHECK(is_right_k_cauchy(seq, g).holds);
    }
    SUBCASE("eventually constant, discrete metric") {
      const PointList seq{0, 2, 1, 0, 0, 0};
      CHECK(limit_set(seq, g, {0, 1, 2}) == PointList{0});
    }
    SUBCASE("alternating a,b") {
      const PointList seq{0, 1, 0, 1, 0, 1, 0, 1};
      CHECK(!is_left_k_cauchy(seq, g).holds);
      CHECK(!is_right_k_cauchy(seq, g).holds);
    }
    SUBCASE("schedule lists first indices") {
      const auto d = mat("d", {{0, 4, 1}, {4, 0, 4}, {4, 4, 0}});
      const PointList seq{1, 2, 0, 0};
      const auto v = converges_to(seq, 0, FQuasiGauge::single(d), {q(2), q("1/2")});
      REQUIRE(v.schedule.size() == 2);
      CHECK(v.schedule[0].first_index == std::optional<std::size_t>(1));  // d(0,2)=1 < 2
      CHECK(v.schedule[1].first_index == std::optional<std::size_t>(2));
      CHECK(v.label().find("consistent-up-to-4") != std::string::npos);
    }
  }

  TEST_CASE("separation classes") {
    CHECK(separation_class(FQuasiGauge::single(QuasiPseudometric::discrete("e", 3))).t1());
    const auto du = mat("du", {{0, 1}, {0, 0}});  // d_u on {0,1}
    const auto s = separation_class(FQuasiGauge::single(du));
    CHECK(s.value == Separation::kT0);
    REQUIRE(s.t1_witness);
    CHECK(*s.t1_witness == std::pair<PointIndex, PointIndex>{1, 0});
    const auto z = separation_class(FQuasiGauge::single(QuasiPseudometric::zero("z", 2)));
    CHECK(z.value == Separation::kNeither);
    REQUIRE(z.t0_witness);
    CHECK(*z.t0_witness == std::pair<PointIndex, PointIndex>{0, 1});
  }

  TEST_CASE("specialization preorder") {
    CHECK(specialization_preorder(FQuasiGauge::single(QuasiPseudometric::discrete("e", 3))) ==
          Relation::diagonal(3));
    CHECK(specialization_preorder(FQuasiGauge::single(QuasiPseudometric::zero("z", 2))) == Relation::full(2));
    auto expected = Relation::diagonal(2);
    expected.insert(1, 0);
    CHECK(specialization_preorder(FQuasiGauge::single(mat("du", {{0, 1}, {0, 0}}))) == expected);
  }

  TEST_CASE("T1 gives the diagonal; T0 gives an antisymmetric preorder") {
    Rng rng(19);
    for (int t = 0; t < 200; ++t) {
      const auto d = random_matrix(rng, 4);
      const auto g = FQuasiGauge::single(d);
      const auto sep = separation_class(g);
      const auto r = specialization_preorder(g);
      if (sep.t1()) CHECK(r == Relation::diagonal(4));
      for (PointIndex a = 0; a < 4; ++a)
        for (PointIndex b = 0; b < 4; ++b) {
          // reflexive
          if (a == b) CHECK(r.contains(a, b));
          if (sep.t0() && a != b) CHECK(!(r.contains(a, b) && r.contains(b, a)));
        }
      if (sep.t1()) CHECK(sep.t0());
    }
  }

  TEST_CASE("finite T1 convergence is eventual equality") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      auto d = random_matrix(rng, 4);
      for (PointIndex x = 0; x < 4; ++x)
        for (PointIndex y = 0; y < 4; ++y)
          if (x != y && d(x, y) == 0) d.at(x, y) = 1;
      const auto g = FQuasiGauge::single(d);
      PointList seq;
      for (int i = 0; i < 8; ++i) seq.push_back(rng.below(4));
      for (PointIndex x = 0; x < 4; ++x) {
        const bool tail_is_x = seq.back() == x;
        CHECK(converges_to(seq, x, g).holds == tail_is_x);
      }
    }
  }

  TEST_CASE("semicontinuity: phi(x) = x, -1 off the nonnegatives") {
    const auto& e = catalog::entry("example-a-phi");
    const auto space = CountableSpace::of(e);
    const auto r = classify_semicontinuity(space, *e.objective, e.sequence("neg-inv-n"), q(0));
    CHECK(r.converges);
    CHECK(r.value_at_limit == ExtendedRational(q(0)));
    CHECK(r.limit_value == q(-1));
    CHECK(r.nonincreasing);
    CHECK(!r.strictly_decreasing);
    CHECK(!r.inequality_holds);
    CHECK(!r.decreasingly_lsc);
    CHECK(!r.lsc);
  }

  TEST_CASE("semicontinuity: phi1 is decreasingly lsc along 1/n") {
    const auto& e = catalog::entry("example-a-phi1");
    const auto space = CountableSpace::of(e);
    // phi1 = 1 on (-inf, 0]: the sequence -1/n is phi1-constant at 1 = phi1(0)
    const auto r = classify_semicontinuity(space, *e.objective, e.sequence("neg-inv-n"), q(0));
    CHECK(r.nonincreasing);
    CHECK(r.limit_value == q(1));
    CHECK(r.inequality_holds);
    CHECK(r.decreasingly_lsc);
  }

  TEST_CASE("semicontinuity: Dirichlet on rational points is vacuous") {
    const auto& e = catalog::entry("dirichlet");
    const auto space = CountableSpace::of(e);
    for (const auto& seq : e.sequences) {
      const auto r = classify_semicontinuity(space, *e.objective, seq, seq.center);
      CHECK(!r.strictly_decreasing);
      CHECK(r.strict_decreasingly_lsc);
    }
  }

  TEST_CASE("d(., y) is lsc along convergent prefixes") {
    // on a finite T1 space convergence is eventual equality, so d(x_n, y) = d(x, y) eventually
    Rng rng(29);
    for (int t = 0; t < 50; ++t) {
      auto d = QuasiPseudometric::discrete("e", 4);
      const auto g = FQuasiGauge::single(d);
      PointList seq;
      for (int i = 0; i < 5; ++i) seq.push_back(rng.below(4));
      for (int i = 0; i < 5; ++i) seq.push_back(seq.back());
      const auto x = seq.back();
      REQUIRE(converges_to(seq, x, g).holds);
      for (PointIndex y = 0; y < 4; ++y) CHECK(d(x, y) <= d(seq.back(), y));
    }
  }
}
