#include <doctest.h>

#include "qvar/catalog.hpp"
#include "qvar/error.hpp"
#include "qvar/iteration.hpp"
#include "support.hpp"

using namespace qvar;
using namespace qt;

namespace {

// f = (1, 1/2, 1/4, 0); d(p_j, p_i) = f(p_i) - f(p_j) for j > i, 5 upward.
FQuasiGauge halving_chain() {
  const std::vector<Rational> f{q(1), q("1/2"), q("1/4"), q(0)};
  auto d = QuasiPseudometric::zero("d", 4);
  for (PointIndex i = 0; i < 4; ++i)
    for (PointIndex j = 0; j < 4; ++j) {
      if (j > i) d.at(j, i) = f[i] - f[j];
      if (j > i) d.at(i, j) = 5;
    }
  return FQuasiGauge::single(d);
}
Objective halving_f() { return obj({q(1), q("1/2"), q("1/4"), q(0)}); }
SuccessorTable chain_rule() { return {1, 2, 3, std::nullopt}; }

}  // namespace

TEST_SUITE("arutyunov-iteration") {
  TEST_CASE("eta specs") {
    CHECK(EtaSpec::linear(q("1/2"))(q(3)) == q("3/2"));
    CHECK_THROWS_AS(EtaSpec::linear(q(1)), InvalidArgument);
    CHECK_THROWS_AS(EtaSpec::linear(q(0)), InvalidArgument);
    const auto p = EtaSpec::parse("pwl:0=0,1=1/2,2=1/2;tail=1/4");
    CHECK(p.kind() == EtaSpec::Kind::kPiecewiseLinear);
    CHECK(p(q("1/2")) == q("1/4"));
    CHECK(p(q("3/2")) == q("1/2"));
    CHECK(p(q(6)) == q("3/2"));
    CHECK(p.to_string() == "pwl:0=0,1=1/2,2=1/2;tail=1/4");
    CHECK(!p.audit().empty());
    CHECK_THROWS_AS(EtaSpec::parse("pwl:0=0,1=1;tail=0"), InvalidArgument);      // eta(1) = 1
    CHECK_THROWS_AS(EtaSpec::parse("pwl:1=0;tail=0"), InvalidArgument);          // not from the origin
    CHECK_THROWS_AS(EtaSpec::parse("pwl:0=0,1=1/2;tail=2"), InvalidArgument);    // tail overtakes t
    CHECK_THROWS_AS(EtaSpec::parse("pwl:0=0;tail=1"), InvalidArgument);
    CHECK_THROWS_AS(EtaSpec::parse("cubic:1"), InvalidArgument);
    // eta(t) < t on a grid, and eta(a) >= a only at 0
    for (long k = 1; k < 40; ++k) CHECK(p(frac(k, 4)) < frac(k, 4));
    CHECK(p(q(0)) == 0);
  }

  TEST_CASE("finite chain terminates in three steps") {
    const auto g = halving_chain();
    const auto f = halving_f();
    REQUIRE(validate_quasi_pseudometric(g.member(0), PointSet::numbered(4), TriangleMode::kStrict).valid());
    const auto r = eta_iterate(g, f, q(1), EtaSpec::linear(q("1/2")), chain_rule(), 0);
    CHECK(r.terminated);
    CHECK(r.steps == 3);
    CHECK(r.points == PointList{0, 1, 2, 3});
    CHECK(r.values == std::vector<Rational>{q(1), q("1/2"), q("1/4"), q(0)});
    CHECK(r.ok());
    // all 6 pairs, re-checked from raw data
    CHECK(r.telescoped.size() == 6);
    for (const auto& c : r.telescoped) {
      CHECK(c.lhs == q(1) * g.member(c.member)(r.points[c.n + c.k], r.points[c.n]));
      CHECK(c.rhs == r.values[c.n] - r.values[c.n + c.k]);
    }
    // gamma d(xbar, x0) <= f(x0)
    CHECK(g.member(0)(3, 0) <= f(0).value() / q(1));
  }

  TEST_CASE("zero start returns immediately") {
    const auto r = eta_iterate(halving_chain(), halving_f(), q(1), EtaSpec::linear(q("1/2")), chain_rule(), 3);
    CHECK(r.terminated);
    CHECK(r.steps == 0);
    CHECK(r.points == PointList{3});
  }

  TEST_CASE("rule audit failures") {
    const auto g = halving_chain();
    const auto f = halving_f();
    // gamma 2: f(x') + 2 d(x',x) = 1/2 + 1 > 1
    CHECK_THROWS_AS(eta_iterate(g, f, q(2), EtaSpec::linear(q("1/2")), chain_rule(), 0), HypothesisViolation);
    // eta(t) = t/4 is too tight for halving
    CHECK_THROWS_AS(eta_iterate(g, f, q(1), EtaSpec::linear(q("1/4")), chain_rule(), 0), HypothesisViolation);
    // missing successor while f > 0
    CHECK_THROWS_AS(eta_iterate(g, f, q(1), EtaSpec::linear(q("1/2")), {1, std::nullopt, 3, std::nullopt}, 0),
                    HypothesisViolation);
    // negative objective
    CHECK_THROWS_AS(eta_iterate(g, obj({q(1), q(-1), q(0), q(0)}), q(1), EtaSpec::linear(q("1/2")), chain_rule(), 0),
                    HypothesisViolation);
  }

  TEST_CASE("Gelman form on the chain matches eta form") {
    const auto g = halving_chain();
    const auto f = halving_f();
    // lambda = 1, mu = 1/2: gamma = (1 - 1/2) / 1 = 1/2
    const auto gel = gelman_reduce(g, f, q(1), q("1/2"), chain_rule(), 0);
    const auto eta = eta_iterate(g, f, q("1/2"), EtaSpec::linear(q("1/2")), chain_rule(), 0);
    CHECK(gel.gamma == q("1/2"));
    CHECK(gel.points == eta.points);
    CHECK(gel.ok());
    REQUIRE(!gel.gelman_bounds.empty());
    for (const auto& b : gel.gelman_bounds) CHECK(b.bound == q(1) * q(1) / (1 - q("1/2")));
    CHECK_THROWS_AS(gelman_reduce(g, f, q(1), q(1), chain_rule(), 0), InvalidArgument);
    // lambda too small: d(p3,p2) = 1/4 > (1/2) f(p2)
    CHECK_THROWS_AS(gelman_reduce(g, f, q("1/2"), q("1/2"), chain_rule(), 0), HypothesisViolation);
    CHECK_THROWS_AS(gelman_reduce(g, f, q("1/4"), q("1/2"), chain_rule(), 0), HypothesisViolation);
  }

  TEST_CASE("Gelman reduction identity") {
    // (1-mu)(d - lam f) + lam (fy - mu f) = lam (fy + gamma d - f), gamma = (1-mu)/lam
    Rng rng(211);
    for (int t = 0; t < 200; ++t) {
      const Rational lam = frac(rng.between(1, 9), rng.between(1, 4));
      const Rational mu = frac(rng.between(1, 7), 8);
      const Rational d = frac(rng.between(0, 20), 3), f = frac(rng.between(0, 20), 5), fy = frac(rng.between(0, 20), 7);
      const Rational gamma = (1 - mu) / lam;
      CHECK((1 - mu) * (d - lam * f) + lam * (fy - mu * f) == lam * (fy + gamma * d - f));
    }
  }

  TEST_CASE("catalog halving") {
    const auto& e = catalog::entry("gelman-halving");
    const auto r = eta_iterate(e, q("1/2"), EtaSpec::linear(q("1/2")), std::nullopt, 30);
    CHECK(!r.terminated);
    CHECK(r.steps == 30);
    CHECK(r.nonincreasing);
    CHECK(r.strictly_decreasing);
    for (std::size_t k = 0; k < r.positions.size(); ++k) CHECK(r.positions[k] == frac(1, 1L << k));
    CHECK(r.limit == std::optional<std::string>("0"));
    CHECK(r.ok());
    const auto gel = gelman_reduce(e, 30);
    CHECK(gel.positions == r.positions);
    for (const auto& b : gel.gelman_bounds) CHECK(b.bound == 2 * r.values[b.k]);
  }

  TEST_CASE("closed-graph residual") {
    const auto& e = catalog::entry("closed-graph-residual");
    const auto f = residual_objective(e);
    // f(x) = x - x^2 on [0,1]
    for (long k = 0; k <= 8; ++k) {
      const Rational x = frac(k, 8);
      CHECK(f(x) == ExtendedRational(x - x * x));
    }
    CHECK(f(q(2)).is_infinite());
    const auto on = residual_on_points(f, {q(0), q("1/2"), q(1), q(3)});
    CHECK(on(0) == ExtendedRational(q(0)));
    CHECK(on(2) == ExtendedRational(q(0)));
    CHECK(on(3).is_infinite());
    for (const auto& c : closed_graph_checks(e)) CHECK(c.holds);
    // x_n = 1/n: f(x_n) = 1/n - 1/n^2 -> 0 and f(0) = 0
    for (long n = 1; n < 30; ++n) CHECK(f(frac(1, n)) == ExtendedRational(frac(1, n) - frac(1, n * n)));
  }

  TEST_CASE("random chains: telescoped bound from raw data") {
    Rng rng(223);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng.below(6);
      // f strictly decreasing to 0 along p0..p_{n-1}, d(p_j,p_i) = f(p_i) - f(p_j) scaled by 1/gamma
      std::vector<Rational> fv(n);
      fv[n - 1] = 0;
      for (std::size_t i = n - 1; i-- > 0;) fv[i] = fv[i + 1] + frac(rng.between(1, 5), rng.between(1, 3));
      const Rational gamma = frac(rng.between(1, 4), 2);
      auto d = QuasiPseudometric::zero("d", n);
      for (PointIndex i = 0; i < n; ++i)
        for (PointIndex j = i + 1; j < n; ++j) {
          d.at(j, i) = (fv[i] - fv[j]) / gamma;
          d.at(i, j) = 100;
        }
      std::vector<ExtendedRational> ev(fv.begin(), fv.end());
      const auto f = obj(ev);
      SuccessorTable rule(n);
      for (PointIndex i = 0; i + 1 < n; ++i) rule[i] = i + 1;
      // the largest ratio f(x')/f(x) along the chain is a valid linear eta
      Rational mu = q("1/2");
      for (PointIndex i = 0; i + 2 < n; ++i) mu = std::max(mu, Rational(fv[i + 1] / fv[i]));
      const auto r = eta_iterate(FQuasiGauge::single(d), f, gamma, EtaSpec::linear(mu), rule, 0);
      CHECK(r.terminated);
      CHECK(r.steps == n - 1);
      for (const auto& c : r.telescoped) CHECK(c.holds());
      CHECK(gamma * d(n - 1, 0) <= fv[0]);
    }
  }
}
