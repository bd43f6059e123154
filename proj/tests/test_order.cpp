#include <doctest.h>

#include "qvar/error.hpp"
#include "qvar/order.hpp"
#include "support.hpp"

using namespace qvar;
using namespace qt;

namespace {

// points a = 0, b = 1; d(b,a) = 1, d(a,b) = 3; phi(a) = 2, phi(b) = 1
FQuasiGauge two_point() { return FQuasiGauge::single(mat("d", {{0, 3}, {1, 0}})); }
Objective two_phi() { return obj({q(2), q(1)}, "phi"); }

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("two-point example") {
    const auto g = two_point();
    const auto phi = two_phi();
    const PhiOrder order(g, phi);
    // leq(x, y) unfolds to phi(y) + d(y,x) <= phi(x)
    CHECK(order.leq(0, 1));   // 1 + 1 <= 2
    CHECK(!order.leq(1, 0));  // 2 + 3 <= 1 fails
    CHECK(order.leq(0, 0));
    CHECK(order.lower_section(0) == PointList{0, 1});
    CHECK(order.lower_section(1) == PointList{1});
    const auto m = minimal_element(order, 0);
    CHECK(m.minimal == 1);
    const auto still = minimal_element(order, 1);
    CHECK(still.minimal == 1);
    CHECK(still.trace.empty());
  }

  TEST_CASE("infinite phi absorbs") {
    const auto g = two_point();
    const auto phi = obj({inf(), q(5)});
    const PhiOrder order(g, phi);
    CHECK(order.leq(0, 1));
    CHECK(order.leq(0, 0));
    CHECK(!order.leq(1, 0));
  }

  TEST_CASE("constant phi with positive distances gives singleton sections") {
    const auto g = FQuasiGauge::single(QuasiPseudometric::discrete("e", 4));
    const auto phi = obj({q(3), q(3), q(3), q(3)});
    const PhiOrder order(g, phi);
    for (PointIndex x = 0; x < 4; ++x) CHECK(order.lower_section(x) == PointList{x});
  }

  TEST_CASE("order invariants on random instances") {
    Rng rng(41);
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = 2 + rng.below(4);
      const auto d = random_quasi_pseudometric(rng, n);
      const auto g = FQuasiGauge::single(d);
      std::vector<ExtendedRational> v;
      for (std::size_t i = 0; i < n; ++i)
        v.push_back(rng.chance(1, 6) ? inf() : ExtendedRational(frac(rng.between(0, 12), 2)));
      const auto phi = obj(v);
      const PhiOrder order(g, phi);
      const auto sep = separation_class(g);
      for (PointIndex x = 0; x < n; ++x)
        for (PointIndex y = 0; y < n; ++y) {
          CHECK(order.leq(x, y) == ref_below(g, phi, y, x));
          if (order.leq(x, y) && order.leq(y, x) && sep.t0() && phi(x).is_finite()) CHECK(x == y);
          if (order.leq(x, y) && x != y && sep.t1() && phi(x).is_finite()) CHECK(phi(y) < phi(x));
          for (PointIndex z = 0; z < n; ++z)
            if (order.leq(x, y) && order.leq(y, z)) CHECK(order.leq(x, z));
        }
      for (PointIndex x = 0; x < n; ++x) {
        const auto s = order.lower_section(x);
        CHECK(std::find(s.begin(), s.end(), x) != s.end());
        if (phi(x).is_finite())
          for (auto y : s) CHECK(phi(y).is_finite());
      }
      if (sep.t1() && phi.proper()) {
        for (PointIndex x = 0; x < n; ++x) {
          if (!phi(x).is_finite()) continue;
          const auto m = minimal_element(order, x);
          CHECK(order.leq(x, m.minimal));
          CHECK(order.lower_section(m.minimal) == PointList{m.minimal});
          PointList chain{x};
          chain.insert(chain.end(), m.trace.begin(), m.trace.end());
          CHECK(chain.back() == m.minimal);
          for (std::size_t i = 1; i < chain.size(); ++i) CHECK(phi(chain[i]) < phi(chain[i - 1]));
        }
      }
    }
  }

  TEST_CASE("descent refuses without its hypotheses") {
    const auto z = FQuasiGauge::single(QuasiPseudometric::zero("z", 2));
    const auto phi = obj({q(1), q(0)});
    CHECK_THROWS_AS(minimal_element(PhiOrder(z, phi), 0), HypothesisViolation);
    const auto g = two_point();
    const auto bad = obj({inf(), inf()});
    CHECK_THROWS_AS(minimal_element(PhiOrder(g, bad), 0), HypothesisViolation);
    const auto partial = obj({inf(), q(1)});
    CHECK_THROWS_AS(minimal_element(PhiOrder(g, partial), 0), HypothesisViolation);
  }
}
