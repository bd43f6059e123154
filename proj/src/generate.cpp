#include "qvar/generate.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "qvar/error.hpp"
#include "qvar/oracle.hpp"
#include "qvar/principles.hpp"
#include "qvar/random.hpp"

namespace qvar {

const char* to_string(Profile p) {
  switch (p) {
    case Profile::kT1:
      return "T1";
    case Profile::kT0NotT1:
      return "T0-not-T1";
    case Profile::kChain:
      return "chain";
    case Profile::kTakahashiValid:
      return "takahashi-valid";
    case Profile::kCaristiValid:
      return "caristi-valid";
  }
  return "T1";
}

Profile parse_profile(const std::string& text) {
  for (auto p : {Profile::kT1, Profile::kT0NotT1, Profile::kChain, Profile::kTakahashiValid, Profile::kCaristiValid})
    if (text == to_string(p)) return p;
  throw InvalidArgument("unknown profile '" + text + "'");
}

namespace {

Rational random_weight(Rng& rng) { return Rational(rng.between(1, 9), rng.between(1, 3)); }

// Shortest-path closure of a weight matrix (Floyd–Warshall), exact.
void close_paths(std::vector<Rational>& w, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational via = w[i * n + k] + w[k * n + j];
        if (via < w[i * n + j]) w[i * n + j] = via;
      }
}

// Top member: positive weights everywhere (T1), or with some zero weights
// from higher to lower index (T0, and not T1 via the forced edge 1 → 0).
QuasiPseudometric top_member(Rng& rng, std::size_t n, bool t0_only, const std::string& name) {
  std::vector<Rational> w(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      w[i * n + j] = t0_only && i > j && (rng.chance(1, 3) || (i == 1 && j == 0)) ? Rational(0) : random_weight(rng);
    }
  close_paths(w, n);
  return QuasiPseudometric(name, n, std::move(w));
}

FQuasiGauge random_gauge(Rng& rng, std::size_t n, std::size_t k, bool t0_only) {
  const auto top = top_member(rng, n, t0_only, "d" + std::to_string(k - 1));
  std::vector<QuasiPseudometric> members;
  for (std::size_t m = 0; m + 1 < k; ++m) {
    std::vector<Rational> v(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) v[i * n + j] = top(i, j) * Rational(rng.between(0, 4), 4);
    members.emplace_back("d" + std::to_string(m), n, std::move(v));
  }
  members.push_back(top);
  return FQuasiGauge(std::move(members), std::vector<std::size_t>(k, k - 1));
}

ExtendedRational random_value(Rng& rng) { return ExtendedRational(Rational(rng.between(0, 20), rng.between(1, 4))); }

Objective random_objective(Rng& rng, std::size_t n) {
  std::vector<ExtendedRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.chance(1, 8) ? ExtendedRational::infinity() : random_value(rng));
  if (std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_infinite(); })) v[rng.below(n)] = random_value(rng);
  return Objective("f", std::move(v));
}

// Every non-root point hangs below a parent y with f(y) + top(y,x) <= f(x),
// so the Takahashi hypothesis holds for every member below the top.
Objective takahashi_objective(Rng& rng, const FQuasiGauge& gauge) {
  const std::size_t n = gauge.points();
  const auto& top = gauge.member(gauge.size() - 1);
  PointList order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<ExtendedRational> v(n);
  const Rational alpha(rng.between(0, 3));
  v[order[0]] = alpha;
  for (std::size_t i = 1; i < n; ++i) {
    const PointIndex x = order[i];
    if (rng.chance(1, 8)) {
      v[x] = ExtendedRational::infinity();
      continue;
    }
    PointIndex parent = order[0];
    for (std::size_t tries = 0; tries < 4; ++tries) {
      const PointIndex cand = order[rng.below(i)];
      if (v[cand].is_finite()) {
        parent = cand;
        break;
      }
    }
    v[x] = ExtendedRational(Rational(v[parent].value() + top(parent, x) + Rational(rng.between(0, 3), 2)));
  }
  return Objective("f", std::move(v));
}

SetValuedMap caristi_map(Rng& rng, const FQuasiGauge& gauge, const Objective& f) {
  const PhiOrder order(gauge, f);
  const std::size_t n = gauge.points();
  std::vector<PointList> images;
  for (PointIndex x = 0; x < n; ++x) {
    const auto s = order.lower_section(x);
    PointList img{s[rng.below(s.size())]};
    const std::size_t extras = rng.below(3);
    for (std::size_t e = 0; e < extras; ++e) img.push_back(rng.below(n));
    images.push_back(std::move(img));
  }
  return SetValuedMap("F", std::move(images));
}

FQuasiGauge chain_gauge(std::size_t n, std::size_t k) {
  // d(p_j, p_i) = j - i below, 10 above; member m is (m+1)/k of it.
  std::vector<QuasiPseudometric> members;
  for (std::size_t m = 0; m < k; ++m) {
    const Rational c(static_cast<long>(m + 1), static_cast<long>(k));
    std::vector<Rational> v(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i > j) v[i * n + j] = c * Rational(static_cast<long>(i - j));
        if (i < j) v[i * n + j] = c * 10;
      }
    members.emplace_back(k == 1 ? std::string("d") : "d" + std::to_string(m), n, std::move(v));
  }
  return FQuasiGauge(std::move(members), std::vector<std::size_t>(k, k - 1));
}

void post_check(const Instance& inst, Profile profile) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error(std::string("generated ") + to_string(profile) + " instance fails: " + what);
  };
  if (!validate_f_quasi_gauge(inst.gauge).valid()) fail("gauge axioms");
  const auto sep = separation_class(inst.gauge);
  if (profile == Profile::kT0NotT1) {
    if (!sep.t0() || sep.t1()) fail("separation T0-not-T1");
  } else if (!sep.t1()) {
    fail("separation T1");
  }
  const auto& f = inst.objectives.front();
  if (!f.proper()) fail("proper objective");
  if (profile == Profile::kTakahashiValid || profile == Profile::kChain) audit_takahashi(inst.gauge, f);
  if (profile == Profile::kCaristiValid) audit_caristi(inst.gauge, f, inst.maps.front(), CaristiVariant::kWeak);
}

}  // namespace

Instance generate_instance(const GenerateOptions& opt) {
  if (opt.n < 1) throw InvalidArgument("n must be at least 1");
  if (opt.gauge_size < 1) throw InvalidArgument("gauge size must be at least 1");
  if (opt.profile == Profile::kT0NotT1 && opt.n < 2) {
    throw InvalidArgument("T0-not-T1 needs two points; every one-point space is T1");
  }
  Rng rng(opt.seed);
  Instance inst;
  inst.points = PointSet::numbered(opt.n);
  switch (opt.profile) {
    case Profile::kChain: {
      inst.gauge = chain_gauge(opt.n, opt.gauge_size);
      std::vector<ExtendedRational> v;
      for (std::size_t i = 0; i < opt.n; ++i) v.emplace_back(static_cast<long>(opt.n - 1 - i));
      inst.objectives.emplace_back("f", std::move(v));
      break;
    }
    case Profile::kT1:
    case Profile::kT0NotT1:
      inst.gauge = random_gauge(rng, opt.n, opt.gauge_size, opt.profile == Profile::kT0NotT1);
      inst.objectives.push_back(random_objective(rng, opt.n));
      break;
    case Profile::kTakahashiValid:
      inst.gauge = random_gauge(rng, opt.n, opt.gauge_size, false);
      inst.objectives.push_back(takahashi_objective(rng, inst.gauge));
      break;
    case Profile::kCaristiValid:
      inst.gauge = random_gauge(rng, opt.n, opt.gauge_size, false);
      inst.objectives.push_back(random_objective(rng, opt.n));
      inst.maps.push_back(caristi_map(rng, inst.gauge, inst.objectives.front()));
      break;
  }
  post_check(inst, opt.profile);
  return inst;
}

int SuiteReport::exit_code() const {
  if (failed > 0) return 1;
  if (solved == 0 && refused > 0) return 2;
  return 0;
}

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kVerified:
      return "verified";
    case Outcome::kRefused:
      return "refused";
    case Outcome::kFailed:
      return "FAILED";
  }
  return "FAILED";
}

bool member_of(const PointList& list, PointIndex z) { return std::find(list.begin(), list.end(), z) != list.end(); }

// One solver on one instance, checked by the oracle.
SuiteRecord run_one(const Instance& inst, Principle p, PointIndex x0) {
  SuiteRecord rec;
  rec.principle = p;
  rec.start = inst.points.name(x0);
  const auto& gauge = inst.gauge;
  const auto& f = inst.objectives.front();
  try {
    Certificate cert;
    PointList expected;
    oracle::CertificateContext ctx{&gauge, &f, nullptr, nullptr};
    std::optional<SetValuedMap> lower;
    std::optional<Bivariate> F;
    switch (p) {
      case Principle::kEkeland:
        cert = ekeland_point(gauge, f, x0);
        expected = oracle::enumerate_ekeland(gauge, f, x0);
        break;
      case Principle::kEkelandScaled: {
        const std::vector<Rational> xi(gauge.size(), Rational(1));
        cert = ekeland_scaled(gauge, f, x0, ScalingSpec{std::nullopt, xi});
        expected = oracle::enumerate_ekeland(scaled_gauge(gauge, *cert.epsilon, xi), f, x0);
        break;
      }
      case Principle::kCaristi: {
        if (!inst.maps.empty()) {
          ctx.map = &inst.maps.front();
          cert = caristi_fixed_point(gauge, f, inst.maps.front(), CaristiVariant::kWeak, x0);
          expected = oracle::enumerate_caristi_fixed(inst.maps.front(), CaristiVariant::kWeak);
        } else {
          require_t1(gauge);
          const PhiOrder order(gauge, f);
          std::vector<PointList> sections;
          for (PointIndex x = 0; x < f.size(); ++x) sections.push_back(order.lower_section(x));
          lower.emplace("S", std::move(sections));
          ctx.map = &*lower;
          cert = caristi_fixed_point(gauge, f, *lower, CaristiVariant::kStrong, x0);
          expected = oracle::enumerate_caristi_fixed(*lower, CaristiVariant::kStrong);
        }
        break;
      }
      case Principle::kTakahashi:
        cert = takahashi_minimize(gauge, f, x0);
        expected = oracle::enumerate_takahashi(f);
        break;
      case Principle::kArutyunov:
        cert = arutyunov_minimize(gauge, f, Rational(1), x0);
        expected = oracle::enumerate_takahashi(f);
        break;
      case Principle::kOettliThera: {
        try {
          F.emplace(Bivariate::from_objective(f));
        } catch (const InvalidArgument& e) {
          rec.outcome = Outcome::kRefused;
          rec.detail = std::string("construction-not-applicable: ") + e.what();
          return rec;
        }
        ctx.objective = nullptr;
        ctx.bivariate = &*F;
        cert = oettli_thera(gauge, *F, x0);
        expected = oracle::enumerate_oettli_thera(gauge, *F, x0);
        break;
      }
    }
    rec.point = inst.points.name(cert.point);
    const auto v = oracle::verify_certificate(ctx, cert);
    if (!v.pass) {
      rec.outcome = Outcome::kFailed;
      rec.detail = v.failures.front();
    } else if (!member_of(expected, cert.point)) {
      rec.outcome = Outcome::kFailed;
      rec.detail = "certified point missing from the oracle enumeration";
    } else {
      rec.outcome = Outcome::kVerified;
      rec.detail = std::to_string(v.inequalities) + " inequalities";
    }
  } catch (const HypothesisViolation& e) {
    rec.outcome = Outcome::kRefused;
    rec.detail = e.what();
  } catch (const std::exception& e) {
    rec.outcome = Outcome::kFailed;
    rec.detail = e.what();
  }
  return rec;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.options = opt;
  if (opt.principles.empty() || opt.count == 0) return report;
  if (opt.max_n < 1 || opt.max_gauge < 1) throw InvalidArgument("max n and max gauge size must be positive");

  // Per-instance parameters are drawn serially so that they do not depend on
  // the thread count.
  struct Plan {
    GenerateOptions gen;
  };
  std::vector<Plan> plans;
  Rng rng(opt.seed);
  const std::size_t min_n = opt.profile == Profile::kT0NotT1 ? 2 : 1;
  if (opt.max_n < min_n) throw InvalidArgument("max n too small for the profile");
  for (std::size_t i = 0; i < opt.count; ++i) {
    GenerateOptions g;
    g.seed = rng.below(UINT64_MAX);
    g.n = min_n + rng.below(opt.max_n - min_n + 1);
    g.gauge_size = 1 + rng.below(opt.max_gauge);
    g.profile = opt.profile;
    plans.push_back({g});
  }

  std::vector<std::vector<SuiteRecord>> results(plans.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < plans.size();) {
      const auto& g = plans[i].gen;
      Instance inst;
      try {
        inst = generate_instance(g);
      } catch (const std::exception& e) {
        SuiteRecord rec;
        rec.index = i;
        rec.seed = g.seed;
        rec.n = g.n;
        rec.gauge = g.gauge_size;
        rec.outcome = Outcome::kFailed;
        rec.detail = std::string("generation: ") + e.what();
        results[i].push_back(std::move(rec));
        continue;
      }
      const auto& f = inst.objectives.front();
      PointList dom;
      for (PointIndex x = 0; x < f.size(); ++x)
        if (f.in_domain(x)) dom.push_back(x);
      Rng pick(g.seed ^ 0x9e3779b97f4a7c15ULL);
      const PointIndex x0 = dom[pick.below(dom.size())];
      for (auto p : opt.principles) {
        auto rec = run_one(inst, p, x0);
        rec.index = i;
        rec.seed = g.seed;
        rec.n = g.n;
        rec.gauge = g.gauge_size;
        results[i].push_back(std::move(rec));
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, plans.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& batch : results)
    for (auto& rec : batch) {
      if (rec.outcome == Outcome::kRefused) {
        ++report.refused;
      } else {
        ++report.solved;
        if (rec.outcome == Outcome::kVerified) ++report.verified;
        else ++report.failed;
      }
      report.records.push_back(std::move(rec));
    }
  return report;
}

Json SuiteReport::to_json() const {
  Json principles = Json::array();
  for (auto p : options.principles) principles.push_back(qvar::to_string(p));
  Json records_json = Json::array();
  for (const auto& r : records) {
    records_json.push_back({{"index", r.index},
                            {"seed", r.seed},
                            {"n", r.n},
                            {"gauge", r.gauge},
                            {"principle", qvar::to_string(r.principle)},
                            {"outcome", outcome_name(r.outcome)},
                            {"start", r.start},
                            {"point", r.point},
                            {"detail", r.detail}});
  }
  return {{"profile", qvar::to_string(options.profile)},
          {"count", options.count},
          {"seed", options.seed},
          {"principles", principles},
          {"summary", {{"solved", solved}, {"refused", refused}, {"verified", verified}, {"FAILED", failed}}},
          {"records", records_json}};
}

std::string SuiteReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(16) << "principle" << std::right << std::setw(8) << "solved" << std::setw(9)
     << "refused" << std::setw(10) << "verified" << std::setw(8) << "FAILED" << "\n";
  for (auto p : options.principles) {
    std::size_t s = 0, r = 0, v = 0, f = 0;
    for (const auto& rec : records) {
      if (rec.principle != p) continue;
      if (rec.outcome == Outcome::kRefused) ++r;
      else ++s;
      if (rec.outcome == Outcome::kVerified) ++v;
      if (rec.outcome == Outcome::kFailed) ++f;
    }
    os << std::left << std::setw(16) << qvar::to_string(p) << std::right << std::setw(8) << s << std::setw(9) << r
       << std::setw(10) << v << std::setw(8) << f << "\n";
  }
  os << std::left << std::setw(16) << "total" << std::right << std::setw(8) << solved << std::setw(9) << refused
     << std::setw(10) << verified << std::setw(8) << failed << "\n";
  return os.str();
}

}  // namespace qvar
