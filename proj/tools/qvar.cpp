// qvar: command-line front end for the quasi-uniform variational toolkit.
//
// Exit codes: 0 success, 2 a hypothesis was refused, 1 a check or
// verification failed (or the input was unusable).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "qvar/catalog.hpp"
#include "qvar/error.hpp"
#include "qvar/generate.hpp"
#include "qvar/io.hpp"
#include "qvar/iteration.hpp"
#include "qvar/oracle.hpp"
#include "qvar/principles.hpp"
#include "qvar/relation.hpp"
#include "qvar/topology.hpp"

namespace fs = std::filesystem;
using namespace qvar;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kRefused = 2;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("QVAR_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("QVAR_SEED is not an unsigned integer: '") + s + "'");
    }
  }
  return 1;
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << dump(j);
  } else {
    save_json(out, j);
  }
}

std::string names_of(const PointList& pts, const PointSet& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + set.name(pts[i]);
  return s + "}";
}

Json point_names(const PointList& pts, const PointSet& set) {
  Json out = Json::array();
  for (auto p : pts) out.push_back(set.name(p));
  return out;
}

const Instance& require_finite(const Instance& inst) {
  if (!inst.finite()) throw InvalidArgument("this command needs a finite instance");
  return inst;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string instance, mode = "strict", compat, out;
};

int cmd_validate(const ValidateArgs& a) {
  const auto inst = load_instance(a.instance);
  if (!inst.finite()) {
    const auto& entry = catalog::entry(inst.countable->catalog);
    Json members = Json::array();
    for (const auto& m : inst.countable->gauge) {
      const auto& d = catalog::distance(m.catalog);
      members.push_back({{"name", m.name}, {"catalog", d.id}, {"formula", d.formula}, {"certificate", d.certificate}});
    }
    emit({{"kind", "countable"}, {"catalog", entry.id}, {"description", entry.description}, {"members", members}},
         a.out);
    return kOk;
  }
  if (a.mode != "strict" && a.mode != "gauge-relaxed") throw InvalidArgument("--mode is strict or gauge-relaxed");
  const auto mode = a.mode == "strict" ? TriangleMode::kStrict : TriangleMode::kGaugeRelaxed;
  const auto& names = inst.points.names();
  bool ok = true;
  Json members = Json::array();
  for (const auto& d : inst.gauge.members()) {
    const auto r = validate_quasi_pseudometric(d, inst.points, mode);
    auto j = to_json(r, names);
    j["name"] = d.name();
    j["quasi_metric"] = r.quasi_metric;
    members.push_back(j);
  }
  const auto gauge_report = validate_f_quasi_gauge(inst.gauge);
  ok = gauge_report.valid();
  std::vector<std::string> member_names;
  for (const auto& d : inst.gauge.members()) member_names.push_back(d.name());
  // QF1 witnesses are member indices; the rest are points.
  Json gauge_json = to_json(gauge_report, names);
  for (std::size_t i = 0; i < gauge_report.violations.size(); ++i) {
    if (gauge_report.violations[i].axiom != "QF1") continue;
    Json w = Json::array();
    for (auto m : gauge_report.violations[i].witness) w.push_back(member_names.at(m));
    gauge_json["violations"][i]["witness"] = w;
  }
  const auto sep = separation_class(inst.gauge);
  Json sep_json{{"class", to_string(sep.value)}};
  if (sep.t1_witness) sep_json["t1_witness"] = {names[sep.t1_witness->first], names[sep.t1_witness->second]};
  if (sep.t0_witness) sep_json["t0_witness"] = {names[sep.t0_witness->first], names[sep.t0_witness->second]};
  Json j{{"kind", "finite"}, {"members", members}, {"gauge", gauge_json}, {"separation", sep_json}};
  if (ok) {
    const auto basis = gauge_basis(inst.gauge);
    j["basis"] = to_json(validate_basis(basis, inst.gauge), names);
    j["basis"]["generators"] = basis.generators.size();
  }
  if (!a.compat.empty()) {
    const auto idx = inst.gauge.find(a.compat);
    if (!idx) throw InvalidArgument("unknown gauge member '" + a.compat + "'");
    j["compatible"] = gauge_compatibility(inst.gauge.member(*idx), inst.gauge);
  }
  emit(j, a.out);
  return ok ? kOk : kFailed;
}

// -------------------------------------------------------------------- topo

struct TopoArgs {
  std::string instance, catalog, op, sequence, point, candidates, out;
};

Json verdict_json(const Verdict& v) {
  Json j{{"verdict", v.label()}, {"exact", v.exact}, {"holds", v.holds}};
  if (v.exact) {
    j["certificate"] = v.certificate;
  } else {
    Json steps = Json::array();
    for (const auto& s : v.schedule) {
      steps.push_back({{"epsilon", to_json(s.epsilon)}, {"first_index", s.first_index ? Json(*s.first_index) : Json()}});
    }
    j["schedule"] = steps;
    if (v.zero_from) j["zero_from"] = *v.zero_from;
  }
  return j;
}

int topo_countable(const TopoArgs& a, const catalog::CatalogEntry& entry, const CountableSpace& space) {
  Json j{{"catalog", entry.id}, {"op", a.op}};
  const auto seq_id = a.sequence.empty() ? entry.sequences.front().id : a.sequence;
  std::vector<Rational> candidates;
  for (const auto& c : split(a.candidates)) candidates.push_back(parse_rational(c));
  if (candidates.empty()) candidates = entry.limits;
  if (a.op == "converges") {
    const auto& seq = entry.sequence(seq_id);
    if (a.point.empty()) throw InvalidArgument("--point is required");
    j["sequence"] = seq.id;
    j["point"] = a.point;
    j.update(verdict_json(converges_to(space, seq, parse_rational(a.point))));
  } else if (a.op == "limits") {
    const auto& seq = entry.sequence(seq_id);
    Json cands = Json::array(), lims = Json::array();
    for (const auto& c : candidates) cands.push_back(to_json(c));
    for (const auto& l : limit_set(space, seq, candidates)) lims.push_back(to_json(l));
    j["sequence"] = seq.id;
    j["candidates"] = cands;
    j["limits"] = lims;
  } else if (a.op == "cauchy-left" || a.op == "cauchy-right") {
    const auto& seq = entry.sequence(seq_id);
    j["sequence"] = seq.id;
    j.update(verdict_json(a.op == "cauchy-left" ? is_left_k_cauchy(space, seq) : is_right_k_cauchy(space, seq)));
  } else if (a.op == "classify") {
    const auto& seq = entry.sequence(seq_id);
    if (!entry.objective) throw InvalidArgument("catalog entry '" + entry.id + "' has no objective");
    if (a.point.empty()) throw InvalidArgument("--point is required");
    const auto r = classify_semicontinuity(space, *entry.objective, seq, parse_rational(a.point));
    j["sequence"] = seq.id;
    j["objective"] = entry.objective->formula;
    j["point"] = to_json(r.limit_point);
    j["value_at_limit"] = to_json(r.value_at_limit);
    j["limit_value"] = to_json(r.limit_value);
    j["sequence_strictly_decreasing"] = r.strictly_decreasing;
    j["sequence_nonincreasing"] = r.nonincreasing;
    j["sequence_pairwise_distinct"] = r.pairwise_distinct;
    j["inequality_holds"] = r.inequality_holds;
    j["classes"] = {{"lsc", r.lsc},
                    {"decreasingly-lsc", r.decreasingly_lsc},
                    {"strict-decreasingly-lsc", r.strict_decreasingly_lsc},
                    {"nearly-lsc", r.nearly_lsc}};
    j["certificates"] = r.certificates;
  } else {
    throw InvalidArgument("op '" + a.op + "' is not available on countable instances");
  }
  emit(j, a.out);
  return kOk;
}

int cmd_topo(const TopoArgs& a) {
  if (!a.catalog.empty()) {
    const auto& entry = catalog::entry(a.catalog);
    return topo_countable(a, entry, CountableSpace::of(entry));
  }
  const auto inst = load_instance(a.instance);
  if (!inst.finite()) {
    const auto& entry = catalog::entry(inst.countable->catalog);
    CountableSpace space{&entry, {}};
    for (const auto& m : inst.countable->gauge) space.gauge.push_back(&catalog::distance(m.catalog));
    return topo_countable(a, entry, space);
  }
  const auto& pts = inst.points;
  Json j{{"op", a.op}};
  PointList seq;
  for (const auto& s : split(a.sequence)) seq.push_back(pts.index_of(s));
  PointList candidates;
  for (const auto& c : split(a.candidates)) candidates.push_back(pts.index_of(c));
  if (candidates.empty())
    for (PointIndex i = 0; i < pts.size(); ++i) candidates.push_back(i);
  if (a.op == "separation") {
    const auto sep = separation_class(inst.gauge);
    j["class"] = to_string(sep.value);
    if (sep.t1_witness) j["t1_witness"] = {pts.name(sep.t1_witness->first), pts.name(sep.t1_witness->second)};
    if (sep.t0_witness) j["t0_witness"] = {pts.name(sep.t0_witness->first), pts.name(sep.t0_witness->second)};
  } else if (a.op == "specialization") {
    const auto r = specialization_preorder(inst.gauge);
    Json pairs = Json::array();
    for (PointIndex s = 0; s < pts.size(); ++s)
      for (PointIndex t = 0; t < pts.size(); ++t)
        if (r.contains(s, t)) pairs.push_back({pts.name(s), pts.name(t)});
    j["pairs"] = pairs;
    j["equality"] = r == Relation::diagonal(pts.size());
  } else if (a.op == "converges") {
    if (a.point.empty()) throw InvalidArgument("--point is required");
    j["point"] = a.point;
    j.update(verdict_json(converges_to(seq, pts.index_of(a.point), inst.gauge)));
  } else if (a.op == "limits") {
    j["limits"] = point_names(limit_set(seq, inst.gauge, candidates), pts);
    j["verdict"] = "consistent-up-to-" + std::to_string(seq.size());
  } else if (a.op == "cauchy-left") {
    j.update(verdict_json(is_left_k_cauchy(seq, inst.gauge)));
  } else if (a.op == "cauchy-right") {
    j.update(verdict_json(is_right_k_cauchy(seq, inst.gauge)));
  } else {
    throw InvalidArgument("unknown op '" + a.op +
                          "' (separation, specialization, converges, limits, cauchy-left, cauchy-right, classify)");
  }
  emit(j, a.out);
  return kOk;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  std::string principle, instance, objective, start, gamma, epsilon, xi, variant = "weak", map, bivariate, direction,
      out;
};

std::optional<PointIndex> start_of(const SolveArgs& a, const Instance& inst) {
  if (a.start.empty()) return std::nullopt;
  return inst.points.index_of(a.start);
}

PointIndex required_start(const SolveArgs& a, const Instance& inst) {
  if (a.start.empty()) throw InvalidArgument("--start is required");
  return inst.points.index_of(a.start);
}

const Objective& objective_arg(const std::string& name, const Instance& inst) {
  if (!name.empty()) return inst.objective(name);
  if (inst.objectives.size() == 1) return inst.objectives.front();
  throw InvalidArgument("--objective is required");
}

int solve_equivalence(const SolveArgs& a, const Instance& inst) {
  if (a.direction.empty()) throw InvalidArgument("--direction is required");
  EquivalenceOptions opt;
  opt.start = start_of(a, inst);
  opt.seed = default_seed();
  const auto r = equivalence_witness(parse_direction(a.direction), inst.gauge, objective_arg(a.objective, inst), opt);
  emit(to_json(r, inst), a.out);
  if (!r.applicable) return kRefused;
  return r.confirmed() ? kOk : kFailed;
}

// F(x,y) = f(y) - f(x), added to the instance under the name "<f>-potential".
std::string add_potential(Instance& inst, const Objective& f) {
  auto B = Bivariate::from_objective(f, f.name() + "-potential");
  const auto name = B.name();
  if (!inst.find_bivariate(name)) inst.bivariates.push_back(std::move(B));
  return name;
}

int cmd_solve(const SolveArgs& a) {
  auto inst = load_instance(a.instance);
  require_finite(inst);
  std::string potential_of;
  if (a.principle == "equivalence") return solve_equivalence(a, inst);
  const auto p = parse_principle(a.principle);
  Certificate cert;
  std::optional<Bivariate> derived;
  try {
    switch (p) {
      case Principle::kEkeland:
        cert = ekeland_point(inst.gauge, objective_arg(a.objective, inst), required_start(a, inst));
        break;
      case Principle::kEkelandScaled: {
        ScalingSpec spec;
        if (!a.epsilon.empty()) spec.epsilon = parse_rational(a.epsilon);
        spec.xi = a.xi.empty() ? std::vector<Rational>(inst.gauge.size(), Rational(1))
                               : xi_from_json(load_json(a.xi), inst.gauge);
        cert = ekeland_scaled(inst.gauge, objective_arg(a.objective, inst), required_start(a, inst), spec);
        break;
      }
      case Principle::kCaristi: {
        if (a.variant != "weak" && a.variant != "strong") throw InvalidArgument("--variant is weak or strong");
        const auto& F = a.map.empty() && inst.maps.size() == 1 ? inst.maps.front() : inst.map(a.map);
        cert = caristi_fixed_point(inst.gauge, objective_arg(a.objective, inst), F,
                                   a.variant == "weak" ? CaristiVariant::kWeak : CaristiVariant::kStrong,
                                   start_of(a, inst));
        break;
      }
      case Principle::kTakahashi:
        cert = takahashi_minimize(inst.gauge, objective_arg(a.objective, inst), start_of(a, inst));
        break;
      case Principle::kArutyunov:
        if (a.gamma.empty()) throw InvalidArgument("--gamma is required");
        cert = arutyunov_minimize(inst.gauge, objective_arg(a.objective, inst), parse_rational(a.gamma),
                                  required_start(a, inst));
        break;
      case Principle::kOettliThera:
        if (a.bivariate.empty() && inst.bivariates.size() == 1) {
          cert = oettli_thera(inst.gauge, inst.bivariates.front(), required_start(a, inst));
        } else if (a.bivariate.empty()) {
          // no bivariate given: use the potential of the objective
          const auto& f = objective_arg(a.objective, inst);
          potential_of = f.name();
          const auto name = add_potential(inst, f);
          cert = oettli_thera(inst.gauge, inst.bivariate(name), required_start(a, inst));
        } else {
          cert = oettli_thera(inst.gauge, inst.bivariate(a.bivariate), required_start(a, inst));
        }
        break;
    }
  } catch (const HypothesisViolation& e) {
    Json w = Json::array();
    for (auto x : e.witness()) w.push_back(x < inst.points.size() ? inst.points.name(x) : std::to_string(x));
    std::cerr << "refused: " << e.what() << "\n";
    emit({{"principle", to_string(p)}, {"refused", e.hypothesis()}, {"witness", w}, {"detail", e.what()}}, a.out);
    return kRefused;
  }
  auto j = certificate_to_json(cert, inst);
  j["instance"] = fs::absolute(a.instance).string();
  if (!potential_of.empty()) j["potential_of"] = potential_of;
  const auto v = oracle::verify_certificate(certificate_context(cert, inst), cert);
  emit(j, a.out);
  if (!v.pass) {
    for (const auto& f : v.failures) std::cerr << "verification: " << f << "\n";
    return kFailed;
  }
  if (!a.out.empty()) {
    std::cout << to_string(p) << ": z = " << inst.points.name(cert.point) << ", " << v.inequalities
              << " inequalities verified\n";
  }
  return kOk;
}

// ----------------------------------------------------------------- iterate

struct IterateArgs {
  std::string instance, catalog, objective, rule, gamma, eta, start, lambda, mu, out;
  std::size_t cap = kDefaultIterationCap;
  bool gelman = false;
};

EtaSpec eta_arg(const std::string& text) {
  if (text.rfind("pwl:", 0) == 0 && fs::exists(text.substr(4))) return eta_from_json(load_json(text.substr(4)));
  return EtaSpec::parse(text);
}

int cmd_iterate(const IterateArgs& a) {
  IterationResult r;
  std::optional<Instance> inst;
  try {
    if (!a.catalog.empty()) {
      const auto& entry = catalog::entry(a.catalog);
      if (a.gelman) {
        r = gelman_reduce(entry, a.cap);
      } else {
        if (a.gamma.empty() || a.eta.empty()) throw InvalidArgument("--gamma and --eta are required (or --gelman)");
        std::optional<Rational> start;
        if (!a.start.empty()) start = parse_rational(a.start);
        r = eta_iterate(entry, parse_rational(a.gamma), eta_arg(a.eta), start, a.cap);
      }
    } else {
      inst = load_instance(a.instance);
      require_finite(*inst);
      if (a.rule.empty() || a.start.empty()) throw InvalidArgument("--rule and --start are required");
      const auto table = successor_table_from_json(load_json(a.rule), *inst);
      const auto& f = objective_arg(a.objective, *inst);
      const auto x0 = inst->points.index_of(a.start);
      if (a.gelman) {
        if (a.lambda.empty() || a.mu.empty()) throw InvalidArgument("--lambda and --mu are required with --gelman");
        r = gelman_reduce(inst->gauge, f, parse_rational(a.lambda), parse_rational(a.mu), table, x0, a.cap);
      } else {
        if (a.gamma.empty() || a.eta.empty()) throw InvalidArgument("--gamma and --eta are required");
        r = eta_iterate(inst->gauge, f, parse_rational(a.gamma), eta_arg(a.eta), table, x0, a.cap);
      }
    }
  } catch (const HypothesisViolation& e) {
    std::cerr << "refused: " << e.what() << "\n";
    emit({{"refused", e.hypothesis()}, {"detail", e.what()}}, a.out);
    return kRefused;
  }
  emit(to_json(r, inst ? &*inst : nullptr), a.out);
  return r.ok() ? kOk : kFailed;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string certificate, instance, out;
};

int cmd_verify(const VerifyArgs& a) {
  const auto j = load_json(a.certificate);
  std::string path = a.instance;
  if (path.empty()) {
    if (!j.contains("instance")) throw InvalidArgument("certificate names no instance; pass --instance");
    path = j.at("instance").get<std::string>();
    if (!fs::exists(path)) path = (fs::path(a.certificate).parent_path() / path).string();
  }
  auto inst = load_instance(path);
  if (j.contains("potential_of")) add_potential(inst, inst.objective(j.at("potential_of").get<std::string>()));
  const auto cert = certificate_from_json(j, inst);
  const auto v = oracle::verify_certificate(certificate_context(cert, inst), cert);
  emit({{"verdict", v.pass ? "PASS" : "FAIL"}, {"inequalities", v.inequalities}, {"failures", v.failures}}, a.out);
  return v.pass ? kOk : kFailed;
}

// --------------------------------------------------------------- enumerate

int cmd_enumerate(const SolveArgs& a) {
  const auto inst = load_instance(a.instance);
  require_finite(inst);
  PointList pts;
  const std::string& what = a.principle;
  if (what == "minimal") {
    pts = oracle::enumerate_minimal(inst.gauge, objective_arg(a.objective, inst));
  } else if (what == "ekeland") {
    pts = oracle::enumerate_ekeland(inst.gauge, objective_arg(a.objective, inst), required_start(a, inst));
  } else if (what == "takahashi") {
    pts = oracle::enumerate_takahashi(objective_arg(a.objective, inst));
  } else if (what == "caristi") {
    const auto& F = a.map.empty() && inst.maps.size() == 1 ? inst.maps.front() : inst.map(a.map);
    pts = oracle::enumerate_caristi_fixed(F, a.variant == "strong" ? CaristiVariant::kStrong : CaristiVariant::kWeak);
  } else if (what == "oettli-thera") {
    const auto& F = a.bivariate.empty() && inst.bivariates.size() == 1 ? inst.bivariates.front()
                                                                          : inst.bivariate(a.bivariate);
    pts = oracle::enumerate_oettli_thera(inst.gauge, F, required_start(a, inst));
  } else {
    throw InvalidArgument("enumerate takes minimal, ekeland, takahashi, caristi or oettli-thera");
  }
  emit({{"enumerate", what}, {"points", point_names(pts, inst.points)}}, a.out);
  if (!a.out.empty()) std::cout << what << ": " << names_of(pts, inst.points) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::optional<std::uint64_t> seed;
  std::size_t n = 5, gauge = 1;
  std::string profile = "T1", out;
};

int cmd_generate(const GenerateArgs& a) {
  GenerateOptions opt;
  opt.seed = a.seed ? *a.seed : default_seed();
  opt.n = a.n;
  opt.gauge_size = a.gauge;
  opt.profile = parse_profile(a.profile);
  emit(to_json(generate_instance(opt)), a.out);
  return kOk;
}

// ------------------------------------------------------------------- suite

struct SuiteArgs {
  std::optional<std::uint64_t> seed;
  std::string profile = "T1", principles, out;
  std::size_t count = 200, max_n = 8, max_gauge = 3;
  unsigned threads = 0;
};

int cmd_suite(const SuiteArgs& a) {
  SuiteOptions opt;
  opt.profile = parse_profile(a.profile);
  opt.count = a.count;
  opt.seed = a.seed ? *a.seed : default_seed();
  opt.max_n = a.max_n;
  opt.max_gauge = a.max_gauge;
  opt.threads = a.threads;
  for (const auto& p : split(a.principles)) opt.principles.push_back(parse_principle(p));
  const auto report = run_suite(opt);
  if (!a.out.empty()) save_json(a.out, report.to_json());
  std::cout << report.table();
  for (const auto& r : report.records)
    if (r.outcome == Outcome::kFailed)
      std::cout << "FAILED #" << r.index << " " << to_string(r.principle) << ": " << r.detail << "\n";
  return report.exit_code();
}

// ----------------------------------------------------------------- catalog

int cmd_catalog(const std::string& id, const std::string& out) {
  if (id.empty()) {
    Json list = Json::array();
    for (const auto& e : catalog::entries()) list.push_back({{"id", e.id}, {"description", e.description}});
    Json dists = Json::array();
    for (const auto& d : catalog::distances()) dists.push_back({{"id", d.id}, {"formula", d.formula}});
    emit({{"entries", list}, {"distances", dists}}, out);
    return kOk;
  }
  const auto& e = catalog::entry(id);
  const auto& d = catalog::distance(e.distance);
  Json j{{"id", e.id}, {"description", e.description}, {"distance", {{"id", d.id}, {"formula", d.formula}}}};
  Json limits = Json::array();
  for (const auto& l : e.limits) limits.push_back(to_json(l));
  j["limits"] = limits;
  Json seqs = Json::array();
  for (const auto& s : e.sequences)
    seqs.push_back({{"id", s.id}, {"center", to_json(s.center)}, {"coefficient", to_json(s.coefficient)}});
  j["sequences"] = seqs;
  if (e.objective) j["objective"] = {{"formula", e.objective->formula}, {"certificates", e.objective->certificates}};
  if (e.h && e.g) {
    Json checks = Json::array();
    for (const auto& c : closed_graph_checks(e)) {
      checks.push_back({{"sequence", c.sequence},
                        {"limit", to_json(c.limit)},
                        {"converges", c.converges},
                        {"tail_limit", c.tail_limit ? to_json(*c.tail_limit) : Json("inf")},
                        {"value_at_limit", to_json(c.value_at_limit)},
                        {"applicable", c.applicable},
                        {"holds", c.holds}});
    }
    j["condition_a"] = checks;
  }
  j["certificates"] = e.certificates;
  emit(j, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact variational principles on finite and catalog quasi-uniform spaces"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check quasi-pseudometric and gauge axioms");
  validate->add_option("--instance", va.instance)->required();
  validate->add_option("--mode", va.mode, "strict or gauge-relaxed");
  validate->add_option("--compat", va.compat, "Gauge member to test for compatibility");
  validate->add_option("--out", va.out);

  TopoArgs ta;
  auto* topo = app.add_subcommand("topo", "Convergence, Cauchy, separation and semicontinuity reports");
  auto* topo_inst = topo->add_option("--instance", ta.instance);
  auto* topo_cat = topo->add_option("--catalog", ta.catalog);
  topo_inst->excludes(topo_cat);
  topo->add_option("--op", ta.op)->required();
  topo->add_option("--sequence", ta.sequence, "Comma-separated prefix, or a catalog sequence id");
  topo->add_option("--point", ta.point);
  topo->add_option("--candidates", ta.candidates);
  topo->add_option("--out", ta.out);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Run a principle and emit a verified certificate");
  solve->add_option("principle", sa.principle,
                    "ekeland, ekeland-scaled, caristi, takahashi, arutyunov, oettli-thera or equivalence")
      ->required();
  solve->add_option("--instance", sa.instance)->required();
  solve->add_option("--objective", sa.objective);
  solve->add_option("--start", sa.start);
  solve->add_option("--gamma", sa.gamma);
  solve->add_option("--epsilon", sa.epsilon);
  solve->add_option("--xi", sa.xi, "JSON file {\"xi\": {member: value}}");
  solve->add_option("--variant", sa.variant);
  solve->add_option("--map", sa.map);
  solve->add_option("--bivariate", sa.bivariate);
  solve->add_option("--direction", sa.direction, "ek-car, not-ek-not-car, ek-tak, not-ek-not-tak, ek-ot");
  solve->add_option("--out", sa.out);

  IterateArgs ia;
  auto* iterate = app.add_subcommand("iterate", "Arutyunov eta-iteration");
  iterate->add_option("--instance", ia.instance);
  iterate->add_option("--catalog", ia.catalog);
  iterate->add_option("--objective", ia.objective);
  iterate->add_option("--rule", ia.rule, "JSON file {\"rule\": {point: successor}}");
  iterate->add_option("--gamma", ia.gamma);
  iterate->add_option("--eta", ia.eta, "linear:<mu> or pwl:<file>");
  iterate->add_option("--start", ia.start);
  iterate->add_option("--cap", ia.cap);
  iterate->add_flag("--gelman", ia.gelman, "Use the (lambda, mu) form");
  iterate->add_option("--lambda", ia.lambda);
  iterate->add_option("--mu", ia.mu);
  iterate->add_option("--out", ia.out);

  VerifyArgs vfa;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against its instance");
  verify->add_option("--certificate", vfa.certificate)->required();
  verify->add_option("--instance", vfa.instance);
  verify->add_option("--out", vfa.out);

  SolveArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Brute-force solution sets");
  enumerate->add_option("principle", ea.principle, "minimal, ekeland, takahashi, caristi or oettli-thera")->required();
  enumerate->add_option("--instance", ea.instance)->required();
  enumerate->add_option("--objective", ea.objective);
  enumerate->add_option("--start", ea.start);
  enumerate->add_option("--map", ea.map);
  enumerate->add_option("--variant", ea.variant);
  enumerate->add_option("--bivariate", ea.bivariate);
  enumerate->add_option("--out", ea.out);

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Random instance for a profile");
  generate->add_option("--seed", ga.seed);
  generate->add_option("--n", ga.n);
  generate->add_option("--gauge", ga.gauge);
  generate->add_option("--profile", ga.profile, "T1, T0-not-T1, chain, takahashi-valid, caristi-valid");
  generate->add_option("--out", ga.out);

  SuiteArgs ua;
  auto* suite = app.add_subcommand("suite", "Generate, solve and oracle-check a batch of instances");
  suite->add_option("--seed", ua.seed);
  suite->add_option("--profile", ua.profile);
  suite->add_option("--count", ua.count);
  suite->add_option("--principles", ua.principles, "Comma-separated principle names");
  suite->add_option("--max-n", ua.max_n);
  suite->add_option("--max-gauge", ua.max_gauge);
  suite->add_option("--threads", ua.threads);
  suite->add_option("--out", ua.out, "Write the JSON report here");

  std::string catalog_id, catalog_out;
  auto* cat = app.add_subcommand("catalog", "List or show built-in countable instances");
  cat->add_option("id", catalog_id);
  cat->add_option("--out", catalog_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(va);
    if (*topo) {
      if (ta.instance.empty() && ta.catalog.empty()) throw InvalidArgument("--instance or --catalog is required");
      return cmd_topo(ta);
    }
    if (*solve) return cmd_solve(sa);
    if (*iterate) {
      if (ia.instance.empty() == ia.catalog.empty()) throw InvalidArgument("pass exactly one of --instance, --catalog");
      return cmd_iterate(ia);
    }
    if (*verify) return cmd_verify(vfa);
    if (*enumerate) return cmd_enumerate(ea);
    if (*generate) return cmd_generate(ga);
    if (*suite) return cmd_suite(ua);
    if (*cat) return cmd_catalog(catalog_id, catalog_out);
  } catch (const HypothesisViolation& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
