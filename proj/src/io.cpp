#include "qvar/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qvar/catalog.hpp"
#include "qvar/error.hpp"

namespace qvar {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be a list");
  return v;
}

template <typename T>
const T* find_named(const std::vector<T>& items, const std::string& name) {
  for (const auto& item : items)
    if (item.name() == name) return &item;
  return nullptr;
}

template <typename T>
void check_unique(const std::vector<T>& items, const char* what) {
  std::set<std::string> seen;
  for (const auto& item : items)
    if (!seen.insert(item.name()).second) throw InvalidArgument(std::string("duplicate ") + what + " '" + item.name() + "'");
}

std::vector<Rational> finite_row_major(const Json& matrix, std::size_t n, const std::string& what) {
  if (!matrix.is_array() || matrix.size() != n) throw InvalidArgument(what + " must have " + std::to_string(n) + " rows");
  std::vector<Rational> out;
  out.reserve(n * n);
  for (const auto& row : matrix) {
    if (!row.is_array() || row.size() != n) throw InvalidArgument(what + " rows must have " + std::to_string(n) + " entries");
    for (const auto& v : row) {
      const auto e = extended_from_json(v);
      if (e.is_infinite()) throw InvalidArgument(what + ": distances must be finite");
      out.push_back(e.value());
    }
  }
  return out;
}

Json matrix_json(std::size_t n, const std::function<Json(std::size_t, std::size_t)>& at) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < n; ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

PointIndex point_from_json(const Json& j, const Instance& instance) {
  if (!j.is_string()) throw InvalidArgument("points are referenced by name");
  return instance.points.index_of(j.get<std::string>());
}

std::size_t member_from_json(const Json& j, const FQuasiGauge& gauge) {
  if (!j.is_string()) throw InvalidArgument("gauge members are referenced by name");
  const auto i = gauge.find(j.get<std::string>());
  if (!i) throw InvalidArgument("unknown gauge member '" + j.get<std::string>() + "'");
  return *i;
}

Json points_json(const PointList& pts, const PointSet& names) {
  Json out = Json::array();
  for (auto p : pts) out.push_back(names.name(p));
  return out;
}

PointList points_from_json(const Json& j, const Instance& instance) {
  if (!j.is_array()) throw InvalidArgument("expected a list of point names");
  PointList out;
  for (const auto& p : j) out.push_back(point_from_json(p, instance));
  return out;
}

}  // namespace

const Objective* Instance::find_objective(const std::string& name) const { return find_named(objectives, name); }
const Bivariate* Instance::find_bivariate(const std::string& name) const { return find_named(bivariates, name); }
const SetValuedMap* Instance::find_map(const std::string& name) const { return find_named(maps, name); }

const Objective& Instance::objective(const std::string& name) const {
  if (const auto* p = find_objective(name)) return *p;
  throw InvalidArgument("unknown objective '" + name + "'");
}
const Bivariate& Instance::bivariate(const std::string& name) const {
  if (const auto* p = find_bivariate(name)) return *p;
  throw InvalidArgument("unknown bivariate '" + name + "'");
}
const SetValuedMap& Instance::map(const std::string& name) const {
  if (const auto* p = find_map(name)) return *p;
  throw InvalidArgument("unknown map '" + name + "'");
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected a rational (\"p/q\" or integer), got " + j.dump());
}

ExtendedRational extended_from_json(const Json& j) {
  if (j.is_string()) return ExtendedRational::parse(j.get<std::string>());
  return ExtendedRational(rational_from_json(j));
}

Json to_json(const Rational& v) { return to_string(v); }
Json to_json(const ExtendedRational& v) { return v.to_string(); }

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("instance must be an object");
  Instance inst;
  const auto& points = field(j, "points");
  const auto& gauge = array_field(j, "gauge");
  if (gauge.empty()) throw InvalidArgument("gauge must have at least one member");
  const bool symmetric = j.contains("symmetric") && j.at("symmetric").get<bool>();

  if (points.is_object()) {
    const auto& c = field(points, "countable");
    CountableData data;
    data.catalog = string_field(c, "catalog");
    const auto& entry = catalog::entry(data.catalog);
    if (c.contains("limits")) {
      for (const auto& l : c.at("limits")) {
        data.limits.push_back(rational_from_json(l));
        if (!entry.domain.contains(data.limits.back())) {
          throw InvalidArgument("limit " + to_string(data.limits.back()) + " is outside the catalog domain");
        }
      }
    }
    std::set<std::string> names;
    for (const auto& g : gauge) {
      CatalogMember m{string_field(g, "name"), string_field(g, "catalog"), string_field(g, "relax")};
      catalog::distance(m.catalog);
      if (g.contains("matrix")) throw InvalidArgument("countable gauge members take a catalog distance, not a matrix");
      if (!names.insert(m.name).second) throw InvalidArgument("duplicate gauge member '" + m.name + "'");
      data.gauge.push_back(std::move(m));
    }
    for (const auto& m : data.gauge)
      if (!names.count(m.relax)) throw InvalidArgument("relax target '" + m.relax + "' is not a gauge member");
    for (const char* key : {"objectives", "bivariates", "maps"})
      if (j.contains(key) && !j.at(key).empty()) throw InvalidArgument(std::string(key) + " need a finite instance");
    if (symmetric) throw InvalidArgument("countable instances take the symmetry of their catalog distance");
    inst.countable = std::move(data);
    return inst;
  }

  if (!points.is_array()) throw InvalidArgument("'points' must be a list of names or a countable spec");
  std::vector<std::string> names;
  for (const auto& p : points) {
    if (!p.is_string()) throw InvalidArgument("point names must be strings");
    names.push_back(p.get<std::string>());
  }
  inst.points = PointSet(std::move(names));
  const std::size_t n = inst.points.size();

  std::vector<QuasiPseudometric> members;
  std::vector<std::string> relax_names;
  for (const auto& g : gauge) {
    const auto name = string_field(g, "name");
    if (g.contains("catalog")) throw InvalidArgument("finite gauge members take a matrix, not a catalog distance");
    members.emplace_back(name, n, finite_row_major(field(g, "matrix"), n, "matrix '" + name + "'"));
    relax_names.push_back(g.contains("relax") ? string_field(g, "relax") : name);
  }
  std::vector<std::size_t> relax;
  for (const auto& r : relax_names) {
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i].name() == r) idx = i;
    if (!idx) throw InvalidArgument("relax target '" + r + "' is not a gauge member");
    relax.push_back(*idx);
  }
  inst.gauge = FQuasiGauge(std::move(members), std::move(relax), symmetric);

  if (j.contains("objectives")) {
    for (const auto& o : j.at("objectives")) {
      const auto& vals = field(o, "values");
      std::vector<ExtendedRational> values(n);
      if (vals.is_array()) {
        if (vals.size() != n) throw InvalidArgument("objective needs one value per point");
        for (std::size_t i = 0; i < n; ++i) values[i] = extended_from_json(vals[i]);
      } else if (vals.is_object()) {
        std::vector<bool> set(n, false);
        for (const auto& [k, v] : vals.items()) {
          const auto i = inst.points.index_of(k);
          values[i] = extended_from_json(v);
          set[i] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
          if (!set[i]) throw InvalidArgument("objective has no value at '" + inst.points.name(i) + "'");
      } else {
        throw InvalidArgument("objective values must be a list or a map");
      }
      inst.objectives.emplace_back(string_field(o, "name"), std::move(values));
    }
  }
  if (j.contains("bivariates")) {
    for (const auto& b : j.at("bivariates")) {
      const auto& m = field(b, "matrix");
      if (!m.is_array() || m.size() != n) throw InvalidArgument("bivariate matrix must be n x n");
      std::vector<ExtendedRational> values;
      for (const auto& row : m) {
        if (!row.is_array() || row.size() != n) throw InvalidArgument("bivariate matrix must be n x n");
        for (const auto& v : row) values.push_back(extended_from_json(v));
      }
      inst.bivariates.emplace_back(string_field(b, "name"), n, std::move(values));
    }
  }
  if (j.contains("maps")) {
    for (const auto& m : j.at("maps")) {
      const auto& imgs = array_field(m, "images");
      if (imgs.size() != n) throw InvalidArgument("map needs one image per point");
      std::vector<PointList> images;
      for (const auto& img : imgs) images.push_back(points_from_json(img, inst));
      inst.maps.emplace_back(string_field(m, "name"), std::move(images));
    }
  }
  check_unique(inst.objectives, "objective");
  check_unique(inst.bivariates, "bivariate");
  check_unique(inst.maps, "map");
  return inst;
}

Json to_json(const Instance& inst) {
  Json j;
  if (inst.countable) {
    Json limits = Json::array();
    for (const auto& l : inst.countable->limits) limits.push_back(to_json(l));
    j["points"] = {{"countable", {{"catalog", inst.countable->catalog}, {"limits", limits}}}};
    Json gauge = Json::array();
    for (const auto& m : inst.countable->gauge) gauge.push_back({{"name", m.name}, {"catalog", m.catalog}, {"relax", m.relax}});
    j["gauge"] = gauge;
    return j;
  }
  j["points"] = inst.points.names();
  if (inst.gauge.symmetric()) j["symmetric"] = true;
  const std::size_t n = inst.points.size();
  Json gauge = Json::array();
  for (std::size_t i = 0; i < inst.gauge.size(); ++i) {
    const auto& d = inst.gauge.member(i);
    gauge.push_back({{"name", d.name()},
                     {"matrix", matrix_json(n, [&](std::size_t x, std::size_t y) { return to_json(d(x, y)); })},
                     {"relax", inst.gauge.member(inst.gauge.relax(i)).name()}});
  }
  j["gauge"] = gauge;
  if (!inst.objectives.empty()) {
    Json objs = Json::array();
    for (const auto& f : inst.objectives) {
      Json values = Json::array();
      for (const auto& v : f.values()) values.push_back(to_json(v));
      objs.push_back({{"name", f.name()}, {"values", values}});
    }
    j["objectives"] = objs;
  }
  if (!inst.bivariates.empty()) {
    Json bivs = Json::array();
    for (const auto& F : inst.bivariates) {
      bivs.push_back({{"name", F.name()},
                      {"matrix", matrix_json(n, [&](std::size_t x, std::size_t y) { return to_json(F(x, y)); })}});
    }
    j["bivariates"] = bivs;
  }
  if (!inst.maps.empty()) {
    Json maps = Json::array();
    for (const auto& F : inst.maps) {
      Json images = Json::array();
      for (const auto& img : F.images()) images.push_back(points_json(img, inst.points));
      maps.push_back({{"name", F.name()}, {"images", images}});
    }
    j["maps"] = maps;
  }
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  try {
    return instance_from_json(load_json(path));
  } catch (const Json::exception& e) {
    throw InvalidArgument("'" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump(j);
}

namespace {

Json inequalities_json(const std::vector<Inequality>& list, const Instance& inst) {
  Json out = Json::array();
  for (const auto& q : list) {
    out.push_back({{"member", inst.gauge.member(q.member).name()},
                   {"point", inst.points.name(q.point)},
                   {"lhs", to_json(q.lhs)},
                   {"rhs", to_json(q.rhs)},
                   {"strict", q.strict}});
  }
  return out;
}

std::vector<Inequality> inequalities_from_json(const Json& j, const Instance& inst) {
  std::vector<Inequality> out;
  if (!j.is_array()) throw InvalidArgument("inequality lists must be lists");
  for (const auto& q : j) {
    Inequality i;
    i.member = member_from_json(field(q, "member"), inst.gauge);
    i.point = point_from_json(field(q, "point"), inst);
    i.lhs = extended_from_json(field(q, "lhs"));
    i.rhs = extended_from_json(field(q, "rhs"));
    i.strict = field(q, "strict").get<bool>();
    out.push_back(std::move(i));
  }
  return out;
}

}  // namespace

Json certificate_to_json(const Certificate& c, const Instance& inst) {
  Json j;
  j["principle"] = to_string(c.principle);
  if (!c.objective.empty()) j["objective"] = c.objective;
  if (!c.bivariate.empty()) j["bivariate"] = c.bivariate;
  if (!c.map.empty()) {
    j["map"] = c.map;
    j["variant"] = to_string(c.variant);
  }
  if (c.start) j["start"] = inst.points.name(*c.start);
  j["point"] = inst.points.name(c.point);
  if (c.epsilon) j["epsilon"] = to_json(*c.epsilon);
  if (!c.xi.empty()) {
    Json xi = Json::object();
    for (std::size_t i = 0; i < c.xi.size(); ++i) xi[inst.gauge.member(i).name()] = to_json(c.xi[i]);
    j["xi"] = xi;
  }
  if (c.gamma) j["gamma"] = to_json(*c.gamma);
  if (c.infimum) j["infimum"] = to_json(*c.infimum);
  j["part_i"] = inequalities_json(c.part_i, inst);
  j["part_ii"] = inequalities_json(c.part_ii, inst);
  if (!c.bounds.empty()) j["bounds"] = inequalities_json(c.bounds, inst);
  if (!c.map.empty()) j["image"] = points_json(c.image, inst.points);
  j["trace"] = points_json(c.trace, inst.points);
  return j;
}

Certificate certificate_from_json(const Json& j, const Instance& inst) {
  if (!inst.finite()) throw InvalidArgument("certificates refer to finite instances");
  try {
    Certificate c;
    c.principle = parse_principle(string_field(j, "principle"));
    if (j.contains("objective")) c.objective = string_field(j, "objective");
    if (j.contains("bivariate")) c.bivariate = string_field(j, "bivariate");
    if (j.contains("map")) c.map = string_field(j, "map");
    if (j.contains("variant")) {
      const auto v = string_field(j, "variant");
      if (v != "weak" && v != "strong") throw InvalidArgument("variant must be weak or strong");
      c.variant = v == "weak" ? CaristiVariant::kWeak : CaristiVariant::kStrong;
    }
    if (j.contains("start")) c.start = point_from_json(j.at("start"), inst);
    c.point = point_from_json(field(j, "point"), inst);
    if (j.contains("epsilon")) c.epsilon = rational_from_json(j.at("epsilon"));
    if (j.contains("xi")) c.xi = xi_from_json(j, inst.gauge);
    if (j.contains("gamma")) c.gamma = rational_from_json(j.at("gamma"));
    if (j.contains("infimum")) c.infimum = rational_from_json(j.at("infimum"));
    c.part_i = inequalities_from_json(field(j, "part_i"), inst);
    c.part_ii = inequalities_from_json(field(j, "part_ii"), inst);
    if (j.contains("bounds")) c.bounds = inequalities_from_json(j.at("bounds"), inst);
    if (j.contains("image")) c.image = points_from_json(j.at("image"), inst);
    if (j.contains("trace")) c.trace = points_from_json(j.at("trace"), inst);
    return c;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

oracle::CertificateContext certificate_context(const Certificate& c, const Instance& inst) {
  oracle::CertificateContext ctx;
  ctx.gauge = &inst.gauge;
  if (!c.objective.empty()) ctx.objective = &inst.objective(c.objective);
  if (!c.bivariate.empty()) ctx.bivariate = &inst.bivariate(c.bivariate);
  if (!c.map.empty()) ctx.map = &inst.map(c.map);
  return ctx;
}

Json to_json(const ValidationReport& report, const std::vector<std::string>& names) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json w = Json::array();
    for (auto p : v.witness) w.push_back(p < names.size() ? Json(names[p]) : Json(p));
    violations.push_back({{"axiom", v.axiom}, {"witness", w}, {"detail", v.detail}});
  }
  return {{"valid", report.valid()}, {"violations", violations}};
}

Json to_json(const EquivalenceReport& r, const Instance& inst) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json j{{"direction", to_string(r.direction)}, {"applicable", r.applicable}, {"checks", checks}};
  if (!r.selector.empty()) j["selector"] = points_json(r.selector, inst.points);
  j["verdict"] = r.verdict;
  j["confirmed"] = r.confirmed();
  return j;
}

Json to_json(const IterationResult& r, const Instance* inst) {
  Json j;
  j["outcome"] = r.terminated ? "terminated" : "converging";
  j["steps"] = r.steps;
  j["gamma"] = to_json(r.gamma);
  j["eta"] = r.eta;
  Json iterates = Json::array();
  if (!r.points.empty()) {
    for (auto p : r.points) iterates.push_back(inst ? Json(inst->points.name(p)) : Json(p));
  } else {
    for (const auto& p : r.positions) iterates.push_back(to_json(p));
  }
  j["iterates"] = iterates;
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(to_json(v));
  j["values"] = values;
  j["nonincreasing"] = r.nonincreasing;
  j["strictly_decreasing"] = r.strictly_decreasing;
  auto count_failed = [](const auto& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& c) { return !c.holds(); }));
  };
  j["telescoped"] = {{"checked", r.telescoped.size()},
                     {"failed", count_failed(r.telescoped)},
                     {"sampled", r.telescoped_sampled}};
  if (r.limit) {
    const std::string name = inst && !r.points.empty() ? inst->points.name(std::stoul(*r.limit)) : *r.limit;
    j["limit"] = name;
    j["limit_bounds"] = {{"checked", r.limit_bounds.size()}, {"failed", count_failed(r.limit_bounds)}};
    if (!r.limit_bounds.empty()) {
      j["bound_from_start"] = {{"distance", to_json(r.limit_bounds.front().distance)},
                               {"bound", to_json(r.limit_bounds.front().bound)}};
    }
  }
  if (!r.gelman_bounds.empty()) {
    Json g = Json::array();
    for (const auto& b : r.gelman_bounds)
      g.push_back({{"distance", to_json(b.distance)}, {"bound", to_json(b.bound)}, {"holds", b.holds()}});
    j["gelman_bounds"] = g;
  }
  j["audit"] = r.audit;
  j["ok"] = r.ok();
  return j;
}

SuccessorTable successor_table_from_json(const Json& j, const Instance& inst) {
  const auto& rule = field(j, "rule");
  if (!rule.is_object()) throw InvalidArgument("'rule' must map point names to point names");
  SuccessorTable table(inst.points.size());
  for (const auto& [k, v] : rule.items()) table[inst.points.index_of(k)] = point_from_json(v, inst);
  return table;
}

std::vector<Rational> xi_from_json(const Json& j, const FQuasiGauge& gauge) {
  const auto& xi = field(j, "xi");
  if (!xi.is_object()) throw InvalidArgument("'xi' must map member names to rationals");
  std::vector<std::optional<Rational>> vals(gauge.size());
  for (const auto& [k, v] : xi.items()) vals[member_from_json(Json(k), gauge)] = rational_from_json(v);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i]) throw InvalidArgument("xi has no value for member '" + gauge.member(i).name() + "'");
    out.push_back(*vals[i]);
  }
  return out;
}

EtaSpec eta_from_json(const Json& j) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : array_field(j, "points")) {
    if (!p.is_array() || p.size() != 2) throw InvalidArgument("eta breakpoints are [t, eta(t)] pairs");
    pts.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
  }
  return EtaSpec::piecewise(std::move(pts), rational_from_json(field(j, "tail")));
}

}  // namespace qvar
