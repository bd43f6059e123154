#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qvar/iteration.hpp"
#include "qvar/model.hpp"
#include "qvar/oracle.hpp"
#include "qvar/order.hpp"
#include "qvar/principles.hpp"
#include "qvar/spaces.hpp"

namespace qvar {

using Json = nlohmann::ordered_json;

/// Gauge member of a countable instance, referring to a catalog distance.
struct CatalogMember {
  std::string name;
  std::string catalog;
  std::string relax;

  friend bool operator==(const CatalogMember&, const CatalogMember&) = default;
};

struct CountableData {
  std::string catalog;  // catalog entry id
  std::vector<Rational> limits;
  std::vector<CatalogMember> gauge;

  friend bool operator==(const CountableData&, const CountableData&) = default;
};

/// The unit every command consumes: points, gauge, and the named objectives,
/// bivariates and maps defined on them.
struct Instance {
  PointSet points;
  FQuasiGauge gauge;  // finite instances only
  std::optional<CountableData> countable;
  std::vector<Objective> objectives;
  std::vector<Bivariate> bivariates;
  std::vector<SetValuedMap> maps;

  bool finite() const noexcept { return !countable.has_value(); }
  /// Throw InvalidArgument on unknown names.
  const Objective& objective(const std::string& name) const;
  const Bivariate& bivariate(const std::string& name) const;
  const SetValuedMap& map(const std::string& name) const;
  const Objective* find_objective(const std::string& name) const;
  const Bivariate* find_bivariate(const std::string& name) const;
  const SetValuedMap* find_map(const std::string& name) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Rationals are "p/q" strings or integers; +inf is "inf".
Rational rational_from_json(const Json& j);
ExtendedRational extended_from_json(const Json& j);
Json to_json(const Rational& v);
Json to_json(const ExtendedRational& v);

/// Throws InvalidArgument on malformed input. Axioms are not validated here.
Instance instance_from_json(const Json& j);
Json to_json(const Instance& instance);

Instance load_instance(const std::string& path);
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// Certificates name points and members; the instance resolves them.
Json certificate_to_json(const Certificate& cert, const Instance& instance);
Certificate certificate_from_json(const Json& j, const Instance& instance);
/// The objects a certificate refers to, looked up by name.
oracle::CertificateContext certificate_context(const Certificate& cert, const Instance& instance);

Json to_json(const ValidationReport& report, const std::vector<std::string>& names);
Json to_json(const EquivalenceReport& report, const Instance& instance);
Json to_json(const IterationResult& result, const Instance* instance);

/// Successor table {"rule": {"p0": "p1", ...}}; points absent from the map
/// have no successor.
SuccessorTable successor_table_from_json(const Json& j, const Instance& instance);
/// ξ map {"xi": {"d": "1/2", ...}}, one value per gauge member.
std::vector<Rational> xi_from_json(const Json& j, const FQuasiGauge& gauge);
/// {"points": [["0","0"],["1","1/2"]], "tail": "1/2"}
EtaSpec eta_from_json(const Json& j);

}  // namespace qvar
