#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvar/io.hpp"
#include "qvar/model.hpp"

namespace qvar {

enum class Profile { kT1, kT0NotT1, kChain, kTakahashiValid, kCaristiValid };

const char* to_string(Profile p);
Profile parse_profile(const std::string& text);

struct GenerateOptions {
  std::uint64_t seed = 1;
  std::size_t n = 5;
  std::size_t gauge_size = 1;
  Profile profile = Profile::kT1;
};

/// Seed-determined instance with objective "f" (and map "F" for the
/// caristi-valid profile). The profile is re-checked before returning; throws
/// InvalidArgument when it cannot be met (T0-not-T1 with n = 1).
///
/// Gauge: the last member is the top, the shortest-path closure of random
/// positive weights (so a quasi-metric); the others are entrywise below it and
/// relax to it.
Instance generate_instance(const GenerateOptions& options);

struct SuiteOptions {
  Profile profile = Profile::kT1;
  std::size_t count = 200;
  std::vector<Principle> principles;
  std::uint64_t seed = 1;
  std::size_t max_n = 8;
  std::size_t max_gauge = 3;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

enum class Outcome { kVerified, kRefused, kFailed };

struct SuiteRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0, gauge = 0;
  Principle principle = Principle::kEkeland;
  Outcome outcome = Outcome::kRefused;
  std::string start, point;
  std::string detail;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<SuiteRecord> records;
  std::size_t solved = 0, refused = 0, verified = 0, failed = 0;

  /// 1 if anything FAILED, else 2 if everything was refused, else 0.
  int exit_code() const;
  Json to_json() const;
  std::string table() const;
};

/// Generates `count` instances, runs every listed solver where its hypotheses
/// hold, and checks each certificate with the oracle and the matching
/// enumeration. Instances run in parallel; records are merged in order.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace qvar
