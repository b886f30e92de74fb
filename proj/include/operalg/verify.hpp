#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "operalg/json_io.hpp"
#include "operalg/miura.hpp"
#include "operalg/oper.hpp"
#include "operalg/qchar.hpp"

namespace operalg {

/// Deterministic 64-bit generator (splitmix64). Pure integer arithmetic, so
/// seeded runs reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  int range(int lo, int hi);
  /// Small nonzero-denominator rational with |num| <= num_bound.
  Rat small_rat(int num_bound = 9, int den_bound = 4);

 private:
  std::uint64_t state_;
};

/// FNV-1a 64-bit digest, hex-encoded; used to fingerprint option sets.
std::string fnv1a_hex(const std::string& data);

struct VerifyOptions {
  std::vector<std::string> types;          // empty = per-check defaults
  int lambda_max = 3;
  int order = 40;
  int precision = 20;
  int bound = 4;
  std::uint64_t seed = 1;
  std::optional<std::vector<int>> lambda;  // restrict character grids
};

struct CaseResult {
  std::string key;
  bool pass = false;
  std::string detail;  // empty when passing
};

/// One named battery of cases; the nine groups correspond one-to-one to the
/// release gate criteria.
struct CheckGroup {
  std::string name;
  std::string summary;
  std::vector<CaseResult> cases;
  bool pass() const;
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::string digest;
  Json options;
  std::vector<CheckGroup> groups;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

RunReport run_verify(const VerifyOptions& opt);
Json report_to_json(const RunReport& r);

}  // namespace operalg
