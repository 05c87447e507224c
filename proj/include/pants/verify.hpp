#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pants/config.hpp"

namespace pants {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  nlohmann::json params;  // requested/effective sizes, sample counts, ...
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json witness;  // counterexample payload; non-null on fail
  double elapsed_ms = 0;
};

// Canonical check order; run_all reports in this order.
const std::vector<std::string>& check_names();

// Runs the selected checks (empty selection = all) at sizes min(n, per-check
// guard).  Deterministic for fixed (n, selection, seed).  Unknown names
// throw argument_error.  Failures never abort the batch.
std::vector<CheckReport> run_all(int n, const std::vector<std::string>& selection,
                                 std::uint64_t seed, const Config& cfg = Config(),
                                 bool parallel = false);

bool all_passed(const std::vector<CheckReport>& reports);  // no fail entries

// Realizable pair-relation tables (encoded) of the half-turn arrangement,
// by exhaustive sweep of the grid with denominator 4*(n+1)!; every table
// an enumerated net produces must appear here exactly once, and vice
// versa.  n <= 3.
std::vector<std::uint64_t> sign_vector_oracle(int n);

// Independent cyclic-partition count: surjections onto {0..k-1} taken as
// ordered part lists, deduplicated by rotation.
long long cyclic_partition_count_oracle(int n);

nlohmann::json reports_json(const std::vector<CheckReport>& reports,
                            bool include_timing = false);
std::string junit_xml(const std::vector<CheckReport>& reports);

}  // namespace pants
