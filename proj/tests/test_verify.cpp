// The verification battery: oracle cross-checks, determinism, selection,
// report serialization, and the pinned pass/fail ledger at small sizes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pants/chords.hpp"
#include "pants/errors.hpp"
#include "pants/verify.hpp"

using namespace pants;

namespace {

// Stirling-recurrence count of cyclic arrangements: sum over k of
// S(n+1, k) * (k-1)! ways to split {0..n} into a necklace of parts.
long long stirling_cyclic_count(int n) {
  const int m = n + 1;
  std::vector<std::vector<long long>> S(m + 1, std::vector<long long>(m + 1, 0));
  S[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= i; ++k) S[i][k] = k * S[i - 1][k] + S[i - 1][k - 1];
  long long total = 0, fact = 1;
  for (int k = 1; k <= m; ++k) {
    total += S[m][k] * fact;  // fact == (k-1)!
    fact *= k;
  }
  return total;
}

}  // namespace

TEST_CASE("partition count oracle equals the Stirling-number formula") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(cyclic_partition_count_oracle(n) == stirling_cyclic_count(n));
  }
  CHECK(cyclic_partition_count_oracle(4) == 150);
  CHECK(cyclic_partition_count_oracle(5) == 1082);
}

TEST_CASE("grid sweep of relation tables is in bijection with the nets") {
  for (int n = 1; n <= 2; ++n) {
    const std::vector<std::uint64_t> sweep = sign_vector_oracle(n);
    std::set<std::uint64_t> swept(sweep.begin(), sweep.end());
    CHECK(swept.size() == sweep.size());  // no duplicates

    std::set<std::uint64_t> from_nets;
    for (const Net& nu : enumerate_nets(n)) {
      CHECK(from_nets.insert(alcove_relations(nu).encode()).second);
    }
    CHECK(from_nets == swept);
  }
}

TEST_CASE("battery names are stable and unknown selections are rejected") {
  const auto& names = check_names();
  const std::set<std::string> expect{
      "partition-census",   "net-census",        "alcove-partition-sampling",
      "dimension-formula",  "lattice-isomorphism", "boundary-sphere",
      "l-circle",           "star-complement",   "facet-types",
      "global-homology",    "membership-consistency", "ober-2x2"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expect);
  CHECK(names.size() == expect.size());
  CHECK_THROWS_AS((void)run_all(1, {"no-such-check"}, 0), argument_error);
}

TEST_CASE("full battery at n=1: everything passes, roof check skipped") {
  const auto reports = run_all(1, {}, 0);
  CHECK(reports.size() == check_names().size());
  CHECK(all_passed(reports));
  for (const auto& r : reports) {
    if (r.name == "ober-2x2") {
      CHECK(r.status == CheckStatus::skipped);
    } else {
      CHECK(r.status == CheckStatus::pass);
      CHECK(r.witness.is_null());
    }
  }
}

TEST_CASE("full battery at n=2: only the roof comparison fails") {
  const auto reports = run_all(2, {}, 0);
  CHECK(!all_passed(reports));
  for (const auto& r : reports) {
    if (r.name == "ober-2x2") {
      CHECK(r.status == CheckStatus::fail);
      CHECK(!r.witness.is_null());
    } else {
      CHECK(r.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("selections run exactly the named checks, deterministically") {
  const std::vector<std::string> pick{"partition-census", "net-census"};
  const auto a = run_all(3, pick, 42);
  REQUIRE(a.size() == 2);
  CHECK(a[0].name == "partition-census");
  CHECK(a[1].name == "net-census");
  CHECK(all_passed(a));

  const auto b = run_all(3, pick, 42);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].witness == b[i].witness);
  }
}

TEST_CASE("parallel battery returns the same verdicts as serial") {
  const std::vector<std::string> pick{"partition-census", "net-census",
                                      "l-circle", "boundary-sphere"};
  const auto serial = run_all(2, pick, 7, Config{}, false);
  const auto parallel = run_all(2, pick, 7, Config{}, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].status == parallel[i].status);
    CHECK(serial[i].witness == parallel[i].witness);
  }
}

TEST_CASE("report serialization: json fields and junit document") {
  const auto reports = run_all(1, {"partition-census"}, 0);
  const nlohmann::json j = reports_json(reports);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["reports"].is_array());
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["check"] == "partition-census");
  CHECK(j["reports"][0]["status"] == "pass");
  CHECK(!j["reports"][0].contains("elapsed_ms"));
  const nlohmann::json timed = reports_json(reports, true);
  CHECK(timed["reports"][0].contains("elapsed_ms"));

  const std::string xml = junit_xml(reports);
  CHECK(xml.find("<testsuite") != std::string::npos);
  CHECK(xml.find("partition-census") != std::string::npos);

  CHECK(to_string(CheckStatus::pass) == "pass");
  CHECK(to_string(CheckStatus::fail) == "fail");
  CHECK(to_string(CheckStatus::skipped) == "skipped");
}
