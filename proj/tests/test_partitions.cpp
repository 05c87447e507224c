// Cyclic partitions: enumeration pinned against the surjection-counting
// oracle, canonical rotation, coarsening machinery, and the divides test.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pants/config.hpp"
#include "pants/errors.hpp"
#include "pants/partitions.hpp"
#include "pants/verify.hpp"

using namespace pants;

namespace {
Config cfg() { return Config{}; }
}  // namespace

TEST_CASE("census sizes match the independent surjection oracle") {
  const long long frozen[] = {0, 2, 6, 26, 150};
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_cyclic_partitions(n, cfg());
    CHECK(static_cast<long long>(all.size()) == frozen[n]);
    CHECK(static_cast<long long>(all.size()) == cyclic_partition_count_oracle(n));
  }
}

TEST_CASE("three-element ground sets split by part count as 1,7,12,6") {
  std::map<int, int> by_k;
  for (const auto& p : enumerate_cyclic_partitions(3, cfg())) ++by_k[p.k()];
  CHECK(by_k == std::map<int, int>{{1, 1}, {2, 7}, {3, 12}, {4, 6}});
}

TEST_CASE("every enumerated partition covers the ground set exactly once") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> seen;
    for (const auto& p : enumerate_cyclic_partitions(n, cfg())) {
      CHECK(seen.insert(p.str()).second);  // distinct labels
      IndexSet all;
      int total = 0;
      for (const IndexSet part : p.parts()) {
        CHECK(!part.empty());
        CHECK(!all.intersects(part));
        all = all | part;
        total += part.size();
      }
      CHECK(all == IndexSet::full(n));
      CHECK(total == n + 1);
      CHECK(p.part(0).contains(0));  // canonical rotation anchors at 0
      for (int i = 0; i <= n; ++i) CHECK(p.part(p.part_of(i)).contains(i));
    }
  }
}

TEST_CASE("parse canonicalizes the rotation and round-trips") {
  CHECK(CyclicPartition::parse("<1|2|0>").str() == "<0|1|2>");
  CHECK(CyclicPartition::parse("<12|0|3>").str() == "<0|3|12>");
  CHECK(CyclicPartition::parse("<0|2|1>").str() == "<0|2|1>");
  for (const auto& p : enumerate_cyclic_partitions(3, cfg())) {
    CHECK(CyclicPartition::parse(p.str()) == p);
  }
}

TEST_CASE("divides needs at least two parts met") {
  const auto sigma = CyclicPartition::parse("<0|1|2>");
  CHECK(divides(sigma, IndexSet::parse("01")));
  CHECK(divides(sigma, IndexSet::full(2)));
  CHECK(!divides(sigma, IndexSet::single(2)));
  CHECK(!divides(CyclicPartition::parse("<01|2>"), IndexSet::parse("01")));
  // A support inside one part is not divided, regardless of the other parts.
  CHECK(!divides(CyclicPartition::parse("<0|1|2|3|45>"), IndexSet::parse("45")));
}

TEST_CASE("coarsenings of a 3-part partition are the 5 consecutive merges") {
  const auto sigma = CyclicPartition::parse("<0|1|2>");
  const auto all = coarsenings(sigma);
  std::set<std::string> labels;
  for (const auto& t : all) labels.insert(t.str());
  CHECK(labels ==
        std::set<std::string>{"<0|1|2>", "<01|2>", "<0|12>", "<02|1>", "<012>"});
  for (const auto& t : all) CHECK(is_coarsening(t, sigma));
  CHECK(!is_coarsening(sigma, CyclicPartition::parse("<01|2>")));
}

TEST_CASE("coarsen keeps exactly the requested boundary vertices") {
  const auto sigma = CyclicPartition::parse("<0|1|2|3>");
  CHECK(coarsen(sigma, {0, 2}).str() == "<01|23>");
  CHECK(coarsen(sigma, {1, 3}).str() == "<03|12>");
  CHECK(coarsen(sigma, {0, 1, 2, 3}) == sigma);
  CHECK(coarsen(sigma, {2}).str() == "<0123>");
  CHECK_THROWS_AS((void)coarsen(sigma, {7}), argument_error);
}

TEST_CASE("coarsening vertex sets invert coarsen") {
  const auto sigma = CyclicPartition::parse("<0|1|2>");
  for (const auto& tau : coarsenings(sigma)) {
    const auto sets = coarsening_vertex_sets(tau, sigma);
    CHECK(!sets.empty());
    for (const auto& V : sets) CHECK(coarsen(sigma, V) == tau);
  }
}

TEST_CASE("enumeration refuses ground sets beyond the guard") {
  Config small = cfg();
  small.max_n = 2;
  CHECK_THROWS_AS((void)enumerate_cyclic_partitions(3, small), resource_error);
}
