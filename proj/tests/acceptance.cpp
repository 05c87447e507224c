// Acceptance gate: one line per criterion, nonzero exit when any line
// fails.  Each criterion re-derives its numbers from the public API; the
// timed ones enforce their wall-clock budgets.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "pants/chords.hpp"
#include "pants/pants.hpp"
#include "pants/partitions.hpp"
#include "pants/poset.hpp"
#include "pants/verify.hpp"

using namespace pants;

namespace {

struct Line {
  bool pass = false;
  std::string detail;
};

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool ranks_match(const BettiVector& b, const std::vector<long long>& want) {
  return b.ranks == want && b.torsion_free();
}

// Run one named battery check for each listed n; all must pass.
Line battery(const std::vector<std::string>& checks, const std::vector<int>& ns,
             std::string ok_text) {
  for (const int n : ns) {
    for (const CheckReport& r : run_all(n, checks, 0)) {
      if (r.status == CheckStatus::fail) {
        return {false, r.name + " failed at n=" + std::to_string(n) + ": " +
                           r.witness.dump()};
      }
    }
  }
  return {true, std::move(ok_text)};
}

Line c01() {
  const auto nets = enumerate_nets(1);
  if (nets.size() != 4) {
    return {false, "expected 4 nets, got " + std::to_string(nets.size())};
  }
  std::set<std::uint64_t> tables;
  for (const Net& nu : nets) {
    if (!tables.insert(alcove_relations(nu).encode()).second) {
      return {false, "duplicate relation table for " + nu.str()};
    }
  }
  const auto sweep = sign_vector_oracle(1);
  if (tables != std::set<std::uint64_t>(sweep.begin(), sweep.end())) {
    return {false, "relation tables disagree with the grid sweep"};
  }
  return {true, "4 nets, relation tables biject with the grid sweep"};
}

Line c02() {
  const long long want[] = {0, 2, 6, 26};
  for (int n = 1; n <= 3; ++n) {
    const auto got =
        static_cast<long long>(enumerate_cyclic_partitions(n, Config{}).size());
    if (got != want[n] || got != cyclic_partition_count_oracle(n)) {
      return {false, "count " + std::to_string(got) + " at n=" +
                         std::to_string(n) + " (oracle " +
                         std::to_string(cyclic_partition_count_oracle(n)) + ")"};
    }
  }
  return {true, "cyclic partition counts 2/6/26 match the rotation oracle"};
}

Line c03() {
  const PantsComplex pc = enumerate_pants_cells(2);
  if (pc.poset.f_vector() != std::vector<long long>{6, 9, 2}) {
    return {false, "f-vector off"};
  }
  if (euler_characteristic(pc.poset) != -1) return {false, "Euler number off"};
  const BettiVector b = poset_homology(pc.poset, Coefficients::integers);
  if (!ranks_match(b, {1, 2})) return {false, "homology " + b.str()};
  return {true, "lattice at n=2: f=(6,9,2), Euler -1, Betti (1,2), no torsion"};
}

Line c04() {
  const PhaseComplex ph = assemble_phase_tropical(3);
  const long long chi = euler_characteristic(ph.poset);
  if (chi != 1) return {false, "Euler number " + std::to_string(chi)};
  const BettiVector b = poset_homology(ph.poset, Coefficients::integers);
  if (!ranks_match(b, {1, 3, 3})) return {false, "homology " + b.str()};
  return {true, "phase-tropical complex at n=3: Betti (1,3,3), Euler +1"};
}

Line c11() {
  const OberReport rep = ober_2x2_report();
  std::string bad;
  if (rep.two_cells != 6) {
    bad += "two-cells " + std::to_string(rep.two_cells) + "; ";
  }
  if (!ranks_match(rep.ober_homology, {1})) {
    bad += "roof homology " + rep.ober_homology.str() + "; ";
  }
  if (!ranks_match(rep.phase_homology, {1})) {
    bad += "phase homology " + rep.phase_homology.str() + "; ";
  }
  if (!rep.boundaries_coincide) {
    bad += "boundary circles differ: " + std::to_string(rep.shared_segments) +
           " shared, " + std::to_string(rep.phase_only) + " phase-only, " +
           std::to_string(rep.ober_only) + " roof-only (" + rep.witness + ")";
  }
  if (!bad.empty()) return {false, bad};
  return {true, "roof cell: 6 squares, two disks, matching boundary circles"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Line (*fn)();
    long long budget_ms;  // 0 = untimed
  };
  const Criterion criteria[] = {
      {"one-element net census", c01, 1000},
      {"cyclic partition censuses", c02, 1000},
      {"two-element cell lattice", c03, 10000},
      {"three-element global homology", c04, 300000},
      {"piece dimension formula",
       [] {
         return battery({"dimension-formula"}, {1, 2, 3, 4},
                        "max piece dim = |parts|+|support|-4, all cells, n<=4");
       },
       0},
      {"stratum lattice isomorphism",
       [] {
         return battery({"lattice-isomorphism"}, {1, 2, 3, 4},
                        "stratum-label poset matches the abstract lattice, n<=4");
       },
       0},
      {"complement subcomplex checks",
       [] {
         return battery({"l-circle", "star-complement"}, {1, 2, 3},
                        "L circles and star complement cross-checks, n<=3");
       },
       0},
      {"cell boundary spheres",
       [] {
         return battery({"boundary-sphere"}, {1, 2, 3},
                        "every cell boundary has sphere homology, n<=3");
       },
       0},
      {"membership consistency",
       [] {
         return battery({"membership-consistency"}, {1, 2, 3},
                        "10000 sampled points per n agree with the pieces, n<=3");
       },
       0},
      {"facet dichotomy",
       [] {
         return battery({"facet-types"}, {1, 2, 3},
                        "top pieces fall into the two shapes; wall counts, n<=3");
       },
       0},
      {"roof cell comparison", c11, 10000},
  };

  int failures = 0;
  int idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    const auto t0 = std::chrono::steady_clock::now();
    Line line;
    try {
      line = c.fn();
    } catch (const std::exception& e) {
      line = {false, std::string("exception: ") + e.what()};
    }
    const long long elapsed = ms_since(t0);
    if (line.pass && c.budget_ms > 0 && elapsed > c.budget_ms) {
      line.pass = false;
      line.detail = "over budget: " + std::to_string(elapsed) + " ms > " +
                    std::to_string(c.budget_ms) + " ms";
    }
    if (!line.pass) ++failures;
    std::printf("C%02d %s (%6lld ms) %s: %s\n", idx,
                line.pass ? "PASS" : "FAIL", elapsed, c.name,
                line.detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d of 11 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
