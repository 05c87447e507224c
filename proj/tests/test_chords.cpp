// Chord combinatorics and alcove geometry: intersection/net predicates,
// census sizes, relation tables, open vs closed membership, face order.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pants/chords.hpp"
#include "pants/config.hpp"
#include "pants/verify.hpp"

using namespace pants;

namespace {
Net net_of(const std::string& text) { return Net::parse(text); }
AnglePoint pt(const std::string& text) { return AnglePoint::parse(text); }
}  // namespace

TEST_CASE("chord intersection: shared vertex, interleaving, tangents") {
  const int k = 4;
  CHECK(chords_intersect(Chord(0, 2), Chord(1, 3), k));   // cross
  CHECK(!chords_intersect(Chord(0, 1), Chord(2, 3), k));  // disjoint arcs
  CHECK(chords_intersect(Chord(0, 1), Chord(1, 2), k));   // shared vertex
  CHECK(chords_intersect(Chord(0, 2), Chord(2, 3), k));
  CHECK(chords_intersect(Chord(0, 0), Chord(0, 2), k));   // tangent at 0
  CHECK(!chords_intersect(Chord(0, 0), Chord(1, 3), k));  // tangent misses
  CHECK(!chords_intersect(Chord(0, 0), Chord(1, 1), k));  // two tangents
}

TEST_CASE("net predicate needs intersection and full vertex coverage") {
  const auto two = CyclicPartition::parse("<0|1>");
  CHECK(is_net(Net(two, {Chord(0, 1)})));
  CHECK(is_net(Net(two, {Chord(0, 0), Chord(0, 1)})));
  CHECK(!is_net(Net(two, {Chord(0, 0), Chord(1, 1)})));  // not intersecting
  CHECK(!is_net(Net(two, {})));                          // empty
  const auto three = CyclicPartition::parse("<0|1|2>");
  CHECK(is_net(Net(three, {Chord(0, 1), Chord(0, 2)})));
  CHECK(!is_net(Net(three, {Chord(0, 1)})));  // vertex 2 uncovered
}

TEST_CASE("the four nets on a one-element ground set") {
  std::set<std::string> labels;
  for (const Net& nu : enumerate_nets(1)) labels.insert(nu.str());
  CHECK(labels == std::set<std::string>{"<0|1>;01", "<0|1>;00,01",
                                        "<0|1>;01,11", "<01>;00"});
}

TEST_CASE("net census over two elements: 24 total, split by base") {
  std::map<std::string, int> per_base;
  for (const Net& nu : enumerate_nets(2)) ++per_base[nu.base().str()];
  CHECK(per_base == std::map<std::string, int>{{"<0|1|2>", 7},
                                               {"<0|2|1>", 7},
                                               {"<01|2>", 3},
                                               {"<0|12>", 3},
                                               {"<02|1>", 3},
                                               {"<012>", 1}});
  CHECK(enumerate_nets_over(CyclicPartition::parse("<0|1|2>")).size() == 7);
  // Tangent-free: the triangle and the three fans.
  CHECK(enumerate_nets_over(CyclicPartition::parse("<0|1|2>"), true).size() == 4);
}

TEST_CASE("chord sides and the divides predicate") {
  const auto base = CyclicPartition::parse("<0|3|12>");  // vertices 0,1,2
  const auto [s1, s2] = chord_sides(Chord(0, 2), base);
  CHECK(s1 == IndexSet::parse("03"));
  CHECK(s2 == IndexSet::parse("12"));
  const auto [t1, t2] = chord_sides(Chord(1, 1), base);
  CHECK(t1.empty());
  CHECK(t2 == IndexSet::full(3));

  CHECK(chord_divides(Chord(0, 2), IndexSet::parse("01"), base));
  CHECK(!chord_divides(Chord(0, 2), IndexSet::parse("12"), base));
  CHECK(!chord_divides(Chord(1, 1), IndexSet::full(3), base));  // tangent

  // Dividing is monotone under enlarging the support.
  for (const IndexSet I : nonempty_subsets(IndexSet::full(3))) {
    if (!chord_divides(Chord(0, 2), I, base)) continue;
    for (const IndexSet J : nonempty_subsets(IndexSet::full(3))) {
      if (I.subset_of(J)) CHECK(chord_divides(Chord(0, 2), J, base));
    }
  }
}

TEST_CASE("alcove dimension is one less than the chord count") {
  const auto base = CyclicPartition::parse("<0|1|2|3|45>");
  const Net nu1(base, {Chord(1, 4), Chord(2, 4), Chord(3, 4), Chord(0, 3)});
  CHECK(is_net(nu1));
  CHECK(alcove_dim(nu1) == 3);
  const Net nu2(base,
                {Chord(0, 4), Chord(1, 4), Chord(2, 4), Chord(3, 4), Chord(4, 4)});
  CHECK(is_net(nu2));
  CHECK(alcove_dim(nu2) == 4);
}

TEST_CASE("net labels parse back to themselves") {
  for (const Net& nu : enumerate_nets(2)) CHECK(Net::parse(nu.str()) == nu);
}

TEST_CASE("angle points normalize: theta_0 = 0, coordinates mod 2") {
  CHECK(pt("1/2,1,3/2").str() == "0,1/2,1");
  const AnglePoint a(std::vector<Rat>{Rat(0), Rat(5) / 2});
  CHECK(a.theta(1) == Rat(1) / 2);
  CHECK(a.diff(0, 1) == Rat(1) / 2);
  CHECK(a.diff(1, 0) == Rat(3) / 2);
  CHECK(AnglePoint::parse(a.str()) == a);
}

TEST_CASE("witness points realize exactly their net's relation table") {
  for (int n = 1; n <= 2; ++n) {
    for (const Net& nu : enumerate_nets(n)) {
      const AnglePoint w = net_witness(nu);
      CHECK(realized_relations(w) == alcove_relations(nu));
      CHECK(alcove_contains(w, nu, /*closed=*/false));
      CHECK(alcove_contains(w, nu, /*closed=*/true));
    }
  }
}

TEST_CASE("classify_point inverts net_witness") {
  for (int n = 1; n <= 2; ++n) {
    for (const Net& nu : enumerate_nets(n)) {
      CHECK(classify_point(net_witness(nu)) == nu);
    }
  }
  CHECK(classify_point(pt("0,1,1/2")).str() == "<0|2|1>;01,02");
}

TEST_CASE("open alcoves partition: each point lands in exactly one") {
  const auto points = {pt("0,0,0"), pt("0,1,1"), pt("0,2/3,4/3"),
                       pt("0,1/2,3/2"), pt("0,1/7,1")};
  for (const AnglePoint& theta : points) {
    int hits = 0;
    for (const Net& nu : enumerate_nets(2)) {
      if (alcove_contains(theta, nu, /*closed=*/false)) ++hits;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("closed membership is convex-hull membership, not a pairwise box") {
  const Net tri = net_of("<0|1|2>;01,02,12");
  // The all-equal point satisfies every pairwise constraint weakly, yet the
  // gap vector it lifts to lies outside the hull of the triangle's chords.
  CHECK(!alcove_contains(pt("0,0,0"), tri, /*closed=*/true));
  CHECK(alcove_contains(net_witness(tri), tri, /*closed=*/true));
  CHECK(net_witness(tri) == pt("0,2/3,4/3"));

  const Net bare = net_of("<0|1>;01");
  const Net with00 = net_of("<0|1>;00,01");
  const Net with11 = net_of("<0|1>;01,11");
  CHECK(alcove_contains(pt("0,1"), bare, /*closed=*/true));
  CHECK(!alcove_contains(pt("0,0"), bare, /*closed=*/true));
  CHECK(alcove_contains(pt("0,0"), with00, /*closed=*/true));
  CHECK(alcove_contains(pt("0,0"), with11, /*closed=*/true));
  CHECK(alcove_contains(pt("0,1/2"), with00, /*closed=*/false));
  CHECK(!alcove_contains(pt("0,3/2"), with00, /*closed=*/false));
  CHECK(alcove_contains(pt("0,3/2"), with11, /*closed=*/false));
  CHECK(!alcove_contains(pt("0,1/2"), with11, /*closed=*/false));
}

TEST_CASE("closed alcoves contain every face's interior") {
  for (const Net& va : enumerate_nets(2)) {
    for (const Net& vb : enumerate_nets(2)) {
      if (!net_face(va, vb)) continue;
      CHECK(alcove_contains(net_witness(va), vb, /*closed=*/true));
    }
  }
}

TEST_CASE("net face order: chord inclusion over a fixed base, coarsenings") {
  const Net bare = net_of("<0|1>;01");
  const Net with00 = net_of("<0|1>;00,01");
  const Net point = net_of("<01>;00");
  CHECK(net_face(bare, with00));
  CHECK(!net_face(with00, bare));
  CHECK(net_face(bare, bare));
  // The all-equal vertex is a face of both tangent-bearing chambers: the
  // single coarse vertex can map to either side.
  CHECK(net_face(point, with00));
  CHECK(net_face(point, net_of("<0|1>;01,11")));
  CHECK(!net_face(point, bare));
}

TEST_CASE("alcove faces of one simplex = pairwise-intersecting chord sets") {
  const auto sigma = CyclicPartition::parse("<0|1|2>");
  const auto faces = alcove_faces_of_simplex(sigma);

  // Independent count: brute-force over all subsets of the six chords.
  std::vector<Chord> all;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) all.push_back(Chord(a, b));
  int expect = 0;
  for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<Chord> fam;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i)) fam.push_back(all[i]);
    bool ok = true;
    for (std::size_t i = 0; i < fam.size() && ok; ++i)
      for (std::size_t j = i + 1; j < fam.size() && ok; ++j)
        ok = chords_intersect(fam[i], fam[j], 3);
    if (ok) ++expect;
  }
  CHECK(static_cast<int>(faces.size()) == expect);

  std::set<std::string> labels;
  for (const auto& f : faces) {
    CHECK(labels.insert(f.str()).second);
    CHECK(f.dim() == static_cast<int>(f.sigma_chords().size()) - 1);
    CHECK(is_net(f.net));
  }

  // The face order is chord-set inclusion in sigma's own vertex ids.
  for (const auto& fa : faces) {
    const auto ca = fa.sigma_chords();
    for (const auto& fb : faces) {
      const auto cb = fb.sigma_chords();
      const bool incl = std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
      CHECK(alcove_face_leq(fa, fb) == incl);
    }
  }
}
