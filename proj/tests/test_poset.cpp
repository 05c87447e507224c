// Face-poset engine: ordering, order complex, exact homology via Smith
// normal form, collapsing, shape recognizers, labeled isomorphism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "pants/errors.hpp"
#include "pants/poset.hpp"
#include "pants/snf.hpp"

using namespace pants;

namespace {

// Filled square: four vertices, four sides, one 2-cell.
FacePoset square_disk(const std::string& prefix = "") {
  FacePoset p;
  int v[4], e[4];
  for (int i = 0; i < 4; ++i)
    v[i] = p.add_element(prefix + "v" + std::to_string(i), 0);
  for (int i = 0; i < 4; ++i)
    e[i] = p.add_element(prefix + "e" + std::to_string(i), 1);
  const int f = p.add_element(prefix + "f", 2);
  for (int i = 0; i < 4; ++i) {
    p.add_cover(v[i], e[i]);
    p.add_cover(v[(i + 1) % 4], e[i]);
    p.add_cover(e[i], f);
  }
  p.freeze();
  return p;
}

// Hollow square: the same 1-skeleton, no 2-cell.
FacePoset square_circle() {
  FacePoset p;
  int v[4], e[4];
  for (int i = 0; i < 4; ++i) v[i] = p.add_element("v" + std::to_string(i), 0);
  for (int i = 0; i < 4; ++i) e[i] = p.add_element("e" + std::to_string(i), 1);
  for (int i = 0; i < 4; ++i) {
    p.add_cover(v[i], e[i]);
    p.add_cover(v[(i + 1) % 4], e[i]);
  }
  p.freeze();
  return p;
}

BettiVector ranks_only(std::vector<long long> r) {
  BettiVector b;
  b.ranks = std::move(r);
  b.torsion.resize(b.ranks.size());
  return b;
}

}  // namespace

TEST_CASE("square disk: counts, connectivity, contractibility") {
  const FacePoset p = square_disk();
  CHECK(p.size() == 9);
  CHECK(p.max_dim() == 2);
  CHECK(p.f_vector() == std::vector<long long>{4, 4, 1});
  CHECK(euler_characteristic(p) == 1);
  CHECK(p.connected());
  CHECK(poset_homology(p, Coefficients::integers) == ranks_only({1}));
  CHECK(is_single_point(collapse(p)));

  const SimplicialComplex oc = order_complex(p);
  CHECK(oc.n_vertices == 9);
  CHECK(oc.facets.size() == 8);  // one chain per (side, endpoint)
  for (const auto& ch : oc.facets) CHECK(ch.size() == 3);
  CHECK(homology(oc, Coefficients::integers) == ranks_only({1}));
}

TEST_CASE("hollow square is a circle and collapsing cannot shrink it") {
  const FacePoset p = square_circle();
  CHECK(p.f_vector() == std::vector<long long>{4, 4});
  CHECK(euler_characteristic(p) == 0);
  CHECK(is_circle(p));
  CHECK(poset_homology(p, Coefficients::integers) == ranks_only({1, 1}));
  CHECK(poset_homology(p, Coefficients::z2) == ranks_only({1, 1}));

  CHECK(collapse(p).size() == 8);  // no free pairs anywhere
  const CollapseResult circle_goal = collapse_until(p, is_circle, 4, 7);
  CHECK(circle_goal.achieved);
  CHECK(is_circle(circle_goal.core));
  const CollapseResult point_goal = collapse_until(p, is_single_point, 3, 7);
  CHECK(!point_goal.achieved);
}

TEST_CASE("order and closure queries on the square disk") {
  const FacePoset p = square_disk();
  const int v0 = p.index_of("v0");
  const int e0 = p.index_of("e0");
  const int f = p.index_of("f");
  REQUIRE(v0 >= 0);
  REQUIRE(e0 >= 0);
  REQUIRE(f >= 0);
  CHECK(p.index_of("nope") == -1);

  CHECK(p.leq(v0, v0));
  CHECK(p.leq(v0, e0));
  CHECK(p.leq(v0, f));
  CHECK(!p.leq(e0, v0));
  CHECK(!p.leq(p.index_of("e1"), p.index_of("e0")));
  CHECK(p.up(e0) == std::vector<int>{f});
  CHECK(p.down(e0).size() == 2);

  const std::vector<char> keep = p.down_closure({e0});
  CHECK(p.is_downclosed(keep));
  const FacePoset half = p.induced(keep);
  CHECK(half.f_vector() == std::vector<long long>{2, 1});
  CHECK(is_single_point(collapse(half)));
}

TEST_CASE("two isolated points: disconnected, two components in degree 0") {
  FacePoset p;
  p.add_element("a", 0);
  p.add_element("b", 0);
  p.freeze();
  CHECK(!p.connected());
  CHECK(poset_homology(p, Coefficients::integers) == ranks_only({2}));
}

TEST_CASE("six-vertex projective plane: integer torsion, mod-2 ranks") {
  SimplicialComplex c;
  c.n_vertices = 6;
  for (const auto& t : {std::vector<int>{1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                        {1, 4, 6}, {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
                        {3, 4, 5}, {3, 4, 6}}) {
    c.facets.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
  }
  const BettiVector z = homology(c, Coefficients::integers);
  CHECK(z.ranks == std::vector<long long>{1, 0});
  CHECK(!z.torsion_free());
  REQUIRE(z.torsion.size() == 2);
  CHECK(z.torsion[1] == std::vector<Int>{Int(2)});
  CHECK(z.str() == "(1,0+Z/2)");
  CHECK(homology(c, Coefficients::z2) == ranks_only({1, 1, 1}));
}

TEST_CASE("tetrahedron boundary is a 2-sphere") {
  SimplicialComplex c;
  c.n_vertices = 4;
  c.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  const BettiVector z = homology(c, Coefficients::integers);
  CHECK(z == ranks_only({1, 0, 1}));
  CHECK(z.torsion_free());
  CHECK(homology(c, Coefficients::z2) == ranks_only({1, 0, 1}));
}

TEST_CASE("smith normal form on small exact cases") {
  SparseIntMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(1, 0, 6);
  m.add(0, 1, 4);
  m.add(1, 1, 8);
  const SmithResult s = smith_normal_form(m, 1000);
  CHECK(s.rank == 2);
  CHECK(s.invariants == std::vector<Int>{Int(2), Int(4)});

  SparseIntMatrix d(2, 2);
  d.add(0, 0, 2);
  d.add(1, 1, 3);
  const SmithResult sd = smith_normal_form(d, 1000);
  CHECK(sd.invariants == std::vector<Int>{Int(1), Int(6)});

  SparseIntMatrix id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.add(i, i, 1);
  CHECK(smith_normal_form(id3, 1000).rank == 3);

  const SparseIntMatrix zero(3, 2);
  CHECK(smith_normal_form(zero, 1000).rank == 0);
  CHECK(smith_normal_form(zero, 1000).invariants.empty());

  SparseIntMatrix g(2, 2);
  g.add(0, 0, 1);
  g.add(1, 0, 1);
  g.add(0, 1, 1);
  g.add(1, 1, 1);
  CHECK(gf2_rank(g) == 1);
  SparseIntMatrix even(1, 1);
  even.add(0, 0, 2);
  CHECK(gf2_rank(even) == 0);
}

TEST_CASE("labeled isomorphism matches structure, rejects mismatches") {
  const FacePoset a = square_disk();
  const FacePoset b = square_disk("x");
  CHECK(labeled_isomorphic(a, b, [](const std::string& l) { return "x" + l; }));
  CHECK_THROWS_AS(
      (void)labeled_isomorphic(a, b, [](const std::string& l) { return l; }),
      argument_error);
  const FacePoset c = square_circle();
  CHECK(!labeled_isomorphic(
      a, c, [](const std::string& l) { return l; }));
}

TEST_CASE("json export lists every element and cover pair") {
  const FacePoset p = square_disk();
  const nlohmann::json j = poset_json(p);
  REQUIRE(j.contains("elements"));
  REQUIRE(j.contains("covers"));
  CHECK(j["elements"].size() == 9);
  CHECK(j["covers"].size() == 12);
}
