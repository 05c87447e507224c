// Simplex-side geometry: dualizing subdivision cells, spine cubes, the
// cut-corner region, and partial coamoeba membership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "pants/simplex.hpp"

using namespace pants;

namespace {
RationalPoint rp(std::initializer_list<Rat> xs) { return RationalPoint(xs); }
const Rat half = Rat(1) / 2;
const Rat third = Rat(1) / 3;
}  // namespace

TEST_CASE("dualizing subdivision of a segment: five cells") {
  const auto cells = dsd_cells(IndexSet::full(1));
  std::set<std::string> labels;
  for (const auto& c : cells) labels.insert(c.str());
  CHECK(labels == std::set<std::string>{"D(0,0)", "D(1,1)", "D(0,01)",
                                        "D(1,01)", "D(01,01)"});
}

TEST_CASE("dualizing subdivision of a triangle: f-vector (7,9,3)") {
  std::map<int, int> by_dim;
  for (const auto& c : dsd_cells(IndexSet::full(2))) ++by_dim[c.dim()];
  CHECK(by_dim == std::map<int, int>{{0, 7}, {1, 9}, {2, 3}});
}

TEST_CASE("dsd face order: bigger inner set and smaller outer set below") {
  const DsdCell center{IndexSet::parse("01"), IndexSet::parse("01")};
  const DsdCell halfcell{IndexSet::parse("0"), IndexSet::parse("01")};
  const DsdCell corner{IndexSet::parse("0"), IndexSet::parse("0")};
  const DsdCell other{IndexSet::parse("1"), IndexSet::parse("1")};
  CHECK(dsd_face_leq(center, halfcell));
  CHECK(dsd_face_leq(corner, halfcell));
  CHECK(!dsd_face_leq(other, halfcell));
  CHECK(!dsd_face_leq(halfcell, center));
  CHECK(dsd_face_leq(halfcell, halfcell));
}

TEST_CASE("spine of a triangle is a tripod: four cubes meet three edges") {
  const auto cubes = spine_cubes(IndexSet::full(2));
  std::map<int, int> by_dim;
  std::set<std::string> labels;
  for (const auto& h : cubes) {
    ++by_dim[h.dim()];
    labels.insert(h.str());
  }
  CHECK(by_dim == std::map<int, int>{{0, 4}, {1, 3}});
  CHECK(labels.count("H(012,012)") == 1);
  CHECK(labels.count("H(01,012)") == 1);
  CHECK(labels.count("H(01,01)") == 1);

  CHECK(spine_cubes(IndexSet::full(1)).size() == 1);
  CHECK(spine_cubes(IndexSet::single(0)).empty());

  CHECK(spine_face_leq(SpineCube{IndexSet::parse("01"), IndexSet::parse("01")},
                       SpineCube{IndexSet::parse("01"), IndexSet::parse("012")}));
  CHECK(spine_face_leq(SpineCube{IndexSet::parse("012"), IndexSet::parse("012")},
                       SpineCube{IndexSet::parse("01"), IndexSet::parse("012")}));
  CHECK(!spine_face_leq(SpineCube{IndexSet::parse("02"), IndexSet::parse("02")},
                        SpineCube{IndexSet::parse("01"), IndexSet::parse("012")}));
}

TEST_CASE("barycenters land in the simplex on the right face") {
  const RationalPoint b = simplex_barycenter(IndexSet::parse("02"), 2);
  CHECK(b == rp({half, Rat(0), half}));
  CHECK(in_simplex(b));
  CHECK(in_simplex(simplex_barycenter(IndexSet::full(2), 2)));
  CHECK(!in_simplex(rp({Rat(1), Rat(1), Rat(-1)})));
  CHECK(!in_simplex(rp({half, Rat(0), Rat(0)})));  // does not sum to 1
}

TEST_CASE("cut-corner region: no coordinate beyond one half") {
  CHECK(amoeba_contains(rp({half, Rat(0), half})));
  CHECK(amoeba_contains(rp({third, third, third})));
  CHECK(!amoeba_contains(rp({Rat(2) / 3, Rat(1) / 6, Rat(1) / 6})));
  CHECK(!amoeba_contains(rp({Rat(1), Rat(0), Rat(0)})));
}

TEST_CASE("spine cube membership: tied maxima with the right support") {
  const SpineCube edge{IndexSet::parse("01"), IndexSet::full(2)};
  CHECK(spine_cube_contains(edge, rp({half, half, Rat(0)})));
  CHECK(spine_cube_contains(edge, rp({third, third, third})));
  CHECK(!spine_cube_contains(edge, rp({half, Rat(1) / 4, Rat(1) / 4})));

  const SpineCube vertex{IndexSet::parse("01"), IndexSet::parse("01")};
  CHECK(spine_cube_contains(vertex, rp({half, half, Rat(0)})));
  CHECK(!spine_cube_contains(vertex, rp({third, third, third})));
}

TEST_CASE("partial coamoeba: all circular gaps at most a half turn") {
  const IndexSet all = IndexSet::full(2);
  CHECK(coamoeba_contains(AnglePoint::parse("0,2/3,4/3"), all));
  CHECK(coamoeba_contains(AnglePoint::parse("0,1,1/2"), all));
  CHECK(coamoeba_contains(AnglePoint::parse("0,0,1"), all));
  CHECK(!coamoeba_contains(AnglePoint::parse("0,0,0"), all));
  CHECK(!coamoeba_contains(AnglePoint::parse("0,1/10,19/10"), all));

  // A pair is inside only when exactly antipodal.
  const IndexSet pair = IndexSet::parse("01");
  CHECK(coamoeba_contains(AnglePoint::parse("0,1,1/2"), pair));
  CHECK(!coamoeba_contains(AnglePoint::parse("0,1/2,1"), pair));
  CHECK(!coamoeba_contains(AnglePoint::parse("0,0,1"), pair));
}
