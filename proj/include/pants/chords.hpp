#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pants/config.hpp"
#include "pants/partitions.hpp"
#include "pants/rational.hpp"

namespace pants {

// A chord of the circle with endpoints at vertices of a cyclic partition.
// a == b encodes an infinitesimal tangent loop at that vertex.
struct Chord {
  int a = 0, b = 0;  // normalized a <= b

  Chord() = default;
  Chord(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool tangent() const { return a == b; }
  std::string str() const;  // "03", tangent "00"

  friend constexpr auto operator<=>(const Chord&, const Chord&) = default;
};

// A chord family over a base partition.  The constructor only normalizes
// (sorts, dedupes) and range-checks; whether the family is actually a net
// is the job of is_net.
class Net {
 public:
  Net() = default;
  Net(CyclicPartition base, std::vector<Chord> chords);

  const CyclicPartition& base() const { return base_; }
  const std::vector<Chord>& chords() const { return chords_; }
  int size() const { return static_cast<int>(chords_.size()); }

  std::string str() const;  // "<0|1|2>;01,02"
  static Net parse(const std::string& text);

  friend auto operator<=>(const Net&, const Net&) = default;

 private:
  CyclicPartition base_;
  std::vector<Chord> chords_;
};

void to_json(nlohmann::json& j, const Net& net);

// Point of the angle torus, coordinates in half-turn units (value r means
// angle r*pi), reduced mod 2 and normalized so theta_0 = 0.
class AnglePoint {
 public:
  AnglePoint() = default;
  explicit AnglePoint(std::vector<Rat> thetas);

  int n() const { return static_cast<int>(thetas_.size()) - 1; }
  const Rat& theta(int i) const { return thetas_.at(i); }
  const std::vector<Rat>& thetas() const { return thetas_; }
  // theta_j - theta_i reduced into [0,2).
  Rat diff(int i, int j) const;

  std::string str() const;                           // "0,1/2,1"
  static AnglePoint parse(const std::string& text);  // comma-separated

  friend auto operator<=>(const AnglePoint&, const AnglePoint&) = default;

 private:
  std::vector<Rat> thetas_;
};

// Relation of an unordered angle pair {i,j}, i < j.  interval_lo_first
// means theta_j - theta_i stays in [0,1] (the smaller index comes first
// counterclockwise); interval_hi_first is the mirror image.
enum class PairRelation : std::uint8_t {
  equal_pair = 0,
  antipodal_pair = 1,
  interval_lo_first = 2,
  interval_hi_first = 3,
};

class PairRelationTable {
 public:
  PairRelationTable() = default;
  explicit PairRelationTable(int n);

  int n() const { return n_; }
  PairRelation rel(int i, int j) const;  // any i != j
  void set(int i, int j, PairRelation r);

  // 2 bits per pair, pair (i<j) at slot j*(j-1)/2 + i.  Fits 64 bits for
  // n <= 7, which is beyond every guard.
  std::uint64_t encode() const;
  std::string str() const;

  friend auto operator<=>(const PairRelationTable&, const PairRelationTable&) = default;

 private:
  int n_ = -1;
  std::vector<std::uint8_t> rel_;
};

// --- chord predicates -------------------------------------------------

// Chords on a k-vertex circle intersect when they share a vertex or their
// endpoints weakly interleave; a tangent meets exactly the chords through
// its own vertex.
bool chords_intersect(Chord c1, Chord c2, int k);

// Nonempty, pairwise-intersecting, and every base vertex is an endpoint.
bool is_net(const Net& nu);

int alcove_dim(const Net& nu);  // chord count - 1

// Ground-set elements on the two sides of c: first = parts on the arcs
// from a (inclusive) to b (exclusive) counterclockwise, second = the rest.
// A tangent has an empty first side.
std::pair<IndexSet, IndexSet> chord_sides(Chord c, const CyclicPartition& base);

// I meets both sides of c strictly; tangents divide nothing.
bool chord_divides(Chord c, IndexSet I, const CyclicPartition& base);

// --- alcoves ----------------------------------------------------------

// Pair relations cut out by a net: a pair separated by every chord is
// antipodal, a pair separated by none is equal (and must share a part),
// otherwise the non-separating chords fix the counterclockwise order.
// Disagreement between non-separating chords throws internal_error.
PairRelationTable alcove_relations(const Net& nu);

// Relations realized by a concrete angle point.
PairRelationTable realized_relations(const AnglePoint& theta);

// Closed-alcove membership by default; closed=false tests the relative
// interior (strict interval inequalities).
bool alcove_contains(const AnglePoint& theta, const Net& nu, bool closed = true);

// A point in the relative interior of the alcove of nu: the barycenter of
// the alcove's vertex points.
AnglePoint net_witness(const Net& nu);

// The unique net whose alcove's relative interior contains theta.
Net classify_point(const AnglePoint& theta, const Config& cfg = Config());

// All nets over all cyclic partitions of {0..n}; deterministic order
// (base partition, then chord count, then chord lists).
std::vector<Net> enumerate_nets(int n, const Config& cfg = Config());

// All nets over one base; memoized internally by vertex count.
std::vector<Net> enumerate_nets_over(const CyclicPartition& base,
                                     bool tangent_free = false);

// Face order on alcoves: true iff [va] is a coarsening of [vb] and the
// chords of va land inside vb under the induced vertex inclusion, i.e.
// the closed alcove of vb contains the alcove of va.
bool net_face(const Net& va, const Net& vb);

// --- alcove faces of one stratum closure ------------------------------

// A face of the alcove decomposition of the closed simplex attached to a
// fixed partition sigma: a vertex subset V plus a net over coarsen(sigma,V).
// Equivalently (and uniquely) a nonempty pairwise-intersecting family of
// chords on sigma's own vertices; that family is sigma_chords().
struct AlcoveFace {
  std::vector<int> V;          // retained sigma-vertices, ascending
  Net net;                     // net over coarsen(sigma, V)
  std::vector<int> vertex_of;  // coarse vertex j -> sigma-vertex

  std::vector<Chord> sigma_chords() const;  // chords in sigma-vertex ids
  int dim() const { return net.size() - 1; }
  std::string str() const;  // "A(00,01)"
};

std::vector<AlcoveFace> alcove_faces_of_simplex(const CyclicPartition& sigma);

// Face order: V' subset of V and chords map in under the V'-into-V
// inclusion.  Equivalent to sigma_chords inclusion (asserted in tests).
bool alcove_face_leq(const AlcoveFace& fa, const AlcoveFace& fb);

}  // namespace pants
