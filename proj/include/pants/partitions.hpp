#pragma once
#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "pants/config.hpp"
#include "pants/indexset.hpp"

namespace pants {

// A cyclic arrangement of the indices {0,...,n} into k nonempty parts
// placed counterclockwise on a circle.  Only the cyclic order matters, so
// the stored part list is canonically rotated to start with the part that
// contains 0.
//
// Geometry convention used throughout: vertex s of the polygon (0-based,
// 0 <= s < k) is the boundary point between parts[s-1 mod k] and parts[s],
// and the arc carrying parts[s] runs counterclockwise from vertex s to
// vertex s+1 mod k.
class CyclicPartition {
 public:
  CyclicPartition() = default;
  // Throws argument_error unless the parts are nonempty, disjoint, and
  // their union is {0,...,n}.
  CyclicPartition(std::vector<IndexSet> parts, int n);

  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<IndexSet>& parts() const { return parts_; }
  IndexSet part(int s) const { return parts_.at(s); }
  // Index of the part containing i; throws argument_error if out of range.
  int part_of(int i) const;

  // "<01|2|3>": parts ccw starting at the part with 0, digits concatenated.
  std::string str() const;
  // Pretty form with braces around multi-element parts.
  std::string str_unicode() const;
  static CyclicPartition parse(const std::string& text);

  friend auto operator<=>(const CyclicPartition&, const CyclicPartition&) = default;

 private:
  std::vector<IndexSet> parts_;
  int n_ = -1;
};

void to_json(nlohmann::json& j, const CyclicPartition& p);

// All cyclic partitions of {0,...,n}, sorted by (k, part lists).  Guarded
// by cfg.max_n.
std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, const Config& cfg);

// Does J meet at least two parts of sigma?
bool divides(const CyclicPartition& sigma, IndexSet J);

// Merge consecutive parts so that the surviving boundary vertices are
// exactly V (subset of sigma's vertices, nonempty): part j of the result
// collects the arcs from V[j] up to (but excluding) V[j+1].
CyclicPartition coarsen(const CyclicPartition& sigma, const std::vector<int>& V);

struct Coarsening {
  CyclicPartition partition;
  // vertex_of[j] = the sigma-vertex that becomes vertex j of `partition`
  // (after its canonical rotation).
  std::vector<int> vertex_of;
};
Coarsening coarsen_with_map(const CyclicPartition& sigma, const std::vector<int>& V);

// Is tau obtainable from sigma by merging consecutive parts?
bool is_coarsening(const CyclicPartition& tau, const CyclicPartition& sigma);

// All vertex subsets V (ascending by mask) with coarsen(sigma, V) == tau.
std::vector<std::vector<int>> coarsening_vertex_sets(const CyclicPartition& tau,
                                                     const CyclicPartition& sigma);

// All coarsenings of sigma (including sigma itself), deduplicated, sorted.
std::vector<CyclicPartition> coarsenings(const CyclicPartition& sigma);

}  // namespace pants
