#pragma once
#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pants/rational.hpp"
#include "pants/snf.hpp"

namespace pants {

// Graded face poset given by elements (label, dim) and covering relations
// with dim difference exactly 1.  Build with add_element/add_cover, then
// freeze(); freezing sorts elements by (dim, label) so that identical
// posets get identical element ids regardless of insertion order.
class FacePoset {
 public:
  int add_element(std::string label, int dim);
  void add_cover(int lower, int upper);
  void freeze();

  bool frozen() const { return frozen_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const { return labels_.at(id); }
  int dim(int id) const { return dims_.at(id); }
  int max_dim() const { return max_dim_; }
  int index_of(const std::string& label) const;  // -1 when absent

  const std::vector<int>& up(int id) const { return up_.at(id); }
  const std::vector<int>& down(int id) const { return down_.at(id); }

  std::vector<long long> f_vector() const;
  bool leq(int a, int b) const;  // reflexive; BFS over covers
  bool connected() const;        // via covers, as an undirected graph

  // keep[] marking of everything below (inclusive) the seed elements.
  std::vector<char> down_closure(const std::vector<int>& seeds) const;
  bool is_downclosed(const std::vector<char>& keep) const;
  // Restriction to a down-closed subset; covers are inherited.
  FacePoset induced(const std::vector<char>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> dims_;
  std::vector<std::pair<int, int>> cover_pairs_;
  std::vector<std::vector<int>> up_, down_;
  int max_dim_ = -1;
  bool frozen_ = false;
};

// Sort items by (dim, label), add covers between consecutive dimensions
// using `leq` on the items, freeze.  Labels must be unique.
template <class T, class LabelFn, class DimFn, class LeqFn>
FacePoset build_graded_poset(std::vector<T> items, LabelFn label_of,
                             DimFn dim_of, LeqFn leq) {
  std::sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    int da = dim_of(a), db = dim_of(b);
    if (da != db) return da < db;
    return label_of(a) < label_of(b);
  });
  FacePoset p;
  for (const T& t : items) p.add_element(label_of(t), dim_of(t));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      int dd = dim_of(items[j]) - dim_of(items[i]);
      if (dd == 0) continue;
      if (dd > 1) break;  // sorted by dim
      if (leq(items[i], items[j])) p.add_cover((int)i, (int)j);
    }
  p.freeze();
  return p;
}

struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<int>> facets;  // maximal simplices, vertex ids
};

// Facets = maximal chains (every chain extends to one through covers).
SimplicialComplex order_complex(const FacePoset& p);

enum class Coefficients { integers, z2 };

struct HomologyOptions {
  std::size_t snf_nonzero_guard = 200000;
  bool presimplify = true;  // free-face collapsing before boundary matrices
};

struct BettiVector {
  std::vector<long long> ranks;
  // torsion[k] = invariant factors (> 1) of the degree-k homology.
  std::vector<std::vector<Int>> torsion;

  bool torsion_free() const;
  std::string str() const;  // "(1,2,0)" or "(1,1+Z/2,0)"
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Simplicial homology; over the integers via Smith normal form.
BettiVector homology(const SimplicialComplex& c, Coefficients coeffs,
                     const HomologyOptions& opt = HomologyOptions());

// Homology of the order complex, enumerating chains directly.
BettiVector poset_homology(const FacePoset& p, Coefficients coeffs,
                           const HomologyOptions& opt = HomologyOptions());

long long euler_characteristic(const FacePoset& p);

// Greedy free-pair collapsing in a fixed order (candidate of highest dim
// first, label as tiebreak).  A free pair is (a,b): b is the unique live
// element covering a and b is maximal among live elements.
FacePoset collapse(const FacePoset& p);

struct CollapseResult {
  FacePoset core;
  bool achieved = false;
  int attempts = 0;
};

// Deterministic collapse first; if `goal` rejects the core, retry with
// seeded random candidate orders.
CollapseResult collapse_until(const FacePoset& p,
                              const std::function<bool(const FacePoset&)>& goal,
                              int retries, std::uint64_t seed);

bool is_circle(const FacePoset& p);
bool is_single_point(const FacePoset& p);

// mapping must send p1 labels to p2 labels bijectively, preserving dim and
// covers in both directions; throws argument_error when not total.
bool labeled_isomorphic(const FacePoset& p1, const FacePoset& p2,
                        const std::function<std::string(const std::string&)>& mapping);

std::string to_dot(const FacePoset& p);
nlohmann::json poset_json(const FacePoset& p);

}  // namespace pants
