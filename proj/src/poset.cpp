// Graded face posets, their order complexes, exact (co)homology via Smith
// normal form, and discrete-Morse style free-pair collapsing.

#include "pants/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "pants/errors.hpp"

namespace pants {

// --- FacePoset ------------------------------------------------------------

int FacePoset::add_element(std::string label, int dim) {
  if (frozen_) throw argument_error("poset is frozen");
  if (dim < 0) throw argument_error("negative dimension for " + label);
  labels_.push_back(std::move(label));
  dims_.push_back(dim);
  return static_cast<int>(labels_.size()) - 1;
}

void FacePoset::add_cover(int lower, int upper) {
  if (frozen_) throw argument_error("poset is frozen");
  cover_pairs_.emplace_back(lower, upper);
}

void FacePoset::freeze() {
  if (frozen_) throw argument_error("poset already frozen");
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dims_[a] != dims_[b]) return dims_[a] < dims_[b];
    return labels_[a] < labels_[b];
  });
  std::vector<int> new_id(n);
  for (int i = 0; i < n; ++i) new_id[order[i]] = i;

  std::vector<std::string> labels(n);
  std::vector<int> dims(n);
  for (int i = 0; i < n; ++i) {
    labels[new_id[i]] = std::move(labels_[i]);
    dims[new_id[i]] = dims_[i];
  }
  labels_ = std::move(labels);
  dims_ = std::move(dims);
  for (int i = 1; i < n; ++i) {
    if (labels_[i] == labels_[i - 1] && dims_[i] == dims_[i - 1]) {
      throw argument_error("duplicate poset label: " + labels_[i]);
    }
  }

  up_.assign(n, {});
  down_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [lo, hi] : cover_pairs_) {
    lo = new_id.at(lo);
    hi = new_id.at(hi);
    if (dims_[hi] - dims_[lo] != 1) {
      throw argument_error("cover " + labels_[lo] + " < " + labels_[hi] +
                           " does not raise dimension by one");
    }
    if (!seen.insert({lo, hi}).second) continue;
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
  cover_pairs_.clear();
  max_dim_ = -1;
  for (int d : dims_) max_dim_ = std::max(max_dim_, d);
  frozen_ = true;
}

int FacePoset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

std::vector<long long> FacePoset::f_vector() const {
  std::vector<long long> f(static_cast<std::size_t>(std::max(max_dim_ + 1, 0)), 0);
  for (int d : dims_) ++f[d];
  return f;
}

bool FacePoset::leq(int a, int b) const {
  if (a == b) return true;
  if (dims_.at(a) >= dims_.at(b)) return false;
  std::deque<int> queue{a};
  std::set<int> seen{a};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : up_[x]) {
      if (y == b) return true;
      if (dims_[y] < dims_[b] && seen.insert(y).second) queue.push_back(y);
    }
  }
  return false;
}

bool FacePoset::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    auto visit = [&](int y) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    };
    for (int y : up_[x]) visit(y);
    for (int y : down_[x]) visit(y);
  }
  return reached == size();
}

std::vector<char> FacePoset::down_closure(const std::vector<int>& seeds) const {
  std::vector<char> keep(size(), 0);
  std::deque<int> queue;
  for (int s : seeds) {
    if (!keep.at(s)) {
      keep[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : down_[x]) {
      if (!keep[y]) {
        keep[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return keep;
}

bool FacePoset::is_downclosed(const std::vector<char>& keep) const {
  if (static_cast<int>(keep.size()) != size()) {
    throw argument_error("keep mask has wrong length");
  }
  for (int x = 0; x < size(); ++x) {
    if (!keep[x]) continue;
    for (int y : down_[x]) {
      if (!keep[y]) return false;
    }
  }
  return true;
}

FacePoset FacePoset::induced(const std::vector<char>& keep) const {
  if (static_cast<int>(keep.size()) != size()) {
    throw argument_error("keep mask has wrong length");
  }
  FacePoset q;
  std::vector<int> new_id(size(), -1);
  for (int x = 0; x < size(); ++x) {
    if (keep[x]) new_id[x] = q.add_element(labels_[x], dims_[x]);
  }
  for (int x = 0; x < size(); ++x) {
    if (!keep[x]) continue;
    for (int y : up_[x]) {
      if (keep[y]) q.add_cover(new_id[x], new_id[y]);
    }
  }
  q.freeze();
  return q;
}

// --- order complex ---------------------------------------------------------

SimplicialComplex order_complex(const FacePoset& p) {
  // Maximal chains only: in a cover-graded poset every chain extends to a
  // maximal one through covers, so these facets carry the full complex.
  SimplicialComplex c;
  c.n_vertices = p.size();
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int x) -> void {
    chain.push_back(x);
    if (p.up(x).empty()) {
      c.facets.push_back(chain);
    } else {
      for (int y : p.up(x)) self(self, y);
    }
    chain.pop_back();
  };
  for (int x = 0; x < p.size(); ++x) {
    if (p.down(x).empty()) dfs(dfs, x);
  }
  return c;
}

// --- homology ---------------------------------------------------------------

namespace {

// All simplices of the complex, grouped by dimension; each simplex is an
// ascending vertex list.
std::vector<std::set<std::vector<int>>> all_simplices(const SimplicialComplex& c) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (const auto& facet : c.facets) {
    std::vector<int> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw argument_error("facet with a repeated vertex");
    }
    const int nv = static_cast<int>(sorted.size());
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < nv; ++i) {
        if (mask >> i & 1) face.push_back(sorted[i]);
      }
      const std::size_t d = face.size() - 1;
      if (by_dim.size() <= d) by_dim.resize(d + 1);
      by_dim[d].insert(std::move(face));
    }
  }
  return by_dim;
}

// Remove free pairs (simplex with a unique coface) before building boundary
// matrices; this is a homotopy equivalence and shrinks everything a lot.
void presimplify(std::vector<std::set<std::vector<int>>>& by_dim) {
  auto euler = [&]() {
    long long chi = 0;
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
      chi += (d % 2 == 0) ? static_cast<long long>(by_dim[d].size())
                          : -static_cast<long long>(by_dim[d].size());
    }
    return chi;
  };
  const long long chi_before = euler();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int d = static_cast<int>(by_dim.size()) - 2; d >= 0; --d) {
      // Count cofaces of every d-simplex.
      std::map<std::vector<int>, std::pair<int, const std::vector<int>*>> cofaces;
      for (const auto& s : by_dim[d + 1]) {
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          std::vector<int> face;
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != skip) face.push_back(s[i]);
          }
          auto& slot = cofaces[std::move(face)];
          ++slot.first;
          slot.second = &s;
        }
      }
      std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
      std::set<std::vector<int>> used;
      for (const auto& [face, slot] : cofaces) {
        if (slot.first != 1 || !by_dim[d].count(face)) continue;
        if (used.count(*slot.second)) continue;  // one collapse per coface
        used.insert(*slot.second);
        pairs.emplace_back(face, *slot.second);
      }
      for (const auto& [face, coface] : pairs) {
        by_dim[d].erase(face);
        by_dim[d + 1].erase(coface);
        progress = true;
      }
    }
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  }
  if (euler() != chi_before) {
    throw internal_error("collapse changed the Euler characteristic");
  }
}

SparseIntMatrix boundary_matrix(const std::set<std::vector<int>>& lower,
                                const std::set<std::vector<int>>& upper) {
  std::map<std::vector<int>, int> row_of;
  int r = 0;
  for (const auto& s : lower) row_of[s] = r++;
  SparseIntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  int c = 0;
  for (const auto& s : upper) {
    std::vector<std::pair<int, Int>> entries;
    int sign = 1;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::vector<int> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) face.push_back(s[i]);
      }
      auto it = row_of.find(face);
      if (it != row_of.end()) entries.emplace_back(it->second, Int(sign));
      sign = -sign;
    }
    std::sort(entries.begin(), entries.end());
    for (auto& [row, v] : entries) m.add(row, c, std::move(v));
    ++c;
  }
  return m;
}

}  // namespace

bool BettiVector::torsion_free() const {
  for (const auto& t : torsion) {
    if (!t.empty()) return false;
  }
  return true;
}

std::string BettiVector::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ranks[k]);
    if (k < torsion.size()) {
      for (const Int& d : torsion[k]) out += "+Z/" + d.str();
    }
  }
  out += ')';
  return out;
}

BettiVector homology(const SimplicialComplex& c, Coefficients coeffs,
                     const HomologyOptions& opt) {
  auto by_dim = all_simplices(c);
  if (opt.presimplify) presimplify(by_dim);
  BettiVector out;
  if (by_dim.empty()) return out;  // empty complex: no homology in any degree

  const int top = static_cast<int>(by_dim.size()) - 1;
  // ranks of boundary maps d_k : C_k -> C_{k-1}, k = 1..top
  std::vector<long long> rank_d(top + 2, 0);
  std::vector<std::vector<Int>> tors(top + 2);
  for (int k = 1; k <= top; ++k) {
    SparseIntMatrix m = boundary_matrix(by_dim[k - 1], by_dim[k]);
    if (coeffs == Coefficients::z2) {
      rank_d[k] = gf2_rank(m);
    } else {
      SmithResult s = smith_normal_form(m, opt.snf_nonzero_guard);
      rank_d[k] = s.rank;
      for (const Int& d : s.invariants) {
        if (d > 1) tors[k - 1].push_back(d);  // torsion lands one degree down
      }
    }
  }
  out.ranks.assign(top + 1, 0);
  out.torsion.assign(top + 1, {});
  for (int k = 0; k <= top; ++k) {
    out.ranks[k] =
        static_cast<long long>(by_dim[k].size()) - rank_d[k] - rank_d[k + 1];
    if (coeffs == Coefficients::integers) out.torsion[k] = tors[k];
  }
  while (out.ranks.size() > 1 && out.ranks.back() == 0 && out.torsion.back().empty()) {
    out.ranks.pop_back();
    out.torsion.pop_back();
  }
  return out;
}

BettiVector poset_homology(const FacePoset& p, Coefficients coeffs,
                           const HomologyOptions& opt) {
  return homology(order_complex(p), coeffs, opt);
}

long long euler_characteristic(const FacePoset& p) {
  long long chi = 0;
  for (int x = 0; x < p.size(); ++x) chi += (p.dim(x) % 2 == 0) ? 1 : -1;
  return chi;
}

// --- collapsing -------------------------------------------------------------

namespace {

// Core of the free-pair collapse; `priority` gives the scan order over
// potential free elements (smaller first).
FacePoset collapse_with_order(const FacePoset& p, const std::vector<int>& priority) {
  const int n = p.size();
  std::vector<char> live(n, 1);
  // An element b is maximal when no live element covers it.
  auto maximal = [&](int b) {
    for (int y : p.up(b)) {
      if (live[y]) return false;
    }
    return true;
  };
  auto unique_live_cover = [&](int a) {
    int found = -1;
    for (int y : p.up(a)) {
      if (live[y]) {
        if (found >= 0) return -1;
        found = y;
      }
    }
    return found;
  };

  // Scan repeatedly in priority order until stable.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a : priority) {
      if (!live[a]) continue;
      const int b = unique_live_cover(a);
      if (b < 0 || !maximal(b)) continue;
      live[a] = live[b] = 0;
      progress = true;
    }
  }
  return p.induced(live);
}

std::vector<int> default_priority(const FacePoset& p) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (p.dim(a) != p.dim(b)) return p.dim(a) > p.dim(b);
    return p.label(a) < p.label(b);
  });
  return order;
}

}  // namespace

FacePoset collapse(const FacePoset& p) {
  return collapse_with_order(p, default_priority(p));
}

CollapseResult collapse_until(const FacePoset& p,
                              const std::function<bool(const FacePoset&)>& goal,
                              int retries, std::uint64_t seed) {
  CollapseResult result;
  result.core = collapse(p);
  result.attempts = 1;
  if (goal(result.core)) {
    result.achieved = true;
    return result;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    FacePoset core = collapse_with_order(p, order);
    ++result.attempts;
    if (goal(core)) {
      result.core = std::move(core);
      result.achieved = true;
      return result;
    }
  }
  return result;
}

bool is_circle(const FacePoset& p) {
  if (p.size() == 0 || p.max_dim() != 1) return false;
  for (int x = 0; x < p.size(); ++x) {
    if (p.dim(x) == 1) {
      const auto& ends = p.down(x);
      if (ends.size() != 2 || ends[0] == ends[1]) return false;
    } else {
      if (p.up(x).size() != 2) return false;
    }
  }
  return p.connected();
}

bool is_single_point(const FacePoset& p) {
  return p.size() == 1 && p.dim(0) == 0;
}

bool labeled_isomorphic(const FacePoset& p1, const FacePoset& p2,
                        const std::function<std::string(const std::string&)>& mapping) {
  if (p1.size() != p2.size()) return false;
  std::vector<int> image(p1.size(), -1);
  std::vector<char> hit(p2.size(), 0);
  for (int x = 0; x < p1.size(); ++x) {
    const std::string target = mapping(p1.label(x));
    const int y = p2.index_of(target);
    if (y < 0) {
      throw argument_error("mapping sends " + p1.label(x) + " to missing label " + target);
    }
    if (hit[y]) return false;
    hit[y] = 1;
    image[x] = y;
    if (p1.dim(x) != p2.dim(y)) return false;
  }
  for (int x = 0; x < p1.size(); ++x) {
    std::vector<int> mapped;
    for (int u : p1.up(x)) mapped.push_back(image[u]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != p2.up(image[x])) return false;
  }
  return true;
}

std::string to_dot(const FacePoset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=\"" + p.label(x) + "\"];\n";
  }
  for (int x = 0; x < p.size(); ++x) {
    for (int y : p.up(x)) {
      out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

nlohmann::json poset_json(const FacePoset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (int x = 0; x < p.size(); ++x) {
    elements.push_back({{"label", p.label(x)}, {"dim", p.dim(x)}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (int x = 0; x < p.size(); ++x) {
    for (int y : p.up(x)) {
      covers.push_back({p.label(x), p.label(y)});
    }
  }
  return nlohmann::json{{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

}  // namespace pants
