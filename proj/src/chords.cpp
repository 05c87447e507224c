// Chords, nets, alcoves: the combinatorics of intersecting chord families
// on a cyclically partitioned circle, plus the exact angle arithmetic that
// realizes each family as a closed cell on the torus of arguments.

#include "pants/chords.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "pants/errors.hpp"

namespace pants {

namespace {

int positive_mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// --- Chord --------------------------------------------------------------

std::string Chord::str() const {
  return std::to_string(a) + std::to_string(b);
}

// --- Net ----------------------------------------------------------------

Net::Net(CyclicPartition base, std::vector<Chord> chords)
    : base_(std::move(base)), chords_(std::move(chords)) {
  const int k = base_.k();
  for (const Chord& c : chords_) {
    if (c.a < 0 || c.b >= k) {
      throw argument_error("chord " + c.str() + " out of range for " + base_.str());
    }
  }
  std::sort(chords_.begin(), chords_.end());
  chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
}

std::string Net::str() const {
  std::string out = base_.str() + ";";
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    if (i) out += ',';
    out += chords_[i].str();
  }
  return out;
}

Net Net::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw argument_error("net text needs a ';' separator: " + text);
  }
  CyclicPartition base = CyclicPartition::parse(text.substr(0, semi));
  std::vector<Chord> chords;
  std::string rest = text.substr(semi + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    if (item.size() != 2 || !std::isdigit(static_cast<unsigned char>(item[0])) ||
        !std::isdigit(static_cast<unsigned char>(item[1]))) {
      throw argument_error("bad chord token '" + item + "' in: " + text);
    }
    chords.emplace_back(item[0] - '0', item[1] - '0');
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Net(std::move(base), std::move(chords));
}

void to_json(nlohmann::json& j, const Net& net) {
  nlohmann::json chords = nlohmann::json::array();
  for (const Chord& c : net.chords()) chords.push_back({c.a, c.b});
  j = nlohmann::json{{"partition", net.base()}, {"chords", std::move(chords)}};
}

// --- AnglePoint ----------------------------------------------------------

AnglePoint::AnglePoint(std::vector<Rat> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.empty()) throw argument_error("angle point needs at least one coordinate");
  const Rat t0 = thetas_[0];
  for (Rat& t : thetas_) t = mod_two(t - t0);
}

Rat AnglePoint::diff(int i, int j) const {
  return mod_two(thetas_.at(j) - thetas_.at(i));
}

std::string AnglePoint::str() const {
  std::string out;
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    if (i) out += ',';
    out += to_string(thetas_[i]);
  }
  return out;
}

AnglePoint AnglePoint::parse(const std::string& text) {
  std::vector<Rat> vals;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    vals.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return AnglePoint(std::move(vals));
}

// --- PairRelationTable ----------------------------------------------------

namespace {

// Slot of the unordered pair i < j.
std::size_t pair_slot(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

PairRelation mirror(PairRelation r) {
  switch (r) {
    case PairRelation::interval_lo_first: return PairRelation::interval_hi_first;
    case PairRelation::interval_hi_first: return PairRelation::interval_lo_first;
    default: return r;
  }
}

const char* relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::equal_pair: return "eq";
    case PairRelation::antipodal_pair: return "anti";
    case PairRelation::interval_lo_first: return "lo";
    case PairRelation::interval_hi_first: return "hi";
  }
  throw internal_error("unreachable relation tag");
}

}  // namespace

PairRelationTable::PairRelationTable(int n) : n_(n) {
  if (n < 0) throw argument_error("pair relation table needs n >= 0");
  rel_.assign(static_cast<std::size_t>(n) * (n + 1) / 2,
              static_cast<std::uint8_t>(PairRelation::equal_pair));
}

PairRelation PairRelationTable::rel(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > n_ || j > n_) {
    throw argument_error("bad pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i < j) return static_cast<PairRelation>(rel_[pair_slot(i, j)]);
  return mirror(static_cast<PairRelation>(rel_[pair_slot(j, i)]));
}

void PairRelationTable::set(int i, int j, PairRelation r) {
  if (i == j || i < 0 || j < 0 || i > n_ || j > n_) {
    throw argument_error("bad pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i < j) {
    rel_[pair_slot(i, j)] = static_cast<std::uint8_t>(r);
  } else {
    rel_[pair_slot(j, i)] = static_cast<std::uint8_t>(mirror(r));
  }
}

std::uint64_t PairRelationTable::encode() const {
  if (n_ > 7) throw resource_error("pair relation table too wide for a 64-bit code");
  std::uint64_t code = 0;
  for (std::size_t s = 0; s < rel_.size(); ++s) {
    code |= static_cast<std::uint64_t>(rel_[s]) << (2 * s);
  }
  return code;
}

std::string PairRelationTable::str() const {
  std::string out;
  for (int i = 0; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!out.empty()) out += ',';
      out += std::to_string(i);
      out += std::to_string(j);
      out += '=';
      out += relation_name(static_cast<PairRelation>(rel_[pair_slot(i, j)]));
    }
  }
  return out;
}

// --- chord predicates -----------------------------------------------------

bool chords_intersect(Chord c1, Chord c2, int k) {
  if (k <= 0 || c1.a < 0 || c1.b >= k || c2.a < 0 || c2.b >= k) {
    throw argument_error("chords out of range for a " + std::to_string(k) + "-gon");
  }
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return true;
  if (c1.tangent() || c2.tangent()) return false;  // tangents only meet at their vertex
  // Strict interleaving: exactly one endpoint of c2 lies strictly inside the
  // counterclockwise arc from c1.a to c1.b.
  const int len = positive_mod(c1.b - c1.a, k);
  auto inside = [&](int v) { return positive_mod(v - c1.a, k) < len; };
  return inside(c2.a) != inside(c2.b);
}

bool is_net(const Net& nu) {
  if (nu.chords().empty()) return false;
  const int k = nu.base().k();
  std::vector<bool> covered(k, false);
  const auto& cs = nu.chords();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    covered[cs[i].a] = covered[cs[i].b] = true;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!chords_intersect(cs[i], cs[j], k)) return false;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int alcove_dim(const Net& nu) {
  if (!is_net(nu)) throw argument_error("not a net: " + nu.str());
  return nu.size() - 1;
}

std::pair<IndexSet, IndexSet> chord_sides(Chord c, const CyclicPartition& base) {
  const int k = base.k();
  if (c.a < 0 || c.b >= k) {
    throw argument_error("chord " + c.str() + " out of range for " + base.str());
  }
  const int len = positive_mod(c.b - c.a, k);
  IndexSet side1, side2;
  for (int s = 0; s < k; ++s) {
    if (positive_mod(s - c.a, k) < len) {
      side1 = side1 | base.part(s);
    } else {
      side2 = side2 | base.part(s);
    }
  }
  return {side1, side2};
}

bool chord_divides(Chord c, IndexSet I, const CyclicPartition& base) {
  if (!I.subset_of(IndexSet::full(base.n() + 1))) {
    throw argument_error("index set " + I.str() + " not within {0..n} of " + base.str());
  }
  auto [s1, s2] = chord_sides(c, base);
  return I.intersects(s1) && I.intersects(s2);
}

// --- alcoves ----------------------------------------------------------

PairRelationTable alcove_relations(const Net& nu) {
  if (!is_net(nu)) throw argument_error("alcove_relations: not a net: " + nu.str());
  const CyclicPartition& base = nu.base();
  const int n = base.n();
  const int k = base.k();
  PairRelationTable table(n);
  for (int i = 0; i <= n; ++i) {
    const int pi = base.part_of(i);
    for (int j = i + 1; j <= n; ++j) {
      const int pj = base.part_of(j);
      if (pi == pj) {
        table.set(i, j, PairRelation::equal_pair);
        continue;
      }
      int separating = 0;
      int order = 0;  // 0 undecided, 1 lo first, 2 hi first
      for (const Chord& c : nu.chords()) {
        const int len = positive_mod(c.b - c.a, k);
        const bool in1_i = positive_mod(pi - c.a, k) < len;
        const bool in1_j = positive_mod(pj - c.a, k) < len;
        if (in1_i != in1_j) {
          ++separating;
          continue;
        }
        // Both parts sit on one side; the one nearer the side's start (going
        // counterclockwise) carries the smaller angle on this alcove.
        const int start = in1_i ? c.a : c.b;
        const int f = positive_mod(pi - start, k) < positive_mod(pj - start, k) ? 1 : 2;
        if (order == 0) {
          order = f;
        } else if (order != f) {
          throw internal_error("inconsistent pair order in " + nu.str() + " for pair " +
                               std::to_string(i) + "," + std::to_string(j));
        }
      }
      if (separating == nu.size()) {
        table.set(i, j, PairRelation::antipodal_pair);
      } else if (separating == 0) {
        throw internal_error("cross-part pair " + std::to_string(i) + "," +
                             std::to_string(j) + " unseparated in " + nu.str());
      } else {
        table.set(i, j, order == 1 ? PairRelation::interval_lo_first
                                   : PairRelation::interval_hi_first);
      }
    }
  }
  return table;
}

PairRelationTable realized_relations(const AnglePoint& theta) {
  const int n = theta.n();
  PairRelationTable table(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Rat d = theta.diff(i, j);
      PairRelation r;
      if (d == 0) {
        r = PairRelation::equal_pair;
      } else if (d == 1) {
        r = PairRelation::antipodal_pair;
      } else if (d < 1) {
        r = PairRelation::interval_lo_first;
      } else {
        r = PairRelation::interval_hi_first;
      }
      table.set(i, j, r);
    }
  }
  return table;
}

namespace {

// Does a gap vector lie in the convex hull of the chord points of a net?
// A chord contributes a half-turn of gap at each of its endpoints (a tangent
// a full turn at its vertex), and the chord points of a net are affinely
// independent, so the barycentric coordinates are unique: solve the linear
// system sum_c lambda_c * point_c = g, sum_c lambda_c = 1 exactly and test
// lambda >= 0.
bool hull_contains_gap(const Net& nu, const std::vector<Rat>& g) {
  const int k = nu.base().k();
  const int m = nu.size();
  // k gap rows plus the affine row of ones; one column per chord plus the
  // right-hand side.
  std::vector<std::vector<Rat>> a(k + 1, std::vector<Rat>(m + 1, Rat(0)));
  for (int c = 0; c < m; ++c) {
    const Chord& ch = nu.chords()[c];
    a[ch.a][c] += 1;
    a[ch.b][c] += 1;
    a[k][c] = 1;
  }
  for (int s = 0; s < k; ++s) a[s][m] = g[s];
  a[k][m] = 1;
  std::vector<int> pivot_row(m, -1);
  int row = 0;
  for (int col = 0; col < m; ++col) {
    int pr = -1;
    for (int r = row; r <= k; ++r) {
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) {
      throw internal_error("chord points of " + nu.str() + " are affinely dependent");
    }
    std::swap(a[row], a[pr]);
    const Rat piv = a[row][col];
    for (int c = col; c <= m; ++c) a[row][c] /= piv;
    for (int r = 0; r <= k; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int r = row; r <= k; ++r) {
    if (a[r][m] != 0) return false;  // inconsistent: g is off the affine span
  }
  for (int col = 0; col < m; ++col) {
    if (a[pivot_row[col]][m] < 0) return false;
  }
  return true;
}

}  // namespace

bool alcove_contains(const AnglePoint& theta, const Net& nu, bool closed) {
  if (theta.n() != nu.base().n()) {
    throw argument_error("angle point has " + std::to_string(theta.n() + 1) +
                         " coordinates but the net base has " +
                         std::to_string(nu.base().n() + 1));
  }
  if (!closed) {
    // The open alcove is cut out by the strict pairwise constraints.
    const PairRelationTable table = alcove_relations(nu);
    const int n = theta.n();
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Rat d = theta.diff(i, j);
        bool ok = false;
        switch (table.rel(i, j)) {
          case PairRelation::equal_pair: ok = (d == 0); break;
          case PairRelation::antipodal_pair: ok = (d == 1); break;
          case PairRelation::interval_lo_first: ok = (d > 0 && d < 1); break;
          case PairRelation::interval_hi_first: ok = (d > 1); break;
        }
        if (!ok) return false;
      }
    }
    return true;
  }
  // The closed alcove is the convex hull of the net's chord points, which the
  // weak pairwise constraints overestimate: reducing angle differences mod a
  // full turn conflates a zero gap with a full-turn gap.  Work in gap
  // coordinates instead.  Angles must agree within each part; the consecutive
  // part gaps, each reduced to [0,2), sum to twice the winding number of the
  // phase sequence, and alcove points wind exactly once.
  const CyclicPartition& base = nu.base();
  const int k = base.k();
  std::vector<Rat> phase(k);
  for (int s = 0; s < k; ++s) {
    bool first = true;
    for (int i : base.part(s).elements()) {
      if (first) {
        phase[s] = theta.theta(i);
        first = false;
      } else if (theta.theta(i) != phase[s]) {
        return false;
      }
    }
  }
  std::vector<Rat> d(k);
  Rat total(0);
  for (int s = 0; s < k; ++s) {
    d[s] = mod_two(phase[s] - phase[(s + k - 1) % k]);
    total += d[s];
  }
  if (total == 2) return hull_contains_gap(nu, d);
  if (total != 0) return false;
  // All part phases coincide; the full turn may sit in any single gap.
  for (int s = 0; s < k; ++s) {
    std::vector<Rat> g(k, Rat(0));
    g[s] = 2;
    if (hull_contains_gap(nu, g)) return true;
  }
  return false;
}

AnglePoint net_witness(const Net& nu) {
  if (!is_net(nu)) throw argument_error("net_witness: not a net: " + nu.str());
  const CyclicPartition& base = nu.base();
  const int k = base.k();
  // Average the vertex points of the alcove in gap coordinates: a chord puts
  // a half-turn jump at each endpoint, a tangent a full turn at its vertex.
  std::vector<Rat> gap(k, Rat(0));
  for (const Chord& c : nu.chords()) {
    if (c.tangent()) {
      gap[c.a] += 2;
    } else {
      gap[c.a] += 1;
      gap[c.b] += 1;
    }
  }
  const Rat m(nu.size());
  std::vector<Rat> part_theta(k, Rat(0));
  for (int s = 1; s < k; ++s) part_theta[s] = part_theta[s - 1] + gap[s] / m;
  std::vector<Rat> thetas(base.n() + 1);
  for (int i = 0; i <= base.n(); ++i) thetas[i] = part_theta[base.part_of(i)];
  return AnglePoint(std::move(thetas));
}

Net classify_point(const AnglePoint& theta, const Config& cfg) {
  const int n = theta.n();
  if (n > cfg.max_n) {
    throw resource_error("classify_point: n = " + std::to_string(n) + " exceeds max_n");
  }
  // The partition is read off the sorted distinct angles; angles grow
  // counterclockwise and element 0 sits at angle 0, so the part order below
  // is already the canonical one.
  std::vector<Rat> values;
  for (int i = 0; i <= n; ++i) values.push_back(theta.theta(i));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<IndexSet> parts(values.size());
  for (int i = 0; i <= n; ++i) {
    const auto at = std::lower_bound(values.begin(), values.end(), theta.theta(i));
    parts[static_cast<std::size_t>(at - values.begin())] =
        parts[static_cast<std::size_t>(at - values.begin())] | IndexSet::single(i);
  }
  CyclicPartition sigma(parts, n);
  const std::vector<Net> candidates = enumerate_nets_over(sigma);
  const Net* found = nullptr;
  for (const Net& nu : candidates) {
    if (alcove_contains(theta, nu, /*closed=*/false)) {
      if (found) {
        throw internal_error("point " + theta.str() + " lies in two open alcoves");
      }
      found = &nu;
    }
  }
  if (!found) {
    throw internal_error("point " + theta.str() + " lies in no open alcove over " +
                         sigma.str());
  }
  return *found;
}

// --- net enumeration ----------------------------------------------------

namespace {

// Pairwise-intersecting chord families covering every vertex of a k-gon,
// independent of part contents, so they can be cached per vertex count.
const std::vector<std::vector<Chord>>& net_shapes(int k, bool tangent_free) {
  static std::map<std::pair<int, bool>, std::vector<std::vector<Chord>>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({k, tangent_free});
  if (it != cache.end()) return it->second;
  if (k > 8) {
    throw resource_error("net enumeration capped at 8 vertices, got " + std::to_string(k));
  }

  std::vector<Chord> all;
  for (int a = 0; a < k; ++a) {
    for (int b = tangent_free ? a + 1 : a; b < k; ++b) all.emplace_back(a, b);
  }
  const int m = static_cast<int>(all.size());
  std::vector<std::uint64_t> adj(m, 0);
  std::vector<std::uint32_t> cover(m, 0);
  for (int i = 0; i < m; ++i) {
    cover[i] = (1u << all[i].a) | (1u << all[i].b);
    for (int j = 0; j < m; ++j) {
      if (i != j && chords_intersect(all[i], all[j], k)) adj[i] |= 1ull << j;
    }
  }
  const std::uint32_t all_vertices = (k == 32) ? ~0u : ((1u << k) - 1);

  std::vector<std::vector<Chord>> out;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int first, std::uint32_t covered, std::uint64_t candidates) -> void {
    for (int idx = first; idx < m; ++idx) {
      if (!(candidates >> idx & 1)) continue;
      chosen.push_back(idx);
      const std::uint32_t c2 = covered | cover[idx];
      if (c2 == all_vertices) {
        std::vector<Chord> family;
        family.reserve(chosen.size());
        for (int t : chosen) family.push_back(all[t]);
        out.push_back(std::move(family));
      }
      self(self, idx + 1, c2, candidates & adj[idx]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, m >= 64 ? ~0ull : ((1ull << m) - 1));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return cache.emplace(std::make_pair(k, tangent_free), std::move(out)).first->second;
}

}  // namespace

std::vector<Net> enumerate_nets_over(const CyclicPartition& base, bool tangent_free) {
  std::vector<Net> nets;
  for (const auto& chords : net_shapes(base.k(), tangent_free)) {
    nets.emplace_back(base, chords);
  }
  return nets;
}

std::vector<Net> enumerate_nets(int n, const Config& cfg) {
  if (n > cfg.net_enum_max_n) {
    throw resource_error("enumerate_nets: n = " + std::to_string(n) +
                         " exceeds net_enum_max_n = " + std::to_string(cfg.net_enum_max_n));
  }
  std::vector<Net> nets;
  for (const CyclicPartition& base : enumerate_cyclic_partitions(n, cfg)) {
    auto over = enumerate_nets_over(base);
    nets.insert(nets.end(), std::make_move_iterator(over.begin()),
                std::make_move_iterator(over.end()));
  }
  return nets;
}

bool net_face(const Net& va, const Net& vb) {
  for (const std::vector<int>& V : coarsening_vertex_sets(va.base(), vb.base())) {
    const Coarsening cw = coarsen_with_map(vb.base(), V);
    bool all_in = true;
    for (const Chord& c : va.chords()) {
      const Chord mapped(cw.vertex_of.at(c.a), cw.vertex_of.at(c.b));
      if (!std::binary_search(vb.chords().begin(), vb.chords().end(), mapped)) {
        all_in = false;
        break;
      }
    }
    if (all_in) return true;
  }
  return false;
}

// --- alcove faces of one stratum closure ------------------------------

std::vector<Chord> AlcoveFace::sigma_chords() const {
  std::vector<Chord> out;
  out.reserve(net.chords().size());
  for (const Chord& c : net.chords()) {
    out.emplace_back(vertex_of.at(c.a), vertex_of.at(c.b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AlcoveFace::str() const {
  std::string out = "A(";
  const auto chords = sigma_chords();
  for (std::size_t i = 0; i < chords.size(); ++i) {
    if (i) out += ',';
    out += chords[i].str();
  }
  out += ')';
  return out;
}

std::vector<AlcoveFace> alcove_faces_of_simplex(const CyclicPartition& sigma) {
  const int k = sigma.k();
  std::vector<AlcoveFace> faces;
  for (IndexSet mask : nonempty_subsets(IndexSet::full(k - 1))) {
    const std::vector<int> V = mask.elements();
    Coarsening cw = coarsen_with_map(sigma, V);
    for (Net& nu : enumerate_nets_over(cw.partition)) {
      faces.push_back(AlcoveFace{V, std::move(nu), cw.vertex_of});
    }
  }
  return faces;
}

bool alcove_face_leq(const AlcoveFace& fa, const AlcoveFace& fb) {
  // fa's retained vertices must survive into fb, and fa's chords must map to
  // chords of fb under the re-indexing induced by that inclusion.
  std::map<int, int> fb_index;
  for (std::size_t j = 0; j < fb.vertex_of.size(); ++j) {
    fb_index[fb.vertex_of[j]] = static_cast<int>(j);
  }
  for (int v : fa.V) {
    if (!fb_index.count(v)) return false;
  }
  const auto& fb_chords = fb.net.chords();
  for (const Chord& c : fa.net.chords()) {
    const Chord mapped(fb_index.at(fa.vertex_of.at(c.a)), fb_index.at(fa.vertex_of.at(c.b)));
    if (!std::binary_search(fb_chords.begin(), fb_chords.end(), mapped)) return false;
  }
  return true;
}

}  // namespace pants
