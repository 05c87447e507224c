// Pair-of-pants cell lattice, phase-tropical pieces, and the diagnostic
// reports (links, facet census, roof-vs-phase comparison) built on them.

#include "pants/pants.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "pants/errors.hpp"

namespace pants {

// --- labels -----------------------------------------------------------

std::string PantsCellLabel::str() const {
  return "(" + sigma.str() + "," + J.str() + ")";
}

std::string Piece::str() const {
  return "P(" + I.str() + "," + K.str() + "," + nu.str() + ")";
}

std::string Piece::stratum_str() const {
  return "(" + nu.base().str() + "," + K.str() + ")";
}

// --- piece predicates ---------------------------------------------------

bool piece_valid(const Piece& p, int n) {
  if (p.nu.base().n() != n) return false;
  if (p.I.empty() || !p.I.subset_of(p.K) || !p.K.subset_of(IndexSet::full(n))) {
    return false;
  }
  if (!is_net(p.nu)) return false;
  for (const Chord& c : p.nu.chords()) {
    if (c.tangent()) return false;
    if (!chord_divides(c, p.I, p.nu.base())) return false;
  }
  return true;
}

bool piece_face_leq(const Piece& a, const Piece& b) {
  return b.I.subset_of(a.I) && a.K.subset_of(b.K) && net_face(a.nu, b.nu);
}

// --- cell lattice ---------------------------------------------------------

PantsComplex enumerate_pants_cells(int n, const Config& cfg) {
  if (n > cfg.lattice_max_n) {
    throw resource_error("enumerate_pants_cells: n = " + std::to_string(n) +
                         " exceeds lattice_max_n = " + std::to_string(cfg.lattice_max_n));
  }
  std::vector<PantsCellLabel> cells;
  for (const CyclicPartition& sigma : enumerate_cyclic_partitions(n, cfg)) {
    for (IndexSet J : nonempty_subsets(IndexSet::full(n))) {
      if (divides(sigma, J)) cells.push_back(PantsCellLabel{sigma, J});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const PantsCellLabel& a, const PantsCellLabel& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.str() < b.str();
  });
  PantsComplex out;
  out.poset = build_graded_poset(
      cells, [](const PantsCellLabel& c) { return c.str(); },
      [](const PantsCellLabel& c) { return c.dim(); },
      [](const PantsCellLabel& a, const PantsCellLabel& b) {
        return a.J.subset_of(b.J) && is_coarsening(a.sigma, b.sigma);
      });
  out.cells = std::move(cells);
  return out;
}

// --- pieces -----------------------------------------------------------------

namespace {

// All valid pieces with support inside J over the given bases.
std::vector<Piece> collect_pieces(const std::vector<CyclicPartition>& bases, IndexSet J) {
  std::vector<Piece> out;
  for (const CyclicPartition& tau : bases) {
    for (const Net& nu : enumerate_nets_over(tau, /*tangent_free=*/true)) {
      std::vector<std::pair<IndexSet, IndexSet>> sides;
      sides.reserve(nu.chords().size());
      for (const Chord& c : nu.chords()) sides.push_back(chord_sides(c, tau));
      for (IndexSet I : nonempty_subsets(J)) {
        const bool divided = std::all_of(sides.begin(), sides.end(), [&](const auto& s) {
          return I.intersects(s.first) && I.intersects(s.second);
        });
        if (!divided) continue;
        const std::uint32_t rest = (J - I).bits;
        std::uint32_t extra = 0;
        while (true) {
          out.push_back(Piece{I, IndexSet(I.bits | extra), nu});
          if (extra == rest) break;
          extra = (extra - rest) & rest;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.str() < b.str();
  });
  return out;
}

FacePoset piece_poset(const std::vector<Piece>& pieces) {
  return build_graded_poset(
      pieces, [](const Piece& p) { return p.str(); },
      [](const Piece& p) { return p.dim(); }, piece_face_leq);
}

void require_cell(const CyclicPartition& sigma, IndexSet J) {
  if (J.empty() || !J.subset_of(IndexSet::full(sigma.n()))) {
    throw argument_error("support " + J.str() + " not inside the ground set of " + sigma.str());
  }
  if (!divides(sigma, J)) {
    throw argument_error("(" + sigma.str() + "," + J.str() + ") is not a cell: " +
                         J.str() + " sits inside one part");
  }
}

}  // namespace

CellPieces pieces_of_cell(const CyclicPartition& sigma, IndexSet J, const Config& cfg) {
  require_cell(sigma, J);
  if (sigma.n() > cfg.piece_poset_max_n) {
    throw resource_error("pieces_of_cell: n = " + std::to_string(sigma.n()) +
                         " exceeds piece_poset_max_n = " +
                         std::to_string(cfg.piece_poset_max_n));
  }
  CellPieces out;
  out.pieces = collect_pieces(coarsenings(sigma), J);
  out.poset = piece_poset(out.pieces);
  return out;
}

PhaseComplex assemble_phase_tropical(int n, const Config& cfg) {
  if (n > cfg.piece_poset_max_n) {
    throw resource_error("assemble_phase_tropical: n = " + std::to_string(n) +
                         " exceeds piece_poset_max_n = " +
                         std::to_string(cfg.piece_poset_max_n));
  }
  PhaseComplex out;
  out.pieces = collect_pieces(enumerate_cyclic_partitions(n, cfg), IndexSet::full(n));
  out.poset = piece_poset(out.pieces);
  out.stratum_labels.reserve(out.pieces.size());
  for (const Piece& p : out.pieces) out.stratum_labels.push_back(p.stratum_str());
  return out;
}

// --- membership --------------------------------------------------------------

bool membership(const RationalPoint& x, const AnglePoint& theta) {
  if (!in_simplex(x)) throw argument_error("membership: point outside the simplex");
  if (static_cast<int>(x.size()) != theta.n() + 1) {
    throw argument_error("membership: coordinate count mismatch");
  }
  Rat top(0);
  for (const Rat& xi : x) top = std::max(top, xi);
  IndexSet argmax;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == top) argmax = argmax | IndexSet::single(static_cast<int>(i));
  }
  for (IndexSet I : nonempty_subsets(argmax)) {
    if (I.size() >= 2 && coamoeba_contains(theta, I)) return true;
  }
  return false;
}

// --- the L subcomplex ---------------------------------------------------------

FacePoset L_complex(const CyclicPartition& sigma, IndexSet J) {
  if (J.empty() || !J.subset_of(IndexSet::full(sigma.n()))) {
    throw argument_error("L_complex: bad support " + J.str());
  }
  struct Item {
    IndexSet K, V;
  };
  std::vector<Item> items;
  for (IndexSet V : nonempty_subsets(IndexSet::full(sigma.k() - 1))) {
    const CyclicPartition coarse = coarsen(sigma, V.elements());
    for (IndexSet K : nonempty_subsets(J)) {
      if (!divides(coarse, K)) items.push_back(Item{K, V});
    }
  }
  auto label = [](const Item& it) {
    return "(K=" + it.K.str() + ",V=" + it.V.str() + ")";
  };
  auto dim = [](const Item& it) { return it.K.size() + it.V.size() - 2; };
  return build_graded_poset(items, label, dim, [](const Item& a, const Item& b) {
    return a.K.subset_of(b.K) && a.V.subset_of(b.V);
  });
}

// --- star complement -----------------------------------------------------------

namespace {

struct AmbientFace {
  DsdCell d;
  AlcoveFace a;
  std::uint64_t chord_mask = 0;  // sigma-chords of `a` as bits in the chord list

  int dim() const { return d.dim() + a.dim(); }
  std::string label() const { return d.str() + "*" + a.str(); }
};

struct AmbientData {
  std::vector<AmbientFace> faces;  // aligned with poset ids
  std::vector<Chord> chord_list;   // all chords on sigma's vertices
  FacePoset poset;
};

AmbientData build_star_ambient(const CyclicPartition& sigma, IndexSet J) {
  AmbientData data;
  const int k = sigma.k();
  std::map<Chord, int> chord_index;
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      chord_index[Chord(a, b)] = static_cast<int>(data.chord_list.size());
      data.chord_list.emplace_back(a, b);
    }
  }

  const std::vector<DsdCell> dcells = dsd_cells(J);
  const std::vector<AlcoveFace> afaces = alcove_faces_of_simplex(sigma);
  data.faces.reserve(dcells.size() * afaces.size());
  for (const DsdCell& d : dcells) {
    for (const AlcoveFace& a : afaces) {
      AmbientFace f{d, a, 0};
      for (const Chord& c : a.sigma_chords()) f.chord_mask |= 1ull << chord_index.at(c);
      data.faces.push_back(std::move(f));
    }
  }
  std::sort(data.faces.begin(), data.faces.end(),
            [](const AmbientFace& x, const AmbientFace& y) {
              if (x.dim() != y.dim()) return x.dim() < y.dim();
              return x.label() < y.label();
            });
  // Face order is componentwise; on the alcove side that is exactly
  // inclusion of sigma-chord families.
  data.poset = build_graded_poset(
      data.faces, [](const AmbientFace& f) { return f.label(); },
      [](const AmbientFace& f) { return f.dim(); },
      [](const AmbientFace& x, const AmbientFace& y) {
        return dsd_face_leq(x.d, y.d) && (x.chord_mask & ~y.chord_mask) == 0;
      });
  return data;
}

// Does the face have a vertex inside the phase-tropical cell?  A vertex is
// a pair (L, c) with I <= L <= K tied and a single chord c of the family.
bool face_meets_cell(const AmbientFace& f, const CyclicPartition& sigma,
                     const std::vector<Chord>& chord_list) {
  const std::uint32_t rest = (f.d.J - f.d.I).bits;
  std::uint32_t extra = 0;
  while (true) {
    const IndexSet L(f.d.I.bits | extra);
    if (L.size() >= 2) {
      for (std::size_t ci = 0; ci < chord_list.size(); ++ci) {
        if ((f.chord_mask >> ci & 1) && chord_divides(chord_list[ci], L, sigma)) {
          return true;
        }
      }
    }
    if (extra == rest) break;
    extra = (extra - rest) & rest;
  }
  return false;
}

}  // namespace

FacePoset star_complement(const CyclicPartition& sigma, IndexSet J, const Config& cfg) {
  require_cell(sigma, J);
  if (sigma.n() > cfg.piece_poset_max_n) {
    throw resource_error("star_complement: n exceeds piece_poset_max_n");
  }
  AmbientData data = build_star_ambient(sigma, J);
  std::vector<char> keep(data.faces.size(), 0);
  for (std::size_t i = 0; i < data.faces.size(); ++i) {
    keep[i] = !face_meets_cell(data.faces[i], sigma, data.chord_list);
  }
  return data.poset.induced(keep);
}

StarReport star_complement_report(const CyclicPartition& sigma, IndexSet J,
                                  const Config& cfg) {
  require_cell(sigma, J);
  if (sigma.n() > cfg.piece_poset_max_n) {
    throw resource_error("star_complement_report: n exceeds piece_poset_max_n");
  }
  StarReport rep;
  AmbientData data = build_star_ambient(sigma, J);
  const int n_faces = static_cast<int>(data.faces.size());
  rep.ambient_faces = n_faces;

  auto note = [&](const std::string& msg) {
    if (rep.witness.empty()) rep.witness = msg;
  };

  // The complement along three routes: no vertex inside the cell, no chord
  // dividing the support, support inside one part of the coarsening.
  std::vector<char> compl_mask(n_faces, 0);
  rep.routes_agree = true;
  for (int i = 0; i < n_faces; ++i) {
    const AmbientFace& f = data.faces[i];
    const bool route_a = !face_meets_cell(f, sigma, data.chord_list);
    bool route_b = true;
    for (std::size_t ci = 0; ci < data.chord_list.size(); ++ci) {
      if ((f.chord_mask >> ci & 1) && chord_divides(data.chord_list[ci], f.d.J, sigma)) {
        route_b = false;
        break;
      }
    }
    const bool route_c = !divides(f.a.net.base(), f.d.J);
    if (route_a != route_b || route_b != route_c) {
      rep.routes_agree = false;
      note("complement routes disagree at " + f.label());
    }
    compl_mask[i] = route_a;
    if (route_a) ++rep.complement_faces;
  }
  rep.star_faces = n_faces - rep.complement_faces;

  rep.complement_downclosed = data.poset.is_downclosed(compl_mask);
  if (!rep.complement_downclosed) note("complement is not closed under faces");

  // Support labels of the complement must reproduce the L-poset elements.
  std::set<std::string> support_labels;
  for (int i = 0; i < n_faces; ++i) {
    if (!compl_mask[i]) continue;
    IndexSet V;
    for (int v : data.faces[i].a.V) V = V | IndexSet::single(v);
    support_labels.insert("(K=" + data.faces[i].d.J.str() + ",V=" + V.str() + ")");
  }
  const FacePoset l_poset = L_complex(sigma, J);
  std::set<std::string> l_labels;
  for (int i = 0; i < l_poset.size(); ++i) l_labels.insert(l_poset.label(i));
  rep.supports_match_l = (support_labels == l_labels);
  if (!rep.supports_match_l) {
    for (const std::string& s : support_labels) {
      if (!l_labels.count(s)) note("complement support " + s + " has no L element");
    }
    for (const std::string& s : l_labels) {
      if (!support_labels.count(s)) note("L element " + s + " unsupported");
    }
  }

  // Reachability bitsets (descending closure) for the vertex census and for
  // carving out M(F) below each star face.
  const int words = (n_faces + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n_faces,
                                                std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n_faces; ++i) {  // ids are sorted by dimension
    reach[i][i >> 6] |= 1ull << (i & 63);
    for (int d : data.poset.down(i)) {
      for (int w = 0; w < words; ++w) reach[i][w] |= reach[d][w];
    }
  }

  rep.census_ok = true;
  std::vector<int> dim0;
  for (int i = 0; i < n_faces; ++i) {
    if (data.poset.dim(i) == 0) dim0.push_back(i);
  }
  for (int i = 0; i < n_faces; ++i) {
    long long vertices = 0;
    for (int v : dim0) {
      if (reach[i][v >> 6] >> (v & 63) & 1) ++vertices;
    }
    const AmbientFace& f = data.faces[i];
    const long long expected =
        (1ll << (f.d.J.size() - f.d.I.size())) * f.a.net.size();
    if (vertices != expected) {
      rep.census_ok = false;
      note("vertex census off at " + f.label() + ": " + std::to_string(vertices) +
           " instead of " + std::to_string(expected));
      break;
    }
  }

  // Membership in the cell: |I| >= 2 and every chord of the family divides I.
  std::vector<char> in_cell(n_faces, 0);
  for (int i = 0; i < n_faces; ++i) {
    const AmbientFace& f = data.faces[i];
    if (f.d.I.size() < 2) continue;
    bool all_divide = true;
    for (std::size_t ci = 0; ci < data.chord_list.size() && all_divide; ++ci) {
      if ((f.chord_mask >> ci & 1) && !chord_divides(data.chord_list[ci], f.d.I, sigma)) {
        all_divide = false;
      }
    }
    in_cell[i] = all_divide;
  }

  rep.m_collapsible = true;
  for (int i = 0; i < n_faces && rep.m_collapsible; ++i) {
    if (compl_mask[i]) continue;  // star faces only
    std::vector<int> members;
    for (int j = 0; j < n_faces; ++j) {
      if (in_cell[j] && (reach[i][j >> 6] >> (j & 63) & 1)) members.push_back(j);
    }
    if (members.empty()) {
      rep.m_collapsible = false;
      note("star face " + data.faces[i].label() + " meets the cell in nothing");
      break;
    }
    FacePoset m = build_graded_poset(
        members, [&](int id) { return data.faces[id].label(); },
        [&](int id) { return data.poset.dim(id); },
        [&](int lo, int hi) { return (reach[hi][lo >> 6] >> (lo & 63)) & 1; });
    const CollapseResult res =
        collapse_until(m, is_single_point, cfg.collapse_retries, cfg.seed);
    if (!res.achieved) {
      rep.m_collapsible = false;
      note("cell part below " + data.faces[i].label() + " does not collapse to a point");
    }
  }
  return rep;
}

// --- facet census ---------------------------------------------------------------

namespace {

// Chords over the family's base (tangents included) whose addition keeps it
// a net.  Maximality is measured in the full alcove complex, where chambers
// may use tangent chords, even though pieces themselves carry none.
std::vector<Chord> net_extensions(const Net& nu) {
  const int k = nu.base().k();
  std::vector<Chord> out;
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const Chord c(a, b);
      if (std::find(nu.chords().begin(), nu.chords().end(), c) != nu.chords().end()) {
        continue;
      }
      std::vector<Chord> bigger = nu.chords();
      bigger.push_back(c);
      if (is_net(Net(nu.base(), std::move(bigger)))) out.push_back(c);
    }
  }
  return out;
}

bool net_maximal(const Net& nu) { return net_extensions(nu).empty(); }

bool net_one_short(const Net& nu) {
  for (const Chord& c : net_extensions(nu)) {
    std::vector<Chord> bigger = nu.chords();
    bigger.push_back(c);
    if (net_maximal(Net(nu.base(), std::move(bigger)))) return true;
  }
  return false;
}

}  // namespace

FacetReport classify_codim1_pieces(const CyclicPartition& sigma, IndexSet J,
                                   const Config& cfg) {
  const CellPieces cp = pieces_of_cell(sigma, J, cfg);
  FacetReport rep;
  const int top = sigma.k() + J.size() - 4;
  const std::string open_label = PantsCellLabel{sigma, J}.str();
  auto note = [&](const std::string& msg) {
    if (rep.witness.empty()) rep.witness = msg;
  };
  for (int i = 0; i < cp.poset.size(); ++i) {
    const Piece& p = cp.pieces[i];
    if (cp.poset.dim(i) == top) {
      ++rep.top_total;
      const bool on_top_stratum = (p.nu.base() == sigma) && (p.K == J);
      if (on_top_stratum && p.I.size() == 2 && net_one_short(p.nu)) {
        ++rep.type1;
      } else if (on_top_stratum && p.I.size() == 3 && net_maximal(p.nu)) {
        ++rep.type2;
      } else {
        rep.types_ok = false;
        note("top piece " + cp.poset.label(i) + " matches neither shape");
      }
      continue;
    }
    if (cp.poset.dim(i) != top - 1) continue;
    ++rep.codim1_total;
    const long long updeg = static_cast<long long>(cp.poset.up(i).size());
    if (p.stratum_str() == open_label) {
      ++rep.interior;
      if (updeg != 2) {
        rep.pseudo_ok = false;
        note("interior facet " + cp.poset.label(i) + " lies under " +
             std::to_string(updeg) + " top pieces");
      }
    } else {
      ++rep.boundary;
      if (updeg != 1) {
        rep.pseudo_ok = false;
        note("boundary facet " + cp.poset.label(i) + " lies under " +
             std::to_string(updeg) + " top pieces");
      }
    }
  }
  return rep;
}

FacePoset cell_boundary_pieces(const CyclicPartition& sigma, IndexSet J,
                               const Config& cfg) {
  const CellPieces cp = pieces_of_cell(sigma, J, cfg);
  const std::string open_label = PantsCellLabel{sigma, J}.str();
  std::vector<char> keep(cp.pieces.size(), 0);
  for (std::size_t i = 0; i < cp.pieces.size(); ++i) {
    keep[i] = cp.pieces[i].stratum_str() != open_label;
  }
  if (!cp.poset.is_downclosed(keep)) {
    throw internal_error("boundary pieces of (" + sigma.str() + "," + J.str() +
                         ") are not closed under faces");
  }
  return cp.poset.induced(keep);
}

// --- the fixed 2x2 roof comparison ------------------------------------------------

namespace {

struct OberFace {
  DsdCell x;  // face-simplex side, labels D(...)
  DsdCell s;  // stratum-simplex side, labels S(...)

  int dim() const { return x.dim() + s.dim(); }
  std::string label() const {
    return x.str() + "*S(" + s.I.str() + "," + s.J.str() + ")";
  }
};

struct OberData {
  std::vector<OberFace> faces;  // aligned with ambient ids
  FacePoset ambient;
  std::vector<char> in_ober;
};

OberData build_ober() {
  const CyclicPartition sigma = CyclicPartition::parse("<0|1|2>");
  const IndexSet J = IndexSet::full(2);
  OberData data;
  for (const DsdCell& x : dsd_cells(J)) {
    for (const DsdCell& s : dsd_cells(IndexSet::full(2))) {
      data.faces.push_back(OberFace{x, s});
    }
  }
  std::sort(data.faces.begin(), data.faces.end(), [](const OberFace& a, const OberFace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.label() < b.label();
  });
  data.ambient = build_graded_poset(
      data.faces, [](const OberFace& f) { return f.label(); },
      [](const OberFace& f) { return f.dim(); },
      [](const OberFace& a, const OberFace& b) {
        return dsd_face_leq(a.x, b.x) && dsd_face_leq(a.s, b.s);
      });

  // One square per (pair of indices, dividing chord); the chord enters
  // through the stratum-side edge toward the midpoint of its endpoints.
  std::vector<int> seeds;
  for (IndexSet pair : nonempty_subsets(J)) {
    if (pair.size() != 2) continue;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!chord_divides(Chord(a, b), pair, sigma)) continue;
        const OberFace square{DsdCell{pair, J},
                              DsdCell{IndexSet::single(a) | IndexSet::single(b),
                                      IndexSet::full(2)}};
        const int id = data.ambient.index_of(square.label());
        if (id < 0) throw internal_error("missing square " + square.label());
        seeds.push_back(id);
      }
    }
  }
  data.in_ober = data.ambient.down_closure(seeds);
  return data;
}

using Point6 = std::vector<Rat>;  // 3 weight coordinates ++ 3 gap coordinates

struct Segment {
  Point6 a, b;
  std::string label;
};

Point6 glue(const RationalPoint& x, const std::vector<Rat>& g) {
  Point6 p = x;
  p.insert(p.end(), g.begin(), g.end());
  return p;
}

// Gap coordinates of the stratum-side vertex spanned by P (weights 2/|P|).
std::vector<Rat> stratum_vertex_gaps(IndexSet P) {
  std::vector<Rat> g(3, Rat(0));
  for (int v : P.elements()) g[v] = Rat(2) / P.size();
  return g;
}

// Gap coordinates of the alcove vertex of a single sigma-chord.
std::vector<Rat> chord_gaps(Chord c) {
  std::vector<Rat> g(3, Rat(0));
  if (c.tangent()) {
    g[c.a] = 2;
  } else {
    g[c.a] += 1;
    g[c.b] += 1;
  }
  return g;
}

// Chords of a piece's net, rewritten on sigma's own vertices.
std::vector<Chord> piece_sigma_chords(const Piece& p, const CyclicPartition& sigma) {
  const auto vsets = coarsening_vertex_sets(p.nu.base(), sigma);
  if (vsets.size() != 1) {
    throw internal_error("ambiguous embedding of " + p.nu.base().str() + " into " +
                         sigma.str());
  }
  const Coarsening cw = coarsen_with_map(sigma, vsets.front());
  std::vector<Chord> out;
  for (const Chord& c : p.nu.chords()) {
    out.emplace_back(cw.vertex_of.at(c.a), cw.vertex_of.at(c.b));
  }
  return out;
}

// Closed interval [lo, hi] in segment parameters.
struct Interval {
  Rat lo, hi;
};

// Fraction of [0,1] along seg covered by collinear pieces of `others`.
bool segment_covered(const Segment& seg, const std::vector<Segment>& others) {
  const std::size_t dims = seg.a.size();
  std::vector<Rat> dir(dims);
  int pivot = -1;
  for (std::size_t i = 0; i < dims; ++i) {
    dir[i] = seg.b[i] - seg.a[i];
    if (pivot < 0 && dir[i] != 0) pivot = static_cast<int>(i);
  }
  if (pivot < 0) throw internal_error("degenerate segment " + seg.label);

  auto param_of = [&](const Point6& p, Rat& t) {
    t = (p[pivot] - seg.a[pivot]) / dir[pivot];
    for (std::size_t i = 0; i < dims; ++i) {
      if (p[i] - seg.a[i] != t * dir[i]) return false;
    }
    return true;
  };

  std::vector<Interval> cover;
  for (const Segment& o : others) {
    Rat ta, tb;
    if (!param_of(o.a, ta) || !param_of(o.b, tb)) continue;
    if (ta > tb) std::swap(ta, tb);
    ta = std::max(ta, Rat(0));
    tb = std::min(tb, Rat(1));
    if (ta <= tb) cover.push_back(Interval{ta, tb});
  }
  std::sort(cover.begin(), cover.end(),
            [](const Interval& p, const Interval& q) { return p.lo < q.lo; });
  Rat reached(0);
  for (const Interval& iv : cover) {
    if (iv.lo > reached) return false;  // gap
    reached = std::max(reached, iv.hi);
    if (reached >= 1) return true;
  }
  return reached >= 1;
}

}  // namespace

OberTriple ober_cell_2x2() {
  OberData data = build_ober();
  OberTriple triple;
  triple.ober = data.ambient.induced(data.in_ober);
  triple.ambient = std::move(data.ambient);
  const CyclicPartition sigma = CyclicPartition::parse("<0|1|2>");
  triple.phase = pieces_of_cell(sigma, IndexSet::full(2)).poset;
  return triple;
}

OberReport ober_2x2_report(const Config& cfg) {
  const CyclicPartition sigma = CyclicPartition::parse("<0|1|2>");
  const IndexSet J = IndexSet::full(2);
  OberData data = build_ober();
  const FacePoset ober = data.ambient.induced(data.in_ober);
  const CellPieces phase = pieces_of_cell(sigma, J, cfg);

  OberReport rep;
  for (int i = 0; i < ober.size(); ++i) {
    if (ober.dim(i) == 2) ++rep.two_cells;
  }
  HomologyOptions hopt;
  hopt.snf_nonzero_guard = cfg.snf_nonzero_guard;
  rep.ober_homology = poset_homology(ober, Coefficients::integers, hopt);
  rep.phase_homology = poset_homology(phase.poset, Coefficients::integers, hopt);

  // Boundary segments of the roof complex, realized in weight x gap space.
  std::vector<Segment> ober_segments;
  for (std::size_t i = 0; i < data.faces.size(); ++i) {
    if (!data.in_ober[i] || data.ambient.dim(static_cast<int>(i)) != 1) continue;
    int cofaces = 0;
    for (int u : data.ambient.up(static_cast<int>(i))) {
      if (data.in_ober[u]) ++cofaces;
    }
    if (cofaces != 1) continue;
    const OberFace& f = data.faces[i];
    Segment seg;
    seg.label = f.label();
    if (f.x.dim() == 1) {
      const auto g = stratum_vertex_gaps(f.s.I);
      seg.a = glue(simplex_barycenter(f.x.I, 2), g);
      seg.b = glue(simplex_barycenter(f.x.J, 2), g);
    } else {
      const auto x = simplex_barycenter(f.x.I, 2);
      seg.a = glue(x, stratum_vertex_gaps(f.s.I));
      seg.b = glue(x, stratum_vertex_gaps(f.s.J));
    }
    ober_segments.push_back(std::move(seg));
  }

  // Boundary segments of the phase-tropical cell.
  std::vector<Segment> phase_segments;
  for (std::size_t i = 0; i < phase.pieces.size(); ++i) {
    if (phase.poset.dim(static_cast<int>(i)) != 1) continue;
    if (phase.poset.up(static_cast<int>(i)).size() != 1) continue;
    const Piece& p = phase.pieces[i];
    const std::vector<Chord> chords = piece_sigma_chords(p, sigma);
    Segment seg;
    seg.label = p.str();
    if (p.I == p.K) {
      if (chords.size() != 2) throw internal_error("unexpected edge shape " + p.str());
      const auto x = simplex_barycenter(p.I, 2);
      seg.a = glue(x, chord_gaps(chords[0]));
      seg.b = glue(x, chord_gaps(chords[1]));
    } else {
      if (chords.size() != 1) throw internal_error("unexpected edge shape " + p.str());
      const auto g = chord_gaps(chords[0]);
      seg.a = glue(simplex_barycenter(p.I, 2), g);
      seg.b = glue(simplex_barycenter(p.K, 2), g);
    }
    phase_segments.push_back(std::move(seg));
  }

  auto note = [&](const std::string& msg) {
    if (rep.witness.empty()) rep.witness = msg;
  };
  for (const Segment& seg : phase_segments) {
    if (segment_covered(seg, ober_segments)) {
      ++rep.shared_segments;
    } else {
      ++rep.phase_only;
      note("phase boundary edge " + seg.label + " is not covered by the roof boundary");
    }
  }
  for (const Segment& seg : ober_segments) {
    if (!segment_covered(seg, phase_segments)) {
      ++rep.ober_only;
      note("roof boundary edge " + seg.label + " is not covered by the phase boundary");
    }
  }
  rep.boundaries_coincide = (rep.phase_only == 0 && rep.ober_only == 0);
  return rep;
}

// --- streaming helpers -------------------------------------------------------------

CellDimScanner::CellDimScanner(const CyclicPartition& sigma) {
  const int n = sigma.n();
  const IndexSet ground = IndexSet::full(n);
  for (const CyclicPartition& tau : coarsenings(sigma)) {
    for (const Net& nu : enumerate_nets_over(tau, /*tangent_free=*/true)) {
      std::vector<std::pair<IndexSet, IndexSet>> sides;
      for (const Chord& c : nu.chords()) sides.push_back(chord_sides(c, tau));
      auto valid = [&](IndexSet I) {
        return std::all_of(sides.begin(), sides.end(), [&](const auto& s) {
          return I.intersects(s.first) && I.intersects(s.second);
        });
      };
      NetInfo info;
      info.chord_count = nu.size();
      for (IndexSet I : nonempty_subsets(ground)) {
        if (!valid(I)) continue;
        bool minimal = true;
        for (int i : I.elements()) {
          if (valid(I - IndexSet::single(i))) {
            minimal = false;
            break;
          }
        }
        if (minimal) info.min_dividers.push_back(I);
      }
      if (!info.min_dividers.empty()) nets_.push_back(std::move(info));
    }
  }
}

int CellDimScanner::max_piece_dim(IndexSet J) const {
  int best = -1;
  for (const NetInfo& info : nets_) {
    int min_size = -1;
    for (IndexSet I : info.min_dividers) {
      if (I.subset_of(J) && (min_size < 0 || I.size() < min_size)) min_size = I.size();
    }
    if (min_size < 0) continue;
    best = std::max(best, (J.size() - min_size) + info.chord_count - 1);
  }
  return best;
}

std::vector<std::pair<std::string, int>> occurring_stratum_labels(int n,
                                                                  const Config& cfg) {
  if (n > cfg.lattice_max_n) {
    throw resource_error("occurring_stratum_labels: n = " + std::to_string(n) +
                         " exceeds lattice_max_n = " + std::to_string(cfg.lattice_max_n));
  }
  std::vector<std::pair<std::string, int>> out;
  for (const CyclicPartition& tau : enumerate_cyclic_partitions(n, cfg)) {
    // Union of the minimal tie sets over every net based on tau.
    std::set<IndexSet> dividers;
    for (const Net& nu : enumerate_nets_over(tau, /*tangent_free=*/true)) {
      std::vector<std::pair<IndexSet, IndexSet>> sides;
      for (const Chord& c : nu.chords()) sides.push_back(chord_sides(c, tau));
      auto valid = [&](IndexSet I) {
        return std::all_of(sides.begin(), sides.end(), [&](const auto& s) {
          return I.intersects(s.first) && I.intersects(s.second);
        });
      };
      for (IndexSet I : nonempty_subsets(IndexSet::full(n))) {
        if (!valid(I)) continue;
        bool minimal = true;
        for (int i : I.elements()) {
          if (valid(I - IndexSet::single(i))) {
            minimal = false;
            break;
          }
        }
        if (minimal) dividers.insert(I);
      }
    }
    if (dividers.empty()) continue;
    for (IndexSet K : nonempty_subsets(IndexSet::full(n))) {
      const bool occurs = std::any_of(dividers.begin(), dividers.end(),
                                      [&](IndexSet I) { return I.subset_of(K); });
      if (occurs) {
        out.emplace_back("(" + tau.str() + "," + K.str() + ")", tau.k() + K.size() - 4);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace pants
