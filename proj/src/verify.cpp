// Machine checks: each one recomputes a structural claim along two
// independent routes (enumeration vs. oracle, formula vs. materialized
// poset, definition vs. decomposition) and reports pass/fail with a
// witness instead of aborting.

#include "pants/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pants/chords.hpp"
#include "pants/errors.hpp"
#include "pants/pants.hpp"
#include "pants/partitions.hpp"
#include "pants/poset.hpp"
#include "pants/simplex.hpp"

namespace pants {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Ctx {
  int n = 1;
  std::uint64_t seed = 0;
  Config cfg;
};

void fail(CheckReport& r, json witness) {
  r.status = CheckStatus::fail;
  if (r.witness.is_null()) r.witness = std::move(witness);
}

Rat random_angle(std::mt19937_64& g, int max_den) {  // in [0, 2)
  const long long den = 1 + static_cast<long long>(g() % max_den);
  const long long num = static_cast<long long>(g() % (2 * den));
  return Rat(num, den);
}

PantsCellLabel parse_cell_label(const std::string& text) {
  if (text.size() < 4 || text.front() != '(' || text.back() != ')') {
    throw argument_error("bad cell label: " + text);
  }
  const std::string inner = text.substr(1, text.size() - 2);
  const std::size_t comma = inner.rfind(',');
  if (comma == std::string::npos) throw argument_error("bad cell label: " + text);
  return PantsCellLabel{CyclicPartition::parse(inner.substr(0, comma)),
                        IndexSet::parse(inner.substr(comma + 1))};
}

BettiVector sphere_betti(int d) {
  BettiVector b;
  if (d == 0) {
    b.ranks = {2};
  } else {
    b.ranks.assign(d + 1, 0);
    b.ranks[0] = 1;
    b.ranks[d] = 1;
  }
  return b;
}

bool matches_ranks(const BettiVector& got, const BettiVector& want) {
  return got.ranks == want.ranks && got.torsion_free();
}

// ---- the checks -------------------------------------------------------

void chk_partition_census(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  static const long long frozen[] = {1, 2, 6, 26, 150};
  json counts = json::array();
  for (int t = 1; t <= m; ++t) {
    const auto parts = enumerate_cyclic_partitions(t, c.cfg);
    const long long got = static_cast<long long>(parts.size());
    const long long independent = cyclic_partition_count_oracle(t);
    counts.push_back(got);
    if (got != independent) {
      return fail(r, {{"n", t}, {"enumerated", got}, {"independent", independent}});
    }
    if (t <= 4 && got != frozen[t]) {
      return fail(r, {{"n", t}, {"enumerated", got}, {"frozen", frozen[t]}});
    }
    std::set<std::string> labels;
    for (const CyclicPartition& p : parts) {
      if (!labels.insert(p.str()).second) {
        return fail(r, {{"n", t}, {"duplicate", p.str()}});
      }
      if (p.n() != t) return fail(r, {{"n", t}, {"bad_ground_set", p.str()}});
    }
  }
  if (m >= 3) {
    std::map<int, long long> by_k;
    for (const CyclicPartition& p : enumerate_cyclic_partitions(3, c.cfg)) ++by_k[p.k()];
    const std::map<int, long long> want{{1, 1}, {2, 7}, {3, 12}, {4, 6}};
    if (by_k != want) {
      json w;
      for (const auto& [k, cnt] : by_k) w[std::to_string(k)] = cnt;
      return fail(r, {{"n", 3}, {"by_k", w}});
    }
  }
  r.params["counts"] = counts;
}

void chk_net_census(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.net_enum_max_n);
  const int m_bij = std::min(m, 3);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  r.params["bijection_n"] = m_bij;
  json counts = json::array();
  for (int t = 1; t <= m; ++t) {
    const auto nets = enumerate_nets(t, c.cfg);
    counts.push_back(nets.size());
    std::set<std::string> labels;
    for (const Net& nu : nets) {
      if (!is_net(nu)) return fail(r, {{"n", t}, {"not_a_net", nu.str()}});
      if (!labels.insert(nu.str()).second) {
        return fail(r, {{"n", t}, {"duplicate", nu.str()}});
      }
    }
    if (t == 1) {
      const std::set<std::string> want{"<01>;00", "<0|1>;01", "<0|1>;00,01",
                                       "<0|1>;01,11"};
      if (labels != want) {
        return fail(r, {{"n", 1}, {"nets", json(labels)}});
      }
    }
    if (t == 2 && nets.size() != 24) {
      return fail(r, {{"n", 2}, {"count", nets.size()}, {"frozen", 24}});
    }
  }
  for (int t = 1; t <= m_bij; ++t) {
    const std::vector<std::uint64_t> oracle = sign_vector_oracle(t);
    std::vector<std::pair<std::uint64_t, std::string>> tables;
    for (const Net& nu : enumerate_nets(t, c.cfg)) {
      tables.emplace_back(alcove_relations(nu).encode(), nu.str());
    }
    std::sort(tables.begin(), tables.end());
    for (std::size_t i = 1; i < tables.size(); ++i) {
      if (tables[i].first == tables[i - 1].first) {
        return fail(r, {{"n", t},
                        {"same_table", {tables[i - 1].second, tables[i].second}}});
      }
    }
    std::vector<std::uint64_t> codes;
    for (const auto& [code, name] : tables) codes.push_back(code);
    if (codes != oracle) {
      std::vector<std::uint64_t> missing, spurious;
      std::set_difference(oracle.begin(), oracle.end(), codes.begin(), codes.end(),
                          std::back_inserter(missing));
      std::set_difference(codes.begin(), codes.end(), oracle.begin(), oracle.end(),
                          std::back_inserter(spurious));
      return fail(r, {{"n", t},
                      {"nets", codes.size()},
                      {"grid_tables", oracle.size()},
                      {"missing_codes", missing.size()},
                      {"spurious_codes", spurious.size()}});
    }
  }
  r.params["net_counts"] = counts;
}

void chk_alcove_sampling(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.net_enum_max_n);
  const int samples = 1000;
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  r.params["samples"] = samples;
  std::mt19937_64 g(c.seed);
  for (int s = 0; s < samples; ++s) {
    const int t = 1 + static_cast<int>(s % m);
    std::vector<Rat> coords(t + 1);
    for (Rat& x : coords) x = random_angle(g, 24);
    if (t >= 1 && g() % 4 == 0) {  // force ties / antipodes sometimes
      const int i = static_cast<int>(g() % (t + 1));
      const int j = static_cast<int>(g() % (t + 1));
      if (i != j) coords[j] = coords[i] + Rat(g() % 2);
    }
    const AnglePoint theta(coords);
    const Net nu = classify_point(theta, c.cfg);
    if (!alcove_contains(theta, nu, /*closed=*/false)) {
      return fail(r, {{"theta", theta.str()},
                      {"net", nu.str()},
                      {"reason", "classified net does not strictly contain the point"}});
    }
    if (!(realized_relations(theta) == alcove_relations(nu))) {
      return fail(r, {{"theta", theta.str()},
                      {"net", nu.str()},
                      {"realized", realized_relations(theta).str()},
                      {"alcove", alcove_relations(nu).str()}});
    }
  }
  // Every enumerated net must be recovered from its own witness point.
  const int m_rt = std::min(m, 3);
  r.params["round_trip_n"] = m_rt;
  for (int t = 1; t <= m_rt; ++t) {
    for (const Net& nu : enumerate_nets(t, c.cfg)) {
      const AnglePoint w = net_witness(nu);
      const Net back = classify_point(w, c.cfg);
      if (!(back == nu)) {
        return fail(r, {{"net", nu.str()},
                        {"witness", w.str()},
                        {"classified", back.str()}});
      }
    }
  }
}

void chk_dimension_formula(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.lattice_max_n);
  const int m_exact = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  r.params["exact_n"] = m_exact;
  long long cells = 0;
  for (const CyclicPartition& sigma : enumerate_cyclic_partitions(m, c.cfg)) {
    const CellDimScanner scan(sigma);
    for (IndexSet J : nonempty_subsets(IndexSet::full(m))) {
      const int want = divides(sigma, J) ? sigma.k() + J.size() - 4 : -1;
      const int got = scan.max_piece_dim(J);
      if (got != want) {
        return fail(r, {{"sigma", sigma.str()},
                        {"J", J.str()},
                        {"scanner", got},
                        {"formula", want}});
      }
      if (want >= 0) ++cells;
    }
  }
  r.params["cells_scanned"] = cells;
  // At piece scale, cross-check the scanner against materialized posets.
  for (const CyclicPartition& sigma : enumerate_cyclic_partitions(m_exact, c.cfg)) {
    for (IndexSet J : nonempty_subsets(IndexSet::full(m_exact))) {
      if (!divides(sigma, J)) continue;
      const CellPieces cp = pieces_of_cell(sigma, J, c.cfg);
      const int want = sigma.k() + J.size() - 4;
      if (cp.poset.max_dim() != want) {
        return fail(r, {{"cell", PantsCellLabel{sigma, J}.str()},
                        {"poset_max_dim", cp.poset.max_dim()},
                        {"formula", want}});
      }
      for (int i = 0; i < cp.poset.size(); ++i) {
        if (!piece_valid(cp.pieces[i], sigma.n())) {
          return fail(r, {{"cell", PantsCellLabel{sigma, J}.str()},
                          {"invalid_piece", cp.pieces[i].str()}});
        }
        if (cp.poset.up(i).empty() && cp.poset.dim(i) != want) {
          return fail(r, {{"cell", PantsCellLabel{sigma, J}.str()},
                          {"stray_maximal_piece", cp.pieces[i].str()},
                          {"dim", cp.poset.dim(i)}});
        }
      }
    }
  }
}

void chk_lattice_isomorphism(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.lattice_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  const PantsComplex pc = enumerate_pants_cells(m, c.cfg);
  const auto occurring = occurring_stratum_labels(m, c.cfg);
  std::vector<std::pair<std::string, int>> abstract;
  for (const PantsCellLabel& cell : pc.cells) abstract.emplace_back(cell.str(), cell.dim());
  if (abstract != occurring) {
    std::set<std::pair<std::string, int>> a(abstract.begin(), abstract.end());
    std::set<std::pair<std::string, int>> b(occurring.begin(), occurring.end());
    json only_abstract = json::array(), only_realized = json::array();
    for (const auto& x : a) {
      if (!b.count(x) && only_abstract.size() < 5) only_abstract.push_back(x.first);
    }
    for (const auto& x : b) {
      if (!a.count(x) && only_realized.size() < 5) only_realized.push_back(x.first);
    }
    return fail(r, {{"cells", abstract.size()},
                    {"realized_strata", occurring.size()},
                    {"only_abstract", only_abstract},
                    {"only_realized", only_realized}});
  }
  r.params["cells"] = abstract.size();

  // Rebuild the poset from the realized labels alone and compare covers.
  std::vector<PantsCellLabel> parsed;
  for (const auto& [label, dim] : occurring) {
    const PantsCellLabel cell = parse_cell_label(label);
    if (cell.dim() != dim) {
      return fail(r, {{"label", label}, {"dim", dim}, {"parsed_dim", cell.dim()}});
    }
    parsed.push_back(cell);
  }
  const FacePoset realized = build_graded_poset(
      parsed, [](const PantsCellLabel& x) { return x.str(); },
      [](const PantsCellLabel& x) { return x.dim(); },
      [](const PantsCellLabel& a, const PantsCellLabel& b) {
        return a.J.subset_of(b.J) && is_coarsening(a.sigma, b.sigma);
      });
  if (!labeled_isomorphic(pc.poset, realized, [](const std::string& s) { return s; })) {
    return fail(r, {{"reason", "cover relations differ between the abstract lattice "
                               "and the realized stratum poset"}});
  }

  // At piece scale the stratum map must be order-preserving and onto.
  const int m_pieces = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["piece_n"] = m_pieces;
  const PhaseComplex ph = assemble_phase_tropical(m_pieces, c.cfg);
  std::set<std::string> strata(ph.stratum_labels.begin(), ph.stratum_labels.end());
  std::set<std::string> cells_small;
  for (const PantsCellLabel& cell : enumerate_pants_cells(m_pieces, c.cfg).cells) {
    cells_small.insert(cell.str());
  }
  if (strata != cells_small) {
    return fail(r, {{"n", m_pieces},
                    {"distinct_strata", strata.size()},
                    {"cells", cells_small.size()}});
  }
  for (int i = 0; i < ph.poset.size(); ++i) {
    for (int j : ph.poset.up(i)) {
      const Piece& lo = ph.pieces[i];
      const Piece& hi = ph.pieces[j];
      if (!lo.K.subset_of(hi.K) || !is_coarsening(lo.nu.base(), hi.nu.base())) {
        return fail(r, {{"lower", lo.str()},
                        {"upper", hi.str()},
                        {"reason", "stratum map not order-preserving on a cover"}});
      }
    }
  }
}

void chk_boundary_sphere(const Ctx& c, CheckReport& r) {
  const int m = std::min({c.n, 3, c.cfg.piece_poset_max_n, c.cfg.lattice_max_n});
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  const PantsComplex pc = enumerate_pants_cells(m, c.cfg);
  const HomologyOptions hopt{c.cfg.snf_nonzero_guard, true};
  long long checked = 0;
  for (int id = 0; id < pc.poset.size(); ++id) {
    const PantsCellLabel& cell = pc.cells[id];
    const int d = cell.dim();
    // Route 1: the strict lower interval in the cell lattice.
    std::vector<char> keep = pc.poset.down_closure({id});
    keep[id] = 0;
    const FacePoset below = pc.poset.induced(keep);
    if (d == 0) {
      if (below.size() != 0) {
        return fail(r, {{"cell", cell.str()}, {"below", below.size()}});
      }
    } else {
      const BettiVector got = poset_homology(below, Coefficients::integers, hopt);
      if (!matches_ranks(got, sphere_betti(d - 1))) {
        return fail(r, {{"cell", cell.str()},
                        {"route", "lattice-interval"},
                        {"homology", got.str()},
                        {"expected", sphere_betti(d - 1).str()}});
      }
    }
    // Route 2: pieces of the topological boundary of the cell.
    const FacePoset bnd = cell_boundary_pieces(cell.sigma, cell.J, c.cfg);
    if (d == 0) {
      if (bnd.size() != 0) {
        return fail(r, {{"cell", cell.str()}, {"boundary_pieces", bnd.size()}});
      }
    } else {
      const BettiVector got = poset_homology(bnd, Coefficients::integers, hopt);
      if (!matches_ranks(got, sphere_betti(d - 1))) {
        return fail(r, {{"cell", cell.str()},
                        {"route", "boundary-pieces"},
                        {"homology", got.str()},
                        {"expected", sphere_betti(d - 1).str()}});
      }
    }
    ++checked;
  }
  r.params["cells_checked"] = checked;
  if (m >= 2) {  // the 2-dimensional cell of the 3-element ground set
    const CyclicPartition sigma = CyclicPartition::parse("<0|1|2>");
    const FacePoset bnd = cell_boundary_pieces(sigma, IndexSet::full(2), c.cfg);
    if (!is_circle(bnd) || bnd.size() != 18) {
      return fail(r, {{"cell", "(<0|1|2>,012)"},
                      {"boundary_elements", bnd.size()},
                      {"reason", "boundary is not the 9-gon"}});
    }
  }
}

void chk_l_circle(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  const PantsComplex pc = enumerate_pants_cells(m, c.cfg);
  const HomologyOptions hopt{c.cfg.snf_nonzero_guard, true};
  for (const PantsCellLabel& cell : pc.cells) {
    const FacePoset l = L_complex(cell.sigma, cell.J);
    const BettiVector got = poset_homology(l, Coefficients::integers, hopt);
    if (got.ranks != std::vector<long long>{1, 1} || !got.torsion_free()) {
      return fail(r, {{"cell", cell.str()}, {"homology", got.str()}});
    }
    const CollapseResult res =
        collapse_until(l, is_circle, c.cfg.collapse_retries, c.seed ^ fnv1a(cell.str()));
    if (!res.achieved) {
      return fail(r, {{"cell", cell.str()},
                      {"reason", "does not collapse to a circle"},
                      {"core_size", res.core.size()}});
    }
  }
  r.params["cells_checked"] = pc.cells.size();
  if (m >= 1) {
    const FacePoset l = L_complex(CyclicPartition::parse("<0|1>"), IndexSet::full(1));
    if (l.size() != 8 || !is_circle(l)) {
      return fail(r, {{"cell", "(<0|1>,01)"},
                      {"elements", l.size()},
                      {"reason", "expected the 8-element circle"}});
    }
  }
}

void chk_star_complement(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  long long checked = 0, ambient_total = 0;
  for (const PantsCellLabel& cell : enumerate_pants_cells(m, c.cfg).cells) {
    const StarReport rep = star_complement_report(cell.sigma, cell.J, c.cfg);
    ambient_total += rep.ambient_faces;
    if (!rep.ok()) {
      return fail(r, {{"cell", cell.str()},
                      {"routes_agree", rep.routes_agree},
                      {"complement_downclosed", rep.complement_downclosed},
                      {"supports_match_l", rep.supports_match_l},
                      {"census_ok", rep.census_ok},
                      {"m_collapsible", rep.m_collapsible},
                      {"witness", rep.witness}});
    }
    ++checked;
  }
  r.params["cells_checked"] = checked;
  r.params["ambient_faces_total"] = ambient_total;
}

void chk_facet_types(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  long long interior_total = 0, boundary_total = 0;
  for (const PantsCellLabel& cell : enumerate_pants_cells(m, c.cfg).cells) {
    const FacetReport rep = classify_codim1_pieces(cell.sigma, cell.J, c.cfg);
    if (!rep.pseudo_ok || !rep.types_ok || rep.type1 + rep.type2 != rep.top_total) {
      return fail(r, {{"cell", cell.str()},
                      {"pseudo_ok", rep.pseudo_ok},
                      {"types_ok", rep.types_ok},
                      {"top_total", rep.top_total},
                      {"type1", rep.type1},
                      {"type2", rep.type2},
                      {"witness", rep.witness}});
    }
    interior_total += rep.interior;
    boundary_total += rep.boundary;
  }
  r.params["interior_total"] = interior_total;
  r.params["boundary_total"] = boundary_total;
  if (m >= 2) {
    const FacetReport rep = classify_codim1_pieces(CyclicPartition::parse("<0|1|2>"),
                                                   IndexSet::full(2), c.cfg);
    if (rep.codim1_total != 12 || rep.interior != 3 || rep.boundary != 9 ||
        rep.top_total != 4 || rep.type1 != 3 || rep.type2 != 1) {
      return fail(r, {{"cell", "(<0|1|2>,012)"},
                      {"codim1", rep.codim1_total},
                      {"interior", rep.interior},
                      {"boundary", rep.boundary},
                      {"top_total", rep.top_total},
                      {"type1", rep.type1},
                      {"type2", rep.type2}});
    }
  }
}

void chk_global_homology(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.piece_poset_max_n);
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  const PhaseComplex ph = assemble_phase_tropical(m, c.cfg);
  r.params["pieces"] = ph.pieces.size();
  std::vector<long long> expected(m, 0);  // ranks C(m,0) .. C(m,m-1)
  long long binom = 1;
  for (int k = 0; k < m; ++k) {
    expected[k] = binom;
    binom = binom * (m - k) / (k + 1);
  }
  const HomologyOptions hopt{c.cfg.snf_nonzero_guard, true};
  const BettiVector hz = poset_homology(ph.poset, Coefficients::integers, hopt);
  if (hz.ranks != expected || !hz.torsion_free()) {
    BettiVector want;
    want.ranks = expected;
    return fail(r, {{"coefficients", "Z"},
                    {"homology", hz.str()},
                    {"expected", want.str()}});
  }
  const BettiVector h2 = poset_homology(ph.poset, Coefficients::z2, hopt);
  if (h2.ranks != expected) {
    return fail(r, {{"coefficients", "Z/2"}, {"homology", h2.str()}});
  }
  const long long chi = euler_characteristic(ph.poset);
  const long long chi_want = (m % 2 == 1) ? 1 : -1;
  if (chi != chi_want) {
    return fail(r, {{"euler", chi}, {"expected", chi_want}});
  }
  if (m == 2) {
    const auto f = ph.poset.f_vector();
    if (f != std::vector<long long>{9, 18, 8}) {
      return fail(r, {{"f_vector", json(f)}, {"expected", {9, 18, 8}}});
    }
  }
  r.params["homology"] = hz.str();
}

void chk_membership(const Ctx& c, CheckReport& r) {
  const int m = std::min(c.n, c.cfg.piece_poset_max_n);
  const int samples = 10000;
  r.params["requested_n"] = c.n;
  r.params["effective_n"] = m;
  r.params["samples"] = samples;
  const PhaseComplex ph = assemble_phase_tropical(m, c.cfg);
  // Many pieces share a spine cube and many share a net: group by cube and
  // memoize the closed-alcove test per net, so each sample runs a handful of
  // cube tests instead of one per piece.
  std::vector<Net> nets;
  struct CubeGroup {
    SpineCube cube;
    std::vector<int> net_ids;
  };
  std::vector<CubeGroup> groups;
  {
    std::map<std::string, int> net_index;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> cube_index;
    for (const Piece& p : ph.pieces) {
      const auto [nit, fresh_net] =
          net_index.try_emplace(p.nu.str(), static_cast<int>(nets.size()));
      if (fresh_net) nets.push_back(p.nu);
      const auto [cit, fresh_cube] = cube_index.try_emplace(
          std::make_pair(p.I.bits, p.K.bits), static_cast<int>(groups.size()));
      if (fresh_cube) groups.push_back(CubeGroup{SpineCube{p.I, p.K}, {}});
      groups[cit->second].net_ids.push_back(nit->second);
    }
    for (CubeGroup& grp : groups) {
      std::sort(grp.net_ids.begin(), grp.net_ids.end());
      grp.net_ids.erase(std::unique(grp.net_ids.begin(), grp.net_ids.end()),
                        grp.net_ids.end());
    }
  }

  std::mt19937_64 g(c.seed);
  long long hits = 0;
  for (int s = 0; s < samples; ++s) {
    // A weight point, with exact ties forced half of the time.
    std::vector<Rat> raw(m + 1);
    for (Rat& v : raw) {
      const long long den = 1 + static_cast<long long>(g() % 6);
      v = Rat(static_cast<long long>(g() % (den + 1)), den);
    }
    if (g() % 2 == 0) {
      IndexSet tied;
      for (int i = 0; i <= m; ++i) {
        if (g() % 2 == 0) tied = tied | IndexSet::single(i);
      }
      if (tied.empty()) tied = IndexSet::single(static_cast<int>(g() % (m + 1)));
      for (int i : tied.elements()) raw[i] = Rat(1);
    }
    Rat total(0);
    for (const Rat& v : raw) total += v;
    if (total == 0) raw[0] = total = Rat(1);
    RationalPoint x(m + 1);
    for (int i = 0; i <= m; ++i) x[i] = raw[i] / total;

    std::vector<Rat> coords(m + 1);
    for (Rat& v : coords) v = random_angle(g, 8);
    if (g() % 3 == 0) {
      const int i = static_cast<int>(g() % (m + 1));
      const int j = static_cast<int>(g() % (m + 1));
      if (i != j) coords[j] = coords[i] + Rat(g() % 2);
    }
    const AnglePoint theta(coords);

    const bool direct = membership(x, theta);
    bool via_pieces = false;
    std::vector<signed char> in_alcove(nets.size(), -1);
    for (std::size_t gi = 0; gi < groups.size() && !via_pieces; ++gi) {
      if (!spine_cube_contains(groups[gi].cube, x)) continue;
      for (const int id : groups[gi].net_ids) {
        signed char& memo = in_alcove[id];
        if (memo < 0) memo = alcove_contains(theta, nets[id], /*closed=*/true) ? 1 : 0;
        if (memo == 1) {
          via_pieces = true;
          break;
        }
      }
    }
    if (direct != via_pieces) {
      json xs = json::array();
      for (const Rat& v : x) xs.push_back(to_string(v));
      return fail(r, {{"x", xs},
                      {"theta", theta.str()},
                      {"by_definition", direct},
                      {"by_pieces", via_pieces}});
    }
    if (direct) ++hits;
  }
  r.params["inside"] = hits;
}

void chk_ober(const Ctx& c, CheckReport& r) {
  r.params["requested_n"] = c.n;
  if (c.n < 2) {
    r.status = CheckStatus::skipped;
    r.params["reason"] = "needs the 3-element ground set (n >= 2)";
    return;
  }
  const OberReport rep = ober_2x2_report(c.cfg);
  r.params["two_cells"] = rep.two_cells;
  r.params["roof_homology"] = rep.ober_homology.str();
  r.params["phase_homology"] = rep.phase_homology.str();
  r.params["shared_segments"] = rep.shared_segments;
  r.params["phase_only"] = rep.phase_only;
  r.params["roof_only"] = rep.ober_only;
  BettiVector point;
  point.ranks = {1};
  if (rep.two_cells != 6) {
    return fail(r, {{"two_cells", rep.two_cells}, {"expected", 6}});
  }
  if (!matches_ranks(rep.ober_homology, point)) {
    return fail(r, {{"roof_homology", rep.ober_homology.str()},
                    {"reason", "roof complex is not contractible-like"}});
  }
  if (!matches_ranks(rep.phase_homology, point)) {
    return fail(r, {{"phase_homology", rep.phase_homology.str()},
                    {"reason", "cell piece complex is not contractible-like"}});
  }
  if (!rep.boundaries_coincide) {
    return fail(r, {{"boundaries_coincide", false},
                    {"shared_segments", rep.shared_segments},
                    {"phase_only", rep.phase_only},
                    {"roof_only", rep.ober_only},
                    {"witness", rep.witness}});
  }
}

using CheckFn = void (*)(const Ctx&, CheckReport&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"partition-census", chk_partition_census},
      {"net-census", chk_net_census},
      {"alcove-partition-sampling", chk_alcove_sampling},
      {"dimension-formula", chk_dimension_formula},
      {"lattice-isomorphism", chk_lattice_isomorphism},
      {"boundary-sphere", chk_boundary_sphere},
      {"l-circle", chk_l_circle},
      {"star-complement", chk_star_complement},
      {"facet-types", chk_facet_types},
      {"global-homology", chk_global_homology},
      {"membership-consistency", chk_membership},
      {"ober-2x2", chk_ober},
  };
  return table;
}

CheckReport run_one(const std::string& name, CheckFn fn, int n, std::uint64_t seed,
                    const Config& cfg) {
  CheckReport rep;
  rep.name = name;
  rep.status = CheckStatus::pass;
  Ctx ctx{n, seed ^ fnv1a(name) ^ static_cast<std::uint64_t>(n), cfg};
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(ctx, rep);
  } catch (const std::exception& e) {
    rep.status = CheckStatus::fail;
    rep.witness = json{{"exception", e.what()}};
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : check_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_all(int n, const std::vector<std::string>& selection,
                                 std::uint64_t seed, const Config& cfg, bool parallel) {
  cfg.validate();
  if (n < 1) throw argument_error("run_all: n must be at least 1");
  std::set<std::string> wanted(selection.begin(), selection.end());
  for (const std::string& name : selection) {
    if (std::find(check_names().begin(), check_names().end(), name) ==
        check_names().end()) {
      throw argument_error("unknown check: " + name);
    }
  }
  std::vector<std::pair<std::string, CheckFn>> todo;
  for (const auto& entry : check_table()) {
    if (wanted.empty() || wanted.count(entry.first)) todo.push_back(entry);
  }
  std::vector<CheckReport> reports;
  if (parallel) {
    std::vector<std::future<CheckReport>> futures;
    futures.reserve(todo.size());
    for (const auto& [name, fn] : todo) {
      futures.push_back(std::async(std::launch::async, run_one, name, fn, n, seed, cfg));
    }
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const auto& [name, fn] : todo) reports.push_back(run_one(name, fn, n, seed, cfg));
  }
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) {
    return r.status == CheckStatus::fail;
  });
}

std::vector<std::uint64_t> sign_vector_oracle(int n) {
  if (n < 1 || n > 3) throw argument_error("sign_vector_oracle: n must be 1..3");
  long long denom = 4;  // 4 * (n+1)!
  for (int i = 2; i <= n + 1; ++i) denom *= i;
  const long long wrap = 2 * denom;
  const int pairs = n * (n + 1) / 2;
  std::vector<char> seen(1ull << (2 * pairs), 0);
  std::vector<long long> j(n + 1, 0);  // j[0] stays 0
  while (true) {
    std::uint64_t code = 0;
    for (int hi = 1; hi <= n; ++hi) {
      for (int lo = 0; lo < hi; ++lo) {
        const long long d = ((j[hi] - j[lo]) % wrap + wrap) % wrap;
        std::uint64_t rel;
        if (d == 0) {
          rel = static_cast<std::uint64_t>(PairRelation::equal_pair);
        } else if (d == denom) {
          rel = static_cast<std::uint64_t>(PairRelation::antipodal_pair);
        } else if (d < denom) {
          rel = static_cast<std::uint64_t>(PairRelation::interval_lo_first);
        } else {
          rel = static_cast<std::uint64_t>(PairRelation::interval_hi_first);
        }
        code |= rel << (2 * (hi * (hi - 1) / 2 + lo));
      }
    }
    seen[code] = 1;
    int pos = 1;
    while (pos <= n && ++j[pos] == wrap) {
      j[pos] = 0;
      ++pos;
    }
    if (pos > n) break;
  }
  std::vector<std::uint64_t> out;
  for (std::size_t code = 0; code < seen.size(); ++code) {
    if (seen[code]) out.push_back(code);
  }
  return out;
}

long long cyclic_partition_count_oracle(int n) {
  if (n < 0 || n > 7) throw argument_error("cyclic_partition_count_oracle: n must be 0..7");
  long long total = 0;
  for (int k = 1; k <= n + 1; ++k) {
    std::set<std::vector<std::uint32_t>> canonical;
    std::vector<int> f(n + 1, 0);  // element -> part slot
    while (true) {
      std::uint32_t used = 0;
      for (int v : f) used |= 1u << v;
      if (used == (1u << k) - 1u) {
        std::vector<std::uint32_t> masks(k, 0);
        for (int i = 0; i <= n; ++i) masks[f[i]] |= 1u << i;
        std::vector<std::uint32_t> rotated(k);
        for (int t = 0; t < k; ++t) rotated[t] = masks[(f[0] + t) % k];
        canonical.insert(rotated);
      }
      int pos = 0;
      while (pos <= n && ++f[pos] == k) {
        f[pos] = 0;
        ++pos;
      }
      if (pos > n) break;
    }
    total += static_cast<long long>(canonical.size());
  }
  return total;
}

nlohmann::json reports_json(const std::vector<CheckReport>& reports,
                            bool include_timing) {
  json out;
  json list = json::array();
  for (const CheckReport& r : reports) {
    json entry{{"check", r.name},
               {"params", r.params},
               {"status", to_string(r.status)},
               {"witness", r.witness}};
    if (include_timing) entry["elapsed_ms"] = r.elapsed_ms;
    list.push_back(std::move(entry));
  }
  out["reports"] = std::move(list);
  out["all_passed"] = all_passed(reports);
  return out;
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string junit_xml(const std::vector<CheckReport>& reports) {
  long long failures = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    if (r.status == CheckStatus::fail) ++failures;
    if (r.status == CheckStatus::skipped) ++skipped;
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<testsuite name=\"pants-verify\" tests=\"" + std::to_string(reports.size()) +
         "\" failures=\"" + std::to_string(failures) + "\" skipped=\"" +
         std::to_string(skipped) + "\">\n";
  for (const CheckReport& r : reports) {
    out += "  <testcase name=\"" + xml_escape(r.name) + "\" time=\"" +
           std::to_string(r.elapsed_ms / 1000.0) + "\"";
    if (r.status == CheckStatus::pass) {
      out += "/>\n";
      continue;
    }
    out += ">\n";
    if (r.status == CheckStatus::fail) {
      out += "    <failure message=\"" + xml_escape(r.witness.dump()) + "\"/>\n";
    } else {
      out += "    <skipped/>\n";
    }
    out += "  </testcase>\n";
  }
  out += "</testsuite>\n";
  return out;
}

}  // namespace pants
