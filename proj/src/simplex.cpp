// Dualizing subdivision of a simplex, spine cubes, and the exact
// amoeba/coamoeba membership tests.

#include "pants/simplex.hpp"

#include <algorithm>
#include <tuple>

#include "pants/errors.hpp"

namespace pants {

std::string DsdCell::str() const {
  return "D(" + I.str() + "," + J.str() + ")";
}

std::string SpineCube::str() const {
  return "H(" + I.str() + "," + K.str() + ")";
}

std::vector<DsdCell> dsd_cells(IndexSet J) {
  if (J.empty()) throw argument_error("dsd_cells: empty ground set");
  std::vector<DsdCell> cells;
  for (IndexSet outer : nonempty_subsets(J)) {
    for (IndexSet inner : nonempty_subsets(outer)) {
      cells.push_back(DsdCell{inner, outer});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const DsdCell& a, const DsdCell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::tie(a.I, a.J) < std::tie(b.I, b.J);
  });
  return cells;
}

bool dsd_face_leq(const DsdCell& a, const DsdCell& b) {
  return a.J.subset_of(b.J) && b.I.subset_of(a.I);
}

std::vector<SpineCube> spine_cubes(IndexSet J) {
  std::vector<SpineCube> cubes;
  for (IndexSet K : nonempty_subsets(J)) {
    for (IndexSet I : nonempty_subsets(K)) {
      if (I.size() >= 2) cubes.push_back(SpineCube{I, K});
    }
  }
  std::sort(cubes.begin(), cubes.end(), [](const SpineCube& a, const SpineCube& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::tie(a.I, a.K) < std::tie(b.I, b.K);
  });
  return cubes;
}

bool spine_face_leq(const SpineCube& a, const SpineCube& b) {
  return b.I.subset_of(a.I) && a.K.subset_of(b.K);
}

RationalPoint simplex_barycenter(IndexSet L, int n) {
  if (L.empty()) throw argument_error("simplex_barycenter: empty face");
  if (!L.subset_of(IndexSet::full(n + 1))) {
    throw argument_error("simplex_barycenter: face " + L.str() + " outside {0.." +
                         std::to_string(n) + "}");
  }
  RationalPoint x(n + 1, Rat(0));
  const Rat w = Rat(1) / L.size();
  for (int i : L.elements()) x[i] = w;
  return x;
}

bool in_simplex(const RationalPoint& x) {
  Rat total(0);
  for (const Rat& xi : x) {
    if (xi < 0) return false;
    total += xi;
  }
  return total == 1;
}

bool amoeba_contains(const RationalPoint& x) {
  if (!in_simplex(x)) throw argument_error("amoeba_contains: point outside the simplex");
  const Rat half(1, 2);
  return std::all_of(x.begin(), x.end(), [&](const Rat& xi) { return xi <= half; });
}

bool spine_cube_contains(const SpineCube& h, const RationalPoint& x) {
  if (!in_simplex(x)) throw argument_error("spine_cube_contains: point outside the simplex");
  if (h.I.size() < 2 || !h.I.subset_of(h.K)) {
    throw argument_error("bad spine cube " + h.str());
  }
  const int n = static_cast<int>(x.size()) - 1;
  if (!h.K.subset_of(IndexSet::full(n + 1))) {
    throw argument_error("spine cube " + h.str() + " outside the coordinate range");
  }
  Rat max_k(0);
  for (int i : h.K.elements()) max_k = std::max(max_k, x[i]);
  for (int i = 0; i <= n; ++i) {
    const bool in_k = h.K.contains(i);
    if (!in_k && x[i] != 0) return false;          // support inside K
    if (h.I.contains(i) && x[i] != max_k) return false;  // tie at the max on I
  }
  return true;
}

bool coamoeba_contains(const AnglePoint& theta, IndexSet I) {
  if (I.size() < 2) {
    throw argument_error("coamoeba_contains: need at least two indices, got " + I.str());
  }
  if (!I.subset_of(IndexSet::full(theta.n() + 1))) {
    throw argument_error("coamoeba_contains: " + I.str() + " outside the coordinate range");
  }
  std::vector<Rat> vals;
  for (int i : I.elements()) vals.push_back(mod_two(theta.theta(i)));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  // Circular gaps between consecutive distinct angles; a single distinct
  // value leaves one gap of a full turn.
  const std::size_t m = vals.size();
  for (std::size_t t = 0; t < m; ++t) {
    const Rat gap =
        t + 1 < m ? Rat(vals[t + 1] - vals[t]) : Rat(vals[0] + 2 - vals[m - 1]);
    if (gap > 1) return false;
  }
  return true;
}

}  // namespace pants
