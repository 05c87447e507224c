#pragma once
#include <string>
#include <vector>

#include "pants/chords.hpp"
#include "pants/indexset.hpp"
#include "pants/rational.hpp"

namespace pants {

// Cell of the dualizing subdivision of the face simplex on J: the convex
// hull of the barycenters of the faces between I and J.
struct DsdCell {
  IndexSet I, J;  // {} != I subset J

  int dim() const { return J.size() - I.size(); }
  std::string str() const;  // "D(0,012)"
  friend constexpr auto operator<=>(const DsdCell&, const DsdCell&) = default;
};

// Cube of the spine (tropical hyperplane): coordinates tied at the
// maximum on I, supported inside K.
struct SpineCube {
  IndexSet I, K;  // |I| >= 2, I subset K

  int dim() const { return K.size() - I.size(); }
  std::string str() const;  // "H(01,012)"
  friend constexpr auto operator<=>(const SpineCube&, const SpineCube&) = default;
};

// Point of the coordinate simplex; index i carries the weight of ground
// element i (entries outside the supporting face are zero).
using RationalPoint = std::vector<Rat>;

// All pairs {} != I' <= J' <= J, sorted by (dim, I', J').
std::vector<DsdCell> dsd_cells(IndexSet J);
// Face order: smaller cell has the larger inner set and smaller outer set.
bool dsd_face_leq(const DsdCell& a, const DsdCell& b);

// All pairs I <= K <= J with |I| >= 2; empty when |J| < 2.
std::vector<SpineCube> spine_cubes(IndexSet J);
bool spine_face_leq(const SpineCube& a, const SpineCube& b);

// Uniform point on the face spanned by L, inside the n-dimensional simplex.
RationalPoint simplex_barycenter(IndexSet L, int n);

bool in_simplex(const RationalPoint& x);  // nonnegative, sums to 1

// Every coordinate at most 1/2 (the cut-corner region).
bool amoeba_contains(const RationalPoint& x);

// Closed membership in the cube: support inside K and all I-coordinates
// tied at the maximum over K.
bool spine_cube_contains(const SpineCube& h, const RationalPoint& x);

// Closed partial-coamoeba test: the circular gaps of {theta_i : i in I}
// are all at most one half-turn.  Requires |I| >= 2.
bool coamoeba_contains(const AnglePoint& theta, IndexSet I);

}  // namespace pants
