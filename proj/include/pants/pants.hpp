#pragma once
#include <string>
#include <vector>

#include "pants/chords.hpp"
#include "pants/config.hpp"
#include "pants/partitions.hpp"
#include "pants/poset.hpp"
#include "pants/simplex.hpp"

namespace pants {

// Cell of the pair-of-pants lattice: sigma must divide J.
struct PantsCellLabel {
  CyclicPartition sigma;
  IndexSet J;

  int dim() const { return sigma.k() + J.size() - 4; }
  std::string str() const;  // "(<0|1|2>,012)"
  friend auto operator<=>(const PantsCellLabel&, const PantsCellLabel&) = default;
};

// Face of the phase-tropical pants: spine cube times closed alcove, with
// every chord of nu dividing the tie set I (hence nu is tangent-free and
// |I| >= 2 automatically).
struct Piece {
  IndexSet I, K;  // I subset K
  Net nu;

  int dim() const { return (K.size() - I.size()) + (nu.size() - 1); }
  std::string str() const;          // "P(01,012,<0|1|2>;01,12)"
  std::string stratum_str() const;  // "(<base>,K)", a PantsCellLabel label
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

bool piece_valid(const Piece& p, int n);
// Face order: larger tie set, smaller support, sub-net.
bool piece_face_leq(const Piece& a, const Piece& b);

struct PantsComplex {
  FacePoset poset;
  std::vector<PantsCellLabel> cells;  // aligned with poset element ids
};

// All (sigma, J) with sigma dividing J, graded by |sigma|+|J|-4, covers by
// one coarsening step or one element dropped from J.
PantsComplex enumerate_pants_cells(int n, const Config& cfg = Config());

struct CellPieces {
  FacePoset poset;
  std::vector<Piece> pieces;  // aligned with poset element ids
};

// All pieces of the closed cell: I <= K <= J, [nu] a coarsening of sigma,
// every chord dividing I.
CellPieces pieces_of_cell(const CyclicPartition& sigma, IndexSet J,
                          const Config& cfg = Config());

struct PhaseComplex {
  FacePoset poset;
  std::vector<Piece> pieces;                // aligned with poset element ids
  std::vector<std::string> stratum_labels;  // ([nu],K) per piece, cell format
};

// Global phase-tropical pants: union of the pieces of every cell.
PhaseComplex assemble_phase_tropical(int n, const Config& cfg = Config());

// Point test straight from the definition: some tie set I of size >= 2
// inside argmax(x) whose partial coamoeba contains theta.
bool membership(const RationalPoint& x, const AnglePoint& theta);

// Subcomplex of non-interlacing pairs (K,V): K inside a single part of
// coarsen(sigma,V).  Elements labeled "(K=01,V=02)", graded by
// (|K|-1)+(|V|-1), covers by single removals.
FacePoset L_complex(const CyclicPartition& sigma, IndexSet J);

// Faces of dsd(simplex on J) x alcove-faces(stratum closure of sigma)
// having no vertex in the phase-tropical cell.  Labels look like
// "D(0,01)*A(00,01)".
FacePoset star_complement(const CyclicPartition& sigma, IndexSet J,
                          const Config& cfg = Config());

struct StarReport {
  bool routes_agree = false;        // vertex census == chord test == part test
  bool complement_downclosed = false;
  bool supports_match_l = false;    // complement support labels == L elements
  bool census_ok = false;           // vertex count 2^{|K-I|} * |nu| per face
  bool m_collapsible = false;       // each star face meets the cell collapsibly
  long long ambient_faces = 0, complement_faces = 0, star_faces = 0;
  std::string witness;              // first discrepancy, empty when fine

  bool ok() const {
    return routes_agree && complement_downclosed && supports_match_l &&
           census_ok && m_collapsible;
  }
};

StarReport star_complement_report(const CyclicPartition& sigma, IndexSet J,
                                  const Config& cfg = Config());

struct FacetReport {
  long long codim1_total = 0, interior = 0, boundary = 0;
  long long top_total = 0;
  long long type1 = 0, type2 = 0;   // top pieces by signature
  bool pseudo_ok = true;            // interior facet under 2 tops, boundary under 1
  bool types_ok = true;             // every top piece is type 1 or 2
  std::string witness;
};

// Census of one cell's top pieces by shape and of its codimension-1 pieces
// by incident top pieces.  The complex is one dimension below its ambient, so
// its top pieces play the role of facets there: each must look like either
// (|I| = 2, net one chord short of a maximal one) or (|I| = 3, maximal net).
FacetReport classify_codim1_pieces(const CyclicPartition& sigma, IndexSet J,
                                   const Config& cfg = Config());

// Pieces of the strict boundary of the cell: stratum label != (sigma,J).
FacePoset cell_boundary_pieces(const CyclicPartition& sigma, IndexSet J,
                               const Config& cfg = Config());

struct OberTriple {
  FacePoset ambient;  // dsd(face simplex on J) x dsd(stratum simplex)
  FacePoset ober;     // closure of the 6 squares
  FacePoset phase;    // piece poset of the same cell
};

// The fixed 3-part, 3-element cell the roof construction is checked on.
OberTriple ober_cell_2x2();

struct OberReport {
  long long two_cells = 0;
  BettiVector ober_homology, phase_homology;
  bool boundaries_coincide = false;
  long long shared_segments = 0, phase_only = 0, ober_only = 0;
  std::string witness;
};

// Compares the boundary circles of the ober and phase complexes as point
// sets, segment by segment, after a common refinement.
OberReport ober_2x2_report(const Config& cfg = Config());

// --- streaming helpers (no piece poset materialized) -------------------

// Max piece dimension per cell with a fixed sigma, cheap enough for every
// cell at lattice scale.
class CellDimScanner {
 public:
  explicit CellDimScanner(const CyclicPartition& sigma);
  // -1 when the cell has no piece at all.
  int max_piece_dim(IndexSet J) const;

 private:
  struct NetInfo {
    int chord_count;
    std::vector<IndexSet> min_dividers;  // minimal tie sets, an antichain
  };
  std::vector<NetInfo> nets_;
};

// Distinct stratum labels "(base,K)" over all valid pieces, with dims.
std::vector<std::pair<std::string, int>> occurring_stratum_labels(
    int n, const Config& cfg = Config());

}  // namespace pants
