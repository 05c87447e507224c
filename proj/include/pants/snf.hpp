#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "pants/rational.hpp"

namespace pants {

// Integer matrix stored by columns; entries within a column are sorted by
// row and nonzero.
struct SparseIntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Int>>> col_entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), col_entries(c) {}
  void add(int r, int c, Int v);  // append (rows must come in order per col)
  std::size_t nonzeros() const;
};

struct SmithResult {
  long long rank = 0;
  std::vector<Int> invariants;  // nonzero diagonal d1 | d2 | ..., all > 0
};

// Smith normal form.  Unit pivots are eliminated sparsely; the residual is
// densified and reduced with exact big integers.  Throws resource_error
// when the residual exceeds `nonzero_guard` nonzeros.
SmithResult smith_normal_form(const SparseIntMatrix& m, std::size_t nonzero_guard);

long long gf2_rank(const SparseIntMatrix& m);

}  // namespace pants
