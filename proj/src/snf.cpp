// Exact integer matrix reductions: Smith normal form with a sparse
// unit-pivot phase, and GF(2) rank for mod-2 homology.

#include "pants/snf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "pants/errors.hpp"

namespace pants {

void SparseIntMatrix::add(int r, int c, Int v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw argument_error("matrix entry out of range");
  }
  if (v == 0) return;
  auto& col = col_entries[c];
  if (!col.empty() && col.back().first >= r) {
    throw argument_error("matrix entries must be added in row order per column");
  }
  col.emplace_back(r, std::move(v));
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : col_entries) total += col.size();
  return total;
}

namespace {

// Sparse columns as sorted (row -> value) maps during elimination.
using SparseCol = std::map<int, Int>;

// col += factor * other
void axpy(SparseCol& col, const Int& factor, const SparseCol& other) {
  if (factor == 0) return;
  for (const auto& [r, v] : other) {
    auto it = col.find(r);
    if (it == col.end()) {
      col.emplace(r, factor * v);
    } else {
      it->second += factor * v;
      if (it->second == 0) col.erase(it);
    }
  }
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m, std::size_t nonzero_guard) {
  // Phase 1: repeatedly eliminate with +-1 pivots, cheap and lossless for
  // invariant factors.  Boundary matrices are almost entirely killed here.
  std::vector<SparseCol> cols(m.cols);
  std::vector<std::vector<int>> row_to_cols(m.rows);
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.col_entries[c]) cols[c].emplace(r, v);
  }
  auto rebuild_row_index = [&]() {
    for (auto& lst : row_to_cols) lst.clear();
    for (int c = 0; c < m.cols; ++c) {
      for (const auto& [r, v] : cols[c]) row_to_cols[r].push_back(c);
    }
  };
  rebuild_row_index();

  std::vector<char> row_done(m.rows, 0), col_done(m.cols, 0);
  long long unit_pivots = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (col_done[c]) continue;
      int pivot_row = -1;
      for (const auto& [r, v] : cols[c]) {
        if (!row_done[r] && (v == 1 || v == -1)) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0) continue;
      const Int pivot_val = cols[c][pivot_row];
      for (int other : row_to_cols[pivot_row]) {
        if (other == c || col_done[other]) continue;
        auto it = cols[other].find(pivot_row);
        if (it == cols[other].end()) continue;
        const Int factor = -it->second / pivot_val;  // pivot is a unit
        axpy(cols[other], factor, cols[c]);
        for (const auto& [r, v] : cols[other]) row_to_cols[r].push_back(other);
      }
      row_done[pivot_row] = 1;
      col_done[c] = 1;
      ++unit_pivots;
      progress = true;
    }
    rebuild_row_index();
  }

  // Phase 2: densify the residual and run textbook SNF with big integers.
  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < m.rows; ++r) {
    if (!row_done[r]) live_rows.push_back(r);
  }
  std::vector<int> row_pos(m.rows, -1);
  for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = (int)i;
  std::size_t residual_nonzeros = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (col_done[c]) continue;
    bool any = false;
    for (const auto& [r, v] : cols[c]) {
      if (!row_done[r]) {
        any = true;
        ++residual_nonzeros;
      }
    }
    if (any) live_cols.push_back(c);
  }
  if (residual_nonzeros > nonzero_guard) {
    throw resource_error("smith_normal_form: residual has " +
                         std::to_string(residual_nonzeros) + " nonzeros, guard is " +
                         std::to_string(nonzero_guard));
  }

  SmithResult result;
  result.rank = unit_pivots;
  for (long long i = 0; i < unit_pivots; ++i) result.invariants.push_back(Int(1));
  if (live_cols.empty()) return result;

  const int R = static_cast<int>(live_rows.size());
  const int C = static_cast<int>(live_cols.size());
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C, Int(0)));
  for (int cc = 0; cc < C; ++cc) {
    for (const auto& [r, v] : cols[live_cols[cc]]) {
      if (!row_done[r]) a[row_pos[r]][cc] = v;
    }
  }

  int t = 0;  // current diagonal slot
  std::vector<Int> diag;
  while (t < R && t < C) {
    // Find the entry of least absolute value in the remaining block.
    int pr = -1, pc = -1;
    Int best(0);
    for (int i = t; i < R; ++i) {
      for (int j = t; j < C; ++j) {
        if (a[i][j] == 0) continue;
        Int mag = abs(a[i][j]);
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    std::swap(a[pr], a[t]);
    for (int i = 0; i < R; ++i) std::swap(a[i][pc], a[i][t]);

    bool clean = true;
    for (int i = t + 1; i < R; ++i) {
      if (a[i][t] != 0) {
        const Int q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
    }
    for (int j = t + 1; j < C; ++j) {
      if (a[t][j] != 0) {
        const Int q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
    }
    if (!clean) continue;  // remainder became the new smaller pivot candidate

    // Enforce divisibility into the rest of the block.
    bool divides_all = true;
    for (int i = t + 1; i < R && divides_all; ++i) {
      for (int j = t + 1; j < C; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          // Fold row i into row t and restart this slot.
          for (int jj = t; jj < C; ++jj) a[t][jj] += a[i][jj];
          divides_all = false;
          break;
        }
      }
    }
    if (!divides_all) continue;

    diag.push_back(abs(a[t][t]));
    ++t;
  }

  result.rank += static_cast<long long>(diag.size());
  for (const Int& d : diag) result.invariants.push_back(d);
  // Keep the invariant chain sorted by divisibility; the +-1 phase only
  // produced 1s, and phase 2 emits d1 | d2 | ... already, so a stable sort
  // by magnitude is enough to merge the two runs.
  std::sort(result.invariants.begin(), result.invariants.end());
  return result;
}

long long gf2_rank(const SparseIntMatrix& m) {
  const int words = (m.rows + 63) / 64;
  // pivot_col[r] = a stored column whose lowest set bit is r.  Reducing by
  // lowest set bit strictly increases it, so the loop below terminates.
  std::vector<std::vector<std::uint64_t>> pivot_col(m.rows);
  auto lowest_bit = [&](const std::vector<std::uint64_t>& v) {
    for (int w = 0; w < words; ++w) {
      if (v[w]) return (w << 6) + std::countr_zero(v[w]);
    }
    return -1;
  };
  long long rank = 0;
  std::vector<std::uint64_t> cur(words);
  for (int c = 0; c < m.cols; ++c) {
    std::fill(cur.begin(), cur.end(), 0);
    for (const auto& [r, v] : m.col_entries[c]) {
      if (v % 2 != 0) cur[r >> 6] ^= 1ull << (r & 63);
    }
    for (int lead = lowest_bit(cur); lead >= 0; lead = lowest_bit(cur)) {
      if (pivot_col[lead].empty()) {
        pivot_col[lead] = cur;
        ++rank;
        break;
      }
      for (int w = 0; w < words; ++w) cur[w] ^= pivot_col[lead][w];
    }
  }
  return rank;
}

}  // namespace pants
