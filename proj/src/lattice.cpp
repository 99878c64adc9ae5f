#include "taf/lattice.hpp"

#include <cstdlib>
#include <limits>

#include "taf/checked.hpp"

namespace taf {

IntVec CyclicDecomposition::project(const IntVec& x) const {
  IntVec y(moduli.size(), 0);
  for (size_t j = 0; j < moduli.size(); ++j) {
    int64_t acc = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0 || coords[j][i] == 0) continue;
      int64_t term = mod_floor(checked_mul(mod_floor(x[i], moduli[j]), mod_floor(coords[j][i], moduli[j])),
                               moduli[j]);
      acc = mod_floor(acc + term, moduli[j]);
    }
    y[j] = acc;
  }
  return y;
}

namespace {

struct Work {
  std::vector<IntVec> a;     // m x k relation matrix
  std::vector<IntVec> v;     // k x k column transform
  std::vector<IntVec> vinv;  // k x k inverse transform
  std::vector<bool> row_used, col_used;

  // row_dst -= q * row_src
  void row_sub(size_t dst, size_t src, int64_t q) {
    for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] = checked_sub(a[dst][j], checked_mul(q, a[src][j]));
  }

  // col_dst -= q * col_src, tracking V and V^{-1}
  void col_sub(size_t dst, size_t src, int64_t q) {
    for (auto& row : a) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
    for (auto& row : v) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
    // V' = V E with E = I - q e_src e_dst^T, so V'^{-1} = (I + q e_src e_dst^T) V^{-1}
    for (size_t j = 0; j < vinv[src].size(); ++j)
      vinv[src][j] = checked_add(vinv[src][j], checked_mul(q, vinv[dst][j]));
  }
};

}  // namespace

CyclicDecomposition decompose_quotient(size_t rank, const std::vector<IntVec>& relations) {
  Work w;
  w.a = relations;
  for (auto& r : w.a) {
    if (r.size() != rank) throw InputError("relation vector has wrong length");
  }
  w.v.assign(rank, IntVec(rank, 0));
  w.vinv.assign(rank, IntVec(rank, 0));
  for (size_t i = 0; i < rank; ++i) w.v[i][i] = w.vinv[i][i] = 1;
  w.row_used.assign(w.a.size(), false);
  w.col_used.assign(rank, false);
  std::vector<int64_t> pivot_of_col(rank, 0);

  for (;;) {
    // Smallest nonzero entry in the unused block; ties go to lowest column, then row.
    size_t pr = 0, pc = 0;
    int64_t best = std::numeric_limits<int64_t>::max();
    for (size_t c = 0; c < rank; ++c) {
      if (w.col_used[c]) continue;
      for (size_t r = 0; r < w.a.size(); ++r) {
        if (w.row_used[r] || w.a[r][c] == 0) continue;
        int64_t m = std::llabs(w.a[r][c]);
        if (m < best) best = m, pr = r, pc = c;
      }
    }
    if (best == std::numeric_limits<int64_t>::max()) break;

    bool dirty = false;
    for (size_t r = 0; r < w.a.size() && !dirty; ++r) {
      if (r == pr || w.row_used[r] || w.a[r][pc] == 0) continue;
      int64_t q = div_floor(w.a[r][pc], w.a[pr][pc]);
      w.row_sub(r, pr, q);
      if (w.a[r][pc] != 0) dirty = true;
    }
    if (dirty) continue;
    for (size_t c = 0; c < rank && !dirty; ++c) {
      if (c == pc || w.col_used[c] || w.a[pr][c] == 0) continue;
      int64_t q = div_floor(w.a[pr][c], w.a[pr][pc]);
      w.col_sub(c, pc, q);
      if (w.a[pr][c] != 0) dirty = true;
    }
    if (dirty) continue;

    w.row_used[pr] = true;
    w.col_used[pc] = true;
    pivot_of_col[pc] = std::llabs(w.a[pr][pc]);
  }

  CyclicDecomposition out;
  for (size_t c = 0; c < rank; ++c) {
    if (!w.col_used[c]) throw InputError("relation lattice is not of full rank (infinite quotient)");
    if (pivot_of_col[c] == 1) continue;
    out.moduli.push_back(pivot_of_col[c]);
    IntVec col(rank);
    for (size_t i = 0; i < rank; ++i) col[i] = w.v[i][c];
    out.coords.push_back(std::move(col));
    out.basis.push_back(w.vinv[c]);
  }
  return out;
}

Hnf2 hnf2(const std::vector<IntVec>& vectors) {
  // Combine everything into one vector carrying gcd of second coordinates.
  IntVec pivot{0, 0};
  std::vector<IntVec> rest;
  for (const auto& v : vectors) {
    if (v.size() != 2) throw InputError("hnf2 expects vectors in Z^2");
    if (pivot[1] == 0) {
      if (v[1] == 0) {
        rest.push_back(v);
      } else {
        pivot = v;
      }
      continue;
    }
    if (v[1] == 0) {
      rest.push_back(v);
      continue;
    }
    auto [g, s, t] = ext_gcd(pivot[1], v[1]);
    IntVec combined{checked_add(checked_mul(s, pivot[0]), checked_mul(t, v[0])), g};
    // The two vectors span the same lattice as `combined` and one with zero second entry.
    int64_t qp = pivot[1] / g, qv = v[1] / g;
    IntVec other{checked_sub(checked_mul(qp, v[0]), checked_mul(qv, pivot[0])), 0};
    rest.push_back(other);
    pivot = combined;
  }
  if (pivot[1] == 0) throw InputError("lattice is not of full rank");
  if (pivot[1] < 0) pivot = {-pivot[0], -pivot[1]};
  int64_t a = 0;
  for (const auto& r : rest) a = gcd64(a, r[0]);
  if (a == 0) throw InputError("lattice is not of full rank");
  return {a, mod_floor(pivot[0], a), pivot[1]};
}

}  // namespace taf
