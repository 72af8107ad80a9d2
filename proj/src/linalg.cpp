#include "anderson/linalg.hpp"

namespace anderson {

namespace {

long long reduce(long long v, long long n) {
  v %= n;
  if (v < 0) v += n;
  return v;
}

// Applies [[s, t], [u, v]] on the left to rows i and j (or on the right to
// columns), keeping entries reduced mod n.
struct RowColOps {
  long long n;
  std::vector<std::vector<long long>>& m;

  void combine_rows(std::size_t i, std::size_t j, long long s, long long t,
                    long long u, long long v, std::vector<long long>& rhs) {
    for (std::size_t c = 0; c < m[i].size(); ++c) {
      long long a = m[i][c], b = m[j][c];
      m[i][c] = reduce(s * a + t * b, n);
      m[j][c] = reduce(u * a + v * b, n);
    }
    long long a = rhs[i], b = rhs[j];
    rhs[i] = reduce(s * a + t * b, n);
    rhs[j] = reduce(u * a + v * b, n);
  }

  void combine_cols(std::size_t i, std::size_t j, long long s, long long t,
                    long long u, long long v,
                    std::vector<std::vector<long long>>& vtrack) {
    for (auto& row : m) {
      long long a = row[i], b = row[j];
      row[i] = reduce(s * a + t * b, n);
      row[j] = reduce(u * a + v * b, n);
    }
    for (auto& row : vtrack) {
      long long a = row[i], b = row[j];
      row[i] = reduce(s * a + t * b, n);
      row[j] = reduce(u * a + v * b, n);
    }
  }
};

}  // namespace

std::optional<std::vector<long long>> solve_mod(
    long long n, std::vector<std::vector<long long>> a,
    std::vector<long long> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (auto& row : a) {
    if (row.size() != cols) throw DimensionMismatchError();
    for (auto& v : row) v = reduce(v, n);
  }
  if (b.size() != rows) throw DimensionMismatchError();
  for (auto& v : b) v = reduce(v, n);

  // vtrack accumulates the right transforms; x = vtrack * y mod n.
  std::vector<std::vector<long long>> vtrack(cols,
                                             std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) vtrack[i][i] = 1;

  RowColOps ops{n, a};
  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t k = 0; k < steps; ++k) {
    // Move some nonzero entry of the trailing submatrix to the pivot.
    std::size_t pr = k, pc = k;
    bool found = false;
    for (std::size_t i = k; i < rows && !found; ++i) {
      for (std::size_t j = k; j < cols && !found; ++j) {
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;
    if (pr != k) ops.combine_rows(k, pr, 0, 1, 1, 0, b);
    if (pc != k) ops.combine_cols(k, pc, 0, 1, 1, 0, vtrack);

    // Alternate clearing below and to the right of the pivot. When the
    // pivot divides an entry, a plain subtraction clears it and leaves the
    // pivot alone; otherwise a gcd rotation replaces the pivot by a strict
    // divisor. Rotations are therefore bounded, and a pass without one
    // leaves the cleared column untouched, so the loop terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        if (a[i][k] % a[k][k] == 0) {
          ops.combine_rows(k, i, 1, 0, -(a[i][k] / a[k][k]), 1, b);
        } else {
          long long s, t;
          long long g = xgcd(a[k][k], a[i][k], s, t);
          long long u = -(a[i][k] / g), v = a[k][k] / g;
          ops.combine_rows(k, i, s, t, u, v, b);
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        if (a[k][j] % a[k][k] == 0) {
          ops.combine_cols(k, j, 1, 0, -(a[k][j] / a[k][k]), 1, vtrack);
        } else {
          long long s, t;
          long long g = xgcd(a[k][k], a[k][j], s, t);
          long long u = -(a[k][j] / g), v = a[k][k] / g;
          ops.combine_cols(k, j, s, t, u, v, vtrack);
        }
        dirty = true;
      }
      if (dirty) {
        bool col_clear = true;
        for (std::size_t i = k + 1; i < rows; ++i) {
          if (a[i][k] != 0) col_clear = false;
        }
        if (col_clear) dirty = false;
      }
    }
  }

  // Diagonal congruences d_k * y_k = b_k (mod n).
  std::vector<long long> y(cols, 0);
  for (std::size_t k = 0; k < rows; ++k) {
    long long d = k < cols ? a[k][k] : 0;
    long long c = b[k];
    if (d == 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    long long g = gcd_ll(d, n);
    if (c % g != 0) return std::nullopt;
    long long nn = n / g;
    y[k] = reduce((c / g) * mod_inverse(d / g, nn), nn);
  }

  std::vector<long long> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      acc = reduce(acc + vtrack[i][j] * y[j], n);
    }
    x[i] = acc;
  }
  return x;
}

std::optional<std::vector<RingElem>> solve_linear(
    const RingSpec& ring, const std::vector<std::vector<RingElem>>& a,
    const std::vector<RingElem>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw DimensionMismatchError();
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionMismatchError();
    for (const auto& e : row) {
      if (e.ring() != ring) throw RingMismatchError();
    }
  }
  for (const auto& e : b) {
    if (e.ring() != ring) throw RingMismatchError();
  }

  std::vector<std::vector<long long>> coords(cols);
  for (std::size_t comp = 0; comp < ring.arity(); ++comp) {
    std::vector<std::vector<long long>> ac(rows, std::vector<long long>(cols));
    std::vector<long long> bc(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) ac[i][j] = a[i][j].coord(comp);
      bc[i] = b[i].coord(comp);
    }
    auto xc = solve_mod(ring.modulus(comp), std::move(ac), std::move(bc));
    if (!xc) return std::nullopt;
    for (std::size_t j = 0; j < cols; ++j) coords[j].push_back((*xc)[j]);
  }

  std::vector<RingElem> x;
  x.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) x.emplace_back(ring, coords[j]);
  return x;
}

}  // namespace anderson
