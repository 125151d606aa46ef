#include "lambda_lab/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lambda_lab {

namespace {

using Row = std::vector<long long>;

long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX / 2 || p < INT64_MIN / 2) throw std::overflow_error("matrix entry overflow");
  return static_cast<long long>(p);
}

struct Work {
  std::vector<Row> m;  // rows × cols
  std::vector<Row> v, v_inv;
  int rows, cols;
  std::uint64_t budget;

  void spend(std::uint64_t steps) {
    if (steps > budget) throw std::runtime_error("step budget exceeded");
    budget -= steps;
  }

  // row ops change only the row span's presentation, nothing tracked
  void row_swap(int a, int b) { std::swap(m[a], m[b]); }
  void row_addmul(int dst, int src, long long c) {
    spend(cols);
    for (int j = 0; j < cols; ++j) m[dst][j] += checked_mul(c, m[src][j]);
  }
  void row_negate(int a) {
    for (int j = 0; j < cols; ++j) m[a][j] = -m[a][j];
  }

  // column ops are mirrored into V (m := m·E, v := v·E, v_inv := E^{-1}·v_inv)
  void col_swap(int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (int i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    std::swap(v_inv[a], v_inv[b]);
  }
  void col_addmul(int dst, int src, long long c) {
    spend(rows + 2 * cols);
    for (int i = 0; i < rows; ++i) m[i][dst] += checked_mul(c, m[i][src]);
    for (int i = 0; i < cols; ++i) v[i][dst] += checked_mul(c, v[i][src]);
    for (int j = 0; j < cols; ++j) v_inv[src][j] -= checked_mul(c, v_inv[dst][j]);
  }
  void col_negate(int a) {
    for (int i = 0; i < rows; ++i) m[i][a] = -m[i][a];
    for (int i = 0; i < cols; ++i) v[i][a] = -v[i][a];
    for (int j = 0; j < cols; ++j) v_inv[a][j] = -v_inv[a][j];
  }
};

}  // namespace

std::vector<long long> SmithResult::coordinates(const std::vector<long long>& x) const {
  int n = static_cast<int>(v.size());
  std::vector<long long> z(n, 0);
  for (int j = 0; j < n; ++j) {
    __int128 acc = 0;
    for (int i = 0; i < n; ++i) acc += static_cast<__int128>(x[i]) * v[i][j];
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("coordinate overflow");
    z[j] = static_cast<long long>(acc);
  }
  return z;
}

SmithResult smith_normal_form(std::vector<std::vector<long long>> rows_in, int cols,
                              std::uint64_t step_budget) {
  Work w;
  w.cols = cols;
  w.m = std::move(rows_in);
  w.rows = static_cast<int>(w.m.size());
  w.budget = step_budget;
  for (auto& r : w.m)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged relation matrix");
  if (w.rows == 0) w.m.push_back(Row(cols, 0)), w.rows = 1;

  w.v.assign(cols, Row(cols, 0));
  w.v_inv.assign(cols, Row(cols, 0));
  for (int i = 0; i < cols; ++i) w.v[i][i] = w.v_inv[i][i] = 1;

  int t = 0;
  int limit = std::min(w.rows, cols);
  while (t < limit) {
    // find the nonzero entry of least magnitude in the trailing submatrix
    int pi = -1, pj = -1;
    long long best = 0;
    w.spend(static_cast<std::uint64_t>(w.rows - t) * (cols - t));
    for (int i = t; i < w.rows; ++i)
      for (int j = t; j < cols; ++j) {
        long long a = std::llabs(w.m[i][j]);
        if (a != 0 && (pi < 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    if (w.m[t][t] < 0) w.row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < w.rows; ++i)
      if (w.m[i][t] != 0) {
        w.row_addmul(i, t, -(w.m[i][t] / w.m[t][t]));
        if (w.m[i][t] != 0) clean = false;  // remainder left, pivot will shrink
      }
    for (int j = t + 1; j < cols; ++j)
      if (w.m[t][j] != 0) {
        w.col_addmul(j, t, -(w.m[t][j] / w.m[t][t]));
        if (w.m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // repeat with the smaller pivot

    // divisibility: pivot must divide every remaining entry
    bool divides = true;
    for (int i = t + 1; i < w.rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (w.m[i][j] % w.m[t][t] != 0) {
          w.row_addmul(t, i, 1);  // pulls the offending row up, restart pivot
          divides = false;
        }
    if (divides) ++t;
  }

  SmithResult out;
  out.diagonal.assign(cols, 0);
  for (int i = 0; i < limit; ++i) out.diagonal[i] = std::llabs(w.m[i][i]);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

}  // namespace lambda_lab
