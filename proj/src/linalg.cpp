#include "hforge/linalg.hpp"

namespace hforge {

namespace {

std::size_t structural_size(const Fe& f) {
  return f.num().terms().size() + f.den().terms().size();
}

ChartPtr chart_of(const FeMatrix& m) {
  for (auto& row : m)
    for (auto& e : row)
      if (e.chart()) return e.chart();
  throw engine_error("domain", "empty matrix");
}

}  // namespace

FeMatrix fe_identity(const ChartPtr& chart, int n) {
  FeMatrix m(n, FeVector(n, Fe::constant(chart, Rational(0))));
  for (int i = 0; i < n; ++i) m[i][i] = Fe::constant(chart, Rational(1));
  return m;
}

FeMatrix fe_mul(const FeMatrix& a, const FeMatrix& b) {
  auto chart = chart_of(a);
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  FeMatrix r(n, FeVector(m, Fe::constant(chart, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

FeVector fe_apply(const FeMatrix& a, const FeVector& x) {
  auto chart = chart_of(a);
  FeVector r(a.size(), Fe::constant(chart, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!a[i][j].is_zero() && !x[j].is_zero()) r[i] = r[i] + a[i][j] * x[j];
  return r;
}

Fe fe_det(const FeMatrix& m) {
  auto chart = chart_of(m);
  FeMatrix a = m;
  int n = static_cast<int>(a.size());
  Fe det = Fe::constant(chart, Rational(1));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      std::size_t sz = structural_size(a[r][col]);
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0) return Fe::constant(chart, Rational(0));
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    Fe inv = a[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Fe f = a[r][col] * inv;
      for (int c2 = col; c2 < n; ++c2)
        if (!a[col][c2].is_zero()) a[r][c2] = a[r][c2] - f * a[col][c2];
    }
  }
  return det;
}

std::optional<FeVector> fe_solve(FeMatrix a, FeVector b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      std::size_t sz = structural_size(a[r][col]);
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Fe inv = a[col][col].inverse();
    for (int c2 = col; c2 < n; ++c2) a[col][c2] = a[col][c2] * inv;
    b[col] = b[col] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fe f = a[r][col];
      for (int c2 = col; c2 < n; ++c2)
        if (!a[col][c2].is_zero()) a[r][c2] = a[r][c2] - f * a[col][c2];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

FeMatrix fe_inverse(const FeMatrix& m) {
  auto chart = chart_of(m);
  int n = static_cast<int>(m.size());
  FeMatrix a = m;
  FeMatrix inv = fe_identity(chart, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      std::size_t sz = structural_size(a[r][col]);
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0)
      throw engine_error("singular", "singular frame: the component determinant vanishes");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Fe f = a[col][col].inverse();
    for (int c2 = 0; c2 < n; ++c2) {
      a[col][c2] = a[col][c2] * f;
      inv[col][c2] = inv[col][c2] * f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fe g = a[r][col];
      for (int c2 = 0; c2 < n; ++c2) {
        if (!a[col][c2].is_zero()) a[r][c2] = a[r][c2] - g * a[col][c2];
        if (!inv[col][c2].is_zero()) inv[r][c2] = inv[r][c2] - g * inv[col][c2];
      }
    }
  }
  return inv;
}

int fe_rank(FeMatrix m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      std::size_t sz = structural_size(m[r][col]);
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    Fe inv = m[rank][col].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Fe f = m[r][col] * inv;
      for (int c2 = col; c2 < cols; ++c2)
        if (!m[rank][c2].is_zero()) m[r][c2] = m[r][c2] - f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

std::optional<FeVector> span_coefficients(const std::vector<FeVector>& vectors,
                                          const FeVector& target) {
  if (vectors.empty()) return std::nullopt;
  ChartPtr chart;
  for (auto& e : target)
    if (e.chart()) chart = e.chart();
  if (!chart) chart = vectors[0][0].chart();
  int dim = static_cast<int>(target.size());
  int k = static_cast<int>(vectors.size());
  FeMatrix a(dim, FeVector(k + 1, Fe::constant(chart, Rational(0))));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = vectors[j][i];
    a[i][k] = target[i];
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < k && rank < dim; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = rank; r < dim; ++r) {
      if (a[r][col].is_zero()) continue;
      std::size_t sz = structural_size(a[r][col]);
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    Fe inv = a[rank][col].inverse();
    for (int c2 = 0; c2 <= k; ++c2) a[rank][c2] = a[rank][c2] * inv;
    for (int r = 0; r < dim; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Fe f = a[r][col];
      for (int c2 = 0; c2 <= k; ++c2)
        if (!a[rank][c2].is_zero()) a[r][c2] = a[r][c2] - f * a[rank][c2];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < dim; ++r)
    if (!a[r][k].is_zero()) return std::nullopt;
  FeVector coeffs(k, Fe::constant(chart, Rational(0)));
  for (int r = 0; r < rank; ++r) coeffs[pivot_col[r]] = a[r][k];
  return coeffs;
}

}  // namespace hforge
