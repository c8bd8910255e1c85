#include "satake/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace satake::linalg {

namespace {

struct Tableau {
  // rows_[i] = [coefficients..., rhs]; rows_.back() is the objective row.
  std::vector<Vec> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // variable count

  Vec& objective() { return rows.back(); }
  std::size_t constraints() const { return rows.size() - 1; }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimizes the objective row over columns [0, allowed). Bland's rule.
  void optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (objective()[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return;
      std::size_t leave = constraints();
      Rational best;
      for (std::size_t i = 0; i < constraints(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == constraints() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == constraints()) throw std::logic_error("solve_lp: unbounded objective");
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::optional<Vec> solve_lp(const Mat& a, const Vec& b, const Vec& cost) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : cost.size();
  if (m == 0) return Vec(n, 0);

  Tableau t;
  t.cols = n + m;
  t.rows.assign(m + 1, Vec(t.cols + 1, 0));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = sign * a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.cols] = sign * b[i];
    t.basis[i] = n + i;
  }
  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= t.cols; ++j)
      if (j < n || j == t.cols) t.objective()[j] -= t.rows[i][j];
  t.optimize(n);
  if (t.objective()[t.cols] != 0) return std::nullopt;

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }

  if (!cost.empty()) {
    auto& obj = t.objective();
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = 0; j < n; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t bv = t.basis[i];
      if (bv >= n || obj[bv] == 0) continue;
      Rational f = obj[bv];
      for (std::size_t j = 0; j <= t.cols; ++j) obj[j] -= f * t.rows[i][j];
    }
    t.optimize(n);
  }

  Vec x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) x[t.basis[i]] = t.rows[i][t.cols];
  return x;
}

bool in_cone(const LatticeVector& v, std::span<const LatticeVector> generators) {
  if (v.is_zero()) return true;
  if (generators.empty()) return false;
  const std::size_t r = v.rank();
  Mat a(r, Vec(generators.size(), 0));
  Vec b(r);
  for (std::size_t i = 0; i < r; ++i) {
    b[i] = static_cast<long>(v[i]);
    for (std::size_t j = 0; j < generators.size(); ++j) a[i][j] = static_cast<long>(generators[j][i]);
  }
  return solve_lp(a, b, {}).has_value();
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Mat to_rows(std::span<const LatticeVector> vectors) {
  Mat m;
  for (const auto& v : vectors) {
    Vec row;
    for (auto c : v.coords) row.emplace_back(static_cast<long>(c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::size_t rank(std::span<const LatticeVector> vectors) {
  Mat m = to_rows(vectors);
  return row_reduce(m).size();
}

bool in_span(const LatticeVector& v, std::span<const LatticeVector> vectors) {
  if (v.is_zero()) return true;
  std::vector<LatticeVector> all(vectors.begin(), vectors.end());
  std::size_t before = rank(all);
  all.push_back(v);
  return rank(all) == before;
}

std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t dim) {
  Mat m = to_rows(rows);
  for (auto& row : m) row.resize(dim, 0);
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<LatticeVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vec x(dim, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free];
    mpz_class l = 1;
    for (const auto& xi : x) l = lcm(l, mpz_class(xi.get_den()));
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const auto& xi : x) {
      mpz_class z = xi.get_num() * (l / xi.get_den());
      ints.push_back(z);
      g = gcd(g, z);
    }
    LatticeVector v;
    for (auto& z : ints) v.coords.push_back(mpz_class(z / g).get_si());
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> coordinates(const LatticeVector& v, std::span<const LatticeVector> basis) {
  const std::size_t r = v.rank();
  const std::size_t k = basis.size();
  // Augmented system: columns are basis vectors, last column is v.
  Mat m(r, Vec(k + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<long>(basis[j][i]);
    m[i][k] = static_cast<long>(v[i]);
  }
  auto pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw std::logic_error("coordinates: basis is linearly dependent");
  Vec x(k, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][k];
  return x;
}

}  // namespace satake::linalg
