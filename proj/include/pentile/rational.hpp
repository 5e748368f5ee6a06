#pragma once

// Exact rational arithmetic and small affine solvers used by the
// combinatorial enumeration (angle-sum systems are tiny and integral).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pentile {

struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  double to_double() const { return double(num) / double(den); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

// Solution of an affine system A x = b over Q.
struct AffineSolution {
  bool consistent = false;
  int rank = 0;
  std::vector<Rat> particular;            // one solution (free vars = 0)
  std::vector<std::vector<Rat>> nullbasis;  // basis of the homogeneous space
};

// Strict feasibility of a system of strict linear inequalities
// sum_j a[j] z[j] < c over the rationals, by Fourier-Motzkin elimination.
// Each row holds k coefficients followed by the bound c.
inline bool strictly_feasible(std::vector<std::vector<Rat>> ineqs, int k) {
  for (int v = k - 1; v >= 0; --v) {
    std::vector<std::vector<Rat>> lower, upper, rest;
    for (auto& row : ineqs) {
      if (row[v].is_zero())
        rest.push_back(std::move(row));
      else if (row[v].num > 0)
        upper.push_back(std::move(row));  // z[v] < ...
      else
        lower.push_back(std::move(row));  // ... < z[v]
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo: a z_v + L < c_lo with a < 0; up: b z_v + U < c_up with b > 0.
        std::vector<Rat> row(k + 1, Rat(0));
        Rat a = lo[v], b = up[v];
        for (int j = 0; j <= k; ++j)
          if (j != v) row[j] = lo[j] * b - up[j] * a;
        rest.push_back(std::move(row));
        if (rest.size() > 100000)
          throw std::runtime_error("strictly_feasible: blow-up");
      }
    ineqs = std::move(rest);
  }
  for (const auto& row : ineqs) {
    // 0 < c must hold strictly.
    if (row[k].num <= 0) return false;
  }
  return true;
}

// Exact Gauss-Jordan elimination.  rows[i] holds n coefficients followed by
// the right-hand side.
inline AffineSolution affine_solve(std::vector<std::vector<Rat>> rows, int n) {
  AffineSolution sol;
  int m = int(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = Rat(1) / rows[r][c];
    for (int j = c; j <= n; ++j) rows[r][j] = rows[r][j] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (int j = c; j <= n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!rows[i][n].is_zero()) return sol;  // 0 = nonzero
  sol.consistent = true;
  sol.rank = r;
  sol.particular.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r; ++i) {
    is_pivot[pivot_col[i]] = true;
    sol.particular[pivot_col[i]] = rows[i][n];
  }
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> w(n, Rat(0));
    w[c] = Rat(1);
    for (int i = 0; i < r; ++i) w[pivot_col[i]] = Rat(0) - rows[i][c];
    sol.nullbasis.push_back(std::move(w));
  }
  return sol;
}

}  // namespace pentile
