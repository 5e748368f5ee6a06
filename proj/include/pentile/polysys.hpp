#pragma once

// Polynomial system for one case-arrangement: variables t = cos a and
// (x_i, y_i) = (cos theta_i, sin theta_i) for the free angles; equations
// are the five diagonal quadratics, the unit-circle relations, and the
// cosine/sine angle-sum equations of the prescribed vertices.  Angles whose
// values are forced by the vertex sums over the rationals are substituted
// as exact constants.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pentile/cases.hpp"

namespace pentile {

struct PolySystem {
  const CaseSpec* spec = nullptr;
  Arrangement arrangement;
  std::array<std::optional<Rat>, 5> fixed;  // angle value in units of pi
  std::vector<int> free_angles;             // angle ids carrying variables
  int num_vars = 0;                         // 1 + 2 * free_angles.size()
  std::vector<VertexCombo> active_vertices;  // combos with a free angle

  int var_x(int angle) const {
    for (int k = 0; k < int(free_angles.size()); ++k)
      if (free_angles[k] == angle) return 1 + 2 * k;
    return -1;
  }
  int var_y(int angle) const { return var_x(angle) + 1; }
  bool is_free(int angle) const { return var_x(angle) >= 1; }
};

inline PolySystem build_system(const CaseSpec& c, const Arrangement& arr) {
  PolySystem s;
  s.spec = &c;
  s.arrangement = arr;

  // Exact values forced by the vertex angle sums.
  std::vector<std::vector<Rat>> rows;
  for (const auto& v : c.vertices) {
    std::vector<Rat> row(6, Rat(0));
    for (int i = 0; i < 5; ++i) row[i] = Rat(v.m[i]);
    row[5] = Rat(2);
    rows.push_back(std::move(row));
  }
  AffineSolution sol = affine_solve(rows, 5);
  if (!sol.consistent)
    throw std::runtime_error("build_system: inconsistent vertex sums");
  for (int i = 0; i < 5; ++i) {
    if (!c.pentagon[i]) continue;
    bool determined = true;
    for (const auto& w : sol.nullbasis)
      if (!w[i].is_zero()) {
        determined = false;
        break;
      }
    if (determined)
      s.fixed[i] = sol.particular[i];
    else
      s.free_angles.push_back(i);
  }
  s.num_vars = 1 + 2 * int(s.free_angles.size());
  for (const auto& v : c.vertices) {
    bool active = false;
    for (int i : s.free_angles) active = active || v.m[i] > 0;
    if (active) s.active_vertices.push_back(v);
  }
  return s;
}

namespace detail {

struct AngleTerm {
  bool fixed;
  double cx, cy;  // constants when fixed
  int ix, iy;     // variable indices when free
};

inline AngleTerm angle_term(const PolySystem& s, int angle) {
  AngleTerm t{};
  if (s.fixed[angle]) {
    t.fixed = true;
    double v = s.fixed[angle]->to_double() * kPi;
    t.cx = std::cos(v);
    t.cy = std::sin(v);
  } else {
    t.fixed = false;
    t.ix = s.var_x(angle);
    t.iy = s.var_y(angle);
  }
  return t;
}

}  // namespace detail

// Number of residual equations.
inline int system_rows(const PolySystem& s) {
  return 5 + int(s.free_angles.size()) + 2 * int(s.active_vertices.size());
}

// Residual vector and (optionally) Jacobian at v = (t, x.., y..).
inline void evaluate_system(const PolySystem& s, const Eigen::VectorXd& v,
                            Eigen::VectorXd& F, Eigen::MatrixXd* J) {
  const int rows = system_rows(s);
  F.setZero(rows);
  if (J) J->setZero(rows, s.num_vars);
  const double t = v[0];
  auto X = [&](const detail::AngleTerm& a) { return a.fixed ? a.cx : v[a.ix]; };
  auto Y = [&](const detail::AngleTerm& a) { return a.fixed ? a.cy : v[a.iy]; };

  int r = 0;
  // Five diagonal quadratics: apex at position p, far angles at p+2, p+3.
  for (int p = 0; p < 5; ++p, ++r) {
    auto A = detail::angle_term(s, s.arrangement.corner[p]);
    auto G = detail::angle_term(s, s.arrangement.corner[(p + 2) % 5]);
    auto D = detail::angle_term(s, s.arrangement.corner[(p + 3) % 5]);
    double xg = X(G), yg = Y(G), xd = X(D), yd = Y(D), xa = X(A);
    double L = (1 - xg) * (1 - xd);
    double M = xa + (xg * xd - yg * yd) - xg - xd;
    double N = xa - yg * yd;
    F[r] = (L * t + M) * t + N;
    if (!J) continue;
    (*J)(r, 0) = 2 * L * t + M;
    if (!A.fixed) (*J)(r, A.ix) += t + 1;  // d/dxa of M t + N
    if (!G.fixed) {
      (*J)(r, G.ix) += -(1 - xd) * t * t + (xd - 1) * t;
      (*J)(r, G.iy) += -yd * t - yd;
    }
    if (!D.fixed) {
      (*J)(r, D.ix) += -(1 - xg) * t * t + (xg - 1) * t;
      (*J)(r, D.iy) += -yg * t - yg;
    }
  }
  // Unit circles for the free angles.
  for (std::size_t k = 0; k < s.free_angles.size(); ++k, ++r) {
    int ix = 1 + 2 * int(k), iy = ix + 1;
    F[r] = v[ix] * v[ix] + v[iy] * v[iy] - 1;
    if (J) {
      (*J)(r, ix) = 2 * v[ix];
      (*J)(r, iy) = 2 * v[iy];
    }
  }
  // Vertex sums: product of (x + i y)^m equals 1.
  for (const auto& vert : s.active_vertices) {
    std::complex<double> P(1, 0);
    for (int i = 0; i < 5; ++i) {
      if (!vert.m[i]) continue;
      auto a = detail::angle_term(s, i);
      std::complex<double> z(X(a), Y(a));
      for (int k = 0; k < vert.m[i]; ++k) P *= z;
    }
    F[r] = P.real() - 1;
    F[r + 1] = P.imag();
    if (J) {
      for (int i = 0; i < 5; ++i) {
        if (!vert.m[i]) continue;
        auto a = detail::angle_term(s, i);
        if (a.fixed) continue;
        std::complex<double> z(v[a.ix], v[a.iy]);
        std::complex<double> w = double(vert.m[i]) * P / z;
        (*J)(r, a.ix) = w.real();
        (*J)(r, a.iy) = -w.imag();      // d/dy Re(P) = Re(i w) = -Im w
        (*J)(r + 1, a.ix) = w.imag();
        (*J)(r + 1, a.iy) = w.real();
      }
    }
    r += 2;
  }
}

}  // namespace pentile
