#pragma once

// Spherical trigonometry kernel: isosceles and quadrilateral diagonal
// formulas, the diagonal quadratic in cos a, pentagon realization on the
// unit sphere, and the simplicity / adjacency predicates used to filter
// candidate pentagons.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentile/vec3.hpp"

namespace pentile {

inline constexpr double kPi = 3.14159265358979323846;

// Base arc x of an isosceles spherical triangle with equal sides a and
// apex angle `apex`:  cos x = cos^2 a + sin^2 a cos(apex).
inline double isosceles_base(double a, double apex) {
  double ca = std::cos(a), sa = std::sin(a);
  double cx = ca * ca + sa * sa * std::cos(apex);
  if (cx > 1.0 + 1e-12 || cx < -1.0 - 1e-12)
    throw std::domain_error("isosceles_base: cos x out of range");
  if (cx > 1.0) cx = 1.0;
  if (cx < -1.0) cx = -1.0;
  return std::acos(cx);
}

// Base angle of the same isosceles triangle: tan phi = sec a cot(apex/2),
// with phi in (0, pi).  Singular at a = pi/2.
inline double isosceles_base_angle(double a, double apex) {
  if (std::fabs(a - kPi / 2) < 1e-12)
    throw std::domain_error("isosceles_base_angle: a = pi/2 is singular");
  double t = (1.0 / std::cos(a)) * (std::cos(apex / 2) / std::sin(apex / 2));
  double phi = std::atan(t);
  if (phi <= 0) phi += kPi;
  return phi;
}

// Diagonal of the quadrilateral spanned by three arcs of length a with
// interior angles g and d at the two inner vertices:
//   cos x = (1-cos g)(1-cos d)cos^3 a - sin g sin d cos^2 a
//           + (cos g + cos d - cos g cos d)cos a + sin g sin d.
inline double quad_diagonal_cos(double a, double g, double d) {
  double t = std::cos(a);
  double cg = std::cos(g), sg = std::sin(g);
  double cd = std::cos(d), sd = std::sin(d);
  return (1 - cg) * (1 - cd) * t * t * t - sg * sd * t * t +
         (cg + cd - cg * cd) * t + sg * sd;
}

struct QuadraticCoeffs {
  double L = 0, M = 0, N = 0;

  double eval(double t) const { return (L * t + M) * t + N; }
};

// Quadratic L cos^2 a + M cos a + N = 0 obtained by equating the isosceles
// and quadrilateral expressions for the diagonal opposite `alpha` and
// dividing out the trivial root cos a = 1:
//   iso(t) - quad(t) = (1 - t) (L t^2 + M t + N).
inline QuadraticCoeffs diagonal_quadratic(double alpha, double g, double d) {
  QuadraticCoeffs q;
  double cg = std::cos(g), cd = std::cos(d);
  q.L = (1 - cg) * (1 - cd);
  q.M = std::cos(alpha) + std::cos(g + d) - cg - cd;
  q.N = std::cos(alpha) - std::sin(g) * std::sin(d);
  return q;
}

// ---------------------------------------------------------------------------
// Pentagon realization by boundary walk.

struct SpherePolygon {
  std::vector<Vec3> vertices;  // unit vectors, in traversal order
};

struct WalkState {
  Vec3 p;  // current position (unit)
  Vec3 d;  // current travel direction (unit tangent)
};

// Advance along the great circle through p in direction d by arc s.
inline WalkState advance(const WalkState& w, double s) {
  double c = std::cos(s), sn = std::sin(s);
  return {w.p * c + w.d * sn, w.d * c - w.p * sn};
}

// Turn at the current vertex by the exterior angle pi - theta, with the
// polygon interior on the left of the travel direction.  Reflex interior
// angles give a negative exterior turn; no special case is needed.
inline WalkState turn_interior(const WalkState& w, double theta) {
  double tau = kPi - theta;
  Vec3 left = cross(w.p, w.d);
  return {w.p, w.d * std::cos(tau) + left * std::sin(tau)};
}

struct Realization {
  SpherePolygon poly;
  double closure_residual = 0;
};

// Walk an equilateral polygon with the given interior angles (in traversal
// order, interior kept on the left) and edge arc length a.  The residual
// measures how far the walk ends from its starting position and heading.
inline Realization realize_polygon(const std::vector<double>& angles, double a,
                                   const WalkState& start = {{1, 0, 0},
                                                             {0, 1, 0}}) {
  Realization r;
  WalkState w = start;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    r.poly.vertices.push_back(w.p);
    w = advance(w, a);
    w = turn_interior(w, angles[(i + 1) % angles.size()]);
  }
  r.closure_residual = norm(w.p - start.p) + norm(w.d - start.d);
  return r;
}

inline Realization realize_pentagon(const std::array<double, 5>& angles,
                                    double a) {
  return realize_polygon({angles.begin(), angles.end()}, a);
}

// Interior angles of a realized polygon, measured from the geometry with
// the interior on the left; reflex angles land in (pi, 2pi).
inline std::vector<double> measured_angles(const SpherePolygon& poly) {
  std::size_t n = poly.vertices.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& prev = poly.vertices[(i + n - 1) % n];
    const Vec3& v = poly.vertices[i];
    const Vec3& next = poly.vertices[(i + 1) % n];
    // Tangents at v toward the adjacent vertices.
    Vec3 tin = normalized(cross(cross(v, prev), v));   // toward prev
    Vec3 tout = normalized(cross(cross(v, next), v));  // toward next
    // Signed angle from -tin (incoming heading) to tout around v.
    Vec3 din = -tin;
    double s = std::atan2(dot(v, cross(din, tout)), dot(din, tout));
    double theta = kPi - s;
    if (theta < 0) theta += 2 * kPi;
    if (theta >= 2 * kPi) theta -= 2 * kPi;
    out[i] = theta;
  }
  return out;
}

// Spherical excess: area = sum of interior angles - (n-2) pi.
inline double spherical_area(const SpherePolygon& poly) {
  double s = 0;
  for (double t : measured_angles(poly)) s += t;
  return s - (double(poly.vertices.size()) - 2) * kPi;
}

// ---------------------------------------------------------------------------
// Simplicity predicate.

enum class Simplicity { kSimple, kNotSimple, kIndeterminate };

namespace detail {

// Sign of q relative to the arc side test, with a tolerance band.
inline int band_sign(double v, double tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

// Whether unit point q lies on the closed arc from u to v (arc < pi),
// assuming q lies on the arc's great circle.  0 = within tolerance band.
inline int on_arc(const Vec3& q, const Vec3& u, const Vec3& v, const Vec3& n,
                  double tol) {
  double s1 = dot(cross(u, q), n);
  double s2 = dot(cross(q, v), n);
  int a = band_sign(s1, tol), b = band_sign(s2, tol);
  if (a > 0 && b > 0) return 1;
  if (a < 0 || b < 0) return -1;
  return 0;
}

}  // namespace detail

// Classify whether the polygon boundary is a simple closed curve: no two
// non-adjacent edges intersect, and adjacent edges meet only at the shared
// vertex.  Contacts inside the 1e-12 tolerance band are reported as
// indeterminate rather than silently resolved.
inline Simplicity classify_simplicity(const SpherePolygon& poly,
                                      double tol = 1e-12) {
  std::size_t n = poly.vertices.size();
  bool fuzzy = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Vec3& a0 = poly.vertices[i];
      const Vec3& a1 = poly.vertices[(i + 1) % n];
      const Vec3& b0 = poly.vertices[j];
      const Vec3& b1 = poly.vertices[(j + 1) % n];
      Vec3 n1 = normalized(cross(a0, a1));
      Vec3 n2 = normalized(cross(b0, b1));
      Vec3 line = cross(n1, n2);
      double ln = norm(line);
      if (ln < 1e-9) {
        // Same great circle: overlap iff some endpoint of one closed arc
        // lies strictly inside the other.
        const Vec3* pts[4] = {&a0, &a1, &b0, &b1};
        const Vec3* ends[4][2] = {{&b0, &b1}, {&b0, &b1}, {&a0, &a1}, {&a0, &a1}};
        for (int k = 0; k < 4; ++k) {
          const Vec3& q = *pts[k];
          if (adjacent && (norm(q - a0) < 1e-9 || norm(q - a1) < 1e-9 ||
                           norm(q - b0) < 1e-9 || norm(q - b1) < 1e-9))
            continue;
          int r = detail::on_arc(q, *ends[k][0], *ends[k][1], n1, tol);
          if (r > 0) return Simplicity::kNotSimple;
          if (r == 0) fuzzy = true;
        }
        continue;
      }
      Vec3 c = line * (1.0 / ln);
      for (Vec3 q : {c, -c}) {
        int r1 = detail::on_arc(q, a0, a1, n1, tol);
        int r2 = detail::on_arc(q, b0, b1, n2, tol);
        if (r1 < 0 || r2 < 0) continue;
        if (adjacent) {
          // Shared vertex contact is expected; anything else is a crossing.
          const Vec3& shared = (j == i + 1) ? a1 : a0;
          if (norm(q - shared) < 1e-9) continue;
          if (r1 > 0 && r2 > 0) return Simplicity::kNotSimple;
          fuzzy = true;
        } else {
          if (r1 > 0 && r2 > 0) return Simplicity::kNotSimple;
          fuzzy = true;
        }
      }
    }
  }
  return fuzzy ? Simplicity::kIndeterminate : Simplicity::kSimple;
}

inline bool is_simple(const SpherePolygon& poly) {
  return classify_simplicity(poly) == Simplicity::kSimple;
}

// ---------------------------------------------------------------------------
// Adjacency criterion (reformulated geometric constraint).

// Five-way form: for every cyclic position i, sign(t[i+1] - t[i-1]) must
// equal sign(t[i-2] - t[i+2]).  Ties within tol must pair with ties.
inline std::optional<bool> geometry1_all(const std::array<double, 5>& t,
                                         double tol = 1e-7) {
  auto cmp = [tol](double u, double v) {
    if (u > v + tol) return 1;
    if (u < v - tol) return -1;
    return 0;
  };
  for (int i = 0; i < 5; ++i) {
    int s1 = cmp(t[(i + 1) % 5], t[(i + 4) % 5]);
    int s2 = cmp(t[(i + 3) % 5], t[(i + 2) % 5]);
    if (s1 != s2) return false;
  }
  return true;
}

// Reformulation for five distinct angles: the maximum and minimum must be
// cyclically adjacent, and after swapping them the cyclic sequence is
// monotone (up to rotation and reflection).  Returns nullopt when two
// angles coincide within tol.
inline std::optional<bool> lemma7_filter(const std::array<double, 5>& t,
                                         double tol = 1e-7) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (std::fabs(t[i] - t[j]) < tol) return std::nullopt;
  int imax = 0, imin = 0;
  for (int i = 1; i < 5; ++i) {
    if (t[i] > t[imax]) imax = i;
    if (t[i] < t[imin]) imin = i;
  }
  int diff = (imax - imin + 5) % 5;
  if (diff != 1 && diff != 4) return false;
  std::array<double, 5> s = t;
  std::swap(s[imax], s[imin]);
  int descents = 0;
  for (int i = 0; i < 5; ++i)
    if (s[i] > s[(i + 1) % 5]) ++descents;
  return descents == 1 || descents == 4;
}

}  // namespace pentile
