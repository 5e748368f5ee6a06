#pragma once

// Dense univariate polynomials with real coefficients: evaluation,
// arithmetic, and complex root finding (Durand-Kerner), used to certify
// closed-form values against solver output.

#include <complex>
#include <stdexcept>
#include <vector>

namespace pentile {

struct RealPoly {
  std::vector<double> c;  // ascending: c[0] + c[1] t + ...

  int degree() const {
    int d = int(c.size()) - 1;
    while (d > 0 && c[d] == 0.0) --d;
    return d;
  }
  double eval(double t) const {
    double r = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) r = r * t + c[i];
    return r;
  }
  std::complex<double> eval(std::complex<double> t) const {
    std::complex<double> r = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) r = r * t + c[i];
    return r;
  }
  RealPoly derivative() const {
    RealPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * double(i));
    if (d.c.empty()) d.c.push_back(0);
    return d;
  }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    RealPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    RealPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) {
    RealPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
};

// All complex roots by Durand-Kerner iteration.
inline std::vector<std::complex<double>> poly_roots(const RealPoly& p) {
  int deg = p.degree();
  if (deg <= 0) return {};
  std::vector<std::complex<double>> a(deg + 1);
  for (int i = 0; i <= deg; ++i) a[i] = p.c[i] / p.c[deg];
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w(1, 0);
  for (int i = 0; i < deg; ++i) {
    w *= seed;
    z[i] = w;
  }
  auto eval = [&](std::complex<double> t) {
    std::complex<double> r = 0;
    for (int i = deg; i >= 0; --i) r = r * t + a[i];
    return r;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> num = eval(z[i]);
      std::complex<double> den(1, 0);
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> d = num / den;
      z[i] -= d;
      shift = std::max(shift, std::abs(d));
    }
    if (shift < 1e-14) break;
  }
  return z;
}

// Real roots (imaginary part below tol), refined by Newton steps.
inline std::vector<double> real_roots(const RealPoly& p, double tol = 1e-8) {
  std::vector<double> out;
  RealPoly dp = p.derivative();
  for (const auto& z : poly_roots(p)) {
    if (std::fabs(z.imag()) > tol) continue;
    double x = z.real();
    for (int i = 0; i < 50; ++i) {
      double f = p.eval(x), d = dp.eval(x);
      if (d == 0) break;
      double step = f / d;
      x -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    bool dup = false;
    for (double r : out) dup = dup || std::fabs(r - x) < 1e-9;
    if (!dup) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pentile
