#pragma once

// Multi-start damped Gauss-Newton solving of the case systems, the
// candidate filter chain (angle sums, tiling number, adjacency criterion,
// realization/simplicity), and the sweep over every case-arrangement.

#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pentile/polysys.hpp"
#include "pentile/sphertrig.hpp"

namespace pentile {

struct SolveConfig {
  int starts = 5000;
  std::uint64_t seed = 42;
  double newton_tol = 1e-12;
  double dedup_tol = 1e-8;
  int max_iters = 200;
  int threads = 0;  // 0 = hardware concurrency
};

struct SolveOutput {
  std::vector<Eigen::VectorXd> admissible;  // filtered, deduplicated, sorted
  int distinct_found = 0;                   // before admissibility filters
};

namespace detail {

inline double u01(std::uint64_t& state) {
  // splitmix64 step; top 53 bits as uniform double
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z = z ^ (z >> 31);
  return double(z >> 11) * 0x1.0p-53;
}

inline bool gauss_newton(const PolySystem& sys, Eigen::VectorXd& v,
                         const SolveConfig& cfg) {
  const int rows = system_rows(sys);
  Eigen::VectorXd F(rows), F2(rows);
  Eigen::MatrixXd J(rows, sys.num_vars);
  evaluate_system(sys, v, F, &J);
  double cost = F.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (F.lpNorm<Eigen::Infinity>() < cfg.newton_tol) return true;
    Eigen::MatrixXd JtJ = J.transpose() * J;
    Eigen::VectorXd g = J.transpose() * F;
    bool stepped = false;
    for (int tries = 0; tries < 25; ++tries) {
      Eigen::MatrixXd A = JtJ;
      for (int i = 0; i < sys.num_vars; ++i) A(i, i) += lambda;
      Eigen::VectorXd d = A.ldlt().solve(-g);
      Eigen::VectorXd v2 = v + d;
      evaluate_system(sys, v2, F2, nullptr);
      double cost2 = F2.squaredNorm();
      if (cost2 < cost) {
        v = v2;
        cost = cost2;
        lambda = std::max(lambda / 3.0, 1e-14);
        stepped = true;
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e12) return F.lpNorm<Eigen::Infinity>() < cfg.newton_tol;
    }
    if (!stepped) break;
    evaluate_system(sys, v, F, &J);
  }
  return F.lpNorm<Eigen::Infinity>() < cfg.newton_tol;
}

}  // namespace detail

// All real solutions found by cfg.starts random initializations.  Returned
// points satisfy the saturation conditions: t strictly inside (-1, 1), no
// zero angle (x_i = 1), and pairwise distinct angle values.
inline SolveOutput solve_all(const PolySystem& sys, const SolveConfig& cfg) {
  std::vector<Eigen::VectorXd> found;
  const int nfree = int(sys.free_angles.size());
  for (int start = 0; start < cfg.starts; ++start) {
    std::uint64_t state =
        cfg.seed * 0x51D1C123A5A5A5A5ull +
        std::uint64_t(start) * 0x9E3779B97F4A7C15ull;
    Eigen::VectorXd v(sys.num_vars);
    v[0] = std::cos(detail::u01(state) * kPi);
    for (int k = 0; k < nfree; ++k) {
      double theta = detail::u01(state) * 2 * kPi;
      v[1 + 2 * k] = std::cos(theta);
      v[2 + 2 * k] = std::sin(theta);
    }
    if (!detail::gauss_newton(sys, v, cfg)) continue;
    bool dup = false;
    for (const auto& p : found)
      if ((p - v).lpNorm<Eigen::Infinity>() < cfg.dedup_tol) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(v);
  }

  SolveOutput out;
  out.distinct_found = int(found.size());
  for (const auto& v : found) {
    if (!(v[0] > -1 + 1e-9 && v[0] < 1 - 1e-9)) continue;
    bool ok = true;
    std::vector<double> theta(5, -1);
    for (int i = 0; i < 5 && ok; ++i) {
      if (sys.fixed[i]) {
        theta[i] = sys.fixed[i]->to_double() * kPi;
        continue;
      }
      int ix = sys.var_x(i);
      if (ix < 0) continue;
      double x = v[ix], y = v[ix + 1];
      if (std::fabs(x - 1) < 1e-9 && std::fabs(y) < 1e-4) ok = false;
      double t = std::atan2(y, x);
      if (t < 0) t += 2 * kPi;
      theta[i] = t;
    }
    if (!ok) continue;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5 && ok; ++j) {
        if (theta[i] < 0 || theta[j] < 0) continue;
        double d = std::fabs(theta[i] - theta[j]);
        d = std::min(d, 2 * kPi - d);
        if (d < 1e-7) ok = false;
      }
    if (ok) out.admissible.push_back(v);
  }
  std::sort(out.admissible.begin(), out.admissible.end(),
            [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
              for (int i = 0; i < a.size(); ++i)
                if (std::fabs(a[i] - b[i]) > 1e-10) return a[i] < b[i];
              return false;
            });
  return out;
}

struct CandidateSolution {
  std::string case_label;
  std::string arrangement;
  std::array<double, 5> angles{};         // by angle id, radians
  std::array<bool, 5> exact{};            // angle carried an exact value
  std::array<double, 5> corner_angles{};  // in cyclic boundary order
  std::array<int, 5> pentagon{};
  double cos_a = 0;
  double residual = 0;
  bool angle_sum_ok = false;
  bool tiling_ok = false;
  bool criterion_ok = false;
  bool simple_ok = false;
  double closure_residual = 0;
  double f_raw = 0;
  int f = 0;

  std::vector<double> merged_key() const {
    // Cyclic corner values, minimized over rotation and reflection; two
    // candidates with the same key describe the same pentagon.
    std::vector<double> best;
    for (int refl = 0; refl < 2; ++refl)
      for (int r = 0; r < 5; ++r) {
        std::vector<double> k(6);
        for (int i = 0; i < 5; ++i) {
          int idx = refl ? (r - i + 10) % 5 : (r + i) % 5;
          k[i] = corner_angles[idx];
        }
        k[5] = cos_a;
        if (best.empty()) best = k;
        bool less = false, decided = false;
        for (int i = 0; i < 6 && !decided; ++i) {
          if (std::fabs(k[i] - best[i]) < 1e-7) continue;
          less = k[i] < best[i];
          decided = true;
        }
        if (decided && less) best = k;
      }
    return best;
  }
};

inline bool same_pentagon(const CandidateSolution& a,
                          const CandidateSolution& b, double tol = 1e-5) {
  auto ka = a.merged_key(), kb = b.merged_key();
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (std::fabs(ka[i] - kb[i]) > tol * kPi) return false;
  return true;
}

// Every prescribed vertex must close up to exactly 2pi (not a multiple).
inline bool angle_sum_test(const CandidateSolution& s, const CaseSpec& c,
                           double tol = 1e-7) {
  for (const auto& v : c.vertices) {
    double sum = 0;
    for (int i = 0; i < 5; ++i) sum += v.m[i] * s.angles[i];
    if (std::fabs(sum - 2 * kPi) > tol) return false;
  }
  return true;
}

// f = 4pi / (angle sum - 3pi) must be an even integer >= 16.
inline std::optional<int> tiling_number_test(const CandidateSolution& s,
                                             double tol = 1e-3) {
  double sum = 0;
  for (int i = 0; i < 5; ++i) sum += s.pentagon[i] * s.angles[i];
  double f_raw = 4 * kPi / (sum - 3 * kPi);
  int f = int(std::lround(f_raw));
  if (std::fabs(f_raw - f) > tol) return std::nullopt;
  if (f < 16 || f % 2 != 0) return std::nullopt;
  return f;
}

// Build candidates (with verdicts) for one case-arrangement.
inline std::vector<CandidateSolution> solve_case_arrangement(
    const CaseSpec& c, const Arrangement& arr, const SolveConfig& cfg,
    SolveOutput* raw_out = nullptr) {
  PolySystem sys = build_system(c, arr);
  SolveOutput out = solve_all(sys, cfg);
  if (raw_out) *raw_out = out;
  std::vector<CandidateSolution> result;
  for (const auto& v : out.admissible) {
    CandidateSolution s;
    s.case_label = c.label;
    s.arrangement = arr.name;
    s.pentagon = c.pentagon;
    s.cos_a = v[0];
    for (int i = 0; i < 5; ++i) {
      if (sys.fixed[i]) {
        s.angles[i] = sys.fixed[i]->to_double() * kPi;
        s.exact[i] = true;
      } else if (sys.var_x(i) >= 0) {
        double t = std::atan2(v[sys.var_x(i) + 1], v[sys.var_x(i)]);
        if (t < 0) t += 2 * kPi;
        s.angles[i] = t;
      }
    }
    for (int p = 0; p < 5; ++p) s.corner_angles[p] = s.angles[arr.corner[p]];
    Eigen::VectorXd F(system_rows(sys));
    evaluate_system(sys, v, F, nullptr);
    s.residual = F.lpNorm<Eigen::Infinity>();

    s.angle_sum_ok = angle_sum_test(s, c);
    if (auto f = tiling_number_test(s)) {
      s.tiling_ok = true;
      s.f = *f;
    }
    double sum = 0;
    for (int i = 0; i < 5; ++i) sum += s.pentagon[i] * s.angles[i];
    s.f_raw = 4 * kPi / (sum - 3 * kPi);

    if (c.distinct_angles() == 5) {
      auto l7 = lemma7_filter(s.corner_angles);
      s.criterion_ok = l7.value_or(false);
    } else {
      s.criterion_ok = geometry1_all(s.corner_angles).value_or(false);
    }
    Realization real =
        realize_pentagon(s.corner_angles, std::acos(s.cos_a));
    s.closure_residual = real.closure_residual;
    s.simple_ok = real.closure_residual < 1e-6 && is_simple(real.poly);
    result.push_back(std::move(s));
  }
  return result;
}

// Sweep every case-arrangement and keep the candidates passing all tests.
inline std::vector<CandidateSolution> classify(
    const std::vector<CaseSpec>& cases, const SolveConfig& cfg) {
  struct Job {
    const CaseSpec* c;
    Arrangement arr;
  };
  std::vector<Job> jobs;
  for (const auto& c : cases)
    for (const auto& arr : c.arrangements()) jobs.push_back({&c, arr});

  std::vector<std::vector<CandidateSolution>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  int nthreads = cfg.threads > 0
                     ? cfg.threads
                     : int(std::max(1u, std::thread::hardware_concurrency()));
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      slots[k] = solve_case_arrangement(*jobs[k].c, jobs[k].arr, cfg);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::vector<CandidateSolution> survivors;
  for (auto& slot : slots)
    for (auto& s : slot)
      if (s.angle_sum_ok && s.tiling_ok && s.criterion_ok && s.simple_ok)
        survivors.push_back(std::move(s));
  return survivors;
}

}  // namespace pentile
