#pragma once

// Derivation of the full anglewise vertex combination of an accepted
// pentagon (bounded enumeration against the angle-sum inequality) and
// integer-feasibility pruning by the vertex counting equation.

#include <cmath>
#include <vector>

#include "pentile/avc3.hpp"
#include "pentile/solve.hpp"

namespace pentile {

// All multiplicity vectors m with sum(m_i theta_i) = 2pi within the error
// budget 1e-5 pi per appearance of an approximate angle.  Exact angles
// contribute no slack.
inline std::vector<VertexCombo> derive_avc(const CandidateSolution& s,
                                           double digit_tol = 1e-5) {
  std::vector<int> ids, bound;
  for (int i = 0; i < 5; ++i) {
    if (!s.pentagon[i]) continue;
    ids.push_back(i);
    bound.push_back(int(std::floor(2 * kPi / s.angles[i] + 1e-9)));
  }
  std::vector<VertexCombo> out;
  VertexCombo cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ids.size()) {
      int total = cur.degree();
      if (total < 3) return;
      double sum = 0;
      int approx = 0;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        sum += cur.m[ids[j]] * s.angles[ids[j]];
        if (!s.exact[ids[j]]) approx += cur.m[ids[j]];
      }
      double budget = (digit_tol * approx + 1e-9 * total) * kPi;
      if (std::fabs(sum - 2 * kPi) <= budget) out.push_back(cur);
      return;
    }
    for (int m = 0; m <= bound[k]; ++m) {
      cur.m[ids[k]] = m;
      self(self, k + 1);
    }
    cur.m[ids[k]] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct PruneResult {
  bool feasible = false;
  std::vector<VertexCombo> kept;             // combos used by some assignment
  std::vector<std::vector<int>> assignments;  // vertex counts per avc entry
};

// Vertex-count assignments n_v >= 0 with every angle appearing exactly
// f * (pentagon multiplicity) times and the counting equation
// f/2 - 6 = sum (deg - 3) n_v.  Combos with n_v = 0 in every feasible
// assignment are dropped.
inline PruneResult avc_prune(const std::vector<VertexCombo>& avc, int f,
                             const std::array<int, 5>& pentagon = {1, 1, 1, 1,
                                                                   1}) {
  PruneResult res;
  const int n = int(avc.size());
  std::array<int, 5> target{};
  for (int i = 0; i < 5; ++i) target[i] = f * pentagon[i];
  const int excess_target = f / 2 - 6;

  std::vector<int> counts(n, 0);
  std::array<int, 5> used{};
  int excess = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (excess != excess_target) return;
      for (int i = 0; i < 5; ++i)
        if (used[i] != target[i]) return;
      res.assignments.push_back(counts);
      return;
    }
    int cap = 1 << 30;
    for (int i = 0; i < 5; ++i)
      if (avc[k].m[i]) cap = std::min(cap, (target[i] - used[i]) / avc[k].m[i]);
    int dk = avc[k].degree() - 3;
    if (dk > 0) cap = std::min(cap, (excess_target - excess) / dk);
    for (int c = 0; c <= cap; ++c) {
      if (c > 0) {
        for (int i = 0; i < 5; ++i) used[i] += avc[k].m[i];
        excess += dk;
      }
      counts[k] = c;
      self(self, k + 1);
    }
    for (int i = 0; i < 5; ++i) used[i] -= cap * avc[k].m[i];
    excess -= cap * dk;
    counts[k] = 0;
  };
  rec(rec, 0);

  res.feasible = !res.assignments.empty();
  std::vector<bool> keep(n, false);
  for (const auto& a : res.assignments)
    for (int k = 0; k < n; ++k)
      if (a[k] > 0) keep[k] = true;
  for (int k = 0; k < n; ++k)
    if (keep[k]) res.kept.push_back(avc[k]);
  return res;
}

}  // namespace pentile
