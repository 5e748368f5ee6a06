#pragma once

// Enumeration of anglewise vertex combinations at degree 3 vertices for up
// to five distinct angles.  A collection pairs a necessary part (a minimal
// set of combinations covering all angles) with the optional combinations
// that can appear alongside it without forcing distinct angles to coincide.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pentile/rational.hpp"

namespace pentile {

// Multiset of angles at a vertex, stored as per-angle multiplicities.
struct VertexCombo {
  std::array<int, 5> m{0, 0, 0, 0, 0};

  int degree() const { return m[0] + m[1] + m[2] + m[3] + m[4]; }
  bool contains(const VertexCombo& sub) const {
    for (int i = 0; i < 5; ++i)
      if (sub.m[i] > m[i]) return false;
    return true;
  }
  VertexCombo permuted(const std::array<int, 5>& perm) const {
    VertexCombo out;
    for (int i = 0; i < 5; ++i) out.m[perm[i]] = m[i];
    return out;
  }
  auto operator<=>(const VertexCombo& o) const = default;

  // Compact display such as "abg" for alpha beta gamma, "dee" for
  // delta epsilon^2 (a..e stand for alpha..epsilon).
  std::string str() const {
    static const char* names = "abcde";
    std::string s;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < m[i]; ++k) s += names[i];
    return s;
  }
};

inline VertexCombo make_combo(std::initializer_list<int> angles) {
  VertexCombo c;
  for (int a : angles) ++c.m[a];
  return c;
}

// Parse "abc", "dee", "ddddde" style strings (a..e = the five angles).
inline VertexCombo parse_combo(const std::string& s) {
  VertexCombo c;
  for (char ch : s) {
    int i = ch - 'a';
    if (i < 0 || i > 4) throw std::invalid_argument("parse_combo: bad angle");
    ++c.m[i];
  }
  return c;
}

struct Avc3Collection {
  std::vector<VertexCombo> necessary;
  std::vector<VertexCombo> optional_part;

  std::vector<VertexCombo> full() const {
    std::vector<VertexCombo> all = necessary;
    all.insert(all.end(), optional_part.begin(), optional_part.end());
    std::sort(all.begin(), all.end());
    return all;
  }
  auto operator<=>(const Avc3Collection& o) const = default;
};

// True iff every solution of the angle-sum system {sum_i m_v(i) theta_i =
// 2pi} has two of the n angles equal.  Exact rational test: the system is
// always consistent for degree-3 combos, and theta_i - theta_j vanishes on
// the whole affine solution set iff it vanishes at one solution and on the
// null space.
inline bool forces_equal(const std::vector<VertexCombo>& combos, int n) {
  std::vector<std::vector<Rat>> rows;
  for (const VertexCombo& v : combos) {
    std::vector<Rat> row(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = Rat(v.m[i]);
    row[n] = Rat(2);  // angle sums in units of pi
    rows.push_back(std::move(row));
  }
  AffineSolution sol = affine_solve(rows, n);
  if (!sol.consistent) return true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (sol.particular[i] != sol.particular[j]) continue;
      bool same = true;
      for (const auto& w : sol.nullbasis)
        if (w[i] != w[j]) {
          same = false;
          break;
        }
      if (same) return true;
    }
  return false;
}

// Refinement of forces_equal used for enumeration: the angle-sum system
// must admit a solution with all angles pairwise distinct and inside the
// open interval (0, 2pi).  Pure equality testing is not enough: some
// extensions are only blocked because they would need a non-positive angle.
inline bool admits_valid_distinct(const std::vector<VertexCombo>& combos,
                                  int n) {
  std::vector<std::vector<Rat>> rows;
  for (const VertexCombo& v : combos) {
    std::vector<Rat> row(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = Rat(v.m[i]);
    row[n] = Rat(2);
    rows.push_back(std::move(row));
  }
  AffineSolution sol = affine_solve(rows, n);
  if (!sol.consistent) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (sol.particular[i] != sol.particular[j]) continue;
      bool same = true;
      for (const auto& w : sol.nullbasis)
        if (w[i] != w[j]) {
          same = false;
          break;
        }
      if (same) return false;
    }
  // Strict range feasibility 0 < theta_i < 2 (units of pi) over the null
  // space coordinates; distinctness then holds at a generic feasible point.
  int k = int(sol.nullbasis.size());
  std::vector<std::vector<Rat>> ineqs;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> up(k + 1, Rat(0)), lo(k + 1, Rat(0));
    for (int j = 0; j < k; ++j) {
      up[j] = sol.nullbasis[j][i];
      lo[j] = Rat(0) - sol.nullbasis[j][i];
    }
    up[k] = Rat(2) - sol.particular[i];  // p + Nz < 2
    lo[k] = sol.particular[i];           // -Nz < p
    ineqs.push_back(std::move(up));
    ineqs.push_back(std::move(lo));
  }
  return strictly_feasible(std::move(ineqs), k);
}

namespace detail {

inline void permutations(int n, std::vector<std::array<int, 5>>& out) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  std::sort(p.begin(), p.begin() + n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
}

}  // namespace detail

// Lexicographically least collection in the orbit under relabeling the n
// angles.  Idempotent.
inline Avc3Collection canonicalize(const Avc3Collection& c, int n) {
  std::vector<std::array<int, 5>> perms;
  detail::permutations(n, perms);
  Avc3Collection best;
  bool first = true;
  for (const auto& p : perms) {
    Avc3Collection cand;
    for (const auto& v : c.necessary) cand.necessary.push_back(v.permuted(p));
    for (const auto& v : c.optional_part)
      cand.optional_part.push_back(v.permuted(p));
    std::sort(cand.necessary.begin(), cand.necessary.end());
    std::sort(cand.optional_part.begin(), cand.optional_part.end());
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  return best;
}

// All degree-d multisets over n angles.
inline std::vector<VertexCombo> all_combos(int n, int d) {
  std::vector<VertexCombo> out;
  VertexCombo c;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      c.m[i] = left;
      out.push_back(c);
      c.m[i] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      c.m[i] = k;
      self(self, i + 1, left - k);
    }
    c.m[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

namespace detail {

// Necessary-part skeletons by number of distinct angles, one per subcase
// of the derivation: the vertex types witnessing the first appearance of
// each angle, listed up to relabeling.  Each carries the assumptions under
// which its optional vertices are collected.
struct NecessarySpec {
  std::vector<const char*> combos;
  bool allow_more_abc = false;  // further 3-distinct-angle vertices allowed?
  int option_angle_mask = -1;   // bitmask of angles options may involve
};

inline std::vector<NecessarySpec> necessary_specs(int n) {
  switch (n) {
    case 1:
      return {{{"aaa"}}};
    case 2:
      return {{{"abb"}}};
    case 3:
      return {{{"abc"}, true}, {{"abb", "aac"}}, {{"abb", "ccc"}}};
    case 4:
      // One abc-type vertex plus the witness for the fourth angle, or no
      // abc-type vertex at all.
      return {{{"abc", "add"}},
              {{"abc", "aad"}},
              {{"abc", "ddd"}},
              {{"abb", "cdd"}},
              {{"abb", "aac", "ddd"}}};
    case 5:
      return {
          // Two abc-type vertices.
          {{"abc", "ade"}},
          // One abc-type vertex; delta and epsilon witnessed separately.
          {{"abc", "add", "aae"}},
          {{"abc", "add", "bee"}},
          {{"abc", "add", "bbe"}},
          {{"abc", "add", "dee"}},
          {{"abc", "add", "eee"}},
          {{"abc", "aad", "bbe"}},
          {{"abc", "aad", "dde"}},
          {{"abc", "aad", "eee"}},
          // delta/epsilon never combined with alpha, beta, gamma: options
          // may only involve the first three angles.
          {{"abc", "dee"}, false, 0b00111},
          // No abc-type vertices.
          {{"abb", "cdd", "aae"}},
          {{"abb", "cdd", "eee"}},
      };
    default:
      return {};
  }
}

}  // namespace detail

// Enumerate the canonical AVC3 collections for n distinct angles,
// reproducing the degree-3 table: each collection pairs a necessary part
// (subcase skeleton) with a maximal set of optional vertices that can all
// appear without forcing two of the distinct angles to coincide.
inline std::vector<Avc3Collection> enumerate_avc3(int n) {
  const std::vector<VertexCombo> combos = all_combos(n, 3);
  std::set<Avc3Collection> result;

  for (const auto& spec : detail::necessary_specs(n)) {
    std::vector<VertexCombo> nec;
    for (const char* s : spec.combos) nec.push_back(parse_combo(s));
    int abc_budget = 0;
    for (const auto& v : nec) {
      int distinct = 0;
      for (int i = 0; i < n; ++i) distinct += v.m[i] > 0;
      abc_budget += distinct == 3;
    }

    // Angles appearing in abc-type members of the necessary part.  Options
    // supported entirely outside them belong to the subcase where such a
    // vertex is itself the witness, so they are not re-listed here.
    int abc_mask = 0;
    for (const auto& v : nec) {
      int distinct = 0, mask = 0;
      for (int i = 0; i < n; ++i)
        if (v.m[i]) {
          ++distinct;
          mask |= 1 << i;
        }
      if (distinct == 3) abc_mask |= mask;
    }

    // Individually addable optional vertices under the subcase assumptions.
    std::vector<VertexCombo> cand;
    for (const auto& c : combos) {
      if (std::find(nec.begin(), nec.end(), c) != nec.end()) continue;
      int distinct = 0, mask = 0;
      for (int i = 0; i < n; ++i)
        if (c.m[i]) {
          ++distinct;
          mask |= 1 << i;
        }
      if (distinct == 3 && !spec.allow_more_abc) continue;
      if (distinct == 3 && spec.allow_more_abc && abc_budget >= 2) continue;
      if ((mask & ~spec.option_angle_mask) != 0) continue;
      if (abc_mask != 0 && (mask & abc_mask) == 0) continue;
      std::vector<VertexCombo> probe = nec;
      probe.push_back(c);
      if (admits_valid_distinct(probe, n)) cand.push_back(c);
    }

    // Maximal option subsets (joint consistency is monotone).
    std::vector<std::vector<VertexCombo>> maximal;
    std::vector<int> chosen;
    auto grow = [&](auto&& self, int from) -> void {
      bool extended = false;
      for (int i = from; i < int(cand.size()); ++i) {
        std::vector<VertexCombo> probe = nec;
        for (int j : chosen) probe.push_back(cand[j]);
        probe.push_back(cand[i]);
        if (!admits_valid_distinct(probe, n)) continue;
        extended = true;
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
      if (!extended) {
        // Verify maximality against candidates skipped before `from`.
        std::vector<VertexCombo> base = nec;
        for (int j : chosen) base.push_back(cand[j]);
        for (int i = 0; i < int(cand.size()); ++i) {
          if (std::find(chosen.begin(), chosen.end(), i) != chosen.end())
            continue;
          std::vector<VertexCombo> probe = base;
          probe.push_back(cand[i]);
          if (admits_valid_distinct(probe, n)) return;  // not maximal
        }
        std::vector<VertexCombo> opts;
        for (int j : chosen) opts.push_back(cand[j]);
        maximal.push_back(std::move(opts));
      }
    };
    if (cand.empty())
      maximal.push_back({});
    else
      grow(grow, 0);

    for (auto& opts : maximal) {
      Avc3Collection col;
      col.necessary = nec;
      col.optional_part = opts;
      std::sort(col.necessary.begin(), col.necessary.end());
      std::sort(col.optional_part.begin(), col.optional_part.end());
      result.insert(canonicalize(col, n));
    }
  }
  return {result.begin(), result.end()};
}

}  // namespace pentile
