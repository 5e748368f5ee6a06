#pragma once

// Generation of the labeled case list: pentagon angle patterns, prescribed
// vertices and reduced angle arrangements, derived from the degree-3
// collections plus the counting lemmas (angle multiplicity in the pentagon,
// forced tile numbers, vertices of degree 4/5 for the fifth angle).

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentile/avc3.hpp"
#include "pentile/rational.hpp"
#include "pentile/sphertrig.hpp"

namespace pentile {

// Cyclic corner order of the five angles, up to rotation and reflection.
struct Arrangement {
  std::string name;
  std::array<int, 5> corner;  // corner position -> angle id
};

// The twelve possible arrangements of five distinct angles, first entry
// alpha, reflection-reduced.
inline const std::vector<Arrangement>& arrangements12() {
  static const std::vector<Arrangement> arr = {
      {"A1", {0, 1, 2, 3, 4}},  {"A2", {0, 1, 2, 4, 3}},
      {"A3", {0, 1, 3, 2, 4}},  {"A4", {0, 1, 3, 4, 2}},
      {"A5", {0, 1, 4, 2, 3}},  {"A6", {0, 1, 4, 3, 2}},
      {"A7", {0, 2, 1, 3, 4}},  {"A8", {0, 2, 1, 4, 3}},
      {"A9", {0, 2, 3, 1, 4}},  {"A10", {0, 2, 4, 1, 3}},
      {"A11", {0, 3, 1, 2, 4}}, {"A12", {0, 3, 2, 1, 4}},
  };
  return arr;
}

// Two arrangements of the three-distinct-angle pentagon a^2 b^2 c.
inline const std::vector<Arrangement>& arrangements_mirror3() {
  static const std::vector<Arrangement> arr = {
      {"B1", {0, 0, 1, 2, 1}},  // [alpha, alpha, beta, gamma, beta]
      {"B2", {0, 2, 0, 1, 1}},  // [alpha, gamma, alpha, beta, beta]
  };
  return arr;
}

struct CaseSpec {
  std::string label;
  int family = 0;  // 3, 4, 5 (degree-3 families), 1, 2 (degree 4/5), 0 = exceptional
  std::array<int, 5> pentagon{1, 1, 1, 1, 1};  // angle multiplicities
  std::vector<VertexCombo> vertices;           // prescribed equation vertices
  std::vector<int> arrangement_ids;            // indices into arrangement list
  std::optional<int> forced_f;                 // tile number forced by sums
  std::vector<std::string> merged_from;        // pre-canonical variants

  int distinct_angles() const {
    int n = 0;
    for (int m : pentagon) n += m > 0;
    return n;
  }
  const std::vector<Arrangement>& arrangement_pool() const {
    return distinct_angles() == 5 ? arrangements12() : arrangements_mirror3();
  }
  std::vector<Arrangement> arrangements() const {
    std::vector<Arrangement> out;
    for (int id : arrangement_ids) out.push_back(arrangement_pool()[id]);
    return out;
  }
};

namespace detail {

inline std::vector<std::array<int, 5>> all_perms5() {
  std::vector<std::array<int, 5>> out;
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct CaseKey {
  std::array<int, 5> pentagon;
  std::vector<VertexCombo> vertices;
  auto operator<=>(const CaseKey& o) const = default;
};

// Jointly canonical form of (pentagon multiplicities, vertex set) under
// relabeling all five angle ids.
inline CaseKey canon_case(const std::array<int, 5>& pentagon,
                          std::vector<VertexCombo> vertices) {
  static const auto perms = all_perms5();
  std::sort(vertices.begin(), vertices.end());
  CaseKey best;
  bool first = true;
  for (const auto& p : perms) {
    CaseKey k;
    for (int i = 0; i < 5; ++i) k.pentagon[p[i]] = pentagon[i];
    for (const auto& v : vertices) k.vertices.push_back(v.permuted(p));
    std::sort(k.vertices.begin(), k.vertices.end());
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

// Rank of the angle-sum equations of the vertex set.
inline int vertex_rank(const std::vector<VertexCombo>& vs) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& v : vs) {
    std::vector<Rat> row(6, Rat(0));
    for (int i = 0; i < 5; ++i) row[i] = Rat(v.m[i]);
    row[5] = Rat(2);
    rows.push_back(std::move(row));
  }
  return affine_solve(rows, 5).rank;
}

// If the pentagon angle sum is determined by the vertex equations, return
// the forced tile number f from sum = 3pi + (4/f)pi.
inline std::optional<Rat> forced_pentagon_excess(
    const std::array<int, 5>& pentagon, const std::vector<VertexCombo>& vs) {
  // Solve lambda^T M = pentagon over the rationals (unknown lambda per
  // vertex); columns of the transposed system are the vertex combos.
  int m = int(vs.size());
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < 5; ++i) {
    std::vector<Rat> row(m + 1, Rat(0));
    for (int j = 0; j < m; ++j) row[j] = Rat(vs[j].m[i]);
    row[m] = Rat(pentagon[i]);
    rows.push_back(std::move(row));
  }
  AffineSolution sol = affine_solve(rows, m);
  if (!sol.consistent) return std::nullopt;
  Rat sum(0);
  for (int j = 0; j < m; ++j) sum = sum + sol.particular[j] * Rat(2);
  return sum;  // pentagon angle sum in units of pi
}

inline std::optional<int> forced_f(const std::array<int, 5>& pentagon,
                                   const std::vector<VertexCombo>& vs) {
  auto sum = forced_pentagon_excess(pentagon, vs);
  if (!sum) return std::nullopt;
  Rat excess = *sum - Rat(3);  // = 4/f
  if (excess.num <= 0) return -1;  // impossible
  Rat f = Rat(4) / excess;
  if (f.den != 1) return -1;
  return int(f.num);
}

// Angle appearing at every vertex of the set must appear at least twice in
// the pentagon; an angle pair jointly filling two corners of every vertex
// must fill at least three pentagon corners.
inline bool multiplicity_lemmas_ok(const std::array<int, 5>& pentagon,
                                   const std::vector<VertexCombo>& vs) {
  for (int i = 0; i < 5; ++i) {
    if (!pentagon[i]) continue;
    bool everywhere = true, twice_everywhere = true;
    for (const auto& v : vs) {
      everywhere = everywhere && v.m[i] >= 1;
      twice_everywhere = twice_everywhere && v.m[i] >= 2;
    }
    if (everywhere && pentagon[i] < 2) return false;
    if (twice_everywhere && pentagon[i] < 3) return false;
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (!pentagon[i] || !pentagon[j]) continue;
      bool pair_two = true;
      for (const auto& v : vs) pair_two = pair_two && v.m[i] + v.m[j] >= 2;
      if (pair_two && pentagon[i] + pentagon[j] < 3) return false;
    }
  return true;
}

// Normal form of an arrangement tuple under rotation and reflection.
inline std::array<int, 5> arrangement_normal(std::array<int, 5> t) {
  std::array<int, 5> best = t;
  bool first = true;
  for (int refl = 0; refl < 2; ++refl) {
    std::array<int, 5> s = t;
    if (refl) std::reverse(s.begin(), s.end());
    for (int r = 0; r < 5; ++r) {
      std::array<int, 5> c;
      for (int i = 0; i < 5; ++i) c[i] = s[(i + r) % 5];
      if (first || c < best) {
        best = c;
        first = false;
      }
    }
  }
  return best;
}

// Permutations of the five angle ids fixing the pentagon multiplicities and
// the vertex set.
inline std::vector<std::array<int, 5>> case_stabilizer(
    const std::array<int, 5>& pentagon, const std::vector<VertexCombo>& vs) {
  std::vector<VertexCombo> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::array<int, 5>> out;
  for (const auto& p : all_perms5()) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) ok = pentagon[p[i]] == pentagon[i];
    if (!ok) continue;
    std::vector<VertexCombo> mapped;
    for (const auto& v : sorted) mapped.push_back(v.permuted(p));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == sorted) out.push_back(p);
  }
  return out;
}

}  // namespace detail

// One representative per orbit of the case's arrangement pool under its
// symmetries (combined with rotation/reflection of the cyclic tuple).
inline std::vector<int> reduce_arrangements(const CaseSpec& c) {
  const auto& pool = c.arrangement_pool();
  auto stab = detail::case_stabilizer(c.pentagon, c.vertices);
  std::vector<int> reps;
  std::vector<bool> seen(pool.size(), false);
  for (int i = 0; i < int(pool.size()); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (const auto& sigma : stab) {
      std::array<int, 5> mapped;
      for (int k = 0; k < 5; ++k) mapped[k] = sigma[pool[i].corner[k]];
      auto nf = detail::arrangement_normal(mapped);
      for (int j = 0; j < int(pool.size()); ++j)
        if (detail::arrangement_normal(pool[j].corner) == nf) seen[j] = true;
    }
  }
  return reps;
}

namespace detail {

// Reference form of a labeled case, in the symbols the published case
// lists use.  Cases are generated canonically and then presented in these
// coordinates so that arrangement names line up with the solution tables.
struct LabeledCase {
  std::string label;
  std::array<int, 5> pentagon;
  std::vector<VertexCombo> vertices;
};

inline const std::map<CaseKey, LabeledCase>& label_table() {
  static const std::map<CaseKey, LabeledCase> table = [] {
    std::map<CaseKey, LabeledCase> t;
    auto add = [&t](const std::string& label, std::array<int, 5> pentagon,
                    std::initializer_list<const char*> combos) {
      std::vector<VertexCombo> vs;
      for (const char* s : combos) vs.push_back(parse_combo(s));
      t[canon_case(pentagon, vs)] = LabeledCase{label, pentagon, vs};
    };
    const std::array<int, 5> p3{2, 2, 1, 0, 0};
    const std::array<int, 5> p5{1, 1, 1, 1, 1};
    add("3.1", p3, {"abc", "aaa"});
    add("3.2a", p3, {"abb", "aac"});
    add("3.2b", p3, {"aab", "acc"});
    add("3.3a", p3, {"abb", "ccc"});
    add("3.3b", p3, {"acc", "bbb"});
    add("4.1a", p5, {"abc", "add", "bbd"});
    add("4.1b", p5, {"abc", "add", "bbb"});
    add("4.1c", p5, {"abc", "aad", "bbb"});
    add("4.2a", p5, {"abc", "ddd", "aeee"});
    add("4.2b", p5, {"abc", "ddd", "deee"});
    add("4.2c", p5, {"abc", "ddd", "eeee"});
    add("4.2d", p5, {"abc", "ddd", "eeeee"});
    add("4.3", p5, {"abb", "cdd", "aad"});
    add("4.4", p5, {"abb", "aac", "ddd"});
    add("5.1a", p5, {"abc", "ade", "cee"});
    add("5.1b", p5, {"abc", "ade", "ccc"});
    add("5.2", p5, {"abc", "add", "aae"});
    add("5.3", p5, {"abc", "add", "bee"});
    add("5.4", p5, {"abc", "add", "bbe"});
    add("5.5", p5, {"abc", "add", "dee"});
    add("5.6", p5, {"abc", "add", "eee"});
    add("5.7", p5, {"abc", "aad", "bbe"});
    add("5.8", p5, {"abc", "aad", "dde"});
    add("5.9", p5, {"abc", "aad", "eee"});
    add("5.10", p5, {"abc", "dee", "aaa"});
    add("5.11", p5, {"abb", "cdd", "aae"});
    add("5.12", p5, {"abb", "cdd", "eee"});
    add("1.1", p5, {"abc", "dee", "abde"});
    add("1.2a", p5, {"abc", "dee", "abbd"});
    add("1.2b", p5, {"abc", "dee", "abbe"});
    add("1.2c", p5, {"abc", "dee", "abdd"});
    add("1.2d", p5, {"abc", "dee", "abee"});
    add("1.2e", p5, {"abc", "dee", "adde"});
    add("1.2f", p5, {"abc", "dee", "aade"});
    add("1.3a", p5, {"abc", "dee", "aabb"});
    add("1.3b", p5, {"abc", "dee", "aadd"});
    add("1.3c", p5, {"abc", "dee", "aaee"});
    add("1.4a", p5, {"abc", "dee", "abbb"});
    add("1.4b", p5, {"abc", "dee", "addd"});
    add("1.4c", p5, {"abc", "dee", "aaad"});
    add("1.4d", p5, {"abc", "dee", "aaae"});
    add("1.4e", p5, {"abc", "dee", "ddde"});
    add("1.5a", p5, {"abc", "dee", "aaaa"});
    add("1.5b", p5, {"abc", "dee", "dddd"});
    add("2.1a", p5, {"abc", "dee", "abbde"});
    add("2.1b", p5, {"abc", "dee", "abdde"});
    add("2.2a", p5, {"abc", "dee", "aabbd"});
    add("2.2b", p5, {"abc", "dee", "aabbe"});
    add("2.2c", p5, {"abc", "dee", "aadde"});
    add("2.2d", p5, {"abc", "dee", "abbdd"});
    add("2.2e", p5, {"abc", "dee", "abbee"});
    add("2.3a", p5, {"abc", "dee", "aaade"});
    add("2.3b", p5, {"abc", "dee", "abbbd"});
    add("2.3c", p5, {"abc", "dee", "abbbe"});
    add("2.3d", p5, {"abc", "dee", "addde"});
    add("2.3e", p5, {"abc", "dee", "abddd"});
    add("2.4a", p5, {"abc", "dee", "aabbb"});
    add("2.4b", p5, {"abc", "dee", "aaddd"});
    add("2.4c", p5, {"abc", "dee", "aaadd"});
    add("2.4d", p5, {"abc", "dee", "aaaee"});
    add("2.5a", p5, {"abc", "dee", "abbbb"});
    add("2.5b", p5, {"abc", "dee", "adddd"});
    add("2.5c", p5, {"abc", "dee", "aaaad"});
    add("2.5d", p5, {"abc", "dee", "aaaae"});
    add("2.5e", p5, {"abc", "dee", "dddde"});
    add("2.6a", p5, {"abc", "dee", "aaaaa"});
    add("2.6b", p5, {"abc", "dee", "ddddd"});
    add("E", p5, {"abc", "dee"});
    add("E6", p5, {"abc", "dee", "dddddd"});
    return t;
  }();
  return table;
}

inline CaseSpec finish_case(int family, const std::array<int, 5>& pentagon,
                            std::vector<VertexCombo> vertices,
                            std::vector<std::string> merged) {
  CaseSpec c;
  c.family = family;
  CaseKey key = canon_case(pentagon, vertices);
  auto it = label_table().find(key);
  if (it == label_table().end())
    throw std::runtime_error("finish_case: unlabeled case generated");
  c.label = it->second.label;
  c.pentagon = it->second.pentagon;
  c.vertices = it->second.vertices;
  c.merged_from = std::move(merged);
  auto f = forced_f(c.pentagon, c.vertices);
  if (f && *f > 0) c.forced_f = *f;
  c.arrangement_ids = reduce_arrangements(c);
  return c;
}

inline std::string set_str(const std::vector<VertexCombo>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vs[i].str();
  }
  return s + "}";
}

// Candidate exact vertex sets from a degree-3 collection: the necessary
// part when it already provides three independent equations, otherwise the
// necessary part extended by one optional vertex (some optional vertex must
// appear, since no angle may occupy every degree-3 vertex).
inline std::vector<std::vector<VertexCombo>> candidate_vertex_sets(
    const Avc3Collection& row) {
  std::vector<std::vector<VertexCombo>> out;
  auto common_angle = [](const std::vector<VertexCombo>& vs) {
    for (int i = 0; i < 5; ++i) {
      bool all = true;
      for (const auto& v : vs) all = all && v.m[i] >= 1;
      if (all) return true;
    }
    return false;
  };
  if (vertex_rank(row.necessary) >= 3) {
    out.push_back(row.necessary);
    return out;
  }
  for (const auto& o : row.optional_part) {
    std::vector<VertexCombo> t = row.necessary;
    t.push_back(o);
    if (common_angle(t)) continue;
    if (vertex_rank(t) >= 3) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

// Cases with three distinct angles: pentagon a^2 b^2 c and two prescribed
// vertices; variants enumerate which pentagon corners carry the doubled
// angles, filtered by the multiplicity lemmas and the forced tile number.
inline std::vector<CaseSpec> three_angle_cases() {
  std::map<detail::CaseKey, std::vector<std::string>> found;
  const std::array<std::array<int, 5>, 3> patterns = {
      std::array<int, 5>{2, 2, 1, 0, 0}, std::array<int, 5>{2, 1, 2, 0, 0},
      std::array<int, 5>{1, 2, 2, 0, 0}};
  for (const Avc3Collection& row : enumerate_avc3(3)) {
    std::vector<std::vector<VertexCombo>> sets;
    if (row.necessary.size() >= 2) {
      sets.push_back(row.necessary);
    } else {
      for (const auto& o : row.optional_part) {
        std::vector<VertexCombo> t = row.necessary;
        t.push_back(o);
        sets.push_back(std::move(t));
      }
    }
    for (const auto& t : sets)
      for (const auto& p : patterns) {
        if (!detail::multiplicity_lemmas_ok(p, t)) continue;
        auto f = detail::forced_f(p, t);
        if (f && (*f < 16 || *f % 2 != 0)) continue;
        found[detail::canon_case(p, t)].push_back(detail::set_str(t));
      }
  }
  std::vector<CaseSpec> out;
  for (auto& [key, merged] : found)
    out.push_back(detail::finish_case(3, key.pentagon, key.vertices, merged));
  return out;
}

// Cases with four distinct angles at degree-3 vertices: the fifth pentagon
// angle does not appear there, so when the collection has only two
// independent equations and no promotable optional vertex, the third
// equation comes from a degree 4 or 5 vertex containing the fifth angle.
inline std::vector<CaseSpec> four_angle_cases() {
  std::map<detail::CaseKey, std::vector<std::string>> found;
  const std::array<int, 5> pentagon{1, 1, 1, 1, 1};
  for (const Avc3Collection& row : enumerate_avc3(4)) {
    auto sets = detail::candidate_vertex_sets(row);
    if (sets.empty()) {
      // Fifth angle rescue: one of theta.e^3, e^4, e^5 must be a vertex.
      std::vector<VertexCombo> exts;
      for (int theta = 0; theta < 4; ++theta)
        exts.push_back(parse_combo(std::string(1, char('a' + theta)) + "eee"));
      exts.push_back(parse_combo("eeee"));
      exts.push_back(parse_combo("eeeee"));
      for (const auto& w : exts) {
        std::vector<VertexCombo> t = row.necessary;
        t.push_back(w);
        if (detail::vertex_rank(t) >= 3) sets.push_back(std::move(t));
      }
    }
    for (const auto& t : sets) {
      auto f = detail::forced_f(pentagon, t);
      if (f && (*f < 16 || *f % 2 != 0)) continue;
      found[detail::canon_case(pentagon, t)].push_back(detail::set_str(t));
    }
  }
  std::vector<CaseSpec> out;
  for (auto& [key, merged] : found)
    out.push_back(detail::finish_case(4, key.pentagon, key.vertices, merged));
  return out;
}

// Cases with all five distinct angles at degree-3 vertices.
inline std::vector<CaseSpec> five_angle_cases() {
  std::map<detail::CaseKey, std::vector<std::string>> found;
  const std::array<int, 5> pentagon{1, 1, 1, 1, 1};
  for (const Avc3Collection& row : enumerate_avc3(5))
    for (const auto& t : detail::candidate_vertex_sets(row)) {
      auto f = detail::forced_f(pentagon, t);
      if (f && (*f < 16 || *f % 2 != 0)) continue;
      found[detail::canon_case(pentagon, t)].push_back(detail::set_str(t));
    }
  std::vector<CaseSpec> out;
  for (auto& [key, merged] : found)
    out.push_back(detail::finish_case(5, key.pentagon, key.vertices, merged));
  return out;
}

namespace detail {

// Extensions of {abc, dee} by one vertex of the given degree.  The added
// combination may not contain abc, dee or eee as a sub-multiset (their
// angle sums already reach 2pi), and e >= 3pi/4 rules out eee on its own.
inline std::vector<CaseSpec> extension_cases(int degree, int family) {
  const VertexCombo abc = parse_combo("abc");
  const VertexCombo dee = parse_combo("dee");
  const VertexCombo eee = parse_combo("eee");
  std::map<CaseKey, std::vector<std::string>> found;
  const std::array<int, 5> pentagon{1, 1, 1, 1, 1};
  for (const auto& v : all_combos(5, degree)) {
    if (v.contains(abc) || v.contains(dee) || v.contains(eee)) continue;
    std::vector<VertexCombo> t = {abc, dee, v};
    if (vertex_rank(t) < 3) continue;
    auto f = forced_f(pentagon, t);
    if (f && (*f < 16 || *f % 2 != 0)) continue;
    found[canon_case(pentagon, t)].push_back(set_str(t));
  }
  std::vector<CaseSpec> out;
  for (auto& [key, merged] : found)
    out.push_back(finish_case(family, key.pentagon, key.vertices, merged));
  return out;
}

}  // namespace detail

// AVC3 = {abc, dee} plus one degree-4 vertex.
inline std::vector<CaseSpec> deg4_extension_cases() {
  return detail::extension_cases(4, 1);
}

// AVC3 = {abc, dee} plus one degree-5 vertex.
inline std::vector<CaseSpec> deg5_extension_cases() {
  return detail::extension_cases(5, 2);
}

// The residual case: abc and dee are the only degree-3 vertices and there
// are no degree 4 or 5 vertices.  The angle sums force d = (8/f)pi and
// e = (1 - 4/f)pi.
inline CaseSpec exceptional_case() {
  CaseSpec c;
  c.family = 0;
  c.label = "E";
  c.vertices = {parse_combo("abc"), parse_combo("dee")};
  c.arrangement_ids = reduce_arrangements(c);
  return c;
}

inline double exceptional_delta(int f) { return 8.0 / f * kPi; }
inline double exceptional_epsilon(int f) { return (1.0 - 4.0 / f) * kPi; }

// The exceptional case closed with a d^6 vertex (forced f = 24); this is
// the variant the solver runs.
inline CaseSpec exceptional_d6_case() {
  CaseSpec c;
  c.family = 0;
  c.label = "E6";
  c.vertices = {parse_combo("abc"), parse_combo("dee"),
                parse_combo("dddddd")};
  auto f = detail::forced_f(c.pentagon, c.vertices);
  if (f && *f > 0) c.forced_f = *f;
  c.arrangement_ids = reduce_arrangements(c);
  return c;
}

// Every case the solver sweeps: the five families plus the d^6-closed
// exceptional case.
inline std::vector<CaseSpec> all_solver_cases() {
  std::vector<CaseSpec> out = three_angle_cases();
  auto append = [&out](std::vector<CaseSpec> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  append(four_angle_cases());
  append(five_angle_cases());
  append(deg4_extension_cases());
  append(deg5_extension_cases());
  out.push_back(exceptional_d6_case());
  return out;
}

inline const CaseSpec* case_by_label(const std::vector<CaseSpec>& cases,
                                     const std::string& label) {
  for (const auto& c : cases)
    if (c.label == label) return &c;
  return nullptr;
}

}  // namespace pentile
