#include <catch2/catch_amalgamated.hpp>

#include "pentile/avcderive.hpp"

using namespace pentile;

namespace {
constexpr double pi = kPi;

CandidateSolution candidate(std::array<double, 5> angles_pi,
                            std::array<bool, 5> exact,
                            std::array<int, 5> pentagon = {1, 1, 1, 1, 1}) {
  CandidateSolution s;
  for (int i = 0; i < 5; ++i) s.angles[i] = angles_pi[i] * pi;
  s.exact = exact;
  s.pentagon = pentagon;
  return s;
}

std::vector<VertexCombo> combos(std::initializer_list<const char*> list) {
  std::vector<VertexCombo> out;
  for (const char* s : list) out.push_back(parse_combo(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("derive_avc on the 4.2b pentagon") {
  auto s = candidate({0.29539, 1.62453, 0.08008, 2.0 / 3, 4.0 / 9},
                     {false, false, false, true, true});
  CHECK(derive_avc(s) == combos({"abc", "ddd", "deee"}));
}

TEST_CASE("derive_avc on the earth-map pentagons") {
  // First f = 24 pentagon (concave), in A3-relabeled symbols.
  auto p1 = candidate({0.14401, 4.0 / 3, 0.52266, 1.0 / 3, 5.0 / 6},
                      {false, false, false, true, true});
  CHECK(derive_avc(p1) == combos({"abc", "bdd", "dee", "aaaccc", "aaccdd",
                                  "acdddd", "dddddd"}));

  // Second f = 24 pentagon (degenerate-triangle shape).
  auto p2 = candidate({0.11928, 1.38072, 0.5, 1.0 / 3, 5.0 / 6},
                      {false, false, true, true, true});
  CHECK(derive_avc(p2) ==
        combos({"abc", "dee", "cdde", "cccc", "ccddd", "dddddd"}));
}

TEST_CASE("derive_avc on the regular dodecahedron") {
  auto s = candidate({2.0 / 3, 0, 0, 0, 0}, {true, false, false, false, false},
                     {5, 0, 0, 0, 0});
  CHECK(derive_avc(s) == combos({"aaa"}));
}

TEST_CASE("avc_prune for the f=24 earth map forces two degree-6 poles") {
  auto avc =
      combos({"abc", "bdd", "dee", "aaaccc", "aaccdd", "acdddd", "dddddd"});
  PruneResult r = avc_prune(avc, 24);
  REQUIRE(r.feasible);
  CHECK(r.kept == combos({"abc", "dee", "dddddd"}));
  for (const auto& a : r.assignments) {
    int v6 = 0, v45 = 0;
    for (std::size_t k = 0; k < avc.size(); ++k) {
      if (avc[k].degree() == 6) v6 += a[k];
      if (avc[k].degree() == 4 || avc[k].degree() == 5) v45 += a[k];
    }
    CHECK(v6 == 2);
    CHECK(v45 == 0);
  }
}

TEST_CASE("avc_prune of the degenerate-pentagon collection") {
  auto avc = combos({"abc", "dee", "cdde", "cccc", "ccddd", "dddddd"});
  PruneResult r = avc_prune(avc, 24);
  REQUIRE(r.feasible);
  CHECK(r.kept == combos({"abc", "dee", "dddddd"}));
}

TEST_CASE("avc_prune keeps both tiling shapes at f=20") {
  auto avc = combos({"abc", "dee", "ddde", "ddddd"});
  PruneResult r = avc_prune(avc, 20);
  REQUIRE(r.feasible);
  CHECK(r.kept == avc);
  // Assignments are (n_ddde, n_ddddd) in {(0,2),(2,1),(4,0)} up to order.
  CHECK(r.assignments.size() == 3);
}

TEST_CASE("avc_prune on the dodecahedron counts") {
  PruneResult r = avc_prune(combos({"aaa"}), 12, {5, 0, 0, 0, 0});
  REQUIRE(r.feasible);
  REQUIRE(r.assignments.size() == 1);
  CHECK(r.assignments[0][0] == 20);
  CHECK_FALSE(avc_prune(combos({"aaa"}), 14, {5, 0, 0, 0, 0}).feasible);
}
