#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "pentile/cases.hpp"

using namespace pentile;

namespace {

int pair_count(const std::vector<CaseSpec>& cases) {
  int n = 0;
  for (const auto& c : cases) n += int(c.arrangement_ids.size());
  return n;
}

const CaseSpec& get(const std::vector<CaseSpec>& cases,
                    const std::string& label) {
  const CaseSpec* c = case_by_label(cases, label);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("the twelve arrangements") {
  const auto& arr = arrangements12();
  REQUIRE(arr.size() == 12);
  CHECK(arr[0].corner == std::array<int, 5>{0, 1, 2, 3, 4});
  CHECK(arr[2].corner == std::array<int, 5>{0, 1, 3, 2, 4});  // A3
  // They are pairwise inequivalent and closed under normalization.
  std::set<std::array<int, 5>> forms;
  for (const auto& a : arr) {
    auto nf = detail::arrangement_normal(a.corner);
    CHECK(forms.insert(nf).second);
  }
  // beta<->gamma maps A4 to A6.
  std::array<int, 5> a4 = arrangements12()[3].corner;
  for (int& v : a4) v = (v == 1) ? 2 : (v == 2 ? 1 : v);
  CHECK(detail::arrangement_normal(a4) ==
        detail::arrangement_normal(arrangements12()[5].corner));
}

TEST_CASE("three-angle cases") {
  auto cases = three_angle_cases();
  REQUIRE(cases.size() == 5);
  std::set<std::string> labels;
  for (const auto& c : cases) {
    labels.insert(c.label);
    CHECK(c.arrangement_ids.size() == 2);
  }
  CHECK(labels == std::set<std::string>{"3.1", "3.2a", "3.2b", "3.3a", "3.3b"});
  CHECK(pair_count(cases) == 10);
}

TEST_CASE("four-angle cases") {
  auto cases = four_angle_cases();
  REQUIRE(cases.size() == 9);
  CHECK(pair_count(cases) == 72);
  std::map<std::string, int> arr;
  for (const auto& c : cases) arr[c.label] = int(c.arrangement_ids.size());
  CHECK(arr["4.1a"] == 12);
  CHECK(arr["4.1b"] == 12);
  CHECK(arr["4.1c"] == 12);
  CHECK(arr["4.2a"] == 6);
  CHECK(arr["4.2b"] == 2);
  CHECK(arr["4.2c"] == 2);
  CHECK(arr["4.2d"] == 2);
  CHECK(arr["4.3"] == 12);
  CHECK(arr["4.4"] == 12);
  // 4.2b keeps representatives A1 and A3.
  const auto& c42b = get(cases, "4.2b");
  CHECK(c42b.arrangements()[0].name == "A1");
  CHECK(c42b.arrangements()[1].name == "A3");
  // Forced tile numbers for the closed subfamilies.
  CHECK(get(cases, "4.2b").forced_f == 36);
  CHECK(get(cases, "4.2c").forced_f == 24);
  CHECK(get(cases, "4.2d").forced_f == 60);
  CHECK_FALSE(get(cases, "4.1a").forced_f.has_value());
}

TEST_CASE("five-angle cases") {
  auto cases = five_angle_cases();
  REQUIRE(cases.size() == 13);
  CHECK(pair_count(cases) == 102);
  std::map<std::string, int> arr;
  for (const auto& c : cases) arr[c.label] = int(c.arrangement_ids.size());
  CHECK(arr["5.1a"] == 12);
  CHECK(arr["5.1b"] == 6);
  CHECK(arr["5.2"] == 6);
  CHECK(arr["5.3"] == 8);
  CHECK(arr["5.4"] == 12);
  CHECK(arr["5.5"] == 6);
  CHECK(arr["5.6"] == 6);
  CHECK(arr["5.7"] == 8);
  CHECK(arr["5.8"] == 6);
  CHECK(arr["5.9"] == 6);
  CHECK(arr["5.10"] == 6);
  CHECK(arr["5.11"] == 12);
  CHECK(arr["5.12"] == 8);
}

TEST_CASE("degree-4 and degree-5 extension cases") {
  auto deg4 = deg4_extension_cases();
  CHECK(deg4.size() == 17);
  CHECK(pair_count(deg4) == 112);
  auto deg5 = deg5_extension_cases();
  CHECK(deg5.size() == 23);
  CHECK(pair_count(deg5) == 172);
  CHECK(get(deg4, "1.4e").forced_f == 20);
  CHECK(get(deg4, "1.5b").forced_f == 16);
  CHECK(get(deg5, "2.5e").forced_f == 28);
  CHECK(get(deg5, "2.6b").forced_f == 20);
  CHECK(get(deg4, "1.4e").arrangement_ids.size() == 2);
  CHECK(get(deg4, "1.1").arrangement_ids.size() == 6);
  CHECK(get(deg4, "1.2a").arrangement_ids.size() == 12);
  // No prescribed vertex contains abc, dee or eee as a proper sub-multiset.
  for (const auto& cases : {deg4, deg5})
    for (const auto& c : cases)
      for (const auto& v : c.vertices) {
        if (v.degree() == 3) continue;
        CHECK_FALSE(v.contains(parse_combo("abc")));
        CHECK_FALSE(v.contains(parse_combo("dee")));
        CHECK_FALSE(v.contains(parse_combo("eee")));
      }
}

TEST_CASE("exceptional case") {
  CaseSpec e = exceptional_case();
  CHECK(e.vertices.size() == 2);
  CHECK(exceptional_delta(24) == Catch::Approx(kPi / 3));
  CHECK(exceptional_epsilon(24) == Catch::Approx(5 * kPi / 6));
  CHECK(exceptional_delta(16) == Catch::Approx(kPi / 2));
  CHECK(exceptional_epsilon(16) == Catch::Approx(3 * kPi / 4));
  for (int f = 16; f <= 40; f += 2)
    CHECK(exceptional_epsilon(f) >= 3 * kPi / 4 - 1e-12);

  CaseSpec e6 = exceptional_d6_case();
  CHECK(e6.forced_f == 24);
  CHECK(e6.arrangement_ids.size() == 2);
  CHECK(e6.arrangements()[0].name == "A1");
  CHECK(e6.arrangements()[1].name == "A3");
}

TEST_CASE("global invariants of the case list") {
  auto cases = all_solver_cases();
  std::set<std::string> labels;
  int pairs = 0;
  for (const auto& c : cases) {
    CHECK(labels.insert(c.label).second);
    pairs += int(c.arrangement_ids.size());
    // Equation rank: three independent vertex equations for the families
    // with five distinct angles; the three-angle pentagon gets its third
    // equation from the tile-number relation; E6 is closed by d^6.
    int rank = detail::vertex_rank(c.vertices);
    if (c.family == 3)
      CHECK(rank == 2);
    else
      CHECK(rank == 3);
  }
  CHECK(pairs == 10 + 72 + 102 + 112 + 172 + 2);
  CHECK(detail::vertex_rank(exceptional_case().vertices) == 2);
}
