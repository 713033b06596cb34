#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schub/pattern.hpp"

using namespace schub;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("classical embeddings of 2413 in 265314") {
  const auto embs = classical_embeddings(P("2413"), P("265314"));
  REQUIRE(embs.size() == 2);
  CHECK(embs[0].indices == std::vector<int>{1, 2, 5, 6});
  CHECK(embs[1].indices == std::vector<int>{1, 3, 5, 6});
}

TEST_CASE("classical avoidance") {
  CHECK(classical_embeddings(P("4231"), P("1234")).empty());
  CHECK(classical_embeddings(P("4231"), P("45312")).empty());
  CHECK(classical_embeddings(P("3412"), P("45312")).size() == 1);
  CHECK(classical_embeddings(P("4231"), P("53241")).size() == 2);
  // 3412 occurs once in 35142 (positions 1,2,3,5).
  const auto e = classical_embeddings(P("3412"), P("35142"));
  REQUIRE(e.size() == 1);
  CHECK(e[0].indices == std::vector<int>{1, 2, 3, 5});
}

TEST_CASE("phi image, big interval embedding") {
  const Embedding phi{{1, 4, 5, 6, 8}};
  const Permutation x = phi_image(P("13524"), P("35142"), P("589716234"), phi);
  CHECK(x.str() == "189573264");
  CHECK(is_interval_embedding(P("13524"), P("35142"), P("589716234"), phi));
  CHECK(P("589716234").length() - x.length() ==
        P("35142").length() - P("13524").length());
}

TEST_CASE("phi image rejects non-embeddings") {
  CHECK_THROWS(phi_image(P("2143"), P("2413"), P("265314"), Embedding{{1, 2, 3, 4}}));
}

TEST_CASE("both 2413 embeddings in 265314 fail the interval condition") {
  const Embedding phi1{{1, 2, 5, 6}}, phi2{{1, 3, 5, 6}};
  const Permutation u = P("2143"), v = P("2413"), w = P("265314");
  CHECK(phi_image(u, v, w, phi1).str() == "215364");
  CHECK(phi_image(u, v, w, phi2).str() == "261354");
  CHECK(w.length() - phi_image(u, v, w, phi1).length() == 5);
  CHECK(w.length() - phi_image(u, v, w, phi2).length() == 3);
  CHECK_FALSE(is_interval_embedding(u, v, w, phi1));
  CHECK_FALSE(is_interval_embedding(u, v, w, phi2));
  CHECK(interval_avoids(w, IntervalPattern{{u, v}}));
}

TEST_CASE("singular generator list for small n") {
  auto pats = [](const PatternIdealGenerators& g) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& p : g.generators)
      s.insert({p.interval.bottom.str(), p.interval.top.str()});
    return s;
  };
  CHECK(pats(singular_generators(3)).empty());
  // n = 4: family one at (1,1) and family two at (0,0).
  const auto s4 = pats(singular_generators(4));
  CHECK(s4 == std::set<std::pair<std::string, std::string>>{
                  {"2143", "4231"}, {"1324", "3412"}});
}

TEST_CASE("singular generator parameters at n=5") {
  // Instances realized inside S5: family one (1,1),(1,2),(2,1);
  // family two (0,0),(0,1),(1,0); family three a=1.
  const auto g = singular_generators(5);
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& p : g.generators)
    s.insert({p.interval.bottom.str(), p.interval.top.str()});
  CHECK(s.size() == 7);
  CHECK(s.contains({"14325", "45312"}));
  CHECK(s.contains({"2143", "4231"}));
  CHECK(s.contains({"21543", "52431"}));
  CHECK(s.contains({"32154", "53241"}));
  CHECK(s.contains({"1324", "3412"}));
  CHECK(s.contains({"13254", "35142"}));
  CHECK(s.contains({"21435", "42513"}));
  for (const auto& p : g.generators) {
    CHECK(bruhat_leq(p.interval.bottom, p.interval.top));
    CHECK(p.interval.bottom.length() < p.interval.top.length());
  }
}

TEST_CASE("family three appears at n=6") {
  const auto g = singular_generators(6);
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& p : g.generators)
    s.insert({p.interval.bottom.str(), p.interval.top.str()});
  CHECK(s.contains({"154326", "564312"}));  // family three at a=2
}

TEST_CASE("smoothness by interval avoidance matches classical 3412/4231 test") {
  // Lakshmibai-Sandhya: smooth iff classically avoiding 4231 and 3412.
  for (const auto& w : all_permutations(5)) {
    const bool classical = classical_embeddings(P("4231"), w).empty() &&
                           classical_embeddings(P("3412"), w).empty();
    bool avoids_all = true;
    for (const auto& pat : singular_generators(5).generators)
      if (!interval_avoids(w, pat)) {
        avoids_all = false;
        break;
      }
    CHECK(avoids_all == classical);
  }
}

TEST_CASE("maximal singular points of 461253") {
  const auto pts = locus_max_points(P("461253"), singular_generators(6));
  std::set<std::string> got;
  for (const auto& p : pts) got.insert(p.str());
  CHECK(got == std::set<std::string>{"142653", "241365", "143265"});
}

TEST_CASE("locus membership") {
  const auto gens = singular_generators(6);
  const Permutation w = P("461253");
  CHECK(locus_contains(P("142653"), w, gens));
  CHECK(locus_contains(P("123456"), w, gens));  // identity below every max point
  CHECK_FALSE(locus_contains(w, w, gens));      // generic point is smooth
  CHECK_THROWS(locus_contains(P("654321"), w, gens));
}

TEST_CASE("gorenstein generators exclude the a==b diagonal of family one") {
  const auto g = gorenstein_generators(5);
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& p : g.generators)
    s.insert({p.interval.bottom.str(), p.interval.top.str()});
  CHECK_FALSE(s.contains({"2143", "4231"}));  // family one, a == b == 1
  CHECK(s.contains({"21543", "52431"}));      // family one, (1,2)
  CHECK(s.contains({"13254", "35142"}));      // family two, (0,1)
  CHECK_FALSE(s.contains({"1324", "3412"}));  // family two, (0,0) excluded
  CHECK_FALSE(gorenstein_generators(6).conjectural);
  CHECK_FALSE(non_gorenstein_locus_generators(6).conjectural);
  CHECK(non_gorenstein_locus_generators(7).conjectural);
}

TEST_CASE("factorial generators") {
  const auto g = factorial_generators(4);
  REQUIRE(g.generators.size() == 2);
  CHECK(g.generators[0].interval.bottom.str() == "4231");
  CHECK(g.generators[0].interval.top.str() == "4231");
  CHECK(g.generators[1].interval.bottom.str() == "3142");
  CHECK(g.generators[1].interval.top.str() == "3412");
}
