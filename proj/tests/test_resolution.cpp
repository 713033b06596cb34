#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schub/resolution.hpp"

using namespace schub;

namespace {

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<VariableRing>(std::move(names));
}

bool composes_to_zero(const std::vector<FreeModuleMap>& res) {
  for (size_t k = 0; k + 1 < res.size(); ++k) {
    const FreeModuleMap& A = res[k];
    const FreeModuleMap& B = res[k + 1];
    if (A.source_rank() != B.target_rank()) return false;
    for (int r = 0; r < A.target_rank(); ++r)
      for (int c = 0; c < B.source_rank(); ++c) {
        Polynomial acc;
        for (int m = 0; m < A.source_rank(); ++m) {
          const Polynomial p = A.entry[r][m] * B.entry[m][c];
          acc = acc.ring() ? acc + p : p;
        }
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

std::vector<int> totals(const std::vector<FreeModuleMap>& res) {
  std::vector<int> t{res.empty() ? 1 : res[0].target_rank()};
  for (const auto& m : res) t.push_back(m.source_rank());
  return t;
}

}  // namespace

TEST_CASE("koszul complex of two variables") {
  const RingPtr R = make_ring({"x", "y"});
  const TermOrder ord{TermOrder::Kind::GradedDiagonal};
  const Polynomial x = Polynomial::variable(R, 0);
  const Polynomial y = Polynomial::variable(R, 1);
  auto res = schreyer_resolution({x, y}, R, {1, 1}, ord);
  REQUIRE(res.size() == 2);
  CHECK(composes_to_zero(res));
  res = minimize_resolution(std::move(res));
  CHECK(totals(res) == std::vector<int>{1, 2, 1});
  CHECK(res[1].source_degree == std::vector<int>{2});
}

TEST_CASE("principal ideal resolves in one step") {
  const RingPtr R = make_ring({"x", "y"});
  const TermOrder ord{TermOrder::Kind::GradedDiagonal};
  const Polynomial x = Polynomial::variable(R, 0);
  const Polynomial y = Polynomial::variable(R, 1);
  const auto res =
      minimize_resolution(schreyer_resolution({x * x - y * y}, R, {1, 1}, ord));
  CHECK(totals(res) == std::vector<int>{1, 1});
  CHECK(res[0].source_degree == std::vector<int>{2});
}

TEST_CASE("zero ideal gives the empty resolution") {
  const RingPtr R = make_ring({"x"});
  const TermOrder ord{TermOrder::Kind::GradedDiagonal};
  CHECK(schreyer_resolution({}, R, {1}, ord).empty());
  CHECK(schreyer_resolution({Polynomial::zero(R)}, R, {1}, ord).empty());
}

TEST_CASE("maximal ideal of the self-interval is Koszul") {
  // The defining ideal of the point [w,w] is generated by all free
  // variables, so the minimal resolution is the full Koszul complex.
  const Permutation w = Permutation::parse("132");
  const auto res = minimize_resolution(schreyer_resolution(kl_ideal(w, w)));
  CHECK(totals(res) == std::vector<int>{1, 2, 1});
}

TEST_CASE("non-minimal resolution minimizes consistently") {
  // Redundant generating set: x is already in the ideal of {x, x + y, y}.
  const RingPtr R = make_ring({"x", "y", "z"});
  const TermOrder ord{TermOrder::Kind::GradedDiagonal};
  const Polynomial x = Polynomial::variable(R, 0);
  const Polynomial y = Polynomial::variable(R, 1);
  const Polynomial z = Polynomial::variable(R, 2);
  auto res = schreyer_resolution({x, x + y, y * z}, R, {1, 1, 1}, ord);
  CHECK(composes_to_zero(res));
  auto min1 = minimize_resolution(res);
  CHECK(composes_to_zero(min1));
  CHECK(totals(min1) == std::vector<int>{1, 2, 1});
  // Idempotent: minimizing again changes nothing.
  const auto min2 = minimize_resolution(min1);
  CHECK(totals(min2) == totals(min1));
}

TEST_CASE("betti numbers of [13254, 35142]") {
  const KLIdealSpec spec =
      kl_ideal(Permutation::parse("13254"), Permutation::parse("35142"));
  const BettiTable b = betti_table(spec);
  CHECK(b.total == std::vector<int>{1, 5, 9, 7, 2});
  // Length equals the codimension l(w) - l(x) = 4 (Cohen-Macaulay).
  CHECK(static_cast<int>(b.total.size()) - 1 ==
        spec.w.length() - spec.x.length());

  const std::map<std::pair<int, int>, int> expected{
      {{0, 0}, 1},  {{1, 3}, 2},  {{1, 4}, 3},  {{2, 5}, 1},  {{2, 6}, 2},
      {{2, 7}, 4},  {{2, 8}, 2},  {{3, 8}, 1},  {{3, 9}, 2},  {{3, 10}, 2},
      {{3, 11}, 2}, {{4, 12}, 1}, {{4, 13}, 1}};
  CHECK(b.graded == expected);

  CHECK(cm_type(spec) == 2);
  CHECK(first_betti(spec) == 5);
}

TEST_CASE("resolution of [13254, 35142] is exact bookkeeping") {
  const KLIdealSpec spec =
      kl_ideal(Permutation::parse("13254"), Permutation::parse("35142"));
  auto res = schreyer_resolution(spec);
  CHECK(composes_to_zero(res));
  res = minimize_resolution(std::move(res));
  CHECK(composes_to_zero(res));
  // Every entry of a minimal differential lies in the maximal ideal.
  for (const auto& mp : res)
    for (const auto& row : mp.entry)
      for (const auto& p : row)
        CHECK((p.is_zero() || p.total_degree() >= 1));
  // Graded maps: entry degrees match target/source generator degrees.
  const Grading g = kl_coarse_grading(spec.x);
  for (const auto& mp : res)
    for (int r = 0; r < mp.target_rank(); ++r)
      for (int c = 0; c < mp.source_rank(); ++c) {
        const Polynomial& p = mp.entry[r][c];
        if (p.is_zero()) continue;
        CHECK(is_homogeneous(p, g));
        CHECK(graded_degree(p.terms()[0].first, g)[0] ==
              mp.source_degree[c] - mp.target_degree[r]);
      }
}

TEST_CASE("complete intersection [123546, 461253] has Koszul betti numbers") {
  const KLIdealSpec spec =
      kl_ideal(Permutation::parse("123546"), Permutation::parse("461253"));
  const BettiTable b = betti_table(spec);
  CHECK(b.total == std::vector<int>{1, 7, 21, 35, 35, 21, 7, 1});
  CHECK(cm_type(spec) == 1);
  CHECK(first_betti(spec) == 7);
  CHECK(static_cast<int>(b.total.size()) - 1 ==
        spec.w.length() - spec.x.length());
}

TEST_CASE("cm type at the identity") {
  CHECK(cm_type(kl_ideal(Permutation::identity(5),
                         Permutation::parse("35142"))) == 2);
}

TEST_CASE("cm type weakly decreases up the interval") {
  const Permutation w = Permutation::parse("35142");
  const Permutation bottom = Permutation::identity(5);
  int prev = cm_type(kl_ideal(bottom, w));
  // Walk one saturated chain from the identity up to w.
  Permutation x = bottom;
  while (x != w) {
    Permutation next = w;
    bool advanced = false;
    for (int i = 1; i <= 5 && !advanced; ++i)
      for (int j = i + 1; j <= 5 && !advanced; ++j) {
        const Permutation y = x.swap_positions(i, j);
        if (y.length() == x.length() + 1 && bruhat_leq(y, w)) {
          next = y;
          advanced = true;
        }
      }
    REQUIRE(advanced);
    const int cur = cm_type(kl_ideal(next, w));
    CHECK(prev >= cur);
    prev = cur;
    x = next;
  }
  CHECK(prev == 1);  // [w,w] is a point, resolved by the Koszul complex
}
