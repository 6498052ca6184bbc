#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatinv/abelian.hpp"

using namespace quatinv;

namespace {
std::vector<Int> vec(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("cyclic group from a single relation") {
  auto g = abelian_from_relations(1, {vec({6})});
  CHECK(g.order() == 6);
  CHECK(g.rank2() == 1);
  CHECK(g.cyc.size() == 1);
  CHECK(g.cyc[0] == 6);
  CHECK(ab_element_order(g, vec({1})) == 6);
  CHECK(ab_element_order(g, vec({2})) == 3);
  CHECK(ab_element_order(g, vec({3})) == 2);
  CHECK(ab_is_identity(g, vec({12})));
  CHECK_FALSE(ab_is_identity(g, vec({4})));
}

TEST_CASE("product structure and invariant factors") {
  auto g = abelian_from_relations(2, {vec({2, 0}), vec({0, 4})});
  CHECK(g.order() == 8);
  CHECK(g.rank2() == 2);
  REQUIRE(g.cyc.size() == 2);
  CHECK(g.cyc[0] == 2);
  CHECK(g.cyc[1] == 4);
  CHECK(ab_element_order(g, vec({1, 1})) == 4);
  CHECK(ab_element_order(g, vec({1, 2})) == 2);

  // a non-diagonal presentation of a cyclic group: det 6, SNF 1 x 6
  auto h = abelian_from_relations(2, {vec({2, 1}), vec({0, 3})});
  CHECK(h.order() == 6);
  REQUIRE(h.cyc.size() == 1);
  CHECK(h.cyc[0] == 6);
  // some generator combination must have full order
  bool found = false;
  for (long a = 0; a < 2 && !found; a++)
    for (long b = 0; b < 3 && !found; b++)
      if (ab_element_order(h, vec({a, b})) == 6) found = true;
  CHECK(found);
}

TEST_CASE("redundant and missing relations") {
  // redundant rows change nothing
  auto g = abelian_from_relations(1, {vec({6}), vec({12}), vec({0})});
  CHECK(g.order() == 6);
  // missing rank means an infinite group, which is refused
  CHECK_THROWS(abelian_from_relations(2, {vec({2, 0})}));
  CHECK_THROWS(abelian_from_relations(1, Mat{}));
}

TEST_CASE("two torsion enumeration") {
  auto g = abelian_from_relations(3, {vec({2, 0, 0}), vec({0, 6, 0}),
                                      vec({0, 0, 5})});
  CHECK(g.order() == 60);
  CHECK(g.rank2() == 2);
  auto basis = ab_two_torsion_basis(g);
  REQUIRE(basis.size() == 2);
  auto elts = ab_two_torsion_elements(g);
  REQUIRE(elts.size() == 4);
  CHECK(ab_is_identity(g, elts[0]));
  int nontrivial = 0;
  for (const auto& e : elts) {
    Int ord = ab_element_order(g, e);
    CHECK((ord == 1 || ord == 2));
    if (ord == 2) nontrivial++;
  }
  CHECK(nontrivial == 3);
}

TEST_CASE("quotients and subgroup membership") {
  // (Z/4 x Z/2) / <(2,1)> has order 4
  auto g = abelian_from_relations(2, {vec({4, 0}), vec({0, 2})});
  auto q = ab_quotient(g, {vec({2, 1})});
  CHECK(q.order() == 4);

  // quotient by a full-order element of Z/6 is trivial
  auto c6 = abelian_from_relations(1, {vec({6})});
  CHECK(ab_quotient(c6, {vec({1})}).order() == 1);
  CHECK(ab_quotient(c6, {vec({2})}).order() == 2);

  // membership: in Z/2 x Z/4, (1,2) lies in <(1,0),(0,2)> but (0,1) does not
  auto h = abelian_from_relations(2, {vec({2, 0}), vec({0, 4})});
  CHECK(ab_in_subgroup(h, {vec({1, 0}), vec({0, 2})}, vec({1, 2})));
  CHECK_FALSE(ab_in_subgroup(h, {vec({1, 0}), vec({0, 2})}, vec({0, 1})));
  // squares subgroup: index is 2^rank2
  CHECK(ab_quotient(h, {vec({2, 0}), vec({0, 2})}).order() == 4);
}

TEST_CASE("random diagonal groups keep their order under presentation mixing") {
  // conjugating the relation matrix by unimodular row operations must not
  // change the group
  std::vector<std::vector<long>> diags = {{3, 9}, {2, 8}, {5, 5}, {4, 12}};
  for (const auto& dd : diags) {
    Mat rels = {vec({dd[0], 0}), vec({0, dd[1]})};
    // mix: r0 += 3 r1, r1 += 2 r0, and a redundant sum row
    Mat mixed = rels;
    for (int j = 0; j < 2; j++) mixed[0][j] += 3 * mixed[1][j];
    for (int j = 0; j < 2; j++) mixed[1][j] += 2 * mixed[0][j];
    mixed.push_back(vec({0, 0}));
    for (int j = 0; j < 2; j++) mixed[2][j] = mixed[0][j] + mixed[1][j];
    auto a = abelian_from_relations(2, rels);
    auto b = abelian_from_relations(2, mixed);
    CHECK(a.order() == b.order());
    CHECK(a.cyc == b.cyc);
  }
}
