#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <unordered_set>

#include "cgt/group.hpp"

using namespace cgt;

namespace {

PermGroup symmetric(Point n) {
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles("(1,2)", n));
  std::string big = "(";
  for (Point i = 1; i <= n; ++i) big += std::to_string(i) + (i < n ? "," : ")");
  gens.push_back(Perm::from_cycles(big, n));
  return PermGroup(n, gens);
}

PermGroup alternating6() {
  return PermGroup(6, {Perm::from_cycles("(1,2,3)", 6),
                       Perm::from_cycles("(2,3,4,5,6)", 6)});
}

// Exhaustive closure count, the independent order oracle.
std::uint64_t closure_count(const PermGroup &G) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm(G.degree())};
  seen.insert(frontier[0]);
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const Perm &g : G.generators()) {
      Perm p = frontier[i] * g;
      if (seen.insert(p).second) frontier.push_back(p);
    }
  return frontier.size();
}

}  // namespace

TEST_CASE("bsgs orders of standard groups") {
  CHECK(symmetric(6).order_u64() == 720);
  CHECK(PermGroup(6, {Perm::from_cycles("(1,2,3,4,5,6)", 6),
                      Perm::from_cycles("(1,2)", 6)})
            .order_u64() == 720);
  CHECK(PermGroup(5, {Perm::from_cycles("(1,2,3,4,5)", 5)}).order_u64() == 5);
  CHECK(alternating6().order_u64() == 360);
  CHECK(PermGroup::trivial(7).order_u64() == 1);
  CHECK(PermGroup(4, {Perm::from_cycles("()", 4)}).order_u64() == 1);
}

TEST_CASE("every generator sifts to the identity") {
  PermGroup G = alternating6();
  for (const Perm &g : G.generators()) CHECK(G.contains(g));
  for (const Perm &g : G.strong_generators()) CHECK(G.contains(g));
}

TEST_CASE("order equals product of basic orbit lengths") {
  PermGroup G = symmetric(6);
  BigUint prod(1);
  for (const auto &l : G.levels()) prod *= l.orbit.size();
  CHECK(prod == G.order());
}

TEST_CASE("membership: odd permutation not in A6") {
  PermGroup A6 = alternating6();
  CHECK(!A6.contains(Perm::from_cycles("(1,2)", 6)));
  CHECK(A6.contains(Perm::from_cycles("(1,2)(3,4)", 6)));
  CHECK(A6.contains(Perm(6)));
  PermGroup S6 = symmetric(6);
  CHECK(S6.contains(Perm::from_cycles("(1,2)", 6)));
}

TEST_CASE("membership of random generator products") {
  PermGroup G = alternating6();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) CHECK(G.contains(G.random_element(rng)));
}

TEST_CASE("bsgs order matches exhaustive closure for assorted small groups") {
  std::vector<PermGroup> groups;
  groups.push_back(symmetric(5));
  groups.push_back(alternating6());
  groups.push_back(PermGroup(8, {Perm::from_cycles("(1,2,3,4,5,6,7,8)", 8),
                                 Perm::from_cycles("(2,8)(3,7)(4,6)", 8)}));  // D16
  groups.push_back(PermGroup(4, {Perm::from_cycles("(1,2)", 4),
                                 Perm::from_cycles("(3,4)", 4)}));
  for (const auto &G : groups) CHECK(G.order_u64() == closure_count(G));
}

TEST_CASE("pointwise stabilizers via base change") {
  PermGroup S6 = symmetric(6);
  CHECK(S6.stabilizer({0}).order_u64() == 120);
  CHECK(S6.stabilizer({0, 1}).order_u64() == 24);
  PermGroup A6 = alternating6();
  CHECK(A6.stabilizer({0}).order_u64() == 60);
  CHECK(A6.stabilizer({0, 1}).order_u64() == 12);  // 360/(6*5)
  CHECK(A6.stabilizer({}).order_u64() == 360);
  // orbit-stabilizer at every point
  for (Point a = 0; a < 6; ++a) {
    auto orb = A6.orbit_of(a);
    CHECK(orb.size() * A6.stabilizer({a}).order_u64() == 360);
  }
}

TEST_CASE("stabilizer members fix the points") {
  PermGroup S6 = symmetric(6);
  PermGroup st = S6.stabilizer({2, 4});
  for (const Perm &g : st.generators()) {
    CHECK(g(2) == 2);
    CHECK(g(4) == 4);
    CHECK(S6.contains(g));
  }
}

TEST_CASE("orbits and transitivity") {
  PermGroup G(6, {Perm::from_cycles("(1,2,3)", 6), Perm::from_cycles("(4,5)", 6)});
  auto orbs = G.orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0].size() == 3);
  CHECK(orbs[1].size() == 2);
  CHECK(orbs[2].size() == 1);
  CHECK(!G.is_transitive());
  CHECK(symmetric(4).is_transitive());
}

TEST_CASE("element_mapping returns a witness") {
  PermGroup A6 = alternating6();
  auto w = A6.element_mapping(0, 4);
  REQUIRE(w.has_value());
  CHECK((*w)(0) == 4);
  CHECK(A6.contains(*w));
}

TEST_CASE("is_normalized and normal closure") {
  PermGroup S4 = symmetric(4);
  PermGroup A4(4, {Perm::from_cycles("(1,2,3)", 4), Perm::from_cycles("(2,3,4)", 4)});
  CHECK(is_normalized(A4, Perm::from_cycles("(1,2)", 4)));
  PermGroup C2(4, {Perm::from_cycles("(1,2)", 4)});
  CHECK(!is_normalized(C2, Perm::from_cycles("(2,3)", 4)));
  PermGroup nc = normal_closure(S4, C2);
  CHECK(nc.order_u64() == 24);  // transpositions generate S4
  PermGroup V(4, {Perm::from_cycles("(1,2)(3,4)", 4)});
  CHECK(normal_closure(S4, V).order_u64() == 4);  // Klein four group
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(symmetric(4)).order_u64() == 12);
  CHECK(derived_subgroup(symmetric(6)).order_u64() == 360);
  PermGroup A6 = alternating6();
  CHECK(derived_subgroup(A6).order_u64() == 360);  // perfect
}

TEST_CASE("stabilizer chain survives forced trivial prefix points") {
  PermGroup G(6, {Perm::from_cycles("(2,3,4)", 6)});
  // point 0 is fixed by everything; prefix must still work
  PermGroup st = G.stabilizer({0});
  CHECK(st.order_u64() == 3);
  PermGroup st2 = G.stabilizer({1});
  CHECK(st2.order_u64() == 1);
}
