#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/coset_graph.hpp"
#include "cgt/graph_props.hpp"
#include "cgt/lattice.hpp"
#include "oracles.hpp"

using namespace cgt;

namespace {

PermGroup s4() {
  return PermGroup(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3,4)", 4)});
}
PermGroup s5() {
  return PermGroup(5, {Perm::from_cycles("(1,2)", 5), Perm::from_cycles("(1,2,3,4,5)", 5)});
}

Graph k4_with_action() {
  PermGroup H(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3)", 4)});
  return build_graph(s4(), H, Perm::from_cycles("(3,4)", 4));
}

// Petersen graph as the Kneser graph K(5,2) with the induced S5 action.
Graph petersen() {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < 5; ++a)
    for (Point b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  auto index_of = [&](Point a, Point b) {
    if (a > b) std::swap(a, b);
    for (Point i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(a, b)) return i;
    throw Error("pair not found");
  };
  Graph g;
  g.n = 10;
  g.adj.assign(10, {});
  for (Point i = 0; i < 10; ++i)
    for (Point j = 0; j < 10; ++j) {
      if (i == j) continue;
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.adj[i].push_back(j);
    }
  for (auto &row : g.adj) std::sort(row.begin(), row.end());
  PermGroup g5 = s5();
  for (const Perm &p : g5.generators()) {
    std::vector<Point> img(10);
    for (Point i = 0; i < 10; ++i) img[i] = index_of(p(pairs[i].first), p(pairs[i].second));
    g.action.push_back(Perm::from_images(std::move(img)));
  }
  g.connected = true;
  return g;
}

Graph cycle(Point n) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (Point i = 0; i < n; ++i) {
    g.adj[i].push_back((i + 1) % n);
    g.adj[i].push_back((i + n - 1) % n);
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  g.connected = true;
  return g;
}

Graph complete_bipartite(Point a, Point b) {
  Graph g;
  g.n = a + b;
  g.adj.assign(g.n, {});
  for (Point i = 0; i < a; ++i)
    for (Point j = 0; j < b; ++j) {
      g.adj[i].push_back(a + j);
      g.adj[a + j].push_back(i);
    }
  for (auto &row : g.adj) std::sort(row.begin(), row.end());
  g.connected = true;
  return g;
}

}  // namespace

TEST_CASE("basic invariants: K4") {
  GraphInvariants inv = basic_invariants(k4_with_action());
  CHECK(inv.order == 4);
  CHECK(inv.size == 6);
  CHECK(inv.girth == 3);
  CHECK(inv.complete);
  CHECK(!inv.bipartite);
  CHECK(inv.regular);
  CHECK(inv.valency == 3);
}

TEST_CASE("basic invariants: cycles, trees, complete bipartite") {
  GraphInvariants c6 = basic_invariants(cycle(6));
  CHECK(c6.girth == 6);
  CHECK(c6.bipartite);
  CHECK(!c6.complete);
  GraphInvariants c5 = basic_invariants(cycle(5));
  CHECK(c5.girth == 5);
  CHECK(!c5.bipartite);

  Graph path;  // 0-1-2: a tree has infinite girth
  path.n = 3;
  path.adj = {{1}, {0, 2}, {1}};
  GraphInvariants p = basic_invariants(path);
  CHECK(p.girth == GraphInvariants::kInfiniteGirth);
  CHECK(!p.regular);
  CHECK(p.connected);

  GraphInvariants k33 = basic_invariants(complete_bipartite(3, 3));
  CHECK(k33.complete_bipartite);
  CHECK(k33.bipartite);
  CHECK(k33.girth == 4);
  CHECK(k33.size == 9);

  GraphInvariants pet = basic_invariants(petersen());
  CHECK(pet.order == 10);
  CHECK(pet.size == 15);
  CHECK(pet.girth == 5);
  CHECK(pet.regular);
  CHECK(pet.valency == 3);
  CHECK(!pet.bipartite);
}

TEST_CASE("edge action consistency and corrupt input detection") {
  Graph g = k4_with_action();
  EdgeAction ea = edge_action(g);
  CHECK(ea.degree == 6);
  // corrupt the action: a non-automorphism permutation
  Graph bad = cycle(4);
  bad.action.push_back(Perm::from_cycles("(1,2)", 4));  // swaps 0,1: 0-2 edge image 1-2? ok..
  bad.action.back() = Perm::from_cycles("(2,3)", 4);    // maps edge {0,1} to {0,2}: non-edge in C4
  CHECK_THROWS_WITH_AS(edge_action(bad), doctest::Contains("non-edge"), Error);
}

TEST_CASE("edge-primitivity: K5 with A5 yes, Petersen with S5 no") {
  PermGroup a5(5, {Perm::from_cycles("(1,2,3,4,5)", 5), Perm::from_cycles("(1,2,3)", 5)});
  auto found = find_lattices(a5);
  Graph k5;
  bool built = false;
  for (auto &fl : found)
    if (fl.nontrivial) {
      k5 = build_from_lattice(Lattice{a5, fl.E, fl.A, fl.H, "k5", ""});
      built = true;
    }
  REQUIRE(built);
  CHECK(is_edge_primitive(k5));

  Graph pet = petersen();
  CHECK(is_edge_transitive(pet));
  CHECK(!is_edge_primitive(pet));
  // a block system on the 15 edges witnesses imprimitivity
  EdgeAction ea = edge_action(pet);
  auto pr = check_primitive(static_cast<Point>(ea.degree), ea.gen_images);
  CHECK(pr.transitive);
  REQUIRE(pr.witness.has_value());
  CHECK(pr.witness->block_count > 1);
  CHECK(pr.witness->block_count < 15);
}

TEST_CASE("s-arc transitivity: K4 under S4 is sharply 2-arc-transitive") {
  SArcResult r = s_arc_transitivity(k4_with_action());
  CHECK(r.max_s == 2);
  REQUIRE(r.stabilizer_orders.size() >= 3);
  CHECK(r.stabilizer_orders[0] == BigUint(6));  // vertex stabilizer
  CHECK(r.stabilizer_orders[1] == BigUint(2));  // arc stabilizer
  CHECK(r.stabilizer_orders[2] == BigUint(1));  // 2-arc stabilizer
  CHECK(oracle::brute_max_s(k4_with_action()) == 2);
}

TEST_CASE("s-arc transitivity: Petersen under S5 is sharply 3-arc-transitive") {
  SArcResult r = s_arc_transitivity(petersen());
  CHECK(r.max_s == 3);
  CHECK(r.stabilizer_orders[3] == BigUint(1));
  CHECK(oracle::brute_max_s(petersen()) == 3);
  // s-arc counts: 10 * 3 * 2^(s-1)
  CHECK(r.arc_counts[1] == BigUint(30));
  CHECK(r.arc_counts[2] == BigUint(60));
  CHECK(r.arc_counts[3] == BigUint(120));
  CHECK(oracle::count_s_arcs(petersen(), 3) == 120);
}

TEST_CASE("s-arc analysis rejects valency 2 and missing actions") {
  CHECK_THROWS_AS(s_arc_transitivity(cycle(6)), Error);
  Graph g = k4_with_action();
  g.action.clear();
  CHECK_THROWS_AS(s_arc_transitivity(g), Error);
}

TEST_CASE("local action: K4 has faithful 2-transitive S3 on the neighbors") {
  LocalAction la = local_action(k4_with_action(), 0);
  CHECK(la.stabilizer_order == BigUint(6));
  CHECK(la.induced_order == BigUint(6));
  CHECK(la.kernel_order == BigUint(1));
  CHECK(la.faithful);
  CHECK(la.two_transitive);
}

TEST_CASE("local action: Petersen has kernel of order 2") {
  LocalAction la = local_action(petersen(), 0);
  CHECK(la.stabilizer_order == BigUint(12));
  CHECK(la.induced_order == BigUint(6));
  CHECK(la.kernel_order == BigUint(2));
  CHECK(!la.faithful);
  CHECK(la.two_transitive);
}

TEST_CASE("local 2-transitivity matches 2-arc-transitivity for arc-transitive graphs") {
  for (const Graph &g : {k4_with_action(), petersen()}) {
    LocalAction la = local_action(g, 0);
    SArcResult r = s_arc_transitivity(g);
    CHECK(la.two_transitive == (r.max_s >= 2));
  }
}
