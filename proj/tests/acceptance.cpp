// Acceptance suite: one line per criterion, every tolerance pinned here.
// Exact integer equality throughout; time budgets are part of the criteria.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#include "cgt/catalog.hpp"
#include "cgt/coset_graph.hpp"
#include "cgt/graph_iso.hpp"
#include "cgt/graph_props.hpp"
#include "cgt/reproduce.hpp"
#include "cgt/subgroups.hpp"
#include "oracles.hpp"

using namespace cgt;

namespace {

int failures = 0;

struct Criterion {
  std::string id;
  double budget_s;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  std::string note;

  Criterion(std::string id_, double budget) : id(std::move(id_)), budget_s(budget) {
    start = std::chrono::steady_clock::now();
  }
  void require(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
  void finish(const std::string &summary) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (secs > budget_s) {
      ok = false;
      note += (note.empty() ? "" : "; ") + std::string("over budget: ") +
              std::to_string(secs) + "s > " + std::to_string(budget_s) + "s";
    }
    if (!ok) ++failures;
    std::printf("%s %s: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", id.c_str(),
                summary.c_str(), secs, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
  }
};

Catalog open_catalog() {
  if (const char *env = std::getenv("CATALOG_DIR")) return Catalog(env);
  return Catalog(CGT_SOURCE_CATALOG_DIR);
}

std::string row_name(int r) {
  return "table2_row" + std::string(r < 10 ? "0" : "") + std::to_string(r);
}

struct RowFacts {
  Graph graph;
  GraphInvariants inv;
};

}  // namespace

int main() {
  Catalog cat = open_catalog();
  std::map<int, RowFacts> rows;

  // ---- criterion 1: the eleven soc(A6) lattices from scratch, <= 5 min ----
  {
    Criterion c("criterion-1 (soc(A6) table search)", 300);
    const std::map<std::string, std::vector<std::array<std::uint64_t, 3>>> want = {
        {"a6", {{24, 12, 60}}},
        {"s6", {{48, 24, 120}}},
        {"m10", {{20, 10, 60}, {16, 8, 24}, {16, 8, 72}}},
        {"pgl2_9", {{20, 10, 60}, {16, 8, 24}, {16, 8, 72}}},
        {"aut_a6", {{40, 20, 120}, {32, 16, 48}, {32, 16, 144}}}};
    std::size_t total = 0;
    for (const auto &[gname, triples] : want) {
      const LoadedGroup &lg = cat.group(gname);
      const PermGroup *over = nullptr;
      if (auto ov = lg.entry.aut_overgroup()) over = &cat.group(*ov).group;
      std::vector<FoundLattice> found = find_lattices(lg.group, over);
      std::vector<std::array<std::uint64_t, 3>> got;
      for (const FoundLattice &fl : found)
        if (fl.nontrivial) got.push_back({fl.e_order, fl.a_order, fl.h_order});
      total += got.size();
      auto sorted_w = triples, sorted_g = got;
      std::sort(sorted_w.begin(), sorted_w.end());
      std::sort(sorted_g.begin(), sorted_g.end());
      c.require(sorted_w == sorted_g, gname + ": (|E|,|A|,|H|) triples differ");
    }
    c.require(total == 11, "found " + std::to_string(total) + " lattices, want 11");
    c.finish("five searches, 11 lattices with the stated E/A/H orders");
  }

  // shared: build the eleven row graphs once
  for (int r = 1; r <= 11; ++r) {
    Graph g = build_from_lattice(cat.lattice(row_name(r)));
    GraphInvariants inv = basic_invariants(g);
    rows.emplace(r, RowFacts{std::move(g), inv});
  }

  // ---- criterion 2: the valency-3 graph of Construction 1, <= 10 s -------
  {
    Criterion c("criterion-2 (valency-3 cage rows)", 10);
    const RowFacts &r10 = rows.at(10);
    c.require(r10.graph.n == 30, "order != 30");
    c.require(r10.graph.edge_count() == 45, "size != 45");
    c.require(r10.graph.adj[0].size() == 3, "valency != 3");
    c.require(r10.inv.girth == 8, "girth != 8");
    c.require(r10.inv.bipartite, "not bipartite");
    c.require(is_edge_primitive(r10.graph), "not edge-primitive");
    c.require(is_biprimitive(r10.graph.n, r10.graph.action), "not vertex-biprimitive");
    SArcResult s = s_arc_transitivity(r10.graph);
    c.require(s.max_s == 5, "max_s != 5 under Aut(A6)");
    c.require(isomorphic(rows.at(4).graph, rows.at(7).graph), "rows 4,7 not isomorphic");
    c.require(isomorphic(rows.at(4).graph, rows.at(10).graph), "rows 4,10 not isomorphic");
    c.require(isomorphic(rows.at(7).graph, rows.at(10).graph), "rows 7,10 not isomorphic");
    c.finish("30/45/3/8 bipartite, edge-primitive, biprimitive, max_s = 5, rows 4=7=10");
  }

  // ---- criterion 3: the order-30 valency-7 graph over S8, <= 10 s --------
  {
    Criterion c("criterion-3 (order-30 valency-7 graph)", 10);
    Graph g = build_from_lattice(cat.lattice("gamma1"));
    GraphInvariants inv = basic_invariants(g);
    c.require(g.n == 30, "order != 30");
    c.require(g.adj[0].size() == 7, "valency != 7");
    c.require(inv.bipartite, "not bipartite");
    c.require(inv.girth == 4, "girth != 4");
    c.require(local_action(g, 0).two_transitive, "local action not 2-transitive");
    c.require(is_edge_primitive(g), "not edge-primitive");
    SArcResult s = s_arc_transitivity(g);
    c.require(s.max_s == 2, "max_s != 2");
    c.finish("30/7 bipartite girth 4, 2-transitive local action, max_s = 2");
  }

  // ---- criterion 4: complete and complete-bipartite rows, <= 10 s --------
  {
    Criterion c("criterion-4 (complete rows)", 10);
    for (int r : {1, 2})
      c.require(rows.at(r).inv.complete && rows.at(r).graph.n == 6,
                row_name(r) + " is not K6");
    for (int r : {5, 8, 11})
      c.require(rows.at(r).inv.complete && rows.at(r).graph.n == 10,
                row_name(r) + " is not K10");
    for (int r : {3, 6, 9})
      c.require(rows.at(r).inv.complete_bipartite && rows.at(r).graph.n == 12,
                row_name(r) + " is not K6,6");
    c.finish("rows 1-2 K6; rows 5,8,11 K10; rows 3,6,9 K6,6 by the flags");
  }

  // ---- criterion 5: the 440-vertex valency-4 graph, <= 1 min -------------
  {
    Criterion c("criterion-5 (M12.2 graph)", 60);
    Graph g = build_from_lattice(cat.lattice("m12_2_weiss"));
    c.require(g.n == 440, "order != 440");
    c.require(g.adj[0].size() == 4, "valency != 4");
    c.require(is_edge_primitive(g), "not edge-primitive");
    SArcResult s = s_arc_transitivity(g);
    c.require(s.max_s >= 3, "max_s < 3");
    c.finish("440/4 edge-primitive, max_s = " + std::to_string(s.max_s));
  }

  // ---- criterion 6: the 1045-vertex valency-8 graph, <= 2 min ------------
  {
    Criterion c("criterion-6 (J1 graph)", 120);
    Graph g = build_from_lattice(cat.lattice("j1"));
    c.require(g.n == 1045, "order != 1045");
    c.require(g.adj[0].size() == 8, "valency != 8");
    c.require(is_edge_primitive(g), "not edge-primitive");
    SArcResult s = s_arc_transitivity(g);
    c.require(s.max_s == 2, "max_s != 2");
    c.require(s.stabilizer_orders.size() > 2 &&
                  s.stabilizer_orders[2] == BigUint(3),
              "2-arc stabilizer order != 3");
    c.finish("1045/8 edge-primitive, max_s = 2, 2-arc stabilizer of order 3");
  }

  // ---- criterion 7: the Hoffman-Singleton graph, <= 1 min ----------------
  {
    Criterion c("criterion-7 (Hoffman-Singleton)", 60);
    const LoadedGroup &lg = cat.group("psu3_5_2");
    c.require(lg.entry.claimed_order == BigUint(252000), "group order != 252000");
    Graph g = build_from_lattice(cat.lattice("hoffman_singleton"));
    GraphInvariants inv = basic_invariants(g);
    c.require(g.n == 50, "order != 50");
    c.require(g.adj[0].size() == 7, "valency != 7");
    c.require(inv.girth == 5, "girth != 5");
    c.require(is_edge_primitive(g), "not edge-primitive");
    SArcResult s = s_arc_transitivity(g);
    c.require(s.max_s >= 3, "max_s < 3");
    c.finish("50/7 girth 5 edge-primitive, max_s = " + std::to_string(s.max_s) +
             ", |G| = 252000");
  }

  // ---- criterion 8: J3.2, stretch -----------------------------------------
  {
    // No generator data for J3.2 could be derived from first principles in
    // this toolkit, so the 17442-vertex graph is not constructed. The
    // criterion allows a downgrade to SKIPPED rather than FAIL; the catalog
    // records the expected shape (17442 vertices, valency 5) and the index
    // arithmetic.
    LatticeFile lf = cat.lattice_file("j3_2_weiss");
    bool recorded = lf.non_constructible &&
                    lf.expected["order"].get<std::uint64_t>() == 17442 &&
                    lf.expected["valency"].get<std::uint64_t>() == 5;
    std::printf("%s criterion-8 (J3.2 graph, stretch): no generator data shipped; "
                "expected 17442/5 recorded in the catalog\n",
                recorded ? "SKIPPED" : "FAIL");
    if (!recorded) ++failures;
    std::fflush(stdout);
  }

  // ---- criterion 9: deliberately out-of-scale targets report SKIPPED -----
  {
    Criterion c("criterion-9 (out-of-scale targets)", 120);
    Reproducer rep(cat);
    auto all = rep.run_all();
    for (const char *t : {"ru", "on_2", "psl6_family", "psu6_family",
                          "pomega10_minus_7"}) {
      bool found = false;
      for (const auto &man : all) {
        if (man.target != t) continue;
        found = true;
        c.require(man.verdict() == "SKIPPED", std::string(t) + " not SKIPPED");
        bool arithmetic = false;
        for (const auto &ck : man.checks)
          if (ck.name == "index arithmetic" && !ck.actual.empty()) arithmetic = true;
        c.require(arithmetic, std::string(t) + " lacks index arithmetic");
      }
      c.require(found, std::string(t) + " missing from the manifest");
    }
    for (const auto &man : all) {
      if (man.target == "ru")
        for (const auto &ck : man.checks)
          if (ck.name == "index arithmetic")
            c.require(ck.actual.find("12160512") != std::string::npos,
                      "Ru index arithmetic wrong");
      if (man.target == "on_2")
        for (const auto &ck : man.checks)
          if (ck.name == "index arithmetic")
            c.require(ck.actual.find("365726592") != std::string::npos,
                      "O'N.2 index arithmetic wrong");
    }
    c.finish("Ru, O'N.2 and the classical families are SKIPPED with the index shown");
  }

  // ---- criterion 10: oracle equivalence suites, exact ---------------------
  {
    Criterion c("criterion-10a (orders vs exhaustive enumeration)", 300);
    std::mt19937_64 rng(505);
    std::vector<std::string> pool = {"a5", "a6", "s6", "m10", "pgl2_9", "aut_a6"};
    for (int i = 0; i < 50; ++i) {
      const LoadedGroup &lg = cat.group(pool[i % pool.size()]);
      std::vector<Perm> gens;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) gens.push_back(lg.group.random_element(rng));
      PermGroup H(lg.group.degree(), gens);
      c.require(H.order_u64() == oracle::closure_order(H),
                "order mismatch on random subgroup " + std::to_string(i));
    }
    c.finish("50 random subgroups: Schreier-Sims order == closure count");
  }
  {
    Criterion c("criterion-10b (primitivity vs partition scan)", 300);
    for (const char *name :
         {"a5", "a6", "s6", "m10", "pgl2_9", "aut_a6", "s8", "a8"}) {
      const LoadedGroup &lg = cat.group(name);
      if (lg.entry.degree > 12 || !lg.group.is_transitive()) continue;
      c.require(is_primitive(lg.group) == oracle::brute_primitive(lg.group),
                std::string(name) + ": primitivity disagrees");
      c.require(is_biprimitive(lg.group) == oracle::brute_biprimitive(lg.group),
                std::string(name) + ": biprimitivity disagrees");
    }
    // and on the vertex actions of the corpus graphs within the degree cap
    for (int r : {3, 5, 9, 11}) {
      const Graph &g = rows.at(r).graph;
      if (g.n > 12) continue;
      PermGroup img(g.n, g.action);
      c.require(is_primitive(img) == oracle::brute_primitive(img),
                row_name(r) + " vertex action: primitivity disagrees");
      c.require(is_biprimitive(img) == oracle::brute_biprimitive(img),
                row_name(r) + " vertex action: biprimitivity disagrees");
    }
    c.finish("primitive/biprimitive == brute force over all partitions, degree <= 12");
  }
  {
    Criterion c("criterion-10c (s-arc levels vs orbit on tuples)", 300);
    for (int r = 1; r <= 11; ++r) {
      const Graph &g = rows.at(r).graph;
      if (g.n > 30) continue;
      SArcResult s = s_arc_transitivity(g);
      std::uint32_t lib = std::min<std::uint32_t>(s.max_s, 5);
      c.require(lib == oracle::brute_max_s(g, 5), row_name(r) + ": max_s disagrees");
    }
    Graph g1 = build_from_lattice(cat.lattice("gamma1"));
    SArcResult s1 = s_arc_transitivity(g1);
    c.require(std::min<std::uint32_t>(s1.max_s, 5) == oracle::brute_max_s(g1, 5),
              "gamma1: max_s disagrees");
    c.finish("max_s == brute orbit computation on explicit tuples, s <= 5");
  }
  {
    Criterion c("criterion-10d (maximality vs intermediate subgroups)", 300);
    const LoadedGroup &lg = cat.group("aut_a6");
    SmallGroupContext ctx(lg.group);
    std::size_t tested = 0;
    for (const SubgroupClass &cls : ctx.subgroup_classes()) {
      if (cls.order == 1440 || cls.order < 8) continue;
      PermGroup H = ctx.to_perm_group(cls.rep);
      c.require(is_maximal(lg.group, H) == oracle::brute_maximal(lg.group, H),
                "maximality disagrees for a subgroup of order " +
                    std::to_string(cls.order));
      ++tested;
    }
    c.require(tested >= 20, "too few subgroup classes tested");
    c.finish("coset-action maximality == exhaustive intermediate search (" +
             std::to_string(tested) + " classes of Aut(A6))");
  }
  {
    Criterion c("criterion-10e (g-independence over E \\ A)", 300);
    for (int r = 1; r <= 11; ++r) {
      Lattice L = cat.lattice(row_name(r));
      Graph ref = build_from_lattice(L);
      std::size_t count = 0;
      for (const Perm &e : detail::subgroup_elements(L.E)) {
        if (L.A.contains(e)) continue;
        ++count;
        Graph g = build_graph(L.G, L.H, e);
        c.require(g.adj == ref.adj, row_name(r) + ": adjacency depends on g");
      }
      c.require(count == L.E.order_u64() - L.A.order_u64(),
                row_name(r) + ": wrong |E \\ A| count");
    }
    c.finish("bit-identical adjacency for every g in E \\ A, all eleven rows");
  }

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria pass"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
