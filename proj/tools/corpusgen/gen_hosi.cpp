// PSU(3,5).2 on 50 points as the automorphism group of the Hoffman-Singleton
// graph, built from the five-pentagons / five-pentagrams description:
// P_h = C5 on (h,i), Q_k = pentagram on (k,j), and P_{h,i} ~ Q_{k,j} iff
// j = hk + i (mod 5). Automorphisms are found by backtracking on the very
// rigid srg(50,7,0,1) structure until the full group of order 252000 is
// generated. The lattice is (edge stabilizer, arc stabilizer, vertex
// stabilizer) = (Aut(A6), S6, S7).
#include "common.hpp"

#include "cgt/graph_iso.hpp"

namespace corpusgen {

namespace {

cgt::Graph hosi_graph() {
  cgt::Graph g;
  g.n = 50;
  g.adj.assign(50, {});
  auto P = [](int h, int i) { return 5 * h + ((i % 5) + 5) % 5; };
  auto Q = [](int k, int j) { return 25 + 5 * k + ((j % 5) + 5) % 5; };
  auto link = [&](Point a, Point b) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  };
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i) link(P(h, i), P(h, i + 1));  // pentagons
  for (int k = 0; k < 5; ++k)
    for (int j = 0; j < 5; ++j) link(Q(k, j), Q(k, j + 2));  // pentagrams
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) link(P(h, i), Q(k, (h * k + i) % 5));
  for (auto &row : g.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

// Backtracking automorphism search on a graph whose vertices are processed
// in BFS order; prescribe images for a prefix and complete greedily.
struct AutoSearch {
  const cgt::Graph &g;
  std::vector<Point> order;  // BFS vertex order

  explicit AutoSearch(const cgt::Graph &graph) : g(graph) {
    std::vector<bool> seen(g.n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Point v : g.adj[order[i]])
        if (!seen[v]) { seen[v] = true; order.push_back(v); }
  }

  bool consistent(const std::vector<std::int64_t> &img, Point v, Point w) const {
    for (Point u : g.adj[v]) {
      if (img[u] == -1) continue;
      if (!g.adjacent(w, static_cast<Point>(img[u]))) return false;
    }
    // non-adjacency must be preserved too (same degree everywhere)
    for (Point u = 0; u < g.n; ++u) {
      if (img[u] == -1 || u == v) continue;
      bool a1 = g.adjacent(u, v), a2 = g.adjacent(static_cast<Point>(img[u]), w);
      if (a1 != a2) return false;
    }
    return true;
  }

  bool extend(std::vector<std::int64_t> &img, std::vector<bool> &used,
              std::size_t pos) const {
    if (pos == order.size()) return true;
    Point v = order[pos];
    if (img[v] != -1) return extend(img, used, pos + 1);
    for (Point w = 0; w < g.n; ++w) {
      if (used[w]) continue;
      if (!consistent(img, v, w)) continue;
      img[v] = w;
      used[w] = true;
      if (extend(img, used, pos + 1)) return true;
      img[v] = -1;
      used[w] = false;
    }
    return false;
  }

  // automorphism with the given partial assignments, if any
  std::optional<Perm> find(const std::vector<std::pair<Point, Point>> &pins) const {
    std::vector<std::int64_t> img(g.n, -1);
    std::vector<bool> used(g.n, false);
    for (auto [v, w] : pins) {
      if (img[v] != -1 || used[w]) return std::nullopt;
      if (!consistent(img, v, w)) return std::nullopt;
      img[v] = w;
      used[w] = true;
    }
    if (!extend(img, used, 0)) return std::nullopt;
    std::vector<Point> final(g.n);
    for (Point v = 0; v < g.n; ++v) final[v] = static_cast<Point>(img[v]);
    return Perm::from_images(final);
  }
};

}  // namespace

void gen_hosi(const std::filesystem::path &out) {
  cgt::Graph g = hosi_graph();
  cgt::GraphInvariants inv = basic_invariants(g);
  if (g.n != 50 || inv.size != 175 || !inv.regular || inv.valency != 7 ||
      inv.girth != 5)
    throw Error("Hoffman-Singleton construction is wrong");
  // srg(50,7,0,1): adjacent vertices share 0 neighbors, others exactly 1
  for (Point u = 0; u < g.n; ++u)
    for (Point v = u + 1; v < g.n; ++v) {
      int common = 0;
      for (Point x : g.adj[u])
        if (g.adjacent(v, x)) ++common;
      if (common != (g.adjacent(u, v) ? 0 : 1))
        throw Error("srg(50,7,0,1) parameters violated");
    }

  AutoSearch search(g);
  std::vector<Perm> auto_gens;
  PermGroup aut = PermGroup::trivial(50);
  BigUint target(252000);
  auto add = [&](const Perm &p) {
    if (aut.contains(p)) return;
    auto_gens.push_back(p);
    aut = PermGroup(50, auto_gens);
  };
  // vertex-transitivity witnesses, then stabilizer refinements on 0 and its
  // first neighbor until the full order is reached
  for (Point w = 1; w < 50 && aut.order() < target; ++w) {
    auto orb = aut.orbit_of(0);
    if (std::find(orb.begin(), orb.end(), w) != orb.end()) continue;
    auto p = search.find({{0, w}});
    if (!p) throw Error("graph is not vertex-transitive?");
    add(*p);
  }
  Point n0 = g.adj[0][0];
  for (Point w : g.adj[0]) {
    if (aut.order() == target) break;
    auto p = search.find({{0, 0}, {n0, w}});
    if (p) add(*p);
  }
  for (Point w : g.adj[n0]) {
    if (aut.order() == target) break;
    auto p = search.find({{0, 0}, {n0, n0}, {g.adj[n0][0] == 0 ? g.adj[n0][1] : g.adj[n0][0], w}});
    if (p) add(*p);
  }
  // second-level neighbor refinements if still short
  for (Point w = 0; w < 50 && aut.order() < target; ++w) {
    for (Point v = 0; v < 50 && aut.order() < target; ++v) {
      auto p = search.find({{0, 0}, {n0, n0}, {v, w}});
      if (p) add(*p);
    }
  }
  if (!(aut.order() == target))
    throw Error("automorphism group has order " + aut.order().to_decimal() +
                ", expected 252000");
  PermGroup socle = cgt::derived_subgroup(aut);
  if (!(socle.order() == BigUint(126000)))
    throw Error("derived subgroup is not PSU(3,5)");
  check_simple_spot(socle);
  std::cout << "Aut of the Hoffman-Singleton graph: order 252000 confirmed\n";

  PermGroup G(50, reduce_generators(50, auto_gens, target));

  // H = vertex stabilizer (S7), A = arc stabilizer (S6), E = <A, edge swap>
  PermGroup H = G.stabilizer({0});
  if (!(H.order() == BigUint(5040))) throw Error("vertex stabilizer is not S7");
  PermGroup A = G.stabilizer({0, n0});
  if (!(A.order() == BigUint(720))) throw Error("arc stabilizer is not S6");
  // find a swap of the base edge via the orbit of the ordered pair
  std::optional<Perm> swap;
  {
    std::vector<std::int64_t> via(50 * 50, -1);
    std::vector<Point> parent(50 * 50, 0);
    auto idx = [&](Point a, Point b) { return static_cast<std::size_t>(a) * 50 + b; };
    std::vector<std::pair<Point, Point>> q{{0, n0}};
    via[idx(0, n0)] = -2;
    for (std::size_t i = 0; i < q.size() && !swap; ++i)
      for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
        Point a = G.generators()[gi](q[i].first), b = G.generators()[gi](q[i].second);
        if (via[idx(a, b)] != -1) continue;
        via[idx(a, b)] = static_cast<std::int64_t>(gi);
        parent[idx(a, b)] = static_cast<Point>(idx(q[i].first, q[i].second));
        q.emplace_back(a, b);
        if (a == n0 && b == 0) {
          // walk back composing generators
          Perm w(50);
          std::size_t cur = idx(a, b);
          std::vector<std::size_t> path;
          while (via[cur] != -2) {
            path.push_back(static_cast<std::size_t>(via[cur]));
            cur = parent[cur];
          }
          for (std::size_t k = path.size(); k-- > 0;) w = w * G.generators()[path[k]];
          swap = w;
        }
      }
  }
  if (!swap) throw Error("no automorphism swaps the base edge");
  std::vector<Perm> egens = A.generators();
  egens.push_back(*swap);
  PermGroup E(50, egens);
  if (!(E.order() == BigUint(1440))) throw Error("edge stabilizer is not Aut(A6)");
  E = PermGroup(50, reduce_generators(50, egens, BigUint(1440)));
  PermGroup A2(50, reduce_generators(50, A.generators(), BigUint(720)));
  PermGroup H2(50, reduce_generators(50, H.generators(), BigUint(5040)));

  cgt::Lattice L{G, E, A2, H2, "hoffman_singleton", "G"};
  VerifiedLattice v = analyze_lattice(L);
  if (v.graph.n != 50 || v.graph.adj[0].size() != 7 || v.inv.girth != 5 ||
      v.sarc.max_s != 3 || !v.edge_primitive || !v.vertex_primitive ||
      !v.local_two_transitive)
    throw Error("Hoffman-Singleton lattice does not match its pinned facts");
  if (!cgt::isomorphic(v.graph, g))
    throw Error("coset graph is not the Hoffman-Singleton graph itself");
  std::cout << "Hoffman-Singleton lattice verified: 50 vertices, valency 7, max_s = 3\n";

  cgt::CatalogEntry entry;
  entry.name = "psu3_5_2";
  entry.degree = 50;
  entry.generators = cycle_strings(G.generators());
  entry.claimed_order = target;
  entry.metadata["description"] =
      "PSU(3,5).2 as the automorphism group of the Hoffman-Singleton graph";
  entry.metadata["socle"] = "PSU3(5)";
  entry.metadata["almost_simple"] = true;
  entry.metadata["source"] =
      "automorphisms of the five-pentagons five-pentagrams model, found by "
      "backtracking";
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "hosi_E", "E", cycle_strings(E.generators()), BigUint(1440), "Aut(A6)"});
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "hosi_A", "A", cycle_strings(A2.generators()), BigUint(720), "S6"});
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "hosi_H", "H", cycle_strings(H2.generators()), BigUint(5040), "S7"});
  write_json(out / "groups" / "psu3_5_2.json", entry.to_json());

  cgt::LatticeFile f;
  f.name = "hoffman_singleton";
  f.group_ref = "psu3_5_2";
  f.e_ref = "hosi_E";
  f.a_ref = "hosi_A";
  f.h_ref = "hosi_H";
  f.s_label = "G";
  f.expected = expected_block(v);
  f.notes = "the Hoffman-Singleton graph";
  write_json(out / "lattices" / "hoffman_singleton.json", f.to_json());
}

}  // namespace corpusgen
