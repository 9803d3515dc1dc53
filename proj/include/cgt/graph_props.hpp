#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cgt/blocks.hpp"
#include "cgt/coset_graph.hpp"
#include "cgt/group.hpp"

namespace cgt {

struct GraphInvariants {
  Point order = 0;
  std::uint64_t size = 0;  // edge count
  bool connected = false;
  bool regular = false;
  Point valency = 0;           // meaningful when regular
  bool bipartite = false;
  std::uint64_t girth = 0;     // 0 encodes infinity (forest)
  bool complete = false;
  bool complete_bipartite = false;

  static constexpr std::uint64_t kInfiniteGirth = 0;
};

inline GraphInvariants basic_invariants(const Graph &g) {
  GraphInvariants inv;
  inv.order = g.n;
  inv.size = g.edge_count();
  inv.connected = detail::bfs_connected(g);

  inv.regular = true;
  inv.valency = g.n ? static_cast<Point>(g.adj[0].size()) : 0;
  for (Point u = 0; u < g.n; ++u)
    if (g.adj[u].size() != inv.valency) { inv.regular = false; break; }

  // 2-coloring for bipartiteness (per component)
  std::vector<std::int8_t> color(g.n, -1);
  inv.bipartite = true;
  std::uint64_t side0 = 0, side1 = 0;
  for (Point s = 0; s < g.n && inv.bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Point> q{s};
    for (std::size_t i = 0; i < q.size() && inv.bipartite; ++i)
      for (Point v : g.adj[q[i]]) {
        if (color[v] == -1) {
          color[v] = static_cast<std::int8_t>(1 - color[q[i]]);
          q.push_back(v);
        } else if (color[v] == color[q[i]]) {
          inv.bipartite = false;
          break;
        }
      }
  }
  if (inv.bipartite)
    for (Point u = 0; u < g.n; ++u) (color[u] == 0 ? side0 : side1) += 1;

  // girth: BFS from every vertex, shortest cycle through the root
  std::uint64_t best = UINT64_MAX;
  std::vector<std::int64_t> dist(g.n);
  std::vector<Point> parent(g.n);
  for (Point r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<Point> q{r};
    dist[r] = 0;
    parent[r] = r;
    for (std::size_t i = 0; i < q.size(); ++i) {
      Point u = q[i];
      if (static_cast<std::uint64_t>(dist[u]) * 2 >= best) break;
      for (Point v : g.adj[u]) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          best = std::min<std::uint64_t>(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  inv.girth = best == UINT64_MAX ? GraphInvariants::kInfiniteGirth : best;

  inv.complete =
      g.n >= 2 && inv.size == static_cast<std::uint64_t>(g.n) * (g.n - 1) / 2;
  inv.complete_bipartite =
      inv.bipartite && inv.connected && g.n >= 2 && inv.size == side0 * side1;
  return inv;
}

// The induced permutations of the sorted edge list, one per attached action
// generator. Throws if some generator maps an edge to a non-edge.
struct EdgeAction {
  std::uint64_t degree = 0;  // |E(Γ)|
  std::vector<std::pair<Point, Point>> edges;
  std::vector<Perm> gen_images;
};

inline EdgeAction edge_action(const Graph &g) {
  if (g.action.empty()) throw Error("graph carries no action");
  EdgeAction ea;
  ea.edges = g.edges();
  ea.degree = ea.edges.size();
  std::unordered_map<std::uint64_t, Point> index;
  index.reserve(ea.edges.size() * 2);
  auto key = [&](Point a, Point b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (Point i = 0; i < ea.edges.size(); ++i)
    index.emplace(key(ea.edges[i].first, ea.edges[i].second), i);
  for (const Perm &p : g.action) {
    std::vector<Point> img(ea.degree);
    for (Point i = 0; i < ea.degree; ++i) {
      auto it = index.find(key(p(ea.edges[i].first), p(ea.edges[i].second)));
      if (it == index.end()) throw Error("action maps an edge to a non-edge");
      img[i] = it->second;
    }
    ea.gen_images.push_back(Perm::from_images(std::move(img)));
  }
  return ea;
}

// Edge-primitivity: the induced action on edges is transitive and primitive.
inline bool is_edge_primitive(const Graph &g) {
  EdgeAction ea = edge_action(g);
  PrimitivityResult pr =
      check_primitive(static_cast<Point>(ea.degree), ea.gen_images);
  return pr.transitive && pr.primitive;
}

inline bool is_edge_transitive(const Graph &g) {
  EdgeAction ea = edge_action(g);
  if (ea.degree == 0) return true;
  std::vector<bool> seen(ea.degree, false);
  std::vector<Point> q{0};
  seen[0] = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const Perm &p : ea.gen_images) {
      Point y = p(q[i]);
      if (!seen[y]) { seen[y] = true; q.push_back(y); }
    }
  return q.size() == ea.degree;
}

// The vertex action of the graph as a group in its own right.
inline PermGroup action_group(const Graph &g) {
  if (g.action.empty()) throw Error("graph carries no action");
  return PermGroup(g.n, g.action);
}

struct SArcResult {
  std::uint32_t max_s = 0;
  std::vector<Point> canonical_arc;           // the lexicographically least max_s-arc
  std::vector<BigUint> stabilizer_orders;     // index s: pointwise stabilizer of the s-arc prefix
  std::vector<BigUint> arc_counts;            // index s: n * d * (d-1)^(s-1) for s >= 1
};

// Largest s with (G,s)-arc-transitivity, by the iterative criterion:
// arc-transitivity first, then at each level the pointwise stabilizer of the
// canonical s-arc must be transitive on the valid one-step extensions.
// At every certified level, |G| must equal (s-arc count) * (stabilizer
// order); that identity is asserted.
inline SArcResult s_arc_transitivity(const Graph &g, std::uint32_t s_limit = 24) {
  if (g.action.empty()) throw Error("graph carries no action");
  if (!detail::bfs_connected(g)) throw Error("s-arc analysis requires a connected graph");
  GraphInvariants inv = basic_invariants(g);
  if (!inv.regular || inv.valency < 3)
    throw Error("s-arc analysis requires regular valency >= 3");
  PermGroup image = action_group(g);
  const Point d = inv.valency;

  SArcResult res;

  // vertex-transitivity
  if (image.orbit_of(0).size() != g.n) return res;  // not even 0-arc-transitive

  // canonical arc: v0 = 0, then smallest valid extensions
  std::vector<Point> arc{0, g.adj[0][0]};

  // arc-transitivity: orbit of the ordered pair (v0,v1) covers all 2m arcs
  {
    std::vector<bool> seen(static_cast<std::size_t>(g.n) * g.n, false);
    auto idx = [&](Point a, Point b) { return static_cast<std::size_t>(a) * g.n + b; };
    std::vector<std::pair<Point, Point>> q{{arc[0], arc[1]}};
    seen[idx(arc[0], arc[1])] = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const Perm &p : g.action) {
        Point a = p(q[i].first), b = p(q[i].second);
        if (!seen[idx(a, b)]) { seen[idx(a, b)] = true; q.emplace_back(a, b); }
      }
    if (q.size() != 2 * inv.size) return res;  // vertex- but not arc-transitive
  }
  res.max_s = 1;

  res.stabilizer_orders.push_back(image.stabilizer({0}).order());  // 0-arc = vertex
  res.arc_counts.push_back(BigUint(g.n));
  if (!(res.arc_counts[0] * res.stabilizer_orders[0] == image.order()))
    throw Error("vertex count * vertex stabilizer order != |G|");

  while (res.max_s < s_limit) {
    std::uint32_t s = res.max_s;
    // stabilizer of the canonical s-arc, pointwise
    PermGroup stab = image.stabilizer(arc);
    res.stabilizer_orders.push_back(stab.order());
    BigUint count(g.n);
    count *= d;
    for (std::uint32_t i = 1; i < s; ++i) count *= (d - 1);
    res.arc_counts.push_back(count);
    if (!(count * stab.order() == image.order()))
      throw Error("s-arc count * stabilizer order != |G| at certified level " +
                  std::to_string(s));

    // valid extensions: neighbors of the tip, excluding the previous vertex
    Point tip = arc.back(), prev = arc[arc.size() - 2];
    std::vector<Point> ext;
    for (Point w : g.adj[tip])
      if (w != prev) ext.push_back(w);
    if (ext.empty()) break;
    // orbit of the smallest extension under the stabilizer
    std::vector<bool> seen(g.n, false);
    std::vector<Point> orb{ext[0]};
    seen[ext[0]] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm &p : stab.generators()) {
        Point y = p(orb[i]);
        if (!seen[y]) { seen[y] = true; orb.push_back(y); }
      }
    bool covers = true;
    for (Point w : ext)
      if (!seen[w]) { covers = false; break; }
    if (!covers) break;
    ++res.max_s;
    arc.push_back(ext[0]);
  }
  if (res.max_s >= s_limit)
    throw Error("s-arc transitivity did not terminate below the safety limit");
  res.canonical_arc = arc;
  return res;
}

// The permutation group induced by the stabilizer of v on the neighborhood.
struct LocalAction {
  Point vertex = 0;
  std::vector<Point> neighbor_order;
  std::vector<Perm> induced_generators;
  BigUint stabilizer_order{1};
  BigUint induced_order{1};
  BigUint kernel_order{1};
  bool two_transitive = false;
  bool faithful = false;
};

inline LocalAction local_action(const Graph &g, Point v) {
  if (g.action.empty()) throw Error("graph carries no action");
  LocalAction la;
  la.vertex = v;
  la.neighbor_order = g.adj[v];
  const Point d = static_cast<Point>(la.neighbor_order.size());
  std::unordered_map<Point, Point> pos;
  for (Point i = 0; i < d; ++i) pos.emplace(la.neighbor_order[i], i);

  PermGroup image = action_group(g);
  PermGroup stab = image.stabilizer({v});
  la.stabilizer_order = stab.order();
  for (const Perm &s : stab.generators()) {
    std::vector<Point> img(d);
    for (Point i = 0; i < d; ++i) img[i] = pos.at(s(la.neighbor_order[i]));
    la.induced_generators.push_back(Perm::from_images(std::move(img)));
  }
  PermGroup induced(d, la.induced_generators);
  la.induced_order = induced.order();
  la.kernel_order = la.stabilizer_order.divide_exact(la.induced_order);
  la.faithful = la.kernel_order == BigUint(1);

  // 2-transitivity: the orbit of one ordered pair covers all d(d-1) of them
  if (d >= 2) {
    std::vector<bool> seen(static_cast<std::size_t>(d) * d, false);
    std::vector<std::pair<Point, Point>> q{{0, 1}};
    seen[1] = true;  // index 0*d+1
    std::size_t found = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const Perm &p : la.induced_generators) {
        Point a = p(q[i].first), b = p(q[i].second);
        std::size_t ix = static_cast<std::size_t>(a) * d + b;
        if (!seen[ix]) { seen[ix] = true; ++found; q.emplace_back(a, b); }
      }
    la.two_transitive = found == static_cast<std::size_t>(d) * (d - 1);
  }
  return la;
}

}  // namespace cgt
