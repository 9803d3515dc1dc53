#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cgt/cosets.hpp"
#include "cgt/lattice.hpp"

namespace cgt {

// Finite simple undirected graph as sorted adjacency lists, optionally
// carrying the vertex action of the constructing group: one vertex
// permutation per group generator.
struct Graph {
  Point n = 0;
  std::vector<std::vector<Point>> adj;
  std::vector<Perm> action;        // empty when no action attached
  std::vector<std::string> labels;  // optional coset-representative words
  bool connected = false;

  std::uint64_t edge_count() const {
    std::uint64_t twice = 0;
    for (const auto &v : adj) twice += v.size();
    return twice / 2;
  }

  bool adjacent(Point u, Point v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  // Sorted edge list, lexicographic on (min, max) endpoint pairs.
  std::vector<std::pair<Point, Point>> edges() const {
    std::vector<std::pair<Point, Point>> e;
    for (Point u = 0; u < n; ++u)
      for (Point v : adj[u])
        if (u < v) e.emplace_back(u, v);
    return e;
  }

  // Plain-text export: "n m" header, then one sorted neighbor line per
  // vertex (0-based). Byte-deterministic.
  std::string to_text() const {
    std::string out = std::to_string(n) + " " + std::to_string(edge_count()) + "\n";
    for (Point u = 0; u < n; ++u) {
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(adj[u][i]);
      }
      out += '\n';
    }
    return out;
  }
};

namespace detail {

inline void check_graph_well_formed(const Graph &g) {
  for (Point u = 0; u < g.n; ++u) {
    if (!std::is_sorted(g.adj[u].begin(), g.adj[u].end()))
      throw Error("adjacency lists must be sorted");
    for (Point v : g.adj[u]) {
      if (v == u) throw Error("loop at vertex " + std::to_string(u));
      if (v >= g.n) throw Error("neighbor out of range");
      if (!g.adjacent(v, u))
        throw Error("adjacency not symmetric at (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
    }
  }
  if (!g.action.empty())
    for (const Perm &p : g.action) {
      if (p.degree() != g.n) throw Error("action degree mismatch");
      for (Point u = 0; u < g.n; ++u)
        for (Point v : g.adj[u])
          if (!g.adjacent(p(u), p(v)))
            throw Error("attached action is not by automorphisms");
    }
}

inline bool bfs_connected(const Graph &g) {
  if (g.n == 0) return true;
  std::vector<bool> seen(g.n, false);
  std::vector<Point> q{0};
  seen[0] = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (Point v : g.adj[q[i]])
      if (!seen[v]) { seen[v] = true; q.push_back(v); }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

// Elements of a subgroup by closure; capped.
inline std::vector<Perm> subgroup_elements(const PermGroup &H,
                                           std::uint64_t cap = 1000000) {
  if (H.order() > BigUint(cap))
    throw Error("subgroup too large to enumerate: " + H.order().to_decimal());
  std::vector<Perm> elems{Perm(H.degree())};
  std::unordered_map<Perm, std::uint32_t, PermHash> seen;
  seen.emplace(elems[0], 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm &g : H.generators()) {
      Perm p = elems[i] * g;
      if (seen.emplace(p, static_cast<std::uint32_t>(elems.size())).second)
        elems.push_back(std::move(p));
    }
  return elems;
}

}  // namespace detail

// Cos(G,H,HgH): vertices are the right cosets of H, Hx ~ Hy iff xy^{-1} in
// HgH. Vertex 0 is the coset H; numbering follows breadth-first coset
// discovery from H with generators in list order. The neighborhood of vertex
// 0 is the H-orbit of the coset Hg; everything else follows by translation.
inline Graph build_graph(const PermGroup &G, const PermGroup &H, const Perm &g,
                         std::uint64_t cap = kDefaultCosetCap,
                         bool allow_disconnected = false) {
  if (!G.contains(g)) throw Error("g must lie in G");
  if (H.contains(g)) throw Error("g lies in H: coset graph would have loops");
  if (!H.contains(g * g)) throw Error("g^2 must lie in H for an undirected graph");

  CosetAction ca = coset_action(G, H, cap);
  Graph gr;
  gr.n = ca.degree;
  gr.adj.assign(gr.n, {});

  // neighborhood of the base vertex: H-orbit of the coset Hg
  Point vg = ca.identify(g, H);
  std::vector<Point> nbr0{vg};
  {
    std::vector<bool> seen(gr.n, false);
    seen[vg] = true;
    for (std::size_t i = 0; i < nbr0.size(); ++i)
      for (const Perm &h : H.generators()) {
        Point y = ca.identify(ca.reps[nbr0[i]] * h, H);
        if (!seen[y]) { seen[y] = true; nbr0.push_back(y); }
      }
  }
  if (std::find(nbr0.begin(), nbr0.end(), Point{0}) != nbr0.end())
    throw Error("base vertex adjacent to itself; HgH meets H");

  // valency identity: |H : H ∩ H^g| equals the base neighborhood size
  {
    std::vector<Perm> helems = detail::subgroup_elements(H);
    Perm ginv = g.inverse();
    std::uint64_t meet = 0;
    for (const Perm &h : helems)
      if (H.contains(g * h * ginv)) ++meet;
    if (helems.size() / meet != nbr0.size())
      throw Error("valency mismatch: |H:H∩H^g| != |Γ(v)|");
  }

  // all other adjacencies by translation: Γ(Hx) = { H(wx) : Hw ∈ Γ(H) }
  std::vector<Perm> nbr_reps;
  for (Point w : nbr0) nbr_reps.push_back(ca.reps[w]);
  for (Point v = 0; v < gr.n; ++v) {
    std::vector<Point> row;
    row.reserve(nbr_reps.size());
    for (const Perm &w : nbr_reps) row.push_back(ca.identify(w * ca.reps[v], H));
    std::sort(row.begin(), row.end());
    gr.adj[v] = std::move(row);
  }

  gr.action = ca.gen_images;
  gr.labels.reserve(gr.n);
  for (Point v = 0; v < gr.n; ++v) gr.labels.push_back(ca.reps[v].to_cycles());
  detail::check_graph_well_formed(gr);

  gr.connected = detail::bfs_connected(gr);
  // connectivity <=> <H ∪ {g}> = G
  std::vector<Perm> joined = H.generators();
  joined.push_back(g);
  bool generates = PermGroup(G.degree(), joined).order() == G.order();
  if (generates != gr.connected)
    throw Error("connectivity disagrees with <H, g> = G");
  if (!gr.connected && !allow_disconnected)
    throw Error("coset graph is disconnected: <H, g> is a proper subgroup");
  return gr;
}

// Build from a verified lattice. g is the first strong generator of E outside
// A; the adjacency is independent of that choice. The base edge {H, Hg} has
// arc stabilizer A and edge stabilizer E, checked here via the action.
inline Graph build_from_lattice(const Lattice &L,
                                std::uint64_t cap = kDefaultCosetCap) {
  VerificationReport rep = verify_lattice(L, cap);
  if (!rep.verdict()) {
    std::string bad;
    for (const auto &c : rep.checks)
      if (c.mandatory && !c.pass) { bad = c.name; break; }
    throw Error("lattice verification failed on: " + bad);
  }
  Perm g(L.G.degree());
  bool found = false;
  for (const Perm &s : L.E.strong_generators())
    if (!L.A.contains(s)) { g = s; found = true; break; }
  if (!found) throw Error("no element of E \\ A among strong generators");

  Graph gr = build_graph(L.G, L.H, g, cap);

  // cross-check valency both ways: |Γ(v)| == |H : A|
  BigUint d = L.H.order().divide_exact(L.A.order());
  if (BigUint(gr.adj[0].size()) != d)
    throw Error("valency |H:A| = " + d.to_decimal() + " but graph valency is " +
                std::to_string(gr.adj[0].size()));

  // base-edge stabilizers: A fixes both endpoints, the image arc stabilizer
  // has order exactly |A|, and E preserves the base edge
  CosetAction ca = coset_action(L.G, L.H, cap);
  Point vg = ca.identify(g, L.H);
  PermGroup image(gr.n, gr.action);
  if (!(image.order() == L.G.order()))
    throw Error("vertex action is not faithful despite corefree H");
  PermGroup arc_stab = image.stabilizer({0, vg});
  if (!(arc_stab.order() == L.A.order()))
    throw Error("arc stabilizer order " + arc_stab.order().to_decimal() +
                " differs from |A| = " + L.A.order().to_decimal());
  for (const Perm &a : L.A.generators())
    if (ca.identify(ca.reps[0] * a, L.H) != 0 ||
        ca.identify(ca.reps[vg] * a, L.H) != vg)
      throw Error("A does not fix the base arc pointwise");
  for (const Perm &e : L.E.generators()) {
    Point iu = ca.identify(ca.reps[0] * e, L.H);
    Point iv = ca.identify(ca.reps[vg] * e, L.H);
    if (!((iu == 0 && iv == vg) || (iu == vg && iv == 0)))
      throw Error("E does not preserve the base edge");
  }
  return gr;
}

}  // namespace cgt
