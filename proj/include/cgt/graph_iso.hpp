#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "cgt/coset_graph.hpp"
#include "cgt/graph_props.hpp"

namespace cgt {

namespace iso_detail {

// 1-dimensional Weisfeiler-Leman refinement to a stable coloring. Colors are
// dense ranks; the refinement respects the incoming order, so equal inputs
// refine equally.
inline void refine(const Graph &g, std::vector<Point> &color) {
  const Point n = g.n;
  while (true) {
    std::vector<std::pair<std::vector<Point>, Point>> sig(n);
    for (Point v = 0; v < n; ++v) {
      std::vector<Point> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      std::vector<Point> nb;
      nb.reserve(g.adj[v].size());
      for (Point w : g.adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<Point> order(n);
    std::iota(order.begin(), order.end(), Point{0});
    std::sort(order.begin(), order.end(), [&](Point a, Point b) {
      return sig[a].first < sig[b].first;
    });
    std::vector<Point> next(n);
    Point nc = 0;
    for (Point i = 0; i < n; ++i) {
      if (i && sig[order[i]].first != sig[order[i - 1]].first) ++nc;
      next[order[i]] = nc;
    }
    Point old_classes = *std::max_element(color.begin(), color.end()) + 1;
    if (nc + 1 == old_classes) { color = next; return; }
    color = next;
  }
}

inline std::vector<std::uint64_t> leaf_key(const Graph &g,
                                           const std::vector<Point> &pos) {
  // pos: vertex -> canonical position (discrete coloring)
  const Point n = g.n;
  std::vector<Point> at(n);
  for (Point v = 0; v < n; ++v) at[pos[v]] = v;
  std::vector<std::uint64_t> key((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  std::size_t bit = 0;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j, ++bit)
      if (g.adjacent(at[i], at[j])) key[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  return key;
}

struct CanonState {
  const Graph *g = nullptr;
  std::vector<std::uint64_t> best_key;
  std::vector<Point> best_pos;
  bool have_best = false;
  std::vector<Perm> automorphisms;  // found along the way
  std::size_t nodes = 0;
};

inline void canon_search(CanonState &st, std::vector<Point> color, int depth) {
  const Graph &g = *st.g;
  const Point n = g.n;
  if (++st.nodes > 2000000) throw Error("canonical labeling search exploded");
  refine(g, color);
  Point nclasses = *std::max_element(color.begin(), color.end()) + 1;
  if (nclasses == n) {
    auto key = leaf_key(g, color);
    if (!st.have_best || key < st.best_key) {
      st.best_key = std::move(key);
      st.best_pos = color;
      st.have_best = true;
    } else if (key == st.best_key) {
      // two labelings with the same canonical image differ by an automorphism
      std::vector<Point> at_leaf(n);
      for (Point v = 0; v < n; ++v) at_leaf[color[v]] = v;
      std::vector<Point> a(n);
      for (Point v = 0; v < n; ++v) a[v] = at_leaf[st.best_pos[v]];
      st.automorphisms.push_back(Perm::from_images(a));
    }
    return;
  }
  // target cell: first largest non-singleton class
  std::vector<Point> count(nclasses, 0);
  for (Point v = 0; v < n; ++v) ++count[color[v]];
  Point target = 0, best_size = 0;
  for (Point c = 0; c < nclasses; ++c)
    if (count[c] > best_size) { best_size = count[c]; target = c; }
  std::vector<Point> cell;
  for (Point v = 0; v < n; ++v)
    if (color[v] == target) cell.push_back(v);

  // orbit pruning at the root: skip vertices equivalent to one already tried
  std::vector<Point> uf(n);
  std::iota(uf.begin(), uf.end(), Point{0});
  std::function<Point(Point)> find = [&](Point x) {
    while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
    return x;
  };
  auto apply_autos = [&] {
    if (depth != 0) return;
    for (const Perm &a : st.automorphisms)
      for (Point v = 0; v < n; ++v) {
        Point r1 = find(v), r2 = find(a(v));
        if (r1 != r2) uf[std::max(r1, r2)] = std::min(r1, r2);
      }
  };
  std::vector<bool> tried(n, false);
  for (Point v : cell) {
    if (depth == 0) {
      apply_autos();
      if (tried[find(v)]) continue;
      tried[find(v)] = true;
    }
    std::vector<Point> child(n);
    for (Point u = 0; u < n; ++u) child[u] = 2 * color[u] + 1;
    child[v] -= 1;
    canon_search(st, std::move(child), depth + 1);
  }
}

}  // namespace iso_detail

struct CanonicalForm {
  std::vector<Point> position;  // vertex -> canonical position
  std::vector<std::uint64_t> key;
};

inline CanonicalForm canonical_form(const Graph &g) {
  if (g.n > 2048) throw Error("canonical labeling supported only at desk scale");
  if (g.n == 0) return CanonicalForm{};
  iso_detail::CanonState st;
  st.g = &g;
  std::vector<Point> color(g.n, 0);
  iso_detail::canon_search(st, std::move(color), 0);
  if (!st.have_best) throw Error("no canonical labeling found");
  return CanonicalForm{st.best_pos, st.best_key};
}

// Explicit vertex bijection g1 -> g2 preserving adjacency, if one exists.
// Fast rejection by invariants; complete and complete-bipartite graphs are
// matched directly; the general case compares canonical forms. The returned
// bijection is verified edge by edge before being handed back.
inline std::optional<std::vector<Point>> isomorphism(const Graph &g1,
                                                     const Graph &g2) {
  if (g1.n != g2.n) return std::nullopt;
  const Point n = g1.n;
  GraphInvariants i1 = basic_invariants(g1), i2 = basic_invariants(g2);
  auto degseq = [](const Graph &g) {
    std::vector<std::size_t> d;
    for (const auto &a : g.adj) d.push_back(a.size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (i1.size != i2.size || i1.connected != i2.connected ||
      i1.bipartite != i2.bipartite || i1.girth != i2.girth ||
      degseq(g1) != degseq(g2))
    return std::nullopt;

  auto verify = [&](const std::vector<Point> &f) -> bool {
    for (Point u = 0; u < n; ++u)
      for (Point v : g1.adj[u])
        if (!g2.adjacent(f[u], f[v])) return false;
    return true;
  };

  std::optional<std::vector<Point>> candidate;
  if (i1.complete && i2.complete) {
    std::vector<Point> f(n);
    std::iota(f.begin(), f.end(), Point{0});
    candidate = std::move(f);
  } else if (i1.complete_bipartite && i2.complete_bipartite) {
    auto sides = [](const Graph &g) {
      std::vector<std::int8_t> color(g.n, -1);
      std::vector<Point> s0, s1;
      for (Point s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Point> q{s};
        for (std::size_t i = 0; i < q.size(); ++i)
          for (Point v : g.adj[q[i]])
            if (color[v] == -1) { color[v] = 1 - color[q[i]]; q.push_back(v); }
      }
      for (Point v = 0; v < g.n; ++v) (color[v] == 0 ? s0 : s1).push_back(v);
      if (s0.size() > s1.size()) std::swap(s0, s1);
      return std::make_pair(s0, s1);
    };
    auto [a0, a1] = sides(g1);
    auto [b0, b1] = sides(g2);
    if (a0.size() != b0.size()) return std::nullopt;
    std::vector<Point> f(n);
    for (std::size_t i = 0; i < a0.size(); ++i) f[a0[i]] = b0[i];
    for (std::size_t i = 0; i < a1.size(); ++i) f[a1[i]] = b1[i];
    candidate = std::move(f);
  } else {
    CanonicalForm c1 = canonical_form(g1), c2 = canonical_form(g2);
    if (c1.key != c2.key) return std::nullopt;
    std::vector<Point> at2(n);
    for (Point v = 0; v < n; ++v) at2[c2.position[v]] = v;
    std::vector<Point> f(n);
    for (Point v = 0; v < n; ++v) f[v] = at2[c1.position[v]];
    candidate = std::move(f);
  }
  if (!candidate || !verify(*candidate))
    throw Error("internal: isomorphism candidate failed edge verification");
  return candidate;
}

inline bool isomorphic(const Graph &g1, const Graph &g2) {
  return isomorphism(g1, g2).has_value();
}

}  // namespace cgt
