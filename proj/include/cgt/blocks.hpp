#pragma once

#include <optional>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/perm.hpp"

namespace cgt {

// An invariant partition of {0..degree-1}. Block indices are assigned in
// order of each block's smallest point, so the encoding is canonical.
struct BlockSystem {
  Point degree = 0;
  std::vector<Point> block_of;  // point -> block index
  Point block_count = 0;

  bool is_trivial() const { return block_count == 1 || block_count == degree; }

  std::vector<std::vector<Point>> blocks() const {
    std::vector<std::vector<Point>> out(block_count);
    for (Point x = 0; x < degree; ++x) out[block_of[x]].push_back(x);
    return out;
  }
};

namespace detail {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(Point n) : parent(n) {
    for (Point i = 0; i < n; ++i) parent[i] = i;
  }
  Point find(Point x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  }
  // Returns false if already joined.
  bool unite(Point a, Point b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller point as representative
    return true;
  }
};

inline BlockSystem canonicalize_partition(Point degree, std::vector<Point> &cls) {
  BlockSystem bs;
  bs.degree = degree;
  bs.block_of.assign(degree, 0);
  std::vector<std::int64_t> renum(degree, -1);
  Point next = 0;
  for (Point x = 0; x < degree; ++x) {
    if (renum[cls[x]] == -1) renum[cls[x]] = next++;
    bs.block_of[x] = static_cast<Point>(renum[cls[x]]);
  }
  bs.block_count = next;
  return bs;
}

}  // namespace detail

// Atkinson's algorithm: finest G-invariant partition with alpha and beta in a
// common block. G must be transitive for block systems to make sense; the
// caller checks that.
inline BlockSystem minimal_block_system(Point degree, const std::vector<Perm> &gens,
                                        Point alpha, Point beta) {
  detail::UnionFind uf(degree);
  std::vector<std::pair<Point, Point>> queue;
  uf.unite(alpha, beta);
  queue.emplace_back(alpha, beta);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const Perm &g : gens) {
      Point ga = g(a), gb = g(b);
      if (uf.unite(uf.find(ga), uf.find(gb))) queue.emplace_back(ga, gb);
    }
  }
  std::vector<Point> cls(degree);
  for (Point x = 0; x < degree; ++x) cls[x] = uf.find(x);
  return detail::canonicalize_partition(degree, cls);
}

inline BlockSystem minimal_block_system(const PermGroup &G, Point alpha, Point beta) {
  if (!G.is_transitive()) throw Error("minimal_block_system requires a transitive group");
  return minimal_block_system(G.degree(), G.generators(), alpha, beta);
}

struct PrimitivityResult {
  bool primitive = false;
  bool transitive = false;
  // For imprimitive transitive groups: a nontrivial block system. For
  // intransitive groups: the orbit partition (blocks need not be equal-sized).
  std::optional<BlockSystem> witness;
};

inline PrimitivityResult check_primitive(Point degree, const std::vector<Perm> &gens) {
  PrimitivityResult res;
  if (degree == 0) { res.primitive = true; res.transitive = true; return res; }
  // transitivity via the orbit of 0
  std::vector<bool> seen(degree, false);
  std::vector<Point> orb{0};
  seen[0] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const Perm &g : gens) {
      Point y = g(orb[i]);
      if (!seen[y]) { seen[y] = true; orb.push_back(y); }
    }
  if (orb.size() != degree) {
    res.transitive = false;
    // orbit partition as witness
    std::vector<Point> cls(degree);
    std::vector<std::int64_t> rep(degree, -1);
    for (Point s = 0; s < degree; ++s) {
      if (rep[s] != -1) continue;
      std::vector<Point> o{s};
      rep[s] = s;
      for (std::size_t i = 0; i < o.size(); ++i)
        for (const Perm &g : gens) {
          Point y = g(o[i]);
          if (rep[y] == -1) { rep[y] = s; o.push_back(y); }
        }
    }
    for (Point x = 0; x < degree; ++x) cls[x] = static_cast<Point>(rep[x]);
    res.witness = detail::canonicalize_partition(degree, cls);
    return res;
  }
  res.transitive = true;
  if (degree == 1) { res.primitive = true; return res; }
  for (Point beta = 1; beta < degree; ++beta) {
    BlockSystem bs = minimal_block_system(degree, gens, 0, beta);
    if (bs.block_count > 1) {
      res.primitive = false;
      res.witness = std::move(bs);
      return res;
    }
  }
  res.primitive = true;
  return res;
}

inline PrimitivityResult check_primitive(const PermGroup &G) {
  return check_primitive(G.degree(), G.generators());
}

inline bool is_primitive(const PermGroup &G) { return check_primitive(G).primitive; }

// Biprimitive: transitive, imprimitive, and every nontrivial minimal block
// system over pairs (0, beta) has exactly two blocks. Any nontrivial system
// is coarser than the minimal one joining a block-mate pair, so checking the
// minimal systems suffices.
inline bool is_biprimitive(Point degree, const std::vector<Perm> &gens) {
  PrimitivityResult pr = check_primitive(degree, gens);
  if (!pr.transitive || pr.primitive) return false;
  bool found_two = false;
  for (Point beta = 1; beta < degree; ++beta) {
    BlockSystem bs = minimal_block_system(degree, gens, 0, beta);
    if (bs.block_count == 1) continue;  // pair collapses everything
    if (bs.block_count != 2) return false;
    found_two = true;
  }
  return found_two;
}

inline bool is_biprimitive(const PermGroup &G) {
  return is_biprimitive(G.degree(), G.generators());
}

}  // namespace cgt
