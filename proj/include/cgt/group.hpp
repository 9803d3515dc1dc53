#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"

namespace cgt {

// A permutation group held as a base and strong generating set. The chain is
// built by deterministic Schreier-Sims: every Schreier generator of every
// level is sifted, so the finished chain is self-verifying and the order
// (product of basic orbit lengths) is exact. Immutable once constructed.
class PermGroup {
public:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;          // strong generators fixing all earlier base points
    std::vector<Perm> gen_invs;
    std::vector<Point> orbit;        // discovery order, orbit[0] == base_point
    std::vector<std::int32_t> sv_gen;    // per point: generator index into gens, -1 root, -2 absent
    std::vector<Point> sv_parent;        // per point: predecessor in the Schreier tree
  };

  // base_prefix forces the chain to start with the given points (used for
  // pointwise stabilizers); points fixed by the whole group are kept as
  // trivial levels so indexing by prefix length stays valid.
  explicit PermGroup(Point degree, std::vector<Perm> generators = {},
                     std::vector<Point> base_prefix = {})
      : degree_(degree), gens_(std::move(generators)) {
    for (const Perm &g : gens_)
      if (g.degree() != degree_) throw Error("generator degree mismatch");
    build(base_prefix);
  }

  static PermGroup trivial(Point degree) { return PermGroup(degree, {}); }

  Point degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }
  const std::vector<Level> &levels() const { return levels_; }
  const BigUint &order() const { return order_; }
  std::uint64_t order_u64() const { return order_.to_u64(); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto &l : levels_) b.push_back(l.base_point);
    return b;
  }

  // Union of all level generator lists, deduplicated, original order kept.
  std::vector<Perm> strong_generators() const {
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHash> seen;
    for (const auto &l : levels_)
      for (const Perm &g : l.gens)
        if (seen.insert(g).second) out.push_back(g);
    return out;
  }

  bool is_trivial() const { return levels_.empty(); }

  // Sift from the top of the chain; the residue is the identity iff p is a
  // member.
  Perm sift(const Perm &p) const {
    Perm h = p;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      Point gamma = h(levels_[l].base_point);
      if (levels_[l].sv_gen[gamma] == -2) return h;
      mul_transversal_inverse(l, gamma, h);
    }
    return h;
  }

  bool contains(const Perm &p) const {
    if (p.degree() != degree_)
      throw Error("degree mismatch in membership test");
    return sift(p).is_identity();
  }

  // Transversal element u with base_point^u == pt for the given level.
  Perm transversal(std::size_t level, Point pt) const {
    const Level &lv = levels_[level];
    if (lv.sv_gen[pt] == -2) throw Error("point not in basic orbit");
    std::vector<std::int32_t> path;
    Point x = pt;
    while (lv.sv_gen[x] != -1) {
      path.push_back(lv.sv_gen[x]);
      x = lv.sv_parent[x];
    }
    Perm u(degree_);
    for (std::size_t i = path.size(); i-- > 0;) u = u * lv.gens[path[i]];
    return u;
  }

  // Generators of the pointwise stabilizer of the length-k prefix of a chain
  // whose base starts with `points` (fresh chain, strong generators reused).
  PermGroup stabilizer(const std::vector<Point> &points) const {
    for (Point p : points)
      if (p >= degree_) throw Error("stabilizer point out of range");
    PermGroup chain(degree_, strong_generators(), points);
    std::vector<Perm> sub;
    if (points.size() < chain.levels_.size())
      sub = chain.levels_[points.size()].gens;
    return PermGroup(degree_, sub);
  }

  std::vector<Point> orbit_of(Point start) const {
    std::vector<Point> orb{start};
    std::vector<bool> seen(degree_, false);
    seen[start] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm &g : gens_) {
        Point y = g(orb[i]);
        if (!seen[y]) { seen[y] = true; orb.push_back(y); }
      }
    return orb;
  }

  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree_, false);
    for (Point s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      std::vector<Point> orb{s};
      seen[s] = true;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (const Perm &g : gens_) {
          Point y = g(orb[i]);
          if (!seen[y]) { seen[y] = true; orb.push_back(y); }
        }
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const {
    return degree_ == 0 || orbit_of(0).size() == degree_;
  }

  // Some element mapping x to y under the generator action, if one exists.
  std::optional<Perm> element_mapping(Point x, Point y) const {
    std::vector<std::int32_t> via_gen(degree_, -2);
    std::vector<Point> parent(degree_, 0);
    std::vector<Point> queue{x};
    via_gen[x] = -1;
    for (std::size_t i = 0; i < queue.size() && via_gen[y] == -2; ++i)
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        Point z = gens_[gi](queue[i]);
        if (via_gen[z] == -2) {
          via_gen[z] = static_cast<std::int32_t>(gi);
          parent[z] = queue[i];
          queue.push_back(z);
        }
      }
    if (via_gen[y] == -2) return std::nullopt;
    std::vector<std::int32_t> path;
    for (Point v = y; via_gen[v] != -1; v = parent[v]) path.push_back(via_gen[v]);
    Perm u(degree_);
    for (std::size_t i = path.size(); i-- > 0;) u = u * gens_[path[i]];
    return u;
  }

  // Pseudo-random member: a word of moderate length in the generators.
  Perm random_element(std::mt19937_64 &rng) const {
    Perm p(degree_);
    if (gens_.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
    int len = 8 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) p = p * gens_[pick(rng)];
    return p;
  }

private:
  void build(const std::vector<Point> &base_prefix) {
    std::vector<Perm> working;
    for (const Perm &g : gens_)
      if (!g.is_identity()) working.push_back(g);

    for (Point b : base_prefix) add_level(b);
    if (!working.empty() && levels_.empty()) {
      Point b = degree_;
      for (const Perm &g : working) b = std::min(b, g.smallest_moved());
      add_level(b);
    }
    // each generator joins every level whose base prefix it fixes; a
    // generator fixing the whole base opens a new level
    for (const Perm &g : working) {
      std::size_t l = 0;
      while (true) {
        if (l == levels_.size()) add_level(g.smallest_moved());
        levels_[l].gens.push_back(g);
        levels_[l].gen_invs.push_back(g.inverse());
        if (g(levels_[l].base_point) != levels_[l].base_point) break;
        ++l;
      }
    }

    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);

    std::int64_t i = static_cast<std::int64_t>(levels_.size()) - 1;
    while (i >= 0) {
      const std::size_t li = static_cast<std::size_t>(i);
      bool changed = false;
      for (std::size_t pos = 0; pos < levels_[li].orbit.size() && !changed; ++pos) {
        Point gamma = levels_[li].orbit[pos];
        Perm u_gamma = transversal(li, gamma);
        const std::size_t gen_count = levels_[li].gens.size();
        for (std::size_t gi = 0; gi < gen_count && !changed; ++gi) {
          Perm h = u_gamma * levels_[li].gens[gi];
          Point delta = h(levels_[li].base_point);
          mul_transversal_inverse(li, delta, h);
          if (h.is_identity()) continue;
          auto [res, j] = strip(h, li + 1);
          if (res.is_identity()) continue;
          if (j == levels_.size()) {
            if (res.is_identity())
              throw Error("internal: trivial residue escaped the chain");
            add_level(res.smallest_moved());
          }
          Perm res_inv = res.inverse();
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels_[l].gens.push_back(res);
            levels_[l].gen_invs.push_back(res_inv);
            rebuild_orbit(l);
          }
          i = static_cast<std::int64_t>(j);
          changed = true;
        }
      }
      if (!changed) --i;
    }

    order_ = BigUint(1);
    for (const auto &l : levels_) order_ *= l.orbit.size();
  }

  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      Point gamma = h(levels_[l].base_point);
      if (levels_[l].sv_gen[gamma] == -2) return {h, l};
      mul_transversal_inverse(l, gamma, h);
    }
    return {h, levels_.size()};
  }

  // h := h * u_gamma^{-1}, walking the Schreier tree without materializing u.
  void mul_transversal_inverse(std::size_t level, Point gamma, Perm &h) const {
    const Level &lv = levels_[level];
    Point x = gamma;
    while (lv.sv_gen[x] != -1) {
      h = h * lv.gen_invs[lv.sv_gen[x]];
      x = lv.sv_parent[x];
    }
  }

  void add_level(Point base_point) {
    Level lv;
    lv.base_point = base_point;
    lv.sv_gen.assign(degree_, -2);
    lv.sv_parent.assign(degree_, 0);
    levels_.push_back(std::move(lv));
  }



  void rebuild_orbit(std::size_t level) {
    Level &lv = levels_[level];
    std::fill(lv.sv_gen.begin(), lv.sv_gen.end(), -2);
    lv.orbit.assign(1, lv.base_point);
    lv.sv_gen[lv.base_point] = -1;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point x = lv.orbit[i];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        Point y = lv.gens[gi](x);
        if (lv.sv_gen[y] == -2) {
          lv.sv_gen[y] = static_cast<std::int32_t>(gi);
          lv.sv_parent[y] = x;
          lv.orbit.push_back(y);
        }
      }
    }
  }

  Point degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  BigUint order_{1};
};

// True iff conjugation by x maps S onto itself.
inline bool is_normalized(const PermGroup &S, const Perm &x) {
  if (x.degree() != S.degree()) throw Error("degree mismatch in is_normalized");
  Perm xi = x.inverse();
  for (const Perm &s : S.strong_generators())
    if (!S.contains(xi * s * x)) return false;
  return true;
}

// Smallest normal subgroup of G containing S.
inline PermGroup normal_closure(const PermGroup &G, const PermGroup &S) {
  if (G.degree() != S.degree()) throw Error("degree mismatch in normal_closure");
  std::vector<Perm> ngens = S.generators();
  PermGroup K(G.degree(), ngens);
  std::vector<Perm> conj_invs;
  for (const Perm &g : G.generators()) conj_invs.push_back(g.inverse());
  for (std::size_t i = 0; i < ngens.size(); ++i) {
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      Perm c = conj_invs[gi] * ngens[i] * G.generators()[gi];
      if (!K.contains(c)) {
        ngens.push_back(c);
        K = PermGroup(G.degree(), ngens);
      }
    }
  }
  return K;
}

inline Perm commutator(const Perm &a, const Perm &b) {
  return a.inverse() * b.inverse() * a * b;
}

inline PermGroup derived_subgroup(const PermGroup &G) {
  std::vector<Perm> comms;
  const auto &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      comms.push_back(commutator(gs[i], gs[j]));
  PermGroup C(G.degree(), comms);
  return normal_closure(G, C);
}

}  // namespace cgt
