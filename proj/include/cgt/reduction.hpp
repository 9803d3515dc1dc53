#pragma once

#include "cgt/coset_graph.hpp"
#include "cgt/graph_props.hpp"
#include "cgt/lattice.hpp"

namespace cgt {

// Restriction to an intermediate group soc(G) <= G1 <= G: compute E ∩ G1, and
// when it is maximal in G1, certify on the constructed graph that G1 itself
// acts edge-primitively and arc-transitively. When E ∩ G1 is not maximal the
// reduction is inconclusive, which is a valid outcome, not a failure.
inline VerificationReport check_reduction(const Lattice &L, const PermGroup &G1,
                                          std::uint64_t coset_cap = kDefaultCosetCap,
                                          std::uint64_t enum_cap = 1000000) {
  VerificationReport rep;
  rep.subject = (L.name.empty() ? std::string("lattice") : L.name) + " reduction";

  bool contained = detail::subgroup_le(G1, L.G);
  rep.add("G1 <= G", contained);
  if (!contained) return rep;

  // E ∩ G1 by scanning the elements of E (the smaller side), capped
  std::vector<Perm> meet_gens;
  PermGroup meet = PermGroup::trivial(L.G.degree());
  for (const Perm &e : detail::subgroup_elements(L.E, enum_cap)) {
    if (!G1.contains(e) || meet.contains(e)) continue;
    meet_gens.push_back(e);
    meet = PermGroup(L.G.degree(), meet_gens);
  }
  rep.add("E ∩ G1 computed", true, "order " + meet.order().to_decimal());

  if (meet.order() == G1.order()) {
    rep.add("E ∩ G1 proper in G1", false, "intersection is all of G1");
    return rep;
  }
  bool maximal = false;
  try {
    maximal = is_maximal(G1, meet, coset_cap);
  } catch (const Error &e) {
    rep.add("E ∩ G1 maximal in G1", false, e.what());
    return rep;
  }
  rep.add("E ∩ G1 maximal in G1", maximal,
          maximal ? "" : "no conclusion: the reduction hypothesis fails",
          /*mandatory=*/false);
  if (!maximal) return rep;

  // hypothesis holds: certify the conclusion directly on the graph
  Graph gr = build_from_lattice(L, coset_cap);
  CosetAction ca = coset_action(L.G, L.H, coset_cap);
  Graph restricted = gr;
  restricted.action.clear();
  for (const Perm &g1 : G1.generators()) {
    std::vector<Point> img(gr.n);
    for (Point v = 0; v < gr.n; ++v)
      img[v] = ca.identify(ca.reps[v] * g1, L.H);
    restricted.action.push_back(Perm::from_images(std::move(img)));
  }
  detail::check_graph_well_formed(restricted);
  rep.add("G1 edge-primitive on the graph", is_edge_primitive(restricted));
  // arc-transitivity of G1: orbit of one ordered pair covers all arcs
  {
    Point v1 = gr.adj[0][0];
    std::vector<bool> seen(static_cast<std::size_t>(gr.n) * gr.n, false);
    auto idx = [&](Point a, Point b) { return static_cast<std::size_t>(a) * gr.n + b; };
    std::vector<std::pair<Point, Point>> q{{0, v1}};
    seen[idx(0, v1)] = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const Perm &p : restricted.action) {
        Point a = p(q[i].first), b = p(q[i].second);
        if (!seen[idx(a, b)]) { seen[idx(a, b)] = true; q.emplace_back(a, b); }
      }
    rep.add("G1 arc-transitive on the graph", q.size() == 2 * gr.edge_count());
  }
  return rep;
}

}  // namespace cgt
