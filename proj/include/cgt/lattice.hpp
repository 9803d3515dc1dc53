#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/cosets.hpp"
#include "cgt/group.hpp"
#include "cgt/report.hpp"
#include "cgt/subgroups.hpp"

namespace cgt {

// The search object: a quadruple (G,E,A,H) with E a candidate edge
// stabilizer, A the arc stabilizer of index two in E, H the vertex
// stabilizer. Valid quadruples produce an edge-primitive arc-transitive
// coset graph.
struct Lattice {
  PermGroup G, E, A, H;
  std::string name;
  std::string s_label;  // inert metadata from the source tables
};

namespace detail {

inline bool subgroup_le(const PermGroup &sub, const PermGroup &super) {
  for (const Perm &g : sub.generators())
    if (!super.contains(g)) return false;
  return true;
}

inline bool subgroup_eq(const PermGroup &a, const PermGroup &b) {
  return a.order() == b.order() && subgroup_le(a, b);
}

}  // namespace detail

// Check every condition the quadruple must satisfy. Failures become report
// records, never exceptions. The d(d-1) divisibility record is advisory: it
// is necessary for 2-arc-transitivity of the graph, not for validity of the
// lattice itself.
inline VerificationReport verify_lattice(const Lattice &L,
                                         std::uint64_t cap = kDefaultCosetCap) {
  VerificationReport rep;
  rep.subject = L.name.empty() ? "lattice" : L.name;

  bool e_in_g = detail::subgroup_le(L.E, L.G);
  bool a_in_e = detail::subgroup_le(L.A, L.E);
  bool a_in_h = detail::subgroup_le(L.A, L.H);
  bool h_in_g = detail::subgroup_le(L.H, L.G);
  rep.add("E <= G", e_in_g);
  rep.add("A <= E", a_in_e);
  rep.add("A <= H", a_in_h);
  rep.add("H <= G", h_in_g);

  rep.add("|E:A| = 2", L.E.order() == L.A.order() * BigUint(2),
          "|E| = " + L.E.order().to_decimal() + ", |A| = " + L.A.order().to_decimal());
  bool a_lt_h = a_in_h && L.A.order() < L.H.order();
  rep.add("A < H strict", a_lt_h);
  rep.add("H != E", !detail::subgroup_eq(L.H, L.E));

  if (e_in_g) {
    try {
      rep.add("E maximal in G", is_maximal(L.G, L.E, cap));
    } catch (const Error &e) {
      rep.add("E maximal in G", false, e.what());
    }
  } else {
    rep.add("E maximal in G", false, "containment failed");
  }

  if (h_in_g) {
    try {
      CosetAction ca = coset_action(L.G, L.H, cap);
      rep.add("H corefree (faithful coset action)", ca.faithful,
              "kernel order " + ca.kernel_order.to_decimal());
    } catch (const Error &e) {
      rep.add("H corefree (faithful coset action)", false, e.what());
    }
  } else {
    rep.add("H corefree (faithful coset action)", false, "containment failed");
  }

  rep.add("|H| > |E|", L.E.order() < L.H.order(),
          "|H| = " + L.H.order().to_decimal() + ", |E| = " + L.E.order().to_decimal());

  if (a_lt_h && L.H.order().divisible_by(L.A.order())) {
    BigUint d = L.H.order().divide_exact(L.A.order());
    rep.add("valency d = |H:A|", true, "d = " + d.to_decimal());
    if (d.fits_u64() && d.to_u64() >= 1) {
      std::uint64_t dv = d.to_u64();
      bool divides = dv <= 1 || L.H.order().divisible_by(BigUint(dv * (dv - 1)));
      rep.add("d(d-1) divides |H| (needed for 2-arc-transitivity)", divides,
              "d(d-1) = " + std::to_string(dv * (dv - 1)), /*mandatory=*/false);
    }
  } else {
    rep.add("valency d = |H:A|", false, "|A| does not divide |H|");
  }
  return rep;
}

// One discovered quadruple over a fixed G, with the method's filters carried
// as annotations. Keys are generator-order independent (built from canonical
// element ranks), so search output is stable and sortable.
struct FoundLattice {
  PermGroup E{0}, A{0}, H{0};
  std::uint64_t e_order = 0, a_order = 0, h_order = 0;
  std::uint64_t valency = 0;
  bool nontrivial = false;    // |H| > |E|, Lemma-10 filter: valency >= 3
  bool dd1_divides = false;   // d(d-1) | |H|
  std::vector<std::uint32_t> canon_key;
};

namespace detail {

inline std::vector<std::uint32_t> subgroup_canon_key(const ElementTable &T,
                                                     const Subgrp &S) {
  std::vector<std::uint32_t> key;
  key.reserve(S.elems.size());
  for (std::uint32_t e : S.elems) key.push_back(T.canon_rank(e));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace detail

// All quadruples (G,E,A,H) with E maximal in G, |E:A| = 2, A < H != E and H
// corefree, up to conjugacy. Conjugacy is taken under aut_overgroup when
// supplied (a permutation group on the same points whose elements normalize
// G), else under G itself.
inline std::vector<FoundLattice> find_lattices(
    const PermGroup &G, const PermGroup *aut_overgroup = nullptr,
    std::uint64_t cap = kDefaultEnumCap) {
  SmallGroupContext ctx(G, cap);
  const ElementTable &T = ctx.table();

  // conjugating elements: those overgroup elements that normalize G
  std::vector<Perm> conjugators;
  if (aut_overgroup) {
    if (aut_overgroup->degree() != G.degree())
      throw Error("aut overgroup must act on the same points as G");
    ElementTable OT(*aut_overgroup, cap);
    for (std::uint32_t i = 0; i < OT.size(); ++i) {
      const Perm &w = OT.perm(i);
      Perm wi = w.inverse();
      bool normalizes = true;
      for (const Perm &g : G.generators())
        if (!G.contains(wi * g * w)) { normalizes = false; break; }
      if (normalizes) conjugators.push_back(w);
    }
  } else {
    for (std::uint32_t i = 0; i < T.size(); ++i) conjugators.push_back(T.perm(i));
  }

  auto lattice_key = [&](const Subgrp &E, const Subgrp &A, const Subgrp &H) {
    std::vector<std::uint32_t> best;
    for (const Perm &w : conjugators) {
      // conjugate element sets through the table
      Perm wi = w.inverse();
      auto conj_key = [&](const Subgrp &S) {
        std::vector<std::uint32_t> key;
        key.reserve(S.elems.size());
        for (std::uint32_t e : S.elems) key.push_back(T.canon_rank(T.id(wi * T.perm(e) * w)));
        std::sort(key.begin(), key.end());
        return key;
      };
      std::vector<std::uint32_t> cand = conj_key(E);
      auto ca = conj_key(A);
      auto ch = conj_key(H);
      cand.insert(cand.end(), ca.begin(), ca.end());
      cand.insert(cand.end(), ch.begin(), ch.end());
      if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
  };

  std::vector<FoundLattice> out;
  std::vector<std::vector<std::uint32_t>> seen_keys;

  for (const SubgroupClass &ecls : ctx.subgroup_classes()) {
    if (ecls.order == T.size() || ecls.order == 1) continue;
    if (!ctx.class_rep_maximal(ecls.rep)) continue;
    PermGroup E = ctx.to_perm_group(ecls.rep);
    for (const PermGroup &Ap : index_two_subgroups(E)) {
      Subgrp A = ctx.subgroup_from_perms(Ap.generators());
      for (Subgrp &H : ctx.overgroups_of(A)) {
        if (H.same_bits(ecls.rep)) continue;  // H != E
        if (!ctx.corefree(H)) continue;
        std::vector<std::uint32_t> key = lattice_key(ecls.rep, A, H);
        bool dup = false;
        for (const auto &k : seen_keys)
          if (k == key) { dup = true; break; }
        if (dup) continue;
        seen_keys.push_back(key);

        FoundLattice fl;
        fl.E = E;
        fl.A = ctx.to_perm_group(A);
        fl.H = ctx.to_perm_group(H);
        fl.e_order = ecls.order;
        fl.a_order = A.order;
        fl.h_order = H.order;
        fl.valency = H.order / A.order;
        fl.nontrivial = H.order > ecls.order;
        std::uint64_t dd1 = fl.valency * (fl.valency - 1);
        fl.dd1_divides = fl.valency <= 1 || (H.order % dd1 == 0);
        fl.canon_key = std::move(key);
        out.push_back(std::move(fl));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FoundLattice &a, const FoundLattice &b) {
    return a.canon_key < b.canon_key;
  });
  return out;
}

}  // namespace cgt
