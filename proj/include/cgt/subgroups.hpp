#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/perm.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultEnumCap = 10000;

// All subgroups of index 2: kernels of the surjections of E onto C2. The
// subgroup N generated (normally) by generator squares and commutators has
// elementary abelian 2-group quotient E/N; index-2 subgroups are pullbacks of
// index-2 subspaces. Works at any degree, only |E:N| must stay tiny.
inline std::vector<PermGroup> index_two_subgroups(const PermGroup &E) {
  std::vector<PermGroup> out;
  if (E.is_trivial()) return out;
  const auto &gens = E.generators();
  std::vector<Perm> seeds;
  for (const Perm &g : gens) seeds.push_back(g * g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(commutator(gens[i], gens[j]));
  PermGroup N = normal_closure(E, PermGroup(E.degree(), seeds));

  // greedy F2-basis of E/N
  std::vector<Perm> basis;
  std::vector<Perm> span_gens = N.generators();
  PermGroup span = N;
  for (const Perm &g : gens) {
    if (!span.contains(g)) {
      basis.push_back(g);
      span_gens.push_back(g);
      span = PermGroup(E.degree(), span_gens);
    }
  }
  std::size_t k = basis.size();
  if (k == 0) return out;
  if (k > 20) throw Error("index_two_subgroups: 2-quotient implausibly large");

  for (std::uint32_t lambda = 1; lambda < (1u << k); ++lambda) {
    // kernel of the functional lambda: basis vectors with bit 0, plus the
    // products b_i * b_pivot for the bit-1 vectors beyond the first
    std::size_t pivot = 0;
    while (!((lambda >> pivot) & 1u)) ++pivot;
    std::vector<Perm> agens = N.generators();
    for (std::size_t i = 0; i < k; ++i) {
      if (!((lambda >> i) & 1u))
        agens.push_back(basis[i]);
      else if (i != pivot)
        agens.push_back(basis[i] * basis[pivot]);
    }
    PermGroup A(E.degree(), agens);
    if (!(A.order() * BigUint(2) == E.order()))
      throw Error("index_two_subgroups: pullback has wrong order");
    out.push_back(std::move(A));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit element machinery for groups within the enumeration cap. All
// subgroup-lattice work (cyclic extension, conjugacy dedup, cores) happens on
// element bitsets; identifiers are indices into one shared element list.
// ---------------------------------------------------------------------------

class ElementTable {
public:
  ElementTable(const PermGroup &G, std::uint64_t cap = kDefaultEnumCap)
      : degree_(G.degree()) {
    if (G.order() > BigUint(cap))
      throw Error("group order " + G.order().to_decimal() +
                  " exceeds enumeration cap " + std::to_string(cap));
    Perm id(degree_);
    elems_.push_back(id);
    id_of_.emplace(id, 0);
    const auto &gens = G.generators();
    for (std::uint32_t i = 0; i < elems_.size(); ++i) {
      for (const Perm &g : gens) {
        Perm p = elems_[i] * g;
        if (id_of_.emplace(p, static_cast<std::uint32_t>(elems_.size())).second)
          elems_.push_back(std::move(p));
      }
    }
    if (BigUint(elems_.size()) != G.order())
      throw Error("element enumeration disagrees with BSGS order");
    for (const Perm &g : gens) gen_ids_.push_back(id_of_.at(g));

    inv_.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      inv_[i] = id_of_.at(elems_[i].inverse());

    // element conjugacy classes (orbits of conjugation by generators)
    class_of_.assign(elems_.size(), UINT32_MAX);
    for (std::uint32_t s = 0; s < elems_.size(); ++s) {
      if (class_of_[s] != UINT32_MAX) continue;
      std::uint32_t cid = static_cast<std::uint32_t>(classes_.size());
      std::vector<std::uint32_t> cls{s};
      class_of_[s] = cid;
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::uint32_t g : gen_ids_) {
          std::uint32_t c = conj(cls[i], g);
          if (class_of_[c] == UINT32_MAX) { class_of_[c] = cid; cls.push_back(c); }
        }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }

    // generator-order-independent ranks: lexicographic order of image tables
    std::vector<std::uint32_t> by_lex(elems_.size());
    for (std::uint32_t i = 0; i < by_lex.size(); ++i) by_lex[i] = i;
    std::sort(by_lex.begin(), by_lex.end(), [&](std::uint32_t a, std::uint32_t b) {
      return elems_[a].images() < elems_[b].images();
    });
    canon_rank_.resize(elems_.size());
    for (std::uint32_t r = 0; r < by_lex.size(); ++r) canon_rank_[by_lex[r]] = r;
  }

  Point degree() const { return degree_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const Perm &perm(std::uint32_t id) const { return elems_[id]; }
  const std::vector<std::uint32_t> &generator_ids() const { return gen_ids_; }

  std::uint32_t id(const Perm &p) const {
    auto it = id_of_.find(p);
    if (it == id_of_.end()) throw Error("element not in table");
    return it->second;
  }
  bool lookup(const Perm &p, std::uint32_t &out) const {
    auto it = id_of_.find(p);
    if (it == id_of_.end()) return false;
    out = it->second;
    return true;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return id(elems_[a] * elems_[b]);
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return id(elems_[inv_[g]] * elems_[x] * elems_[g]);
  }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 0;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }
  std::uint64_t element_order(std::uint32_t x) const { return elems_[x].order(); }

  std::uint32_t class_count() const { return static_cast<std::uint32_t>(classes_.size()); }
  std::uint32_t class_of(std::uint32_t x) const { return class_of_[x]; }
  const std::vector<std::uint32_t> &class_elems(std::uint32_t cid) const {
    return classes_[cid];
  }
  std::uint32_t canon_rank(std::uint32_t id) const { return canon_rank_[id]; }

private:
  Point degree_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, std::uint32_t, PermHash> id_of_;
  std::vector<std::uint32_t> gen_ids_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> canon_rank_;
};

// A subgroup as an element bitset over an ElementTable.
struct Subgrp {
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> elems;  // sorted ids
  std::vector<std::uint32_t> gens;   // some generating set
  std::uint64_t order = 0;

  bool test(std::uint32_t id) const { return (bits[id >> 6] >> (id & 63)) & 1u; }
  void set(std::uint32_t id) { bits[id >> 6] |= (std::uint64_t{1} << (id & 63)); }
  bool contains_all(const Subgrp &other) const {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if ((other.bits[w] & ~bits[w]) != 0) return false;
    return true;
  }
  bool same_bits(const Subgrp &other) const { return bits == other.bits; }
  std::size_t bits_hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : bits) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }
};

inline Subgrp closure_subgroup(const ElementTable &T,
                               const std::vector<std::uint32_t> &gen_ids,
                               std::uint64_t cap = 0) {
  Subgrp s;
  s.bits.assign((T.size() + 63) / 64, 0);
  s.elems.push_back(0);
  s.set(0);
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    for (std::uint32_t g : gen_ids) {
      std::uint32_t y = T.mul(s.elems[i], g);
      if (!s.test(y)) {
        s.set(y);
        s.elems.push_back(y);
        if (cap && s.elems.size() > cap) { s.order = 0; return s; }  // overflow marker
      }
    }
  }
  std::sort(s.elems.begin(), s.elems.end());
  s.gens = gen_ids;
  s.order = s.elems.size();
  return s;
}

inline Subgrp conjugate_subgroup(const ElementTable &T, const Subgrp &s,
                                 std::uint32_t g) {
  Subgrp r;
  r.bits.assign(s.bits.size(), 0);
  r.elems.reserve(s.elems.size());
  for (std::uint32_t e : s.elems) {
    std::uint32_t c = T.conj(e, g);
    r.set(c);
    r.elems.push_back(c);
  }
  std::sort(r.elems.begin(), r.elems.end());
  for (std::uint32_t e : s.gens) r.gens.push_back(T.conj(e, g));
  r.order = s.order;
  return r;
}

struct SubgroupClass {
  Subgrp rep;
  std::uint64_t order = 0;
  std::size_t profile_hash = 0;  // conjugation-invariant fingerprint
};

// Shared context for whole-lattice questions about one small group.
class SmallGroupContext {
public:
  explicit SmallGroupContext(const PermGroup &G, std::uint64_t cap = kDefaultEnumCap)
      : G_(G), table_(G, cap) {}

  const PermGroup &group() const { return G_; }
  const ElementTable &table() const { return table_; }

  // Count of elements per G-conjugacy class; invariant under conjugation.
  std::size_t profile_hash(const Subgrp &s) const {
    std::vector<std::uint32_t> counts(table_.class_count(), 0);
    for (std::uint32_t e : s.elems) ++counts[table_.class_of(e)];
    std::size_t h = 0x9e3779b97f4a7c15ull ^ s.order;
    for (std::uint32_t c : counts) h = (h ^ c) * 0x100000001b3ull;
    return h;
  }

  Subgrp whole_group() const {
    Subgrp s;
    s.bits.assign((table_.size() + 63) / 64, ~std::uint64_t{0});
    std::size_t extra = std::size_t{s.bits.size()} * 64 - table_.size();
    if (extra) s.bits.back() >>= extra;
    s.elems.resize(table_.size());
    for (std::uint32_t i = 0; i < table_.size(); ++i) s.elems[i] = i;
    s.gens = table_.generator_ids();
    s.order = table_.size();
    return s;
  }

  Subgrp subgroup_from_perms(const std::vector<Perm> &gens) const {
    std::vector<std::uint32_t> ids;
    for (const Perm &g : gens) ids.push_back(table_.id(g));
    return closure_subgroup(table_, ids);
  }

  PermGroup to_perm_group(const Subgrp &s) const {
    std::vector<Perm> gens;
    for (std::uint32_t g : s.gens) gens.push_back(table_.perm(g));
    return PermGroup(table_.degree(), gens);
  }

  // One representative per conjugacy class of subgroups, by cyclic extension
  // from the perfect subgroups. Every subgroup sits above its perfect core
  // via a subnormal chain with prime cyclic quotients, so seeding with the
  // perfect subgroups makes the sweep complete. Perfect seeds are found as
  // 2-generated subgroups; all perfect groups within the cap are 2-generated.
  const std::vector<SubgroupClass> &subgroup_classes() {
    if (!classes_done_) { compute_classes(); classes_done_ = true; }
    return classes_;
  }

  // True iff s is conjugate in G to the given class representative.
  bool conjugate_to(const Subgrp &s, const Subgrp &rep) const {
    if (s.order != rep.order) return false;
    for (std::uint32_t g = 0; g < table_.size(); ++g) {
      bool ok = true;
      for (std::uint32_t x : s.gens)
        if (!rep.test(table_.conj(x, g))) { ok = false; break; }
      if (ok && conjugate_subgroup(table_, s, g).same_bits(rep)) return true;
    }
    return false;
  }

  // Normal closure of one element conjugacy class, cached. Corefree tests
  // reduce to these: core(H) != 1 iff some nontrivial class closure fits in H.
  const Subgrp &class_normal_closure(std::uint32_t cid) {
    if (class_closures_.empty()) class_closures_.resize(table_.class_count());
    Subgrp &slot = class_closures_[cid];
    if (slot.order == 0) slot = closure_subgroup(table_, table_.class_elems(cid));
    return slot;
  }

  bool corefree(const Subgrp &H) {
    for (std::uint32_t cid = 1; cid < table_.class_count(); ++cid) {
      bool inside = true;
      for (std::uint32_t e : table_.class_elems(cid))
        if (!H.test(e)) { inside = false; break; }
      if (inside && H.contains_all(class_normal_closure(cid))) return false;
    }
    return true;
  }

  // All subgroups of G (as explicit bitsets) strictly between A and G that
  // contain the fixed subgroup A: conjugates R^g of class reps with A <= R^g.
  std::vector<Subgrp> overgroups_of(const Subgrp &A) {
    std::vector<Subgrp> out;
    std::unordered_set<std::size_t> seen;
    for (const SubgroupClass &cls : subgroup_classes()) {
      if (cls.order <= A.order || cls.order == table_.size()) continue;
      if (cls.order % A.order != 0) continue;
      for (std::uint32_t g = 0; g < table_.size(); ++g) {
        // A <= R^g  iff  A^{g^-1} <= R
        std::uint32_t gi = table_.inv(g);
        bool ok = true;
        for (std::uint32_t a : A.gens)
          if (!cls.rep.test(table_.conj(a, gi))) { ok = false; break; }
        if (!ok) continue;
        Subgrp cand = conjugate_subgroup(table_, cls.rep, g);
        if (!cand.contains_all(A)) continue;
        if (seen.insert(cand.bits_hash()).second) out.push_back(std::move(cand));
      }
    }
    return out;
  }

  // Class-rep maximality from the explicit lattice: no conjugate of any other
  // class sits strictly between rep and G.
  bool class_rep_maximal(const Subgrp &rep) {
    for (const SubgroupClass &cls : subgroup_classes()) {
      if (cls.order <= rep.order || cls.order == table_.size()) continue;
      if (cls.order % rep.order != 0) continue;
      for (std::uint32_t g = 0; g < table_.size(); ++g) {
        std::uint32_t gi = table_.inv(g);
        bool ok = true;
        for (std::uint32_t a : rep.gens)
          if (!cls.rep.test(table_.conj(a, gi))) { ok = false; break; }
        if (ok) return false;
      }
    }
    return true;
  }

private:
  void compute_classes() {
    // every subgroup bitset ever seen, so repeat derivations die in O(1)
    std::unordered_map<std::size_t, std::vector<std::vector<std::uint64_t>>> seen_bits;
    // profile buckets restrict the expensive conjugacy search
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_profile;

    auto add_class = [&](Subgrp s) -> bool {
      auto &bucket = seen_bits[s.bits_hash()];
      for (const auto &b : bucket)
        if (b == s.bits) return false;
      bucket.push_back(s.bits);
      std::size_t ph = profile_hash(s);
      auto pit = by_profile.find(ph);
      if (pit != by_profile.end())
        for (std::size_t idx : pit->second)
          if (conjugate_to(s, classes_[idx].rep)) return false;
      by_profile[ph].push_back(classes_.size());
      std::uint64_t ord = s.order;
      classes_.push_back(SubgroupClass{std::move(s), ord, ph});
      return true;
    };

    add_class(closure_subgroup(table_, {}));
    for (Subgrp &p : perfect_subgroups()) add_class(std::move(p));

    std::vector<std::uint64_t> primes = prime_divisors(table_.size());
    for (std::size_t w = 0; w < classes_.size(); ++w) {
      Subgrp U = classes_[w].rep;  // copy: classes_ may reallocate
      if (U.order == table_.size()) continue;
      std::vector<std::uint32_t> normalizer;
      for (std::uint32_t g = 0; g < table_.size(); ++g) {
        bool ok = true;
        for (std::uint32_t x : U.gens)
          if (!U.test(table_.conj(x, g))) { ok = false; break; }
        if (ok) normalizer.push_back(g);
      }
      for (std::uint64_t p : primes) {
        if ((table_.size() / U.order) % p != 0) continue;
        for (std::uint32_t n : normalizer) {
          if (U.test(n)) continue;
          if (!U.test(table_.pow(n, p))) continue;
          // W = U ∪ Un ∪ ... ∪ Un^{p-1}
          Subgrp W;
          W.bits.assign(U.bits.size(), 0);
          W.elems.reserve(U.order * p);
          std::uint32_t npow = 0;
          for (std::uint64_t e = 0; e < p; ++e) {
            for (std::uint32_t u : U.elems) {
              std::uint32_t v = table_.mul(u, npow);
              W.set(v);
              W.elems.push_back(v);
            }
            npow = table_.mul(npow, n);
          }
          std::sort(W.elems.begin(), W.elems.end());
          W.elems.erase(std::unique(W.elems.begin(), W.elems.end()), W.elems.end());
          if (W.elems.size() != U.order * p) continue;  // p must be minimal for n
          W.order = W.elems.size();
          W.gens = U.gens;
          W.gens.push_back(n);
          add_class(std::move(W));
        }
      }
    }
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const SubgroupClass &a, const SubgroupClass &b) {
                       return a.order < b.order;
                     });
  }

  static std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1) out.push_back(n);
    return out;
  }

  std::vector<Subgrp> perfect_subgroups() {
    std::vector<Subgrp> out;
    auto maybe_add = [&](const Subgrp &s) {
      for (const Subgrp &prev : out)
        if (prev.order == s.order &&
            (prev.same_bits(s) || conjugate_to(s, prev)))
          return;
      out.push_back(s);
    };

    bool g_perfect = derived_subgroup(G_).order() == G_.order();

    for (std::uint32_t cid = 1; cid < table_.class_count(); ++cid) {
      std::uint32_t x = table_.class_elems(cid)[0];
      // generators of the centralizer of x
      std::vector<std::uint32_t> cgens;
      {
        PermGroup probe = PermGroup::trivial(table_.degree());
        std::vector<Perm> cperm;
        for (std::uint32_t g = 0; g < table_.size(); ++g) {
          if (table_.mul(g, x) != table_.mul(x, g)) continue;
          if (probe.contains(table_.perm(g))) continue;
          cgens.push_back(g);
          cperm.push_back(table_.perm(g));
          probe = PermGroup(table_.degree(), cperm);
        }
      }
      // orbit representatives of conjugation by the centralizer
      std::vector<bool> seen(table_.size(), false);
      for (std::uint32_t y = 0; y < table_.size(); ++y) {
        if (seen[y]) continue;
        std::vector<std::uint32_t> orb{y};
        seen[y] = true;
        for (std::size_t i = 0; i < orb.size(); ++i)
          for (std::uint32_t c : cgens) {
            std::uint32_t z = table_.conj(orb[i], c);
            if (!seen[z]) { seen[z] = true; orb.push_back(z); }
          }
        PermGroup U(table_.degree(), {table_.perm(x), table_.perm(y)});
        if (!U.order().fits_u64()) continue;
        std::uint64_t uo = U.order().to_u64();
        // cheap vetoes: a nontrivial perfect group has order divisible by 4,
        // and by 3 below |Sz(8)| = 29120; the whole group is handled once
        if (uo < 60 || uo % 4 != 0 || uo > table_.size()) continue;
        if (uo % 3 != 0 && uo < 29120) continue;
        if (uo == table_.size() && !g_perfect) continue;
        PermGroup D = derived_subgroup(U);
        if (!(D.order() == U.order())) continue;
        maybe_add(subgroup_from_perms({table_.perm(x), table_.perm(y)}));
      }
    }
    return out;
  }

  PermGroup G_;
  ElementTable table_;
  bool classes_done_ = false;
  std::vector<SubgroupClass> classes_;
  std::vector<Subgrp> class_closures_;
};

// Convenience wrapper matching the operation contract: one PermGroup per
// conjugacy class of subgroups.
inline std::vector<PermGroup> enumerate_subgroups(const PermGroup &G,
                                                  std::uint64_t cap = kDefaultEnumCap) {
  SmallGroupContext ctx(G, cap);
  std::vector<PermGroup> out;
  for (const SubgroupClass &c : ctx.subgroup_classes())
    out.push_back(ctx.to_perm_group(c.rep));
  return out;
}

}  // namespace cgt
