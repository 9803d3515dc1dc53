#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgt/lattice.hpp"
#include "cgt/reduction.hpp"
#include "oracles.hpp"

using namespace cgt;

namespace {

PermGroup a5() {
  return PermGroup(5, {Perm::from_cycles("(1,2,3,4,5)", 5), Perm::from_cycles("(1,2,3)", 5)});
}
PermGroup s5() {
  return PermGroup(5, {Perm::from_cycles("(1,2)", 5), Perm::from_cycles("(1,2,3,4,5)", 5)});
}
PermGroup s4() {
  return PermGroup(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3,4)", 4)});
}

std::vector<FoundLattice> nontrivial(std::vector<FoundLattice> all) {
  std::vector<FoundLattice> out;
  for (auto &l : all)
    if (l.nontrivial) out.push_back(std::move(l));
  return out;
}

}  // namespace

TEST_CASE("A5 has exactly one lattice: (S3, C3, A4), the K5 lattice") {
  auto found = nontrivial(find_lattices(a5()));
  REQUIRE(found.size() == 1);
  CHECK(found[0].e_order == 6);
  CHECK(found[0].a_order == 3);
  CHECK(found[0].h_order == 12);
  CHECK(found[0].valency == 4);
  CHECK(found[0].dd1_divides);  // 12 | 12
}

TEST_CASE("S4 admits no lattice") {
  CHECK(nontrivial(find_lattices(s4())).empty());
}

TEST_CASE("S5 has exactly one lattice: the K5 edge lattice") {
  auto found = nontrivial(find_lattices(s5()));
  REQUIRE(found.size() == 1);
  CHECK(found[0].e_order == 12);
  CHECK(found[0].a_order == 6);
  CHECK(found[0].h_order == 24);
  CHECK(found[0].valency == 4);
}

TEST_CASE("find_lattices output is stable under generator permutation") {
  PermGroup g1 = a5();
  PermGroup g2(5, {Perm::from_cycles("(1,2,3)", 5), Perm::from_cycles("(1,2,3,4,5)", 5)});
  auto f1 = find_lattices(g1);
  auto f2 = find_lattices(g2);
  REQUIRE(f1.size() == f2.size());
  for (std::size_t i = 0; i < f1.size(); ++i)
    CHECK(f1[i].canon_key == f2[i].canon_key);
  // same property on S5 with its generators reversed
  PermGroup h1 = s5();
  PermGroup h2(5, {Perm::from_cycles("(1,2,3,4,5)", 5), Perm::from_cycles("(1,2)", 5)});
  auto e1 = find_lattices(h1);
  auto e2 = find_lattices(h2);
  REQUIRE(e1.size() == e2.size());
  for (std::size_t i = 0; i < e1.size(); ++i)
    CHECK(e1[i].canon_key == e2[i].canon_key);
}

TEST_CASE("every found lattice passes verify_lattice") {
  for (const PermGroup &G : {a5(), s5()}) {
    for (const FoundLattice &fl : nontrivial(find_lattices(G))) {
      Lattice L{G, fl.E, fl.A, fl.H, "found", ""};
      VerificationReport rep = verify_lattice(L);
      CHECK(rep.verdict());
      const CheckRecord *d = rep.find("valency d = |H:A|");
      REQUIRE(d != nullptr);
      CHECK(d->detail == "d = " + std::to_string(fl.valency));
    }
  }
}

TEST_CASE("verify_lattice fails when H is replaced by E") {
  auto found = nontrivial(find_lattices(a5()));
  REQUIRE(found.size() == 1);
  Lattice L{a5(), found[0].E, found[0].A, found[0].E, "tampered", ""};
  VerificationReport rep = verify_lattice(L);
  CHECK(!rep.verdict());
  const CheckRecord *r = rep.find("H != E");
  REQUIRE(r != nullptr);
  CHECK(!r->pass);
}

TEST_CASE("verify_lattice fails when A is enlarged to E") {
  auto found = nontrivial(find_lattices(a5()));
  Lattice L{a5(), found[0].E, found[0].E, found[0].H, "tampered", ""};
  VerificationReport rep = verify_lattice(L);
  CHECK(!rep.verdict());
  const CheckRecord *r = rep.find("|E:A| = 2");
  REQUIRE(r != nullptr);
  CHECK(!r->pass);
}

TEST_CASE("check_reduction: K5 lattice over S5 restricted to A5") {
  auto found = nontrivial(find_lattices(s5()));
  REQUIRE(found.size() == 1);
  Lattice L{s5(), found[0].E, found[0].A, found[0].H, "k5-over-s5", ""};
  REQUIRE(verify_lattice(L).verdict());

  PermGroup A5 = a5();
  VerificationReport rep = check_reduction(L, A5);
  CHECK(rep.verdict());
  const CheckRecord *meet = rep.find("E ∩ G1 computed");
  REQUIRE(meet != nullptr);
  CHECK(meet->detail == "order 6");  // S3 inside A5
  const CheckRecord *maxrec = rep.find("E ∩ G1 maximal in G1");
  REQUIRE(maxrec != nullptr);
  CHECK(maxrec->pass);
  const CheckRecord *ep = rep.find("G1 edge-primitive on the graph");
  REQUIRE(ep != nullptr);
  CHECK(ep->pass);
  const CheckRecord *at = rep.find("G1 arc-transitive on the graph");
  REQUIRE(at != nullptr);
  CHECK(at->pass);
}

TEST_CASE("check_reduction with G1 = G reproduces the lattice verdict") {
  auto found = nontrivial(find_lattices(a5()));
  Lattice L{a5(), found[0].E, found[0].A, found[0].H, "k5", ""};
  VerificationReport rep = check_reduction(L, a5());
  CHECK(rep.verdict());
  CHECK(rep.find("E ∩ G1 maximal in G1")->pass);
}

TEST_CASE("maximality within the search agrees with the coset route") {
  SmallGroupContext ctx(s5());
  for (const SubgroupClass &c : ctx.subgroup_classes()) {
    if (c.order == 120 || c.order == 1) continue;
    PermGroup H = ctx.to_perm_group(c.rep);
    CHECK(ctx.class_rep_maximal(c.rep) == is_maximal(ctx.group(), H));
  }
}

TEST_CASE("index_two count check: 2^k - 1") {
  // E = S4 x S2 has elementary abelian 2-quotient of order 4: three subgroups
  PermGroup E(6, {Perm::from_cycles("(1,2)", 6), Perm::from_cycles("(1,2,3,4)", 6),
                  Perm::from_cycles("(5,6)", 6)});
  CHECK(index_two_subgroups(E).size() == 3);
}
