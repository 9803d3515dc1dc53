// Groups with socle A6 in their degree-10 representations, the alternating
// and symmetric groups the corpus needs, the eleven soc(A6) lattices found
// by exhaustive search, and the order-30 valency-7 graph lattice over S8.
// Every computed property is checked against its pinned value before being
// written; a mismatch aborts the generator.
#include "common.hpp"

#include <array>
#include <map>

#include "cgt/graph_iso.hpp"
#include "cgt/subgroups.hpp"

namespace corpusgen {

namespace {

// GF(9) = F3[i]/(i^2+1), element a+bi encoded as a+3b; projective line
// PG(1,9) = {0..8, infinity=9}.
struct GF9 {
  static int add(int x, int y) {
    return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3);
  }
  static int neg(int x) { return ((3 - x % 3) % 3) + 3 * ((3 - x / 3) % 3); }
  static int mul(int x, int y) {
    int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    int re = (a * c + 2 * b * d) % 3;  // i^2 = -1 = 2
    int im = (a * d + b * c) % 3;
    return re + 3 * im;
  }
  static int inv(int x) {
    for (int y = 1; y < 9; ++y)
      if (mul(x, y) == 1) return y;
    throw Error("GF9: inverting zero");
  }
};

constexpr int kInf = 9;
constexpr int kPrim = 4;  // 1+i, a primitive element of GF(9)*

Perm moebius_add1() {
  std::vector<Point> img(10);
  for (int x = 0; x < 9; ++x) img[x] = GF9::add(x, 1);
  img[kInf] = kInf;
  return Perm::from_images(img);
}
Perm moebius_scale(int c) {
  std::vector<Point> img(10);
  for (int x = 0; x < 9; ++x) img[x] = GF9::mul(x, c);
  img[kInf] = kInf;
  return Perm::from_images(img);
}
Perm moebius_neg_inv() {  // x -> -1/x
  std::vector<Point> img(10);
  img[0] = kInf;
  img[kInf] = 0;
  for (int x = 1; x < 9; ++x) img[x] = GF9::neg(GF9::inv(x));
  return Perm::from_images(img);
}
Perm frobenius() {  // x -> x^3
  std::vector<Point> img(10);
  for (int x = 0; x < 9; ++x) img[x] = GF9::mul(GF9::mul(x, x), x);
  img[kInf] = kInf;
  return Perm::from_images(img);
}
Perm scale_frobenius() {  // x -> g * x^3
  std::vector<Point> img(10);
  for (int x = 0; x < 9; ++x) img[x] = GF9::mul(kPrim, GF9::mul(GF9::mul(x, x), x));
  img[kInf] = kInf;
  return Perm::from_images(img);
}

struct OrderProfile {
  bool has6 = false, has8 = false, has10 = false;
};
OrderProfile order_profile(const PermGroup &G) {
  cgt::ElementTable t(G);
  OrderProfile p;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    std::uint64_t o = t.element_order(i);
    if (o == 6) p.has6 = true;
    if (o == 8) p.has8 = true;
    if (o == 10) p.has10 = true;
  }
  return p;
}

struct PinnedRow {
  int row;
  const char *group;
  const char *e_label, *a_label, *h_label, *s_label;
  std::uint64_t e_ord, a_ord, h_ord;
  const char *iso_class;  // k6, k66, k10, tutte_8_cage
  Point order, valency;
  std::uint64_t size, girth;
  std::uint32_t max_s;
  bool bipartite, complete, complete_bip, vprim, vbiprim;
  const char *notes;
};

// Pinned facts per row: subgroup orders and the graph each row must produce.
// max_s is relative to the row's own group G (the valency-3 graph is
// (G,4)-arc-transitive for the order-720 groups and (G,5)-arc-transitive
// for Aut(A6)).
const std::array<PinnedRow, 11> kRows = {{
    {1, "a6", "S4", "A4", "A5", "G", 24, 12, 60, "k6",
     6, 5, 15, 3, 2, false, true, false, true, false, ""},
    {2, "s6", "S4 x S2", "S4", "S5", "G", 48, 24, 120, "k6",
     6, 5, 15, 3, 2, false, true, false, true, false, ""},
    {3, "m10", "5:4", "5:2", "A5", "A6", 20, 10, 60, "k66",
     12, 6, 36, 4, 2, true, false, true, false, true, ""},
    {4, "m10", "8:2", "D8", "S4", "A6", 16, 8, 24, "tutte_8_cage",
     30, 3, 45, 8, 4, true, false, false, false, true, ""},
    {5, "m10", "8:2", "Q8", "3^2:Q8", "G", 16, 8, 72, "k10",
     10, 9, 45, 3, 2, false, true, false, true, false, ""},
    {6, "pgl2_9", "D20", "D10", "A5", "A6", 20, 10, 60, "k66",
     12, 6, 36, 4, 2, true, false, true, false, true, ""},
    {7, "pgl2_9", "D16", "D8", "S4", "A6", 16, 8, 24, "tutte_8_cage",
     30, 3, 45, 8, 4, true, false, false, false, true, ""},
    {8, "pgl2_9", "D16", "8", "3^2:8", "G", 16, 8, 72, "k10",
     10, 9, 45, 3, 2, false, true, false, true, false, ""},
    {9, "aut_a6", "10:4", "AGL1(5)", "S5", "S6", 40, 20, 120, "k66",
     12, 6, 36, 4, 2, true, false, true, false, true, ""},
    {10, "aut_a6", "[2^5]", "[2^4]", "S4 x S2", "S6", 32, 16, 48, "tutte_8_cage",
     30, 3, 45, 8, 5, true, false, false, false, true, "Tutte's 8-cage"},
    {11, "aut_a6", "[2^5]", "[2^4]", "3^2:[2^4]", "G", 32, 16, 144, "k10",
     10, 9, 45, 3, 2, false, true, false, true, false, ""},
}};

cgt::json group_json(const std::string &name, const PermGroup &G,
                     const std::string &description, const std::string &socle,
                     const std::string &source, const char *aut_overgroup,
                     const std::vector<cgt::SubgroupEntry> &subs) {
  cgt::CatalogEntry e;
  e.name = name;
  e.degree = G.degree();
  e.generators = cycle_strings(G.generators());
  e.claimed_order = G.order();
  e.metadata["description"] = description;
  e.metadata["socle"] = socle;
  e.metadata["almost_simple"] = true;
  e.metadata["source"] = source;
  if (aut_overgroup) e.metadata["aut_overgroup"] = aut_overgroup;
  e.subgroups = subs;
  return e.to_json();
}

cgt::SubgroupEntry sub_entry(const std::string &name, const std::string &role,
                             const PermGroup &S, const std::string &label) {
  cgt::SubgroupEntry se;
  se.name = name;
  se.role = role;
  se.generators = cycle_strings(S.generators());
  se.claimed_order = S.order();
  se.structure_label = label;
  return se;
}

// AGL(3,2) on the 8 points of F2^3 (point p <-> vector p-1): translations
// plus GL(3,2) as bit-matrix maps.
PermGroup agl32_on8() {
  auto apply_mat = [](const std::array<int, 3> &rows, int v) {
    int out = 0;
    for (int r = 0; r < 3; ++r)
      out |= (__builtin_popcount(rows[r] & v) & 1) << r;
    return out;
  };
  std::vector<Perm> gens;
  for (int w : {1, 2, 4}) {
    std::vector<Point> img(8);
    for (int v = 0; v < 8; ++v) img[v] = v ^ w;
    gens.push_back(Perm::from_images(img));
  }
  // GL(3,2): a shear and an order-7 companion matrix of x^3 + x + 1
  std::array<int, 3> shear = {0b011, 0b010, 0b100};
  std::array<int, 3> comp = {0b010, 0b100, 0b011};
  for (const auto &m : {shear, comp}) {
    std::vector<Point> img(8);
    for (int v = 0; v < 8; ++v) img[v] = apply_mat(m, v);
    gens.push_back(Perm::from_images(img));
  }
  PermGroup H(8, gens);
  if (H.order_u64() != 1344) throw Error("AGL(3,2) construction has order " +
                                         H.order().to_decimal());
  return H;
}

}  // namespace

void gen_family(const std::filesystem::path &out) {
  // --- the five degree-10 groups -----------------------------------------
  Perm t = moebius_add1(), w = moebius_neg_inv(), f = frobenius();
  Perm mg = moebius_scale(kPrim), mg2 = moebius_scale(GF9::mul(kPrim, kPrim));
  Perm sf = scale_frobenius();

  PermGroup a6(10, {t, mg2, w});
  PermGroup s6(10, {t, mg2, w, f});
  PermGroup m10(10, {t, mg2, w, sf});
  PermGroup pgl(10, {t, mg, w});
  PermGroup aut(10, {t, mg, w, f});
  if (a6.order_u64() != 360 || s6.order_u64() != 720 || m10.order_u64() != 720 ||
      pgl.order_u64() != 720 || aut.order_u64() != 1440)
    throw Error("soc(A6) family orders are wrong");
  check_simple_spot(a6);
  OrderProfile ps6 = order_profile(s6), pm10 = order_profile(m10),
               ppgl = order_profile(pgl);
  if (!(ps6.has6 && !ps6.has8 && !ps6.has10)) throw Error("s6 misidentified");
  if (!(!pm10.has6 && pm10.has8 && !pm10.has10)) throw Error("m10 misidentified");
  if (!(ppgl.has8 && ppgl.has10)) throw Error("pgl2_9 misidentified");

  std::map<std::string, const PermGroup *> groups = {
      {"a6", &a6}, {"s6", &s6}, {"m10", &m10}, {"pgl2_9", &pgl}, {"aut_a6", &aut}};

  // --- exhaustive lattice search, deduplicated under Aut(A6) --------------
  std::map<int, cgt::FoundLattice> by_row;
  for (auto &[gname, G] : groups) {
    std::vector<cgt::FoundLattice> found = cgt::find_lattices(*G, &aut);
    std::size_t nontrivial = 0;
    for (cgt::FoundLattice &fl : found) {
      if (!fl.nontrivial) continue;
      ++nontrivial;
      bool matched = false;
      for (const PinnedRow &r : kRows) {
        if (gname != r.group || fl.e_order != r.e_ord || fl.a_order != r.a_ord ||
            fl.h_order != r.h_ord)
          continue;
        by_row.emplace(r.row, fl);
        matched = true;
        break;
      }
      if (!matched)
        throw Error("search found an unexpected lattice in " + gname + ": |E|=" +
                    std::to_string(fl.e_order) + " |A|=" + std::to_string(fl.a_order) +
                    " |H|=" + std::to_string(fl.h_order));
    }
    std::size_t want = gname == "a6" || gname == "s6" ? 1 : 3;
    if (nontrivial != want)
      throw Error(gname + ": expected " + std::to_string(want) + " lattices, found " +
                  std::to_string(nontrivial));
  }
  if (by_row.size() != 11) throw Error("did not recover all 11 rows");

  // --- verify each row's graph against its pinned facts -------------------
  std::map<int, cgt::Graph> graphs;
  std::map<std::string, std::vector<cgt::SubgroupEntry>> subs;
  std::map<int, cgt::json> row_expected;
  for (const PinnedRow &r : kRows) {
    const cgt::FoundLattice &fl = by_row.at(r.row);
    const PermGroup &G = *groups.at(r.group);
    std::string tag = "t2r" + std::string(r.row < 10 ? "0" : "") + std::to_string(r.row);
    PermGroup E(10, reduce_generators(10, fl.E.strong_generators(), fl.E.order()));
    PermGroup A(10, reduce_generators(10, fl.A.strong_generators(), fl.A.order()));
    PermGroup H(10, reduce_generators(10, fl.H.strong_generators(), fl.H.order()));
    cgt::Lattice L{G, E, A, H, "table2_row" + std::to_string(r.row), r.s_label};
    VerifiedLattice v = analyze_lattice(L);
    if (v.graph.n != r.order || v.graph.adj[0].size() != r.valency ||
        v.graph.edge_count() != r.size || v.inv.girth != r.girth ||
        v.sarc.max_s != r.max_s || v.inv.bipartite != r.bipartite ||
        v.inv.complete != r.complete || v.inv.complete_bipartite != r.complete_bip ||
        !v.edge_primitive || !v.local_two_transitive ||
        v.vertex_primitive != r.vprim || v.biprimitive != r.vbiprim)
      throw Error("row " + std::to_string(r.row) + " graph does not match its pinned facts");
    graphs.emplace(r.row, v.graph);
    cgt::json e = expected_block(v);
    e["isomorphism_class"] = r.iso_class;
    row_expected.emplace(r.row, std::move(e));

    subs[r.group].push_back(sub_entry(tag + "_E", "E", E, r.e_label));
    subs[r.group].push_back(sub_entry(tag + "_A", "A", A, r.a_label));
    subs[r.group].push_back(sub_entry(tag + "_H", "H", H, r.h_label));
  }

  // the three valency-3 rows are pairwise isomorphic; so are the K-rows
  for (const auto &[cls, rows] :
       std::map<std::string, std::vector<int>>{{"k6", {1, 2}},
                                               {"k66", {3, 6, 9}},
                                               {"tutte_8_cage", {4, 7, 10}},
                                               {"k10", {5, 8, 11}}}) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!cgt::isomorphic(graphs.at(rows[0]), graphs.at(rows[i])))
        throw Error("rows of class " + cls + " are not pairwise isomorphic");
  }

  // --- write the five group files and eleven lattice files ----------------
  std::map<std::string, std::pair<std::string, std::string>> meta = {
      {"a6", {"A6 as PSL(2,9) acting on the projective line PG(1,9)", "A6"}},
      {"s6", {"S6 as PSigmaL(2,9) on PG(1,9)", "A6"}},
      {"m10", {"M10 = A6.2_3 on PG(1,9)", "A6"}},
      {"pgl2_9", {"PGL(2,9) on PG(1,9)", "A6"}},
      {"aut_a6", {"PGammaL(2,9) = Aut(A6) on PG(1,9)", "A6"}}};
  for (auto &[gname, G] : groups)
    write_json(out / "groups" / (gname + ".json"),
               group_json(gname, *G, meta.at(gname).first, meta.at(gname).second,
                          "Moebius transformations over GF(9) plus the Frobenius map",
                          "aut_a6", subs[gname]));

  for (const PinnedRow &r : kRows) {
    std::string tag = "t2r" + std::string(r.row < 10 ? "0" : "") + std::to_string(r.row);
    cgt::LatticeFile f;
    f.name = "table2_row" + std::string(r.row < 10 ? "0" : "") + std::to_string(r.row);
    f.group_ref = r.group;
    f.e_ref = tag + "_E";
    f.a_ref = tag + "_A";
    f.h_ref = tag + "_H";
    f.s_label = r.s_label;
    f.expected = row_expected.at(r.row);
    f.notes = r.notes;
    write_json(out / "lattices" / (f.name + ".json"), f.to_json());
  }

  // --- A5, S8, A8 and the order-30 valency-7 lattice over S8 --------------
  PermGroup a5(5, {Perm::from_cycles("(1,2,3,4,5)", 5), Perm::from_cycles("(1,2,3)", 5)});
  if (a5.order_u64() != 60) throw Error("A5 order");
  write_json(out / "groups" / "a5.json",
             group_json("a5", a5, "A5 in its natural degree-5 action", "A5",
                        "natural generators", nullptr, {}));

  PermGroup s8(8, {Perm::from_cycles("(1,2)", 8),
                   Perm::from_cycles("(1,2,3,4,5,6,7,8)", 8)});
  PermGroup a8(8, {Perm::from_cycles("(1,2,3)", 8),
                   Perm::from_cycles("(2,3,4,5,6,7,8)", 8)});
  if (s8.order_u64() != 40320 || a8.order_u64() != 20160) throw Error("S8/A8 orders");

  // E = S2 wr S4 on pairs {1,2}{3,4}{5,6}{7,8}; A = E ∩ A8; H = AGL(3,2)
  // aligned so the pairs are the cosets of the first basis vector.
  PermGroup E(8, {Perm::from_cycles("(1,2)", 8), Perm::from_cycles("(1,3)(2,4)", 8),
                  Perm::from_cycles("(1,3,5,7)(2,4,6,8)", 8)});
  if (E.order_u64() != 384) throw Error("S2 wr S4 order");
  std::vector<Perm> a_cands;
  for (const Perm &e : cgt::detail::subgroup_elements(E))
    if (e.is_even()) a_cands.push_back(e);
  if (a_cands.size() != 192) throw Error("E ∩ A8 size");
  PermGroup A(8, reduce_generators(8, a_cands, BigUint(192)));
  PermGroup H = agl32_on8();
  for (const Perm &a : A.generators())
    if (!H.contains(a)) throw Error("E ∩ A8 is not inside AGL(3,2) as aligned");

  cgt::Lattice gamma1{s8, E, A, H, "gamma1", "A8"};
  VerifiedLattice v1 = analyze_lattice(gamma1);
  if (v1.graph.n != 30 || v1.graph.adj[0].size() != 7 || !v1.inv.bipartite ||
      v1.inv.girth != 4 || v1.sarc.max_s != 2 || !v1.local_two_transitive ||
      !v1.edge_primitive || !v1.biprimitive)
    throw Error("order-30 valency-7 graph over S8 does not match its pinned facts");

  write_json(out / "groups" / "s8.json",
             group_json("s8", s8, "S8 in its natural degree-8 action", "A8",
                        "natural generators", nullptr,
                        {sub_entry("gamma1_E", "E", E, "S2 wr S4"),
                         sub_entry("gamma1_A", "A", A, "(S2 wr S4) ∩ A8"),
                         sub_entry("gamma1_H", "H", H, "AGL3(2)")}));
  write_json(out / "groups" / "a8.json",
             group_json("a8", a8, "A8 in its natural degree-8 action", "A8",
                        "natural generators", nullptr, {}));
  {
    cgt::LatticeFile f;
    f.name = "gamma1";
    f.group_ref = "s8";
    f.e_ref = "gamma1_E";
    f.a_ref = "gamma1_A";
    f.h_ref = "gamma1_H";
    f.s_label = "A8";
    f.expected = expected_block(v1);
    f.notes = "bipartite, order 30, valency 7, girth 4; 2- but not 3-arc-transitive";
    write_json(out / "lattices" / "gamma1.json", f.to_json());
  }
}

}  // namespace corpusgen
