// M12.2 on 24 points, derived inside M24. M24 itself is generated over
// PG(1,23) by the maps x -> x+1, x -> 2x, x -> -1/x together with the
// quotic map x -> x^3/9 (squares) / 9x^3 (non-squares); its order is checked
// against 244823040. The binary Golay code is rebuilt as the extended
// quadratic-residue code; the setwise stabilizer of a complementary dodecad
// pair, computed through Schreier generators on the pair orbit, is M12.2
// acting transitively on the 24 points. The lattice (3^{1+2}:D8, 3^{1+2}:2^2,
// 3^2:2S4) is found by explicit element search.
#include "common.hpp"

namespace corpusgen {

namespace {

constexpr int kQ = 23;
constexpr int kInf = 23;  // point 23 represents infinity

int mod(int x) { return ((x % kQ) + kQ) % kQ; }
int inv_mod(int x) {
  for (int y = 1; y < kQ; ++y)
    if (x * y % kQ == 1) return y;
  throw Error("inverting 0 mod 23");
}
bool is_square(int x) {
  for (int y = 1; y < kQ; ++y)
    if (y * y % kQ == x) return true;
  return false;
}

Perm map_on_pg(const std::function<int(int)> &f, int inf_to, int from_inf) {
  std::vector<Point> img(24);
  for (int x = 0; x < kQ; ++x) img[x] = f(x) == -1 ? kInf : f(x);
  img[kInf] = from_inf;
  (void)inf_to;
  return Perm::from_images(img);
}

std::vector<Perm> m24_generators() {
  std::vector<Perm> gens;
  gens.push_back(map_on_pg([](int x) { return mod(x + 1); }, kInf, kInf));
  gens.push_back(map_on_pg([](int x) { return mod(2 * x); }, kInf, kInf));
  gens.push_back(map_on_pg([](int x) { return x == 0 ? -1 : mod(-inv_mod(x)); },
                           0, 0));  // x -> -1/x, 0 <-> infinity
  gens.push_back(map_on_pg(
      [](int x) {
        if (x == 0) return 0;
        int cube = mod(mod(x * x) * x);
        return is_square(x) ? mod(cube * inv_mod(9)) : mod(9 * cube);
      },
      kInf, kInf));
  return gens;
}

// The binary Golay code as the extended QR code of length 23: find a
// degree-11 factor of (x^23+1)/(x+1), span the cyclic shifts, extend by
// overall parity at position infinity. Returns 12 basis words (24-bit).
std::vector<std::uint32_t> golay_basis(const std::vector<Perm> &m24_gens) {
  auto poly_mod_divides = [](std::uint32_t divisor, int deg) {
    // divide x^23 + 1 by divisor over F2; true if remainder is zero
    std::uint64_t rem = (1ull << 23) | 1ull;
    for (int shift = 23 - deg; shift >= 0; --shift)
      if (rem & (1ull << (shift + deg))) rem ^= static_cast<std::uint64_t>(divisor) << shift;
    return rem == 0;
  };
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t g = (1u << 11) | 1u; g < (1u << 12); g += 2)
    if ((g & 1u) && (g >> 11) == 1u && poly_mod_divides(g, 11)) candidates.push_back(g);
  if (candidates.size() != 2)
    throw Error("expected exactly two degree-11 factors of (x^23+1)/(x+1)");

  auto build = [&](std::uint32_t gen) {
    std::vector<std::uint32_t> basis;
    for (int i = 0; i < 12; ++i) {
      std::uint32_t w = 0;
      for (int b = 0; b <= 11; ++b)
        if (gen & (1u << b)) w |= 1u << ((b + i) % 23);
      // parity bit at position 23 = infinity
      if (__builtin_popcount(w) % 2) w |= 1u << 23;
      basis.push_back(w);
    }
    return basis;
  };
  auto echelon = [](std::vector<std::uint32_t> rows) {
    std::vector<std::uint32_t> out;
    for (int bit = 23; bit >= 0; --bit) {
      std::size_t pivot = SIZE_MAX;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] & (1u << bit)) { pivot = i; break; }
      if (pivot == SIZE_MAX) continue;
      std::uint32_t p = rows[pivot];
      rows.erase(rows.begin() + pivot);
      for (auto &r : rows)
        if (r & (1u << bit)) r ^= p;
      out.push_back(p);
    }
    return out;
  };
  auto in_span = [&](const std::vector<std::uint32_t> &ech, std::uint32_t w) {
    for (std::uint32_t row : ech) {
      std::uint32_t high = 31 - __builtin_clz(row);
      if (w & (1u << high)) w ^= row;
    }
    return w == 0;
  };
  auto permute_word = [](std::uint32_t w, const Perm &p) {
    std::uint32_t out = 0;
    for (int i = 0; i < 24; ++i)
      if (w & (1u << i)) out |= 1u << p(i);
    return out;
  };

  for (std::uint32_t gen : candidates) {
    std::vector<std::uint32_t> basis = build(gen);
    std::vector<std::uint32_t> ech = echelon(basis);
    if (ech.size() != 12) continue;
    bool invariant = true;
    for (const Perm &p : m24_gens)
      for (std::uint32_t b : basis)
        if (!in_span(ech, permute_word(b, p))) { invariant = false; break; }
    if (!invariant) continue;
    // weight distribution check: 759 octads, 2576 dodecads
    std::size_t w8 = 0, w12 = 0;
    for (std::uint32_t m = 0; m < (1u << 12); ++m) {
      std::uint32_t w = 0;
      for (int i = 0; i < 12; ++i)
        if (m & (1u << i)) w ^= basis[i];
      int wt = __builtin_popcount(w);
      if (wt != 0 && wt != 8 && wt != 12 && wt != 16 && wt != 24)
        throw Error("Golay weight enumerator violated");
      if (wt == 8) ++w8;
      if (wt == 12) ++w12;
    }
    if (w8 != 759 || w12 != 2576) throw Error("Golay weight counts wrong");
    return basis;
  }
  throw Error("no M24-invariant extended QR code found");
}

}  // namespace

void gen_m12(const std::filesystem::path &out) {
  std::vector<Perm> gens = m24_generators();
  PermGroup M24(24, gens);
  if (!(M24.order() == BigUint(244823040)))
    throw Error("M24 construction has order " + M24.order().to_decimal());
  std::cout << "M24 on 24 points: order 244823040 confirmed\n";

  std::vector<std::uint32_t> basis = golay_basis(gens);

  // one dodecad D; the pair {D, complement} is our M12.2 anchor
  std::uint32_t dodecad = 0;
  for (std::uint32_t m = 1; m < (1u << 12) && !dodecad; ++m) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if (m & (1u << i)) w ^= basis[i];
    if (__builtin_popcount(w) == 12) dodecad = w;
  }
  auto permute_word = [](std::uint32_t w, const Perm &p) {
    std::uint32_t out = 0;
    for (int i = 0; i < 24; ++i)
      if (w & (1u << i)) out |= 1u << p(i);
    return out;
  };
  auto pair_key = [](std::uint32_t w) {
    std::uint32_t c = (~w) & 0xFFFFFFu;
    return std::min(w, c);
  };

  // orbit of the unordered pair with Schreier transversal words
  std::unordered_map<std::uint32_t, std::uint32_t> orbit_index;
  std::vector<std::uint32_t> orbit{pair_key(dodecad)};
  std::vector<Perm> transversal{Perm(24)};
  orbit_index.emplace(orbit[0], 0);
  std::vector<Perm> stab_cands;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Perm &g : gens) {
      std::uint32_t img = pair_key(permute_word(orbit[i], g));
      auto it = orbit_index.find(img);
      if (it == orbit_index.end()) {
        orbit_index.emplace(img, static_cast<std::uint32_t>(orbit.size()));
        orbit.push_back(img);
        transversal.push_back(transversal[i] * g);
      } else {
        // Schreier generator: t_i * g * t_img^{-1} stabilizes the pair
        stab_cands.push_back(transversal[i] * g * transversal[it->second].inverse());
      }
    }
  if (orbit.size() != 1288)
    throw Error("dodecad pair orbit has size " + std::to_string(orbit.size()));

  std::vector<Perm> m12_2_gens = reduce_generators(24, stab_cands, BigUint(190080));
  PermGroup M12_2(24, m12_2_gens);
  if (!M12_2.is_transitive()) throw Error("M12.2 should be transitive on 24 points");
  PermGroup M12_derived = cgt::derived_subgroup(M12_2);
  if (!(M12_derived.order() == BigUint(95040)))
    throw Error("derived subgroup of M12.2 is not M12");
  check_simple_spot(M12_derived);
  std::cout << "M12.2 on 24 points: order 190080 confirmed\n";

  FlatEnum all(24, m12_2_gens, 190080);
  auto fixes_dodecad = [&](std::uint32_t id) {
    return permute_word(dodecad, all.perm(id)) == dodecad;
  };

  // Sylow 3-subgroup P (order 27) and E = N(P) of order 216
  std::vector<std::uint32_t> order3;
  for (std::uint32_t i = 0; i < all.size(); ++i)
    if (all.element_order(i) == 3) order3.push_back(i);
  std::vector<std::uint32_t> sylow3;
  for (std::size_t a = 0; a < order3.size() && sylow3.empty(); ++a)
    for (std::size_t b = a + 1; b < order3.size(); ++b) {
      std::vector<std::uint32_t> cl = all.closure({order3[a], order3[b]}, 27);
      if (cl.size() == 27) { sylow3 = cl; break; }
    }
  if (sylow3.empty()) throw Error("no Sylow 3-subgroup found as a 2-generated 27-group");
  std::unordered_set<std::uint32_t> p_set(sylow3.begin(), sylow3.end());
  std::vector<std::uint32_t> p_gens;
  for (std::uint32_t g : sylow3)
    if (g != 0) { p_gens.push_back(g); if (p_gens.size() == 2) break; }

  std::vector<std::uint32_t> e_ids;
  for (std::uint32_t g = 0; g < all.size(); ++g) {
    std::uint32_t gi = all.inverse(g);
    bool ok = true;
    for (std::uint32_t x : p_gens)
      if (!p_set.count(all.mul(all.mul(gi, x), g))) { ok = false; break; }
    if (ok) {
      // conjugation by g maps the generated subgroup into P, hence onto it
      std::vector<std::uint32_t> moved;
      for (std::uint32_t x : sylow3) moved.push_back(all.mul(all.mul(gi, x), g));
      std::unordered_set<std::uint32_t> ms(moved.begin(), moved.end());
      if (ms == p_set) e_ids.push_back(g);
    }
  }
  if (e_ids.size() != 216)
    throw Error("N(Sylow_3) has order " + std::to_string(e_ids.size()));

  // A = E ∩ M12 (the dodecad-preserving half), of order 108
  std::vector<std::uint32_t> a_ids;
  for (std::uint32_t g : e_ids)
    if (fixes_dodecad(g)) a_ids.push_back(g);
  if (a_ids.size() != 108) throw Error("E ∩ M12 has order " + std::to_string(a_ids.size()));

  // H = 3^2:2S4 of order 432 inside M12, containing A
  std::vector<std::uint32_t> h_ids;
  for (std::uint32_t t = 0; t < all.size() && h_ids.empty(); ++t) {
    if (all.element_order(t) != 2 || !fixes_dodecad(t)) continue;
    std::vector<std::uint32_t> seed = a_ids;
    seed.push_back(t);
    std::vector<std::uint32_t> cl = all.closure(seed, 432);
    if (cl.size() == 432) {
      bool inside_m12 = true;
      for (std::uint32_t x : cl)
        if (!fixes_dodecad(x)) { inside_m12 = false; break; }
      if (inside_m12) h_ids = cl;
    }
  }
  if (h_ids.empty()) throw Error("no overgroup 3^2:2S4 of A found inside M12");

  auto group_from_ids = [&](const std::vector<std::uint32_t> &ids, std::uint64_t ord) {
    std::vector<Perm> cands;
    for (std::uint32_t i : ids) cands.push_back(all.perm(i));
    return PermGroup(24, reduce_generators(24, cands, BigUint(ord)));
  };
  PermGroup E = group_from_ids(e_ids, 216);
  PermGroup A = group_from_ids(a_ids, 108);
  PermGroup H = group_from_ids(h_ids, 432);

  cgt::Lattice L{M12_2, E, A, H, "m12_2_weiss", "M12"};
  VerifiedLattice v = analyze_lattice(L);
  if (v.graph.n != 440 || v.graph.adj[0].size() != 4 || v.sarc.max_s < 3 ||
      !v.edge_primitive || !v.inv.bipartite || !v.biprimitive)
    throw Error("M12.2 graph does not match its pinned facts");
  std::cout << "M12.2 graph: 440 vertices, valency 4, max_s = " << v.sarc.max_s
            << ", girth " << v.inv.girth << "\n";

  cgt::CatalogEntry entry;
  entry.name = "m12_2";
  entry.degree = 24;
  entry.generators = cycle_strings(M12_2.generators());
  entry.claimed_order = BigUint(190080);
  entry.metadata["description"] =
      "M12.2 = Aut(M12) acting on a complementary dodecad pair of the binary "
      "Golay code (two fused 12-point actions)";
  entry.metadata["socle"] = "M12";
  entry.metadata["almost_simple"] = true;
  entry.metadata["source"] =
      "setwise stabilizer of a dodecad pair inside M24 over PG(1,23)";
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "m12_2_E", "E", cycle_strings(E.generators()), BigUint(216), "3^{1+2}_+:D8"});
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "m12_2_A", "A", cycle_strings(A.generators()), BigUint(108), "3^{1+2}_+:2^2"});
  entry.subgroups.push_back(cgt::SubgroupEntry{
      "m12_2_H", "H", cycle_strings(H.generators()), BigUint(432), "3^2:2S4"});
  write_json(out / "groups" / "m12_2.json", entry.to_json());

  cgt::LatticeFile f;
  f.name = "m12_2_weiss";
  f.group_ref = "m12_2";
  f.e_ref = "m12_2_E";
  f.a_ref = "m12_2_A";
  f.h_ref = "m12_2_H";
  f.s_label = "M12";
  f.expected = expected_block(v);
  f.notes = "440 vertices, valency 4";
  write_json(out / "lattices" / "m12_2_weiss.json", f.to_json());
}

}  // namespace corpusgen
