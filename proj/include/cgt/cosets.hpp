#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cgt/blocks.hpp"
#include "cgt/group.hpp"
#include "cgt/perm.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultCosetCap = 2000000;

// Canonical representative of the coset H*x: the unique element of Hx whose
// image tuple on H's base is lexicographically least. Two elements lie in the
// same right coset iff their canonical representatives are equal, so the
// representative's image vector doubles as a hash key.
inline Perm canonical_coset_rep(const PermGroup &H, Perm x) {
  for (std::size_t l = 0; l < H.levels().size(); ++l) {
    const auto &lv = H.levels()[l];
    Point best = lv.orbit[0];
    Point best_img = x(best);
    for (Point gamma : lv.orbit) {
      if (x(gamma) < best_img) { best = gamma; best_img = x(gamma); }
    }
    if (best != lv.base_point) x = H.transversal(l, best) * x;
  }
  return x;
}

// The permutation action of G on the right cosets of H, cosets numbered in
// breadth-first discovery order from H with generators applied in list order
// (coset 0 is H itself).
struct CosetAction {
  Point degree = 0;                 // index |G:H|
  std::vector<Perm> reps;           // canonical coset representatives
  std::vector<Perm> gen_images;     // one degree-|G:H| permutation per generator of G
  bool faithful = false;
  BigUint image_order{1};
  BigUint kernel_order{1};

  std::unordered_map<Perm, Point, PermHash> index_of;

  Point identify(const Perm &x, const PermGroup &H) const {
    Perm c = canonical_coset_rep(H, x);
    auto it = index_of.find(c);
    if (it == index_of.end()) throw Error("element identifies no coset (not in G?)");
    return it->second;
  }
};

inline CosetAction coset_action(const PermGroup &G, const PermGroup &H,
                                std::uint64_t cap = kDefaultCosetCap) {
  if (G.degree() != H.degree()) throw Error("degree mismatch in coset_action");
  for (const Perm &h : H.generators())
    if (!G.contains(h))
      throw Error("subgroup generator not contained in parent group");
  BigUint index_big = G.order().divide_exact(H.order());
  if (!index_big.fits_u64() || index_big.to_u64() > cap)
    throw Error("coset index " + index_big.to_decimal() + " exceeds cap " +
                std::to_string(cap));
  Point index = static_cast<Point>(index_big.to_u64());

  CosetAction ca;
  ca.degree = index;
  ca.reps.reserve(index);
  Perm id(G.degree());
  Perm root = canonical_coset_rep(H, id);
  ca.reps.push_back(root);
  ca.index_of.emplace(root, 0);
  const auto &gens = G.generators();
  ca.gen_images.assign(gens.size(), Perm(index));
  std::vector<std::vector<Point>> img(gens.size());
  for (auto &v : img) v.reserve(index);

  for (Point i = 0; i < ca.reps.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Perm moved = canonical_coset_rep(H, ca.reps[i] * gens[gi]);
      auto [it, inserted] = ca.index_of.emplace(moved, static_cast<Point>(ca.reps.size()));
      if (inserted) ca.reps.push_back(std::move(moved));
      img[gi].push_back(it->second);
    }
    if (ca.reps.size() > index)
      throw Error("coset enumeration exceeded the index; subgroup chain corrupt");
  }
  if (ca.reps.size() != index)
    throw Error("coset enumeration found " + std::to_string(ca.reps.size()) +
                " cosets, expected " + index_big.to_decimal());
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    ca.gen_images[gi] = Perm::from_images(std::move(img[gi]));

  PermGroup image(index, ca.gen_images);
  ca.image_order = image.order();
  ca.kernel_order = G.order().divide_exact(ca.image_order);
  ca.faithful = ca.image_order == G.order();
  return ca;
}

// H max G iff the coset action of G on H-cosets is primitive (standard
// correspondence between overgroups of H and block systems).
inline bool is_maximal(const PermGroup &G, const PermGroup &H,
                       std::uint64_t cap = kDefaultCosetCap) {
  if (G.order() == H.order())
    throw Error("is_maximal requires a proper subgroup");
  CosetAction ca = coset_action(G, H, cap);
  return check_primitive(ca.degree, ca.gen_images).primitive;
}

}  // namespace cgt
