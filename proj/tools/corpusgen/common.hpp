// Shared machinery for the corpus generator: a flat element enumerator for
// groups too large for the library's ElementTable, greedy generating-set
// reduction, and JSON writers. The generator derives every shipped group
// from first principles and re-verifies orders before writing anything.
#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unordered_set>
#include <vector>

#include "cgt/catalog.hpp"
#include "cgt/coset_graph.hpp"
#include "cgt/graph_props.hpp"
#include "cgt/group.hpp"
#include "cgt/lattice.hpp"

namespace corpusgen {

using cgt::BigUint;
using cgt::Error;
using cgt::Perm;
using cgt::PermGroup;
using cgt::Point;

// Full element enumeration with compact uint16 image tables; practical up to
// a few hundred thousand elements at degree a few hundred.
class FlatEnum {
public:
  FlatEnum(Point degree, const std::vector<Perm> &gens, std::size_t expected)
      : deg_(degree) {
    std::size_t cap = 1;
    while (cap < expected * 2) cap <<= 1;
    table_.assign(cap, UINT32_MAX);
    mask_ = cap - 1;
    data_.reserve(expected * deg_);

    std::vector<std::uint16_t> id(deg_);
    for (Point i = 0; i < deg_; ++i) id[i] = static_cast<std::uint16_t>(i);
    insert(id.data());
    for (const Perm &g : gens) gen_ids_.push_back(g);

    std::vector<std::uint16_t> buf(deg_);
    for (std::size_t i = 0; i < size(); ++i) {
      const std::uint16_t *e = elem(i);
      for (const Perm &g : gen_ids_) {
        for (Point x = 0; x < deg_; ++x) buf[x] = static_cast<std::uint16_t>(g(e[x]));
        lookup_or_insert(buf.data());
      }
      if (size() > expected)
        throw Error("flat enumeration exceeded the expected order");
    }
    if (size() != expected)
      throw Error("flat enumeration found " + std::to_string(size()) +
                  " elements, expected " + std::to_string(expected));
  }

  Point degree() const { return deg_; }
  std::size_t size() const { return count_; }
  const std::uint16_t *elem(std::size_t id) const { return data_.data() + id * deg_; }

  Perm perm(std::size_t id) const {
    std::vector<Point> img(deg_);
    const std::uint16_t *e = elem(id);
    for (Point i = 0; i < deg_; ++i) img[i] = e[i];
    return Perm::from_images(img);
  }

  std::uint32_t id(const Perm &p) const {
    std::vector<std::uint16_t> buf(deg_);
    for (Point i = 0; i < deg_; ++i) buf[i] = static_cast<std::uint16_t>(p(i));
    std::uint32_t r = find(buf.data());
    if (r == UINT32_MAX) throw Error("element not in enumeration");
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint16_t *pa = elem(a), *pb = elem(b);
    std::vector<std::uint16_t> buf(deg_);
    for (Point x = 0; x < deg_; ++x) buf[x] = pb[pa[x]];
    std::uint32_t r = find(buf.data());
    if (r == UINT32_MAX) throw Error("product escaped the enumeration");
    return r;
  }

  std::uint32_t inverse(std::uint32_t a) const {
    const std::uint16_t *pa = elem(a);
    std::vector<std::uint16_t> buf(deg_);
    for (Point x = 0; x < deg_; ++x) buf[pa[x]] = static_cast<std::uint16_t>(x);
    std::uint32_t r = find(buf.data());
    if (r == UINT32_MAX) throw Error("inverse escaped the enumeration");
    return r;
  }

  std::uint64_t element_order(std::uint32_t a) const { return perm(a).order(); }

  // Closure of the given ids, capped; returns empty vector when the cap is hit.
  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> seed,
                                     std::size_t cap) const {
    std::unordered_set<std::uint32_t> s{0};
    std::vector<std::uint32_t> list{0};
    for (std::uint32_t g : seed)
      if (s.insert(g).second) list.push_back(g);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::uint32_t g : seed) {
        std::uint32_t p = mul(list[i], g);
        if (s.insert(p).second) {
          list.push_back(p);
          if (list.size() > cap) return {};
        }
      }
    return list;
  }

private:
  std::uint32_t hash(const std::uint16_t *img) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Point i = 0; i < deg_; ++i) h = (h ^ img[i]) * 0x100000001b3ull;
    return static_cast<std::uint32_t>(h ^ (h >> 32));
  }
  std::uint32_t find(const std::uint16_t *img) const {
    std::size_t slot = hash(img) & mask_;
    while (table_[slot] != UINT32_MAX) {
      if (std::memcmp(elem(table_[slot]), img, deg_ * 2) == 0) return table_[slot];
      slot = (slot + 1) & mask_;
    }
    return UINT32_MAX;
  }
  std::uint32_t insert(const std::uint16_t *img) {
    data_.insert(data_.end(), img, img + deg_);
    std::uint32_t id = count_++;
    std::size_t slot = hash(img) & mask_;
    while (table_[slot] != UINT32_MAX) slot = (slot + 1) & mask_;
    table_[slot] = id;
    return id;
  }
  std::uint32_t lookup_or_insert(const std::uint16_t *img) {
    std::size_t slot = hash(img) & mask_;
    while (table_[slot] != UINT32_MAX) {
      if (std::memcmp(elem(table_[slot]), img, deg_ * 2) == 0) return table_[slot];
      slot = (slot + 1) & mask_;
    }
    std::uint32_t id = static_cast<std::uint32_t>(count_);
    data_.insert(data_.end(), img, img + deg_);
    table_[slot] = id;
    ++count_;
    return id;
  }

  Point deg_;
  std::vector<Perm> gen_ids_;
  std::vector<std::uint16_t> data_;
  std::vector<std::uint32_t> table_;
  std::size_t mask_ = 0;
  std::uint32_t count_ = 0;
};

// Greedy generating-set reduction: scan the candidates in order, keep those
// that grow the group, stop at the target order.
inline std::vector<Perm> reduce_generators(Point degree,
                                           const std::vector<Perm> &candidates,
                                           const BigUint &target) {
  std::vector<Perm> gens;
  PermGroup cur = PermGroup::trivial(degree);
  for (const Perm &c : candidates) {
    if (cur.order() == target) break;
    if (cur.contains(c)) continue;
    gens.push_back(c);
    cur = PermGroup(degree, gens);
  }
  if (!(cur.order() == target))
    throw Error("generator reduction missed the target order " + target.to_decimal());
  return gens;
}

inline std::vector<std::string> cycle_strings(const std::vector<Perm> &gens) {
  std::vector<std::string> out;
  for (const Perm &g : gens) out.push_back(g.to_cycles());
  return out;
}

inline void write_json(const std::filesystem::path &path, const cgt::json &j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("failed to write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

// Sanity: the subgroup generated by the conjugates of a few nontrivial
// elements is everything, i.e. the group is simple enough for our purposes.
inline void check_simple_spot(const PermGroup &G, int probes = 2) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < probes; ++i) {
    Perm x(G.degree());
    while (x.is_identity()) x = G.random_element(rng);
    PermGroup ncl = cgt::normal_closure(G, PermGroup(G.degree(), {x}));
    if (!(ncl.order() == G.order()))
      throw Error("normal closure of a random element is proper; group not simple");
  }
}

struct VerifiedLattice {
  cgt::Lattice lattice;
  cgt::Graph graph;
  cgt::GraphInvariants inv;
  cgt::SArcResult sarc;
  bool edge_primitive = false;
  bool biprimitive = false;
  bool vertex_primitive = false;
  bool local_two_transitive = false;
};

// Build the graph, compute everything the expected block wants, and insist
// the lattice verifies.
inline VerifiedLattice analyze_lattice(const cgt::Lattice &L,
                                       std::uint64_t cap = cgt::kDefaultCosetCap) {
  VerifiedLattice out{L, {}, {}, {}, false, false, false, false};
  cgt::VerificationReport rep = cgt::verify_lattice(L, cap);
  if (!rep.verdict())
    throw Error("lattice " + L.name + " failed verification");
  out.graph = cgt::build_from_lattice(L, cap);
  out.inv = cgt::basic_invariants(out.graph);
  out.sarc = cgt::s_arc_transitivity(out.graph);
  out.edge_primitive = cgt::is_edge_primitive(out.graph);
  out.biprimitive = cgt::is_biprimitive(out.graph.n, out.graph.action);
  out.vertex_primitive = cgt::check_primitive(out.graph.n, out.graph.action).primitive;
  out.local_two_transitive = cgt::local_action(out.graph, 0).two_transitive;
  return out;
}

inline cgt::json expected_block(const VerifiedLattice &v) {
  cgt::json e;
  e["order"] = v.graph.n;
  e["size"] = v.graph.edge_count();
  e["valency"] = v.graph.adj.empty() ? 0 : v.graph.adj[0].size();
  e["girth"] = v.inv.girth;
  e["max_s"] = v.sarc.max_s;
  if (v.sarc.stabilizer_orders.size() > 2)
    e["two_arc_stabilizer_order"] = v.sarc.stabilizer_orders[2].to_decimal();
  e["edge_primitive"] = v.edge_primitive;
  e["bipartite"] = v.inv.bipartite;
  e["vertex_primitive"] = v.vertex_primitive;
  e["vertex_biprimitive"] = v.biprimitive;
  e["local_two_transitive"] = v.local_two_transitive;
  e["complete"] = v.inv.complete;
  e["complete_bipartite"] = v.inv.complete_bipartite;
  return e;
}

void gen_family(const std::filesystem::path &out);
void gen_j1(const std::filesystem::path &out);
void gen_m12(const std::filesystem::path &out);
void gen_hosi(const std::filesystem::path &out);
void gen_meta(const std::filesystem::path &out);

}  // namespace corpusgen
