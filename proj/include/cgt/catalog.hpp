#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/bigint.hpp"
#include "cgt/group.hpp"
#include "cgt/lattice.hpp"

namespace cgt {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// File schemas (schema_version 1)
//
// Group file:
//   { "schema_version": 1, "name", "degree", "generators": [cycle strings],
//     "claimed_order": "decimal string", "metadata": {...},
//     "subgroups": [ { "name", "role": "E"|"A"|"H", "generators",
//                      "claimed_order", "structure_label" } ] }
// Entries with metadata.non_constructible == true carry orders and notes
// only; they have no generators and are never built.
//
// Lattice file:
//   { "schema_version": 1, "name", "group_ref", "E_ref", "A_ref", "H_ref",
//     "s_label", "expected": {...}, "notes" }
// *_ref fields name subgroup entries of the referenced group file.
// ---------------------------------------------------------------------------

struct SubgroupEntry {
  std::string name;
  std::string role;
  std::vector<std::string> generators;
  BigUint claimed_order;
  std::string structure_label;
};

struct CatalogEntry {
  std::string name;
  Point degree = 0;
  std::vector<std::string> generators;
  BigUint claimed_order;
  json metadata;
  std::vector<SubgroupEntry> subgroups;

  bool non_constructible() const {
    return metadata.contains("non_constructible") &&
           metadata["non_constructible"].get<bool>();
  }
  std::optional<std::string> aut_overgroup() const {
    if (metadata.contains("aut_overgroup"))
      return metadata["aut_overgroup"].get<std::string>();
    return std::nullopt;
  }

  json to_json() const {
    json j;
    j["schema_version"] = 1;
    j["name"] = name;
    j["degree"] = degree;
    j["generators"] = generators;
    j["claimed_order"] = claimed_order.to_decimal();
    j["metadata"] = metadata;
    if (!subgroups.empty()) {
      json arr = json::array();
      for (const SubgroupEntry &s : subgroups) {
        json e;
        e["name"] = s.name;
        e["role"] = s.role;
        e["generators"] = s.generators;
        e["claimed_order"] = s.claimed_order.to_decimal();
        e["structure_label"] = s.structure_label;
        arr.push_back(std::move(e));
      }
      j["subgroups"] = std::move(arr);
    }
    return j;
  }
};

struct LatticeFile {
  std::string name;
  std::string group_ref, e_ref, a_ref, h_ref;
  std::string s_label;
  json expected;
  std::string notes;
  bool non_constructible = false;

  json to_json() const {
    json j;
    j["schema_version"] = 1;
    j["name"] = name;
    if (non_constructible) j["non_constructible"] = true;
    j["group_ref"] = group_ref;
    if (!e_ref.empty()) j["E_ref"] = e_ref;
    if (!a_ref.empty()) j["A_ref"] = a_ref;
    if (!h_ref.empty()) j["H_ref"] = h_ref;
    j["s_label"] = s_label;
    j["expected"] = expected;
    if (!notes.empty()) j["notes"] = notes;
    return j;
  }
};

namespace catalog_detail {

inline json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const std::exception &e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

inline void require_fields(const json &j, std::initializer_list<const char *> keys,
                           const std::string &where) {
  for (const char *k : keys)
    if (!j.contains(k)) throw Error(where + ": missing field '" + k + "'");
}

}  // namespace catalog_detail

inline CatalogEntry parse_group_json(const json &j, const std::string &where) {
  catalog_detail::require_fields(
      j, {"schema_version", "name", "degree", "generators", "claimed_order"}, where);
  if (j["schema_version"].get<int>() != 1)
    throw Error(where + ": unsupported schema_version");
  CatalogEntry e;
  e.name = j["name"].get<std::string>();
  e.degree = j["degree"].get<Point>();
  for (const auto &g : j["generators"]) e.generators.push_back(g.get<std::string>());
  e.claimed_order = BigUint::from_decimal(j["claimed_order"].get<std::string>());
  if (j.contains("metadata")) e.metadata = j["metadata"];
  if (j.contains("subgroups")) {
    for (const auto &s : j["subgroups"]) {
      catalog_detail::require_fields(s, {"name", "role", "generators", "claimed_order"},
                                     where + " subgroup");
      SubgroupEntry se;
      se.name = s["name"].get<std::string>();
      se.role = s["role"].get<std::string>();
      for (const auto &g : s["generators"]) se.generators.push_back(g.get<std::string>());
      se.claimed_order = BigUint::from_decimal(s["claimed_order"].get<std::string>());
      if (s.contains("structure_label"))
        se.structure_label = s["structure_label"].get<std::string>();
      e.subgroups.push_back(std::move(se));
    }
  }
  return e;
}

struct LoadedGroup {
  CatalogEntry entry;
  PermGroup group{0};
  std::map<std::string, PermGroup> subgroups;

  const PermGroup &subgroup(const std::string &name) const {
    auto it = subgroups.find(name);
    if (it == subgroups.end())
      throw Error("group '" + entry.name + "' has no subgroup entry '" + name + "'");
    return it->second;
  }
};

// Parse and verify one group file: the BSGS order must equal the claimed
// order, every subgroup generator must pass membership in the parent, and
// every subgroup's claimed order must match.
inline LoadedGroup load_group(const std::filesystem::path &path) {
  json j = catalog_detail::read_json_file(path);
  CatalogEntry entry = parse_group_json(j, path.string());
  LoadedGroup out;
  out.entry = entry;
  if (entry.non_constructible()) {
    if (!entry.generators.empty())
      throw Error(path.string() + ": non-constructible entries carry no generators");
    return out;
  }
  std::vector<Perm> gens;
  for (const std::string &s : entry.generators)
    gens.push_back(Perm::from_cycles(s, entry.degree));
  out.group = PermGroup(entry.degree, gens);
  if (!(out.group.order() == entry.claimed_order))
    throw Error(path.string() + ": claimed order " + entry.claimed_order.to_decimal() +
                " but Schreier-Sims gives " + out.group.order().to_decimal());
  for (const SubgroupEntry &se : entry.subgroups) {
    std::vector<Perm> sgens;
    for (const std::string &s : se.generators)
      sgens.push_back(Perm::from_cycles(s, entry.degree));
    for (const Perm &g : sgens)
      if (!out.group.contains(g))
        throw Error(path.string() + ": subgroup '" + se.name +
                    "' generator not contained in parent");
    PermGroup sub(entry.degree, sgens);
    if (!(sub.order() == se.claimed_order))
      throw Error(path.string() + ": subgroup '" + se.name + "' claimed order " +
                  se.claimed_order.to_decimal() + " but Schreier-Sims gives " +
                  sub.order().to_decimal());
    out.subgroups.emplace(se.name, std::move(sub));
  }
  return out;
}

inline LatticeFile parse_lattice_json(const json &j, const std::string &where) {
  catalog_detail::require_fields(j, {"schema_version", "name", "group_ref"}, where);
  if (j["schema_version"].get<int>() != 1)
    throw Error(where + ": unsupported schema_version");
  LatticeFile f;
  f.name = j["name"].get<std::string>();
  f.group_ref = j["group_ref"].get<std::string>();
  if (j.contains("non_constructible")) f.non_constructible = j["non_constructible"].get<bool>();
  if (!f.non_constructible)
    catalog_detail::require_fields(j, {"E_ref", "A_ref", "H_ref"}, where);
  if (j.contains("E_ref")) f.e_ref = j["E_ref"].get<std::string>();
  if (j.contains("A_ref")) f.a_ref = j["A_ref"].get<std::string>();
  if (j.contains("H_ref")) f.h_ref = j["H_ref"].get<std::string>();
  if (j.contains("s_label")) f.s_label = j["s_label"].get<std::string>();
  if (j.contains("expected")) f.expected = j["expected"];
  if (j.contains("notes")) f.notes = j["notes"].get<std::string>();
  return f;
}

// The corpus directory: data/groups/*.json and data/lattices/*.json.
class Catalog {
public:
  explicit Catalog(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!std::filesystem::is_directory(dir_))
      throw Error("catalog directory not found: " + dir_.string());
  }

  // Resolution order: CATALOG_DIR, then the build-time source path.
  static Catalog locate() {
    if (const char *env = std::getenv("CATALOG_DIR")) return Catalog(env);
#ifdef CGT_SOURCE_CATALOG_DIR
    return Catalog(CGT_SOURCE_CATALOG_DIR);
#else
    return Catalog("data");
#endif
  }

  std::vector<std::string> group_names() const { return names_in("groups"); }
  std::vector<std::string> lattice_names() const { return names_in("lattices"); }

  bool has_group(const std::string &name) const {
    return std::filesystem::exists(dir_ / "groups" / (name + ".json"));
  }
  bool has_lattice(const std::string &name) const {
    return std::filesystem::exists(dir_ / "lattices" / (name + ".json"));
  }

  const LoadedGroup &group(const std::string &name) {
    auto it = groups_.find(name);
    if (it != groups_.end()) return it->second;
    auto path = dir_ / "groups" / (name + ".json");
    if (!std::filesystem::exists(path)) throw Error("no catalog group '" + name + "'");
    LoadedGroup lg = load_group(path);
    if (lg.entry.name != name)
      throw Error(path.string() + ": file name and entry name disagree");
    return groups_.emplace(name, std::move(lg)).first->second;
  }

  LatticeFile lattice_file(const std::string &name) const {
    auto path = dir_ / "lattices" / (name + ".json");
    if (!std::filesystem::exists(path)) throw Error("no catalog lattice '" + name + "'");
    return parse_lattice_json(catalog_detail::read_json_file(path), path.string());
  }

  // Resolve a lattice file to live groups, pre-verifying containments and
  // the |E:A| = 2 role-pair condition.
  Lattice lattice(const std::string &name) {
    LatticeFile f = lattice_file(name);
    if (f.non_constructible)
      throw Error("lattice '" + name + "' is marked non-constructible");
    const LoadedGroup &lg = group(f.group_ref);
    if (lg.entry.non_constructible())
      throw Error("lattice '" + name + "' references a non-constructible group");
    Lattice L{lg.group, lg.subgroup(f.e_ref), lg.subgroup(f.a_ref),
              lg.subgroup(f.h_ref), f.name, f.s_label};
    if (!(L.E.order() == L.A.order() * BigUint(2)))
      throw Error("lattice '" + name + "': |E:A| != 2");
    for (const Perm &g : L.A.generators())
      if (!L.E.contains(g) || !L.H.contains(g))
        throw Error("lattice '" + name + "': A is not contained in E and H");
    for (const Perm &g : L.H.generators())
      if (!lg.group.contains(g))
        throw Error("lattice '" + name + "': H not contained in G");
    return L;
  }

  const std::filesystem::path &dir() const { return dir_; }

private:
  std::vector<std::string> names_in(const std::string &sub) const {
    std::vector<std::string> out;
    auto p = dir_ / sub;
    if (!std::filesystem::is_directory(p)) return out;
    for (const auto &e : std::filesystem::directory_iterator(p))
      if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::filesystem::path dir_;
  std::map<std::string, LoadedGroup> groups_;
};

}  // namespace cgt
