// Command-line surface: info / search / verify / graph / reproduce.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or data error.
// JSON is the report format; the human-readable output renders the same
// record. Timing lives outside the deterministic payload.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cgt/catalog.hpp"
#include "cgt/graph_iso.hpp"
#include "cgt/graph_props.hpp"
#include "cgt/reduction.hpp"
#include "cgt/reproduce.hpp"

using namespace cgt;

namespace {

struct Options {
  std::string catalog_dir;
  std::uint64_t cap = kDefaultCosetCap;
  std::uint64_t seed = 0;
  bool json_out = false;
  std::string out_dir;
};

Catalog open_catalog(const Options &opt) {
  if (!opt.catalog_dir.empty()) return Catalog(opt.catalog_dir);
  return Catalog::locate();
}

void emit(const Options &opt, const std::string &stem, const json &payload,
          double wall_ms) {
  json doc;
  doc["report"] = payload;
  doc["wall_ms"] = wall_ms;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream f(std::filesystem::path(opt.out_dir) / (stem + ".json"));
    f << doc.dump(2) << "\n";
  }
  if (opt.json_out) std::cout << doc.dump(2) << "\n";
}

void render_report(const json &rep) {
  std::cout << rep["subject"].get<std::string>() << ": "
            << rep["verdict"].get<std::string>() << "\n";
  for (const auto &c : rep["checks"]) {
    std::cout << "  [" << (c["pass"].get<bool>() ? "ok" : "FAIL") << "] "
              << c["name"].get<std::string>();
    if (c.contains("detail")) std::cout << "  (" << c["detail"].get<std::string>() << ")";
    if (c.contains("mandatory") && !c["mandatory"].get<bool>())
      std::cout << "  [informational]";
    std::cout << "\n";
  }
}

void render_manifest(const json &man) {
  std::cout << man["target"].get<std::string>() << ": "
            << man["verdict"].get<std::string>() << "\n";
  for (const auto &c : man["checks"]) {
    std::cout << "  [" << c["status"].get<std::string>() << "] "
              << c["name"].get<std::string>();
    if (c.contains("expected"))
      std::cout << "  expected " << c["expected"].get<std::string>() << ", got "
                << c["actual"].get<std::string>();
    else if (c.contains("actual"))
      std::cout << "  (" << c["actual"].get<std::string>() << ")";
    std::cout << "\n";
  }
}

// Resolve a lattice by catalog name or by path to a lattice file; lenient:
// containment defects become report records, not load errors.
struct NamedLattice {
  Lattice lattice{PermGroup{0}, PermGroup{0}, PermGroup{0}, PermGroup{0}, "", ""};
  LatticeFile file;
};

NamedLattice resolve_lattice(Catalog &cat, const std::string &arg) {
  NamedLattice out;
  if (std::filesystem::exists(arg) && !cat.has_lattice(arg)) {
    out.file = parse_lattice_json(catalog_detail::read_json_file(arg), arg);
  } else {
    out.file = cat.lattice_file(arg);
  }
  if (out.file.non_constructible)
    throw Error("lattice '" + out.file.name + "' is marked non-constructible");
  const LoadedGroup &lg = cat.group(out.file.group_ref);
  out.lattice = Lattice{lg.group, lg.subgroup(out.file.e_ref),
                        lg.subgroup(out.file.a_ref), lg.subgroup(out.file.h_ref),
                        out.file.name, out.file.s_label};
  return out;
}

int cmd_info(const Options &opt, const std::string &name) {
  Catalog cat = open_catalog(opt);
  auto t0 = std::chrono::steady_clock::now();
  const LoadedGroup &lg = cat.group(name);
  json rep;
  rep["name"] = lg.entry.name;
  rep["degree"] = lg.entry.degree;
  rep["order"] = lg.entry.claimed_order.to_decimal();
  rep["non_constructible"] = lg.entry.non_constructible();
  rep["metadata"] = lg.entry.metadata;
  if (!lg.entry.non_constructible()) {
    rep["order_verified"] = true;  // load_group already checked Schreier-Sims
    if (opt.seed) {
      // randomized spot re-verification of the chain: random generator words
      // must sift to the identity
      std::mt19937_64 rng(opt.seed);
      bool ok = true;
      for (int i = 0; i < 64; ++i)
        if (!lg.group.contains(lg.group.random_element(rng))) ok = false;
      rep["randomized_membership_spot_check"] = ok ? "pass" : "fail";
    }
    json subs = json::array();
    for (const auto &se : lg.entry.subgroups) {
      json s;
      s["name"] = se.name;
      s["role"] = se.role;
      s["order"] = se.claimed_order.to_decimal();
      s["structure_label"] = se.structure_label;
      subs.push_back(std::move(s));
    }
    rep["subgroups"] = std::move(subs);
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  emit(opt, "info_" + name, rep, ms);
  if (!opt.json_out) {
    std::cout << lg.entry.name << ": degree " << lg.entry.degree << ", order "
              << lg.entry.claimed_order.to_decimal()
              << (lg.entry.non_constructible() ? " (metadata only)" : " (verified)")
              << "\n";
    for (const auto &se : lg.entry.subgroups)
      std::cout << "  subgroup " << se.name << " [" << se.role << "] order "
                << se.claimed_order.to_decimal() << "  " << se.structure_label << "\n";
  }
  return 0;
}

int cmd_search(const Options &opt, const std::string &name) {
  Catalog cat = open_catalog(opt);
  auto t0 = std::chrono::steady_clock::now();
  const LoadedGroup &lg = cat.group(name);
  if (lg.entry.non_constructible())
    throw Error("group '" + name + "' has no generators; it is metadata only");
  const PermGroup *over = nullptr;
  if (auto ov = lg.entry.aut_overgroup()) over = &cat.group(*ov).group;
  std::vector<FoundLattice> found;
  try {
    found = find_lattices(lg.group, over);
  } catch (const Error &e) {
    throw Error(std::string(e.what()) +
                "; use 'verify' on a shipped lattice file for groups beyond the "
                "enumeration cap");
  }
  json rep;
  rep["group"] = name;
  rep["dedup"] = over ? "conjugacy under the automorphism overgroup"
                      : "G-conjugacy only; automorphism-conjugate rows may "
                        "appear separately";
  json arr = json::array();
  std::size_t nontrivial = 0;
  for (const FoundLattice &fl : found) {
    json l;
    l["E_order"] = fl.e_order;
    l["A_order"] = fl.a_order;
    l["H_order"] = fl.h_order;
    l["valency"] = fl.valency;
    l["nontrivial"] = fl.nontrivial;  // Lemma-10 filter |H| > |E|
    l["dd1_divides_H"] = fl.dd1_divides;
    json eg = json::array(), ag = json::array(), hg = json::array();
    for (const Perm &g : fl.E.generators()) eg.push_back(g.to_cycles());
    for (const Perm &g : fl.A.generators()) ag.push_back(g.to_cycles());
    for (const Perm &g : fl.H.generators()) hg.push_back(g.to_cycles());
    l["E_generators"] = std::move(eg);
    l["A_generators"] = std::move(ag);
    l["H_generators"] = std::move(hg);
    arr.push_back(std::move(l));
    if (fl.nontrivial) ++nontrivial;
  }
  rep["lattice_count"] = nontrivial;
  rep["lattices"] = std::move(arr);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  emit(opt, "search_" + name, rep, ms);
  if (!opt.json_out) {
    std::cout << name << ": " << nontrivial << " lattice(s)\n";
    for (const FoundLattice &fl : found) {
      if (!fl.nontrivial) continue;
      std::cout << "  |E| = " << fl.e_order << ", |A| = " << fl.a_order
                << ", |H| = " << fl.h_order << ", valency " << fl.valency
                << (fl.dd1_divides ? "" : ", d(d-1) does not divide |H|") << "\n";
    }
  }
  return 0;
}

int cmd_verify(const Options &opt, const std::string &name, bool with_graph,
               bool with_sarc, bool with_edge_prim, bool with_biprim,
               const std::string &iso_to) {
  Catalog cat = open_catalog(opt);
  auto t0 = std::chrono::steady_clock::now();
  NamedLattice nl = resolve_lattice(cat, name);
  VerificationReport rep = verify_lattice(nl.lattice, opt.cap);
  rep.subject = nl.file.name;

  bool graph_needed = with_graph || with_sarc || with_edge_prim || with_biprim ||
                      !iso_to.empty();
  if (graph_needed && rep.verdict()) {
    Graph g = build_from_lattice(nl.lattice, opt.cap);
    if (with_graph) {
      GraphInvariants inv = basic_invariants(g);
      rep.add("graph built", true,
              "order " + std::to_string(g.n) + ", size " +
                  std::to_string(g.edge_count()) + ", valency " +
                  std::to_string(g.adj[0].size()) + ", girth " +
                  std::to_string(inv.girth) +
                  (inv.bipartite ? ", bipartite" : ", not bipartite"));
      if (nl.file.expected.contains("order"))
        rep.add("order matches expected",
                g.n == nl.file.expected["order"].get<Point>(),
                "expected " + nl.file.expected["order"].dump());
      if (nl.file.expected.contains("girth"))
        rep.add("girth matches expected",
                inv.girth == nl.file.expected["girth"].get<std::uint64_t>(),
                "expected " + nl.file.expected["girth"].dump());
    }
    if (with_sarc) {
      SArcResult s = s_arc_transitivity(g);
      rep.add("s-arc analysis", true, "max_s = " + std::to_string(s.max_s));
      if (s.stabilizer_orders.size() > 2)
        rep.add("2-arc stabilizer", true,
                "order " + s.stabilizer_orders[2].to_decimal());
      if (nl.file.expected.contains("max_s"))
        rep.add("max_s matches expected",
                s.max_s == nl.file.expected["max_s"].get<std::uint32_t>(),
                "expected " + nl.file.expected["max_s"].dump());
    }
    if (with_edge_prim) rep.add("edge-primitive", is_edge_primitive(g));
    if (with_biprim) rep.add("vertex-biprimitive", is_biprimitive(g.n, g.action));
    if (!iso_to.empty()) {
      NamedLattice other = resolve_lattice(cat, iso_to);
      Graph g2 = build_from_lattice(other.lattice, opt.cap);
      rep.add("isomorphic to " + other.file.name, isomorphic(g, g2));
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  emit(opt, "verify_" + rep.subject, rep.to_json(), rep.wall_ms);
  if (!opt.json_out) render_report(rep.to_json());
  return rep.verdict() ? 0 : 1;
}

int cmd_graph(const Options &opt, const std::string &name, bool json_graph) {
  Catalog cat = open_catalog(opt);
  NamedLattice nl = resolve_lattice(cat, name);
  Graph g = build_from_lattice(nl.lattice, opt.cap);
  if (json_graph || opt.json_out) {
    json doc;
    doc["name"] = nl.file.name;
    doc["order"] = g.n;
    doc["size"] = g.edge_count();
    doc["adjacency"] = g.adj;
    json action = json::array();
    for (const Perm &p : g.action) action.push_back(p.to_cycles());
    doc["action"] = std::move(action);
    if (!g.labels.empty()) doc["coset_labels"] = g.labels;
    if (!opt.out_dir.empty()) {
      std::filesystem::create_directories(opt.out_dir);
      std::ofstream f(std::filesystem::path(opt.out_dir) /
                      (nl.file.name + ".graph.json"));
      f << doc.dump(2) << "\n";
    } else {
      std::cout << doc.dump(2) << "\n";
    }
  } else if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream f(std::filesystem::path(opt.out_dir) / (nl.file.name + ".adj"));
    f << g.to_text();
  } else {
    std::cout << g.to_text();
  }
  return 0;
}

int cmd_reproduce(const Options &opt, const std::string &target) {
  Catalog cat = open_catalog(opt);
  Reproducer rep(cat, opt.cap);
  std::vector<ReproductionManifest> manifests;
  if (target == "all") {
    manifests = rep.run_all();
  } else {
    manifests.push_back(rep.run(target));
  }
  bool any_fail = false;
  json all = json::array();
  double total_ms = 0;
  for (const auto &m : manifests) {
    if (m.verdict() == "FAIL") any_fail = true;
    all.push_back(m.to_json());
    total_ms += m.wall_ms;
    if (!opt.json_out) render_manifest(m.to_json());
  }
  json payload = target == "all" ? all : all[0];
  emit(opt, "reproduce_" + target, payload, total_ms);
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"coset-graph toolkit: edge-primitive arc-transitive graphs from "
               "subgroup lattice data"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--catalog", opt.catalog_dir, "catalog directory (else $CATALOG_DIR)");
  app.add_option("--cap", opt.cap, "coset index cap (default 2000000)");
  app.add_option("--seed", opt.seed,
                 "seed for randomized re-verification; never affects results");
  app.add_flag("--json", opt.json_out, "emit the JSON record instead of text");
  app.add_option("--out", opt.out_dir, "directory for JSON report files");

  std::string name, iso_to, target;
  bool with_graph = false, with_sarc = false, with_ep = false, with_bp = false;
  bool json_graph = false;

  CLI::App *info = app.add_subcommand("info", "verified facts about a catalog group");
  info->add_option("group", name)->required();
  CLI::App *search = app.add_subcommand("search", "find all lattices over a group");
  search->add_option("group", name)->required();
  CLI::App *verify = app.add_subcommand("verify", "check a lattice file or catalog lattice");
  verify->add_option("lattice", name)->required();
  verify->add_flag("--graph", with_graph, "build the coset graph and report invariants");
  verify->add_flag("--s-arc", with_sarc, "compute the exact s-arc-transitivity level");
  verify->add_flag("--edge-primitive", with_ep, "test edge-primitivity");
  verify->add_flag("--biprimitive", with_bp, "test vertex-biprimitivity");
  verify->add_option("--isomorphic-to", iso_to, "compare with another lattice's graph");
  CLI::App *graph = app.add_subcommand("graph", "export the coset graph");
  graph->add_option("lattice", name)->required();
  graph->add_flag("--json", json_graph, "JSON export embedding the action");
  CLI::App *reproduce = app.add_subcommand("reproduce", "run a reproduction target");
  reproduce->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"a6-table", "k5", "gamma0", "gamma1", "m12", "j1", "j3",
                             "hoffman-singleton", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(opt, name);
    if (search->parsed()) return cmd_search(opt, name);
    if (verify->parsed())
      return cmd_verify(opt, name, with_graph, with_sarc, with_ep, with_bp, iso_to);
    if (graph->parsed()) return cmd_graph(opt, name, json_graph);
    if (reproduce->parsed()) return cmd_reproduce(opt, target);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
