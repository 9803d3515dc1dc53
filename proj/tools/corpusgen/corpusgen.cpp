// Regenerates the shipped corpus under data/ from first principles. Each
// subcommand is deterministic and re-verifies everything it derives; run
// with no arguments to rebuild the whole corpus.
#include "common.hpp"

#include <cstring>

int main(int argc, char **argv) {
  std::filesystem::path out = "data";
  std::vector<std::string> targets;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--out") == 0 && i + 1 < argc) {
      out = argv[++i];
    } else {
      targets.emplace_back(argv[i]);
    }
  }
  if (targets.empty()) targets = {"family", "j1", "m12", "hosi", "meta"};
  try {
    for (const std::string &t : targets) {
      if (t == "family") corpusgen::gen_family(out);
      else if (t == "j1") corpusgen::gen_j1(out);
      else if (t == "m12") corpusgen::gen_m12(out);
      else if (t == "hosi") corpusgen::gen_hosi(out);
      else if (t == "meta") corpusgen::gen_meta(out);
      else {
        std::cerr << "unknown target: " << t << "\n";
        return 2;
      }
    }
  } catch (const std::exception &e) {
    std::cerr << "corpusgen failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
