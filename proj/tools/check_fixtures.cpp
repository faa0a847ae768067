// Rejects the shipped fixtures unless every published fingerprint holds:
//   sg64_182: order 64, M = [2], B0 = [2], 11 classes of noncyclic abelian
//             subgroups, DCom = Com, JSON copy identical to the compiled table;
//   extension files: valid central extensions of the expected orders.
//
// usage: check_fixtures <data-dir>

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dcg/dcg.hpp"

namespace {

using namespace dcg;

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check fixture fingerprints"};
  std::string dir;
  app.add_option("dir", dir, "fixture directory")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path data(dir);
    const Group g = sg64_182();
    const auto report = bogomolov_multiplier(g);
    expect(g.order() == 64, "sg64_182 has order 64");
    expect(report.schur == AbelianInvariants({2}), "sg64_182 Schur multiplier is [2]");
    expect(report.bogomolov == AbelianInvariants({2}), "sg64_182 Bogomolov multiplier is [2]");
    expect(subgroups_up_to_conjugacy(g).noncyclic_abelian() == 11, "sg64_182 has 11 noncyclic abelian classes");
    expect(deep_commuting_graph(g).same_edges(commuting_graph(g)), "sg64_182 has DCom = Com");
    expect(load_table_file(data / "sg64_182.json").same_table(g), "sg64_182.json matches the compiled table");

    const auto d8 = load_extension_file(data / "d8_over_klein.json");
    const auto q8 = load_extension_file(data / "q8_over_klein.json");
    const auto d16 = load_extension_file(data / "d16_over_d8.json");
    expect(d8.total.order() == 8 && d8.base.order() == 4 && is_stem(d8), "d8_over_klein is a stem extension of V4");
    expect(q8.total.order() == 8 && q8.base.order() == 4 && is_stem(q8), "q8_over_klein is a stem extension of V4");
    expect(d8.base.same_table(q8.base), "both covers of V4 share the base table");
    expect(d16.total.order() == 16 && d16.base.order() == 8 && is_stem(d16), "d16_over_d8 is a stem extension of D8");
    expect(d16.base.same_table(dihedral(8)), "d16_over_d8 base is the built-in D8 table");
  } catch (const Error& e) {
    std::cout << "FAIL  " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
