// Writes the small table and extension fixtures into a data directory:
//   klein.json d8.json q8.json d16.json             Cayley tables
//   d8_over_klein.json q8_over_klein.json            D8, Q8 over their centres
//   d16_over_d8.json                                 D16 over its centre
// Each quotient by the centre is identified with the shipped base table by an
// explicit isomorphism, so extensions over the same base share one table.
//
// usage: make_fixtures <data-dir>

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dcg/dcg.hpp"

namespace {

using namespace dcg;

CentralExtension over_center(const Group& h, const Group& base) {
  const auto ext = central_quotient_extension(h, center(h));
  const auto iso = is_isomorphic(ext.base, base);
  require(iso.has_value(), Errc::BadExtension, h.label() + "/Z is not isomorphic to " + base.label());
  std::vector<Elem> projection(h.order());
  for (Elem x = 0; x < h.order(); ++x) projection[x] = (*iso)[ext.projection[x]];
  return make_extension(h, base, std::move(projection));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write table and extension fixtures"};
  std::string dir;
  app.add_option("dir", dir, "output directory")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const std::filesystem::path out(dir);
    std::filesystem::create_directories(out);
    const Group klein = realize("C2xC2").relabeled("V4");
    const Group d8 = dihedral(8), q8 = quaternion(8), d16 = dihedral(16);
    save_table_file(klein, out / "klein.json");
    save_table_file(d8, out / "d8.json");
    save_table_file(q8, out / "q8.json");
    save_table_file(d16, out / "d16.json");
    save_extension_file(over_center(d8, klein), out / "d8_over_klein.json", "d8.json", "klein.json");
    save_extension_file(over_center(q8, klein), out / "q8_over_klein.json", "q8.json", "klein.json");
    save_extension_file(over_center(d16, d8), out / "d16_over_d8.json", "d16.json", "d8.json");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
