// dcg: commuting, enhanced power and deep commuting graphs of small groups.
//
// exit codes: 0 ok, 1 usage / parse / input error, 2 cap exceeded,
//             3 verification or cross-check failure

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcg/dcg.hpp"

namespace {

using namespace dcg;

constexpr const char* kGrammar = R"(group specs:
  spec   := atom ("x" atom)*          direct product, e.g. C2xC4
  atom   := family | "table:" path | "sg64_182"
  family := C n | D n | Q n | SD n | S n | A n
    Cn cyclic, Dn dihedral of order n, Qn generalized quaternion (n = 2^m >= 8),
    SDn semidihedral (n = 2^m >= 16), Sn / An symmetric / alternating of degree n
  table paths run to the next whitespace; quote them ("table:\"a b.json\"")
  when they contain spaces or are followed directly by "x".)";

struct Options {
  std::size_t max_order = default_limits().realize;
  std::size_t cohomology_cap = default_limits().cohomology;
  unsigned threads = 1;

  CohomologyOptions cohomology() const {
    CohomologyOptions o;
    o.limits.realize = max_order;
    o.limits.cohomology = cohomology_cap;
    o.limits.threads = threads;
    return o;
  }
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return 2;
    case Errc::InternalVerificationFailure:
    case Errc::TheoremViolation:
    case Errc::NotACocycle: return 3;
    default: return 1;
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

GraphFormat parse_format(const std::string& s) {
  if (s == "dot") return GraphFormat::Dot;
  if (s == "json") return GraphFormat::Json;
  return GraphFormat::EdgeList;
}

int cmd_analyze(const Options& opt, const std::string& spec, bool json) {
  const auto o = opt.cohomology();
  const auto report = analyze(realize(spec, o.limits), o);
  std::cout << (json ? to_json(report).dump(2) + "\n" : render_text(report));
  return 0;
}

int cmd_graph(const Options& opt, const std::string& spec, const std::string& kind, const std::string& format,
              const std::string& out, const std::string& extension) {
  const auto o = opt.cohomology();
  const Group g = realize(spec, o.limits);
  std::optional<SimpleGraph> graph;
  if (kind == "com") {
    graph = commuting_graph(g);
  } else if (kind == "epow") {
    graph = enhanced_power_graph(g);
  } else if (kind == "dcom") {
    graph = deep_commuting_graph(g, o);
  } else {
    require(!extension.empty(), Errc::BadParameter, "--kind relcom needs --extension FILE");
    const auto ext = load_extension_file(extension, o.limits);
    require(ext.base.same_table(g), Errc::BaseMismatch,
            "extension base " + ext.base.label() + " is not the Cayley table of " + g.label());
    graph = relative_commuting_graph(ext);
  }
  write_output(emit(*graph, parse_format(format)), out);
  return 0;
}

int cmd_multiplier(const Options& opt, const std::string& spec, bool json, const std::string& dump) {
  const auto o = opt.cohomology();
  const Group g = realize(spec, o.limits);
  const auto coh = compute_cohomology(g, o);
  const auto report = multiplier_report(coh);
  if (!dump.empty()) {
    auto bases = nlohmann::ordered_json::array();
    for (const auto& pc : coh.primes) bases.push_back(basis_to_json(pc.basis));
    write_text_file(dump, bases.dump() + "\n");
  }
  std::cout << (json ? to_json(g.label(), report).dump(2) + "\n" : render_multiplier(g.label(), report));
  return 0;
}

int cmd_census(const Options& opt, std::vector<std::string> specs, bool csv) {
  if (specs.empty()) specs = default_census();
  const auto o = opt.cohomology();
  std::vector<CensusRow> rows;
  for (const auto& s : specs) rows.push_back(census_row(analyze(realize(s, o.limits), o)));
  std::cout << (csv ? render_csv(rows) : render_census_text(rows));
  return 0;
}

int cmd_verify(const Options& opt, const std::string& spec, std::size_t budget) {
  const auto o = opt.cohomology();
  const Group g = realize(spec, o.limits);
  const auto analysis = analyse_group(g, o);
  const auto c = classify(g, analysis);  // throws TheoremViolation on any failed cross-check
  const auto oracle = dcom_oracle_report(g, budget, o);
  bool ok = true;
  if (!graph_equal(oracle.graph, analysis.dcom)) {
    ok = false;
    std::cout << "MISMATCH oracle DCom (" << oracle.graph.edge_count() << " edges) vs pairing DCom ("
              << analysis.dcom.edge_count() << " edges)\n";
  }
  if (commuting_probability(g) != commuting_pair_density(g)) {
    ok = false;
    std::cout << "MISMATCH commuting probability " << commuting_probability(g).str() << " vs pair density "
              << commuting_pair_density(g).str() << "\n";
  }
  for (const auto& p : oracle.primes)
    std::cout << "oracle p=" << p.p << " k=" << p.k << " mode=" << to_string(p.mode) << " extensions=" << p.extensions
              << "\n";
  for (const auto& check : c.checks) std::cout << "check " << check.name << ": pass\n";
  std::cout << c.trichotomy << "\n" << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting, enhanced power and deep commuting graphs of small finite groups"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-order", opt.max_order, "largest group built from a spec")->capture_default_str();
  app.add_option("--cohomology-cap", opt.cohomology_cap, "largest group for cocycle computations")
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::string spec, kind = "com", format = "dot", out, extension, dump;
  bool json = false, csv = false;
  std::size_t budget = 256;
  std::vector<std::string> specs;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one group");
  analyze_cmd->add_option("spec", spec, "group spec")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable output");

  auto* graph_cmd = app.add_subcommand("graph", "emit one graph");
  graph_cmd->add_option("spec", spec, "group spec")->required();
  graph_cmd->add_option("--kind", kind, "com | epow | dcom | relcom")
      ->check(CLI::IsMember({"com", "epow", "dcom", "relcom"}))
      ->capture_default_str();
  graph_cmd->add_option("--format", format, "dot | json | edgelist")
      ->check(CLI::IsMember({"dot", "json", "edgelist"}))
      ->capture_default_str();
  graph_cmd->add_option("--out", out, "output file (default stdout)");
  graph_cmd->add_option("--extension", extension, "extension fixture for --kind relcom");

  auto* mult_cmd = app.add_subcommand("multiplier", "Schur and Bogomolov multipliers");
  mult_cmd->add_option("spec", spec, "group spec")->required();
  mult_cmd->add_flag("--json", json, "machine-readable output");
  mult_cmd->add_option("--dump-basis", dump, "write the cocycle bases as JSON");

  auto* census_cmd = app.add_subcommand("census", "one row per group (built-in list when none given)");
  census_cmd->add_option("specs", specs, "group specs");
  census_cmd->add_flag("--csv", csv, "CSV output");

  auto* verify_cmd = app.add_subcommand("verify", "oracle and cross-check verification");
  verify_cmd->add_option("spec", spec, "group spec")->required();
  verify_cmd->add_option("--budget", budget, "random cocycles per prime for the oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt, spec, json);
    if (*graph_cmd) return cmd_graph(opt, spec, kind, format, out, extension);
    if (*mult_cmd) return cmd_multiplier(opt, spec, json, dump);
    if (*census_cmd) return cmd_census(opt, specs, csv);
    if (*verify_cmd) return cmd_verify(opt, spec, budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (expected one of:";
    for (const auto& t : e.expected()) std::cerr << " " << t;
    std::cerr << ")\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
