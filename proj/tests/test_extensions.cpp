#include <filesystem>

#include <gtest/gtest.h>

#include "dcg/extensions.hpp"
#include "dcg/graph_iso.hpp"
#include "dcg/report.hpp"
#include "dcg/spec_lang.hpp"

using namespace dcg;

namespace {

std::string data(const std::string& file) { return std::string(DCG_DATA_DIR) + "/" + file; }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::OutOfRange;
}

/// One extension per generator of each p-part cocycle module.
std::vector<CentralExtension> generator_extensions(const Group& g) {
  std::vector<CentralExtension> out;
  const auto coh = compute_cohomology(g);
  for (const auto& pc : coh.primes)
    for (std::size_t i = 0; i < pc.basis.z2.size(); ++i) out.push_back(extension_from_cocycle(g, pc.basis.generator(i)));
  return out;
}

}  // namespace

TEST(ExtensionFromCocycle, ZeroCocycleGivesDirectProduct) {
  const Group g = realize("S3");
  const auto e = extension_from_cocycle(g, Cochain2(ResidueRing(2, 1), 6, Row(25, 0)));
  EXPECT_EQ(e.total.order(), 12u);
  EXPECT_TRUE(is_isomorphic(e.total, realize("S3xC2")).has_value());
  EXPECT_EQ(e.kernel.size(), 2u);
  EXPECT_FALSE(is_stem(e));
  ASSERT_TRUE(e.provenance.has_value());
  EXPECT_EQ(e.provenance->p, 2u);
}

TEST(ExtensionFromCocycle, CarryCocycleOfC2GivesC4) {
  const auto e = extension_from_cocycle(realize("C2"), Cochain2(ResidueRing(2, 1), 2, Row{1}));
  EXPECT_TRUE(is_isomorphic(e.total, realize("C4")).has_value());
  EXPECT_EQ(e.total.name(3), "(a,1)");
}

TEST(ExtensionFromCocycle, Errors) {
  const Group v4 = realize("C2xC2");
  Row bad(9, 0);
  bad[pair_index(4, 1, 2)] = 1;
  // f(a,b) = 1 alone fails the identity at (a, b, b)
  EXPECT_FALSE(is_cocycle(v4, ResidueRing(2, 1), bad));
  EXPECT_EQ(code_of([&] { extension_from_cocycle(v4, Cochain2(ResidueRing(2, 1), 4, bad)); }), Errc::NotACocycle);
  EXPECT_EQ(code_of([&] { extension_from_cocycle(v4, Cochain2(ResidueRing(2, 1), 2, Row{0})); }), Errc::NotACocycle);
  Limits small;
  small.extension = 4;
  EXPECT_EQ(code_of([&] { extension_from_cocycle(v4, Cochain2(ResidueRing(2, 1), 4, Row(9, 0)), small); }),
            Errc::CapExceeded);
}

TEST(CentralExtensionValidation, RejectsBadProjections) {
  const Group d8 = realize("D8");
  const Group v4 = realize("C2xC2");
  auto good = load_extension_file(data("d8_over_klein.json"));
  EXPECT_NO_THROW(validate_extension(good));
  EXPECT_EQ(code_of([&] { make_extension(d8, v4, std::vector<Elem>(8, 0)); }), Errc::BadExtension);
  EXPECT_EQ(code_of([&] { make_extension(d8, v4, std::vector<Elem>(7, 0)); }), Errc::BadExtension);
  // D8 -> C2 by r -> 1, s -> a has non-central kernel <r>
  std::vector<Elem> to_c2(8);
  for (Elem x = 0; x < 8; ++x) to_c2[x] = x >= 4;
  EXPECT_EQ(code_of([&] { make_extension(d8, realize("C2"), to_c2); }), Errc::BadExtension);
}

TEST(Fixtures, CoversOfTheKleinGroup) {
  const auto d8 = load_extension_file(data("d8_over_klein.json"));
  const auto q8 = load_extension_file(data("q8_over_klein.json"));
  EXPECT_TRUE(is_stem(d8));
  EXPECT_TRUE(is_stem(q8));
  const auto r1 = relative_commuting_graph(d8);
  const auto r2 = relative_commuting_graph(q8);
  EXPECT_TRUE(r1.same_edges(r2));
  EXPECT_EQ(r1.edge_count(), 3u);
  EXPECT_TRUE(r1.same_edges(deep_commuting_graph(d8.base)));
  EXPECT_FALSE(is_cp(d8));
}

TEST(Fixtures, DihedralSixteenOverItsCentre) {
  const auto e = load_extension_file(data("d16_over_d8.json"));
  EXPECT_EQ(e.total.order(), 16u);
  EXPECT_EQ(e.kernel.size(), 2u);
  EXPECT_TRUE(is_stem(e));
  EXPECT_FALSE(is_cp(e));
  EXPECT_TRUE(relative_commuting_graph(e).same_edges(deep_commuting_graph(e.base)));
  EXPECT_TRUE(is_isomorphic(e.base, realize("D8")).has_value());
}

TEST(Fixtures, LoadErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "dcg_ext_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "no_projection.json", "{\"total\": \"a.json\", \"base\": \"b.json\"}");
  EXPECT_EQ(code_of([&] { load_extension_file(dir / "no_projection.json"); }), Errc::FileError);
  save_table_file(realize("D8"), dir / "d8.json");
  save_table_file(realize("C2xC2"), dir / "v4.json");
  write_text_file(dir / "bad.json", "{\"total\": \"d8.json\", \"base\": \"v4.json\", \"projection\": [0, -1]}");
  EXPECT_EQ(code_of([&] { load_extension_file(dir / "bad.json"); }), Errc::BadExtension);
  write_text_file(dir / "missing.json", "{\"total\": \"d8.json\", \"projection\": []}");
  EXPECT_EQ(code_of([&] { load_extension_file(dir / "missing.json"); }), Errc::BadExtension);

  const auto e = central_quotient_extension(realize("D8"), center(realize("D8")));
  save_extension_file(e, dir / "round.json", "d8.json", "quot.json");
  save_table_file(e.base, dir / "quot.json");
  const auto back = load_extension_file(dir / "round.json");
  EXPECT_EQ(back.projection, e.projection);
  EXPECT_TRUE(relative_commuting_graph(back).same_edges(relative_commuting_graph(e)));
  std::filesystem::remove_all(dir);
}

TEST(RelativeCommutingGraph, SandwichedBetweenDeepAndCommutingGraphs) {
  for (const auto& spec : {"C2xC2", "D8", "C2xC4", "A4", "C3xC3", "Q8"}) {
    const Group g = realize(spec);
    const auto dcom = deep_commuting_graph(g);
    const auto com = commuting_graph(g);
    for (const auto& e : generator_extensions(g)) {
      const auto rel = relative_commuting_graph(e);
      EXPECT_TRUE(is_spanning_subgraph(dcom, rel)) << spec;
      EXPECT_TRUE(is_spanning_subgraph(rel, com)) << spec;
      EXPECT_EQ(is_cp(e), rel.same_edges(com)) << spec;
    }
  }
}

TEST(RelativeCommutingGraph, OrderReversingUnderQuotients) {
  // H -> H/Z1 -> G: a smaller kernel can only add edges
  const auto d8 = load_extension_file(data("d8_over_klein.json"));
  const auto q8 = load_extension_file(data("q8_over_klein.json"));
  const auto pb = pullback_extension(d8, q8);
  const auto rel = relative_commuting_graph(pb);
  const auto com = commuting_graph(pb.base);
  std::size_t tried = 0;
  for (Elem z : pb.kernel) {
    if (z == 0) continue;
    const auto q = quotient_extension(pb, ElementSet{0, z});
    EXPECT_EQ(q.total.order(), 8u);
    const auto mid = relative_commuting_graph(q);
    EXPECT_TRUE(is_spanning_subgraph(rel, mid));
    EXPECT_TRUE(is_spanning_subgraph(mid, com));
    ++tried;
  }
  EXPECT_EQ(tried, 3u);

  const auto e = load_extension_file(data("d16_over_d8.json"));
  const auto trivial = quotient_extension(e, e.kernel);
  EXPECT_EQ(trivial.total.order(), e.base.order());
  EXPECT_TRUE(relative_commuting_graph(trivial).same_edges(commuting_graph(e.base)));
  EXPECT_TRUE(is_spanning_subgraph(relative_commuting_graph(e), relative_commuting_graph(trivial)));
  Elem outside = 1;
  while (std::binary_search(e.kernel.begin(), e.kernel.end(), outside)) ++outside;
  EXPECT_EQ(code_of([&] { quotient_extension(e, ElementSet{0, outside}); }), Errc::BadExtension);
}

TEST(Pullback, Examples) {
  const auto d8 = load_extension_file(data("d8_over_klein.json"));
  const auto q8 = load_extension_file(data("q8_over_klein.json"));
  const auto pb = pullback_extension(d8, q8);
  EXPECT_EQ(pb.total.order(), 16u);
  EXPECT_EQ(pb.kernel.size(), 4u);
  EXPECT_EQ(pb.total.name(0), "(1,1)");
  EXPECT_LE(commuting_probability(pb.total), commuting_probability(d8.total));
  EXPECT_LE(commuting_probability(pb.total), commuting_probability(q8.total));
  EXPECT_EQ(code_of([&] { pullback_extension(d8, load_extension_file(data("d16_over_d8.json"))); }),
            Errc::BaseMismatch);
  Limits small;
  small.extension = 8;
  EXPECT_EQ(code_of([&] { pullback_extension(d8, q8, small); }), Errc::CapExceeded);
}

TEST(CommutingProbability, ExamplesAndDensity) {
  EXPECT_EQ(commuting_probability(realize("D8")), Rational(5, 8));
  EXPECT_EQ(commuting_probability(realize("Q8")), Rational(5, 8));
  EXPECT_EQ(commuting_probability(realize("S3")).str(), "1/2");
  EXPECT_EQ(commuting_probability(realize("C5")).str(), "1");
  for (const auto& spec : default_census()) {
    const Group g = realize(spec);
    EXPECT_EQ(commuting_probability(g), commuting_pair_density(g)) << spec;
  }
}

TEST(CommutingProbability, MonotoneUnderCentralExtensions) {
  for (const auto& spec : {"C2xC2", "S3", "D8", "C2xC4", "C3xC3", "A4", "D12"}) {
    const Group g = realize(spec);
    const auto kg = commuting_probability(g);
    const auto exts = generator_extensions(g);
    for (const auto& e : exts) EXPECT_LE(commuting_probability(e.total), kg) << spec;
    if (exts.size() >= 2) {
      const auto pb = pullback_extension(exts[0], exts[1]);
      EXPECT_LE(commuting_probability(pb.total), commuting_probability(exts[0].total)) << spec;
      EXPECT_LE(commuting_probability(pb.total), commuting_probability(exts[1].total)) << spec;
    }
  }
}

TEST(Rational, ParseAndOrder) {
  EXPECT_EQ(Rational::parse("10/16"), Rational(5, 8));
  EXPECT_EQ(Rational::parse("3"), Rational(3, 1));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), Errc::BadParameter);
  EXPECT_EQ(code_of([] { Rational::parse("x"); }), Errc::BadParameter);
  EXPECT_DOUBLE_EQ(Rational(5, 8).value(), 0.625);
}

TEST(Isoclinism, DihedralAndQuaternion) {
  const Group d8 = realize("D8"), q8 = realize("Q8");
  const auto w = isoclinic(d8, q8);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_isoclinism(d8, q8, *w));
  auto broken = *w;
  const auto derived = derived_subgroup(d8);
  ASSERT_EQ(derived.size(), 2u);
  broken.psi[derived[1]] = 0;
  EXPECT_FALSE(verify_isoclinism(d8, q8, broken));
  EXPECT_TRUE(graph_isomorphic(commuting_graph(d8), commuting_graph(q8)).has_value());
}

TEST(Isoclinism, Examples) {
  EXPECT_TRUE(isoclinic(realize("D8"), realize("D8xC2")).has_value());
  EXPECT_FALSE(isoclinic(realize("D8"), realize("C2xC4")).has_value());
  EXPECT_TRUE(isoclinic(realize("C3"), realize("C2xC2")).has_value());
  EXPECT_FALSE(isoclinic(realize("S3"), realize("D8")).has_value());
  Limits small;
  small.isoclinism = 2;
  EXPECT_EQ(code_of([&] { isoclinic(realize("D8"), realize("Q8"), small); }), Errc::CapExceeded);
}

TEST(Isoclinism, WitnessesAlwaysVerify) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"D8", "Q8"}, {"D8", "D8xC2"}, {"Q8", "C2xD8"}, {"S3", "S3xC2"}, {"A4", "A4xC2"}, {"D16", "Q16"}, {"D16", "SD16"}};
  for (const auto& [a, b] : pairs) {
    const Group h1 = realize(a), h2 = realize(b);
    const auto w = isoclinic(h1, h2);
    ASSERT_TRUE(w.has_value()) << a << " " << b;
    EXPECT_TRUE(verify_isoclinism(h1, h2, *w)) << a << " " << b;
  }
}

TEST(Oracle, MatchesDeepCommutingGraphOnSmallCensus) {
  for (const auto& spec : default_census()) {
    const Group g = realize(spec);
    if (g.order() > 12) continue;
    const auto report = dcom_oracle_report(g);
    EXPECT_TRUE(report.graph.same_edges(deep_commuting_graph(g))) << spec;
    for (const auto& p : report.primes) EXPECT_GT(p.extensions, 0u) << spec;
  }
}

TEST(Oracle, ModesAndCap) {
  const auto v4 = dcom_oracle_report(realize("C2xC2"));
  ASSERT_EQ(v4.primes.size(), 1u);
  EXPECT_EQ(v4.primes[0].mode, OracleMode::AllCochains);
  EXPECT_EQ(to_string(v4.primes[0].mode), "all-cochains");
  const auto c2c4 = dcom_oracle_report(realize("C2xC4"));
  EXPECT_NE(c2c4.primes[0].mode, OracleMode::AllCochains);
  EXPECT_TRUE(c2c4.graph.same_edges(deep_commuting_graph(realize("C2xC4"))));
  EXPECT_EQ(code_of([] { dcom_oracle(realize("C13")); }), Errc::CapExceeded);
}

TEST(Oracle, Deterministic) {
  const Group g = realize("D12");
  EXPECT_EQ(emit(dcom_oracle(g), GraphFormat::EdgeList), emit(dcom_oracle(g), GraphFormat::EdgeList));
}
