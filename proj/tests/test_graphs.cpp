#include <numeric>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dcg/cohomology.hpp"
#include "dcg/families.hpp"
#include "dcg/graph.hpp"
#include "dcg/graph_iso.hpp"
#include "dcg/spec_lang.hpp"
#include "dcg/subgroups.hpp"

using namespace dcg;

namespace {

SimpleGraph star(std::size_t leaves) {
  SimpleGraph g(std::vector<std::string>(leaves + 1, "v"));
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  SimpleGraph g(std::move(labels));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

/// Enhanced power graph from the definition: <x, y> is cyclic.
SimpleGraph epow_oracle(const Group& g) {
  auto out = SimpleGraph::empty_on(g, GraphKind::EPow);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y) {
      const Elem gens[] = {x, y};
      if (set_is_cyclic(g, subgroup_generated(g, gens))) out.add_edge(x, y);
    }
  return out;
}

const std::vector<std::string> kGroups{"C1", "C2", "C6", "C2xC2", "S3", "D8", "Q8", "C2xC4", "C3xC3", "A4", "D12",
                                       "SD16", "C2xQ8"};

}  // namespace

TEST(CommutingGraph, Examples) {
  const auto v4 = commuting_graph(realize("C2xC2"));
  EXPECT_TRUE(v4.same_edges(SimpleGraph::complete(4)));
  const Group s3 = realize("S3");
  const auto com = commuting_graph(s3);
  EXPECT_EQ(com.edge_count(), 6u);
  EXPECT_EQ(com.degree(0), 5u);
  // the two 3-cycles are the only other adjacent pair
  std::vector<Elem> three;
  for (Elem x = 1; x < 6; ++x)
    if (element_order(s3, x) == 3) three.push_back(x);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_TRUE(com.adjacent(three[0], three[1]));
}

TEST(CommutingGraph, LoopDensityIsCommutingProbability) {
  for (const auto& s : kGroups) {
    const Group g = realize(s);
    const auto com = commuting_graph(g);
    const std::uint64_t n = g.order();
    // ordered pairs with loops: 2|E| + n; kappa = classes / n
    EXPECT_EQ((2 * com.edge_count() + n) * n, conjugacy_classes(g).size() * n * n) << s;
  }
}

TEST(EnhancedPowerGraph, Examples) {
  EXPECT_TRUE(enhanced_power_graph(realize("C6")).same_edges(SimpleGraph::complete(6)));
  EXPECT_TRUE(enhanced_power_graph(realize("C2xC2")).same_edges(star(3)));
  const Group s3 = realize("S3");
  EXPECT_TRUE(enhanced_power_graph(s3).same_edges(commuting_graph(s3)));
}

TEST(EnhancedPowerGraph, MatchesCyclicSubgroupDefinition) {
  for (const auto& s : kGroups) {
    const Group g = realize(s);
    EXPECT_TRUE(enhanced_power_graph(g).same_edges(epow_oracle(g))) << s;
  }
}

TEST(Graphs, ChainAndIdentityVertex) {
  for (const auto& s : kGroups) {
    const Group g = realize(s);
    const auto epow = enhanced_power_graph(g);
    const auto dcom = deep_commuting_graph(g);
    const auto com = commuting_graph(g);
    EXPECT_TRUE(is_spanning_subgraph(epow, dcom)) << s;
    EXPECT_TRUE(is_spanning_subgraph(dcom, com)) << s;
    for (const auto* graph : {&epow, &dcom, &com}) {
      EXPECT_EQ(graph->degree(0), g.order() - 1) << s;
      for (std::size_t i = 0; i < g.order(); ++i) {
        EXPECT_FALSE(graph->adjacent(i, i));
        for (std::size_t j = 0; j < g.order(); ++j) EXPECT_EQ(graph->adjacent(i, j), graph->adjacent(j, i));
      }
    }
  }
}

TEST(InducedSubgraph, DeepCommutingGraphOnKleinSubgroupOfC2xC4) {
  const Group g = realize("C2xC4");
  // (a,1), (1,a^2), (a,a^2) with the identity
  const std::vector<Elem> klein{0, 2, 4, 6};
  EXPECT_EQ(g.name(4), "(a,1)");
  EXPECT_EQ(g.name(2), "(1,a^2)");
  EXPECT_TRUE(is_subgroup(g, klein));
  const auto induced = induced_subgraph(deep_commuting_graph(g), klein);
  EXPECT_TRUE(induced.same_edges(SimpleGraph::complete(4)));
}

TEST(GraphEqual, Basics) {
  const auto g = commuting_graph(realize("D8"));
  EXPECT_TRUE(graph_equal(g, g));
  EXPECT_FALSE(graph_equal(g, SimpleGraph::complete(8)));
  EXPECT_THROW(graph_equal(g, SimpleGraph::complete(4)), Error);
}

TEST(GraphIsomorphic, Examples) {
  const auto d8 = commuting_graph(realize("D8"));
  const auto q8 = commuting_graph(realize("Q8"));
  const auto phi = graph_isomorphic(d8, q8);
  ASSERT_TRUE(phi.has_value());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(d8.adjacent(i, j), q8.adjacent((*phi)[i], (*phi)[j]));
  EXPECT_FALSE(graph_isomorphic(star(3), SimpleGraph::complete(4)).has_value());
  EXPECT_TRUE(graph_isomorphic(deep_commuting_graph(realize("C2xC2")), star(3)).has_value());
}

TEST(GraphIsomorphic, RegularGraphsNeedBacktracking) {
  const auto hexagon = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto triangles = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(graph_isomorphic(hexagon, triangles).has_value());
  EXPECT_TRUE(graph_isomorphic(hexagon, hexagon).has_value());
}

TEST(GraphIsomorphic, FindsRandomRelabelings) {
  std::mt19937_64 rng(17);
  for (const auto& s : {"A4", "D12", "SD16", "C2xQ8"}) {
    const auto g = commuting_graph(realize(s));
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h(g.labels());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    const auto phi = graph_isomorphic(g, h);
    ASSERT_TRUE(phi.has_value()) << s;
    for (auto [a, b] : g.edges()) EXPECT_TRUE(h.adjacent((*phi)[a], (*phi)[b]));
  }
}

TEST(GraphIsomorphic, CapExceeded) {
  EXPECT_THROW(graph_isomorphic(SimpleGraph::complete(130), SimpleGraph::complete(130)), Error);
}

TEST(CosetBlowup, Examples) {
  const Group d8 = realize("D8");
  const auto quotient_graph = coset_blowup_decomposition(commuting_graph(d8), d8, center(d8));
  ASSERT_TRUE(quotient_graph.has_value());
  EXPECT_EQ(quotient_graph->size(), 4u);
  EXPECT_TRUE(quotient_graph->same_edges(star(3)));

  const Group c6 = realize("C6");
  ElementSet all(6);
  std::iota(all.begin(), all.end(), Elem{0});
  const auto single = coset_blowup_decomposition(commuting_graph(c6), c6, all);
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->size(), 1u);

  const Group s3 = realize("S3");
  const auto same = coset_blowup_decomposition(commuting_graph(s3), s3, ElementSet{0});
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->same_edges(commuting_graph(s3)));

  // EPow(D8) is not a blow-up over the centre: r and s r are in different
  // cosets whose members are not uniformly adjacent
  EXPECT_FALSE(coset_blowup_decomposition(enhanced_power_graph(d8), d8, center(d8)).has_value());
}

TEST(Emit, Formats) {
  SimpleGraph k13({"1", "a", "b", "ab"}, GraphKind::DCom, "V4");
  for (std::size_t i = 1; i < 4; ++i) k13.add_edge(0, i);
  EXPECT_EQ(emit(k13, GraphFormat::Dot),
            "graph \"V4 dcom\" {\n"
            "  0 [label=\"1\"];\n  1 [label=\"a\"];\n  2 [label=\"b\"];\n  3 [label=\"ab\"];\n"
            "  0 -- 1;\n  0 -- 2;\n  0 -- 3;\n}\n");
  EXPECT_EQ(emit(k13, GraphFormat::EdgeList), "0 1\n0 2\n0 3\n");
  EXPECT_EQ(emit(k13, GraphFormat::Json), "{\"group\":\"V4\",\"kind\":\"dcom\",\"n\":4,\"edges\":[[0,1],[0,2],[0,3]]}\n");

  const auto trivial = commuting_graph(realize("C1"));
  const auto j = nlohmann::json::parse(emit(trivial, GraphFormat::Json));
  EXPECT_EQ(j["n"], 1);
  EXPECT_TRUE(j["edges"].empty());

  const auto com = emit(commuting_graph(realize("C2xC2")), GraphFormat::EdgeList);
  EXPECT_EQ(std::count(com.begin(), com.end(), '\n'), 6);
}

TEST(Emit, Deterministic) {
  const auto a = emit(deep_commuting_graph(realize("C2xC4")), GraphFormat::Dot);
  const auto b = emit(deep_commuting_graph(realize("C2xC4")), GraphFormat::Dot);
  EXPECT_EQ(a, b);
}

TEST(Emit, EscapesDotLabels) {
  SimpleGraph g({"a\"b"}, GraphKind::Other, "G");
  EXPECT_NE(emit(g, GraphFormat::Dot).find("label=\"a\\\"b\""), std::string::npos);
}
