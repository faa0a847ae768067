#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dcg/cohomology.hpp"
#include "dcg/morphisms.hpp"
#include "dcg/spec_lang.hpp"

using namespace dcg;

namespace {

/// Every normalized cochain over Z/q, filtered by the cocycle identity.
std::vector<Row> brute_cocycles(const Group& g, const ResidueRing& ring) {
  const std::size_t n = g.order(), width = (n - 1) * (n - 1);
  std::vector<Row> out;
  Row f(width, 0);
  while (true) {
    if (is_cocycle(g, ring, f)) out.push_back(f);
    std::size_t i = 0;
    while (i < width && ++f[i] == ring.modulus()) f[i++] = 0;
    if (i == width) break;
  }
  return out;
}

AbelianInvariants inv(std::vector<std::uint64_t> f) { return AbelianInvariants(std::move(f)); }

CohomologyOptions with_strategy(SolverStrategy s) {
  CohomologyOptions o;
  o.strategy = s;
  return o;
}

const std::vector<std::string> kSmall{"C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "Q8", "C2xC4", "C2xC2xC2",
                                      "C3xC3", "D10", "A4", "D12", "C2xC6", "C4xC4", "SD16", "C2xQ8"};

}  // namespace

TEST(CocycleModule, MatchesExhaustiveEnumeration) {
  const std::vector<std::tuple<std::string, std::uint32_t, unsigned>> cases{
      {"C2", 2, 1}, {"C3", 3, 1}, {"C2xC2", 2, 1}, {"C2xC2", 2, 2}, {"C4", 2, 2}};
  for (const auto& [spec, p, k] : cases) {
    const Group g = realize(spec);
    const ResidueRing ring(p, k);
    const std::size_t width = (g.order() - 1) * (g.order() - 1);
    const auto brute = brute_cocycles(g, ring);
    for (auto strategy : {SolverStrategy::Direct, SolverStrategy::Substitution}) {
      const auto module = howell_form(ring, width, solve_cocycles(g, ring, false, with_strategy(strategy)));
      double size = 1;
      for (std::size_t i = 0; i < module.log_size(); ++i) size *= p;
      EXPECT_EQ(size, double(brute.size())) << spec << " mod " << ring.modulus();
      for (const auto& f : brute) EXPECT_TRUE(module.contains(f));
    }
  }
}

TEST(CocycleModule, C2HasOneUnknownAndTheCarryCocycle) {
  const Group g = realize("C2");
  const ResidueRing ring(2, 1);
  EXPECT_EQ(solve_cocycles(g, ring, false), (std::vector<Row>{Row{1}}));
  const auto basis = cocycle_basis(g, 2, 1);
  ASSERT_EQ(basis.carries.size(), 1u);
  EXPECT_EQ(basis.carries[0], Row{1});
}

TEST(CocycleModule, KnownRanks) {
  // V4 mod 2: |Z^2| = |B^2| |H^2| = 2 * 8
  const Group v4 = realize("C2xC2");
  EXPECT_EQ(howell_form(ResidueRing(2, 1), 9, solve_cocycles(v4, ResidueRing(2, 1), false)).log_size(), 4u);
}

TEST(CocycleModule, DirectAndSubstitutionAgree) {
  for (const auto& spec : kSmall) {
    const Group g = realize(spec);
    for (auto [p, k] : factorize(g.order())) {
      const ResidueRing ring(p, k);
      for (bool symmetric : {false, true}) {
        const auto a = solve_cocycles(g, ring, symmetric, with_strategy(SolverStrategy::Direct));
        const auto b = solve_cocycles(g, ring, symmetric, with_strategy(SolverStrategy::Substitution));
        EXPECT_EQ(a, b) << spec << " p=" << p << " symmetric=" << symmetric;
      }
    }
  }
}

TEST(CocycleModule, MembershipAgreesWithCocycleIdentity) {
  std::mt19937_64 rng(31);
  for (const auto& spec : {"C2xC2", "S3", "D8", "C3xC3"}) {
    const Group g = realize(spec);
    const std::size_t width = (g.order() - 1) * (g.order() - 1);
    for (auto [p, k] : factorize(g.order())) {
      const ResidueRing ring(p, k);
      const auto module = howell_form(ring, width, solve_cocycles(g, ring, false));
      std::size_t hits = 0;
      for (int trial = 0; trial < 200; ++trial) {
        Row f(width, 0);
        // perturb a random module element in one coordinate half of the time
        for (const auto& r : module.rows()) detail::axpy(ring, f, r, static_cast<Residue>(rng() % ring.modulus()), 0);
        if (rng() % 2) f[rng() % width] = ring.add(f[rng() % width], 1);
        const bool cocycle = is_cocycle(g, ring, f);
        EXPECT_EQ(cocycle, module.contains(f)) << spec;
        hits += cocycle;
      }
      EXPECT_GT(hits, 0u);
      EXPECT_LT(hits, 200u);
    }
  }
  EXPECT_THROW(Cochain2(ResidueRing(2, 1), 4, Row(8, 0)), Error);
}

TEST(Multipliers, Examples) {
  const std::vector<std::tuple<std::string, AbelianInvariants, AbelianInvariants>> cases{
      {"C1", inv({}), inv({})},          {"C2", inv({}), inv({})},         {"C6", inv({}), inv({})},
      {"C2xC2", inv({2}), inv({})},      {"S3", inv({}), inv({})},         {"D8", inv({2}), inv({})},
      {"Q8", inv({}), inv({})},          {"C2xC4", inv({2}), inv({})},     {"C2xC2xC2", inv({2, 2, 2}), inv({})},
      {"C3xC3", inv({3}), inv({})},      {"A4", inv({2}), inv({})},        {"D12", inv({2}), inv({})},
      {"C4xC4", inv({4}), inv({})},      {"C2xQ8", inv({2, 2}), inv({})},  {"Q16", inv({}), inv({})},
      {"S4", inv({2}), inv({})},         {"D10", inv({}), inv({})},        {"C2xC6", inv({2}), inv({})},
  };
  for (const auto& [spec, m, b0] : cases) {
    const auto r = bogomolov_multiplier(realize(spec));
    EXPECT_EQ(r.schur, m) << spec << " got " << r.schur.str();
    EXPECT_EQ(r.bogomolov, b0) << spec << " got " << r.bogomolov.str();
    EXPECT_EQ(r.m0_order, m.order() / b0.order());
  }
}

TEST(Multipliers, CapExceeded) {
  CohomologyOptions o;
  o.limits.cohomology = 8;
  EXPECT_THROW(compute_cohomology(realize("C3xC3"), o), Error);
  EXPECT_THROW(deep_commuting_graph(realize("C3xC3"), o), Error);
}

TEST(Pairing, AlternatingAndVanishesOnCoboundaries) {
  for (const auto& spec : {"C2xC2", "D8", "C2xC4", "C3xC3", "A4"}) {
    const Group g = realize(spec);
    const auto coh = compute_cohomology(g);
    for (const auto& pc : coh.primes) {
      for (std::size_t i = 0; i < pc.basis.z2.size(); ++i) {
        const auto f = pc.basis.generator(i);
        for (Elem x = 0; x < g.order(); ++x) {
          EXPECT_EQ(pairing_value(g, f, x, x), 0u);
          for (Elem y = 0; y < g.order(); ++y)
            if (g.commute(x, y)) {
              EXPECT_EQ(pc.basis.ring.add(pairing_value(g, f, x, y), pairing_value(g, f, y, x)), 0u);
            }
        }
      }
      for (const auto& r : relation_rows(pc.basis)) {
        const Cochain2 d(pc.basis.ring, g.order(), r);
        for (Elem x = 0; x < g.order(); ++x)
          for (Elem y = 0; y < g.order(); ++y)
            if (g.commute(x, y)) {
              EXPECT_EQ(pairing_value(g, d, x, y), 0u) << spec;
            }
      }
    }
  }
}

TEST(Pairing, AdditiveOnPairwiseCommutingTriples) {
  for (const auto& spec : {"C2xC2", "C2xC4", "C3xC3", "D8", "C2xQ8"}) {
    const Group g = realize(spec);
    const auto coh = compute_cohomology(g);
    for (const auto& pc : coh.primes)
      for (std::size_t i = 0; i < pc.basis.z2.size(); ++i) {
        const auto f = pc.basis.generator(i);
        for (Elem x = 0; x < g.order(); ++x)
          for (Elem y = 0; y < g.order(); ++y)
            for (Elem z = 0; z < g.order(); ++z) {
              if (!g.commute(x, y) || !g.commute(x, z) || !g.commute(y, z)) continue;
              EXPECT_EQ(pairing_value(g, f, g.mul(x, y), z),
                        pc.basis.ring.add(pairing_value(g, f, x, z), pairing_value(g, f, y, z)))
                  << spec;
            }
      }
  }
}

TEST(Pairing, RejectsNonCommutingPairs) {
  const Group g = realize("S3");
  const auto coh = compute_cohomology(g);
  const auto f = coh.primes[0].basis.generator(0);
  Elem x = 1, y = 1;
  for (Elem a = 1; a < 6; ++a)
    for (Elem b = 1; b < 6; ++b)
      if (!g.commute(a, b)) x = a, y = b;
  try {
    pairing_value(g, f, x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCommuting);
  }
}

TEST(DeepCommutingGraph, MatchesExhaustiveCocyclesOnKleinGroup) {
  const Group g = realize("C2xC2");
  const auto brute = brute_cocycles(g, ResidueRing(2, 2));
  auto expected = SimpleGraph::empty_on(g, GraphKind::DCom);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = x + 1; y < 4; ++y) {
      bool ok = true;
      for (const auto& f : brute)
        if (x && f[pair_index(4, x, y)] != f[pair_index(4, y, x)]) ok = false;
      if (ok) expected.add_edge(x, y);
    }
  const auto dcom = deep_commuting_graph(g);
  EXPECT_TRUE(dcom.same_edges(expected));
  EXPECT_EQ(dcom.edge_count(), 3u);
  EXPECT_EQ(dcom.degree(0), 3u);
}

TEST(DeepCommutingGraph, Examples) {
  const auto c3c3 = deep_commuting_graph(realize("C3xC3"));
  EXPECT_EQ(c3c3.edge_count(), 12u);
  EXPECT_TRUE(c3c3.same_edges(enhanced_power_graph(realize("C3xC3"))));

  const Group g = realize("C2xC4");
  const auto dcom = deep_commuting_graph(g);
  // a = (a,1) = 4, b = (1,a) = 1, b^2 = (1,a^2) = 2
  EXPECT_TRUE(dcom.adjacent(4, 2));
  EXPECT_FALSE(dcom.adjacent(4, 1));
  EXPECT_FALSE(enhanced_power_graph(g).adjacent(4, 2));
  EXPECT_FALSE(dcom.same_edges(commuting_graph(g)));
}

TEST(DeepCommutingGraph, EqualsCommutingGraphWhenMultiplierTrivial) {
  for (const auto& spec : kSmall) {
    const Group g = realize(spec);
    if (!schur_multiplier(g).trivial()) continue;
    EXPECT_TRUE(deep_commuting_graph(g).same_edges(commuting_graph(g))) << spec;
  }
}

TEST(DeepCommutingGraph, InvariantUnderAutomorphisms) {
  for (const auto& spec : {"C2xC4", "D8", "C2xC2xC2", "A4", "C3xC3"}) {
    const Group g = realize(spec);
    const auto dcom = deep_commuting_graph(g);
    for (const auto& a : automorphisms(g))
      for (auto [x, y] : dcom.edges()) EXPECT_TRUE(dcom.adjacent(a[x], a[y])) << spec;
  }
}

TEST(DeepCommutingGraph, IndependentOfThreadCount) {
  for (const auto& spec : {"C2xC4", "SD16", "C2xQ8"}) {
    const Group g = realize(spec);
    CohomologyOptions one, four;
    four.limits.threads = 4;
    const auto a = compute_cohomology(g, one);
    const auto b = compute_cohomology(g, four);
    ASSERT_EQ(a.primes.size(), b.primes.size());
    for (std::size_t i = 0; i < a.primes.size(); ++i) {
      EXPECT_EQ(a.primes[i].basis.z2, b.primes[i].basis.z2);
      EXPECT_EQ(a.primes[i].symmetric, b.primes[i].symmetric);
    }
    EXPECT_EQ(emit(deep_commuting_graph(g, one), GraphFormat::EdgeList),
              emit(deep_commuting_graph(g, four), GraphFormat::EdgeList));
  }
}

TEST(BasisJson, GoldenKleinGroup) {
  const Group g = realize("C2xC2");
  const auto basis = cocycle_basis(g, 2, 2);
  std::ifstream in(std::string(DCG_GOLDEN_DIR) + "/basis_c2xc2_p2.json");
  ASSERT_TRUE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(basis_to_json(basis).dump(2) + "\n", golden.str());
}
