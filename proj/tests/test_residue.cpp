#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dcg/residue.hpp"

using namespace dcg;

namespace {

/// Every combination sum c_i rows_i, c_i in Z/q, by exhaustion.
std::set<Row> brute_span(const ResidueRing& ring, const std::vector<Row>& rows, std::size_t width) {
  std::set<Row> out{Row(width, 0)};
  for (const auto& r : rows) {
    std::set<Row> next;
    for (const auto& v : out)
      for (Residue c = 0; c < ring.modulus(); ++c) {
        Row w = v;
        for (std::size_t j = 0; j < width; ++j) w[j] = ring.add(w[j], ring.mul(c, r[j]));
        next.insert(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Row> all_vectors(const ResidueRing& ring, std::size_t width) {
  std::vector<Row> out{Row{}};
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<Row> next;
    for (const auto& v : out)
      for (Residue c = 0; c < ring.modulus(); ++c) {
        Row w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Row> random_rows(std::mt19937_64& rng, const ResidueRing& ring, std::size_t count, std::size_t width) {
  std::vector<Row> rows(count, Row(width));
  for (auto& r : rows)
    for (auto& x : r) {
      // bias toward non-units so zero divisors get exercised
      x = static_cast<Residue>(rng() % ring.modulus());
      if (rng() % 2) x = ring.mul(x, ring.prime());
    }
  return rows;
}

const std::vector<std::pair<std::uint32_t, unsigned>> kRings{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};

}  // namespace

TEST(ResidueRing, Arithmetic) {
  const ResidueRing r(2, 3);
  EXPECT_EQ(r.modulus(), 8u);
  EXPECT_EQ(r.reduce_signed(-3), 5u);
  EXPECT_EQ(r.valuation(0), 3u);
  EXPECT_EQ(r.valuation(4), 2u);
  EXPECT_EQ(r.valuation(6), 1u);
  EXPECT_EQ(r.valuation(3), 0u);
  for (Residue u : {1u, 3u, 5u, 7u}) EXPECT_EQ(r.mul(u, r.unit_inverse(u)), 1u);
  EXPECT_EQ(r.power(3), 0u);
  EXPECT_THROW(ResidueRing(4, 1), Error);
}

TEST(ResidueRing, Factorize) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(64), (std::vector<std::pair<std::uint32_t, unsigned>>{{2, 6}}));
  EXPECT_EQ(factorize(60), (std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 1}, {5, 1}}));
  EXPECT_TRUE(is_prime(11));
  EXPECT_FALSE(is_prime(9));
}

TEST(HowellForm, SpanMatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : kRings) {
    const ResidueRing ring(p, k);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t width = 3, count = 1 + trial % 3;
      const auto rows = random_rows(rng, ring, count, width);
      const auto h = howell_form(ring, width, rows);
      const auto expected = brute_span(ring, rows, width);
      EXPECT_EQ(brute_span(ring, h.rows(), width), expected) << "p^k = " << ring.modulus();
      EXPECT_EQ(std::pow(double(p), double(h.log_size())), double(expected.size()));
    }
  }
}

TEST(HowellForm, CanonicalFormDependsOnlyOnTheModule) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : kRings) {
    const ResidueRing ring(p, k);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t width = 4;
      auto rows = random_rows(rng, ring, 3, width);
      const auto h1 = howell_form(ring, width, rows);
      // same module: add combinations, then shuffle
      auto more = rows;
      Row combo(width, 0);
      for (const auto& r : rows) detail::axpy(ring, combo, r, static_cast<Residue>(rng() % ring.modulus()), 0);
      more.push_back(combo);
      std::shuffle(more.begin(), more.end(), rng);
      const auto h2 = howell_form(ring, width, more);
      EXPECT_EQ(h1.rows(), h2.rows());
    }
  }
}

TEST(HowellForm, CoordinatesReconstructEveryModuleElement) {
  std::mt19937_64 rng(3);
  for (auto [p, k] : kRings) {
    const ResidueRing ring(p, k);
    const std::size_t width = 3;
    const auto rows = random_rows(rng, ring, 2, width);
    const auto h = howell_form(ring, width, rows);
    const auto span = brute_span(ring, rows, width);
    for (const auto& v : all_vectors(ring, width)) {
      const auto c = h.coordinates(v);
      ASSERT_EQ(c.has_value(), span.count(v) == 1);
      if (!c) continue;
      Row w(width, 0);
      for (std::size_t i = 0; i < h.rank(); ++i) {
        EXPECT_LT((*c)[i], ring.modulus() / ring.power(h.leading_valuation(i)));
        detail::axpy(ring, w, h.rows()[i], (*c)[i], 0);
      }
      EXPECT_EQ(w, v);
    }
  }
}

TEST(Kernels, RightKernelMatchesExhaustiveSolutionSet) {
  std::mt19937_64 rng(5);
  for (auto [p, k] : kRings) {
    const ResidueRing ring(p, k);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t width = 3;
      const auto a = random_rows(rng, ring, 2, width);
      std::set<Row> solutions;
      for (const auto& x : all_vectors(ring, width)) {
        bool zero = true;
        for (const auto& r : a) {
          Residue s = 0;
          for (std::size_t j = 0; j < width; ++j) s = ring.add(s, ring.mul(r[j], x[j]));
          zero = zero && s == 0;
        }
        if (zero) solutions.insert(x);
      }
      EXPECT_EQ(brute_span(ring, right_kernel(ring, a, width), width), solutions);
    }
  }
}

TEST(Kernels, LeftKernelAnnihilatesRows) {
  std::mt19937_64 rng(9);
  const ResidueRing ring(2, 2);
  const auto a = random_rows(rng, ring, 4, 2);
  const auto left = left_kernel(ring, a, 2);
  const auto combos = brute_span(ring, left, a.size());
  std::size_t expected = 0;
  for (const auto& c : all_vectors(ring, a.size())) {
    Row s(2, 0);
    for (std::size_t i = 0; i < a.size(); ++i) detail::axpy(ring, s, a[i], c[i], 0);
    expected += detail::is_zero(s);
  }
  EXPECT_EQ(combos.size(), expected);
}

TEST(Smith, QuotientStructureMatchesCounting) {
  // |{v : p^j v in R}| / |R| = prod_i p^min(j, e_i) determines the e_i
  std::mt19937_64 rng(13);
  for (auto [p, k] : kRings) {
    const ResidueRing ring(p, k);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t width = 3;
      const auto rel = random_rows(rng, ring, 2, width);
      std::vector<Row> unit(width, Row(width, 0));
      for (std::size_t i = 0; i < width; ++i) unit[i][i] = 1;
      const auto full = howell_form(ring, width, unit);
      const auto exps = quotient_exponents(full, rel);
      const auto span = brute_span(ring, rel, width);
      for (unsigned j = 0; j <= k; ++j) {
        std::size_t count = 0;
        for (auto v : all_vectors(ring, width)) {
          detail::scale(ring, v, ring.power(j));
          count += span.count(v);
        }
        double predicted = 1;
        for (auto e : exps) predicted *= std::pow(double(p), double(std::min(j, e)));
        EXPECT_EQ(double(count) / double(span.size()), predicted) << "p^k = " << ring.modulus() << " j = " << j;
      }
    }
  }
}
