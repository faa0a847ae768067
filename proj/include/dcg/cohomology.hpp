#pragma once

// Normalized 2-cocycles with coefficients in Z/p^k, the commutator pairing
// they induce on commuting pairs, and what follows from it: the deep
// commuting graph, the Schur multiplier and the Bogomolov multiplier.
//
// For a cocycle f the extension H_f = G x Z/p^k with
//   (g, a)(h, b) = (gh, a + b + f(g, h))
// is central, and lifts of commuting x, y commute in H_f exactly when
// f(x, y) = f(y, x). With p^k the full p-part of |G| these extensions see
// every central extension of G, so the pairing over all primes decides the
// deep commuting graph. Modulo coboundaries and the "carry" classes coming
// from characters G -> Z/p^k, the cocycle module is the p-part of M(G);
// restricted to cocycles symmetric on all commuting pairs it is the p-part of
// the Bogomolov multiplier.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcg/abelian.hpp"
#include "dcg/error.hpp"
#include "dcg/graph.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"
#include "dcg/residue.hpp"

namespace dcg {

/// Index of the unknown f(x, y), x, y != identity.
inline std::size_t pair_index(std::size_t n, Elem x, Elem y) { return (x - 1) * (n - 1) + (y - 1); }

/// A normalized 2-cochain G x G -> Z/p^k; values at pairs involving the
/// identity are implicitly zero.
struct Cochain2 {
  ResidueRing ring;
  std::size_t n;
  Row values;  ///< (n-1)^2 entries, see pair_index

  Cochain2(ResidueRing r, std::size_t order) : ring(std::move(r)), n(order), values((order - 1) * (order - 1), 0) {}
  Cochain2(ResidueRing r, std::size_t order, Row v) : ring(std::move(r)), n(order), values(std::move(v)) {
    require(values.size() == (n - 1) * (n - 1), Errc::OutOfRange, "cochain has the wrong number of values");
    for (auto x : values) require(x < ring.modulus(), Errc::OutOfRange, "cochain value not reduced");
  }

  Residue at(Elem x, Elem y) const { return (x == 0 || y == 0) ? 0 : values[pair_index(n, x, y)]; }
};

/// True when f(x,y) + f(xy,z) = f(y,z) + f(x,yz) for all triples.
inline bool is_cocycle(const Group& g, const ResidueRing& ring, const Row& f) {
  const std::size_t n = g.order();
  auto at = [&](Elem x, Elem y) -> Residue { return (x == 0 || y == 0) ? 0 : f[pair_index(n, x, y)]; };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      const Elem xy = g.mul(x, y);
      const Residue fxy = at(x, y);
      for (Elem z = 1; z < n; ++z) {
        const Elem yz = g.mul(y, z);
        if (ring.add(fxy, at(xy, z)) != ring.add(at(y, z), at(x, yz))) return false;
      }
    }
  return true;
}

inline bool is_cocycle(const Group& g, const Cochain2& f) {
  require(f.n == g.order(), Errc::OutOfRange, "cochain is for a different group order");
  return is_cocycle(g, f.ring, f.values);
}

/// f(x, y) - f(y, x) for commuting x, y.
inline Residue pairing_value(const Group& g, const Cochain2& f, Elem x, Elem y) {
  check_element(g, x);
  check_element(g, y);
  require(g.commute(x, y), Errc::NotCommuting, g.name(x) + " and " + g.name(y) + " do not commute");
  return f.ring.sub(f.at(x, y), f.at(y, x));
}

enum class SolverStrategy {
  Auto,          ///< Direct up to CohomologyOptions::direct_max_order, Substitution beyond
  Direct,        ///< one 4-sparse row per triple of non-identity elements
  Substitution,  ///< unknowns reduced to f(x, s), s in a generating set
};

struct CohomologyOptions {
  Limits limits = default_limits();
  SolverStrategy strategy = SolverStrategy::Auto;
  std::size_t direct_max_order = 16;
};

struct CocycleBasis {
  std::string group;
  std::size_t order = 1;
  ResidueRing ring{2, 1};
  std::vector<Row> z2;       ///< canonical Howell form of the cocycle module Z^2
  std::vector<Row> b2;       ///< delta(e_g) for each non-identity g
  std::vector<Row> carries;  ///< carry cocycles of generators of Hom(G, Z/p^k)
  std::vector<Row> characters;  ///< those generators, as values on the n-1 non-identity elements

  Cochain2 generator(std::size_t i) const { return Cochain2(ring, order, z2.at(i)); }
  std::size_t width() const { return (order - 1) * (order - 1); }
};

namespace detail {

inline std::vector<std::pair<Elem, Elem>> commuting_pairs(const Group& g) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 1; x < g.order(); ++x)
    for (Elem y = x + 1; y < g.order(); ++y)
      if (g.commute(x, y)) out.emplace_back(x, y);
  return out;
}

inline std::vector<Row> solve_direct(const Group& g, const ResidueRing& ring, bool symmetric) {
  const std::size_t n = g.order();
  const std::size_t width = (n - 1) * (n - 1);
  HowellForm h(ring, width);
  const Residue minus_one = ring.neg(1);
  Row row(width, 0);
  auto bump = [&](Elem a, Elem b, Residue v) {
    if (a != 0 && b != 0) {
      auto& cell = row[pair_index(n, a, b)];
      cell = ring.add(cell, v);
    }
  };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      for (Elem z = 1; z < n; ++z) {
        std::fill(row.begin(), row.end(), 0);
        bump(x, y, 1);
        bump(g.mul(x, y), z, 1);
        bump(y, z, minus_one);
        bump(x, g.mul(y, z), minus_one);
        if (!detail::is_zero(row)) h.insert(row);
      }
  if (symmetric)
    for (auto [x, y] : commuting_pairs(g)) {
      std::fill(row.begin(), row.end(), 0);
      bump(x, y, 1);
      bump(y, x, minus_one);
      h.insert(row);
    }
  h.canonicalize();
  return right_kernel(ring, h.rows(), width);
}

/// Every normalized cocycle is determined by its values f(x, s) for s in a
/// generating set S, via f(x, ws) = f(x, w) + f(xw, s) - f(w, s) along a
/// spanning tree of the Cayley graph. The cocycle identity for triples
/// (x, y, s) with s in S implies it for all triples, so the reduced system
/// has (n-1)|S| unknowns and (n-1)^2 |S| rows.
inline std::vector<Row> solve_substitution(const Group& g, const ResidueRing& ring, bool symmetric) {
  const std::size_t n = g.order();
  const auto gens = generating_set(g);
  const std::size_t s_count = gens.size();
  const std::size_t m = (n - 1) * s_count;
  auto unknown = [&](Elem y, std::size_t si) { return (y - 1) * s_count + si; };

  // spanning tree: w = parent[w] * gens[label[w]]
  constexpr Elem none = static_cast<Elem>(-1);
  std::vector<Elem> parent(n, none), bfs{0};
  std::vector<std::size_t> label(n, 0);
  parent[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t si = 0; si < s_count; ++si) {
      const Elem w = g.mul(bfs[i], gens[si]);
      if (parent[w] == none) {
        parent[w] = bfs[i];
        label[w] = si;
        bfs.push_back(w);
      }
    }

  // expansion[(x * n + w) * m + j]: coefficient of unknown j in f(x, w)
  std::vector<Residue> expansion(n * n * m, 0);
  auto exp_row = [&](Elem x, Elem w) { return expansion.data() + (std::size_t(x) * n + w) * m; };
  for (std::size_t i = 1; i < bfs.size(); ++i) {
    const Elem w = bfs[i];
    const Elem par = parent[w];
    const std::size_t si = label[w];
    for (Elem x = 1; x < n; ++x) {
      Residue* dst = exp_row(x, w);
      const Residue* src = exp_row(x, par);
      for (std::size_t j = 0; j < m; ++j) dst[j] = src[j];
      const Elem xp = g.mul(x, par);
      if (xp != 0) dst[unknown(xp, si)] = ring.add(dst[unknown(xp, si)], 1);
      if (par != 0) dst[unknown(par, si)] = ring.sub(dst[unknown(par, si)], 1);
    }
  }

  HowellForm h(ring, m);
  Row row(m, 0);
  auto accumulate = [&](Elem a, Elem b, bool negative) {
    if (a == 0 || b == 0) return;
    const Residue* src = exp_row(a, b);
    for (std::size_t j = 0; j < m; ++j)
      if (src[j]) row[j] = negative ? ring.sub(row[j], src[j]) : ring.add(row[j], src[j]);
  };
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      for (std::size_t si = 0; si < s_count; ++si) {
        const Elem s = gens[si];
        std::fill(row.begin(), row.end(), 0);
        accumulate(x, y, false);
        accumulate(g.mul(x, y), s, false);
        accumulate(y, s, true);
        accumulate(x, g.mul(y, s), true);
        if (!detail::is_zero(row)) h.insert(row);
      }
  if (symmetric)
    for (auto [x, y] : commuting_pairs(g)) {
      std::fill(row.begin(), row.end(), 0);
      accumulate(x, y, false);
      accumulate(y, x, true);
      if (!detail::is_zero(row)) h.insert(row);
    }
  h.canonicalize();
  const auto reduced = right_kernel(ring, h.rows(), m);

  const std::size_t width = (n - 1) * (n - 1);
  std::vector<Row> full;
  full.reserve(reduced.size());
  for (const auto& u : reduced) {
    Row f(width, 0);
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) {
        const Residue* e = exp_row(x, y);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += std::uint64_t(e[j]) * u[j];
        f[pair_index(n, x, y)] = ring.reduce(acc);
      }
    full.push_back(std::move(f));
  }
  return full;
}

inline std::vector<Row> canonical(const ResidueRing& ring, std::size_t width, const std::vector<Row>& rows) {
  return howell_form(ring, width, rows).rows();
}

/// Generators of Hom(G, Z/p^k) as value vectors on non-identity elements.
inline std::vector<Row> characters(const Group& g, const ResidueRing& ring) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  HowellForm h(ring, n - 1);
  Row row(n - 1, 0);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      std::fill(row.begin(), row.end(), 0);
      row[x - 1] = ring.add(row[x - 1], 1);
      row[y - 1] = ring.add(row[y - 1], 1);
      const Elem xy = g.mul(x, y);
      if (xy != 0) row[xy - 1] = ring.sub(row[xy - 1], 1);
      if (!detail::is_zero(row)) h.insert(row);
    }
  h.canonicalize();
  return right_kernel(ring, h.rows(), n - 1);
}

}  // namespace detail

/// Solves for the module of normalized cocycles with the requested strategy;
/// if `symmetric`, also imposes f(x, y) = f(y, x) on every commuting pair.
/// The result is the canonical Howell form, verified against every cocycle
/// identity before it is returned.
inline std::vector<Row> solve_cocycles(const Group& g, const ResidueRing& ring, bool symmetric,
                                       const CohomologyOptions& options = {}) {
  const std::size_t n = g.order();
  require(n <= options.limits.cohomology, Errc::CapExceeded,
          "cohomology refused for order " + std::to_string(n) + " (cap " + std::to_string(options.limits.cohomology) +
              ")");
  if (n == 1) return {};
  SolverStrategy strategy = options.strategy;
  if (strategy == SolverStrategy::Auto)
    strategy = n <= options.direct_max_order ? SolverStrategy::Direct : SolverStrategy::Substitution;
  auto raw = strategy == SolverStrategy::Direct ? detail::solve_direct(g, ring, symmetric)
                                                : detail::solve_substitution(g, ring, symmetric);
  auto rows = detail::canonical(ring, (n - 1) * (n - 1), raw);
  std::vector<char> ok(rows.size(), 0);
  parallel_for(rows.size(), options.limits.threads, [&](std::size_t i) { ok[i] = is_cocycle(g, ring, rows[i]); });
  for (std::size_t i = 0; i < rows.size(); ++i)
    require(ok[i], Errc::InternalVerificationFailure,
            "solver returned a non-cocycle for " + g.label() + " mod " + std::to_string(ring.modulus()));
  if (symmetric)
    for (const auto& r : rows)
      for (auto [x, y] : detail::commuting_pairs(g))
        require(r[pair_index(n, x, y)] == r[pair_index(n, y, x)], Errc::InternalVerificationFailure,
                "symmetric solver returned an asymmetric cocycle");
  return rows;
}

inline CocycleBasis cocycle_basis(const Group& g, std::uint32_t p, unsigned k, const CohomologyOptions& options = {}) {
  require(g.order() <= options.limits.cohomology, Errc::CapExceeded,
          "cohomology refused for order " + std::to_string(g.order()) + " (cap " +
              std::to_string(options.limits.cohomology) + ")");
  CocycleBasis basis;
  basis.group = g.label();
  basis.order = g.order();
  basis.ring = ResidueRing(p, k);
  const std::size_t n = g.order();
  if (n == 1) return basis;
  const auto& ring = basis.ring;
  const std::size_t width = (n - 1) * (n - 1);
  basis.z2 = solve_cocycles(g, ring, false, options);

  for (Elem t = 1; t < n; ++t) {
    Row d(width, 0);
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) {
        int v = (x == t) + (y == t) - (g.mul(x, y) == t);
        d[pair_index(n, x, y)] = ring.reduce_signed(v);
      }
    basis.b2.push_back(std::move(d));
  }

  basis.characters = detail::characters(g, ring);
  const std::int64_t q = ring.modulus();
  for (const auto& chi : basis.characters) {
    auto val = [&](Elem x) -> std::int64_t { return x == 0 ? 0 : chi[x - 1]; };
    Row c(width, 0);
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) {
        const std::int64_t s = val(x) + val(y) - val(g.mul(x, y));
        require(s % q == 0, Errc::InternalVerificationFailure, "character is not a homomorphism");
        c[pair_index(n, x, y)] = ring.reduce_signed(s / q);
      }
    basis.carries.push_back(std::move(c));
  }
  return basis;
}

/// Per-prime cohomological data shared by the graph and multiplier queries.
struct PrimeCohomology {
  CocycleBasis basis;
  std::vector<Row> symmetric;  ///< canonical Howell form of the cocycles symmetric on commuting pairs
  std::vector<unsigned> schur_exponents;
  std::vector<unsigned> bogomolov_exponents;
};

struct GroupCohomology {
  std::string group;
  std::size_t order = 1;
  std::vector<PrimeCohomology> primes;
};

inline std::vector<Row> relation_rows(const CocycleBasis& b) {
  std::vector<Row> rel = b.b2;
  rel.insert(rel.end(), b.carries.begin(), b.carries.end());
  return rel;
}

/// Everything for all primes p dividing |G|, with p^k the full p-part.
inline GroupCohomology compute_cohomology(const Group& g, const CohomologyOptions& options = {}) {
  require(g.order() <= options.limits.cohomology, Errc::CapExceeded,
          "cohomology refused for order " + std::to_string(g.order()) + " (cap " +
              std::to_string(options.limits.cohomology) + ")");
  GroupCohomology out;
  out.group = g.label();
  out.order = g.order();
  const auto primes = factorize(g.order());
  out.primes.resize(primes.size());
  const std::size_t width = (g.order() - 1) * (g.order() - 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto [p, k] = primes[i];
    PrimeCohomology& pc = out.primes[i];
    pc.basis = cocycle_basis(g, p, k, options);
    const auto relations = relation_rows(pc.basis);
    const auto z2 = howell_form(pc.basis.ring, width, pc.basis.z2);
    for (const auto& r : relations)
      require(z2.contains(r) && is_cocycle(g, pc.basis.ring, r), Errc::InternalVerificationFailure,
              "coboundary or carry class outside the cocycle module");
    pc.schur_exponents = quotient_exponents(z2, relations);
    pc.symmetric = solve_cocycles(g, pc.basis.ring, true, options);
    const auto t = howell_form(pc.basis.ring, width, pc.symmetric);
    for (const auto& r : t.rows())
      require(z2.contains(r), Errc::InternalVerificationFailure, "symmetric cocycle outside the cocycle module");
    pc.bogomolov_exponents = quotient_exponents(t, relations);
  }
  return out;
}

/// x ~ y iff x != y, xy = yx and f(x, y) = f(y, x) for every cocycle f.
inline SimpleGraph deep_commuting_graph(const Group& g, const GroupCohomology& coh) {
  auto out = SimpleGraph::empty_on(g, GraphKind::DCom);
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (!g.commute(x, y)) continue;
      bool symmetric = true;
      if (x != 0)
        for (const auto& pc : coh.primes) {
          for (const auto& f : pc.basis.z2)
            if (f[pair_index(n, x, y)] != f[pair_index(n, y, x)]) {
              symmetric = false;
              break;
            }
          if (!symmetric) break;
        }
      if (symmetric) out.add_edge(x, y);
    }
  return out;
}

inline SimpleGraph deep_commuting_graph(const Group& g, const CohomologyOptions& options = {}) {
  require(g.order() <= options.limits.cohomology, Errc::CapExceeded,
          "cohomology refused for order " + std::to_string(g.order()) + " (cap " +
              std::to_string(options.limits.cohomology) + ")");
  GroupCohomology coh;
  coh.group = g.label();
  coh.order = g.order();
  for (auto [p, k] : factorize(g.order())) {
    PrimeCohomology pc;
    pc.basis.group = g.label();
    pc.basis.order = g.order();
    pc.basis.ring = ResidueRing(p, k);
    pc.basis.z2 = solve_cocycles(g, pc.basis.ring, false, options);
    coh.primes.push_back(std::move(pc));
  }
  return deep_commuting_graph(g, coh);
}

struct PrimeMultiplierDetail {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::size_t z2_generators = 0;
  std::size_t symmetric_generators = 0;
  std::vector<unsigned> schur_exponents;
  std::vector<unsigned> bogomolov_exponents;
};

struct MultiplierReport {
  AbelianInvariants schur;
  AbelianInvariants bogomolov;
  std::uint64_t m0_order = 1;  ///< |M_0(G)| = |M(G)| / |B_0(G)|
  std::vector<PrimeMultiplierDetail> primes;
};

inline MultiplierReport multiplier_report(const GroupCohomology& coh) {
  MultiplierReport r;
  std::map<std::uint32_t, std::vector<unsigned>> schur, bog;
  for (const auto& pc : coh.primes) {
    const auto p = pc.basis.ring.prime();
    schur[p] = pc.schur_exponents;
    bog[p] = pc.bogomolov_exponents;
    r.primes.push_back({p, pc.basis.ring.exponent(), pc.basis.z2.size(), pc.symmetric.size(), pc.schur_exponents,
                        pc.bogomolov_exponents});
  }
  r.schur = AbelianInvariants::from_prime_powers(schur);
  r.bogomolov = AbelianInvariants::from_prime_powers(bog);
  require(r.schur.order() % r.bogomolov.order() == 0, Errc::InternalVerificationFailure,
          "Bogomolov multiplier order does not divide the Schur multiplier order");
  r.m0_order = r.schur.order() / r.bogomolov.order();
  return r;
}

inline AbelianInvariants schur_multiplier(const Group& g, const CohomologyOptions& options = {}) {
  return multiplier_report(compute_cohomology(g, options)).schur;
}

inline MultiplierReport bogomolov_multiplier(const Group& g, const CohomologyOptions& options = {}) {
  return multiplier_report(compute_cohomology(g, options));
}

/// Debug dump: {"group", "p", "k", "generator_count", "generators": [{"(i,j)": v}]}
inline nlohmann::ordered_json basis_to_json(const CocycleBasis& b) {
  nlohmann::ordered_json j;
  j["group"] = b.group;
  j["p"] = b.ring.prime();
  j["k"] = b.ring.exponent();
  j["generator_count"] = b.z2.size();
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& f : b.z2) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
    for (Elem x = 1; x < b.order; ++x)
      for (Elem y = 1; y < b.order; ++y) {
        const auto v = f[pair_index(b.order, x, y)];
        if (v) entry["(" + std::to_string(x) + "," + std::to_string(y) + ")"] = v;
      }
    j["generators"].push_back(std::move(entry));
  }
  return j;
}

}  // namespace dcg
