#pragma once

// Explicit central extensions: construction from cocycles and from central
// quotients, the relative commuting graph, stem and CP predicates, the
// commuting probability, the fibre product of two extensions, isoclinism and
// a brute-force oracle for the deep commuting graph.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcg/cohomology.hpp"
#include "dcg/error.hpp"
#include "dcg/graph.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"
#include "dcg/morphisms.hpp"
#include "dcg/residue.hpp"
#include "dcg/table_io.hpp"

namespace dcg {

/// The cocycle an extension was built from, when known.
struct CocycleProvenance {
  std::uint32_t p;
  unsigned k;
  Row values;
};

/// H with a surjection onto G whose kernel is central in H.
struct CentralExtension {
  Group total;
  Group base;
  std::vector<Elem> projection;  ///< H -> G
  ElementSet kernel;
  std::optional<CocycleProvenance> provenance;

  /// Some preimage of each base element (the smallest one).
  std::vector<Elem> section() const {
    std::vector<Elem> s(base.order(), static_cast<Elem>(-1));
    for (Elem h = static_cast<Elem>(total.order()); h-- > 0;) s[projection[h]] = h;
    return s;
  }
};

/// Checks every CentralExtension invariant; throws BadExtension.
inline void validate_extension(const CentralExtension& e) {
  const Group& h = e.total;
  const Group& g = e.base;
  require(e.projection.size() == h.order(), Errc::BadExtension, "projection must map every element of the total group");
  std::vector<char> hit(g.order(), 0);
  for (auto x : e.projection) {
    require(x < g.order(), Errc::BadExtension, "projection value out of range");
    hit[x] = 1;
  }
  require(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }), Errc::BadExtension,
          "projection is not surjective");
  for (Elem a = 0; a < h.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b)
      require(e.projection[h.mul(a, b)] == g.mul(e.projection[a], e.projection[b]), Errc::BadExtension,
              "projection is not a homomorphism");
  ElementSet kernel;
  for (Elem a = 0; a < h.order(); ++a)
    if (e.projection[a] == 0) kernel.push_back(a);
  require(kernel == e.kernel, Errc::BadExtension, "kernel is not the preimage of the identity");
  for (auto z : kernel)
    for (Elem a = 0; a < h.order(); ++a)
      require(h.commute(z, a), Errc::BadExtension, "kernel is not central");
  require(h.order() == g.order() * kernel.size(), Errc::BadExtension, "|H| != |G| |Z|");
}

inline CentralExtension make_extension(Group total, Group base, std::vector<Elem> projection,
                                       std::optional<CocycleProvenance> provenance = std::nullopt,
                                       const Limits& limits = default_limits()) {
  require(total.order() <= limits.extension, Errc::CapExceeded,
          "extension of order " + std::to_string(total.order()) + " exceeds the cap of " +
              std::to_string(limits.extension));
  ElementSet kernel;
  for (Elem a = 0; a < projection.size(); ++a)
    if (projection[a] == 0) kernel.push_back(a);
  CentralExtension e{std::move(total), std::move(base), std::move(projection), std::move(kernel),
                     std::move(provenance)};
  validate_extension(e);
  return e;
}

/// H/Z -> G for a central subgroup Z of H; the base is the quotient group.
inline CentralExtension central_quotient_extension(const Group& h, const ElementSet& z, std::string base_label = {},
                                                   const Limits& limits = default_limits()) {
  const auto zh = center(h);
  for (auto x : z)
    require(std::binary_search(zh.begin(), zh.end(), x), Errc::BadExtension, "subgroup is not central");
  auto q = quotient(h, z, base_label.empty() ? h.label() + "/Z" : std::move(base_label));
  return make_extension(h, std::move(q.group), std::move(q.projection), std::nullopt, limits);
}

/// H_f on pairs (g, a) with (g, a)(h, b) = (gh, a + b + f(g, h)); element
/// (g, a) sits at index g * p^k + a.
inline CentralExtension extension_from_cocycle(const Group& g, const Cochain2& f,
                                               const Limits& limits = default_limits()) {
  require(f.n == g.order(), Errc::NotACocycle, "cochain is for a different group order");
  const std::size_t n = g.order();
  const std::size_t q = f.ring.modulus();
  require(n * q <= limits.extension, Errc::CapExceeded,
          "extension of order " + std::to_string(n * q) + " exceeds the cap of " + std::to_string(limits.extension));
  require(is_cocycle(g, f), Errc::NotACocycle, "cochain fails the cocycle identity");
  const std::size_t m = n * q;
  std::vector<std::string> names(m);
  std::vector<Elem> table(m * m);
  std::vector<Elem> projection(m);
  for (Elem x = 0; x < n; ++x)
    for (Residue a = 0; a < q; ++a) {
      const std::size_t i = x * q + a;
      names[i] = "(" + g.name(x) + "," + std::to_string(a) + ")";
      projection[i] = x;
      for (Elem y = 0; y < n; ++y)
        for (Residue b = 0; b < q; ++b)
          table[i * m + y * q + b] =
              static_cast<Elem>(g.mul(x, y) * q + f.ring.add(f.ring.add(a, b), f.at(x, y)));
    }
  // the cocycle identity is exactly associativity of this law, so the
  // O(m^3) scan is only repeated while it is cheap
  const Trust trust = m <= limits.associativity ? Trust::Verify : Trust::Trusted;
  auto build = [&]() {
    try {
      return Group::from_table(g.label() + "~" + std::to_string(q), std::move(names), std::move(table), trust,
                               limits.associativity);
    } catch (const Error& e) {
      fail(Errc::NotACocycle, std::string("extension table is not a group: ") + e.what());
    }
  };
  return make_extension(build(), g, std::move(projection),
                        CocycleProvenance{f.ring.prime(), f.ring.exponent(), f.values}, limits);
}

/// Graph on G joining x != y whose preimages commute in H.
inline SimpleGraph relative_commuting_graph(const CentralExtension& e) {
  validate_extension(e);
  const auto s = e.section();
  auto out = SimpleGraph::empty_on(e.base, GraphKind::RelCom);
  for (Elem x = 0; x < e.base.order(); ++x)
    for (Elem y = x + 1; y < e.base.order(); ++y)
      if (e.total.commute(s[x], s[y])) out.add_edge(x, y);
  return out;
}

/// Kernel inside Z(H) and the derived subgroup H'.
inline bool is_stem(const CentralExtension& e) {
  const auto derived = derived_subgroup(e.total);
  return std::all_of(e.kernel.begin(), e.kernel.end(),
                     [&](Elem z) { return std::binary_search(derived.begin(), derived.end(), z); });
}

/// Commutation preserving: commuting images always have commuting preimages.
inline bool is_cp(const CentralExtension& e) {
  const Group& h = e.total;
  for (Elem a = 0; a < h.order(); ++a)
    for (Elem b = a + 1; b < h.order(); ++b)
      if (e.base.commute(e.projection[a], e.projection[b]) && !h.commute(a, b)) return false;
  return true;
}

/// H1 x_G H2 = {(h1, h2) : pi1(h1) = pi2(h2)}, projecting to G with
/// kernel Z1 x Z2.
inline CentralExtension pullback_extension(const CentralExtension& e1, const CentralExtension& e2,
                                           const Limits& limits = default_limits()) {
  require(e1.base.same_table(e2.base), Errc::BaseMismatch, "extensions have different base groups");
  const std::size_t size = e1.base.order() * e1.kernel.size() * e2.kernel.size();
  require(size <= limits.extension, Errc::CapExceeded,
          "pullback of order " + std::to_string(size) + " exceeds the cap of " + std::to_string(limits.extension));
  const std::size_t n2 = e2.total.order();
  constexpr Elem none = static_cast<Elem>(-1);
  std::vector<Elem> index(e1.total.order() * n2, none);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < e1.total.order(); ++a)
    for (Elem b = 0; b < n2; ++b)
      if (e1.projection[a] == e2.projection[b]) {
        index[a * n2 + b] = static_cast<Elem>(pairs.size());
        pairs.emplace_back(a, b);
      }
  const std::size_t m = pairs.size();
  std::vector<std::string> names(m);
  std::vector<Elem> table(m * m);
  std::vector<Elem> projection(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = pairs[i];
    names[i] = "(" + e1.total.name(a) + "," + e2.total.name(b) + ")";
    projection[i] = e1.projection[a];
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = index[e1.total.mul(a, pairs[j].first) * n2 + e2.total.mul(b, pairs[j].second)];
  }
  auto k = Group::from_table("(" + e1.total.label() + "," + e2.total.label() + ")", std::move(names),
                             std::move(table), Trust::Trusted);
  return make_extension(std::move(k), e1.base, std::move(projection), std::nullopt, limits);
}

/// H/Z1 -> G for a subgroup Z1 of the kernel.
inline CentralExtension quotient_extension(const CentralExtension& e, const ElementSet& z1,
                                           const Limits& limits = default_limits()) {
  for (auto z : z1)
    require(std::binary_search(e.kernel.begin(), e.kernel.end(), z), Errc::BadExtension,
            "subgroup is not inside the kernel");
  auto q = quotient(e.total, z1, e.total.label() + "/Z1");
  std::vector<Elem> projection(q.group.order());
  for (Elem c = 0; c < q.group.order(); ++c) projection[c] = e.projection[q.section[c]];
  return make_extension(std::move(q.group), e.base, std::move(projection), std::nullopt, limits);
}

/// Non-negative fraction in lowest terms.
class Rational {
 public:
  Rational(std::uint64_t num = 0, std::uint64_t den = 1) {
    require(den != 0, Errc::BadParameter, "zero denominator");
    const auto d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
  }
  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const noexcept {
    return static_cast<unsigned __int128>(num_) * o.den_ <=> static_cast<unsigned __int128>(o.num_) * den_;
  }

  static Rational parse(const std::string& s) {
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(std::stoull(s), 1);
      return Rational(std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      fail(Errc::BadParameter, "not a fraction: " + s);
    }
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// kappa(G) = (number of conjugacy classes) / |G|.
inline Rational commuting_probability(const Group& g) { return Rational(conjugacy_classes(g).size(), g.order()); }

/// |{(x, y) : xy = yx}| / |G|^2, loops included.
inline Rational commuting_pair_density(const Group& g) {
  std::uint64_t count = 0;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) count += g.commute(x, y);
  return Rational(count, static_cast<std::uint64_t>(g.order()) * g.order());
}

// ---------------------------------------------------------------- isoclinism

/// phi: H1/Z(H1) -> H2/Z(H2) on quotient indices, psi: H1' -> H2' on element
/// indices of H1 (unmapped outside H1'), with
///   psi([a, b]) = [a', b'] whenever a' Z(H2) = phi(a Z(H1)), b' likewise.
struct Isoclinism {
  Quotient quotient1;
  Quotient quotient2;
  ElementMap phi;
  ElementMap psi;
};

/// Exhaustive check of a claimed isoclinism.
inline bool verify_isoclinism(const Group& h1, const Group& h2, const Isoclinism& w) {
  const auto& q1 = w.quotient1;
  const auto& q2 = w.quotient2;
  if (w.phi.size() != q1.group.order() || q1.group.order() != q2.group.order()) return false;
  if (!is_homomorphism(q1.group, q2.group, w.phi)) return false;
  {
    auto img = w.phi;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  }
  const auto d1 = derived_subgroup(h1);
  const auto d2 = derived_subgroup(h2);
  if (w.psi.size() != h1.order() || d1.size() != d2.size()) return false;
  ElementSet image;
  for (auto x : d1) {
    if (w.psi[x] >= h2.order()) return false;
    image.push_back(w.psi[x]);
  }
  std::sort(image.begin(), image.end());
  if (image != d2) return false;
  for (auto a : d1)
    for (auto b : d1)
      if (w.psi[h1.mul(a, b)] != h2.mul(w.psi[a], w.psi[b])) return false;
  for (Elem x = 0; x < q1.group.order(); ++x)
    for (Elem y = 0; y < q1.group.order(); ++y) {
      const Elem c1 = h1.commutator(q1.section[x], q1.section[y]);
      const Elem c2 = h2.commutator(q2.section[w.phi[x]], q2.section[w.phi[y]]);
      if (w.psi[c1] != c2) return false;
    }
  return true;
}

/// Searches isomorphisms of the central quotients; for each, psi is forced on
/// commutators and extended multiplicatively over the derived subgroup.
inline std::optional<Isoclinism> isoclinic(const Group& h1, const Group& h2, const Limits& limits = default_limits()) {
  const auto z1 = center(h1), z2 = center(h2);
  const auto d1 = derived_subgroup(h1), d2 = derived_subgroup(h2);
  const std::size_t cap = limits.isoclinism;
  require(h1.order() / z1.size() <= cap && h2.order() / z2.size() <= cap && d1.size() <= cap && d2.size() <= cap,
          Errc::CapExceeded, "isoclinism search refused above central quotient / derived order " + std::to_string(cap));
  if (h1.order() / z1.size() != h2.order() / z2.size() || d1.size() != d2.size()) return std::nullopt;

  auto orders_of = [](const Group& g, const ElementSet& s) {
    std::vector<std::uint64_t> o;
    for (auto x : s) o.push_back(element_order(g, x));
    std::sort(o.begin(), o.end());
    return o;
  };
  if (orders_of(h1, d1) != orders_of(h2, d2)) return std::nullopt;

  Isoclinism w{quotient(h1, z1, h1.label() + "/Z"), quotient(h2, z2, h2.label() + "/Z"), {}, {}};
  const auto& q1 = w.quotient1;
  const auto& q2 = w.quotient2;
  {
    auto a = detail::order_profile(q1.group), b = detail::order_profile(q2.group);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t m = q1.group.order();
  std::optional<Isoclinism> found;
  for_each_isomorphism(q1.group, q2.group, [&](const ElementMap& phi) {
    ElementMap psi(h1.order(), detail::kUnmapped);
    std::vector<Elem> mapped;
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y) {
        const Elem c1 = h1.commutator(q1.section[x], q1.section[y]);
        const Elem c2 = h2.commutator(q2.section[phi[x]], q2.section[phi[y]]);
        if (psi[c1] == detail::kUnmapped) {
          psi[c1] = c2;
          mapped.push_back(c1);
        } else if (psi[c1] != c2) {
          return true;
        }
      }
    // close under products; commutators generate H1'
    const std::vector<Elem> gens = mapped;
    for (std::size_t i = 0; i < mapped.size(); ++i)
      for (auto g : gens) {
        const Elem prod = h1.mul(mapped[i], g);
        const Elem image = h2.mul(psi[mapped[i]], psi[g]);
        if (psi[prod] == detail::kUnmapped) {
          psi[prod] = image;
          mapped.push_back(prod);
        } else if (psi[prod] != image) {
          return true;
        }
      }
    Isoclinism candidate{q1, q2, phi, std::move(psi)};
    if (!verify_isoclinism(h1, h2, candidate)) return true;
    found = std::move(candidate);
    return false;
  });
  return found;
}

// -------------------------------------------------------------------- oracle

enum class OracleMode {
  AllCochains,  ///< every normalized cochain enumerated and filtered by the cocycle identity
  FullModule,   ///< every element of the solved cocycle module enumerated
  Sampled,      ///< module generators plus pseudo-random module elements
};

inline std::string to_string(OracleMode m) {
  switch (m) {
    case OracleMode::AllCochains: return "all-cochains";
    case OracleMode::FullModule: return "full-module";
    case OracleMode::Sampled: return "sampled";
  }
  return "sampled";
}

struct OraclePrime {
  std::uint32_t p = 0;
  unsigned k = 0;
  OracleMode mode = OracleMode::Sampled;
  std::uint64_t extensions = 0;  ///< extensions whose commutation was tested
};

struct OracleReport {
  SimpleGraph graph;
  std::vector<OraclePrime> primes;
};

inline constexpr std::uint64_t kOracleSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr std::uint64_t kOracleEnumerationLimit = std::uint64_t{1} << 20;

namespace detail {

/// Removes from `graph` every edge {x, y} whose lifts (x, 0), (y, 0) do not
/// commute under the group law of H_f. Identity pairs are never touched.
inline void cut_by_extension_law(const Group& g, const ResidueRing& ring, const Row& f,
                                 const std::vector<std::pair<Elem, Elem>>& pairs, std::vector<char>& alive) {
  const std::size_t n = g.order();
  auto at = [&](Elem x, Elem y) -> Residue { return (x == 0 || y == 0) ? 0 : f[pair_index(n, x, y)]; };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!alive[i]) continue;
    const auto [x, y] = pairs[i];
    // (x,0)(y,0) = (xy, f(x,y)) and (y,0)(x,0) = (yx, f(y,x))
    const Elem xy = g.mul(x, y), yx = g.mul(y, x);
    if (xy != yx || ring.reduce(at(x, y)) != ring.reduce(at(y, x))) alive[i] = 0;
  }
}

/// Odometer over c_i in [0, range_i), keeping current = sum c_i rows_i.
template <class Visit>
void enumerate_combinations(const ResidueRing& ring, const std::vector<Row>& rows,
                            const std::vector<Residue>& range, std::size_t width, Visit&& visit) {
  Row current(width, 0);
  std::vector<Residue> digit(rows.size(), 0);
  while (true) {
    visit(current);
    std::size_t i = 0;
    for (; i < rows.size(); ++i) {
      if (++digit[i] < range[i]) {
        axpy(ring, current, rows[i], 1, 0);
        break;
      }
      axpy(ring, current, rows[i], ring.neg(ring.reduce(range[i] - 1)), 0);
      digit[i] = 0;
    }
    if (i == rows.size()) return;
  }
}

}  // namespace detail

/// Intersection of relative commuting graphs of explicit central extensions
/// with cyclic kernel Z/p^k, p^k the full p-part of |G|. Per prime, the
/// extensions come from (in order of preference) all normalized cochains,
/// all elements of the cocycle module, or the module generators plus
/// `budget` seeded random module elements. Generators and samples are built
/// as validated groups.
inline OracleReport dcom_oracle_report(const Group& g, std::size_t budget = 256,
                                       const CohomologyOptions& options = {}) {
  const Limits& limits = options.limits;
  require(g.order() <= limits.oracle, Errc::CapExceeded,
          "oracle refused for order " + std::to_string(g.order()) + " (cap " + std::to_string(limits.oracle) + ")");
  const std::size_t n = g.order();
  OracleReport report{commuting_graph(g), {}};
  report.graph.set_kind(GraphKind::DCom);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (g.commute(x, y)) pairs.emplace_back(x, y);
  std::vector<char> alive(pairs.size(), 1);
  const std::size_t width = n > 1 ? (n - 1) * (n - 1) : 0;

  for (auto [p, k] : factorize(n)) {
    const ResidueRing ring(p, k);
    OraclePrime info{p, k, OracleMode::Sampled, 0};
    const double cochain_log2 = static_cast<double>(width) * std::log2(static_cast<double>(ring.modulus()));
    if (cochain_log2 <= 20.0) {
      info.mode = OracleMode::AllCochains;
      std::vector<Row> unit(width, Row(width, 0));
      for (std::size_t i = 0; i < width; ++i) unit[i][i] = 1;
      std::vector<Residue> range(width, ring.modulus());
      detail::enumerate_combinations(ring, unit, range, width, [&](const Row& f) {
        if (!is_cocycle(g, ring, f)) return;
        ++info.extensions;
        detail::cut_by_extension_law(g, ring, f, pairs, alive);
      });
      report.primes.push_back(info);
      continue;
    }
    const auto basis = cocycle_basis(g, p, k, options);
    const auto module = howell_form(ring, width, basis.z2);
    std::vector<Residue> range(module.rank());
    for (std::size_t i = 0; i < module.rank(); ++i) range[i] = ring.modulus() / ring.power(module.leading_valuation(i));
    const double module_log2 = static_cast<double>(module.log_size()) * std::log2(static_cast<double>(p));
    if (module_log2 <= 20.0) {
      info.mode = OracleMode::FullModule;
      detail::enumerate_combinations(ring, module.rows(), range, width, [&](const Row& f) {
        ++info.extensions;
        detail::cut_by_extension_law(g, ring, f, pairs, alive);
      });
      report.primes.push_back(info);
      continue;
    }
    std::vector<Row> samples = module.rows();
    std::mt19937_64 rng(kOracleSeed ^ (static_cast<std::uint64_t>(p) << 32) ^ k);
    for (std::size_t s = 0; s < budget; ++s) {
      Row f(width, 0);
      for (std::size_t i = 0; i < module.rank(); ++i) {
        const Residue c = static_cast<Residue>(rng() % range[i]);
        if (c) detail::axpy(ring, f, module.rows()[i], c, 0);
      }
      samples.push_back(std::move(f));
    }
    std::vector<SimpleGraph> graphs(samples.size(), SimpleGraph(g.names()));
    parallel_for(samples.size(), limits.threads, [&](std::size_t i) {
      graphs[i] = relative_commuting_graph(extension_from_cocycle(g, Cochain2(ring, n, samples[i]), limits));
    });
    for (const auto& rel : graphs) {
      ++info.extensions;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!rel.adjacent(pairs[i].first, pairs[i].second)) alive[i] = 0;
    }
    report.primes.push_back(info);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!alive[i]) report.graph.remove_edge(pairs[i].first, pairs[i].second);
  return report;
}

inline SimpleGraph dcom_oracle(const Group& g, std::size_t budget = 256, const CohomologyOptions& options = {}) {
  return dcom_oracle_report(g, budget, options).graph;
}

// ------------------------------------------------------------- fixture files

/// Extension file: {"total": T, "base": T, "projection": [indices]} where each
/// T is a table object or a path to a table file (relative to the extension
/// file).
inline CentralExtension load_extension_file(const std::filesystem::path& path,
                                            const Limits& limits = default_limits()) {
  const auto j = read_json_file(path);
  auto table = [&](const char* key) {
    require(j.is_object() && j.contains(key), Errc::BadExtension, std::string("extension file lacks \"") + key + "\"");
    const auto& v = j.at(key);
    if (v.is_string()) return load_table_file(path.parent_path() / v.get<std::string>(), limits);
    return table_from_json(v, limits);
  };
  Group total = table("total");
  Group base = table("base");
  std::vector<Elem> projection;
  try {
    for (const auto& x : j.at("projection")) {
      const auto v = x.get<long long>();
      require(v >= 0, Errc::BadExtension, "negative projection index");
      projection.push_back(static_cast<Elem>(v));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::BadExtension, std::string("malformed projection: ") + e.what());
  }
  return make_extension(std::move(total), std::move(base), std::move(projection), std::nullopt, limits);
}

/// Writes the extension with the given table-file references (as stored).
inline void save_extension_file(const CentralExtension& e, const std::filesystem::path& path,
                                const std::string& total_ref, const std::string& base_ref) {
  nlohmann::ordered_json j;
  j["total"] = total_ref;
  j["base"] = base_ref;
  j["projection"] = e.projection;
  write_text_file(path, j.dump() + "\n");
}

}  // namespace dcg
