#pragma once

// Finite groups given by validated Cayley tables, with the structural
// queries the rest of the library needs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dcg/abelian.hpp"
#include "dcg/error.hpp"
#include "dcg/limits.hpp"
#include "dcg/residue.hpp"

namespace dcg {

using Elem = std::uint32_t;
/// Sorted list of element indices.
using ElementSet = std::vector<Elem>;

enum class Trust {
  Verify,   ///< full axiom check, associativity capped by Limits::associativity
  Trusted,  ///< internal constructors whose associativity is known by construction
};

/// A finite group as a Cayley table. Element 0 is the identity and
/// mul(i, j) is the index of element_i * element_j. Immutable.
class Group {
 public:
  /// Validates the table and relabels the identity to index 0 (the other
  /// elements keep their relative order).
  static Group from_table(std::string label, std::vector<std::string> names, std::vector<Elem> table,
                          Trust trust = Trust::Verify, std::size_t associativity_cap = 512) {
    const std::size_t n = names.size();
    require(n >= 1, Errc::NotAGroup, "a group needs at least one element");
    require(table.size() == n * n, Errc::NotAGroup, "table is not n x n");
    for (auto v : table) require(v < n, Errc::NotAGroup, "table entry out of range");
    {
      std::set<std::string> distinct(names.begin(), names.end());
      require(distinct.size() == n, Errc::NotAGroup, "element names must be distinct");
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        require(!seen[table[i * n + j]], Errc::NotAGroup, "row " + std::to_string(i) + " is not a permutation");
        seen[table[i * n + j]] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        require(!seen[table[j * n + i]], Errc::NotAGroup, "column " + std::to_string(i) + " is not a permutation");
        seen[table[j * n + i]] = 1;
      }
    }
    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = table[i * n + j] == j && table[j * n + i] == j;
      if (ok) e = i;
    }
    require(e < n, Errc::NotAGroup, "no two-sided identity");

    if (e != 0) {
      // new index of old element: e -> 0, others shift to keep their order
      std::vector<Elem> to_new(n);
      std::vector<Elem> to_old(n);
      to_old[0] = static_cast<Elem>(e);
      to_new[e] = 0;
      Elem next = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (i != e) {
          to_new[i] = next;
          to_old[next++] = static_cast<Elem>(i);
        }
      std::vector<Elem> relabeled(n * n);
      std::vector<std::string> new_names(n);
      for (std::size_t i = 0; i < n; ++i) {
        new_names[i] = names[to_old[i]];
        for (std::size_t j = 0; j < n; ++j)
          relabeled[i * n + j] = to_new[table[to_old[i] * n + to_old[j]]];
      }
      table = std::move(relabeled);
      names = std::move(new_names);
    }

    Group g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    g.inverse_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g.table_[i * n + j] == 0) g.inverse_[i] = static_cast<Elem>(j);
    for (std::size_t i = 0; i < n; ++i)
      require(g.mul(g.inverse_[i], static_cast<Elem>(i)) == 0, Errc::NotAGroup, "element without two-sided inverse");

    if (trust == Trust::Verify) {
      require(n <= associativity_cap, Errc::CapExceeded,
              "associativity check refused for order " + std::to_string(n) + " (cap " +
                  std::to_string(associativity_cap) + ")");
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Elem ab = g.table_[a * n + b];
          const Elem* row_b = &g.table_[b * n];
          const Elem* row_ab = &g.table_[std::size_t(ab) * n];
          const Elem* row_a = &g.table_[a * n];
          for (std::size_t c = 0; c < n; ++c)
            if (row_ab[c] != row_a[row_b[c]])
              fail(Errc::NotAGroup, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                        "," + std::to_string(c) + ")");
        }
    }
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::span<const Elem> table() const noexcept { return table_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// [a, b] = a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// b^-1 a b
  Elem conjugate(Elem a, Elem b) const noexcept { return mul(mul(inv(b), a), b); }
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }
  Elem power(Elem a, std::uint64_t e) const noexcept {
    Elem r = 0;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  Group relabeled(std::string label) const {
    Group g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Same multiplication table (names and labels ignored).
  bool same_table(const Group& o) const noexcept { return n_ == o.n_ && table_ == o.table_; }

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
};

/// Checked construction from untrusted data (e.g. a JSON table file).
inline Group group_from_table(std::size_t order, std::vector<std::string> names,
                              const std::vector<std::vector<long long>>& table, std::string label = "G",
                              const Limits& limits = default_limits()) {
  require(order >= 1, Errc::NotAGroup, "order must be positive");
  require(names.size() == order, Errc::NotAGroup, "names list length differs from order");
  require(table.size() == order, Errc::NotAGroup, "table has wrong number of rows");
  std::vector<Elem> flat;
  flat.reserve(order * order);
  for (const auto& row : table) {
    require(row.size() == order, Errc::NotAGroup, "table row has wrong length");
    for (auto v : row) {
      require(v >= 0 && static_cast<std::size_t>(v) < order, Errc::NotAGroup, "table entry out of range");
      flat.push_back(static_cast<Elem>(v));
    }
  }
  return Group::from_table(std::move(label), std::move(names), std::move(flat), Trust::Verify,
                           limits.associativity);
}

inline void check_element(const Group& g, Elem x) {
  require(x < g.order(), Errc::OutOfRange, "element index " + std::to_string(x) + " out of range");
}

inline std::uint64_t element_order(const Group& g, Elem x) {
  check_element(g, x);
  std::uint64_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline bool is_abelian(const Group& g) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

/// Smallest subgroup containing `gens`.
inline ElementSet subgroup_generated(const Group& g, std::span<const Elem> gens) {
  for (auto x : gens) check_element(g, x);
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline ElementSet center(const Group& g) {
  ElementSet z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    if (central) z.push_back(a);
  }
  return z;
}

inline ElementSet derived_subgroup(const Group& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> commutators;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_generated(g, commutators);
}

/// Conjugacy classes, each sorted, ordered by smallest member.
inline std::vector<ElementSet> conjugacy_classes(const Group& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> classes;
  for (Elem a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    ElementSet cls;
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.conjugate(a, b);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.empty() || s.front() != 0) return false;
  std::vector<char> in(g.order(), 0);
  for (auto x : s) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  for (auto a : s) {
    if (!in[g.inv(a)]) return false;
    for (auto b : s)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

inline bool is_normal(const Group& g, const ElementSet& s) {
  std::vector<char> in(g.order(), 0);
  for (auto x : s) in[x] = 1;
  for (auto a : s)
    for (Elem b = 0; b < g.order(); ++b)
      if (!in[g.conjugate(a, b)]) return false;
  return true;
}

/// G/N together with the projection and a section (smallest coset member).
struct Quotient {
  Group group;
  std::vector<Elem> projection;
  std::vector<Elem> section;
};

/// Quotient by a normal subgroup. Cosets are numbered by smallest member and
/// named after it.
inline Quotient quotient(const Group& g, const ElementSet& normal, std::string label = {}) {
  require(is_subgroup(g, normal) && is_normal(g, normal), Errc::BadParameter, "quotient needs a normal subgroup");
  const std::size_t n = g.order();
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> proj(n, unset);
  std::vector<Elem> section;
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] != unset) continue;
    const Elem idx = static_cast<Elem>(section.size());
    section.push_back(a);
    for (auto z : normal) proj[g.mul(a, z)] = idx;
  }
  const std::size_t m = section.size();
  std::vector<Elem> table(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = g.name(section[i]);
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = proj[g.mul(section[i], section[j])];
  }
  if (label.empty()) label = g.label() + "/N";
  auto q = Group::from_table(std::move(label), std::move(names), std::move(table), Trust::Trusted);
  return {std::move(q), std::move(proj), std::move(section)};
}

/// Invariant factors of an abelian group, read off from the number of
/// elements of each prime-power order.
inline AbelianInvariants abelian_invariants(const Group& a) {
  require(is_abelian(a), Errc::BadParameter, "abelian_invariants needs an abelian group");
  std::map<std::uint32_t, std::vector<unsigned>> parts;
  std::vector<std::uint64_t> orders(a.order());
  for (Elem x = 0; x < a.order(); ++x) orders[x] = element_order(a, x);
  for (auto [p, mult] : factorize(a.order())) {
    // s[j] = log_p #{x : x^(p^j) = 1}
    std::vector<unsigned> s{0};
    std::uint64_t pj = 1;
    for (unsigned j = 1; s.back() < mult; ++j) {
      pj *= p;
      std::uint64_t count = 0;
      for (auto o : orders)
        if (pj % o == 0) ++count;
      unsigned lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      s.push_back(lg);
    }
    // number of cyclic summands of order >= p^j is s[j] - s[j-1]
    std::vector<unsigned> exps;
    for (std::size_t j = 1; j < s.size(); ++j) {
      const unsigned at_least_j = s[j] - s[j - 1];
      const unsigned at_least_next = (j + 1 < s.size()) ? s[j + 1] - s[j] : 0;
      for (unsigned c = at_least_next; c < at_least_j; ++c) exps.push_back(static_cast<unsigned>(j));
    }
    parts[p] = exps;
  }
  return AbelianInvariants::from_prime_powers(parts);
}

/// Invariant factors of G/G'.
inline AbelianInvariants abelianization(const Group& g) {
  return abelian_invariants(quotient(g, derived_subgroup(g)).group);
}

/// A small generating set: elements of large order first, each kept only if
/// it enlarges the subgroup generated so far.
inline std::vector<Elem> generating_set(const Group& g) {
  std::vector<Elem> candidates(g.order());
  std::iota(candidates.begin(), candidates.end(), Elem{0});
  std::vector<std::uint64_t> ord(g.order());
  for (Elem x = 0; x < g.order(); ++x) ord[x] = element_order(g, x);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (auto c : candidates) {
    if (covered == g.order()) break;
    if (in[c]) continue;
    gens.push_back(c);
    auto h = subgroup_generated(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (auto x : h) in[x] = 1;
    covered = h.size();
  }
  return gens;
}

}  // namespace dcg
