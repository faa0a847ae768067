#pragma once

// Built-in group families and the direct product.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dcg/error.hpp"
#include "dcg/fixtures/sg64_182.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"

namespace dcg {

enum class Family { Cyclic, Dihedral, Quaternion, Semidihedral, Symmetric, Alternating };

inline std::string family_letter(Family f) {
  switch (f) {
    case Family::Cyclic: return "C";
    case Family::Dihedral: return "D";
    case Family::Quaternion: return "Q";
    case Family::Semidihedral: return "SD";
    case Family::Symmetric: return "S";
    case Family::Alternating: return "A";
  }
  return "?";
}

inline bool is_power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

inline std::uint64_t factorial_capped(std::uint64_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

/// Throws BadParameter when `parameter` is outside the family's range.
inline void check_family_parameter(Family kind, std::uint64_t n) {
  const std::string id = family_letter(kind) + std::to_string(n);
  switch (kind) {
    case Family::Cyclic:
      require(n >= 1, Errc::BadParameter, id + ": cyclic order must be at least 1");
      break;
    case Family::Dihedral:
      require(n >= 4 && n % 2 == 0, Errc::BadParameter, id + ": dihedral order must be even and at least 4");
      break;
    case Family::Quaternion:
      require(n >= 8 && is_power_of_two(n), Errc::BadParameter,
              id + ": generalized quaternion order must be 2^m >= 8");
      break;
    case Family::Semidihedral:
      require(n >= 16 && is_power_of_two(n), Errc::BadParameter, id + ": semidihedral order must be 2^m >= 16");
      break;
    case Family::Symmetric:
    case Family::Alternating:
      require(n >= 1, Errc::BadParameter, id + ": degree must be at least 1");
      break;
  }
}

/// Order of the family member, or cap + 1 when it exceeds `cap`.
inline std::uint64_t family_order(Family kind, std::uint64_t n, std::uint64_t cap) {
  switch (kind) {
    case Family::Symmetric: return factorial_capped(n, cap);
    case Family::Alternating: {
      const auto f = factorial_capped(n, 2 * cap + 1);
      return f > 2 * cap ? cap + 1 : std::max<std::uint64_t>(1, f / 2);
    }
    default: return n;
  }
}

namespace detail {

inline std::string power_name(const std::string& letter, std::uint64_t i) {
  if (i == 0) return "";
  return i == 1 ? letter : letter + "^" + std::to_string(i);
}

/// Groups <r, s | r^N, s^2 = r^c, r^s = r^t> with elements s^j r^i at index j*N + i.
inline Group metacyclic(std::string label, std::uint64_t big, std::uint64_t twist, std::uint64_t square,
                        const std::string& rot, const std::string& ref) {
  const std::uint64_t n = 2 * big;
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  auto idx = [&](std::uint64_t j, std::uint64_t i) { return static_cast<Elem>(j * big + (i % big)); };
  // r^(i*t^m)
  auto twisted = [&](std::uint64_t i) { return (i * twist) % big; };
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < big; ++i) {
      std::string nm = (j ? ref : "") + power_name(rot, i);
      names[j * big + i] = nm.empty() ? "1" : nm;
      for (std::uint64_t l = 0; l < 2; ++l)
        for (std::uint64_t m = 0; m < big; ++m) {
          Elem prod;
          if (l == 0) {
            prod = idx(j, i + m);
          } else if (j == 0) {
            prod = idx(1, twisted(i) + m);
          } else {
            prod = idx(0, square + twisted(i) + m);
          }
          table[(j * big + i) * n + l * big + m] = prod;
        }
    }
  return Group::from_table(std::move(label), std::move(names), std::move(table), Trust::Verify, n);
}

inline std::string cycle_name(const std::vector<int>& perm) {
  std::string s;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

inline bool is_even(const std::vector<int>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

/// Lexicographic rank of a permutation of 0..n-1.
inline std::size_t perm_rank(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

/// Sn or An in lexicographic order; the product applies the left factor first.
inline Group permutation_group(std::string label, int degree, bool even_only) {
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t total = 1;
  for (int i = 2; i <= degree; ++i) total *= static_cast<std::size_t>(i);
  std::vector<Elem> rank_to_index(total, 0);
  for (std::size_t i = 0; i < perms.size(); ++i) rank_to_index[perm_rank(perms[i])] = static_cast<Elem>(i);
  const std::size_t n = perms.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  std::vector<int> prod(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = cycle_name(perms[i]);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = perms[j][static_cast<std::size_t>(perms[i][x])];
      table[i * n + j] = rank_to_index[perm_rank(prod)];
    }
  }
  return Group::from_table(std::move(label), std::move(names), std::move(table), Trust::Trusted);
}

}  // namespace detail

inline Group cyclic(std::uint64_t n) {
  check_family_parameter(Family::Cyclic, n);
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : detail::power_name("a", i);
    for (std::uint64_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return Group::from_table("C" + std::to_string(n), std::move(names), std::move(table), Trust::Trusted);
}

/// Dihedral group of order n.
inline Group dihedral(std::uint64_t n) {
  check_family_parameter(Family::Dihedral, n);
  const std::uint64_t big = n / 2;
  return detail::metacyclic("D" + std::to_string(n), big, big - 1, 0, "r", "s");
}

/// Generalized quaternion group of order n.
inline Group quaternion(std::uint64_t n) {
  check_family_parameter(Family::Quaternion, n);
  const std::uint64_t big = n / 2;
  return detail::metacyclic("Q" + std::to_string(n), big, big - 1, big / 2, "a", "b");
}

/// Semidihedral group of order n: r^s = r^(n/4 - 1).
inline Group semidihedral(std::uint64_t n) {
  check_family_parameter(Family::Semidihedral, n);
  const std::uint64_t big = n / 2;
  return detail::metacyclic("SD" + std::to_string(n), big, big / 2 - 1, 0, "r", "s");
}

inline Group make_family(Family kind, std::uint64_t n, const Limits& limits = default_limits()) {
  check_family_parameter(kind, n);
  const std::uint64_t order = family_order(kind, n, limits.realize);
  require(order <= limits.realize, Errc::CapExceeded,
          family_letter(kind) + std::to_string(n) + " exceeds the realize cap of " + std::to_string(limits.realize));
  switch (kind) {
    case Family::Cyclic: return cyclic(n);
    case Family::Dihedral: return dihedral(n);
    case Family::Quaternion: return quaternion(n);
    case Family::Semidihedral: return semidihedral(n);
    case Family::Symmetric:
      return detail::permutation_group("S" + std::to_string(n), static_cast<int>(n), false);
    case Family::Alternating:
      return detail::permutation_group("A" + std::to_string(n), static_cast<int>(n), true);
  }
  fail(Errc::BadParameter, "unknown family");
}

/// G x H with elements (g, h) at index g*|H| + h.
inline Group direct_product(const Group& g, const Group& h, const Limits& limits = default_limits()) {
  const std::size_t n = g.order() * h.order();
  require(n <= limits.realize, Errc::CapExceeded,
          "product order " + std::to_string(n) + " exceeds the realize cap of " + std::to_string(limits.realize));
  const std::size_t m = h.order();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < m; ++b) {
      const std::size_t i = a * m + b;
      names[i] = "(" + g.name(a) + "," + h.name(b) + ")";
      for (Elem c = 0; c < g.order(); ++c)
        for (Elem d = 0; d < m; ++d) table[i * n + c * m + d] = static_cast<Elem>(g.mul(a, c) * m + h.mul(b, d));
    }
  return Group::from_table(g.label() + "x" + h.label(), std::move(names), std::move(table), Trust::Trusted);
}

/// The order-64 split extension C8 : Q8 shipped as a Cayley-table fixture
/// (see tools/derive_sg64_182.cpp for how the table was selected).
inline Group sg64_182() {
  constexpr std::size_t n = fixtures::sg64_182_order;
  std::vector<Elem> table(fixtures::sg64_182_table.begin(), fixtures::sg64_182_table.end());
  std::vector<std::string> names(fixtures::sg64_182_names.begin(), fixtures::sg64_182_names.end());
  static_assert(fixtures::sg64_182_table.size() == n * n);
  return Group::from_table("sg64_182", std::move(names), std::move(table), Trust::Verify, n);
}

}  // namespace dcg
