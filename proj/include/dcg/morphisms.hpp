#pragma once

// Isomorphism and automorphism search by backtracking over images of a
// generating set.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dcg/group.hpp"
#include "dcg/limits.hpp"

namespace dcg {

/// Bijection of element indices, source index -> target index.
using ElementMap = std::vector<Elem>;

namespace detail {

constexpr Elem kUnmapped = static_cast<Elem>(-1);

/// Extends `map` from the subgroup generated by gens[0..count-1] so that it
/// is multiplicative, starting from the newest generator image. Returns false
/// on a conflict or a collision (non-injective).
inline bool extend_homomorphism(const Group& src, const Group& dst, std::span<const Elem> gens,
                                std::span<const Elem> images, ElementMap& map, std::vector<char>& used) {
  std::vector<Elem> frontier;
  for (Elem x = 0; x < src.order(); ++x)
    if (map[x] != kUnmapped) frontier.push_back(x);
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Elem x = frontier[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = src.mul(x, gens[j]);
      const Elem fy = dst.mul(map[x], images[j]);
      if (map[y] == kUnmapped) {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        frontier.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<std::uint64_t> order_profile(const Group& g) {
  std::vector<std::uint64_t> ord(g.order());
  for (Elem x = 0; x < g.order(); ++x) ord[x] = element_order(g, x);
  return ord;
}

}  // namespace detail

/// Calls `visit` with every isomorphism src -> dst until it returns false.
/// Candidates are enumerated in lexicographic order of generator images.
inline void for_each_isomorphism(const Group& src, const Group& dst,
                                 const std::function<bool(const ElementMap&)>& visit) {
  if (src.order() != dst.order()) return;
  const auto gens = generating_set(src);
  const auto src_ord = detail::order_profile(src);
  const auto dst_ord = detail::order_profile(dst);
  {
    auto a = src_ord, b = dst_ord;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<Elem> images(gens.size());
  bool keep_going = true;
  std::function<void(std::size_t, const ElementMap&, const std::vector<char>&)> search =
      [&](std::size_t depth, const ElementMap& map, const std::vector<char>& used) {
        if (!keep_going) return;
        if (depth == gens.size()) {
          keep_going = visit(map);
          return;
        }
        for (Elem y = 0; y < dst.order() && keep_going; ++y) {
          if (dst_ord[y] != src_ord[gens[depth]]) continue;
          if (map[gens[depth]] != detail::kUnmapped && map[gens[depth]] != y) continue;
          ElementMap next = map;
          std::vector<char> next_used = used;
          images[depth] = y;
          if (next[gens[depth]] == detail::kUnmapped) {
            if (next_used[y]) continue;
            next[gens[depth]] = y;
            next_used[y] = 1;
          }
          if (!detail::extend_homomorphism(src, dst, std::span(gens).first(depth + 1),
                                           std::span<const Elem>(images).first(depth + 1), next, next_used))
            continue;
          search(depth + 1, next, next_used);
        }
      };
  ElementMap start(src.order(), detail::kUnmapped);
  std::vector<char> used(dst.order(), 0);
  start[0] = 0;
  used[0] = 1;
  search(0, start, used);
}

inline std::optional<ElementMap> is_isomorphic(const Group& g, const Group& h, const Limits& limits = default_limits()) {
  require(g.order() <= limits.isomorphism && h.order() <= limits.isomorphism, Errc::CapExceeded,
          "isomorphism test refused above order " + std::to_string(limits.isomorphism));
  if (g.order() != h.order()) return std::nullopt;
  if (center(g).size() != center(h).size() || conjugacy_classes(g).size() != conjugacy_classes(h).size())
    return std::nullopt;
  std::optional<ElementMap> found;
  for_each_isomorphism(g, h, [&](const ElementMap& m) {
    found = m;
    return false;
  });
  return found;
}

/// All automorphisms, in lexicographic order of generator images; the
/// identity map comes first.
inline std::vector<ElementMap> automorphisms(const Group& g, const Limits& limits = default_limits()) {
  require(g.order() <= limits.automorphism, Errc::CapExceeded,
          "automorphism search refused for order " + std::to_string(g.order()) + " (cap " +
              std::to_string(limits.automorphism) + ")");
  std::vector<ElementMap> out;
  for_each_isomorphism(g, g, [&](const ElementMap& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_homomorphism(const Group& src, const Group& dst, const ElementMap& map) {
  if (map.size() != src.order()) return false;
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace dcg
