#pragma once

// Isomorphism of small graphs: iterated degree refinement to get vertex
// colours, then backtracking over colour-compatible assignments.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <vector>

#include "dcg/graph.hpp"
#include "dcg/limits.hpp"

namespace dcg {

namespace detail {

/// Stable colour refinement run on both graphs jointly so colour ids agree.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const SimpleGraph& a,
                                                                                  const SimpleGraph& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> ca(n, 0), cb(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [&](const SimpleGraph& g, const std::vector<std::size_t>& col, std::size_t v) {
      std::vector<std::size_t> sig{col[v]};
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (g.adjacent(v, u)) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<std::size_t> na(n), nb(n);
    for (std::size_t v = 0; v < n; ++v) {
      na[v] = ids[sa[v]];
      nb[v] = ids[sb[v]];
    }
    auto distinct = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
      std::set<std::size_t> s(x.begin(), x.end());
      s.insert(y.begin(), y.end());
      return s.size();
    };
    const bool stable = distinct(na, nb) == distinct(ca, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable && round > 0) break;
  }
  return {ca, cb};
}

}  // namespace detail

/// A vertex bijection phi with a ~ b iff phi(a) ~ phi(b), or nullopt.
inline std::optional<std::vector<std::size_t>> graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                                                                const Limits& limits = default_limits()) {
  require(g1.size() <= limits.graph_isomorphism && g2.size() <= limits.graph_isomorphism, Errc::CapExceeded,
          "graph isomorphism refused above " + std::to_string(limits.graph_isomorphism) + " vertices");
  const std::size_t n = g1.size();
  if (n != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto [c1, c2] = detail::refine_colours(g1, g2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  // most constrained vertices first: smallest colour classes
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : c1) ++class_size[c];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return class_size[c1[a]] < class_size[c1[b]]; });

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, unset);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || c2[w] != c1[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = g1.adjacent(v, u) == g2.adjacent(w, phi[u]);
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = 1;
      if (search(depth + 1)) return true;
      used[w] = 0;
      phi[v] = unset;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return phi;
}

}  // namespace dcg
