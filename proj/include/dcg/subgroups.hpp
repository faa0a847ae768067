#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "dcg/group.hpp"
#include "dcg/limits.hpp"

namespace dcg {

struct SubgroupClass {
  ElementSet representative;  ///< lexicographically smallest member of the class
  std::size_t class_size = 0; ///< number of conjugates
  bool is_abelian = false;
  bool is_cyclic = false;
};

struct SubgroupClassReport {
  std::vector<SubgroupClass> classes;  ///< ordered by subgroup order, then representative

  std::size_t count_if(bool abelian, bool cyclic) const {
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [&](const SubgroupClass& c) {
      return c.is_abelian == abelian && c.is_cyclic == cyclic;
    }));
  }
  std::size_t noncyclic_abelian() const { return count_if(true, false); }
  std::size_t total_subgroups() const {
    std::size_t s = 0;
    for (const auto& c : classes) s += c.class_size;
    return s;
  }
};

inline bool set_is_abelian(const Group& g, const ElementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.commute(s[i], s[j])) return false;
  return true;
}

inline bool set_is_cyclic(const Group& g, const ElementSet& s) {
  for (auto x : s)
    if (element_order(g, x) == s.size()) return true;
  return false;
}

/// All subgroups, each as a sorted element list, ordered by (size, members).
/// Every subgroup is a join of cyclic subgroups, so joins are closed over
/// starting from the cyclic ones.
inline std::vector<ElementSet> all_subgroups(const Group& g, const Limits& limits = default_limits()) {
  require(g.order() <= limits.subgroups, Errc::CapExceeded,
          "subgroup enumeration refused for order " + std::to_string(g.order()) + " (cap " +
              std::to_string(limits.subgroups) + ")");
  const std::size_t n = g.order();
  std::set<ElementSet> found;
  // (members, generators) pairs still to be extended
  std::vector<std::pair<ElementSet, std::vector<Elem>>> work;
  std::vector<Elem> cyclic_gens;
  for (Elem x = 0; x < n; ++x) {
    const Elem gen[] = {x};
    auto c = subgroup_generated(g, gen);
    if (found.insert(c).second) {
      cyclic_gens.push_back(x);
      work.emplace_back(std::move(c), std::vector<Elem>{x});
    }
  }
  std::vector<char> in(n);
  while (!work.empty()) {
    auto [h, gens] = std::move(work.back());
    work.pop_back();
    std::fill(in.begin(), in.end(), 0);
    for (auto x : h) in[x] = 1;
    for (auto c : cyclic_gens) {
      if (in[c]) continue;
      std::vector<Elem> joined_gens = gens;
      joined_gens.push_back(c);
      auto joined = subgroup_generated(g, joined_gens);
      if (found.insert(joined).second) work.emplace_back(std::move(joined), std::move(joined_gens));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

/// Subgroups up to conjugacy with per-class flags.
inline SubgroupClassReport subgroups_up_to_conjugacy(const Group& g, const Limits& limits = default_limits()) {
  auto subs = all_subgroups(g, limits);
  std::map<ElementSet, std::size_t> seen;  // canonical representative -> class index
  SubgroupClassReport report;
  for (const auto& h : subs) {
    std::set<ElementSet> conjugates;
    for (Elem b = 0; b < g.order(); ++b) {
      ElementSet c;
      c.reserve(h.size());
      for (auto x : h) c.push_back(g.conjugate(x, b));
      std::sort(c.begin(), c.end());
      conjugates.insert(std::move(c));
    }
    const ElementSet& canon = *conjugates.begin();
    if (seen.contains(canon)) continue;
    seen.emplace(canon, report.classes.size());
    report.classes.push_back({canon, conjugates.size(), set_is_abelian(g, canon), set_is_cyclic(g, canon)});
  }
  std::stable_sort(report.classes.begin(), report.classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.size() != b.representative.size()) return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
  return report;
}

}  // namespace dcg
