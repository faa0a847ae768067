#pragma once

// Where a group sits in the chain EPow(G) <= DCom(G) <= Com(G), with each
// graph equality cross-checked against its group-theoretic criterion.

#include <string>
#include <vector>

#include "dcg/cohomology.hpp"
#include "dcg/error.hpp"
#include "dcg/graph.hpp"
#include "dcg/group.hpp"
#include "dcg/subgroups.hpp"

namespace dcg {

struct CrossCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Classification {
  std::size_t epow_edges = 0;
  std::size_t dcom_edges = 0;
  std::size_t com_edges = 0;
  bool epow_equals_dcom = false;
  bool dcom_equals_com = false;
  std::string trichotomy;
  std::vector<CrossCheck> checks;
};

inline std::string trichotomy_text(bool epow_equals_dcom, bool dcom_equals_com) {
  return std::string("EPow ") + (epow_equals_dcom ? "=" : "⊊") + " DCom " + (dcom_equals_com ? "=" : "⊊") +
         " Com";
}

/// Everything classify() needs, computed once and reusable by reports.
struct GroupAnalysis {
  SimpleGraph epow;
  SimpleGraph dcom;
  SimpleGraph com;
  MultiplierReport multipliers;
  SubgroupClassReport subgroups;
};

inline GroupAnalysis analyse_group(const Group& g, const CohomologyOptions& options = {}) {
  const auto coh = compute_cohomology(g, options);
  return {enhanced_power_graph(g), deep_commuting_graph(g, coh), commuting_graph(g), multiplier_report(coh),
          subgroups_up_to_conjugacy(g, options.limits)};
}

/// Evaluates every cross-check; throws TheoremViolation if any fails.
inline Classification classify(const Group& g, const GroupAnalysis& a) {
  Classification c;
  c.epow_edges = a.epow.edge_count();
  c.dcom_edges = a.dcom.edge_count();
  c.com_edges = a.com.edge_count();
  c.epow_equals_dcom = a.epow.same_edges(a.dcom);
  c.dcom_equals_com = a.dcom.same_edges(a.com);
  c.trichotomy = trichotomy_text(c.epow_equals_dcom, c.dcom_equals_com);

  {
    const bool ok = a.epow.edges_subset_of(a.dcom) && a.dcom.edges_subset_of(a.com);
    c.checks.push_back({"inclusion chain", ok, "E(EPow) <= E(DCom) <= E(Com)"});
  }
  {
    const bool equal_multipliers = a.multipliers.schur == a.multipliers.bogomolov;
    c.checks.push_back({"bogomolov criterion", equal_multipliers == c.dcom_equals_com,
                        "M = " + a.multipliers.schur.str() + ", B0 = " + a.multipliers.bogomolov.str() +
                            (c.dcom_equals_com ? ", DCom = Com" : ", DCom != Com")});
  }
  {
    // a noncyclic subgroup whose elements are pairwise DCom-adjacent; DCom is
    // invariant under conjugation, so class representatives suffice
    std::size_t witnesses = 0;
    for (const auto& cls : a.subgroups.classes) {
      if (cls.is_cyclic) continue;
      const auto& s = cls.representative;
      bool clique = true;
      for (std::size_t i = 0; i < s.size() && clique; ++i)
        for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = a.dcom.adjacent(s[i], s[j]);
      witnesses += clique;
    }
    c.checks.push_back({"abelian lift criterion", (witnesses == 0) == c.epow_equals_dcom,
                        std::to_string(witnesses) + " noncyclic DCom-clique subgroup classes"});
  }
  std::vector<std::uint64_t> cpcp;
  for (const auto& cls : a.subgroups.classes) {
    if (cls.is_cyclic) continue;
    const auto f = factorize(cls.representative.size());
    if (f.size() == 1 && f[0].second == 2) cpcp.push_back(f[0].first);
  }
  {
    const bool equal = a.epow.same_edges(a.com);
    c.checks.push_back({"elementary abelian criterion", cpcp.empty() == equal,
                        cpcp.empty() ? "no C_p x C_p subgroup" : "has a C_p x C_p subgroup"});
  }
  {
    bool applies = false;
    for (auto p : cpcp)
      if (a.multipliers.schur.order() % p != 0) applies = true;
    c.checks.push_back({"coprime multiplier condition", !applies || !c.epow_equals_dcom,
                        applies ? "C_p x C_p with p not dividing |M|: EPow != DCom required" : "not applicable"});
  }
  for (const auto& check : c.checks)
    require(check.passed, Errc::TheoremViolation,
            "cross-check '" + check.name + "' failed for " + g.label() + " (" + check.detail + ")");
  return c;
}

inline Classification classify(const Group& g, const CohomologyOptions& options = {}) {
  return classify(g, analyse_group(g, options));
}

}  // namespace dcg
