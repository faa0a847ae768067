#pragma once

// Analysis reports and census rows, with text, JSON and CSV renderings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcg/abelian.hpp"
#include "dcg/classify.hpp"
#include "dcg/cohomology.hpp"
#include "dcg/extensions.hpp"
#include "dcg/group.hpp"

namespace dcg {

inline constexpr int kReportSchema = 1;

struct CheckVerdict {
  std::string name;
  bool passed = false;
  bool operator==(const CheckVerdict&) const = default;
};

struct AnalysisReport {
  std::string name;
  std::size_t order = 1;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
  AbelianInvariants abelianization;
  Rational kappa{1, 1};
  AbelianInvariants schur;
  AbelianInvariants bogomolov;
  std::uint64_t m0_order = 1;
  std::size_t epow_edges = 0;
  std::size_t dcom_edges = 0;
  std::size_t com_edges = 0;
  std::size_t noncyclic_abelian_classes = 0;
  std::string classification;
  std::vector<CheckVerdict> checks;

  bool operator==(const AnalysisReport&) const = default;
};

inline AnalysisReport analyze(const Group& g, const CohomologyOptions& options = {}) {
  const auto a = analyse_group(g, options);
  const auto c = classify(g, a);
  AnalysisReport r;
  r.name = g.label();
  r.order = g.order();
  r.center_order = center(g).size();
  r.derived_order = derived_subgroup(g).size();
  r.abelianization = abelianization(g);
  r.kappa = commuting_probability(g);
  r.schur = a.multipliers.schur;
  r.bogomolov = a.multipliers.bogomolov;
  r.m0_order = a.multipliers.m0_order;
  r.epow_edges = c.epow_edges;
  r.dcom_edges = c.dcom_edges;
  r.com_edges = c.com_edges;
  r.noncyclic_abelian_classes = a.subgroups.noncyclic_abelian();
  r.classification = c.trichotomy;
  for (const auto& check : c.checks) r.checks.push_back({check.name, check.passed});
  return r;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["derived_order"] = r.derived_order;
  j["abelianization"] = r.abelianization.factors();
  j["kappa"] = r.kappa.str();
  j["schur"] = r.schur.factors();
  j["bogomolov"] = r.bogomolov.factors();
  j["m0_order"] = r.m0_order;
  j["edges"] = {{"epow", r.epow_edges}, {"dcom", r.dcom_edges}, {"com", r.com_edges}};
  j["noncyclic_abelian_classes"] = r.noncyclic_abelian_classes;
  j["classification"] = r.classification;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  j["checks"] = std::move(checks);
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
  try {
    require(j.at("schema").get<int>() == kReportSchema, Errc::ParseError, "unsupported report schema");
    AnalysisReport r;
    r.name = j.at("name").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.center_order = j.at("center_order").get<std::size_t>();
    r.derived_order = j.at("derived_order").get<std::size_t>();
    r.abelianization = AbelianInvariants(j.at("abelianization").get<std::vector<std::uint64_t>>());
    r.kappa = Rational::parse(j.at("kappa").get<std::string>());
    r.schur = AbelianInvariants(j.at("schur").get<std::vector<std::uint64_t>>());
    r.bogomolov = AbelianInvariants(j.at("bogomolov").get<std::vector<std::uint64_t>>());
    r.m0_order = j.at("m0_order").get<std::uint64_t>();
    const auto& e = j.at("edges");
    r.epow_edges = e.at("epow").get<std::size_t>();
    r.dcom_edges = e.at("dcom").get<std::size_t>();
    r.com_edges = e.at("com").get<std::size_t>();
    r.noncyclic_abelian_classes = j.at("noncyclic_abelian_classes").get<std::size_t>();
    r.classification = j.at("classification").get<std::string>();
    for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>()});
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("malformed report JSON: ") + e.what());
  }
}

inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group:           " << r.name << "\n"
     << "order:           " << r.order << "\n"
     << "|Z(G)|:          " << r.center_order << "\n"
     << "|G'|:            " << r.derived_order << "\n"
     << "G^ab:            " << r.abelianization.str() << "\n"
     << "kappa:           " << r.kappa.str() << "\n"
     << "M(G):            " << r.schur.str() << "\n"
     << "B0(G):           " << r.bogomolov.str() << "\n"
     << "|M0(G)|:         " << r.m0_order << "\n"
     << "edges EPow:      " << r.epow_edges << "\n"
     << "edges DCom:      " << r.dcom_edges << "\n"
     << "edges Com:       " << r.com_edges << "\n"
     << "noncyclic abelian subgroup classes: " << r.noncyclic_abelian_classes << "\n"
     << "classification:  " << r.classification << "\n";
  for (const auto& c : r.checks) os << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
  return os.str();
}

inline std::string render_multiplier(const std::string& name, const MultiplierReport& m) {
  std::ostringstream os;
  os << "group: " << name << "\n"
     << "M = " << m.schur.str() << "\n"
     << "B0 = " << m.bogomolov.str() << "\n"
     << "|M0| = " << m.m0_order << "\n";
  for (const auto& p : m.primes)
    os << "p = " << p.p << ", k = " << p.k << ": " << p.z2_generators << " cocycle generators, "
       << p.symmetric_generators << " symmetric generators\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const std::string& name, const MultiplierReport& m) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["name"] = name;
  j["schur"] = m.schur.factors();
  j["bogomolov"] = m.bogomolov.factors();
  j["m0_order"] = m.m0_order;
  auto primes = nlohmann::ordered_json::array();
  for (const auto& p : m.primes)
    primes.push_back({{"p", p.p},
                      {"k", p.k},
                      {"z2_generators", p.z2_generators},
                      {"symmetric_generators", p.symmetric_generators},
                      {"schur_exponents", p.schur_exponents},
                      {"bogomolov_exponents", p.bogomolov_exponents}});
  j["primes"] = std::move(primes);
  return j;
}

// -------------------------------------------------------------------- census

inline const std::vector<std::string>& default_census() {
  static const std::vector<std::string> specs{
      "C1",  "C2",     "C3",     "C4",   "C2xC2", "C5",  "C6",    "S3",  "C7",    "C8",    "C2xC4",
      "C2xC2xC2", "D8", "Q8",    "C9",   "C3xC3", "C10", "D10",   "C11", "C12",   "C2xC6", "A4",
      "D12", "C4xC4", "C2xD8",  "D16",   "Q16",   "SD16", "C2xQ8", "S4", "C3xS3", "D32",   "Q32"};
  return specs;
}

struct CensusRow {
  std::string name;
  std::size_t order = 1;
  Rational kappa{1, 1};
  AbelianInvariants schur;
  AbelianInvariants bogomolov;
  std::string classification;
};

inline CensusRow census_row(const AnalysisReport& r) {
  return {r.name, r.order, r.kappa, r.schur, r.bogomolov, r.classification};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const std::vector<CensusRow>& rows) {
  std::string out = "name,order,kappa,schur,bogomolov,class\n";
  for (const auto& r : rows)
    out += csv_field(r.name) + "," + std::to_string(r.order) + "," + csv_field(r.kappa.str()) + "," +
           csv_field(r.schur.str()) + "," + csv_field(r.bogomolov.str()) + "," + csv_field(r.classification) + "\n";
  return out;
}

inline std::string render_census_text(const std::vector<CensusRow>& rows) {
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t width) { return s + std::string(width > s.size() ? width - s.size() : 0, ' '); };
  os << pad("name", w + 2) << pad("order", 7) << pad("kappa", 8) << pad("M", 10) << pad("B0", 10) << "class\n";
  for (const auto& r : rows)
    os << pad(r.name, w + 2) << pad(std::to_string(r.order), 7) << pad(r.kappa.str(), 8) << pad(r.schur.str(), 10)
       << pad(r.bogomolov.str(), 10) << r.classification << "\n";
  return os.str();
}

}  // namespace dcg
