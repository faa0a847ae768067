#pragma once

// Cayley-table files:
//   {"name": string, "order": n, "elements": [n strings], "table": [[n ints] x n]}
// The identity may sit at any index; loading relabels it to 0.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dcg/error.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"

namespace dcg {

inline nlohmann::ordered_json table_to_json(const Group& g) {
  nlohmann::ordered_json j;
  j["name"] = g.label();
  j["order"] = g.order();
  j["elements"] = g.names();
  auto rows = nlohmann::ordered_json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

template <class Json>
Group table_from_json(const Json& j, const Limits& limits = default_limits()) {
  try {
    require(j.is_object(), Errc::NotAGroup, "table file must hold a JSON object");
    const auto order = j.at("order").template get<long long>();
    require(order >= 1, Errc::NotAGroup, "order must be positive");
    require(static_cast<std::size_t>(order) <= limits.realize, Errc::CapExceeded,
            "table of order " + std::to_string(order) + " exceeds the realize cap");
    auto names = j.at("elements").template get<std::vector<std::string>>();
    auto table = j.at("table").template get<std::vector<std::vector<long long>>>();
    std::string name = j.contains("name") ? j.at("name").template get<std::string>() : std::string("G");
    return group_from_table(static_cast<std::size_t>(order), std::move(names), table, std::move(name), limits);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::NotAGroup, std::string("malformed table JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::FileError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::FileError, "cannot write " + path.string());
  out << text;
  require(static_cast<bool>(out), Errc::FileError, "write failed for " + path.string());
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::FileError, path.string() + " is not valid JSON: " + e.what());
  }
}

inline Group load_table_file(const std::filesystem::path& path, const Limits& limits = default_limits()) {
  return table_from_json(read_json_file(path), limits);
}

inline void save_table_file(const Group& g, const std::filesystem::path& path) {
  write_text_file(path, table_to_json(g).dump() + "\n");
}

}  // namespace dcg
