#pragma once

// Group spec mini-language used on the command line.
//
//   spec   := atom ("x" atom)*
//   atom   := family | "table:" path | "sg64_182"
//   family := ("C" | "D" | "Q" | "SD" | "S" | "A") integer
//
// Whitespace between tokens is ignored. A table path is either quoted
// ("table:\"my file.json\"") or a bare run of non-whitespace characters, so a
// bare path must be followed by whitespace before the next "x".

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcg/error.hpp"
#include "dcg/families.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"
#include "dcg/table_io.hpp"

namespace dcg {

struct FamilyAtom {
  Family kind;
  std::uint64_t parameter;
  bool operator==(const FamilyAtom&) const = default;
};

struct TableAtom {
  std::string path;
  bool operator==(const TableAtom&) const = default;
};

struct FixtureAtom {
  std::string name;
  bool operator==(const FixtureAtom&) const = default;
};

struct GroupSpec {
  struct Product {
    std::vector<GroupSpec> factors;
    bool operator==(const Product&) const = default;
  };
  std::variant<FamilyAtom, TableAtom, FixtureAtom, Product> node;
  bool operator==(const GroupSpec&) const = default;
};

namespace detail {

inline const std::vector<std::string>& atom_starts() {
  static const std::vector<std::string> starts{"A", "C", "D", "Q", "S", "SD", "sg64_182", "table:"};
  return starts;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> factors;
    factors.push_back(atom());
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != 'x') throw ParseError(pos_, {"x", "end of input"}, "unexpected character");
      ++pos_;
      factors.push_back(atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return GroupSpec{GroupSpec::Product{std::move(factors)}};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  GroupSpec atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ == text_.size()) throw ParseError(pos_, atom_starts(), "expected a group");
    if (consume("table:")) return GroupSpec{TableAtom{path()}};
    if (consume("sg64_182")) return GroupSpec{FixtureAtom{"sg64_182"}};
    Family kind;
    if (consume("SD")) kind = Family::Semidihedral;
    else if (consume("C")) kind = Family::Cyclic;
    else if (consume("D")) kind = Family::Dihedral;
    else if (consume("Q")) kind = Family::Quaternion;
    else if (consume("S")) kind = Family::Symmetric;
    else if (consume("A")) kind = Family::Alternating;
    else throw ParseError(start, atom_starts(), "unknown group name");
    const std::uint64_t n = integer();
    check_family_parameter(kind, n);
    return GroupSpec{FamilyAtom{kind, n}};
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      require(v <= 1'000'000'000ULL, Errc::BadParameter, "family parameter too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, {"integer"}, "expected a family parameter");
    return v;
  }

  std::string path() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw ParseError(text_.size(), {"\""}, "unterminated quoted path");
      std::string p(text_.substr(pos_ + 1, close - pos_ - 1));
      if (p.empty()) throw ParseError(pos_, {"path"}, "empty path");
      pos_ = close + 1;
      return p;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '"') ++pos_;
    if (pos_ == start) throw ParseError(pos_, {"path"}, "expected a table path");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a group spec; throws ParseError (offset + expected tokens) or
/// Error(BadParameter).
inline GroupSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Canonical text; parse_spec(print_spec(s)) == s.
inline std::string print_spec(const GroupSpec& spec) {
  struct Printer {
    std::string operator()(const FamilyAtom& a) const { return family_letter(a.kind) + std::to_string(a.parameter); }
    bool last = true;
    std::string operator()(const TableAtom& a) const {
      const bool bare = last && !a.path.empty() && a.path.find_first_of(" \t\r\n\f\v\"") == std::string::npos;
      return "table:" + (bare ? a.path : "\"" + a.path + "\"");
    }
    std::string operator()(const FixtureAtom& a) const { return a.name; }
    std::string operator()(const GroupSpec::Product& p) const {
      std::string s;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) s += "x";
        s += std::visit(Printer{i + 1 == p.factors.size()}, p.factors[i].node);
      }
      return s;
    }
  };
  return std::visit(Printer{}, spec.node);
}

/// Builds the group; products are realized left to right.
inline Group realize(const GroupSpec& spec, const Limits& limits = default_limits()) {
  struct Realizer {
    const Limits& limits;
    Group operator()(const FamilyAtom& a) const { return make_family(a.kind, a.parameter, limits); }
    Group operator()(const TableAtom& a) const { return load_table_file(a.path, limits); }
    Group operator()(const FixtureAtom& a) const {
      require(a.name == "sg64_182", Errc::BadParameter, "unknown fixture " + a.name);
      require(64 <= limits.realize, Errc::CapExceeded, "sg64_182 exceeds the realize cap");
      return sg64_182();
    }
    Group operator()(const GroupSpec::Product& p) const {
      // refuse oversized products before building anything large
      std::uint64_t estimate = 1;
      for (const auto& f : p.factors)
        if (const auto* fam = std::get_if<FamilyAtom>(&f.node)) {
          estimate *= family_order(fam->kind, fam->parameter, limits.realize);
          require(estimate <= limits.realize, Errc::CapExceeded,
                  "product order exceeds the realize cap of " + std::to_string(limits.realize));
        } else if (std::holds_alternative<FixtureAtom>(f.node)) {
          estimate *= 64;
        }
      require(estimate <= limits.realize, Errc::CapExceeded,
              "product order exceeds the realize cap of " + std::to_string(limits.realize));
      Group acc = std::visit(*this, p.factors.front().node);
      for (std::size_t i = 1; i < p.factors.size(); ++i)
        acc = direct_product(acc, std::visit(*this, p.factors[i].node), limits);
      return acc;
    }
  };
  return std::visit(Realizer{limits}, spec.node);
}

inline Group realize(std::string_view text, const Limits& limits = default_limits()) {
  return realize(parse_spec(text), limits);
}

}  // namespace dcg
