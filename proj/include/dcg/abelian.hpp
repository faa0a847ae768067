#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcg/error.hpp"

namespace dcg {

/// Invariant factors d_1 | d_2 | ... | d_r of a finite abelian group, each
/// d_i >= 2. The empty list is the trivial group.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  explicit AbelianInvariants(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      require(factors_[i] >= 2, Errc::BadParameter, "invariant factor below 2");
      if (i > 0)
        require(factors_[i] % factors_[i - 1] == 0, Errc::BadParameter,
                "invariant factors must form a divisibility chain");
    }
  }

  /// Builds the invariant factors from prime-power cyclic summands p^e.
  static AbelianInvariants from_prime_powers(const std::map<std::uint32_t, std::vector<unsigned>>& parts) {
    std::size_t rank = 0;
    for (const auto& [p, es] : parts) rank = std::max(rank, es.size());
    std::vector<std::uint64_t> factors(rank, 1);
    for (const auto& [p, es] : parts) {
      std::vector<unsigned> sorted = es;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (unsigned e = 0; e < sorted[i]; ++e) factors[rank - 1 - i] *= p;
    }
    std::erase(factors, std::uint64_t{1});
    return AbelianInvariants(std::move(factors));
  }

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  bool trivial() const noexcept { return factors_.empty(); }

  std::uint64_t order() const noexcept {
    std::uint64_t n = 1;
    for (auto d : factors_) n *= d;
    return n;
  }

  /// "[2, 4]" or "[]".
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(factors_[i]);
    }
    return s + "]";
  }

  bool operator==(const AbelianInvariants&) const = default;

 private:
  std::vector<std::uint64_t> factors_;
};

}  // namespace dcg
