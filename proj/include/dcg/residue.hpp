#pragma once

// Exact linear algebra over the residue rings Z/p^k.
//
// Z/p^k is a local ring: every element is u * p^e with u a unit, so echelon
// forms need the Howell normalisation (leading entries p^e plus the
// annihilator closure) to be canonical and to support kernel extraction.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcg/error.hpp"

namespace dcg {

using Residue = std::uint32_t;
using Row = std::vector<Residue>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// (p, multiplicity) pairs of n in increasing order of p.
inline std::vector<std::pair<std::uint32_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(static_cast<std::uint32_t>(d), e);
  }
  if (n > 1) out.emplace_back(static_cast<std::uint32_t>(n), 1);
  return out;
}

class ResidueRing {
 public:
  ResidueRing(std::uint32_t p, unsigned k) : p_(p), k_(k) {
    require(is_prime(p), Errc::BadParameter, "residue ring needs a prime, got " + std::to_string(p));
    require(k >= 1, Errc::BadParameter, "residue ring exponent must be positive");
    std::uint64_t q = 1;
    powers_.push_back(1);
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      require(q < (1ULL << 31), Errc::BadParameter, "residue modulus too large");
      powers_.push_back(static_cast<Residue>(q));
    }
    q_ = static_cast<Residue>(q);
    mask_ = (p == 2) ? q_ - 1 : 0;
  }

  std::uint32_t prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return k_; }
  Residue modulus() const noexcept { return q_; }
  Residue power(unsigned e) const noexcept { return e >= k_ ? 0 : powers_[e]; }

  Residue reduce(std::uint64_t a) const noexcept {
    return mask_ ? static_cast<Residue>(a & mask_) : static_cast<Residue>(a % q_);
  }
  Residue reduce_signed(std::int64_t a) const noexcept {
    const std::int64_t q = q_;
    std::int64_t r = a % q;
    return static_cast<Residue>(r < 0 ? r + q : r);
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(std::uint64_t(a) + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(std::uint64_t(a) + q_ - b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(std::uint64_t(a) * b); }

  /// Largest e with p^e | a; k for a == 0.
  unsigned valuation(Residue a) const noexcept {
    if (a == 0) return k_;
    unsigned e = 0;
    while (a % p_ == 0) {
      a /= p_;
      ++e;
    }
    return e;
  }

  /// Inverse of a unit (p does not divide a).
  Residue unit_inverse(Residue a) const {
    std::int64_t t = 0, nt = 1, r = q_, nr = a;
    while (nr != 0) {
      const std::int64_t quot = r / nr;
      t = std::exchange(nt, t - quot * nt);
      r = std::exchange(nr, r - quot * nr);
    }
    require(r == 1, Errc::InternalVerificationFailure, "inverting a non-unit");
    return reduce_signed(t);
  }

  bool operator==(const ResidueRing& o) const noexcept { return p_ == o.p_ && k_ == o.k_; }

 private:
  std::uint32_t p_;
  unsigned k_;
  Residue q_ = 1;
  Residue mask_ = 0;
  std::vector<Residue> powers_;
};

namespace detail {

inline std::size_t first_nonzero(const Row& r, std::size_t from) {
  while (from < r.size() && r[from] == 0) ++from;
  return from;
}

/// r[j] += factor * s[j] for j >= from.
inline void axpy(const ResidueRing& ring, Row& r, const Row& s, Residue factor, std::size_t from) {
  if (factor == 0) return;
  for (std::size_t j = from; j < r.size(); ++j)
    if (s[j]) r[j] = ring.reduce(r[j] + std::uint64_t(factor) * s[j]);
}

inline void scale(const ResidueRing& ring, Row& r, Residue factor) {
  for (auto& x : r) x = ring.mul(x, factor);
}

inline bool is_zero(const Row& r) {
  for (auto x : r)
    if (x) return false;
  return true;
}

}  // namespace detail

/// Incremental Howell form of a submodule of (Z/p^k)^width.
///
/// Rows are kept in echelon form with leading entries p^e. Whenever a row with
/// leading p^e becomes a pivot, its multiple p^(k-e) * row (which vanishes at
/// the pivot) is inserted as well, so the rows with pivot >= c span every
/// module element that vanishes on the first c columns. After canonicalize()
/// entries above a pivot p^e lie in [0, p^e) and the row list is unique for
/// the module.
class HowellForm {
 public:
  HowellForm(ResidueRing ring, std::size_t width)
      : ring_(std::move(ring)), width_(width), pivot_of_(width, npos) {}

  const ResidueRing& ring() const noexcept { return ring_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  void insert(Row v) {
    require(v.size() == width_, Errc::OutOfRange, "row width mismatch");
    canonical_ = false;
    std::vector<Row> work;
    work.push_back(std::move(v));
    while (!work.empty()) {
      Row r = std::move(work.back());
      work.pop_back();
      for (std::size_t c = detail::first_nonzero(r, 0); c < width_;
           c = detail::first_nonzero(r, c + 1)) {
        const unsigned e = ring_.valuation(r[c]);
        const std::size_t pi = pivot_of_[c];
        if (pi != npos && e >= lead_[pi]) {
          const Residue factor = r[c] / ring_.power(lead_[pi]);
          detail::axpy(ring_, r, rows_[pi], ring_.neg(factor), c);
          continue;
        }
        normalize(r, c, e);
        Row annihilated = r;
        detail::scale(ring_, annihilated, ring_.power(ring_.exponent() - e));
        if (pi != npos) {
          std::swap(r, rows_[pi]);
          lead_[pi] = e;
          work.push_back(std::move(r));
        } else {
          pivot_of_[c] = rows_.size();
          rows_.push_back(std::move(r));
          lead_.push_back(e);
          pivot_col_.push_back(c);
        }
        if (!detail::is_zero(annihilated)) work.push_back(std::move(annihilated));
        break;
      }
    }
  }

  /// Reduces entries above pivots and orders rows by pivot column.
  void canonicalize() {
    if (canonical_) return;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_col_[a] < pivot_col_[b]; });
    std::vector<Row> rows;
    std::vector<unsigned> lead;
    std::vector<std::size_t> cols;
    for (auto i : order) {
      rows.push_back(std::move(rows_[i]));
      lead.push_back(lead_[i]);
      cols.push_back(pivot_col_[i]);
    }
    rows_ = std::move(rows);
    lead_ = std::move(lead);
    pivot_col_ = std::move(cols);
    std::fill(pivot_of_.begin(), pivot_of_.end(), npos);
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_of_[pivot_col_[i]] = i;
    for (std::size_t i = rows_.size(); i-- > 0;) {
      for (std::size_t j = i + 1; j < rows_.size(); ++j) {
        const std::size_t c = pivot_col_[j];
        const Residue factor = rows_[i][c] / ring_.power(lead_[j]);
        detail::axpy(ring_, rows_[i], rows_[j], ring_.neg(factor), c);
      }
    }
    canonical_ = true;
  }

  /// Rows in canonical order (call canonicalize() first for the unique form).
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t pivot_column(std::size_t i) const { return pivot_col_.at(i); }
  unsigned leading_valuation(std::size_t i) const { return lead_.at(i); }

  /// log_p of the number of module elements.
  std::size_t log_size() const {
    std::size_t s = 0;
    for (auto e : lead_) s += ring_.exponent() - e;
    return s;
  }

  /// Coefficients c with v = sum c_i rows()[i], c_i in [0, p^(k-e_i)), or
  /// nullopt when v is outside the module.
  std::optional<std::vector<Residue>> coordinates(Row v) const {
    require(v.size() == width_, Errc::OutOfRange, "row width mismatch");
    std::vector<Residue> coeff(rows_.size(), 0);
    for (std::size_t c = detail::first_nonzero(v, 0); c < width_;
         c = detail::first_nonzero(v, c + 1)) {
      const std::size_t pi = pivot_of_[c];
      if (pi == npos) return std::nullopt;
      const Residue step = ring_.power(lead_[pi]);
      if (v[c] % step != 0) return std::nullopt;
      const Residue factor = v[c] / step;
      coeff[pi] = ring_.add(coeff[pi], factor);
      detail::axpy(ring_, v, rows_[pi], ring_.neg(factor), c);
    }
    return coeff;
  }

  bool contains(const Row& v) const { return coordinates(v).has_value(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void normalize(Row& r, std::size_t c, unsigned e) const {
    const Residue unit = r[c] / ring_.power(e);
    if (unit != 1) detail::scale(ring_, r, ring_.unit_inverse(unit % ring_.modulus()));
  }

  ResidueRing ring_;
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<unsigned> lead_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::size_t> pivot_of_;
  bool canonical_ = true;
};

inline HowellForm howell_form(const ResidueRing& ring, std::size_t width, std::span<const Row> rows) {
  HowellForm h(ring, width);
  for (const auto& r : rows) h.insert(r);
  h.canonicalize();
  return h;
}

/// Canonical generators of {x : rows * x = 0}, the right kernel of the
/// matrix with the given rows, each of length `width`.
inline std::vector<Row> right_kernel(const ResidueRing& ring, std::span<const Row> rows,
                                     std::size_t width) {
  const std::size_t m = rows.size();
  HowellForm h(ring, m + width);
  for (std::size_t j = 0; j < width; ++j) {
    Row a(m + width, 0);
    for (std::size_t i = 0; i < m; ++i) a[i] = rows[i][j];
    a[m + j] = 1;
    h.insert(std::move(a));
  }
  h.canonicalize();
  std::vector<Row> out;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h.pivot_column(i) < m) continue;
    out.emplace_back(h.rows()[i].begin() + static_cast<std::ptrdiff_t>(m), h.rows()[i].end());
  }
  return out;
}

/// Generators of {c : sum c_i rows[i] = 0}.
inline std::vector<Row> left_kernel(const ResidueRing& ring, std::span<const Row> rows,
                                    std::size_t width) {
  std::vector<Row> transposed(width, Row(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) transposed[j][i] = rows[i][j];
  return right_kernel(ring, transposed, rows.size());
}

/// Diagonal valuations of the Smith form over Z/p^k of a matrix with `cols`
/// columns. Returns exactly `cols` values; columns without a pivot report k.
/// The cokernel (Z/p^k)^cols / rowspan is the direct sum of Z/p^e over them.
inline std::vector<unsigned> smith_valuations(const ResidueRing& ring, std::vector<Row> a,
                                              std::size_t cols) {
  const unsigned k = ring.exponent();
  std::vector<unsigned> out;
  std::size_t top = 0;
  std::vector<std::size_t> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), std::size_t{0});
  for (std::size_t step = 0; step < cols; ++step) {
    unsigned best = k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = top; i < a.size() && best > 0; ++i)
      for (std::size_t j = step; j < cols; ++j) {
        const unsigned v = ring.valuation(a[i][col_perm[j]]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == k) {
      out.resize(cols, k);
      return out;
    }
    std::swap(a[top], a[bi]);
    std::swap(col_perm[step], col_perm[bj]);
    const std::size_t pc = col_perm[step];
    const Residue pivot = a[top][pc];
    const Residue unit = pivot / ring.power(best);
    detail::scale(ring, a[top], ring.unit_inverse(unit));
    const Residue lead = ring.power(best);
    for (std::size_t i = top + 1; i < a.size(); ++i) {
      if (a[i][pc] == 0) continue;
      const Residue factor = a[i][pc] / lead;
      detail::axpy(ring, a[i], a[top], ring.neg(factor), 0);
    }
    // Column clearing only touches the pivot row; other rows already vanish here.
    for (std::size_t j = step + 1; j < cols; ++j) a[top][col_perm[j]] = 0;
    out.push_back(best);
    ++top;
  }
  return out;
}

/// Exponents e_i > 0 with U / R ~= (+) Z/p^(e_i), where `module` is the
/// canonical Howell form of U and every relation lies in U.
inline std::vector<unsigned> quotient_exponents(const HowellForm& module, std::span<const Row> relations) {
  const ResidueRing& ring = module.ring();
  const std::size_t t = module.rank();
  std::vector<Row> presentation = left_kernel(ring, module.rows(), module.width());
  for (const auto& r : relations) {
    auto c = module.coordinates(r);
    require(c.has_value(), Errc::InternalVerificationFailure, "relation outside the module");
    presentation.push_back(std::move(*c));
  }
  std::vector<unsigned> out;
  for (auto e : smith_valuations(ring, std::move(presentation), t))
    if (e > 0) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dcg
