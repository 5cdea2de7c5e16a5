#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glr {

/// Weakly decreasing integer tuple (p_1 >= ... >= p_n).
class Signature {
 public:
  Signature() = default;
  /// Throws std::invalid_argument when the entries are not weakly decreasing.
  explicit Signature(std::vector<long> entries);
  /// nullopt instead of throwing.
  static std::optional<Signature> try_make(std::vector<long> entries);
  /// Comma separated integers, e.g. "5,3,1,0" or "0,-1,-2".
  static Signature parse(std::string_view text);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<long>& entries() const { return entries_; }
  /// 1-based entry p_j.
  [[nodiscard]] long entry(std::size_t j) const { return entries_.at(j - 1); }

  /// (-p_n, ..., -p_1).
  [[nodiscard]] Signature dual() const;
  /// Entries with p_j replaced by p_j + delta (not necessarily decreasing).
  [[nodiscard]] std::vector<long> shifted(std::size_t j, long delta) const;

  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;

  /// "(2,1,0)".
  [[nodiscard]] std::string to_string() const;
  /// "2,1,0", the format accepted by parse.
  [[nodiscard]] std::string to_csv() const;

 private:
  std::vector<long> entries_;
};

/// r_j >= q_j >= r_{j+1} for all j, with |r| = |q| + 1.
bool interlaces(const Signature& r, const std::vector<long>& q);
bool interlaces(const Signature& r, const Signature& q);

/// All q interlacing r, in decreasing lexicographic order.
std::vector<Signature> enumerate_interlacing(const Signature& r);

/// Number of Gelfand-Tsetlin patterns with top row p.
std::uint64_t count_gt_patterns(const Signature& p);

/// All signatures of length n with entries in [lo, hi], in decreasing lexicographic order.
std::vector<Signature> signatures_in_box(int n, long lo, long hi);

}  // namespace glr
