#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qtrunc {

/// An overpartition: parts in non-increasing order where the first occurrence
/// of each value may carry an overline. Equal values are listed with the
/// overlined copy first, so `overlined[i]` can only be set where parts[i]
/// differs from parts[i-1].
struct Overpartition {
  std::vector<int> parts;
  std::vector<bool> overlined;

  /// Builds from signed parts: a negative entry -v denotes an overlined v.
  /// Throws if the result violates the invariants.
  static Overpartition from_signed(const std::vector<int>& signed_parts);

  int size() const;
  bool empty() const { return parts.empty(); }
  bool valid() const;
  /// e.g. "(3bar, 1, 1)"; the empty overpartition prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;
};

/// All overpartitions of n, each exactly once, in lexicographic order on
/// (parts, flags).
std::vector<Overpartition> enumerate_overpartitions(int n);

/// The size-decreasing map from overpartitions of n to overpartitions of n-1:
///   trailing plain 1         -> drop it;
///   trailing part other than 1 or 1bar -> decrement it;
///   trailing 1bar            -> replace the last two parts by lambda_{k-1}
///                               ones, the first overlined iff lambda_{k-1} was.
/// The lone part (1bar) maps to the empty overpartition.
/// Throws on empty input.
Overpartition phi(const Overpartition& lambda);

/// Image -> preimage count for phi over all overpartitions of n (n >= 1).
std::map<Overpartition, int> phi_fiber_analysis(int n);

/// Partitions into colored parts, where part value e comes in
/// `multiplicity(e)` distinguishable colors. Brute-force enumeration.
std::uint64_t count_colored_partitions(int n, const std::function<int(int)>& multiplicity);

std::uint64_t count_partitions(int n);
std::uint64_t count_distinct_odd(int n);
/// Partitions into parts congruent to 0, r, m-r (mod m); when 2r = m the
/// residue class r carries two colors. Requires 1 <= r <= m/2.
std::uint64_t count_jmr(int n, int m, int r);
std::uint64_t count_three_colored(int n);

}  // namespace qtrunc
