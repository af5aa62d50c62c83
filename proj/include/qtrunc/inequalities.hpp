#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtrunc/partition_functions.hpp"

namespace qtrunc {

enum class FamilyKind { AM, Cor2, Cor4, Conj1, Conj2, RR1, RR2, Conj3 };

/// An inequality family, normalized so that every claim reads "value >= 0".
/// `m` and `r` apply to Conj1 only.
struct FamilyId {
  FamilyKind kind = FamilyKind::AM;
  int m = 0;
  int r = 0;

  static FamilyId am() { return {FamilyKind::AM}; }
  static FamilyId cor2() { return {FamilyKind::Cor2}; }
  static FamilyId cor4() { return {FamilyKind::Cor4}; }
  static FamilyId conj1(int m, int r);
  static FamilyId conj2() { return {FamilyKind::Conj2}; }
  static FamilyId rr1() { return {FamilyKind::RR1}; }
  static FamilyId rr2() { return {FamilyKind::RR2}; }
  static FamilyId conj3() { return {FamilyKind::Conj3}; }

  std::string token() const;
  std::string name() const;
  /// False for the proved families (AM, COR2, COR4).
  bool is_conjecture() const;
  /// The counting function the family is built from.
  PartitionFunctionId function() const;
  /// Least n from which strict positivity is claimed; nullopt when no
  /// strictness is claimed.
  std::optional<long> strictness_threshold(int k) const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::optional<FamilyKind> family_kind_from_token(std::string_view token);
std::vector<std::string_view> family_tokens();

/// Immutable collection of value tables shared by scans.
class TableSet {
 public:
  TableSet() = default;
  void add(ValueTable table);
  /// Throws std::out_of_range when no table for `id` is present.
  const ValueTable& get(const PartitionFunctionId& id) const;
  bool contains(const PartitionFunctionId& id) const { return tables_.contains(id); }

  /// Tables needed by `family` up to n_max, built by recurrence.
  static TableSet for_family(const FamilyId& family, std::size_t n_max);

 private:
  std::map<PartitionFunctionId, ValueTable> tables_;
};

/// Normalized value at (k, n). Throws std::out_of_range if a table is too short.
BigInt family_value(const FamilyId& family, int k, long n, const TableSet& tables);

struct Violation {
  int k;
  long n;
  BigInt value;
};

struct InequalityReport {
  FamilyId family;
  int k_max = 0;
  long n_max = 0;
  std::vector<Violation> violations;            // value < 0
  std::vector<Violation> strictness_violations;  // value == 0 at or past threshold

  bool passed() const { return violations.empty() && strictness_violations.empty(); }
};

/// Checks every 1 <= k <= k_max, 1 <= n <= n_max. Work is spread over k.
InequalityReport scan(const FamilyId& family, int k_max, long n_max);
InequalityReport scan(const FamilyId& family, int k_max, long n_max, const TableSet& tables);

/// First (k, n) where the values of two families disagree,
/// scanning 1 <= k <= k_max, 1 <= n <= n_max.
std::optional<std::pair<int, long>> first_disagreement(const FamilyId& lhs, const FamilyId& rhs, int k_max,
                                                       long n_max);

/// Coefficients of the right side of the NEWOVP identity equal the CONJ2
/// values for every k <= k_max and n < order.
bool crosscheck_conj2(int k_max, std::size_t order);

/// The J_{5,r} bilateral sum, the Rogers-Ramanujan style series coefficient,
/// and the CONJ1(5,r) value agree for 1 <= n < order, k <= k_max; the series
/// constant term is 0. `variant` is RR1 or RR2.
bool crosscheck_rr(FamilyKind variant, int k_max, std::size_t order);

}  // namespace qtrunc
