#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtrunc/q_objects.hpp"

namespace qtrunc {

enum class PartitionKind { P, Overp, Pod, Jmr, T3 };

/// Which counting function a table holds. `m` and `r` are only meaningful for Jmr.
struct PartitionFunctionId {
  PartitionKind kind = PartitionKind::P;
  std::size_t m = 0;
  std::size_t r = 0;

  static PartitionFunctionId p() { return {PartitionKind::P}; }
  static PartitionFunctionId overp() { return {PartitionKind::Overp}; }
  static PartitionFunctionId pod() { return {PartitionKind::Pod}; }
  static PartitionFunctionId t3() { return {PartitionKind::T3}; }
  /// Throws unless 1 <= r <= m/2.
  static PartitionFunctionId jmr(std::size_t m, std::size_t r);

  /// Lowercase selector token: "p", "overp", "pod", "t3", "jmr(5,2)".
  std::string name() const;

  friend auto operator<=>(const PartitionFunctionId&, const PartitionFunctionId&) = default;
};

/// The theta expansion that is the reciprocal of the function's generating product.
ThetaExpansion reciprocal_theta(const PartitionFunctionId& id, std::size_t order);

struct ValueTable {
  PartitionFunctionId id;
  std::vector<BigInt> values;  // indices 0..n_max

  std::size_t n_max() const { return values.size() - 1; }
  /// f(n), with f(negative) = 0. Throws std::out_of_range past n_max.
  BigInt at(long n) const;
};

/// f(n) = -sum_{i>=1} c_i f(n - e_i) over the reciprocal theta expansion.
ValueTable pf_by_recurrence(const PartitionFunctionId& id, std::size_t n_max);

/// Coefficients of the generating product, expanded factor by factor.
ValueTable pf_by_product(const PartitionFunctionId& id, std::size_t n_max);

struct CrossCheck {
  std::optional<std::size_t> first_mismatch;
  bool agree() const { return !first_mismatch; }
};

CrossCheck pf_crosscheck(const PartitionFunctionId& id, std::size_t n_max);

}  // namespace qtrunc
