#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qtrunc/bigint.hpp"

namespace qtrunc {

/// Polynomial in two formal symbols `a` and `b` with integer coefficients.
///
/// Stored sparsely as (deg_a, deg_b) -> coefficient. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class BivarPoly {
 public:
  using Exponent = std::pair<std::uint32_t, std::uint32_t>;
  using TermMap = std::map<Exponent, BigInt>;

  BivarPoly() = default;
  BivarPoly(long c);  // NOLINT: integers embed implicitly
  BivarPoly(const BigInt& c);  // NOLINT

  static BivarPoly monomial(BigInt c, std::uint32_t deg_a, std::uint32_t deg_b);
  static BivarPoly a() { return monomial(1, 1, 0); }
  static BivarPoly b() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The constant term if the polynomial has no other terms.
  bool is_constant() const;
  BigInt constant_term() const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);

  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  friend BivarPoly operator-(BivarPoly p);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Substitutes integer values for both symbols.
  BigInt evaluate(const BigInt& a_value, const BigInt& b_value) const;

  /// Human-readable form, terms in increasing (deg_a, deg_b) order, e.g. "1 - 2*a*b^3".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  TermMap terms_;
};

}  // namespace qtrunc
