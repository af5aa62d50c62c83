#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "qtrunc/bigint.hpp"
#include "qtrunc/bivar_poly.hpp"

namespace qtrunc {

/// Per-ring constants and unit detection. Specialized for every coefficient
/// ring the series kernel is instantiated over.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static constexpr std::string_view name = "integer";
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static std::optional<BigInt> unit_inverse(const BigInt& x) {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
  static std::string render(const BigInt& x) { return x.get_str(); }
};

template <>
struct RingTraits<BivarPoly> {
  static constexpr std::string_view name = "bivariate";
  static BivarPoly zero() { return {}; }
  static BivarPoly one() { return 1L; }
  static std::optional<BivarPoly> unit_inverse(const BivarPoly& x) {
    if (!x.is_constant()) return std::nullopt;
    BigInt c = x.constant_term();
    if (c == 1 || c == -1) return BivarPoly(c);
    return std::nullopt;
  }
  static std::string render(const BivarPoly& x) { return x.to_string(); }
};

template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& x, const R& y) {
  { R(x + y) };
  { R(x - y) };
  { R(x * y) };
  { R(-x) };
  { RingTraits<R>::zero() } -> std::same_as<R>;
  { RingTraits<R>::one() } -> std::same_as<R>;
  { RingTraits<R>::unit_inverse(x) } -> std::same_as<std::optional<R>>;
};

/// Formal power series in q truncated to `order` coefficients (q^0 .. q^{order-1}).
///
/// Binary operations between series of different orders yield the smaller
/// order. The coefficient ring is part of the type, so mixing rings is a
/// compile-time error.
template <CoefficientRing R>
class TruncSeries {
 public:
  using coefficient_type = R;

  explicit TruncSeries(std::size_t order) : coeffs_(check_order(order), RingTraits<R>::zero()) {}

  explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(coeffs_.size());
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = RingTraits<R>::one();
    return s;
  }

  /// c * q^exponent; vanishes when exponent >= order.
  static TruncSeries monomial(R c, std::size_t exponent, std::size_t order) {
    TruncSeries s(order);
    if (exponent < order) s.coeffs_[exponent] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  std::span<const R> coeffs() const { return coeffs_; }
  const R& operator[](std::size_t i) const { return coeffs_[i]; }
  R& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    const R z = RingTraits<R>::zero();
    return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const R& c) { return c == z; });
  }

  TruncSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + check_order(order)));
  }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& rhs) {
    shrink_to(rhs.order());
    for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  TruncSeries& operator*=(const R& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  TruncSeries& operator*=(const TruncSeries& rhs);

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const R& scalar) { return lhs *= scalar; }
  friend TruncSeries operator-(TruncSeries s) {
    for (auto& c : s.coeffs_) c = R(-c);
    return s;
  }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  static std::size_t check_order(std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be positive");
    return order;
  }
  void shrink_to(std::size_t order) {
    if (order < coeffs_.size()) coeffs_.resize(order);
  }

  std::vector<R> coeffs_;
};

namespace detail {

// acc += x * y without materializing a temporary where the ring allows it.
template <class R>
inline void add_product(R& acc, const R& x, const R& y) {
  if constexpr (std::is_same_v<R, BigInt>) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  } else {
    acc += x * y;
  }
}

template <class R>
inline void sub_product(R& acc, const R& x, const R& y) {
  if constexpr (std::is_same_v<R, BigInt>) {
    mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  } else {
    acc -= x * y;
  }
}

}  // namespace detail

/// Truncated Cauchy product (schoolbook).
template <CoefficientRing R>
TruncSeries<R> operator*(const TruncSeries<R>& s, const TruncSeries<R>& t) {
  const std::size_t n = std::min(s.order(), t.order());
  const R zero = RingTraits<R>::zero();
  TruncSeries<R> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == zero) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (t[j] == zero) continue;
      detail::add_product(out[i + j], s[i], t[j]);
    }
  }
  return out;
}

template <CoefficientRing R>
TruncSeries<R>& TruncSeries<R>::operator*=(const TruncSeries<R>& rhs) {
  return *this = *this * rhs;
}

/// Multiplicative inverse to full truncation order. Requires a unit constant term.
template <CoefficientRing R>
TruncSeries<R> invert(const TruncSeries<R>& s) {
  auto u = RingTraits<R>::unit_inverse(s[0]);
  if (!u) throw std::domain_error("series inversion needs a unit constant term");
  const std::size_t n = s.order();
  const R zero = RingTraits<R>::zero();
  TruncSeries<R> out(n);
  out[0] = *u;
  for (std::size_t m = 1; m < n; ++m) {
    R acc = zero;
    for (std::size_t i = 1; i <= m; ++i) {
      if (s[i] == zero) continue;
      detail::add_product(acc, s[i], out[m - i]);
    }
    out[m] = R(-(acc * *u));
  }
  return out;
}

/// Multiplication by q^t, keeping the order.
template <CoefficientRing R>
TruncSeries<R> shift(const TruncSeries<R>& s, std::size_t t) {
  TruncSeries<R> out(s.order());
  for (std::size_t m = t; m < s.order(); ++m) out[m] = s[m - t];
  return out;
}

/// q -> q^m, keeping the order.
template <CoefficientRing R>
TruncSeries<R> substitute_power(const TruncSeries<R>& s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitution power must be positive");
  TruncSeries<R> out(s.order());
  for (std::size_t j = 0; j * m < s.order(); ++j) out[j * m] = s[j];
  return out;
}

/// s * (1 - c q^e). Linear time.
template <CoefficientRing R>
TruncSeries<R> multiply_one_minus(TruncSeries<R> s, const R& c, std::size_t e) {
  if (e == 0) return s *= R(RingTraits<R>::one() - c);
  for (std::size_t m = s.order(); m-- > e;) detail::sub_product(s[m], c, s[m - e]);
  return s;
}

/// s / (1 - c q^e) for e >= 1 (the factor then has constant term 1). Linear time.
template <CoefficientRing R>
TruncSeries<R> divide_one_minus(TruncSeries<R> s, const R& c, std::size_t e) {
  if (e == 0) {
    auto u = RingTraits<R>::unit_inverse(R(RingTraits<R>::one() - c));
    if (!u) throw std::domain_error("division by a factor with non-unit constant term");
    return s *= *u;
  }
  for (std::size_t m = e; m < s.order(); ++m) detail::add_product(s[m], c, s[m - e]);
  return s;
}

/// Sparse polynomial in q with ring coefficients, as (exponent, coefficient) pairs.
template <CoefficientRing R>
using SparseTerms = std::vector<std::pair<std::size_t, R>>;

/// s * (sum of terms). Cost is order times the number of terms.
template <CoefficientRing R>
TruncSeries<R> multiply_sparse(const TruncSeries<R>& s, const SparseTerms<R>& terms) {
  TruncSeries<R> out(s.order());
  for (const auto& [e, c] : terms) {
    for (std::size_t m = e; m < s.order(); ++m) detail::add_product(out[m], c, s[m - e]);
  }
  return out;
}

}  // namespace qtrunc
