#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qtrunc/series.hpp"

namespace qtrunc {

using IntSeries = TruncSeries<BigInt>;

/// Number of factors in a q-Pochhammer symbol or terms in a theta sum;
/// std::nullopt stands for the infinite product / full series.
using Count = std::optional<std::size_t>;
inline constexpr std::nullopt_t infinite = std::nullopt;

/// (sign * q^shift ; q^step)_count, i.e. prod_{i < count} (1 - sign * q^{shift + step*i}).
struct PochSpec {
  int sign = 1;  // +1 or -1
  std::size_t shift = 1;
  std::size_t step = 1;
  Count count = infinite;
};

IntSeries poch(const PochSpec& spec, std::size_t order);

/// s * (c q^shift ; q^step)_count for a ring-valued c (finite count).
template <CoefficientRing R>
TruncSeries<R> multiply_by_poch(TruncSeries<R> s, const R& c, std::size_t shift, std::size_t step,
                                std::size_t count) {
  if (step == 0) throw std::invalid_argument("Pochhammer step must be positive");
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t e = shift + step * i;
    if (e >= s.order()) break;
    s = multiply_one_minus(std::move(s), c, e);
  }
  return s;
}

/// s / (c q^shift ; q^step)_count. Every factor must have a unit constant term.
template <CoefficientRing R>
TruncSeries<R> divide_by_poch(TruncSeries<R> s, const R& c, std::size_t shift, std::size_t step,
                              std::size_t count) {
  if (step == 0) throw std::invalid_argument("Pochhammer step must be positive");
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t e = shift + step * i;
    if (e >= s.order()) break;
    s = divide_one_minus(std::move(s), c, e);
  }
  return s;
}

IntSeries multiply_by_poch(IntSeries s, const PochSpec& spec);
IntSeries divide_by_poch(IntSeries s, const PochSpec& spec);

/// Gaussian binomial [M choose K] in base q^base_power, truncated to `order`.
/// Zero when K > M or either argument is negative.
IntSeries q_binomial(std::int64_t M, std::int64_t K, std::size_t base_power, std::size_t order);

struct ThetaTerm {
  std::size_t exponent;
  std::int64_t coeff;
  friend bool operator==(const ThetaTerm&, const ThetaTerm&) = default;
};

/// Sparse signed series 1 + sum c_i q^{e_i} with strictly increasing exponents,
/// all below `order`. The leading term is always (0, 1), which makes the
/// convolution recurrence f(n) = -sum_{i>=1} c_i f(n - e_i) well posed.
class ThetaExpansion {
 public:
  /// Merges equal exponents additively, drops zero coefficients and terms at
  /// or beyond `order`. Throws unless the merged constant term is 1.
  ThetaExpansion(std::vector<ThetaTerm> terms, std::size_t order);

  const std::vector<ThetaTerm>& terms() const { return terms_; }
  std::size_t order() const { return order_; }
  IntSeries materialize() const;

  friend bool operator==(const ThetaExpansion&, const ThetaExpansion&) = default;

 private:
  std::vector<ThetaTerm> terms_;
  std::size_t order_;
};

/// 1 + sum_{j=1}^{k_limit} (-1)^j (q^{j(3j-1)/2} + q^{j(3j+1)/2}).
ThetaExpansion theta_pentagonal(Count k_limit, std::size_t order);
/// 1 + 2 sum_{j=1}^{k_limit} (-1)^j q^{j^2}.
ThetaExpansion theta_square(Count k_limit, std::size_t order);
/// sum_{j=0}^{k_limit-1} (-1)^j q^{j(2j+1)} (1 - q^{2j+1}).
ThetaExpansion theta_triangular(Count k_limit, std::size_t order);
/// 1 + sum_{j>=1} (-1)^j (q^{j(mj+m-2r)/2} + q^{j(mj-m+2r)/2}); requires 1 <= r <= m/2.
ThetaExpansion theta_jmr(std::size_t m, std::size_t r, std::size_t order);
/// sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}.
ThetaExpansion theta_cube(std::size_t order);

}  // namespace qtrunc
