#include "qtrunc/q_objects.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qtrunc {
namespace {

BigInt poch_coefficient(const PochSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1) throw std::invalid_argument("Pochhammer sign must be +1 or -1");
  return BigInt(spec.sign);
}

std::size_t factor_count(const PochSpec& spec, std::size_t order) {
  if (spec.count) return *spec.count;
  if (spec.shift == 0) throw std::invalid_argument("infinite Pochhammer product needs shift >= 1");
  return order;  // every factor past this index is 1 modulo q^order
}

std::int64_t sign_of(std::size_t j) { return j % 2 == 0 ? 1 : -1; }

std::size_t limit_or(Count k_limit, std::size_t fallback) { return k_limit.value_or(fallback); }

// Base-q Gaussian binomials built by the Pascal rule
//   [M, K] = [M-1, K] + q^{M-K} [M-1, K-1],
// memoized per truncation order.
class QBinomialCache {
 public:
  IntSeries get(std::int64_t M, std::int64_t K, std::size_t order) {
    std::lock_guard lock(mu_);
    for (std::int64_t m = 0; m <= M; ++m) {
      const std::int64_t k_lo = std::max<std::int64_t>(0, K - (M - m));
      const std::int64_t k_hi = std::min(m, K);
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const Key key{m, k, order};
        if (memo_.contains(key)) continue;
        memo_.emplace(key, pascal_step(m, k, order));
      }
    }
    return memo_.at(Key{M, K, order});
  }

 private:
  using Key = std::tuple<std::int64_t, std::int64_t, std::size_t>;

  IntSeries pascal_step(std::int64_t m, std::int64_t k, std::size_t order) const {
    if (k == 0 || k == m) return IntSeries::one(order);
    IntSeries out = memo_.at(Key{m - 1, k, order});
    out += shift(memo_.at(Key{m - 1, k - 1, order}), static_cast<std::size_t>(m - k));
    return out;
  }

  std::mutex mu_;
  std::map<Key, IntSeries> memo_;
};

QBinomialCache& qbinomial_cache() {
  static QBinomialCache cache;
  return cache;
}

}  // namespace

IntSeries poch(const PochSpec& spec, std::size_t order) {
  return multiply_by_poch(IntSeries::one(order), spec);
}

IntSeries multiply_by_poch(IntSeries s, const PochSpec& spec) {
  const std::size_t n = factor_count(spec, s.order());
  return multiply_by_poch(std::move(s), poch_coefficient(spec), spec.shift, spec.step, n);
}

IntSeries divide_by_poch(IntSeries s, const PochSpec& spec) {
  const std::size_t n = factor_count(spec, s.order());
  return divide_by_poch(std::move(s), poch_coefficient(spec), spec.shift, spec.step, n);
}

IntSeries q_binomial(std::int64_t M, std::int64_t K, std::size_t base_power, std::size_t order) {
  if (base_power == 0) throw std::invalid_argument("q-binomial base power must be positive");
  IntSeries out(order);
  if (M < 0 || K < 0 || K > M) return out;
  const std::size_t base_order = (order + base_power - 1) / base_power;
  const IntSeries base = qbinomial_cache().get(M, K, base_order);
  for (std::size_t j = 0; j < base_order; ++j) out[j * base_power] = base[j];
  return out;
}

ThetaExpansion::ThetaExpansion(std::vector<ThetaTerm> terms, std::size_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
  std::map<std::size_t, std::int64_t> merged;
  for (const auto& t : terms) {
    if (t.exponent < order) merged[t.exponent] += t.coeff;
  }
  for (const auto& [e, c] : merged) {
    if (c != 0 || e == 0) terms_.push_back({e, c});
  }
  if (terms_.empty() || terms_.front().exponent != 0 || terms_.front().coeff != 1) {
    throw std::invalid_argument("theta expansion must start with the term 1");
  }
}

IntSeries ThetaExpansion::materialize() const {
  IntSeries s(order_);
  for (const auto& t : terms_) s[t.exponent] = BigInt(static_cast<long>(t.coeff));
  return s;
}

ThetaExpansion theta_pentagonal(Count k_limit, std::size_t order) {
  std::vector<ThetaTerm> terms{{0, 1}};
  const std::size_t limit = limit_or(k_limit, order);
  for (std::size_t j = 1; j <= limit; ++j) {
    const std::size_t lo = j * (3 * j - 1) / 2;
    if (lo >= order) break;
    terms.push_back({lo, sign_of(j)});
    terms.push_back({j * (3 * j + 1) / 2, sign_of(j)});
  }
  return {std::move(terms), order};
}

ThetaExpansion theta_square(Count k_limit, std::size_t order) {
  std::vector<ThetaTerm> terms{{0, 1}};
  const std::size_t limit = limit_or(k_limit, order);
  for (std::size_t j = 1; j <= limit && j * j < order; ++j) terms.push_back({j * j, 2 * sign_of(j)});
  return {std::move(terms), order};
}

ThetaExpansion theta_triangular(Count k_limit, std::size_t order) {
  if (k_limit && *k_limit == 0) throw std::invalid_argument("theta_triangular needs k_limit >= 1");
  std::vector<ThetaTerm> terms;
  const std::size_t limit = limit_or(k_limit, order + 1);
  for (std::size_t j = 0; j < limit; ++j) {
    const std::size_t lo = j * (2 * j + 1);
    if (lo >= order) break;
    terms.push_back({lo, sign_of(j)});
    terms.push_back({(j + 1) * (2 * j + 1), -sign_of(j)});
  }
  return {std::move(terms), order};
}

ThetaExpansion theta_jmr(std::size_t m, std::size_t r, std::size_t order) {
  if (r < 1 || 2 * r > m) throw std::invalid_argument("theta_jmr requires 1 <= r <= m/2");
  std::vector<ThetaTerm> terms{{0, 1}};
  for (std::size_t j = 1;; ++j) {
    // j(mj - m + 2r)/2 <= j(mj + m - 2r)/2, and both grow with j.
    const std::size_t lo = j * (m * j - m + 2 * r) / 2;
    if (lo >= order) break;
    terms.push_back({lo, sign_of(j)});
    terms.push_back({j * (m * j + m - 2 * r) / 2, sign_of(j)});
  }
  return {std::move(terms), order};
}

ThetaExpansion theta_cube(std::size_t order) {
  std::vector<ThetaTerm> terms;
  for (std::size_t j = 0; j * (j + 1) / 2 < order; ++j) {
    terms.push_back({j * (j + 1) / 2, sign_of(j) * static_cast<std::int64_t>(2 * j + 1)});
  }
  return {std::move(terms), order};
}

}  // namespace qtrunc
