#include "qtrunc/partition_functions.hpp"

#include <stdexcept>

namespace qtrunc {

PartitionFunctionId PartitionFunctionId::jmr(std::size_t m, std::size_t r) {
  if (r < 1 || 2 * r > m) throw std::invalid_argument("J_{m,r} requires 1 <= r <= m/2");
  return {PartitionKind::Jmr, m, r};
}

std::string PartitionFunctionId::name() const {
  switch (kind) {
    case PartitionKind::P: return "p";
    case PartitionKind::Overp: return "overp";
    case PartitionKind::Pod: return "pod";
    case PartitionKind::T3: return "t3";
    case PartitionKind::Jmr: return "jmr(" + std::to_string(m) + "," + std::to_string(r) + ")";
  }
  return "?";
}

ThetaExpansion reciprocal_theta(const PartitionFunctionId& id, std::size_t order) {
  switch (id.kind) {
    case PartitionKind::P: return theta_pentagonal(infinite, order);
    case PartitionKind::Overp: return theta_square(infinite, order);
    case PartitionKind::Pod: return theta_triangular(infinite, order);
    case PartitionKind::Jmr: return theta_jmr(id.m, id.r, order);
    case PartitionKind::T3: return theta_cube(order);
  }
  throw std::logic_error("unknown partition function");
}

BigInt ValueTable::at(long n) const {
  if (n < 0) return 0;
  if (static_cast<std::size_t>(n) >= values.size()) {
    throw std::out_of_range(id.name() + " table does not cover n = " + std::to_string(n));
  }
  return values[static_cast<std::size_t>(n)];
}

ValueTable pf_by_recurrence(const PartitionFunctionId& id, std::size_t n_max) {
  const ThetaExpansion theta = reciprocal_theta(id, n_max + 1);
  const auto& terms = theta.terms();
  std::vector<BigInt> f(n_max + 1);
  f[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i < terms.size() && terms[i].exponent <= n; ++i) {
      acc -= f[n - terms[i].exponent] * static_cast<long>(terms[i].coeff);
    }
    f[n] = std::move(acc);
  }
  return {id, std::move(f)};
}

ValueTable pf_by_product(const PartitionFunctionId& id, std::size_t n_max) {
  const std::size_t order = n_max + 1;
  IntSeries s = IntSeries::one(order);
  const BigInt one = 1;
  const BigInt minus_one = -1;
  auto over = [&](std::size_t e) { s = divide_one_minus(std::move(s), one, e); };
  auto times_plus = [&](std::size_t e) { s = multiply_one_minus(std::move(s), minus_one, e); };

  switch (id.kind) {
    case PartitionKind::P:
      for (std::size_t e = 1; e < order; ++e) over(e);
      break;
    case PartitionKind::Overp:  // (-q)_inf / (q)_inf
      for (std::size_t e = 1; e < order; ++e) {
        times_plus(e);
        over(e);
      }
      break;
    case PartitionKind::Pod:  // prod (1 + q^{2n-1}) / (1 - q^{2n})
      for (std::size_t e = 1; e < order; ++e) {
        if (e % 2 == 1) {
          times_plus(e);
        } else {
          over(e);
        }
      }
      break;
    case PartitionKind::Jmr:  // 1 / (q^r, q^{m-r}, q^m; q^m)_inf
      for (std::size_t e = 1; e < order; ++e) {
        const std::size_t res = e % id.m;
        if (res == 0) over(e);
        if (res == id.r) over(e);
        if (res == id.m - id.r) over(e);
      }
      break;
    case PartitionKind::T3:
      for (std::size_t e = 1; e < order; ++e) {
        over(e);
        over(e);
        over(e);
      }
      break;
  }
  return {id, std::vector<BigInt>(s.coeffs().begin(), s.coeffs().end())};
}

CrossCheck pf_crosscheck(const PartitionFunctionId& id, std::size_t n_max) {
  const ValueTable rec = pf_by_recurrence(id, n_max);
  const ValueTable prod = pf_by_product(id, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (rec.values[n] != prod.values[n]) return {n};
  }
  return {};
}

}  // namespace qtrunc
