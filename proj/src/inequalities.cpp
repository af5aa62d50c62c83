#include "qtrunc/inequalities.hpp"

#include <array>
#include <stdexcept>

#include "qtrunc/identities.hpp"
#include "qtrunc/parallel.hpp"

namespace qtrunc {
namespace {

struct FamilyInfo {
  FamilyKind kind;
  std::string_view token;
};

constexpr std::array kFamilies{
    FamilyInfo{FamilyKind::AM, "am"},       FamilyInfo{FamilyKind::Cor2, "cor2"},
    FamilyInfo{FamilyKind::Cor4, "cor4"},   FamilyInfo{FamilyKind::Conj1, "conj1"},
    FamilyInfo{FamilyKind::Conj2, "conj2"}, FamilyInfo{FamilyKind::RR1, "rr1"},
    FamilyInfo{FamilyKind::RR2, "rr2"},     FamilyInfo{FamilyKind::Conj3, "conj3"},
};

long sign_of(long j) { return j % 2 == 0 ? 1 : -1; }

long halve_exact(long twice) {
  if (twice % 2 != 0) throw std::logic_error("non-integral index in inequality family");
  return twice / 2;
}

// Exponent j(5j+3)/2 (RR1) or j(5j+1)/2 (RR2), defined for negative j too.
long rr_exponent(FamilyKind variant, long j) {
  return halve_exact(j * (5 * j + (variant == FamilyKind::RR1 ? 3 : 1)));
}

int rr_residue(FamilyKind variant) { return variant == FamilyKind::RR1 ? 1 : 2; }

}  // namespace

FamilyId FamilyId::conj1(int m, int r) {
  if (r < 1 || 2 * r > m) throw std::invalid_argument("conj1 requires 1 <= r <= m/2");
  return {FamilyKind::Conj1, m, r};
}

std::string FamilyId::token() const {
  for (const auto& info : kFamilies) {
    if (info.kind == kind) return std::string(info.token);
  }
  return "?";
}

std::string FamilyId::name() const {
  if (kind != FamilyKind::Conj1) return token();
  return token() + "(m=" + std::to_string(m) + ",r=" + std::to_string(r) + ")";
}

bool FamilyId::is_conjecture() const {
  return kind != FamilyKind::AM && kind != FamilyKind::Cor2 && kind != FamilyKind::Cor4;
}

PartitionFunctionId FamilyId::function() const {
  switch (kind) {
    case FamilyKind::AM: return PartitionFunctionId::p();
    case FamilyKind::Cor2:
    case FamilyKind::Conj2: return PartitionFunctionId::overp();
    case FamilyKind::Cor4: return PartitionFunctionId::pod();
    case FamilyKind::Conj1: return PartitionFunctionId::jmr(static_cast<std::size_t>(m), static_cast<std::size_t>(r));
    case FamilyKind::RR1: return PartitionFunctionId::jmr(5, 1);
    case FamilyKind::RR2: return PartitionFunctionId::jmr(5, 2);
    case FamilyKind::Conj3: return PartitionFunctionId::t3();
  }
  throw std::logic_error("unknown family");
}

std::optional<long> FamilyId::strictness_threshold(int k) const {
  const long K = k;
  switch (kind) {
    case FamilyKind::AM: return K * (3 * K + 1) / 2;
    case FamilyKind::Cor2: return (K + 1) * (K + 1);
    case FamilyKind::Cor4: return (2 * K + 1) * K;
    case FamilyKind::Conj1: return halve_exact(K * (m * K + m - 2 * r));
    case FamilyKind::Conj2: return K * K;
    case FamilyKind::Conj3: return (K + 1) * (K + 2) / 2;
    case FamilyKind::RR1:
    case FamilyKind::RR2: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<FamilyKind> family_kind_from_token(std::string_view token) {
  for (const auto& info : kFamilies) {
    if (info.token == token) return info.kind;
  }
  return std::nullopt;
}

std::vector<std::string_view> family_tokens() {
  std::vector<std::string_view> out;
  for (const auto& info : kFamilies) out.push_back(info.token);
  return out;
}

void TableSet::add(ValueTable table) {
  const PartitionFunctionId id = table.id;
  tables_.insert_or_assign(id, std::move(table));
}

const ValueTable& TableSet::get(const PartitionFunctionId& id) const {
  auto it = tables_.find(id);
  if (it == tables_.end()) throw std::out_of_range("no value table for " + id.name());
  return it->second;
}

TableSet TableSet::for_family(const FamilyId& family, std::size_t n_max) {
  TableSet set;
  set.add(pf_by_recurrence(family.function(), n_max));
  return set;
}

BigInt family_value(const FamilyId& family, int k, long n, const TableSet& tables) {
  if (k < 1) throw std::invalid_argument("family_value needs k >= 1");
  const ValueTable& f = tables.get(family.function());
  const long K = k;
  BigInt sum = 0;
  switch (family.kind) {
    case FamilyKind::AM:
      for (long j = 0; j < K; ++j) {
        sum += sign_of(j) * (f.at(n - j * (3 * j + 1) / 2) - f.at(n - (j + 1) * (3 * j + 2) / 2));
      }
      return sum * sign_of(K - 1);
    case FamilyKind::Cor2:
      sum = f.at(n);
      for (long j = 1; j <= K; ++j) sum += 2 * sign_of(j) * f.at(n - j * j);
      return sum * sign_of(K);
    case FamilyKind::Cor4:
      for (long j = 0; j < K; ++j) {
        sum += sign_of(j) * (f.at(n - j * (2 * j + 1)) - f.at(n - (j + 1) * (2 * j + 1)));
      }
      return sum * sign_of(K - 1);
    case FamilyKind::Conj1: {
      const long m = family.m;
      const long r = family.r;
      for (long j = 0; j < K; ++j) {
        sum += sign_of(j) * (f.at(n - halve_exact(j * (m * j + m - 2 * r))) -
                             f.at(n - halve_exact((j + 1) * (m * j + 2 * r))));
      }
      return sum * sign_of(K - 1);
    }
    case FamilyKind::Conj2:
      sum = f.at(n);
      for (long j = 1; j < K; ++j) sum += 2 * sign_of(j) * f.at(n - j * j);
      return sum * sign_of(K - 1) - f.at(n - K * K);
    case FamilyKind::RR1:
    case FamilyKind::RR2:
      for (long j = -K; j < K; ++j) sum += sign_of(j) * f.at(n - rr_exponent(family.kind, j));
      sum *= sign_of(K - 1);
      if (n == 0) sum += sign_of(K);
      return sum;
    case FamilyKind::Conj3:
      for (long j = 0; j <= K; ++j) sum += sign_of(j) * (2 * j + 1) * f.at(n - j * (j + 1) / 2);
      return sum * sign_of(K);
  }
  throw std::logic_error("unknown family");
}

InequalityReport scan(const FamilyId& family, int k_max, long n_max) {
  return scan(family, k_max, n_max, TableSet::for_family(family, static_cast<std::size_t>(std::max(0L, n_max))));
}

InequalityReport scan(const FamilyId& family, int k_max, long n_max, const TableSet& tables) {
  InequalityReport report{family, k_max, n_max, {}, {}};
  if (k_max < 1) return report;
  std::vector<InequalityReport> per_k(static_cast<std::size_t>(k_max));
  parallel_for(per_k.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 1;
    const auto threshold = family.strictness_threshold(k);
    auto& out = per_k[idx];
    for (long n = 1; n <= n_max; ++n) {
      BigInt v = family_value(family, k, n, tables);
      if (v < 0) {
        out.violations.push_back({k, n, std::move(v)});
      } else if (threshold && n >= *threshold && v == 0) {
        out.strictness_violations.push_back({k, n, std::move(v)});
      }
    }
  });
  for (auto& part : per_k) {
    report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
    report.strictness_violations.insert(report.strictness_violations.end(), part.strictness_violations.begin(),
                                        part.strictness_violations.end());
  }
  return report;
}

std::optional<std::pair<int, long>> first_disagreement(const FamilyId& lhs, const FamilyId& rhs, int k_max,
                                                       long n_max) {
  const auto size = static_cast<std::size_t>(std::max(0L, n_max));
  TableSet tables = TableSet::for_family(lhs, size);
  if (!tables.contains(rhs.function())) tables.add(pf_by_recurrence(rhs.function(), size));
  for (int k = 1; k <= k_max; ++k) {
    for (long n = 1; n <= n_max; ++n) {
      if (family_value(lhs, k, n, tables) != family_value(rhs, k, n, tables)) return std::pair{k, n};
    }
  }
  return std::nullopt;
}

bool crosscheck_conj2(int k_max, std::size_t order) {
  if (order == 0) return true;
  const TableSet tables = TableSet::for_family(FamilyId::conj2(), order - 1);
  for (int k = 1; k <= k_max; ++k) {
    const auto sides = integer_sides(IdentityId::newovp(k), order);
    for (std::size_t n = 0; n < order; ++n) {
      if (sides.rhs[n] != family_value(FamilyId::conj2(), k, static_cast<long>(n), tables)) return false;
    }
  }
  return true;
}

bool crosscheck_rr(FamilyKind variant, int k_max, std::size_t order) {
  if (variant != FamilyKind::RR1 && variant != FamilyKind::RR2) {
    throw std::invalid_argument("crosscheck_rr needs rr1 or rr2");
  }
  if (order == 0) return true;
  const FamilyId rr{variant};
  const int r = rr_residue(variant);
  const FamilyId conj = FamilyId::conj1(5, r);
  const TableSet tables = TableSet::for_family(rr, order - 1);

  // 1 / (q^r, q^{5-r}, q^5; q^5)_inf built directly from the product.
  IntSeries generating = IntSeries::one(order);
  for (std::size_t s : {static_cast<std::size_t>(r), static_cast<std::size_t>(5 - r), std::size_t{5}}) {
    generating = divide_by_poch(std::move(generating), PochSpec{1, s, 5, infinite});
  }

  for (int k = 1; k <= k_max; ++k) {
    IntSeries partial(order);
    for (long j = -k; j < k; ++j) {
      partial += IntSeries::monomial(BigInt(sign_of(j)), static_cast<std::size_t>(rr_exponent(variant, j)), order);
    }
    IntSeries series = generating * partial * BigInt(sign_of(k - 1));
    series[0] += sign_of(k);
    if (series[0] != 0) return false;
    for (std::size_t n = 0; n < order; ++n) {
      const long nn = static_cast<long>(n);
      if (series[n] != family_value(rr, k, nn, tables)) return false;
      if (n >= 1 && series[n] != family_value(conj, k, nn, tables)) return false;
    }
  }
  return true;
}

}  // namespace qtrunc
