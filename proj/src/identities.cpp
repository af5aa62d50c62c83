#include "qtrunc/identities.hpp"

#include <array>
#include <stdexcept>

namespace qtrunc {
namespace {

struct KindInfo {
  IdentityKind kind;
  std::string_view token;
};

constexpr std::array kKinds{
    KindInfo{IdentityKind::EulerPent, "euler_pent"},
    KindInfo{IdentityKind::GaussSquare, "gauss_square"},
    KindInfo{IdentityKind::GaussTriangular, "gauss_triangular"},
    KindInfo{IdentityKind::AmTruncated, "am_truncated"},
    KindInfo{IdentityKind::Thm1, "thm1"},
    KindInfo{IdentityKind::Thm3, "thm3"},
    KindInfo{IdentityKind::Agj, "agj"},
    KindInfo{IdentityKind::AgjGauss, "agj_gauss"},
    KindInfo{IdentityKind::QbtSpecial, "qbt_special"},
    KindInfo{IdentityKind::Shanks, "shanks"},
    KindInfo{IdentityKind::JtpSpecial, "jtp_special"},
    KindInfo{IdentityKind::JacobiCube, "jacobi_cube"},
    KindInfo{IdentityKind::LemmaS2, "lemma_s2"},
    KindInfo{IdentityKind::LemmaS5, "lemma_s5"},
    KindInfo{IdentityKind::NewOvp, "newovp"},
};

const BigInt kOne = 1;
const BigInt kMinusOne = -1;

BigInt sign_of(long j) { return j % 2 == 0 ? kOne : kMinusOne; }

std::size_t to_size(long v) { return static_cast<std::size_t>(v); }

// (c q^shift; q^step)_count with c = +1 or -1.
IntSeries times_poch(IntSeries s, int c, std::size_t shift, std::size_t step, long count) {
  if (count <= 0) return s;
  return multiply_by_poch(std::move(s), PochSpec{c, shift, step, to_size(count)});
}

IntSeries over_poch(IntSeries s, int c, std::size_t shift, std::size_t step, long count) {
  if (count <= 0) return s;
  return divide_by_poch(std::move(s), PochSpec{c, shift, step, to_size(count)});
}

IntSeries times_inf(IntSeries s, int c, std::size_t shift, std::size_t step) {
  return multiply_by_poch(std::move(s), PochSpec{c, shift, step, infinite});
}

IntSeries over_inf(IntSeries s, int c, std::size_t shift, std::size_t step) {
  return divide_by_poch(std::move(s), PochSpec{c, shift, step, infinite});
}

IntSeries monomial(const BigInt& c, long e, std::size_t order) {
  return IntSeries::monomial(c, to_size(e), order);
}

// (-q)_inf / (q)_inf
IntSeries overpartition_series(std::size_t order) {
  return over_inf(times_inf(IntSeries::one(order), -1, 1, 1), 1, 1, 1);
}

// First index n >= first whose term has least q-power >= order. Every
// infinite sum handled here has a least q-power that grows with the index.
template <class MinPower>
long tail_end(long first, std::size_t order, MinPower min_power) {
  long n = first;
  while (min_power(n) < static_cast<long>(order)) ++n;
  return n;
}

IdentitySides<BigInt> am_truncated(int k, std::size_t N, std::size_t extra) {
  IntSeries lhs(N);
  for (long j = 0; j < k; ++j) {
    const long e = j * (3 * j + 1) / 2;
    lhs += monomial(sign_of(j), e, N);
    lhs -= monomial(sign_of(j), e + 2 * j + 1, N);
  }
  lhs = over_inf(std::move(lhs), 1, 1, 1);

  const long binom_k = static_cast<long>(k) * (k - 1) / 2;
  auto power = [&](long n) { return (k + 1) * n + binom_k; };
  IntSeries sum(N);
  const long end = tail_end(k, N, power) + static_cast<long>(extra);
  for (long n = k; n < end; ++n) {
    IntSeries term = shift(q_binomial(n - 1, k - 1, 1, N), to_size(power(n)));
    sum += over_poch(std::move(term), 1, 1, 1, n);
  }
  IntSeries rhs = IntSeries::one(N) + sum * sign_of(k - 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> thm1(int k, std::size_t N, std::size_t extra) {
  IntSeries lhs = overpartition_series(N) * theta_square(to_size(k), N).materialize();

  auto power = [&](long n) { return (k + 1) * n; };
  IntSeries sum(N);
  const long end = tail_end(k + 1, N, power) + static_cast<long>(extra);
  for (long n = k + 1; n < end; ++n) {
    IntSeries term = shift(q_binomial(n - 1, k, 1, N), to_size(power(n)));
    term = times_poch(std::move(term), -1, 1, 1, k);      // (-q)_k
    term = times_poch(std::move(term), -1, 0, 1, n - k);  // (-1)_{n-k}
    sum += over_poch(std::move(term), 1, 1, 1, n);
  }
  IntSeries rhs = IntSeries::one(N) + sum * sign_of(k);
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> thm3(int k, std::size_t N, std::size_t extra) {
  IntSeries lhs = over_inf(times_inf(IntSeries::one(N), -1, 1, 2), 1, 2, 2) *
                  theta_triangular(to_size(k), N).materialize();

  auto power = [&](long n) { return 2 * (k + 1) * n - k; };
  IntSeries sum(N);
  const long end = tail_end(k, N, power) + static_cast<long>(extra);
  for (long n = k; n < end; ++n) {
    IntSeries term = shift(q_binomial(n - 1, k - 1, 2, N), to_size(power(n)));
    term = times_poch(std::move(term), -1, 1, 2, k);      // (-q;q^2)_k
    term = times_poch(std::move(term), -1, 1, 2, n - k);  // (-q;q^2)_{n-k}
    sum += over_poch(std::move(term), 1, 2, 2, n);        // (q^2;q^2)_n
  }
  IntSeries rhs = IntSeries::one(N) + sum * sign_of(k - 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> newovp(int k, std::size_t N, std::size_t extra) {
  IntSeries theta = theta_square(to_size(k - 1), N).materialize();
  theta += monomial(sign_of(k), static_cast<long>(k) * k, N);
  IntSeries lhs = overpartition_series(N) * theta * sign_of(k - 1);

  IntSeries rhs = monomial(sign_of(k - 1), 0, N);
  auto first_power = [&](long n) { return k * n; };
  const long end1 = tail_end(k, N, first_power) + static_cast<long>(extra);
  for (long n = k; n < end1; ++n) {
    IntSeries term = shift(q_binomial(n - 1, k - 1, 1, N), to_size(first_power(n)));
    term = times_poch(std::move(term), -1, 1, 1, k - 1);  // (-q)_{k-1}
    term = times_poch(std::move(term), -1, 1, 1, n - k);  // (-q)_{n-k}
    rhs += over_poch(std::move(term), 1, 1, 1, n);
  }
  auto second_power = [&](long n) { return (k + 1) * n; };
  const long end2 = tail_end(k + 1, N, second_power) + static_cast<long>(extra);
  for (long n = k + 1; n < end2; ++n) {
    IntSeries term = shift(q_binomial(n - 1, k, 1, N), to_size(second_power(n)));
    term = times_poch(std::move(term), -1, 1, 1, k);          // (-q)_k
    term = times_poch(std::move(term), -1, 1, 1, n - k - 1);  // (-q)_{n-k-1}
    rhs -= over_poch(std::move(term), 1, 1, 1, n);
  }
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> qbt_special(int k, std::size_t N, std::size_t extra) {
  auto power = [&](long i) { return (k + 1) * i; };
  IntSeries lhs(N);
  const long end = tail_end(0, N, power) + static_cast<long>(extra);
  for (long i = 0; i < end; ++i) {
    IntSeries term = times_poch(monomial(kOne, power(i), N), -1, 0, 1, i);  // (-1)_i
    lhs += over_poch(std::move(term), 1, 1, 1, i);
  }
  const std::size_t s = to_size(k + 1);
  IntSeries rhs = over_inf(times_inf(IntSeries::one(N), -1, s, 1), 1, s, 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> agj_gauss(int n, std::size_t N) {
  IntSeries lhs = theta_square(to_size(n), N).materialize();
  IntSeries sum(N);
  for (long j = 0; j <= n; ++j) {
    IntSeries term = times_poch(monomial(sign_of(j), (n + 1) * j, N), -1, 0, 1, j);  // (-1)_j
    sum += over_poch(std::move(term), 1, 1, 1, j);
  }
  sum = times_poch(std::move(sum), 1, 1, 1, n);  // (q)_n
  IntSeries rhs = over_poch(std::move(sum), -1, 1, 1, n);  // (-q)_n
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> shanks(int n, std::size_t N) {
  IntSeries lhs(N);
  IntSeries rhs(N);
  for (long j = 0; j < n; ++j) {
    const long e = j * (2 * j + 1);
    lhs += monomial(kOne, e, N);
    lhs += monomial(kOne, e + 2 * j + 1, N);

    IntSeries term = times_poch(monomial(kOne, j * (2 * n + 1), N), 1, 1, 2, j);  // (q;q^2)_j
    term = times_poch(std::move(term), 1, 2, 2, n);                              // (q^2;q^2)_n
    term = over_poch(std::move(term), 1, 2, 2, j);                               // (q^2;q^2)_j
    rhs += over_poch(std::move(term), 1, 1, 2, n);                               // (q;q^2)_n
  }
  return {std::move(lhs), std::move(rhs)};
}

// Sum over j <= min(k, n) of (-1)^j (-1)_j (-1)_{n-j} / ((q)_j (q)_{n-j}); terms
// with n - j < 0 vanish since 1/(q)_m = 0 for negative m.
IdentitySides<BigInt> lemma_s2(int n, int k, std::size_t N) {
  IntSeries lhs(N);
  for (long j = 0; j <= std::min(k, n); ++j) {
    IntSeries term = times_poch(monomial(sign_of(j), 0, N), -1, 0, 1, j);
    term = times_poch(std::move(term), -1, 0, 1, n - j);
    term = over_poch(std::move(term), 1, 1, 1, j);
    lhs += over_poch(std::move(term), 1, 1, 1, n - j);
  }
  IntSeries rhs(N);
  if (n >= k + 1) {
    rhs = times_poch(monomial(sign_of(k), 0, N), -1, 1, 1, k);  // (-q)_k
    rhs = times_poch(std::move(rhs), -1, 0, 1, n - k);          // (-1)_{n-k}
    rhs = divide_one_minus(std::move(rhs), kOne, to_size(n));   // 1 - q^n
    rhs = over_poch(std::move(rhs), 1, 1, 1, n - k - 1);
    rhs = over_poch(std::move(rhs), 1, 1, 1, k);
  }
  return {std::move(lhs), std::move(rhs)};
}

// q^i (-q^{-1}; q^2)_i written as prod_{t < i} (q^{2t} + q), so no negative
// power of q is ever formed.
IntSeries times_shifted_minus_inverse_poch(IntSeries s, long i) {
  for (long t = 0; t < i; ++t) {
    s = multiply_sparse(s, SparseTerms<BigInt>{{to_size(2 * t), kOne}, {1, kOne}});
  }
  return s;
}

IdentitySides<BigInt> lemma_s5(int n, int k, std::size_t N) {
  IntSeries lhs(N);
  for (long j = 0; j <= std::min(k - 1, n); ++j) {
    IntSeries term = times_poch(monomial(sign_of(j), 0, N), -1, 1, 2, j);  // (-q;q^2)_j
    term = times_shifted_minus_inverse_poch(std::move(term), n - j);
    term = over_poch(std::move(term), 1, 2, 2, j);
    lhs += over_poch(std::move(term), 1, 2, 2, n - j);
  }
  IntSeries rhs(N);
  if (n >= k) {
    rhs = times_poch(monomial(sign_of(k - 1), n - k, N), -1, 1, 2, k);  // (-q;q^2)_k q^{n-k}
    rhs = times_poch(std::move(rhs), -1, 1, 2, n - k);                  // (-q;q^2)_{n-k}
    rhs = divide_one_minus(std::move(rhs), kOne, to_size(2 * n));       // 1 - q^{2n}
    rhs = over_poch(std::move(rhs), 1, 2, 2, n - k);
    rhs = over_poch(std::move(rhs), 1, 2, 2, k - 1);
  }
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides<BigInt> jtp_special(int m, int r, std::size_t N) {
  IntSeries lhs = theta_jmr(to_size(m), to_size(r), N).materialize();
  IntSeries rhs = times_inf(IntSeries::one(N), 1, to_size(r), to_size(m));
  rhs = times_inf(std::move(rhs), 1, to_size(m - r), to_size(m));
  rhs = times_inf(std::move(rhs), 1, to_size(m), to_size(m));
  return {std::move(lhs), std::move(rhs)};
}

template <CoefficientRing R>
IdentityReport compare(const IdentityId& id, std::size_t order, const IdentitySides<R>& sides) {
  IdentityReport report{id, order, std::nullopt};
  for (std::size_t i = 0; i < order; ++i) {
    if (sides.lhs[i] != sides.rhs[i]) {
      report.first_mismatch = Mismatch{i, RingTraits<R>::render(sides.lhs[i]), RingTraits<R>::render(sides.rhs[i])};
      break;
    }
  }
  return report;
}

}  // namespace

std::string IdentityId::token() const {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return std::string(info.token);
  }
  return "?";
}

std::vector<std::pair<std::string, int>> IdentityId::params() const {
  switch (kind) {
    case IdentityKind::AmTruncated:
    case IdentityKind::Thm1:
    case IdentityKind::Thm3:
    case IdentityKind::NewOvp:
    case IdentityKind::QbtSpecial:
      return {{"k", k}};
    case IdentityKind::Agj:
    case IdentityKind::AgjGauss:
    case IdentityKind::Shanks:
      return {{"n", n}};
    case IdentityKind::JtpSpecial:
      return {{"m", m}, {"r", r}};
    case IdentityKind::LemmaS2:
    case IdentityKind::LemmaS5:
      return {{"n", n}, {"k", k}};
    default:
      return {};
  }
}

std::string IdentityId::name() const {
  std::string out = token();
  const auto ps = params();
  if (ps.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ',';
    out += ps[i].first + "=" + std::to_string(ps[i].second);
  }
  return out + ')';
}

bool IdentityId::has_tail() const {
  switch (kind) {
    case IdentityKind::AmTruncated:
    case IdentityKind::Thm1:
    case IdentityKind::Thm3:
    case IdentityKind::NewOvp:
    case IdentityKind::QbtSpecial:
      return true;
    default:
      return false;
  }
}

void IdentityId::validate() const {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(name() + ": " + what);
  };
  switch (kind) {
    case IdentityKind::AmTruncated:
    case IdentityKind::Thm1:
    case IdentityKind::Thm3:
    case IdentityKind::NewOvp:
      require(k >= 1, "k must be >= 1");
      break;
    case IdentityKind::QbtSpecial:
      require(k >= 0, "k must be >= 0");
      break;
    case IdentityKind::Agj:
    case IdentityKind::AgjGauss:
    case IdentityKind::Shanks:
      require(n >= 0, "n must be >= 0");
      break;
    case IdentityKind::JtpSpecial:
      require(r >= 1 && 2 * r <= m, "requires 1 <= r <= m/2");
      break;
    case IdentityKind::LemmaS2:
      require(n >= 1 && k >= 0, "requires n >= 1 and k >= 0");
      break;
    case IdentityKind::LemmaS5:
      require(n >= 1 && k >= 1, "requires n >= 1 and k >= 1");
      break;
    default:
      break;
  }
}

std::optional<IdentityKind> identity_kind_from_token(std::string_view token) {
  for (const auto& info : kKinds) {
    if (info.token == token) return info.kind;
  }
  return std::nullopt;
}

std::vector<std::string_view> identity_tokens() {
  std::vector<std::string_view> out;
  for (const auto& info : kKinds) out.push_back(info.token);
  return out;
}

IdentitySides<BigInt> integer_sides(const IdentityId& id, std::size_t order, std::size_t extra_tail_terms) {
  id.validate();
  if (order == 0) throw std::invalid_argument("truncation order must be positive");
  const std::size_t N = order;
  switch (id.kind) {
    case IdentityKind::EulerPent:
      return {theta_pentagonal(infinite, N).materialize(), poch({1, 1, 1, infinite}, N)};
    case IdentityKind::GaussSquare:
      return {theta_square(infinite, N).materialize(), over_inf(poch({1, 1, 1, infinite}, N), -1, 1, 1)};
    case IdentityKind::GaussTriangular:
      return {theta_triangular(infinite, N).materialize(), over_inf(poch({1, 2, 2, infinite}, N), -1, 1, 2)};
    case IdentityKind::JacobiCube: {
      IntSeries euler = poch({1, 1, 1, infinite}, N);
      return {theta_cube(N).materialize(), euler * euler * euler};
    }
    case IdentityKind::AmTruncated: return am_truncated(id.k, N, extra_tail_terms);
    case IdentityKind::Thm1: return thm1(id.k, N, extra_tail_terms);
    case IdentityKind::Thm3: return thm3(id.k, N, extra_tail_terms);
    case IdentityKind::NewOvp: return newovp(id.k, N, extra_tail_terms);
    case IdentityKind::QbtSpecial: return qbt_special(id.k, N, extra_tail_terms);
    case IdentityKind::AgjGauss: return agj_gauss(id.n, N);
    case IdentityKind::Shanks: return shanks(id.n, N);
    case IdentityKind::JtpSpecial: return jtp_special(id.m, id.r, N);
    case IdentityKind::LemmaS2: return lemma_s2(id.n, id.k, N);
    case IdentityKind::LemmaS5: return lemma_s5(id.n, id.k, N);
    case IdentityKind::Agj:
      throw std::invalid_argument("agj is checked over the bivariate ring; use agj_sides");
  }
  throw std::logic_error("unknown identity");
}

IdentitySides<BivarPoly> agj_sides(int n, std::size_t order) {
  if (n < 0) throw std::invalid_argument("agj: n must be >= 0");
  using BSeries = TruncSeries<BivarPoly>;
  const std::size_t N = order;
  const BivarPoly a = BivarPoly::a();
  const BivarPoly b = BivarPoly::b();
  const BivarPoly one = 1L;

  // prod_{i<j} (a - b q^i), which is (b/a)_j a^j without dividing by a.
  auto times_b_over_a = [&](BSeries s, long j) {
    for (long i = 0; i < j; ++i) s = multiply_sparse(s, SparseTerms<BivarPoly>{{0, a}, {to_size(i), -b}});
    return s;
  };

  // j = 0 contributes exactly 1: (b)_0 (1 - b) / (1 - b).
  BSeries lhs = BSeries::one(N);
  for (long j = 1; j <= n; ++j) {
    BSeries term = BSeries::monomial(one, to_size(j * j), N);
    term = multiply_by_poch(std::move(term), b, 1, 1, to_size(j - 1));  // (b)_j / (1 - b) = (bq)_{j-1}
    term = multiply_one_minus(std::move(term), b, to_size(2 * j));
    term = times_b_over_a(std::move(term), j);
    term = divide_by_poch(std::move(term), one, 1, 1, to_size(j));  // (q)_j
    lhs += divide_by_poch(std::move(term), a, 1, 1, to_size(j));    // (aq)_j
  }

  BSeries sum(N);
  for (long j = 0; j <= n; ++j) {
    BSeries term = times_b_over_a(BSeries::monomial(one, to_size((n + 1) * j), N), j);
    sum += divide_by_poch(std::move(term), one, 1, 1, to_size(j));
  }
  sum = multiply_by_poch(std::move(sum), b, 1, 1, to_size(n));  // (bq)_n
  BSeries rhs = divide_by_poch(std::move(sum), a, 1, 1, to_size(n));  // (aq)_n
  return {std::move(lhs), std::move(rhs)};
}

IdentityReport verify(const IdentityId& id, std::size_t order) {
  if (id.bivariate()) return compare(id, order, agj_sides(id.n, order));
  return compare(id, order, integer_sides(id, order));
}

}  // namespace qtrunc
