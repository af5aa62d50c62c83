#include <vector>

#include "doctest.h"
#include "qtrunc/identities.hpp"
#include "qtrunc/partition_functions.hpp"

using namespace qtrunc;

namespace {

std::vector<long> as_longs(const IntSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

IntSeries evaluate(const TruncSeries<BivarPoly>& s, long a, long b) {
  IntSeries out(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) out[i] = s[i].evaluate(a, b);
  return out;
}

std::vector<IdentityId> tail_identities() {
  std::vector<IdentityId> ids;
  for (int k = 1; k <= 6; ++k) {
    ids.push_back(IdentityId::am_truncated(k));
    ids.push_back(IdentityId::thm1(k));
    ids.push_back(IdentityId::thm3(k));
    ids.push_back(IdentityId::newovp(k));
  }
  for (int k = 0; k <= 6; ++k) ids.push_back(IdentityId::qbt_special(k));
  return ids;
}

}  // namespace

TEST_CASE("worked examples") {
  const auto thm1 = integer_sides(IdentityId::thm1(1), 7);
  CHECK(as_longs(thm1.lhs) == std::vector<long>{1, 0, 0, 0, -2, -4, -8});
  CHECK(as_longs(thm1.rhs) == std::vector<long>{1, 0, 0, 0, -2, -4, -8});
  CHECK(verify(IdentityId::thm1(1), 7).passed());

  const auto shanks = integer_sides(IdentityId::shanks(1), 4);
  CHECK(as_longs(shanks.lhs) == std::vector<long>{1, 1, 0, 0});
  CHECK(as_longs(shanks.rhs) == std::vector<long>{1, 1, 0, 0});

  for (std::size_t order : {1u, 5u, 40u}) {
    const auto agj = agj_sides(0, order);
    CHECK(agj.lhs == TruncSeries<BivarPoly>::one(order));
    CHECK(agj.rhs == TruncSeries<BivarPoly>::one(order));
  }

  CHECK(verify(IdentityId::jtp_special(3, 1), 64).passed());
  CHECK(integer_sides(IdentityId::jtp_special(3, 1), 64).lhs == integer_sides(IdentityId::euler_pent(), 64).lhs);

  const auto lemma = integer_sides(IdentityId::lemma_s2(1, 1), 16);
  CHECK(lemma.lhs.is_zero());
  CHECK(lemma.rhs.is_zero());
}

TEST_CASE("product identities") {
  for (auto id : {IdentityId::euler_pent(), IdentityId::gauss_square(), IdentityId::gauss_triangular(),
                  IdentityId::jacobi_cube()}) {
    INFO(id.name());
    CHECK(verify(id, 256).passed());
  }
  for (int m = 2; m <= 10; ++m) {
    for (int r = 1; 2 * r <= m; ++r) CHECK(verify(IdentityId::jtp_special(m, r), 256).passed());
  }
}

TEST_CASE("truncated identities") {
  for (int k = 1; k <= 8; ++k) {
    for (auto id : {IdentityId::am_truncated(k), IdentityId::thm1(k), IdentityId::thm3(k), IdentityId::newovp(k)}) {
      INFO(id.name());
      CHECK(verify(id, 300).passed());
    }
  }
  for (int n = 0; n <= 20; ++n) {
    CHECK(verify(IdentityId::agj_gauss(n), 200).passed());
    CHECK(verify(IdentityId::shanks(n), 200).passed());
    CHECK(verify(IdentityId::qbt_special(n), 200).passed());
  }
}

TEST_CASE("bivariate identity") {
  for (int n = 0; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(verify(IdentityId::agj(n), 60).passed());
  }
  CHECK(IdentityId::agj(3).bivariate());
  CHECK_THROWS_AS(integer_sides(IdentityId::agj(3), 10), std::invalid_argument);
}

TEST_CASE("bivariate identity specializes at a = -1, b = 1") {
  for (int n = 0; n <= 8; ++n) {
    INFO("n = " << n);
    const auto general = agj_sides(n, 60);
    const auto special = integer_sides(IdentityId::agj_gauss(n), 60);
    CHECK(evaluate(general.lhs, -1, 1) == special.lhs);
    CHECK(evaluate(general.rhs, -1, 1) == special.rhs);
  }
}

TEST_CASE("induction lemmas") {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= 8; ++k) {
      INFO("n = " << n << ", k = " << k);
      CHECK(verify(IdentityId::lemma_s2(n, k), 80).passed());
      CHECK(verify(IdentityId::lemma_s5(n, k), 80).passed());
    }
  }
  // The first sum vanishes for n <= k, the second (k terms) for n < k.
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= k; ++n) {
      CHECK(integer_sides(IdentityId::lemma_s2(n, k), 40).lhs.is_zero());
      CHECK(integer_sides(IdentityId::lemma_s5(n, k), 40).lhs.is_zero() == (n < k));
    }
  }
  CHECK_FALSE(integer_sides(IdentityId::lemma_s2(6, 2), 40).lhs.is_zero());
}

TEST_CASE("property: the overpartition series side has alternating fixed sign") {
  for (int k = 1; k <= 8; ++k) {
    const auto sides = integer_sides(IdentityId::thm1(k), 300);
    const long sign = k % 2 == 0 ? 1 : -1;
    CHECK(sides.rhs[0] == 1);
    for (std::size_t n = 1; n < 300; ++n) {
      INFO("k = " << k << ", n = " << n);
      const BigInt v = sides.rhs[n] * sign;
      REQUIRE(v >= 0);
      if (n >= static_cast<std::size_t>((k + 1) * (k + 1))) REQUIRE(v > 0);
    }
  }
}

TEST_CASE("property: truncated pentagonal sums against p(n)") {
  const ValueTable p = pf_by_recurrence(PartitionFunctionId::p(), 299);
  for (int k = 1; k <= 8; ++k) {
    const auto sides = integer_sides(IdentityId::am_truncated(k), 300);
    for (long n = 0; n < 300; ++n) {
      BigInt expected = 0;
      for (long j = 0; j < k; ++j) {
        const long s = j % 2 == 0 ? 1 : -1;
        expected += s * (p.at(n - j * (3 * j + 1) / 2) - p.at(n - (j + 1) * (3 * j + 2) / 2));
      }
      REQUIRE(sides.lhs[static_cast<std::size_t>(n)] == expected);
    }
  }
}

TEST_CASE("property: tail cutoff is sound") {
  for (const auto& id : tail_identities()) {
    REQUIRE(id.has_tail());
    for (std::size_t order : {1u, 17u, 120u}) {
      INFO(id.name() << " at order " << order);
      const auto cut = integer_sides(id, order);
      const auto longer = integer_sides(id, order, 3);
      CHECK(cut.lhs == longer.lhs);
      CHECK(cut.rhs == longer.rhs);
    }
  }
  CHECK_FALSE(IdentityId::euler_pent().has_tail());
}

TEST_CASE("comparison detects a wrong side") {
  for (int k = 1; k <= 6; ++k) {
    for (auto make : {IdentityId::am_truncated, IdentityId::thm1, IdentityId::thm3, IdentityId::newovp}) {
      const auto here = integer_sides(make(k), 100);
      const auto next = integer_sides(make(k + 1), 100);
      INFO(make(k).name());
      CHECK(here.lhs != next.rhs);
      CHECK(here.rhs != next.rhs);
    }
  }
  auto sides = integer_sides(IdentityId::shanks(4), 50);
  sides.rhs[37] += 1;
  CHECK(sides.lhs != sides.rhs);
}

TEST_CASE("report fields") {
  const IdentityReport ok = verify(IdentityId::newovp(2), 50);
  CHECK(ok.passed());
  CHECK(ok.order == 50);
  CHECK_FALSE(ok.first_mismatch.has_value());
  CHECK(IdentityId::lemma_s2(3, 2).name() == "lemma_s2(n=3,k=2)");
  CHECK(IdentityId::thm1(3).token() == "thm1");
  CHECK(identity_kind_from_token("jacobi_cube") == IdentityKind::JacobiCube);
  CHECK_FALSE(identity_kind_from_token("nonsense").has_value());
  CHECK(identity_tokens().size() == 15);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(IdentityId::thm1(0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IdentityId::am_truncated(-1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IdentityId::jtp_special(5, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IdentityId::lemma_s2(0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IdentityId::lemma_s5(2, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IdentityId::shanks(-1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(verify(IdentityId::thm3(0), 10), std::invalid_argument);
  CHECK_THROWS_AS(verify(IdentityId::agj(-2), 10), std::invalid_argument);
  CHECK_NOTHROW(IdentityId::qbt_special(0).validate());
}
