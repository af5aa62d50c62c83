#include <vector>

#include "doctest.h"
#include "qtrunc/combinatorics.hpp"
#include "qtrunc/inequalities.hpp"

using namespace qtrunc;

namespace {

std::vector<long> values(const FamilyId& f, int k, long from, long to) {
  const TableSet tables = TableSet::for_family(f, static_cast<std::size_t>(to));
  std::vector<long> out;
  for (long n = from; n <= to; ++n) out.push_back(family_value(f, k, n, tables).get_si());
  return out;
}

}  // namespace

TEST_CASE("family values") {
  CHECK(values(FamilyId::cor2(), 1, 1, 6) == std::vector<long>{0, 0, 0, 2, 4, 8});
  CHECK(values(FamilyId::cor4(), 2, 6, 6) == std::vector<long>{0});
  CHECK(values(FamilyId::conj3(), 1, 1, 1) == std::vector<long>{0});
  CHECK(values(FamilyId::conj2(), 1, 1, 6) == std::vector<long>{1, 2, 4, 6, 10, 16});
  CHECK(values(FamilyId::cor4(), 1, 1, 10) == std::vector<long>{0, 0, 1, 1, 1, 1, 2, 3, 3, 3});
}

TEST_CASE("equality cases below threshold") {
  const TableSet p = TableSet::for_family(FamilyId::am(), 10);
  const TableSet pod = TableSet::for_family(FamilyId::cor4(), 10);
  const auto& pv = p.get(PartitionFunctionId::p());
  const auto& podv = pod.get(PartitionFunctionId::pod());
  CHECK(pv.at(5) - pv.at(4) - pv.at(3) + pv.at(0) == 0);
  CHECK(podv.at(6) - podv.at(5) - podv.at(3) + podv.at(0) == 0);
  // Both are the k = 2 values, sign included.
  CHECK(family_value(FamilyId::am(), 2, 5, p) == 0);
  CHECK(family_value(FamilyId::cor4(), 2, 6, pod) == 0);
  CHECK(*FamilyId::am().strictness_threshold(2) == 7);
  CHECK(*FamilyId::cor4().strictness_threshold(2) == 10);
}

TEST_CASE("family values against enumeration") {
  const TableSet tables = TableSet::for_family(FamilyId::am(), 30);
  for (long n = 1; n <= 30; ++n) {
    const auto p = [](long m) { return m < 0 ? 0L : static_cast<long>(count_partitions(static_cast<int>(m))); };
    CHECK(family_value(FamilyId::am(), 1, n, tables) == p(n) - p(n - 1));
    CHECK(family_value(FamilyId::am(), 2, n, tables) == -(p(n) - p(n - 1) - p(n - 2) + p(n - 5)));
  }
  const TableSet j51 = TableSet::for_family(FamilyId::conj1(5, 1), 30);
  for (long n = 1; n <= 30; ++n) {
    const auto J = [](long m) { return m < 0 ? 0L : static_cast<long>(count_jmr(static_cast<int>(m), 5, 1)); };
    CHECK(family_value(FamilyId::conj1(5, 1), 1, n, j51) == J(n) - J(n - 1));
  }
}

TEST_CASE("thresholds") {
  CHECK(*FamilyId::am().strictness_threshold(3) == 15);
  CHECK(*FamilyId::cor2().strictness_threshold(3) == 16);
  CHECK(*FamilyId::cor4().strictness_threshold(3) == 21);
  CHECK(*FamilyId::conj1(5, 2).strictness_threshold(2) == 11);
  CHECK(*FamilyId::conj1(3, 1).strictness_threshold(4) == *FamilyId::am().strictness_threshold(4));
  CHECK(*FamilyId::conj1(4, 1).strictness_threshold(4) == *FamilyId::cor4().strictness_threshold(4));
  CHECK(*FamilyId::conj2().strictness_threshold(3) == 9);
  CHECK(*FamilyId::conj3().strictness_threshold(3) == 10);
  CHECK_FALSE(FamilyId::rr1().strictness_threshold(3).has_value());
}

TEST_CASE("proved families scan clean") {
  for (const FamilyId& f : {FamilyId::am(), FamilyId::cor2(), FamilyId::cor4()}) {
    INFO(f.name());
    const InequalityReport report = scan(f, 12, 1000);
    CHECK(report.violations.empty());
    CHECK(report.strictness_violations.empty());
    CHECK(report.passed());
    CHECK_FALSE(f.is_conjecture());
  }
}

TEST_CASE("small scans") {
  const InequalityReport r = scan(FamilyId::cor4(), 1, 10);
  CHECK(r.passed());
  CHECK(scan(FamilyId::conj3(), 6, 500).passed());
  CHECK(scan(FamilyId::conj2(), 10, 800).passed());
  CHECK(scan(FamilyId::conj3(), 10, 800).passed());
  CHECK(scan(FamilyId::rr1(), 8, 499).passed());
  CHECK(scan(FamilyId::rr2(), 8, 499).passed());
  CHECK(scan(FamilyId::am(), 0, 100).passed());
}

TEST_CASE("conjecture scans: sign part") {
  for (int m = 2; m <= 10; ++m) {
    for (int r = 1; 2 * r <= m; ++r) {
      INFO("m = " << m << ", r = " << r);
      CHECK(scan(FamilyId::conj1(m, r), 8, 800).violations.empty());
    }
  }
}

TEST_CASE("scanner reports a strictness counterexample as found") {
  // J_{5,1}(7) = J_{5,1}(6) = 4, while the claimed threshold at k = 1 is 4.
  const InequalityReport r = scan(FamilyId::conj1(5, 1), 1, 20);
  REQUIRE(r.strictness_violations.size() == 1);
  CHECK(r.strictness_violations[0].k == 1);
  CHECK(r.strictness_violations[0].n == 7);
  CHECK(count_jmr(7, 5, 1) == count_jmr(6, 5, 1));
  CHECK(r.violations.empty());
  CHECK_FALSE(r.passed());
  CHECK(r.family.is_conjecture());

  // With r = m/2 every part is even, so odd n give zero for all k.
  const InequalityReport even = scan(FamilyId::conj1(4, 2), 2, 15);
  for (const auto& v : even.strictness_violations) CHECK(v.n % 2 == 1);
  CHECK(count_jmr(7, 4, 2) == 0);
}

TEST_CASE("equivalent families") {
  CHECK_FALSE(first_disagreement(FamilyId::conj1(3, 1), FamilyId::am(), 8, 800).has_value());
  CHECK_FALSE(first_disagreement(FamilyId::conj1(2, 1), FamilyId::conj2(), 8, 800).has_value());
  CHECK_FALSE(first_disagreement(FamilyId::conj1(4, 1), FamilyId::cor4(), 8, 800).has_value());
  CHECK_FALSE(first_disagreement(FamilyId::conj1(5, 1), FamilyId::rr1(), 8, 499).has_value());
  CHECK_FALSE(first_disagreement(FamilyId::conj1(5, 2), FamilyId::rr2(), 8, 499).has_value());
  const auto where = first_disagreement(FamilyId::am(), FamilyId::cor2(), 3, 50);
  REQUIRE(where.has_value());
  CHECK(where->first == 1);
}

TEST_CASE("generating function cross-checks") {
  CHECK(crosscheck_conj2(5, 200));
  CHECK(crosscheck_rr(FamilyKind::RR1, 5, 200));
  CHECK(crosscheck_rr(FamilyKind::RR2, 5, 200));
  CHECK(crosscheck_rr(FamilyKind::RR1, 5, 301));
  CHECK_THROWS_AS(crosscheck_rr(FamilyKind::AM, 2, 10), std::invalid_argument);

  const TableSet rr = TableSet::for_family(FamilyId::rr1(), 5);
  CHECK(family_value(FamilyId::rr1(), 1, 0, rr) == 0);
  CHECK(family_value(FamilyId::rr1(), 2, 0, rr) == 0);
}

TEST_CASE("family ids") {
  CHECK(FamilyId::conj1(5, 2).name() == "conj1(m=5,r=2)");
  CHECK(FamilyId::cor2().name() == "cor2");
  CHECK(FamilyId::rr2().function() == PartitionFunctionId::jmr(5, 2));
  CHECK(family_kind_from_token("conj3") == FamilyKind::Conj3);
  CHECK_FALSE(family_kind_from_token("conj9").has_value());
  CHECK_THROWS_AS(FamilyId::conj1(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(family_value(FamilyId::am(), 0, 4, TableSet::for_family(FamilyId::am(), 5)), std::invalid_argument);
  CHECK_THROWS_AS(family_value(FamilyId::am(), 1, 9, TableSet::for_family(FamilyId::am(), 5)), std::out_of_range);
  CHECK_THROWS_AS(TableSet{}.get(PartitionFunctionId::p()), std::out_of_range);
}
