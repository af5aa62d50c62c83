#include "qtrunc/suite.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "qtrunc/combinatorics.hpp"
#include "qtrunc/parallel.hpp"

namespace qtrunc {
namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Task {
  SuiteEntry entry;
  std::function<Outcome()> run;
};

Outcome from_identity(const IdentityReport& report) {
  if (report.passed()) return {true, ""};
  const Mismatch& mm = *report.first_mismatch;
  return {false, "q^" + std::to_string(mm.power) + ": " + mm.lhs + " != " + mm.rhs};
}

Outcome from_scan(const InequalityReport& report) {
  if (report.passed()) return {true, ""};
  const Violation& v = report.violations.empty() ? report.strictness_violations.front() : report.violations.front();
  return {false, std::to_string(report.violations.size()) + " sign and " +
                     std::to_string(report.strictness_violations.size()) + " strictness violations; first at k=" +
                     std::to_string(v.k) + ", n=" + std::to_string(v.n)};
}

Outcome prefix_matches(const PartitionFunctionId& id, const std::vector<long>& expected) {
  const ValueTable t = pf_by_recurrence(id, expected.size() - 1);
  for (std::size_t n = 0; n < expected.size(); ++n) {
    if (t.values[n] != expected[n]) return {false, "n=" + std::to_string(n) + " gives " + to_decimal(t.values[n])};
  }
  return {true, ""};
}

std::vector<Task> build_battery(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  auto add = [&](std::string name, std::string category, bool conjecture, std::function<Outcome()> run) {
    tasks.push_back({SuiteEntry{std::move(name), std::move(category), conjecture, false, ""}, std::move(run)});
  };
  const std::size_t order = cfg.order;
  const long n_max = cfg.n_max;
  const long conj_n = std::min(n_max, 800L);

  // Printed coefficients and the two-route cross-check.
  add("table p", "table", false, [] { return prefix_matches(PartitionFunctionId::p(), {1, 1, 2, 3, 5, 7, 11}); });
  add("table overp", "table", false,
      [] { return prefix_matches(PartitionFunctionId::overp(), {1, 2, 4, 8, 14, 24, 40}); });
  add("table pod", "table", false,
      [] { return prefix_matches(PartitionFunctionId::pod(), {1, 1, 1, 2, 3, 4, 5, 7}); });
  add("table t3", "table", false, [] {
    return prefix_matches(PartitionFunctionId::t3(), {1, 3, 9, 22, 51, 108, 221, 429, 810, 1479});
  });
  std::vector<PartitionFunctionId> ids{PartitionFunctionId::p(), PartitionFunctionId::overp(),
                                       PartitionFunctionId::pod(), PartitionFunctionId::t3()};
  for (std::size_t m = 2; m <= 10; ++m) {
    for (std::size_t r = 1; 2 * r <= m; ++r) ids.push_back(PartitionFunctionId::jmr(m, r));
  }
  for (const auto& id : ids) {
    add("crosscheck " + id.name(), "table", false, [id, n_max] {
      const CrossCheck cc = pf_crosscheck(id, static_cast<std::size_t>(n_max));
      return Outcome{cc.agree(), cc.agree() ? "" : "first mismatch at n=" + std::to_string(*cc.first_mismatch)};
    });
  }

  // Identities.
  auto identity = [&](IdentityId id, std::size_t at) {
    add(id.name(), "identity", false, [id, at] { return from_identity(verify(id, at)); });
  };
  identity(IdentityId::euler_pent(), order);
  identity(IdentityId::gauss_square(), order);
  identity(IdentityId::gauss_triangular(), order);
  identity(IdentityId::jacobi_cube(), order);
  for (int m = 2; m <= 10; ++m) {
    for (int r = 1; 2 * r <= m; ++r) identity(IdentityId::jtp_special(m, r), order);
  }
  for (int k = 1; k <= 8; ++k) {
    identity(IdentityId::am_truncated(k), order);
    identity(IdentityId::thm1(k), order);
    identity(IdentityId::thm3(k), order);
    identity(IdentityId::newovp(k), order);
  }
  for (int n = 0; n <= 20; ++n) {
    identity(IdentityId::agj_gauss(n), order);
    identity(IdentityId::shanks(n), order);
    identity(IdentityId::qbt_special(n), order);
  }
  for (int n = 0; n <= 8; ++n) identity(IdentityId::agj(n), std::min<std::size_t>(order, 60));
  for (int n = 1; n <= 40; ++n) {
    for (auto lemma : {IdentityId::lemma_s2(n, 0), IdentityId::lemma_s5(n, 0)}) {
      add(lemma.token() + "(n=" + std::to_string(n) + ",k=1..12)", "identity", false, [lemma, order] {
        for (int k = 1; k <= 12; ++k) {
          IdentityId id = lemma;
          id.k = k;
          const Outcome o = from_identity(verify(id, order));
          if (!o.passed) return Outcome{false, id.name() + " " + o.detail};
        }
        return Outcome{true, ""};
      });
    }
  }

  // Proved inequalities.
  for (const FamilyId& f : {FamilyId::am(), FamilyId::cor2(), FamilyId::cor4()}) {
    add("scan " + f.name() + " k<=12", "scan", false, [f, n_max] { return from_scan(scan(f, 12, n_max)); });
  }

  // Conjectures.
  for (int m = 2; m <= 10; ++m) {
    for (int r = 1; 2 * r <= m; ++r) {
      const FamilyId f = FamilyId::conj1(m, r);
      add("scan " + f.name() + " k<=8", "conjecture", true, [f, conj_n] { return from_scan(scan(f, 8, conj_n)); });
    }
  }
  add("scan conj2 k<=10", "conjecture", true, [conj_n] { return from_scan(scan(FamilyId::conj2(), 10, conj_n)); });
  add("scan conj3 k<=10", "conjecture", true, [conj_n] { return from_scan(scan(FamilyId::conj3(), 10, conj_n)); });
  const long rr_n = std::min(n_max, 499L);
  add("scan rr1 k<=8", "conjecture", true, [rr_n] { return from_scan(scan(FamilyId::rr1(), 8, rr_n)); });
  add("scan rr2 k<=8", "conjecture", true, [rr_n] { return from_scan(scan(FamilyId::rr2(), 8, rr_n)); });

  // Equivalences between families and generating functions.
  const std::size_t cross_order = std::min<std::size_t>(order, 200);
  auto same = [&](FamilyId a, FamilyId b) {
    add("equivalence " + a.name() + " = " + b.name(), "crosscheck", false, [a, b, conj_n] {
      const auto where = first_disagreement(a, b, 8, conj_n);
      if (!where) return Outcome{true, ""};
      return Outcome{false, "k=" + std::to_string(where->first) + ", n=" + std::to_string(where->second)};
    });
  };
  same(FamilyId::conj1(3, 1), FamilyId::am());
  same(FamilyId::conj1(2, 1), FamilyId::conj2());
  same(FamilyId::conj1(4, 1), FamilyId::cor4());
  add("crosscheck conj2 vs newovp", "crosscheck", false,
      [cross_order] { return Outcome{crosscheck_conj2(5, cross_order), ""}; });
  add("crosscheck rr1", "crosscheck", false,
      [cross_order] { return Outcome{crosscheck_rr(FamilyKind::RR1, 5, cross_order), ""}; });
  add("crosscheck rr2", "crosscheck", false,
      [cross_order] { return Outcome{crosscheck_rr(FamilyKind::RR2, 5, cross_order), ""}; });

  // Brute-force enumeration against the tables.
  add("oracle overpartitions n<=20", "oracle", false, [] {
    const ValueTable t = pf_by_recurrence(PartitionFunctionId::overp(), 20);
    for (int n = 0; n <= 20; ++n) {
      if (t.values[n] != enumerate_overpartitions(n).size()) return Outcome{false, "n=" + std::to_string(n)};
    }
    return Outcome{true, ""};
  });
  add("oracle distinct odd n<=30", "oracle", false, [] {
    const ValueTable t = pf_by_recurrence(PartitionFunctionId::pod(), 30);
    for (int n = 0; n <= 30; ++n) {
      if (t.values[n] != count_distinct_odd(n)) return Outcome{false, "n=" + std::to_string(n)};
    }
    return Outcome{true, ""};
  });
  add("oracle jmr m<=7 n<=25", "oracle", false, [] {
    for (int m = 2; m <= 7; ++m) {
      for (int r = 1; 2 * r <= m; ++r) {
        const ValueTable t = pf_by_recurrence(PartitionFunctionId::jmr(m, r), 25);
        for (int n = 0; n <= 25; ++n) {
          if (t.values[n] != count_jmr(n, m, r)) {
            return Outcome{false, "m=" + std::to_string(m) + ", r=" + std::to_string(r) + ", n=" + std::to_string(n)};
          }
        }
      }
    }
    return Outcome{true, ""};
  });
  add("oracle three colored n<=15", "oracle", false, [] {
    const ValueTable t = pf_by_recurrence(PartitionFunctionId::t3(), 15);
    for (int n = 0; n <= 15; ++n) {
      if (t.values[n] != count_three_colored(n)) return Outcome{false, "n=" + std::to_string(n)};
    }
    return Outcome{true, ""};
  });
  add("phi fibers n<=10", "oracle", false, [] {
    for (int n = 1; n <= 10; ++n) {
      const auto fibers = phi_fiber_analysis(n);
      if (fibers.size() != enumerate_overpartitions(n - 1).size()) {
        return Outcome{false, "phi not onto at n=" + std::to_string(n)};
      }
      for (const auto& [mu, count] : fibers) {
        if (count < 1 || count > 2 || !mu.valid() || mu.size() != n - 1) {
          return Outcome{false, "fiber of " + mu.to_string() + " at n=" + std::to_string(n)};
        }
      }
    }
    return Outcome{true, ""};
  });
  return tasks;
}

}  // namespace

std::vector<SuiteEntry> run_suite(const SuiteConfig& config) {
  std::vector<Task> tasks = build_battery(config);
  parallel_for(tasks.size(), [&](std::size_t i) {
    Outcome o;
    try {
      o = tasks[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    tasks[i].entry.passed = o.passed;
    tasks[i].entry.detail = std::move(o.detail);
  });
  std::vector<SuiteEntry> entries;
  entries.reserve(tasks.size());
  for (auto& t : tasks) entries.push_back(std::move(t.entry));
  return entries;
}

Json to_json(const SuiteConfig& config, const std::vector<SuiteEntry>& entries) {
  Json failed = Json::array();
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& e : entries) {
    if (e.passed) {
      ++passed;
    } else {
      failed.push_back(e.name);
    }
    Json item;
    item["name"] = e.name;
    item["category"] = e.category;
    item["conjecture"] = e.conjecture;
    item["status"] = e.passed ? "pass" : "fail";
    if (!e.detail.empty()) item["detail"] = e.detail;
    list.push_back(std::move(item));
  }
  Json j;
  j["kind"] = "suite";
  j["id"] = "suite";
  j["params"] = {{"order", config.order}, {"n_max", config.n_max}};
  j["status"] = failed.empty() ? "pass" : "fail";
  j["checked_up_to"] = config.order - 1;
  j["violations"] = std::move(failed);
  j["summary"] = {{"total", entries.size()}, {"passed", passed}, {"failed", entries.size() - passed}};
  j["entries"] = std::move(list);
  return j;
}

}  // namespace qtrunc
