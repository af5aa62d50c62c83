#include "qtrunc/report_io.hpp"

#include <sstream>

namespace qtrunc {
namespace {

const char* status_of(bool passed) { return passed ? "pass" : "fail"; }

Json violation_json(const Violation& v, const char* type) {
  Json j;
  j["type"] = type;
  j["k"] = v.k;
  j["n"] = v.n;
  j["value"] = to_decimal(v.value);
  return j;
}

}  // namespace

Json to_json(const IdentityReport& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.id.params()) params[name] = value;
  Json j;
  j["kind"] = "identity";
  j["id"] = report.id.token();
  j["params"] = std::move(params);
  j["status"] = status_of(report.passed());
  j["checked_up_to"] = report.order - 1;
  j["violations"] = Json::array();
  if (report.first_mismatch) {
    const Mismatch& mm = *report.first_mismatch;
    j["first_mismatch"] = {{"power", mm.power}, {"lhs", mm.lhs}, {"rhs", mm.rhs}};
  }
  return j;
}

Json to_json(const InequalityReport& report) {
  const FamilyId& family = report.family;
  Json params = Json::object();
  if (family.kind == FamilyKind::Conj1) {
    params["m"] = family.m;
    params["r"] = family.r;
  }
  params["k_max"] = report.k_max;
  params["n_max"] = report.n_max;

  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v, "sign"));
  for (const auto& v : report.strictness_violations) violations.push_back(violation_json(v, "strictness"));

  Json thresholds = Json::array();
  for (int k = 1; k <= report.k_max; ++k) {
    const auto t = family.strictness_threshold(k);
    thresholds.push_back({{"k", k}, {"n", t ? Json(*t) : Json(nullptr)}});
  }

  Json j;
  j["kind"] = "inequality";
  j["family"] = family.token();
  j["params"] = std::move(params);
  j["status"] = status_of(report.passed());
  j["checked_up_to"] = report.n_max;
  j["violations"] = std::move(violations);
  j["conjecture"] = family.is_conjecture();
  j["finding"] = report.passed() ? "none" : (family.is_conjecture() ? "conjecture_counterexample" : "violation");
  j["thresholds"] = std::move(thresholds);
  return j;
}

Json to_json(const ValueTable& table) {
  Json params = Json::object();
  if (table.id.kind == PartitionKind::Jmr) {
    params["m"] = table.id.m;
    params["r"] = table.id.r;
  }
  params["n_max"] = table.n_max();
  Json values = Json::array();
  for (const auto& v : table.values) values.push_back(to_decimal(v));

  Json j;
  j["kind"] = "table";
  j["function"] = table.id.kind == PartitionKind::Jmr ? std::string("jmr") : table.id.name();
  j["params"] = std::move(params);
  j["status"] = "pass";
  j["checked_up_to"] = table.n_max();
  j["violations"] = Json::array();
  j["values"] = std::move(values);
  return j;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string to_csv(const IdentityReport& report) {
  std::ostringstream os;
  os << "id,params,order,status,power,lhs,rhs\n";
  std::string params;
  for (const auto& [name, value] : report.id.params()) {
    if (!params.empty()) params += ';';
    params += name + "=" + std::to_string(value);
  }
  os << csv_field(report.id.token()) << ',' << csv_field(params) << ',' << report.order << ','
     << status_of(report.passed()) << ',';
  if (report.first_mismatch) {
    const Mismatch& mm = *report.first_mismatch;
    os << mm.power << ',' << csv_field(mm.lhs) << ',' << csv_field(mm.rhs);
  } else {
    os << ",,";
  }
  os << '\n';
  return os.str();
}

std::string to_csv(const InequalityReport& report) {
  std::ostringstream os;
  os << "family,k,threshold,n_max,sign_violations,strictness_violations,first_failing_n,status\n";
  for (int k = 1; k <= report.k_max; ++k) {
    std::size_t sign = 0;
    std::size_t strict = 0;
    long first = -1;
    auto note = [&](long n) {
      if (first < 0 || n < first) first = n;
    };
    for (const auto& v : report.violations) {
      if (v.k == k) {
        ++sign;
        note(v.n);
      }
    }
    for (const auto& v : report.strictness_violations) {
      if (v.k == k) {
        ++strict;
        note(v.n);
      }
    }
    const auto t = report.family.strictness_threshold(k);
    os << csv_field(report.family.name()) << ',' << k << ',' << (t ? std::to_string(*t) : std::string()) << ','
       << report.n_max << ',' << sign << ',' << strict << ',' << (first >= 0 ? std::to_string(first) : std::string())
       << ',' << status_of(sign == 0 && strict == 0) << '\n';
  }
  return os.str();
}

std::string to_csv(const ValueTable& table) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) os << n << ',' << to_decimal(table.values[n]) << '\n';
  return os.str();
}

}  // namespace qtrunc
