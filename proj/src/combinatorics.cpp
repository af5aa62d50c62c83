#include "qtrunc/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtrunc {

Overpartition Overpartition::from_signed(const std::vector<int>& signed_parts) {
  Overpartition out;
  for (int v : signed_parts) {
    out.parts.push_back(std::abs(v));
    out.overlined.push_back(v < 0);
  }
  if (!out.valid()) throw std::invalid_argument("not a canonical overpartition: " + out.to_string());
  return out;
}

int Overpartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Overpartition::valid() const {
  if (parts.size() != overlined.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
    if (overlined[i] && i > 0 && parts[i] == parts[i - 1]) return false;
  }
  return true;
}

std::string Overpartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) os << ", ";
    os << parts[i] << (overlined[i] ? "bar" : "");
  }
  os << ')';
  return os.str();
}

namespace {

void overpartitions_below(int remaining, int max_value, Overpartition& prefix,
                          std::vector<Overpartition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int v = std::min(remaining, max_value); v >= 1; --v) {
    for (int copies = 1; copies * v <= remaining; ++copies) {
      for (bool bar : {false, true}) {
        prefix.parts.insert(prefix.parts.end(), copies, v);
        prefix.overlined.push_back(bar);
        prefix.overlined.insert(prefix.overlined.end(), copies - 1, false);
        overpartitions_below(remaining - copies * v, v - 1, prefix, out);
        prefix.parts.resize(prefix.parts.size() - copies);
        prefix.overlined.resize(prefix.overlined.size() - copies);
      }
    }
  }
}

// Each entry is one colored part type, identified by its value.
std::uint64_t count_types(int remaining, const std::vector<int>& types, std::size_t idx) {
  if (remaining == 0) return 1;
  if (idx == types.size()) return 0;
  std::uint64_t total = 0;
  const int v = types[idx];
  for (int used = 0; used * v <= remaining; ++used) total += count_types(remaining - used * v, types, idx + 1);
  return total;
}

}  // namespace

std::vector<Overpartition> enumerate_overpartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_overpartitions: n must be nonnegative");
  std::vector<Overpartition> out;
  Overpartition prefix;
  overpartitions_below(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Overpartition phi(const Overpartition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("phi is undefined on the empty overpartition");
  Overpartition mu = lambda;
  const std::size_t k = mu.parts.size();
  const int last = mu.parts[k - 1];
  const bool last_bar = mu.overlined[k - 1];

  if (last == 1 && !last_bar) {
    mu.parts.pop_back();
    mu.overlined.pop_back();
  } else if (last != 1) {
    --mu.parts[k - 1];
  } else if (k == 1) {
    mu = Overpartition{};  // (1bar) -> ()
  } else {
    // Canonical order puts 1bar ahead of any plain 1, so lambda_{k-1} >= 2 here.
    const int ones = mu.parts[k - 2];
    const bool hat = mu.overlined[k - 2];
    mu.parts.resize(k - 2);
    mu.overlined.resize(k - 2);
    mu.parts.insert(mu.parts.end(), ones, 1);
    mu.overlined.push_back(hat);
    mu.overlined.insert(mu.overlined.end(), ones - 1, false);
  }
  return mu;
}

std::map<Overpartition, int> phi_fiber_analysis(int n) {
  if (n < 1) throw std::invalid_argument("phi_fiber_analysis needs n >= 1");
  std::map<Overpartition, int> fibers;
  for (const auto& lambda : enumerate_overpartitions(n)) ++fibers[phi(lambda)];
  return fibers;
}

std::uint64_t count_colored_partitions(int n, const std::function<int(int)>& multiplicity) {
  if (n < 0) return 0;
  std::vector<int> types;
  for (int v = n; v >= 1; --v) {
    for (int c = 0; c < multiplicity(v); ++c) types.push_back(v);
  }
  return count_types(n, types, 0);
}

std::uint64_t count_partitions(int n) {
  return count_colored_partitions(n, [](int) { return 1; });
}

std::uint64_t count_distinct_odd(int n) {
  if (n < 0) return 0;
  // Odd parts used at most once, even parts freely.
  std::function<std::uint64_t(int, int)> rec = [&](int remaining, int v) -> std::uint64_t {
    if (remaining == 0) return 1;
    if (v == 0) return 0;
    std::uint64_t total = rec(remaining, v - 1);
    const int cap = v % 2 == 1 ? 1 : remaining / v;
    for (int used = 1; used <= cap && used * v <= remaining; ++used) total += rec(remaining - used * v, v - 1);
    return total;
  };
  return rec(n, n);
}

std::uint64_t count_jmr(int n, int m, int r) {
  if (r < 1 || 2 * r > m) throw std::invalid_argument("count_jmr requires 1 <= r <= m/2");
  return count_colored_partitions(n, [m, r](int e) {
    const int res = e % m;
    return int(res == 0) + int(res == r) + int(res == m - r);
  });
}

std::uint64_t count_three_colored(int n) {
  return count_colored_partitions(n, [](int) { return 3; });
}

}  // namespace qtrunc
