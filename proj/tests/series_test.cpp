#include <random>
#include <vector>

#include "doctest.h"
#include "qtrunc/q_objects.hpp"
#include "qtrunc/series.hpp"

using namespace qtrunc;

namespace {

IntSeries ints(std::initializer_list<long> values) {
  std::vector<BigInt> v;
  for (long x : values) v.emplace_back(x);
  return IntSeries(std::move(v));
}

std::vector<long> as_longs(const IntSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

// prod_{i=1}^{N-1} (1 - q^i) by plain polynomial multiplication.
std::vector<long> euler_product_oracle(std::size_t order) {
  std::vector<long> poly{1};
  for (std::size_t i = 1; i < order; ++i) {
    std::vector<long> next(poly.size() + i, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + i] -= poly[j];
    }
    poly = std::move(next);
  }
  poly.resize(order);
  return poly;
}

std::vector<BigInt> naive_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<BigInt> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  }
  return out;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t order() { return std::uniform_int_distribution<std::size_t>(1, 64)(rng); }

  BigInt coeff() {
    // Mostly small values, sometimes well past 64 bits.
    BigInt c = std::uniform_int_distribution<long>(-50, 50)(rng);
    if (rng() % 5 == 0) {
      BigInt big = 1;
      big <<= static_cast<unsigned>(rng() % 150);
      c = c * big + static_cast<long>(rng() % 1000);
    }
    return c;
  }

  IntSeries series(std::size_t order) {
    std::vector<BigInt> v;
    for (std::size_t i = 0; i < order; ++i) v.push_back(rng() % 4 == 0 ? BigInt(0) : coeff());
    return IntSeries(std::move(v));
  }

  IntSeries unit_series(std::size_t order) {
    IntSeries s = series(order);
    s[0] = rng() % 2 ? 1 : -1;
    return s;
  }

  BivarPoly poly() {
    BivarPoly p;
    const int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      p += BivarPoly::monomial(std::uniform_int_distribution<long>(-5, 5)(rng), static_cast<std::uint32_t>(rng() % 3),
                               static_cast<std::uint32_t>(rng() % 3));
    }
    return p;
  }

  TruncSeries<BivarPoly> bivar_series(std::size_t order) {
    std::vector<BivarPoly> v;
    for (std::size_t i = 0; i < order; ++i) v.push_back(poly());
    return TruncSeries<BivarPoly>(std::move(v));
  }
};

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };
template <class A, class B>
concept Multipliable = requires(A a, B b) { a * b; };

}  // namespace

TEST_CASE("series addition") {
  CHECK(as_longs(ints({1, -1, 0}) + ints({0, 1, 0})) == std::vector<long>{1, 0, 0});
  const IntSeries s = ints({3, 0, -7, 12});
  CHECK(s + IntSeries(4) == s);

  const auto pent = euler_product_oracle(8);
  CHECK(pent == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});
  IntSeries p(8);
  for (std::size_t i = 0; i < 8; ++i) p[i] = pent[i];
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("mismatched orders truncate to the smaller") {
  const IntSeries a = ints({1, 2, 3, 4, 5});
  const IntSeries b = ints({1, 1, 1});
  CHECK((a + b).order() == 3);
  CHECK(as_longs(a + b) == std::vector<long>{2, 3, 4});
  CHECK(as_longs(b - a) == std::vector<long>{0, -1, -2});
  CHECK((a * b).order() == 3);
  CHECK(as_longs(a * b) == std::vector<long>{1, 3, 6});
}

TEST_CASE("series multiplication") {
  CHECK(as_longs(ints({1, -1, 0, 0}) * ints({1, 1, 1, 1})) == std::vector<long>{1, 0, 0, 0});
  CHECK(as_longs(ints({1, -2, 0, 0, 0, 0, 0}) * ints({1, 2, 4, 8, 14, 24, 40})) ==
        std::vector<long>{1, 0, 0, 0, -2, -4, -8});
  const IntSeries s = ints({5, -3, 0, 9});
  CHECK(s * IntSeries::one(4) == s);
}

TEST_CASE("series inversion") {
  CHECK(as_longs(invert(ints({1, -1, 0, 0, 0}))) == std::vector<long>{1, 1, 1, 1, 1});

  IntSeries euler(7);
  const auto pent = euler_product_oracle(7);
  for (std::size_t i = 0; i < 7; ++i) euler[i] = pent[i];
  CHECK(as_longs(invert(euler)) == std::vector<long>{1, 1, 2, 3, 5, 7, 11});

  CHECK(as_longs(invert(ints({-1, 0, 0}))) == std::vector<long>{-1, 0, 0});
  CHECK_THROWS_AS(invert(ints({2, 1, 0})), std::domain_error);
  CHECK_THROWS_AS(invert(ints({0, 1, 0})), std::domain_error);
}

TEST_CASE("shift and power substitution") {
  CHECK(as_longs(shift(ints({1, 1, 1}), 1)) == std::vector<long>{0, 1, 1});
  const IntSeries s = ints({4, -1, 7});
  CHECK(shift(s, 0) == s);
  CHECK(shift(s, 10).is_zero());

  const IntSeries p = invert(poch({}, 12));
  CHECK(shift(p, 5)[9] == 5);

  CHECK(as_longs(substitute_power(ints({1, 1, 1, 0, 0}), 2)) == std::vector<long>{1, 0, 1, 0, 1});
  CHECK(substitute_power(s, 1) == s);
  CHECK(substitute_power(p, 2)[6] == 3);
  CHECK_THROWS_AS(substitute_power(s, 0), std::invalid_argument);
}

TEST_CASE("construction rejects order zero") {
  CHECK_THROWS_AS(IntSeries(0), std::invalid_argument);
  CHECK_THROWS_AS(IntSeries(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(ints({1, 2}).truncated(3), std::invalid_argument);
  CHECK(as_longs(ints({1, 2, 3}).truncated(2)) == std::vector<long>{1, 2});
}

TEST_CASE("coefficient rings cannot be mixed") {
  static_assert(Addable<IntSeries, IntSeries>);
  static_assert(!Addable<IntSeries, TruncSeries<BivarPoly>>);
  static_assert(!Addable<TruncSeries<BivarPoly>, IntSeries>);
  static_assert(Multipliable<IntSeries, IntSeries>);
  static_assert(!Multipliable<IntSeries, TruncSeries<BivarPoly>>);
  static_assert(!std::equality_comparable_with<IntSeries, TruncSeries<BivarPoly>>);
  CHECK(true);
}

TEST_CASE("property: integer ring axioms") {
  Gen g(0x5eed1);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = g.order();
    const IntSeries a = g.series(n), b = g.series(n), c = g.series(n);
    const IntSeries zero(n), one = IntSeries::one(n);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + zero == a);
    REQUIRE((a + (-a)).is_zero());
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * one == a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - b == a + (-b));
  }
}

TEST_CASE("property: product matches a direct convolution") {
  Gen g(0x5eed2);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntSeries a = g.series(g.order());
    const IntSeries b = g.series(g.order());
    const auto expected = naive_product({a.coeffs().begin(), a.coeffs().end()}, {b.coeffs().begin(), b.coeffs().end()});
    REQUIRE(a * b == IntSeries(expected));
  }
}

TEST_CASE("property: inversion round trip and involution") {
  Gen g(0x5eed3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = g.order();
    const IntSeries s = g.unit_series(n);
    const IntSeries inv = invert(s);
    REQUIRE(s * inv == IntSeries::one(n));
    REQUIRE(inv * s == IntSeries::one(n));
    REQUIRE(invert(inv) == s);
  }
}

TEST_CASE("property: linear-time factor updates agree with generic arithmetic") {
  Gen g(0x5eed4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = g.order();
    const IntSeries s = g.series(n);
    const BigInt c = std::uniform_int_distribution<long>(-3, 3)(g.rng);
    const std::size_t e = 1 + g.rng() % (n + 2);
    IntSeries factor = IntSeries::one(n);
    if (e < n) factor[e] = -c;
    REQUIRE(multiply_one_minus(s, c, e) == s * factor);
    REQUIRE(divide_one_minus(s, c, e) == s * invert(factor));
    REQUIRE(divide_one_minus(multiply_one_minus(s, c, e), c, e) == s);
  }
  const IntSeries s = ints({1, 2, 3});
  CHECK(as_longs(multiply_one_minus(s, BigInt(3), 0)) == std::vector<long>{-2, -4, -6});
  CHECK(as_longs(divide_one_minus(s, BigInt(2), 0)) == std::vector<long>{-1, -2, -3});
  CHECK_THROWS_AS(divide_one_minus(s, BigInt(3), 0), std::domain_error);
}

TEST_CASE("property: sparse products equal dense ones") {
  Gen g(0x5eed5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = g.order();
    const IntSeries s = g.series(n);
    SparseTerms<BigInt> terms;
    IntSeries dense(n);
    for (std::size_t e = 0; e < n + 3; e += 1 + g.rng() % 6) {
      const BigInt c = g.coeff();
      terms.emplace_back(e, c);
      if (e < n) dense[e] += c;
    }
    REQUIRE(multiply_sparse(s, terms) == s * dense);
  }
}

TEST_CASE("property: bivariate ring axioms and inversion") {
  Gen g(0x5eed6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + g.rng() % 6;
    const auto a = g.bivar_series(n), b = g.bivar_series(n), c = g.bivar_series(n);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    auto u = a;
    u[0] = BivarPoly(1L);
    REQUIRE(u * invert(u) == TruncSeries<BivarPoly>::one(n));
  }
  TruncSeries<BivarPoly> s(3);
  s[0] = BivarPoly::a();
  CHECK_THROWS_AS(invert(s), std::domain_error);
}

TEST_CASE("bivariate polynomials") {
  const BivarPoly a = BivarPoly::a(), b = BivarPoly::b();
  const BivarPoly p = (a - b) * (a + b);
  CHECK(p == a * a - b * b);
  CHECK(p.evaluate(5, 3) == 16);
  CHECK((a - a).is_zero());
  CHECK(BivarPoly(7L).is_constant());
  CHECK(BivarPoly(7L).constant_term() == 7);
  CHECK_FALSE(a.is_constant());
  CHECK(BivarPoly().to_string() == "0");
  CHECK((BivarPoly(1L) - BivarPoly::monomial(2, 1, 3)).to_string() == "1 - 2*a*b^3");
}
