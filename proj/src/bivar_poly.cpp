#include "qtrunc/bivar_poly.hpp"

#include <sstream>

namespace qtrunc {

BivarPoly::BivarPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, BigInt(c));
}

BivarPoly::BivarPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BivarPoly BivarPoly::monomial(BigInt c, std::uint32_t deg_a, std::uint32_t deg_b) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Exponent{deg_a, deg_b}, std::move(c));
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

BigInt BivarPoly::constant_term() const {
  auto it = terms_.find(Exponent{0, 0});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivarPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, BigInt(-c));
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      out.add_term({el.first + er.first, el.second + er.second}, BigInt(cl * cr));
    }
  }
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) { return *this = *this * rhs; }

BivarPoly operator-(BivarPoly p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

BigInt BivarPoly::evaluate(const BigInt& a_value, const BigInt& b_value) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a_value.get_mpz_t(), e.first);
    mpz_pow_ui(pb.get_mpz_t(), b_value.get_mpz_t(), e.second);
    total += c * pa * pb;
  }
  return total;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_symbol = e.first > 0 || e.second > 0;
    bool wrote = false;
    if (mag != 1 || !has_symbol) {
      os << mag.get_str();
      wrote = true;
    }
    auto symbol = [&](char name, std::uint32_t deg) {
      if (deg == 0) return;
      if (wrote) os << '*';
      os << name;
      if (deg > 1) os << '^' << deg;
      wrote = true;
    };
    symbol('a', e.first);
    symbol('b', e.second);
  }
  return os.str();
}

}  // namespace qtrunc
