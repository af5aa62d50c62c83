#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtrunc/q_objects.hpp"

namespace qtrunc {

enum class IdentityKind {
  EulerPent,
  GaussSquare,
  GaussTriangular,
  AmTruncated,
  Thm1,
  Thm3,
  Agj,
  AgjGauss,
  QbtSpecial,
  Shanks,
  JtpSpecial,
  JacobiCube,
  LemmaS2,
  LemmaS5,
  NewOvp,
};

/// One identity together with its parameters. Only the parameters relevant to
/// `kind` are read; see params().
struct IdentityId {
  IdentityKind kind = IdentityKind::EulerPent;
  int k = 0;
  int n = 0;
  int m = 0;
  int r = 0;

  static IdentityId euler_pent() { return {IdentityKind::EulerPent}; }
  static IdentityId gauss_square() { return {IdentityKind::GaussSquare}; }
  static IdentityId gauss_triangular() { return {IdentityKind::GaussTriangular}; }
  static IdentityId jacobi_cube() { return {IdentityKind::JacobiCube}; }
  static IdentityId am_truncated(int k) { return {IdentityKind::AmTruncated, k}; }
  static IdentityId thm1(int k) { return {IdentityKind::Thm1, k}; }
  static IdentityId thm3(int k) { return {IdentityKind::Thm3, k}; }
  static IdentityId newovp(int k) { return {IdentityKind::NewOvp, k}; }
  static IdentityId qbt_special(int k) { return {IdentityKind::QbtSpecial, k}; }
  static IdentityId agj(int n) { return {IdentityKind::Agj, 0, n}; }
  static IdentityId agj_gauss(int n) { return {IdentityKind::AgjGauss, 0, n}; }
  static IdentityId shanks(int n) { return {IdentityKind::Shanks, 0, n}; }
  static IdentityId jtp_special(int m, int r) { return {IdentityKind::JtpSpecial, 0, 0, m, r}; }
  static IdentityId lemma_s2(int n, int k) { return {IdentityKind::LemmaS2, k, n}; }
  static IdentityId lemma_s5(int n, int k) { return {IdentityKind::LemmaS5, k, n}; }

  /// Lowercase selector, e.g. "thm1".
  std::string token() const;
  /// The parameters that apply to this kind, in a fixed order.
  std::vector<std::pair<std::string, int>> params() const;
  /// Token plus parameters, e.g. "lemma_s2(n=3,k=2)".
  std::string name() const;
  /// Whether the identity is checked over the bivariate ring Z[a,b].
  bool bivariate() const { return kind == IdentityKind::Agj; }
  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
  /// Whether one side is an infinite sum cut by the tail rule.
  bool has_tail() const;

  friend bool operator==(const IdentityId&, const IdentityId&) = default;
};

std::optional<IdentityKind> identity_kind_from_token(std::string_view token);
std::vector<std::string_view> identity_tokens();

struct Mismatch {
  std::size_t power;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id;
  std::size_t order = 0;
  std::optional<Mismatch> first_mismatch;

  bool passed() const { return !first_mismatch; }
};

template <CoefficientRing R>
struct IdentitySides {
  TruncSeries<R> lhs;
  TruncSeries<R> rhs;
};

/// Both sides of an integer-coefficient identity truncated to `order`.
/// Infinite sums stop at the first index whose least q-power reaches `order`;
/// `extra_tail_terms` appends that many further terms.
IdentitySides<BigInt> integer_sides(const IdentityId& id, std::size_t order, std::size_t extra_tail_terms = 0);

/// Both sides of the Andrews-Goulden-Jackson identity of size n over Z[a,b].
IdentitySides<BivarPoly> agj_sides(int n, std::size_t order);

/// Coefficientwise comparison of both sides below q^order.
IdentityReport verify(const IdentityId& id, std::size_t order);

}  // namespace qtrunc
