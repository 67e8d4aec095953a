#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qkneser/laurent.hpp"

namespace qkneser {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  int e = 0;
};

/// q = p^e with p prime and e >= 1, or nullopt (this includes q < 2 and
/// values that do not fit in 63 bits).
std::optional<PrimePower> prime_power_decomposition(const BigInt& q);

/// Element of GF(p^e), stored as its canonical encoding: the residue
/// polynomial c_0 + c_1 x + ... evaluated at x = p.
struct FieldElem {
  std::uint32_t code = 0;

  friend auto operator<=>(FieldElem, FieldElem) = default;
};

/// Coefficients over GF(p), constant term first.
using PrimePoly = std::vector<std::uint32_t>;

/// Arithmetic context for GF(p^e) = GF(p)[x] / (modulus).
/// Immutable after construction.
class FieldCtx {
 public:
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Monic, degree e, constant term first. For e = 1 this is x.
  const PrimePoly& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  /// Throws std::out_of_range unless code < q.
  FieldElem element(std::uint32_t code) const;
  FieldElem from_residue(std::span<const std::uint32_t> residue) const;
  /// Length-e coefficient vector, constant term first.
  PrimePoly residue(FieldElem a) const;
  /// All q elements in increasing encoding order.
  std::vector<FieldElem> elements() const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Extended Euclid on residue and modulus. Throws std::domain_error for 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t exp) const;

 private:
  friend FieldCtx make_field(std::uint64_t p, int e, int max_degree);
  FieldCtx(std::uint64_t p, int e, PrimePoly modulus);

  FieldElem add_direct(FieldElem a, FieldElem b) const;
  FieldElem mul_direct(FieldElem a, FieldElem b) const;
  FieldElem inv_direct(FieldElem a) const;

  std::uint64_t p_;
  int e_;
  std::uint32_t q_;
  PrimePoly modulus_;
  // Operation tables, populated for small fields only.
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
};

inline constexpr int kDefaultMaxExtensionDegree = 4;

/// GF(p^e) with the lexicographically smallest monic irreducible modulus,
/// comparing coefficient tuples from the constant term up.
/// Throws std::invalid_argument for composite p, e < 1, e > max_degree or
/// p^e >= 2^31.
FieldCtx make_field(std::uint64_t p, int e, int max_degree = kDefaultMaxExtensionDegree);

/// make_field for a prime power q; throws std::invalid_argument otherwise.
FieldCtx make_field_of_order(const BigInt& q, int max_degree = kDefaultMaxExtensionDegree);

/// Monic irreducible polynomials of exact degree d over GF(p), in
/// lexicographic order of their coefficient tuples.
std::vector<PrimePoly> monic_irreducibles(std::uint64_t p, int d);

bool is_irreducible(const PrimePoly& f, std::uint64_t p);

}  // namespace qkneser
