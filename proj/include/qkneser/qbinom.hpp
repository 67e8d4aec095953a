#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "qkneser/laurent.hpp"

namespace qkneser {

/**
 * Memoizing calculator for Gaussian binomial coefficients [n choose i]_q.
 *
 * Nonnegative tops are filled in with the Pascal-type recurrence
 * [n,i] = [n-1,i-1] + q^i [n-1,i]; negative tops are reduced to a
 * nonnegative one with the negation rule
 * [n,i] = (-1)^i q^(ni - i(i-1)/2) [-n+i-1, i].
 *
 * Thread-safe. Every (n, i) is stored at most once and lookups return
 * identical values regardless of the order in which callers arrive.
 */
class GaussianCache {
 public:
  /// Throws std::invalid_argument for i < 0.
  LaurentPoly get(std::int64_t n, std::int64_t i);

  std::size_t size() const;
  void clear();

 private:
  LaurentPoly compute_nonnegative(std::int64_t n, std::int64_t i);

  mutable std::recursive_mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> memo_;
};

/// Process-wide cache used by the free functions below.
GaussianCache& default_gaussian_cache();

/// [n choose i]_q as an exact Laurent polynomial. Throws for i < 0.
LaurentPoly gauss(std::int64_t n, std::int64_t i);

/// Direct evaluation of the defining product
/// prod_{j<i} (q0^(n-j) - 1) / (q0^(i-j) - 1) in exact rationals.
/// Independent of gauss(); used as its oracle. Throws for i < 0 or q0 < 2.
Rational gauss_eval_product(std::int64_t n, std::int64_t i, const BigInt& q0);

/// Exact q0^e for any integer e.
Rational rational_power(const BigInt& base, std::int64_t e);

/// Ordinary binomial coefficient C(n, k) for 0 <= k <= n, else 0.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace qkneser
