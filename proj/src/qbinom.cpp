#include "qkneser/qbinom.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qkneser {

namespace {

void require_nonnegative_bottom(std::int64_t i) {
  if (i < 0) throw std::invalid_argument("gaussian coefficient: bottom index must be nonnegative, got " + std::to_string(i));
}

}  // namespace

LaurentPoly GaussianCache::get(std::int64_t n, std::int64_t i) {
  require_nonnegative_bottom(i);
  if (i == 0) return LaurentPoly::constant(1);
  if (n >= 0 && n < i) return {};

  std::lock_guard lock(mutex_);
  if (auto it = memo_.find({n, i}); it != memo_.end()) return it->second;

  LaurentPoly result;
  if (n < 0) {
    const std::int64_t e = n * i - i * (i - 1) / 2;
    result = shift(get(-n + i - 1, i), e);
    if (i % 2 != 0) result = -result;
    memo_.emplace(std::pair{n, i}, result);
  } else {
    result = compute_nonnegative(n, i);
  }
  return result;
}

// Fills the band {(m, r) : r <= i, 0 <= m - r <= n - i} column by column.
LaurentPoly GaussianCache::compute_nonnegative(std::int64_t n, std::int64_t i) {
  const std::int64_t width = n - i;
  // prev[d] holds [r-1+d choose r-1] for d = 0..width.
  std::vector<LaurentPoly> prev(width + 1, LaurentPoly::constant(1));
  for (std::int64_t r = 1; r <= i; ++r) {
    std::vector<LaurentPoly> cur(width + 1);
    for (std::int64_t d = 0; d <= width; ++d) {
      const std::int64_t m = r + d;
      if (auto it = memo_.find({m, r}); it != memo_.end()) {
        cur[d] = it->second;
        continue;
      }
      // [m, r] = [m-1, r-1] + q^r [m-1, r]; the second term vanishes when d = 0.
      LaurentPoly value = prev[d];
      if (d > 0) value += shift(cur[d - 1], r);
      memo_.emplace(std::pair{m, r}, value);
      cur[d] = std::move(value);
    }
    prev = std::move(cur);
  }
  return prev[width];
}

std::size_t GaussianCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void GaussianCache::clear() {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

GaussianCache& default_gaussian_cache() {
  static GaussianCache cache;
  return cache;
}

LaurentPoly gauss(std::int64_t n, std::int64_t i) { return default_gaussian_cache().get(n, i); }

Rational rational_power(const BigInt& base, std::int64_t e) {
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(BigInt(1), p);
  r.canonicalize();
  return r;
}

Rational gauss_eval_product(std::int64_t n, std::int64_t i, const BigInt& q0) {
  require_nonnegative_bottom(i);
  if (q0 < 2) throw std::invalid_argument("gauss_eval_product: q must be at least 2, got " + q0.get_str());
  Rational num = 1;
  Rational den = 1;
  for (std::int64_t j = 0; j < i; ++j) {
    num *= rational_power(q0, n - j) - 1;
    den *= rational_power(q0, i - j) - 1;
  }
  Rational r = num / den;
  r.canonicalize();
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qkneser
