#include "qkneser/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qkneser {

namespace {

constexpr std::uint32_t kTableOrderLimit = 256;

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo m (m nonzero, trimmed).
PrimePoly poly_rem(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - factor * m[k] % p) % p);
    trim(a);
  }
  return a;
}

// Quotient and remainder of a by m (m nonzero, trimmed).
std::pair<PrimePoly, PrimePoly> poly_divmod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  PrimePoly quot(a.size() > dm ? a.size() - dm : 0, 0);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = a.back() * lead_inv % p;
    quot[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - factor * m[k] % p) % p);
    trim(a);
  }
  return {quot, a};
}

PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  trim(a);
  return a;
}

// Monic polynomials of degree d in lexicographic order of (c_0, ..., c_{d-1});
// the callback returns false to stop.
template <typename F>
void for_each_monic(std::uint64_t p, int d, F&& f) {
  PrimePoly cur(d + 1, 0);
  cur[d] = 1;
  for (;;) {
    if (!f(cur)) return;
    int k = d - 1;
    while (k >= 0 && cur[k] + 1 == p) cur[k--] = 0;
    if (k < 0) return;
    ++cur[k];
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power_decomposition(const BigInt& q) {
  if (q < 2 || mpz_sizeinbase(q.get_mpz_t(), 2) > 63) return std::nullopt;
  std::uint64_t n = 0;
  mpz_export(&n, nullptr, -1, sizeof n, 0, 0, q.get_mpz_t());
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, e};
}

bool is_irreducible(const PrimePoly& f_in, std::uint64_t p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  // Linear factors are roots.
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = (acc * x + f[k]) % p;
    if (acc == 0) return false;
  }
  for (int t = 2; t <= d / 2; ++t)
    for (const auto& g : monic_irreducibles(p, t))
      if (poly_rem(f, g, p).empty()) return false;
  return true;
}

std::vector<PrimePoly> monic_irreducibles(std::uint64_t p, int d) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::vector<PrimePoly> out;
  for_each_monic(p, d, [&](const PrimePoly& f) {
    if (is_irreducible(f, p)) out.push_back(f);
    return true;
  });
  return out;
}

FieldCtx make_field(std::uint64_t p, int e, int max_degree) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("make_field: extension degree must be at least 1");
  if (e > max_degree)
    throw std::invalid_argument("make_field: extension degree " + std::to_string(e) + " exceeds bound " +
                                std::to_string(max_degree));
  std::uint64_t q = 1;
  for (int k = 0; k < e; ++k) {
    q *= p;
    if (q >= (std::uint64_t{1} << 31)) throw std::invalid_argument("make_field: field order too large");
  }
  if (e == 1) return FieldCtx(p, 1, PrimePoly{0, 1});
  PrimePoly modulus;
  for_each_monic(p, e, [&](const PrimePoly& f) {
    if (!is_irreducible(f, p)) return true;
    modulus = f;
    return false;
  });
  return FieldCtx(p, e, std::move(modulus));
}

FieldCtx make_field_of_order(const BigInt& q, int max_degree) {
  auto pp = prime_power_decomposition(q);
  if (!pp) throw std::invalid_argument("q=" + q.get_str() + " is not a prime power");
  return make_field(pp->p, pp->e, max_degree);
}

FieldCtx::FieldCtx(std::uint64_t p, int e, PrimePoly modulus) : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int k = 0; k < e; ++k) q_ *= static_cast<std::uint32_t>(p);
  if (q_ > kTableOrderLimit) return;
  const std::size_t n = q_;
  add_table_.resize(n * n);
  mul_table_.resize(n * n);
  neg_table_.resize(n);
  inv_table_.resize(n, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_table_[a * n + b] = add_direct({a}, {b}).code;
      mul_table_[a * n + b] = mul_direct({a}, {b}).code;
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b)
      if (add_table_[a * n + b] == 0) neg_table_[a] = b;
    if (a != 0) inv_table_[a] = inv_direct({a}).code;
  }
}

FieldElem FieldCtx::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code " + std::to_string(code) + " not below q=" + std::to_string(q_));
  return {code};
}

FieldElem FieldCtx::from_residue(std::span<const std::uint32_t> residue) const {
  PrimePoly r(residue.begin(), residue.end());
  for (auto& c : r) c = static_cast<std::uint32_t>(c % p_);
  r = poly_rem(std::move(r), modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t k = r.size(); k-- > 0;) code = static_cast<std::uint32_t>(code * p_ + r[k]);
  return {code};
}

PrimePoly FieldCtx::residue(FieldElem a) const {
  PrimePoly r(e_, 0);
  std::uint32_t c = a.code;
  for (int k = 0; k < e_; ++k) {
    r[k] = static_cast<std::uint32_t>(c % p_);
    c = static_cast<std::uint32_t>(c / p_);
  }
  return r;
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c] = {c};
  return out;
}

FieldElem FieldCtx::add_direct(FieldElem a, FieldElem b) const {
  auto ra = residue(a);
  auto rb = residue(b);
  for (int k = 0; k < e_; ++k) ra[k] = static_cast<std::uint32_t>((ra[k] + rb[k]) % p_);
  return from_residue(ra);
}

FieldElem FieldCtx::mul_direct(FieldElem a, FieldElem b) const {
  auto ra = residue(a);
  auto rb = residue(b);
  trim(ra);
  trim(rb);
  return from_residue(poly_mul(ra, rb, p_));
}

FieldElem FieldCtx::inv_direct(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  // Invariant: s * a == r0 and t * a == r1 modulo the modulus.
  PrimePoly r0 = modulus_, r1 = residue(a);
  trim(r1);
  PrimePoly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    PrimePoly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod(r0[0], p_);
  for (auto& c : s0) c = static_cast<std::uint32_t>(c * scale % p_);
  return from_residue(s0);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (!add_table_.empty()) return {add_table_[a.code * q_ + b.code]};
  return add_direct(a, b);
}

FieldElem FieldCtx::neg(FieldElem a) const {
  if (!neg_table_.empty()) return {neg_table_[a.code]};
  auto r = residue(a);
  for (auto& c : r) c = static_cast<std::uint32_t>((p_ - c) % p_);
  return from_residue(r);
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (!mul_table_.empty()) return {mul_table_[a.code * q_ + b.code]};
  return mul_direct(a, b);
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (!inv_table_.empty()) return {inv_table_[a.code]};
  return inv_direct(a);
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t exp) const {
  FieldElem r = one();
  while (exp) {
    if (exp & 1) r = mul(r, a);
    a = mul(a, a);
    exp >>= 1;
  }
  return r;
}

}  // namespace qkneser
