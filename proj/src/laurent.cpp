#include "qkneser/laurent.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qkneser {

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p(std::move(terms));
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

void LaurentPoly::normalize() {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

BigInt LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<Exponent> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Exponent> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      BigInt& slot = out[ea + eb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly shift(const LaurentPoly& a, Exponent e) {
  LaurentPoly::Terms out;
  for (const auto& [exp, c] : a.terms()) out.emplace_hint(out.end(), exp + e, c);
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly sign_power(Exponent k) { return LaurentPoly::constant(k % 2 == 0 ? 1 : -1); }

Rational evaluate(const LaurentPoly& a, const BigInt& q0) {
  if (q0 < 2) throw std::invalid_argument("evaluate: q must be at least 2, got " + q0.get_str());
  if (a.is_zero()) return Rational(0);
  const Exponent low = std::min<Exponent>(0, *a.min_exponent());
  // Horner on the shifted polynomial sum c * q0^(e - low), highest term first.
  BigInt acc = 0;
  Exponent current = *a.max_exponent();
  BigInt power;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    mpz_pow_ui(power.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(current - it->first));
    acc *= power;
    acc += it->second;
    current = it->first;
  }
  mpz_pow_ui(power.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(current - low));
  acc *= power;
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(-low));
  Rational r(acc, denom);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly::Terms terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      auto [e, c] = term();
      if (negative) c = -c;
      terms[e] += c;
      skip_ws();
      if (pos_ == s_.size()) break;
      char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  std::pair<Exponent, BigInt> term() {
    skip_ws();
    BigInt coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      has_coeff = true;
      skip_ws();
      if (peek() != '*') return {0, coeff};
      ++pos_;
      skip_ws();
    }
    if (peek() != 'q') fail(has_coeff ? "expected 'q' after '*'" : "expected a term");
    ++pos_;
    Exponent e = 1;
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::string d = digits();
      e = std::stoll(d);
      if (neg) e = -e;
    }
    return {e, coeff};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_laurent: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).parse(); }

}  // namespace qkneser
