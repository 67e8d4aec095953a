#include "qkneser/spectrum.hpp"

#include <string>

#include "qkneser/finite_field.hpp"
#include "qkneser/qbinom.hpp"

namespace qkneser {

namespace {

std::int64_t choose2(std::int64_t s) { return s * (s - 1) / 2; }

void require_index(std::int64_t k, std::int64_t j) {
  if (j < 0 || j > k)
    throw std::invalid_argument("eigenvalue index j=" + std::to_string(j) + " outside 0.." + std::to_string(k));
}

}  // namespace

NullGraphError::NullGraphError(std::int64_t v, std::int64_t k)
    : std::invalid_argument("qK(" + std::to_string(v) + "," + std::to_string(k) +
                            ") is the null graph: for k <= v < 2k any two k-subspaces intersect nontrivially; "
                            "require v >= 2k") {}

void require_kneser_parameters(std::int64_t v, std::int64_t k) {
  if (k < 0 || v < 0) throw std::invalid_argument("v and k must be nonnegative");
  if (v >= 2 * k) return;
  if (v >= k) throw NullGraphError(v, k);
  throw std::invalid_argument("no " + std::to_string(k) + "-dimensional subspaces in dimension " + std::to_string(v));
}

LaurentPoly delsarte_eigenvalue(std::int64_t v, std::int64_t k, std::int64_t j) {
  require_kneser_parameters(v, k);
  require_index(k, j);
  LaurentPoly sum;
  for (std::int64_t s = 0; s <= k - j; ++s) {
    LaurentPoly term = shift(gauss(k - j, s) * gauss(v - 2 * j - s, v - k - j), choose2(s));
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  LaurentPoly value = shift(sum, (k - j) * j + choose2(j));
  return j % 2 == 0 ? value : -value;
}

LaurentPoly simple_eigenvalue(std::int64_t v, std::int64_t k, std::int64_t j) {
  require_kneser_parameters(v, k);
  require_index(k, j);
  LaurentPoly value = shift(gauss(v - k - j, v - 2 * k), choose2(k) + choose2(k - j + 1));
  return j % 2 == 0 ? value : -value;
}

LaurentPoly multiplicity(std::int64_t v, std::int64_t k, std::int64_t j) {
  require_kneser_parameters(v, k);
  if (k < 1) throw std::invalid_argument("multiplicity requires k >= 1");
  require_index(k, j);
  if (j == 0) return LaurentPoly::constant(1);
  return gauss(v, j) - gauss(v, j - 1);
}

SpectrumTable spectrum_table(std::int64_t v, std::int64_t k, EigenvalueForm form) {
  require_kneser_parameters(v, k);
  if (k < 1) throw std::invalid_argument("spectrum table requires k >= 1");
  SpectrumTable table{v, k, {}};
  for (std::int64_t j = 0; j <= k; ++j) {
    LaurentPoly ev = form == EigenvalueForm::simple ? simple_eigenvalue(v, k, j) : delsarte_eigenvalue(v, k, j);
    table.entries.push_back({j, std::move(ev), multiplicity(v, k, j)});
  }
  return table;
}

BigInt evaluate_integer(const LaurentPoly& p, const BigInt& q0) {
  Rational r = evaluate(p, q0);
  if (r.get_den() != 1) throw std::domain_error(to_string(p) + " is not an integer at q=" + q0.get_str());
  return r.get_num();
}

EvaluatedSpectrum evaluate(const SpectrumTable& table, const BigInt& q0) {
  if (!prime_power_decomposition(q0))
    throw std::invalid_argument("q=" + q0.get_str() + " is not a prime power");
  EvaluatedSpectrum out{table.v, table.k, q0, {}};
  for (const auto& e : table.entries)
    out.entries.push_back({e.j, evaluate_integer(e.eigenvalue, q0), evaluate_integer(e.multiplicity, q0)});
  return out;
}

EvaluatedSpectrum spectrum_table(std::int64_t v, std::int64_t k, const BigInt& q0) {
  return evaluate(spectrum_table(v, k), q0);
}

}  // namespace qkneser
