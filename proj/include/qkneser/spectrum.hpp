#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qkneser/laurent.hpp"

namespace qkneser {

/// Raised for k <= v < 2k, where no two k-subspaces of F_q^v meet trivially.
class NullGraphError : public std::invalid_argument {
 public:
  NullGraphError(std::int64_t v, std::int64_t k);
};

/// Throws NullGraphError for k <= v < 2k and std::invalid_argument for any
/// other (v, k) with v < 2k or negative entries.
void require_kneser_parameters(std::int64_t v, std::int64_t k);

/// Delsarte's form:
/// (-1)^j q^((k-j)j + C(j,2)) sum_{s=0}^{k-j} (-1)^s q^C(s,2) [k-j,s] [v-2j-s, v-k-j]
LaurentPoly delsarte_eigenvalue(std::int64_t v, std::int64_t k, std::int64_t j);

/// Closed form (-1)^j q^(C(k,2) + C(k-j+1,2)) [v-k-j, v-2k].
LaurentPoly simple_eigenvalue(std::int64_t v, std::int64_t k, std::int64_t j);

/// 1 for j = 0, otherwise [v,j] - [v,j-1]. Requires k >= 1.
LaurentPoly multiplicity(std::int64_t v, std::int64_t k, std::int64_t j);

struct SpectrumEntry {
  std::int64_t j = 0;
  LaurentPoly eigenvalue;
  LaurentPoly multiplicity;
};

/// Symbolic spectrum of qK(v,k): k+1 entries ordered by j.
struct SpectrumTable {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::vector<SpectrumEntry> entries;
};

struct EvaluatedEntry {
  std::int64_t j = 0;
  BigInt eigenvalue;
  BigInt multiplicity;
};

/// Spectrum at a concrete q.
struct EvaluatedSpectrum {
  std::int64_t v = 0;
  std::int64_t k = 0;
  BigInt q;
  std::vector<EvaluatedEntry> entries;
};

enum class EigenvalueForm { simple, delsarte };

/// Requires v >= 2k >= 1.
SpectrumTable spectrum_table(std::int64_t v, std::int64_t k, EigenvalueForm form = EigenvalueForm::simple);

/// Substitutes q = q0. Throws std::invalid_argument unless q0 is a prime power.
EvaluatedSpectrum evaluate(const SpectrumTable& table, const BigInt& q0);

EvaluatedSpectrum spectrum_table(std::int64_t v, std::int64_t k, const BigInt& q0);

/// Exact integer value of a polynomial at q0; throws std::domain_error if the
/// value is not an integer.
BigInt evaluate_integer(const LaurentPoly& p, const BigInt& q0);

}  // namespace qkneser
