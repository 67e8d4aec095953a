#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "qkneser/finite_field.hpp"
#include "qkneser/laurent.hpp"
#include "qkneser/spectrum.hpp"

namespace qkneser {

inline constexpr std::size_t kDefaultVertexBudget = 2000;

/// The predicted number of subspaces exceeds the configured vertex budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& predicted, std::size_t budget);
  const BigInt& predicted() const { return predicted_; }
  std::size_t budget() const { return budget_; }

 private:
  BigInt predicted_;
  std::size_t budget_;
};

/// A k-dimensional subspace of F_q^v, stored as the unique k x v reduced row
/// echelon basis. Entries are field-element encodings, row-major.
struct Subspace {
  int v = 0;
  int k = 0;
  std::vector<int> pivots;
  std::vector<std::uint32_t> entries;

  FieldElem at(int row, int col) const { return {entries[static_cast<std::size_t>(row) * v + col]}; }

  /// Ordered by pivot columns, then entry encodings.
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.pivots <=> b.pivots; c != 0) return c;
    return a.entries <=> b.entries;
  }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Checks the RREF invariants (pivot ones, cleared pivot columns, zeros left
/// of each pivot, strictly increasing pivots).
bool is_rref(const FieldCtx& ctx, const Subspace& s);

/// Rank of a rows x cols matrix of encodings by Gaussian elimination.
int rank(const FieldCtx& ctx, std::vector<std::uint32_t> rows, int row_count, int cols);

/// Canonical RREF of the row space of a k x v matrix (which need not have
/// full rank; the result has k = rank).
Subspace row_space(const FieldCtx& ctx, std::vector<std::uint32_t> rows, int row_count, int v);

/// All k-subspaces of F_q^v in canonical order, built pivot set by pivot set.
/// Throws BudgetExceeded when [v choose k] at q exceeds the budget and
/// std::invalid_argument when k > v or k < 0.
std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, int v, int k,
                                          std::size_t budget = kDefaultVertexBudget);

/// dim(A ∩ B) = 2k - rank of the stacked bases. Throws on mismatched ambient
/// dimension or subspace dimension.
int intersection_dim(const FieldCtx& ctx, const Subspace& a, const Subspace& b);

/// Dense square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static IntMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  BigInt trace() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// Plain dense product.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Adjacency of the q-Kneser relation, bit-packed by rows.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t order() const { return n_; }
  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  std::size_t row_count(std::size_t i) const;

  IntMatrix widen() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Vertices adjacent iff they intersect trivially; diagonal always zero.
/// Rows are split across threads (0 = hardware concurrency).
AdjacencyBits build_adjacency_bits(const FieldCtx& ctx, const std::vector<Subspace>& vertices, unsigned threads = 0);
IntMatrix build_adjacency(const FieldCtx& ctx, const std::vector<Subspace>& vertices, unsigned threads = 0);

struct ResidualEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  BigInt value;
};

struct CertificationResult {
  std::int64_t v = 0;
  std::int64_t k = 0;
  BigInt q;
  std::size_t vertex_count = 0;
  /// Common row sum, or nullopt when the graph is not regular.
  std::optional<BigInt> degree;
  bool annihilation_ok = false;
  bool moments_ok = false;
  /// First nonzero entry of prod_j (A - lambda_j I), if any.
  std::optional<ResidualEntry> residual;
  /// tr(A^m) for m = 0..k.
  std::vector<BigInt> moments;
  /// sum_j mult_j lambda_j^m for m = 0..k.
  std::vector<BigInt> predicted_moments;
  /// Smallest m with tr(A^m) != predicted, if any.
  std::optional<int> first_moment_mismatch;
  std::vector<BigInt> eigenvalues;
  /// Multiplicities recovered from the measured moments by solving the
  /// Vandermonde system on the predicted eigenvalues.
  std::vector<Rational> multiplicities;

  bool certified() const { return annihilation_ok && moments_ok; }
};

/// Exact spectrum certificate: every eigenvalue of the symmetric matrix lies
/// among the predicted ones (annihilating product vanishes) and the traces
/// of A^0..A^k match the predicted multiplicities.
/// Throws std::invalid_argument for a non-symmetric matrix or repeated
/// predicted eigenvalues.
CertificationResult certify_spectrum(const IntMatrix& a, const EvaluatedSpectrum& predicted, unsigned threads = 0);

nlohmann::json to_json(const CertificationResult& result);

/// One subspace per line: its k x v entry encodings, row-major, space-separated.
void write_vertex_file(std::ostream& os, const std::vector<Subspace>& vertices);
/// One matrix row per line as space-separated 0/1 entries.
void write_adjacency_file(std::ostream& os, const AdjacencyBits& adjacency);

}  // namespace qkneser
