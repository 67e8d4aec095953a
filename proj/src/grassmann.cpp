#include "qkneser/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <thread>

#include "qkneser/qbinom.hpp"

namespace qkneser {

namespace {

unsigned resolve_threads(unsigned threads, std::size_t work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::size_t>(work, 1, threads));
}

// Runs body(begin, end) over contiguous row blocks; blocks touch disjoint rows.
template <typename F>
void parallel_rows(std::size_t n, unsigned threads, F&& body) {
  threads = resolve_threads(threads, n);
  if (threads == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t block = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = std::min(n, w * block);
    const std::size_t end = std::min(n, begin + block);
    if (begin < end) pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

// Reduces in place to row echelon form with pivot ones and cleared pivot
// columns; returns the pivot columns.
std::vector<int> reduce(const FieldCtx& ctx, std::vector<std::uint32_t>& m, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  auto at = [&](int i, int j) -> std::uint32_t& { return m[static_cast<std::size_t>(i) * cols + j]; };
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
    const FieldElem scale = ctx.inv({at(r, c)});
    for (int j = c; j < cols; ++j) at(r, j) = ctx.mul({at(r, j)}, scale).code;
    for (int i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const FieldElem factor = ctx.neg({at(i, c)});
      for (int j = c; j < cols; ++j) at(i, j) = ctx.add({at(i, j)}, ctx.mul(factor, {at(r, j)})).code;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

BudgetExceeded::BudgetExceeded(const BigInt& predicted, std::size_t budget)
    : std::runtime_error("vertex budget exceeded: predicted " + predicted.get_str() + " > " + std::to_string(budget)),
      predicted_(predicted),
      budget_(budget) {}

bool is_rref(const FieldCtx& ctx, const Subspace& s) {
  if (static_cast<int>(s.pivots.size()) != s.k) return false;
  if (s.entries.size() != static_cast<std::size_t>(s.k) * s.v) return false;
  for (auto code : s.entries)
    if (code >= ctx.order()) return false;
  for (int r = 0; r < s.k; ++r) {
    const int pc = s.pivots[r];
    if (pc < 0 || pc >= s.v) return false;
    if (r > 0 && pc <= s.pivots[r - 1]) return false;
    for (int c = 0; c < pc; ++c)
      if (s.at(r, c).code != 0) return false;
    for (int i = 0; i < s.k; ++i)
      if (s.at(i, pc).code != (i == r ? 1u : 0u)) return false;
  }
  return true;
}

int rank(const FieldCtx& ctx, std::vector<std::uint32_t> rows, int row_count, int cols) {
  return static_cast<int>(reduce(ctx, rows, row_count, cols).size());
}

Subspace row_space(const FieldCtx& ctx, std::vector<std::uint32_t> rows, int row_count, int v) {
  auto pivots = reduce(ctx, rows, row_count, v);
  Subspace s;
  s.v = v;
  s.k = static_cast<int>(pivots.size());
  s.pivots = std::move(pivots);
  rows.resize(static_cast<std::size_t>(s.k) * v);
  s.entries = std::move(rows);
  return s;
}

std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, int v, int k, std::size_t budget) {
  if (k < 0 || v < 0 || k > v)
    throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= v, got v=" + std::to_string(v) +
                                ", k=" + std::to_string(k));
  const BigInt predicted = evaluate(gauss(v, k), BigInt(ctx.order())).get_num();
  if (predicted > budget) throw BudgetExceeded(predicted, budget);

  std::vector<Subspace> out;
  out.reserve(predicted.get_ui());
  const std::uint32_t q = ctx.order();

  // Pivot sets in lexicographic order.
  std::vector<int> pivots(k);
  std::iota(pivots.begin(), pivots.end(), 0);
  for (;;) {
    std::vector<bool> is_pivot(v, false);
    for (int c : pivots) is_pivot[c] = true;
    // Free positions: right of the row's pivot, outside pivot columns.
    std::vector<std::size_t> free;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < v; ++c)
        if (!is_pivot[c]) free.push_back(static_cast<std::size_t>(r) * v + c);

    Subspace s;
    s.v = v;
    s.k = k;
    s.pivots = pivots;
    s.entries.assign(static_cast<std::size_t>(k) * v, 0);
    for (int r = 0; r < k; ++r) s.entries[static_cast<std::size_t>(r) * v + pivots[r]] = 1;
    for (;;) {
      out.push_back(s);
      std::size_t f = free.size();
      while (f > 0 && s.entries[free[f - 1]] + 1 == q) s.entries[free[--f]] = 0;
      if (f == 0) break;
      ++s.entries[free[f - 1]];
    }

    int r = k - 1;
    while (r >= 0 && pivots[r] == v - k + r) --r;
    if (r < 0) break;
    ++pivots[r];
    for (int i = r + 1; i < k; ++i) pivots[i] = pivots[i - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int intersection_dim(const FieldCtx& ctx, const Subspace& a, const Subspace& b) {
  if (a.v != b.v || a.k != b.k)
    throw std::invalid_argument("intersection_dim: subspaces live in different ambient spaces or dimensions");
  std::vector<std::uint32_t> stacked = a.entries;
  stacked.insert(stacked.end(), b.entries.begin(), b.entries.end());
  return 2 * a.k - rank(ctx, std::move(stacked), 2 * a.k, a.v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("multiply: order mismatch");
  const std::size_t n = a.order();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(c(i, j).get_mpz_t(), a(i, l).get_mpz_t(), b(l, j).get_mpz_t());
    }
  return c;
}

std::size_t AdjacencyBits::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_ + w]));
  return c;
}

IntMatrix AdjacencyBits::widen() const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (test(i, j)) m(i, j) = 1;
  return m;
}

AdjacencyBits build_adjacency_bits(const FieldCtx& ctx, const std::vector<Subspace>& vertices, unsigned threads) {
  const std::size_t n = vertices.size();
  AdjacencyBits bits(n);
  // Each worker owns a block of rows and fills the full row, so writes
  // never share a word with another worker.
  parallel_rows(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && intersection_dim(ctx, vertices[i], vertices[j]) == 0) bits.set(i, j);
  });
  return bits;
}

IntMatrix build_adjacency(const FieldCtx& ctx, const std::vector<Subspace>& vertices, unsigned threads) {
  return build_adjacency_bits(ctx, vertices, threads).widen();
}

namespace {

/// Left multiplication by a fixed matrix. 0/1 matrices are applied as row
/// selections, using the complement of a row when it is the sparser side.
class LeftMultiplier {
 public:
  LeftMultiplier(const IntMatrix& a, unsigned threads) : a_(a), threads_(threads) {
    const std::size_t n = a.order();
    binary_ = true;
    for (std::size_t i = 0; i < n && binary_; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0 && a(i, j) != 1) {
          binary_ = false;
          break;
        }
    if (!binary_) return;
    rows_.resize(n);
    complement_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> ones, zeros;
      for (std::size_t j = 0; j < n; ++j) (a(i, j) == 1 ? ones : zeros).push_back(j);
      complement_[i] = zeros.size() < ones.size();
      rows_[i] = complement_[i] ? std::move(zeros) : std::move(ones);
    }
  }

  IntMatrix apply(const IntMatrix& m) const {
    if (!binary_) return multiply(a_, m);
    const std::size_t n = m.order();
    std::vector<BigInt> colsum(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) colsum[c] += m(j, c);
    IntMatrix out(n);
    parallel_rows(n, threads_, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        BigInt* row = &out(i, 0);
        if (complement_[i])
          for (std::size_t c = 0; c < n; ++c) row[c] = colsum[c];
        for (std::size_t j : rows_[i]) {
          const BigInt* src = &m(j, 0);
          if (complement_[i])
            for (std::size_t c = 0; c < n; ++c) mpz_sub(row[c].get_mpz_t(), row[c].get_mpz_t(), src[c].get_mpz_t());
          else
            for (std::size_t c = 0; c < n; ++c) mpz_add(row[c].get_mpz_t(), row[c].get_mpz_t(), src[c].get_mpz_t());
        }
      }
    });
    return out;
  }

  /// tr(A M) without forming the product.
  BigInt trace_of_product(const IntMatrix& m) const {
    const std::size_t n = m.order();
    BigInt t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a_(i, j) != 0) mpz_addmul(t.get_mpz_t(), a_(i, j).get_mpz_t(), m(j, i).get_mpz_t());
    return t;
  }

 private:
  const IntMatrix& a_;
  unsigned threads_;
  bool binary_ = false;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<bool> complement_;
};

void subtract_scaled_identity(IntMatrix& m, const BigInt& lambda) {
  for (std::size_t i = 0; i < m.order(); ++i) m(i, i) -= lambda;
}

// (A - lambda I) M
IntMatrix shifted_product(const LeftMultiplier& a, const IntMatrix& m, const BigInt& lambda) {
  IntMatrix out = a.apply(m);
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_submul(out(i, j).get_mpz_t(), lambda.get_mpz_t(), m(i, j).get_mpz_t());
  return out;
}

// Solves sum_j lambda_j^m x_j = moments[m], m = 0..k, for distinct lambda_j.
std::vector<Rational> solve_vandermonde(const std::vector<BigInt>& lambdas, const std::vector<BigInt>& moments) {
  const std::size_t k = lambdas.size();
  std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t j = 0; j < k; ++j) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), lambdas[j].get_mpz_t(), m);
      aug[m][j] = p;
    }
    aug[m][k] = moments[m];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = c;
    while (aug[sel][c] == 0) ++sel;
    std::swap(aug[sel], aug[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c] / aug[c][c];
      for (std::size_t j = c; j <= k; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  std::vector<Rational> x(k);
  for (std::size_t j = 0; j < k; ++j) {
    x[j] = aug[j][k] / aug[j][j];
    x[j].canonicalize();
  }
  return x;
}

}  // namespace

CertificationResult certify_spectrum(const IntMatrix& a, const EvaluatedSpectrum& predicted, unsigned threads) {
  if (!a.is_symmetric()) throw std::invalid_argument("certify_spectrum: matrix is not symmetric");
  std::vector<BigInt> lambdas;
  std::vector<BigInt> mults;
  for (const auto& e : predicted.entries) {
    lambdas.push_back(e.eigenvalue);
    mults.push_back(e.multiplicity);
  }
  if (lambdas.empty()) throw std::invalid_argument("certify_spectrum: empty prediction");
  if (std::set<BigInt>(lambdas.begin(), lambdas.end()).size() != lambdas.size())
    throw std::invalid_argument("certify_spectrum: predicted eigenvalues are not distinct");

  const std::size_t n = a.order();
  const std::size_t count = lambdas.size();
  CertificationResult res;
  res.v = predicted.v;
  res.k = predicted.k;
  res.q = predicted.q;
  res.vertex_count = n;
  res.eigenvalues = lambdas;

  if (n > 0) {
    BigInt row0 = 0;
    for (std::size_t j = 0; j < n; ++j) row0 += a(0, j);
    bool regular = true;
    for (std::size_t i = 1; i < n && regular; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j);
      regular = s == row0;
    }
    if (regular) res.degree = row0;
  }

  const LeftMultiplier left(a, threads);

  // Annihilating product.
  IntMatrix residual = a;
  subtract_scaled_identity(residual, lambdas[0]);
  for (std::size_t j = 1; j < count; ++j) residual = shifted_product(left, residual, lambdas[j]);
  res.annihilation_ok = residual.is_zero();
  if (!res.annihilation_ok) {
    for (std::size_t i = 0; i < n && !res.residual; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (residual(i, j) != 0) {
          res.residual = ResidualEntry{i, j, residual(i, j)};
          break;
        }
  }
  residual = IntMatrix();

  // Moments tr(A^m), m = 0..count-1. The last power only needs its trace.
  res.moments.push_back(BigInt(n));
  if (count > 1) {
    IntMatrix power = a;
    res.moments.push_back(power.trace());
    for (std::size_t m = 2; m < count; ++m) {
      if (m + 1 == count) {
        res.moments.push_back(left.trace_of_product(power));
      } else {
        power = left.apply(power);
        res.moments.push_back(power.trace());
      }
    }
  }
  for (std::size_t m = 0; m < count; ++m) {
    BigInt s = 0;
    for (std::size_t j = 0; j < count; ++j) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), lambdas[j].get_mpz_t(), m);
      s += mults[j] * p;
    }
    res.predicted_moments.push_back(s);
    if (s != res.moments[m] && !res.first_moment_mismatch) res.first_moment_mismatch = static_cast<int>(m);
  }
  res.moments_ok = !res.first_moment_mismatch.has_value();
  res.multiplicities = solve_vandermonde(lambdas, res.moments);
  return res;
}

nlohmann::json to_json(const CertificationResult& r) {
  auto strings = [](const auto& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
  };
  nlohmann::json j = {{"v", r.v},
                      {"k", r.k},
                      {"q", r.q.get_str()},
                      {"vertex_count", r.vertex_count},
                      {"degree", r.degree ? nlohmann::json(r.degree->get_str()) : nlohmann::json(nullptr)},
                      {"annihilation_ok", r.annihilation_ok},
                      {"moments_ok", r.moments_ok},
                      {"certified", r.certified()},
                      {"eigenvalues", strings(r.eigenvalues)},
                      {"multiplicities", strings(r.multiplicities)},
                      {"moments", strings(r.moments)},
                      {"predicted_moments", strings(r.predicted_moments)}};
  j["first_moment_mismatch"] = r.first_moment_mismatch ? nlohmann::json(*r.first_moment_mismatch) : nlohmann::json(nullptr);
  if (r.residual)
    j["residual"] = {{"row", r.residual->row}, {"col", r.residual->col}, {"value", r.residual->value.get_str()}};
  else
    j["residual"] = nullptr;
  return j;
}

void write_vertex_file(std::ostream& os, const std::vector<Subspace>& vertices) {
  for (const auto& s : vertices) {
    for (std::size_t t = 0; t < s.entries.size(); ++t) os << (t ? " " : "") << s.entries[t];
    os << '\n';
  }
}

void write_adjacency_file(std::ostream& os, const AdjacencyBits& adjacency) {
  const std::size_t n = adjacency.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << (adjacency.test(i, j) ? '1' : '0');
    os << '\n';
  }
}

}  // namespace qkneser
