#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qkneser/laurent.hpp"

namespace qkneser {

enum class IdentityId { pascal, lemma1, lemma2, lemma3, theorem2, corollary1 };

inline constexpr IdentityId kAllIdentities[] = {IdentityId::pascal,   IdentityId::lemma1,   IdentityId::lemma2,
                                                IdentityId::lemma3,   IdentityId::theorem2, IdentityId::corollary1};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
/// Parameter names in tuple order, e.g. {"n", "i"} or {"m", "a", "t"}.
std::vector<std::string> identity_parameters(IdentityId id);

/// Test hook: added to the exponent of the monomial factor on the right-hand
/// side of every identity. Zero reproduces the true identities; any other
/// value is a deliberately broken variant used as a negative control.
struct CheckOptions {
  std::int64_t rhs_exponent_offset = 0;
};

/// Both sides of one identity instance.
struct IdentitySides {
  LaurentPoly lhs;
  LaurentPoly rhs;
};

IdentitySides pascal_sides(std::int64_t n, std::int64_t i, CheckOptions opt = {});
IdentitySides lemma1_sides(std::int64_t n, std::int64_t i, CheckOptions opt = {});
IdentitySides lemma2_sides(std::int64_t n, std::int64_t a, CheckOptions opt = {});
IdentitySides lemma3_sides(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt = {});
IdentitySides theorem2_sides(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt = {});
IdentitySides corollary1_sides(std::int64_t m, std::int64_t a, CheckOptions opt = {});

// Each check throws std::invalid_argument when the parameters fall outside
// the identity's hypotheses and otherwise reports exact equality.

bool check_pascal(std::int64_t n, std::int64_t i, CheckOptions opt = {});
/// Symbolic equality plus an evaluation of both sides through the product
/// formula at q in {2, 3, 5}, which does not share the negative-top
/// reduction used by gauss().
bool check_lemma1(std::int64_t n, std::int64_t i, CheckOptions opt = {});
bool check_lemma2(std::int64_t n, std::int64_t a, CheckOptions opt = {});
bool check_lemma3(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt = {});
bool check_theorem2(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt = {});
/// Also requires agreement with theorem2 at t = a - m.
bool check_corollary1(std::int64_t m, std::int64_t a, CheckOptions opt = {});

/// Inclusive integer range; lo > hi is empty.
struct ParamRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
};

/// One range per identity parameter, in identity_parameters() order.
struct GridBounds {
  std::vector<ParamRange> ranges;
};

/// Largest absolute parameter value run_grid accepts.
inline constexpr std::int64_t kMaxGridParameter = 64;

struct IdentityFailure {
  std::vector<std::int64_t> params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id = IdentityId::pascal;
  GridBounds bounds;
  std::size_t instances = 0;
  std::vector<IdentityFailure> failures;  // sorted by params

  bool passed() const { return failures.empty(); }
};

/// Checks every tuple in bounds that satisfies the identity's hypotheses.
/// Tuples are split across worker threads; the report is identical to a
/// sequential run. Throws std::invalid_argument for the wrong number of
/// ranges or values beyond kMaxGridParameter.
IdentityReport run_grid(IdentityId id, const GridBounds& bounds, CheckOptions opt = {}, unsigned threads = 0);

/// Grid used by the command-line tool for a given size bound N:
/// n in [-N, N+2] and i in [0, N] (i >= 1 for pascal); m, a, t in [0, N].
GridBounds default_bounds(IdentityId id, std::int64_t max);

std::string render_table(const std::vector<IdentityReport>& reports);
nlohmann::json to_json(const IdentityReport& report);

}  // namespace qkneser
