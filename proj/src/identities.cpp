#include "qkneser/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qkneser/qbinom.hpp"

namespace qkneser {

namespace {

std::int64_t choose2(std::int64_t s) { return s * (s - 1) / 2; }

[[noreturn]] void reject(std::string_view what, const std::vector<std::int64_t>& params) {
  std::ostringstream os;
  os << what << ": parameters (";
  for (std::size_t k = 0; k < params.size(); ++k) os << (k ? ", " : "") << params[k];
  os << ") violate the identity's hypotheses";
  throw std::invalid_argument(os.str());
}

/// sum_{s=0}^{upper} (-1)^s q^(s(s-1)/2) [m,s] [a-s,t]
LaurentPoly alternating_product_sum(std::int64_t upper, std::int64_t m, std::int64_t a, std::int64_t t) {
  LaurentPoly sum;
  for (std::int64_t s = 0; s <= upper; ++s) {
    LaurentPoly term = shift(gauss(m, s) * gauss(a - s, t), choose2(s));
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

bool admissible(IdentityId id, const std::vector<std::int64_t>& p) {
  switch (id) {
    case IdentityId::pascal:
      return p[1] >= 1;
    case IdentityId::lemma1:
    case IdentityId::lemma2:
      return p[1] >= 0;
    case IdentityId::lemma3:
      return p[2] >= 0 && p[2] <= p[1] && p[1] <= p[0];
    case IdentityId::theorem2:
      return p[0] >= 0 && p[2] >= 0 && p[1] >= p[0] && p[1] >= p[2];
    case IdentityId::corollary1:
      return p[0] >= 0 && p[1] >= p[0];
  }
  return false;
}

IdentitySides sides_for(IdentityId id, const std::vector<std::int64_t>& p, CheckOptions opt) {
  switch (id) {
    case IdentityId::pascal:
      return pascal_sides(p[0], p[1], opt);
    case IdentityId::lemma1:
      return lemma1_sides(p[0], p[1], opt);
    case IdentityId::lemma2:
      return lemma2_sides(p[0], p[1], opt);
    case IdentityId::lemma3:
      return lemma3_sides(p[0], p[1], p[2], opt);
    case IdentityId::theorem2:
      return theorem2_sides(p[0], p[1], p[2], opt);
    case IdentityId::corollary1:
      return corollary1_sides(p[0], p[1], opt);
  }
  throw std::logic_error("unknown identity");
}

bool check_for(IdentityId id, const std::vector<std::int64_t>& p, CheckOptions opt) {
  switch (id) {
    case IdentityId::pascal:
      return check_pascal(p[0], p[1], opt);
    case IdentityId::lemma1:
      return check_lemma1(p[0], p[1], opt);
    case IdentityId::lemma2:
      return check_lemma2(p[0], p[1], opt);
    case IdentityId::lemma3:
      return check_lemma3(p[0], p[1], p[2], opt);
    case IdentityId::theorem2:
      return check_theorem2(p[0], p[1], p[2], opt);
    case IdentityId::corollary1:
      return check_corollary1(p[0], p[1], opt);
  }
  throw std::logic_error("unknown identity");
}

// Odometer step over the inclusive ranges; false once every tuple was visited.
bool advance(std::vector<std::int64_t>& cur, const std::vector<ParamRange>& ranges) {
  for (std::size_t k = cur.size(); k-- > 0;) {
    if (cur[k] < ranges[k].hi) {
      ++cur[k];
      return true;
    }
    cur[k] = ranges[k].lo;
  }
  return false;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::pascal:
      return "pascal";
    case IdentityId::lemma1:
      return "lemma1";
    case IdentityId::lemma2:
      return "lemma2";
    case IdentityId::lemma3:
      return "lemma3";
    case IdentityId::theorem2:
      return "theorem2";
    case IdentityId::corollary1:
      return "corollary1";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

std::vector<std::string> identity_parameters(IdentityId id) {
  switch (id) {
    case IdentityId::pascal:
    case IdentityId::lemma1:
      return {"n", "i"};
    case IdentityId::lemma2:
      return {"n", "a"};
    case IdentityId::lemma3:
    case IdentityId::theorem2:
      return {"m", "a", "t"};
    case IdentityId::corollary1:
      return {"m", "a"};
  }
  return {};
}

IdentitySides pascal_sides(std::int64_t n, std::int64_t i, CheckOptions opt) {
  if (i < 1) reject("pascal", {n, i});
  return {gauss(n, i), gauss(n - 1, i - 1) + shift(gauss(n - 1, i), i + opt.rhs_exponent_offset)};
}

IdentitySides lemma1_sides(std::int64_t n, std::int64_t i, CheckOptions opt) {
  if (i < 0) reject("lemma1", {n, i});
  LaurentPoly rhs = shift(gauss(-n + i - 1, i), n * i - choose2(i) + opt.rhs_exponent_offset);
  if (i % 2 != 0) rhs = -rhs;
  return {gauss(n, i), std::move(rhs)};
}

IdentitySides lemma2_sides(std::int64_t n, std::int64_t a, CheckOptions opt) {
  if (a < 0) reject("lemma2", {n, a});
  LaurentPoly lhs;
  for (std::int64_t s = 0; s <= a; ++s) {
    LaurentPoly term = shift(gauss(n, s), choose2(s));
    if (s % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  return {std::move(lhs), shift(gauss(a - n, a), n * a + opt.rhs_exponent_offset)};
}

IdentitySides lemma3_sides(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt) {
  if (!admissible(IdentityId::lemma3, {m, a, t})) reject("lemma3", {m, a, t});
  return {alternating_product_sum(a, m, a, t), shift(gauss(a - m, a - t), m * (a - t) + opt.rhs_exponent_offset)};
}

IdentitySides theorem2_sides(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt) {
  if (!admissible(IdentityId::theorem2, {m, a, t})) reject("theorem2", {m, a, t});
  return {alternating_product_sum(m, m, a, t), shift(gauss(a - m, a - t), m * (a - t) + opt.rhs_exponent_offset)};
}

IdentitySides corollary1_sides(std::int64_t m, std::int64_t a, CheckOptions opt) {
  if (!admissible(IdentityId::corollary1, {m, a})) reject("corollary1", {m, a});
  return {alternating_product_sum(m, m, a, a - m), shift(gauss(a - m, m), m * m + opt.rhs_exponent_offset)};
}

bool check_pascal(std::int64_t n, std::int64_t i, CheckOptions opt) {
  auto s = pascal_sides(n, i, opt);
  return s.lhs == s.rhs;
}

bool check_lemma1(std::int64_t n, std::int64_t i, CheckOptions opt) {
  auto s = lemma1_sides(n, i, opt);
  if (s.lhs != s.rhs) return false;
  const std::int64_t e = n * i - choose2(i) + opt.rhs_exponent_offset;
  for (int q0 : {2, 3, 5}) {
    const BigInt q(q0);
    const Rational lhs = gauss_eval_product(n, i, q);
    Rational rhs = rational_power(q, e) * gauss_eval_product(-n + i - 1, i, q);
    if (i % 2 != 0) rhs = -rhs;
    if (lhs != rhs) return false;
    if (evaluate(s.lhs, q) != lhs) return false;
  }
  return true;
}

bool check_lemma2(std::int64_t n, std::int64_t a, CheckOptions opt) {
  auto s = lemma2_sides(n, a, opt);
  return s.lhs == s.rhs;
}

bool check_lemma3(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt) {
  auto s = lemma3_sides(m, a, t, opt);
  return s.lhs == s.rhs;
}

bool check_theorem2(std::int64_t m, std::int64_t a, std::int64_t t, CheckOptions opt) {
  auto s = theorem2_sides(m, a, t, opt);
  return s.lhs == s.rhs;
}

bool check_corollary1(std::int64_t m, std::int64_t a, CheckOptions opt) {
  auto c = corollary1_sides(m, a, opt);
  auto t = theorem2_sides(m, a, a - m, opt);
  const bool substitution_consistent = c.lhs == t.lhs && c.rhs == t.rhs;
  return c.lhs == c.rhs && substitution_consistent && check_theorem2(m, a, a - m, opt);
}

IdentityReport run_grid(IdentityId id, const GridBounds& bounds, CheckOptions opt, unsigned threads) {
  const std::size_t arity = identity_parameters(id).size();
  if (bounds.ranges.size() != arity)
    throw std::invalid_argument("run_grid: " + std::string(identity_name(id)) + " takes " + std::to_string(arity) +
                                " parameter ranges, got " + std::to_string(bounds.ranges.size()));
  bool any_empty = false;
  for (const auto& r : bounds.ranges) {
    if (r.empty()) {
      any_empty = true;
      continue;
    }
    if (std::max(std::abs(r.lo), std::abs(r.hi)) > kMaxGridParameter)
      throw std::invalid_argument("run_grid: parameter range exceeds +/-" + std::to_string(kMaxGridParameter));
  }

  IdentityReport report;
  report.id = id;
  report.bounds = bounds;
  if (any_empty) return report;

  // Lexicographic enumeration of admissible tuples.
  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> cur(arity);
  for (std::size_t k = 0; k < arity; ++k) cur[k] = bounds.ranges[k].lo;
  do {
    if (admissible(id, cur)) tuples.push_back(cur);
  } while (advance(cur, bounds.ranges));
  report.instances = tuples.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tuples.size())));
  std::vector<std::vector<IdentityFailure>> partial(threads);
  auto worker = [&](unsigned w) {
    for (std::size_t idx = w; idx < tuples.size(); idx += threads) {
      const auto& p = tuples[idx];
      if (check_for(id, p, opt)) continue;
      auto s = sides_for(id, p, opt);
      partial[w].push_back({p, to_string(s.lhs), to_string(s.rhs)});
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  for (auto& part : partial)
    for (auto& f : part) report.failures.push_back(std::move(f));
  std::sort(report.failures.begin(), report.failures.end(),
            [](const IdentityFailure& x, const IdentityFailure& y) { return x.params < y.params; });
  return report;
}

GridBounds default_bounds(IdentityId id, std::int64_t max) {
  switch (id) {
    case IdentityId::pascal:
      return {{{-max, max + 2}, {1, max}}};
    case IdentityId::lemma1:
    case IdentityId::lemma2:
      return {{{-max, max + 2}, {0, max}}};
    case IdentityId::lemma3:
    case IdentityId::theorem2:
      return {{{0, max}, {0, max}, {0, max}}};
    case IdentityId::corollary1:
      return {{{0, max}, {0, max}}};
  }
  return {};
}

std::string render_table(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "identity    instances  failures  status\n";
  for (const auto& r : reports) {
    std::string name(identity_name(r.id));
    name.resize(12, ' ');
    std::string inst = std::to_string(r.instances);
    std::string fails = std::to_string(r.failures.size());
    os << name << std::string(9 - std::min<std::size_t>(9, inst.size()), ' ') << inst << "  "
       << std::string(8 - std::min<std::size_t>(8, fails.size()), ' ') << fails << "  " << (r.passed() ? "ok" : "FAIL")
       << "\n";
  }
  for (const auto& r : reports) {
    const auto names = identity_parameters(r.id);
    for (const auto& f : r.failures) {
      os << "counterexample " << identity_name(r.id) << " (";
      for (std::size_t k = 0; k < f.params.size(); ++k) os << (k ? ", " : "") << names[k] << "=" << f.params[k];
      os << "): lhs = " << f.lhs << "; rhs = " << f.rhs << "\n";
    }
  }
  return os.str();
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json bounds = nlohmann::json::object();
  const auto names = identity_parameters(report.id);
  for (std::size_t k = 0; k < report.bounds.ranges.size() && k < names.size(); ++k)
    bounds[names[k]] = {report.bounds.ranges[k].lo, report.bounds.ranges[k].hi};
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json params = nlohmann::json::object();
    for (std::size_t k = 0; k < f.params.size(); ++k) params[names[k]] = f.params[k];
    failures.push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"identity", std::string(identity_name(report.id))},
          {"bounds", bounds},
          {"instances", report.instances},
          {"failure_count", report.failures.size()},
          {"passed", report.passed()},
          {"failures", failures}};
}

}  // namespace qkneser
