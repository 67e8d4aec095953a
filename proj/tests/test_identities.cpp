#include "doctest.h"
#include "qkneser/identities.hpp"
#include "qkneser/qbinom.hpp"

using namespace qkneser;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

}  // namespace

TEST_CASE("pascal examples") {
  CHECK(check_pascal(4, 2));
  auto s = pascal_sides(4, 2);
  CHECK(s.lhs == P("q^4 + q^3 + 2*q^2 + q + 1"));
  CHECK(s.rhs == s.lhs);
  CHECK(check_pascal(0, 1));
  CHECK(pascal_sides(0, 1).lhs.is_zero());
  CHECK(check_pascal(-3, 2));
  for (int q0 : {2, 3})
    CHECK(gauss_eval_product(-3, 2, q0) ==
          gauss_eval_product(-4, 1, q0) + rational_power(q0, 2) * gauss_eval_product(-4, 2, q0));
  CHECK_THROWS_AS(check_pascal(3, 0), std::invalid_argument);
}

TEST_CASE("lemma1 examples") {
  for (int n : {-4, 0, 6}) CHECK(check_lemma1(n, 0));
  CHECK(check_lemma1(-1, 1));
  CHECK(lemma1_sides(-1, 1).rhs == P("-q^-1"));
  CHECK(check_lemma1(5, 2));
  CHECK(gauss_eval_product(5, 2, 2) == rational_power(2, 9) * gauss_eval_product(-4, 2, 2));
  CHECK_THROWS_AS(check_lemma1(2, -1), std::invalid_argument);
}

TEST_CASE("lemma2 examples") {
  auto s = lemma2_sides(2, 2);
  CHECK(s.lhs.is_zero());
  CHECK(s.rhs.is_zero());
  s = lemma2_sides(-1, 1);
  CHECK(s.lhs == P("1 + q^-1"));
  CHECK(s.rhs == P("1 + q^-1"));
  s = lemma2_sides(0, 0);
  CHECK(s.lhs == P("1"));
  CHECK(s.rhs == P("1"));
  CHECK_THROWS_AS(check_lemma2(0, -1), std::invalid_argument);
}

TEST_CASE("lemma3 examples") {
  auto s = lemma3_sides(1, 1, 1);
  CHECK(s.lhs == P("1"));
  CHECK(s.rhs == P("1"));
  s = lemma3_sides(2, 2, 0);
  CHECK(s.lhs.is_zero());
  CHECK(s.rhs.is_zero());
  CHECK(check_lemma3(3, 2, 1));
  s = lemma3_sides(3, 2, 1);
  // [2,1] - [3,1][1,1] + q [3,2][0,1] at q = 2: 3 - 7 + 0 = -4; rhs 2^3 [-1,1] = -4.
  CHECK(evaluate(s.lhs, 2) == -4);
  CHECK(evaluate(s.rhs, 2) == -4);
  CHECK_THROWS_AS(check_lemma3(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma3(3, 1, 2), std::invalid_argument);
}

TEST_CASE("theorem2 examples") {
  auto s = theorem2_sides(1, 2, 1);
  CHECK(s.lhs == P("q"));
  CHECK(s.rhs == P("q"));
  s = theorem2_sides(0, 3, 2);
  CHECK(s.lhs == gauss(3, 2));
  CHECK(s.rhs == gauss(3, 2));
  s = theorem2_sides(2, 2, 2);
  CHECK(s.lhs == P("1"));
  CHECK(s.rhs == P("1"));
  CHECK_THROWS_AS(check_theorem2(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem2(1, 2, 3), std::invalid_argument);
}

TEST_CASE("corollary1 examples") {
  auto s = corollary1_sides(1, 2);
  CHECK(s.lhs == P("q"));
  CHECK(s.rhs == P("q"));
  CHECK(corollary1_sides(0, 0).lhs == P("1"));
  s = corollary1_sides(2, 4);
  CHECK(s.rhs == P("q^4"));
  CHECK(s.lhs == P("q^4"));
  CHECK(evaluate(s.lhs, 2) == 16);
  CHECK(check_corollary1(2, 4));
  CHECK_THROWS_AS(check_corollary1(3, 2), std::invalid_argument);
}

TEST_CASE("full grids pass") {
  CHECK(run_grid(IdentityId::pascal, {{{-8, 12}, {1, 8}}}).passed());
  auto r = run_grid(IdentityId::theorem2, {{{0, 10}, {0, 10}, {0, 10}}});
  CHECK(r.passed());
  CHECK(r.instances > 0);
  for (IdentityId id : kAllIdentities) {
    auto rep = run_grid(id, default_bounds(id, 10));
    CHECK_MESSAGE(rep.passed(), identity_name(id));
  }
}

TEST_CASE("grid bookkeeping") {
  auto empty = run_grid(IdentityId::lemma3, {{{0, -1}, {0, 5}, {0, 5}}});
  CHECK(empty.instances == 0);
  CHECK(empty.passed());
  // t <= a <= m <= 2: (0,0,0) (1,0,0) (1,1,0) (1,1,1) (2,0,0) (2,1,0) (2,1,1) (2,2,0) (2,2,1) (2,2,2)
  CHECK(run_grid(IdentityId::lemma3, {{{0, 2}, {0, 2}, {0, 2}}}).instances == 10);
  CHECK_THROWS_AS(run_grid(IdentityId::pascal, {{{0, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(run_grid(IdentityId::pascal, {{{0, 100}, {1, 2}}}), std::invalid_argument);
}

TEST_CASE("negative controls: perturbed exponents are caught") {
  for (IdentityId id : kAllIdentities) {
    for (int offset : {-1, 1}) {
      auto rep = run_grid(id, default_bounds(id, 6), CheckOptions{offset});
      CHECK_MESSAGE(!rep.passed(), identity_name(id));
      CHECK(std::is_sorted(rep.failures.begin(), rep.failures.end(),
                           [](const auto& a, const auto& b) { return a.params < b.params; }));
    }
  }
  CHECK_FALSE(check_theorem2(1, 2, 1, CheckOptions{1}));
  CHECK_FALSE(check_lemma1(-1, 1, CheckOptions{1}));
}

TEST_CASE("parallel and sequential grid runs agree") {
  for (IdentityId id : kAllIdentities) {
    auto seq = run_grid(id, default_bounds(id, 5), CheckOptions{1}, 1);
    auto par = run_grid(id, default_bounds(id, 5), CheckOptions{1}, 4);
    REQUIRE(seq.failures.size() == par.failures.size());
    for (std::size_t k = 0; k < seq.failures.size(); ++k) {
      CHECK(seq.failures[k].params == par.failures[k].params);
      CHECK(seq.failures[k].lhs == par.failures[k].lhs);
    }
  }
}

TEST_CASE("lemma3 and theorem2 coincide when a = m") {
  for (int m = 0; m <= 8; ++m)
    for (int t = 0; t <= m; ++t) {
      auto l = lemma3_sides(m, m, t);
      auto th = theorem2_sides(m, m, t);
      CHECK(l.lhs == th.lhs);
      CHECK(l.rhs == th.rhs);
      CHECK(l.lhs == l.rhs);
    }
}

TEST_CASE("report rendering") {
  auto rep = run_grid(IdentityId::corollary1, {{{0, 1}, {0, 2}}}, CheckOptions{1});
  auto j = to_json(rep);
  CHECK(j["identity"] == "corollary1");
  CHECK(j["instances"] == 5);
  CHECK(j["failure_count"] == rep.failures.size());
  CHECK(j["failures"][0]["params"]["m"] == 0);
  CHECK(j["bounds"]["a"][1] == 2);
  auto text = render_table({rep});
  CHECK(text.find("corollary1") != std::string::npos);
  CHECK(text.find("counterexample corollary1 (m=0, a=0)") != std::string::npos);
  CHECK(parse_identity("theorem2") == IdentityId::theorem2);
  CHECK_FALSE(parse_identity("lemma9").has_value());
}
