#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "plumb/cfrac.hpp"
#include "plumb/error.hpp"

using plumb::BigInt;
using plumb::Coeffs;
using plumb::Rational;

namespace {

Rational R(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

bool same(const Rational& x, const oracle::Q& y) {
  return x.num() == boost::multiprecision::numerator(y) && x.den() == boost::multiprecision::denominator(y);
}

template <class F>
void sweep(std::int64_t lo, std::int64_t hi, std::size_t max_len, F f) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    Coeffs a(len, lo);
    while (true) {
      f(a);
      std::size_t i = len;
      while (i > 0 && a[i - 1] == hi) a[--i] = lo;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(R(4, -6) == R(-2, 3));
  CHECK(R(4, -6).den() == 3);
  CHECK((R(1, 2) + R(1, 3)) == R(5, 6));
  CHECK((R(1, 2) / R(-1, 4)) == Rational(-2));
  CHECK(Rational(2).to_string() == "2/1");
  CHECK(Rational::parse("-10/4") == R(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(R(1, 3) < R(1, 2));
  CHECK_THROWS_AS(R(1, 0), plumb::Error);
}

TEST_CASE("eval_neg_cf examples") {
  CHECK(plumb::eval_neg_cf(Coeffs{2}) == Rational(2));
  CHECK(plumb::eval_neg_cf(Coeffs{3, 2}) == R(5, 2));
  CHECK(plumb::eval_neg_cf(Coeffs{2, 2, 2}) == R(4, 3));
  CHECK(plumb::eval_neg_cf(Coeffs{3, 1}) == Rational(2));
}

TEST_CASE("eval_neg_cf errors") {
  CHECK_THROWS_AS(plumb::eval_neg_cf(Coeffs{}), plumb::Error);
  try {
    plumb::eval_neg_cf(Coeffs{2, 1, 1});  // 1 - 1/1 = 0 in the tail
    FAIL("expected degenerate");
  } catch (const plumb::Error& e) {
    CHECK(e.kind() == plumb::ErrorKind::degenerate);
  }
}

TEST_CASE("expand_neg_cf examples and errors") {
  CHECK(plumb::expand_neg_cf(Rational(2)) == Coeffs{2});
  CHECK(plumb::expand_neg_cf(R(5, 2)) == Coeffs{3, 2});
  CHECK(plumb::expand_neg_cf(R(4, 3)) == Coeffs{2, 2, 2});
  CHECK_THROWS_AS(plumb::expand_neg_cf(Rational(1)), plumb::Error);
  CHECK_THROWS_AS(plumb::expand_neg_cf(R(1, 2)), plumb::Error);
  CHECK_THROWS_AS(plumb::expand_neg_cf(BigInt(10), BigInt(4)), plumb::Error);
}

TEST_CASE("expand/eval round trip for p/q up to 200") {
  for (std::int64_t p = 2; p <= 200; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto c = plumb::expand_neg_cf(BigInt(p), BigInt(q));
      for (auto x : c) REQUIRE(x >= 2);
      REQUIRE(plumb::eval_neg_cf(c) == R(p, q));
    }
}

TEST_CASE("convergents examples") {
  auto c = plumb::convergents(Coeffs{3, 2});
  CHECK(c.p == 5);
  CHECK(c.q == 2);
  CHECK(c.p_prev == 3);
  CHECK(c.q_prev == 1);
  c = plumb::convergents(Coeffs{4});
  CHECK(c.p == 4);
  CHECK(c.q == 1);
  CHECK(c.p_prev == 1);
  CHECK(c.q_prev == 0);
  c = plumb::convergents(Coeffs{2, 2});
  CHECK((c.p == 3 && c.q == 2 && c.p_prev == 2 && c.q_prev == 1));
  CHECK_THROWS_AS(plumb::convergents(Coeffs{3, 1}), plumb::Error);
}

TEST_CASE("convergents agree with the Boost oracle, determinant and gcd hold") {
  sweep(2, 6, 6, [](const Coeffs& a) {
    const auto c = plumb::convergents(a);
    REQUIRE(c.p_prev * c.q - c.q_prev * c.p == 1);
    REQUIRE(boost::multiprecision::gcd(c.p, c.q) == 1);
    REQUIRE(boost::multiprecision::gcd(c.p_prev, c.q_prev) == 1);
    REQUIRE(same(Rational(c.p, c.q), oracle::neg_cf(a)));
    if (a.size() > 1) REQUIRE(same(Rational(c.p_prev, c.q_prev), oracle::neg_cf(Coeffs(a.begin(), a.end() - 1))));
  });
}

TEST_CASE("eval is > 1 and strictly increasing in each coefficient") {
  sweep(2, 5, 5, [](const Coeffs& a) {
    const auto x = plumb::eval_neg_cf(a);
    REQUIRE(x > Rational(1));
    for (std::size_t i = 0; i < a.size(); ++i) {
      Coeffs b = a;
      ++b[i];
      REQUIRE(plumb::eval_neg_cf(b) > x);
    }
  });
}

TEST_CASE("decremented expansions") {
  CHECK(plumb::decrement_last(Coeffs{3, 2}) == Coeffs{3, 1});
  CHECK(plumb::reverse_decrement_last(Coeffs{3, 2}) == Coeffs{2, 2});
  CHECK(plumb::reverse_decrement_last(Coeffs{4, 3, 2}) == Coeffs{2, 3, 3});
}

TEST_CASE("convergent identity report examples") {
  using plumb::CheckStatus;
  auto rep = plumb::verify_appendix(Coeffs{3, 2});
  CHECK(rep.all_hold());
  for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::pass);
  CHECK(rep.checks[2].lhs == "2/1");
  CHECK(rep.checks[3].lhs == "3/2");

  rep = plumb::verify_appendix(Coeffs{2, 2});
  CHECK(rep.checks[0].status == CheckStatus::not_applicable);
  CHECK(plumb::to_string(rep.checks[0].status) == "not-applicable");
  CHECK(rep.all_hold());

  rep = plumb::verify_appendix(Coeffs{4, 3, 2});
  for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("convergent identities against the oracle") {
  sweep(2, 6, 6, [](const Coeffs& a) {
    const auto rep = plumb::verify_appendix(a);
    REQUIRE(rep.all_hold());
    REQUIRE((rep.checks[0].status == plumb::CheckStatus::pass) == (a.front() >= 3));
    const auto c = plumb::convergents(a);
    Coeffs dec = a;
    dec.back() -= 1;
    if (a.size() > 1 || a.back() > 2) REQUIRE(same(Rational(c.p - c.p_prev, c.q - c.q_prev), oracle::neg_cf(dec)));
    Coeffs rev(a.rbegin(), a.rend());
    rev.back() -= 1;
    if (c.p_prev != c.q_prev && (rev.size() > 1 || rev.back() > 1))
      REQUIRE(same(Rational(c.p - c.q, c.p_prev - c.q_prev), oracle::neg_cf(rev)));
  });
}

TEST_CASE("formatting") {
  CHECK(plumb::format_coeffs(Coeffs{3, 2}) == "[3,2]");
}
