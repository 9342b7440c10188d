#include "plumb/cfrac.hpp"

#include <algorithm>
#include <sstream>

namespace plumb {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) fail(ErrorKind::degenerate, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(abs_big(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(ErrorKind::degenerate, "division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::usage, "cannot parse rational '" + text + "'");
  }
}

void validate_coeffs(std::span<const std::int64_t> coeffs, bool allow_last_one) {
  if (coeffs.empty()) fail(ErrorKind::usage, "empty coefficient sequence");
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    if (coeffs[i] < 2)
      fail(ErrorKind::usage, "coefficient " + std::to_string(coeffs[i]) + " at position " +
                                 std::to_string(i + 1) + " is below 2");
  }
  const std::int64_t last_min = allow_last_one ? 1 : 2;
  if (coeffs.back() < last_min)
    fail(ErrorKind::usage, "last coefficient " + std::to_string(coeffs.back()) + " is below " +
                               std::to_string(last_min));
}

Rational eval_neg_cf(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) fail(ErrorKind::usage, "empty coefficient sequence");
  // Evaluate from the tail as a fraction num/den.
  BigInt num = coeffs.back();
  BigInt den = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (num == 0) fail(ErrorKind::degenerate, "degenerate expansion " + format_coeffs(coeffs));
    // a - den/num = (a*num - den)/num
    BigInt next = BigInt(coeffs[i]) * num - den;
    den = num;
    num = next;
  }
  return Rational(num, den);
}

Coeffs expand_neg_cf(const BigInt& p, const BigInt& q) {
  if (q < 1 || p <= q)
    fail(ErrorKind::usage, "expansion needs p > q >= 1, got " + p.str() + "/" + q.str());
  if (boost::multiprecision::gcd(p, q) != 1)
    fail(ErrorKind::usage, "fraction " + p.str() + "/" + q.str() + " is not reduced");
  Coeffs out;
  BigInt num = p;
  BigInt den = q;
  while (true) {
    BigInt a = (num + den - 1) / den;  // ceiling; num, den > 0
    out.push_back(narrow(a));
    BigInt rem = a * den - num;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

Coeffs expand_neg_cf(const Rational& x) { return expand_neg_cf(x.num(), x.den()); }

Convergents convergents(std::span<const std::int64_t> coeffs) {
  validate_coeffs(coeffs, false);
  // p_k = a_k p_{k-1} - p_{k-2}, seeded with p_{-1} = 0, p_0 = 1, q_{-1} = -1, q_0 = 0.
  BigInt p_prev2 = 0, p_prev = 1;
  BigInt q_prev2 = -1, q_prev = 0;
  for (std::int64_t a : coeffs) {
    BigInt p = BigInt(a) * p_prev - p_prev2;
    BigInt q = BigInt(a) * q_prev - q_prev2;
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
  }
  return Convergents{p_prev, q_prev, p_prev2, q_prev2};
}

Coeffs decrement_last(std::span<const std::int64_t> coeffs) {
  Coeffs out(coeffs.begin(), coeffs.end());
  if (!out.empty()) out.back() -= 1;
  return out;
}

Coeffs reverse_decrement_last(std::span<const std::int64_t> coeffs) {
  Coeffs out(coeffs.rbegin(), coeffs.rend());
  if (!out.empty()) out.back() -= 1;
  return out;
}

bool AppendixReport::all_hold() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const LemmaCheck& c) { return c.status == CheckStatus::fail; });
}

AppendixReport verify_appendix(std::span<const std::int64_t> a) {
  validate_coeffs(a, false);
  const Convergents c = convergents(a);
  const BigInt& p = c.p;
  const BigInt& q = c.q;
  const BigInt& pp = c.p_prev;
  const BigInt& qp = c.q_prev;
  auto verdict = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };

  AppendixReport report;
  report.coeffs.assign(a.begin(), a.end());

  LemmaCheck& bound = report.checks[0];
  bound.name = "convergent-bound";
  bound.lhs = "p=" + p.str();
  bound.rhs = "2q+1=" + BigInt(2 * q + 1).str() + ", q+q'+1=" + BigInt(q + qp + 1).str();
  if (a.front() >= 3)
    bound.status = verdict(p >= 2 * q + 1 && 2 * q + 1 > q + qp + 1);

  LemmaCheck& gcds = report.checks[1];
  gcds.name = "gcd-shift";
  using boost::multiprecision::gcd;
  BigInt g1 = gcd(abs_big(qp + 1), q), g2 = gcd(abs_big(p - 1), q);
  BigInt g3 = gcd(abs_big(qp - 1), q), g4 = gcd(abs_big(p + 1), q);
  gcds.lhs = "(q'+1,q)=" + g1.str() + ", (q'-1,q)=" + g3.str();
  gcds.rhs = "(p-1,q)=" + g2.str() + ", (p+1,q)=" + g4.str();
  gcds.status = verdict(g1 == g2 && g3 == g4);

  LemmaCheck& trunc = report.checks[2];
  trunc.name = "decremented-quotient";
  Rational lhs3(p - pp, q - qp);
  Rational rhs3 = eval_neg_cf(decrement_last(a));
  trunc.lhs = lhs3.to_string();
  trunc.rhs = rhs3.to_string();
  trunc.status = verdict(lhs3 == rhs3);

  LemmaCheck& rev = report.checks[3];
  rev.name = "reversed-quotient";
  Rational lhs4(p - q, pp - qp);
  Rational rhs4 = eval_neg_cf(reverse_decrement_last(a));
  rev.lhs = lhs4.to_string();
  rev.rhs = rhs4.to_string();
  rev.status = verdict(lhs4 == rhs4);

  return report;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string format_coeffs(std::span<const std::int64_t> coeffs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ']';
  return os.str();
}

}  // namespace plumb
