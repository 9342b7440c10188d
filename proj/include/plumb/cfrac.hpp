#pragma once

// Negative continued fractions [a_1,...,a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n)).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumb/checked.hpp"

namespace plumb {

using Coeffs = std::vector<std::int64_t>;

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num) : num_(num), den_(1) {}       // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  /// Always "p/q", including integers ("2/1").
  std::string to_string() const;
  static Rational parse(const std::string& text);

 private:
  BigInt num_;
  BigInt den_;
};

/// p/q = [a_1..a_n] and pPrev/qPrev = [a_1..a_{n-1}] (1/0 when n = 1).
struct Convergents {
  BigInt p;
  BigInt q;
  BigInt p_prev;
  BigInt q_prev;
};

/// Checks the coefficient invariant: nonempty, entries >= 2, last entry >= 1
/// when `allow_last_one` (decremented expansions), else >= 2.
void validate_coeffs(std::span<const std::int64_t> coeffs, bool allow_last_one);

/// Evaluates any integer sequence; throws `degenerate` if a tail is zero.
Rational eval_neg_cf(std::span<const std::int64_t> coeffs);

/// Inverse of eval_neg_cf on p/q with p > q >= 1; all entries >= 2.
Coeffs expand_neg_cf(const BigInt& p, const BigInt& q);
Coeffs expand_neg_cf(const Rational& x);

Convergents convergents(std::span<const std::int64_t> coeffs);

/// [a_1, ..., a_n - 1].
Coeffs decrement_last(std::span<const std::int64_t> coeffs);
/// [a_n, ..., a_1 - 1].
Coeffs reverse_decrement_last(std::span<const std::int64_t> coeffs);

enum class CheckStatus { pass, fail, not_applicable };

struct LemmaCheck {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string lhs;
  std::string rhs;
};

struct AppendixReport {
  Coeffs coeffs;
  std::array<LemmaCheck, 4> checks;

  /// True when no applicable check failed.
  bool all_hold() const;
};

/// Runs the four convergent identities on `a` (all entries >= 2).
AppendixReport verify_appendix(std::span<const std::int64_t> a);

std::string to_string(CheckStatus s);
std::string format_coeffs(std::span<const std::int64_t> coeffs);

}  // namespace plumb
