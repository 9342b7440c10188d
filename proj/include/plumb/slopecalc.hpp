#pragma once

// Slopes on a torus, unimodular gluing maps and the Farey bypass rule.
//
// A curve a*mu + b*lambda is the primitive vector (mer, lon) = (a, b) and has
// slope lon/mer; mer = 0 is the slope infinity. Matrices act on (mer, lon)^T.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <tuple>

#include "plumb/cfrac.hpp"

namespace plumb {

class Slope {
 public:
  /// Slope lon/mer; (0, 0) is rejected, any common factor is divided out.
  static Slope from_vector(std::int64_t mer, std::int64_t lon);
  /// Slope num/den, i.e. from_vector(den, num).
  static Slope of(std::int64_t num, std::int64_t den = 1) { return from_vector(den, num); }
  static Slope infinity() { return Slope(0, 1); }

  std::int64_t mer() const { return mer_; }
  std::int64_t lon() const { return lon_; }
  bool is_infinite() const { return mer_ == 0; }
  Rational value() const;

  /// "p/q" with the sign on p, or "inf".
  std::string to_string() const;
  static Slope parse(const std::string& text);

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(std::int64_t mer, std::int64_t lon) : mer_(mer), lon_(lon) {}
  std::int64_t mer_;
  std::int64_t lon_;
};

/// 2x2 integer matrix, row-major.
struct IntMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const;
  std::int64_t trace() const;
  IntMat2 operator*(const IntMat2& o) const;
  IntMat2 operator-() const { return {-a, -b, -c, -d}; }
  /// Inverse of a matrix with determinant +-1.
  IntMat2 inverse() const;
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
  std::string to_string() const;
};

struct GluingMatrices {
  IntMat2 B;  ///< monodromy [[p,q],[-p',-q']]
  IntMat2 A;  ///< T_1 -> T_0 gluing [[-p,q],[p',-q']]
  IntMat2 g;  ///< boundary of the singular-fibre neighbourhood [[r,r'],[-s,-s']]
};

struct DividingSet {
  Slope slope;
  std::int64_t pairs = 1;  ///< #Gamma = 2 * pairs
};

enum class BypassSide { front, back };

/// Convergents of a coefficient tuple narrowed to 64 bits.
struct IntConvergents {
  std::int64_t p, q, p_prev, q_prev;
};
IntConvergents int_convergents(std::span<const std::int64_t> coeffs);

GluingMatrices build_matrices(std::span<const std::int64_t> a, std::span<const std::int64_t> z);

Slope act(const IntMat2& m, const Slope& s);

bool is_farey_edge(const Slope& s1, const Slope& s2);

/// Slope after attaching a bypass along rulings of slope r to a torus with two
/// dividing curves of slope s: the point of the counterclockwise arc [r, s]
/// (front) or [s, r] (back) closest to r that shares a Farey edge with s.
Slope bypass_slope(const Slope& s, const Slope& r, BypassSide side);

DividingSet bypass_on_dividing_set(const DividingSet& d, const Slope& r, BypassSide side);

/// Rounded torus slope (kb + kt + 1) / (ka) for s0 = b/a, s1 = t/a.
Slope edge_round_slope(std::int64_t k, const Slope& s0, const Slope& s1);

struct SlopeTriple {
  Slope t0, t1, t2;
};

/// Dividing slopes on T_0, T_1 and T_2 for Gamma_{T_0} of slope t0 and a
/// Legendrian singular fibre of twisting -m.
SlopeTriple slope_triple(std::span<const std::int64_t> a, std::span<const std::int64_t> z,
                         const Slope& t0, std::int64_t m);

/// (-1, (p-p')/(q-q'), -1); needs length >= 2 and a_1 >= 3.
SlopeTriple normal_form_targets(std::span<const std::int64_t> a);

/// Position of s on the counterclockwise circle starting at `from`, as an
/// exact comparison key: compare_arc(from, x, y) < 0 iff x comes before y.
int compare_arc(const Slope& from, const Slope& x, const Slope& y);

std::string to_string(BypassSide side);
BypassSide parse_side(const std::string& text);

}  // namespace plumb
