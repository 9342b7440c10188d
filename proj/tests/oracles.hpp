#pragma once

// Reference computations used to cross-check the library. They deliberately
// share no code with it: rationals come from Boost, slopes are plain integer
// pairs and arc positions are floating-point angles.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

/// a_1 - 1/(a_2 - 1/(... - 1/a_n)), evaluated front to back as a continued
/// product of Moebius maps.
inline Q neg_cf(const std::vector<std::int64_t>& a) {
  // [[a,-1],[1,0]] products; value = top-left / bottom-left.
  boost::multiprecision::cpp_int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (auto x : a) {
    const boost::multiprecision::cpp_int n00 = m00 * x + m01, n10 = m10 * x + m11;
    m01 = -m00;
    m11 = -m10;
    m00 = n00;
    m10 = n10;
  }
  return Q(m00, m10);
}

inline std::int64_t prod_minus_one(const std::vector<std::int64_t>& xs) {
  std::int64_t out = 1;
  for (auto x : xs) out *= x - 1;
  return out;
}

/// A slope as (lon, mer) with mer > 0, or (1, 0) for infinity.
struct Pt {
  std::int64_t lon, mer;
  bool operator==(const Pt&) const = default;
};

inline Pt make_pt(std::int64_t lon, std::int64_t mer) {
  if (mer < 0 || (mer == 0 && lon < 0)) lon = -lon, mer = -mer;
  const auto g = std::gcd(lon, mer);
  return {lon / g, mer / g};
}

/// Angle in [0, pi) of the line through (lon, mer).
inline long double angle(const Pt& p) {
  if (p.mer == 0) return 0.0L;
  return std::atan2(static_cast<long double>(p.mer), static_cast<long double>(p.lon));
}

inline long double ccw_offset(const Pt& from, const Pt& to) {
  const long double pi = std::acos(-1.0L);
  long double d = angle(to) - angle(from);
  if (d < 0) d += pi;
  return d;
}

/// All slopes of the Stern-Brocot tree down to `depth`, with both signs,
/// zero and infinity.
inline std::vector<Pt> farey_slopes(int depth) {
  std::vector<Pt> out{{0, 1}, {1, 0}};
  struct Node {
    std::int64_t ln, ld, rn, rd;
    int d;
  };
  std::vector<Node> stack{{0, 1, 1, 0, 1}};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    const std::int64_t mn = n.ln + n.rn, md = n.ld + n.rd;
    out.push_back({mn, md});
    out.push_back({-mn, md});
    if (n.d < depth) {
      stack.push_back({n.ln, n.ld, mn, md, n.d + 1});
      stack.push_back({mn, md, n.rn, n.rd, n.d + 1});
    }
  }
  return out;
}

inline bool farey_neighbours(const Pt& x, const Pt& y) {
  const auto det = x.lon * y.mer - x.mer * y.lon;
  return det == 1 || det == -1;
}

/// Among `neighbours` of s, the one in the counterclockwise arc from r to s
/// (front) or from s to r (back) closest to r.
inline std::optional<Pt> bypass(const std::vector<Pt>& neighbours, const Pt& s, const Pt& r, bool front) {
  std::optional<Pt> best;
  long double best_key = 0;
  const long double span = front ? ccw_offset(r, s) : ccw_offset(s, r);
  for (const auto& c : neighbours) {
    if (c == s) continue;
    if (front) {
      const long double off = c == r ? 0.0L : ccw_offset(r, c);
      if (off > span) continue;
      if (!best || off < best_key) best = c, best_key = off;
    } else {
      const long double off = c == r ? span : ccw_offset(s, c);
      if (off > span) continue;
      if (!best || off > best_key) best = c, best_key = off;
    }
  }
  return best;
}

}  // namespace oracle
