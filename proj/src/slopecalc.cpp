#include "plumb/slopecalc.hpp"

#include <numeric>

namespace plumb {

namespace {

// Points of the projective line live in the (lon, mer) plane; the
// counterclockwise order of the disc model is the counterclockwise order of
// these directions.
struct Vec {
  std::int64_t x;  // lon
  std::int64_t y;  // mer
};

Vec as_vec(const Slope& s) { return {s.lon(), s.mer()}; }

std::int64_t cross(Vec u, Vec w) { return sub_checked(mul_checked(u.x, w.y), mul_checked(u.y, w.x)); }

struct Bezout {
  std::int64_t g, x, y;
};

// g = a*x + b*y with g = gcd(a, b) >= 0.
Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// A direction v with cross(s, v) = 1.
Vec farey_partner(Vec s) {
  // s.x * v.y - s.y * v.x = 1
  Bezout e = ext_gcd(s.x, -s.y);
  return {e.y, e.x};
}

void require_tuple(std::span<const std::int64_t> t, const char* name) {
  if (t.empty()) fail(ErrorKind::usage, std::string(name) + " tuple is empty");
  for (auto v : t)
    if (v < 2) fail(ErrorKind::usage, std::string(name) + " entries must be >= 2");
}

}  // namespace

Slope Slope::from_vector(std::int64_t mer, std::int64_t lon) {
  if (mer == 0 && lon == 0) fail(ErrorKind::usage, "zero vector is not a slope");
  std::int64_t g = std::gcd(mer, lon);
  mer /= g;
  lon /= g;
  if (mer < 0 || (mer == 0 && lon < 0)) {
    mer = -mer;
    lon = -lon;
  }
  return Slope(mer, lon);
}

Rational Slope::value() const {
  if (is_infinite()) fail(ErrorKind::usage, "slope inf has no rational value");
  return Rational(BigInt(lon_), BigInt(mer_));
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return std::to_string(lon_) + "/" + std::to_string(mer_);
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return of(n);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return of(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::usage, "cannot parse slope '" + text + "'");
  }
}

std::int64_t IntMat2::det() const { return sub_checked(mul_checked(a, d), mul_checked(b, c)); }

std::int64_t IntMat2::trace() const { return add_checked(a, d); }

IntMat2 IntMat2::operator*(const IntMat2& o) const {
  return {add_checked(mul_checked(a, o.a), mul_checked(b, o.c)),
          add_checked(mul_checked(a, o.b), mul_checked(b, o.d)),
          add_checked(mul_checked(c, o.a), mul_checked(d, o.c)),
          add_checked(mul_checked(c, o.b), mul_checked(d, o.d))};
}

IntMat2 IntMat2::inverse() const {
  const std::int64_t dt = det();
  if (dt != 1 && dt != -1) fail(ErrorKind::usage, "matrix is not unimodular");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

std::string IntMat2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

IntConvergents int_convergents(std::span<const std::int64_t> coeffs) {
  Convergents c = convergents(coeffs);
  return {narrow(c.p), narrow(c.q), narrow(c.p_prev), narrow(c.q_prev)};
}

GluingMatrices build_matrices(std::span<const std::int64_t> a, std::span<const std::int64_t> z) {
  require_tuple(a, "a");
  require_tuple(z, "z");
  const IntConvergents pa = int_convergents(a);
  const IntConvergents pz = int_convergents(z);
  GluingMatrices m;
  m.B = {pa.p, pa.q, -pa.p_prev, -pa.q_prev};
  m.A = {-pa.p, pa.q, pa.p_prev, -pa.q_prev};
  m.g = {pz.p, pz.p_prev, -pz.q, -pz.q_prev};
  return m;
}

Slope act(const IntMat2& m, const Slope& s) {
  const std::int64_t dt = m.det();
  if (dt != 1 && dt != -1) fail(ErrorKind::usage, "matrix is not unimodular");
  std::int64_t mer = add_checked(mul_checked(m.a, s.mer()), mul_checked(m.b, s.lon()));
  std::int64_t lon = add_checked(mul_checked(m.c, s.mer()), mul_checked(m.d, s.lon()));
  return Slope::from_vector(mer, lon);
}

bool is_farey_edge(const Slope& s1, const Slope& s2) {
  std::int64_t d = cross(as_vec(s1), as_vec(s2));
  return d == 1 || d == -1;
}

Slope bypass_slope(const Slope& s, const Slope& r, BypassSide side) {
  if (s == r) fail(ErrorKind::usage, "ruling slope equals the dividing slope " + s.to_string());
  const Vec sv = as_vec(s);
  const Vec v = farey_partner(sv);
  // Farey neighbours of s are v + k*s, k in Z; increasing k moves them clockwise
  // from just before -s towards s.
  Vec rv = as_vec(r);
  std::int64_t c = cross(sv, rv);
  if (c < 0) {
    rv = {-rv.x, -rv.y};
    c = -c;
  }
  const std::int64_t t = cross(rv, v);
  // Neighbour k lies counterclockwise of r iff t - k*c >= 0.
  const std::int64_t k = side == BypassSide::front ? floor_div(t, c) : ceil_div(t, c);
  return Slope::from_vector(add_checked(v.y, mul_checked(k, sv.y)),
                            add_checked(v.x, mul_checked(k, sv.x)));
}

DividingSet bypass_on_dividing_set(const DividingSet& d, const Slope& r, BypassSide side) {
  if (d.pairs < 1) fail(ErrorKind::usage, "dividing set needs at least one pair");
  if (d.slope == r) fail(ErrorKind::usage, "ruling slope equals the dividing slope " + r.to_string());
  if (d.pairs > 1) return {d.slope, d.pairs - 1};
  return {bypass_slope(d.slope, r, side), 1};
}

Slope edge_round_slope(std::int64_t k, const Slope& s0, const Slope& s1) {
  if (k < 1) fail(ErrorKind::usage, "edge rounding needs k >= 1");
  if (s0.is_infinite() || s1.is_infinite() || s0.mer() != s1.mer())
    fail(ErrorKind::imbalanced_annulus,
         "imbalanced annulus: " + s0.to_string() + " and " + s1.to_string() + " differ in denominator");
  const std::int64_t a = s0.mer();
  const std::int64_t num =
      add_checked(add_checked(mul_checked(k, s0.lon()), mul_checked(k, s1.lon())), 1);
  return Slope::from_vector(mul_checked(k, a), num);
}

SlopeTriple slope_triple(std::span<const std::int64_t> a, std::span<const std::int64_t> z,
                         const Slope& t0, std::int64_t m) {
  require_tuple(a, "a");
  require_tuple(z, "z");
  if (m < 1) fail(ErrorKind::usage, "fibre twisting parameter m must be >= 1");
  const IntConvergents pa = int_convergents(a);
  const IntConvergents pz = int_convergents(z);
  const std::int64_t am = t0.mer(), b = t0.lon();
  Slope t1 = Slope::from_vector(add_checked(mul_checked(b, pa.q), mul_checked(am, pa.q_prev)),
                                add_checked(mul_checked(b, pa.p), mul_checked(am, pa.p_prev)));
  Slope t2 = Slope::from_vector(sub_checked(mul_checked(m, pz.p), pz.p_prev),
                                -sub_checked(mul_checked(m, pz.q), pz.q_prev));
  return {t0, t1, t2};
}

SlopeTriple normal_form_targets(std::span<const std::int64_t> a) {
  require_tuple(a, "a");
  if (a.size() < 2) fail(ErrorKind::usage, "cycle length must be > 1");
  if (a.front() < 3) fail(ErrorKind::usage, "a_1 must be >= 3");
  const IntConvergents pa = int_convergents(a);
  return {Slope::of(-1), Slope::of(pa.p - pa.p_prev, pa.q - pa.q_prev), Slope::of(-1)};
}

int compare_arc(const Slope& from, const Slope& x, const Slope& y) {
  if (x == y) return 0;
  if (x == from) return -1;
  if (y == from) return 1;
  const Vec f = as_vec(from);
  auto lift = [&](const Slope& s) {
    Vec v = as_vec(s);
    if (cross(f, v) < 0) v = {-v.x, -v.y};
    return v;
  };
  return cross(lift(x), lift(y)) > 0 ? -1 : 1;
}

std::string to_string(BypassSide side) { return side == BypassSide::front ? "front" : "back"; }

BypassSide parse_side(const std::string& text) {
  if (text == "front") return BypassSide::front;
  if (text == "back") return BypassSide::back;
  fail(ErrorKind::usage, "side must be front or back, got '" + text + "'");
}

}  // namespace plumb
