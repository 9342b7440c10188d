#include "plumb/legendrian.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plumb {

LegendrianInvariants invariants(const FrontComponent& front) {
  if (front.cusps_up < 0 || front.cusps_down < 0) fail(ErrorKind::malformed_front, "malformed front: negative cusp count");
  const std::int64_t cusps = front.cusps_up + front.cusps_down;
  if (cusps % 2 != 0) fail(ErrorKind::malformed_front, "malformed front: odd number of cusps");
  if (front.knot_class == KnotClass::nullhomologous && cusps < 2)
    fail(ErrorKind::malformed_front, "malformed front: a front in a ball has at least two cusps");
  if ((front.cusps_down - front.cusps_up) % 2 != 0)
    fail(ErrorKind::malformed_front, "malformed front: cusp difference is odd");
  return {front.writhe - cusps / 2, (front.cusps_down - front.cusps_up) / 2};
}

std::vector<LegendrianInvariants> invariants(const FrontDiagram& diagram) {
  std::vector<LegendrianInvariants> out;
  out.reserve(diagram.size());
  for (const auto& c : diagram) out.push_back(invariants(c));
  return out;
}

FrontComponent standard_unknot() { return {0, 1, 1, KnotClass::nullhomologous}; }

FrontDiagram arm_front(std::size_t m) {
  if (m == 0) fail(ErrorKind::usage, "arm must have at least one component");
  FrontDiagram out{{0, 0, 0, KnotClass::gamma}};
  for (std::size_t i = 1; i < m; ++i) out.push_back(standard_unknot());
  return out;
}

LegendrianInvariants stabilize(const LegendrianInvariants& inv, std::int64_t up, std::int64_t down) {
  if (up < 0 || down < 0) fail(ErrorKind::usage, "stabilization counts must be non-negative");
  return {inv.tb - up - down, inv.rot + down - up};
}

std::int64_t StabilizationTarget::stabilizations() const { return tb - (framing + 1); }

std::vector<RotationVector> enumerate_rotation_vectors(std::span<const StabilizationTarget> targets) {
  std::vector<std::int64_t> counts;
  std::size_t total = 1;
  for (const auto& t : targets) {
    const std::int64_t k = t.stabilizations();
    if (k < 0)
      fail(ErrorKind::unreachable_framing,
           "cannot reach framing " + std::to_string(t.framing) + " by stabilization from tb " +
               std::to_string(t.tb));
    counts.push_back(k);
    total *= static_cast<std::size_t>(k + 1);
    if (total > 10'000'000) fail(ErrorKind::bound_exceeded, "bound exceeded: too many rotation vectors");
  }
  std::vector<RotationVector> out;
  out.reserve(total);
  RotationVector cur(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) cur[i] = -counts[i];
  // Odometer over {-k, -k+2, ..., k} per component, last index fastest.
  while (true) {
    out.push_back(cur);
    std::size_t i = counts.size();
    while (i > 0) {
      --i;
      if (cur[i] + 2 <= counts[i]) {
        cur[i] += 2;
        break;
      }
      cur[i] = -counts[i];
      if (i == 0) return out;
    }
    if (counts.empty()) return out;
  }
}

ChernCochain chern_cochain(const RotationVector& v) { return ChernCochain{v}; }

namespace {

using BigRow = std::vector<BigInt>;

// Row echelon basis of the integer lattice spanned by `gens`, pivots positive.
std::vector<std::pair<std::size_t, BigRow>> echelon_basis(std::span<const std::vector<std::int64_t>> gens,
                                                          std::size_t width) {
  std::vector<BigRow> rows;
  for (const auto& g : gens) {
    if (g.size() != width) fail(ErrorKind::length_mismatch, "coboundary vector length mismatch");
    rows.emplace_back(g.begin(), g.end());
  }
  std::vector<std::pair<std::size_t, BigRow>> basis;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col])) piv = r;
      }
      if (piv == rows.size()) break;
      std::swap(rows[rank], rows[piv]);
      bool done = true;
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q = rows[r][col] / rows[rank][col];
        for (std::size_t c = col; c < width; ++c) rows[r][c] -= q * rows[rank][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        if (rows[rank][col] < 0)
          for (auto& x : rows[rank]) x = -x;
        basis.emplace_back(col, rows[rank]);
        ++rank;
        break;
      }
    }
  }
  return basis;
}

BigInt floor_div_big(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::size_t count_distinct_spinc(std::span<const RotationVector> vectors,
                                 std::span<const std::vector<std::int64_t>> coboundary) {
  if (vectors.empty()) return 0;
  const std::size_t width = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != width) fail(ErrorKind::length_mismatch, "rotation vectors differ in length");
  const auto basis = echelon_basis(coboundary, width);
  std::set<BigRow> classes;
  for (const auto& v : vectors) {
    BigRow w(v.begin(), v.end());
    for (const auto& [col, row] : basis) {
      BigInt q = floor_div_big(w[col], row[col]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < width; ++c) w[c] -= q * row[c];
    }
    classes.insert(std::move(w));
  }
  return classes.size();
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

void require_symmetric(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorKind::length_mismatch, "linking matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) fail(ErrorKind::usage, "linking matrix is not symmetric");
}

RMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
  RMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) out[i].emplace_back(x);
  return out;
}

struct Inertia {
  std::int64_t positive = 0, negative = 0, zero = 0;
};

Inertia inertia(RMatrix a) {
  const std::size_t n = a.size();
  Inertia in;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: fold an off-diagonal entry onto the diagonal.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        in.zero += static_cast<std::int64_t>(n - k);
        return in;
      }
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    swap_index(k, piv);
    const Rational p = a[k][k];
    (p.sign() > 0 ? in.positive : in.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) a[k][c] = Rational();
  }
  return in;
}

// Solves a x = b exactly; throws `singular` when a is not invertible.
std::vector<Rational> solve(RMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) fail(ErrorKind::singular, "d3 undefined for this presentation: singular linking matrix");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k].is_zero()) continue;
      const Rational f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) b[k] /= a[k][k];
  return b;
}

}  // namespace

std::int64_t signature(const std::vector<std::vector<std::int64_t>>& m) {
  require_symmetric(m);
  Inertia in = inertia(to_rational(m));
  return in.positive - in.negative;
}

Rational d3(const FillingData& f, const RotationVector& v) {
  require_symmetric(f.linking);
  const std::size_t n = f.linking.size();
  if (v.size() != n) fail(ErrorKind::length_mismatch, "rotation vector length differs from the linking matrix");
  if (f.one_handles < 0) fail(ErrorKind::usage, "negative 1-handle count");
  RMatrix l = to_rational(f.linking);
  Inertia in = inertia(l);
  if (in.zero > 0) fail(ErrorKind::singular, "d3 undefined for this presentation: singular linking matrix");
  std::vector<Rational> rhs(v.begin(), v.end());
  std::vector<Rational> x = solve(l, rhs);
  Rational c2;
  for (std::size_t i = 0; i < n; ++i) c2 += rhs[i] * x[i];
  const std::int64_t chi = 1 - f.one_handles + static_cast<std::int64_t>(n);
  const std::int64_t sigma = in.positive - in.negative;
  return (c2 - Rational(2 * chi) - Rational(3 * sigma)) / Rational(4);
}

std::string format_vector(std::span<const std::int64_t> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace plumb
