#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "plumb/error.hpp"
#include "plumb/legendrian.hpp"

using plumb::FrontComponent;
using plumb::KnotClass;
using plumb::LegendrianInvariants;
using plumb::Rational;
using plumb::StabilizationTarget;
using Mat = std::vector<std::vector<std::int64_t>>;
using V = std::vector<std::int64_t>;

TEST_CASE("front invariants") {
  CHECK(plumb::invariants(plumb::standard_unknot()) == LegendrianInvariants{-1, 0});
  CHECK(plumb::invariants(FrontComponent{0, 0, 0, KnotClass::gamma}) == LegendrianInvariants{0, 0});
  CHECK(plumb::invariants(FrontComponent{2, 1, 3, KnotClass::nullhomologous}) == LegendrianInvariants{0, 1});
  CHECK_THROWS_AS(plumb::invariants(FrontComponent{0, 1, 0, KnotClass::nullhomologous}), plumb::Error);
  CHECK_THROWS_AS(plumb::invariants(FrontComponent{0, 0, 0, KnotClass::nullhomologous}), plumb::Error);
}

TEST_CASE("arm front: tb(K_1) = 0, tb(K_i) = -1, r(K_i) = 0") {
  const auto inv = plumb::invariants(plumb::arm_front(4));
  REQUIRE(inv.size() == 4);
  CHECK(inv[0] == LegendrianInvariants{0, 0});
  for (std::size_t i = 1; i < 4; ++i) CHECK(inv[i] == LegendrianInvariants{-1, 0});
}

TEST_CASE("stabilization") {
  CHECK(plumb::stabilize({0, 0}, 1, 0) == LegendrianInvariants{-1, -1});
  CHECK(plumb::stabilize({-1, 0}, 0, 2) == LegendrianInvariants{-3, 2});
  CHECK(plumb::stabilize({0, 0}, 1, 1) == LegendrianInvariants{-2, 0});
  for (int u1 = 0; u1 < 4; ++u1)
    for (int d1 = 0; d1 < 4; ++d1)
      for (int u2 = 0; u2 < 4; ++u2)
        for (int d2 = 0; d2 < 4; ++d2)
          REQUIRE(plumb::stabilize(plumb::stabilize({-1, 0}, u1, d1), u2, d2) ==
                  plumb::stabilize({-1, 0}, u1 + u2, d1 + d2));
}

TEST_CASE("rotation vector enumeration examples") {
  std::vector<StabilizationTarget> t{{-1, -2}, {-1, -2}};
  CHECK(plumb::enumerate_rotation_vectors(t) == std::vector<V>{{0, 0}});
  t = {{-1, -3}, {-1, -2}};
  CHECK(plumb::enumerate_rotation_vectors(t) == std::vector<V>{{-1, 0}, {1, 0}});
  t = {{0, -2}};
  CHECK(plumb::enumerate_rotation_vectors(t) == std::vector<V>{{-1}, {1}});
  t = {{-1, -1}};
  try {
    plumb::enumerate_rotation_vectors(t);
    FAIL("expected unreachable framing");
  } catch (const plumb::Error& e) {
    CHECK(e.kind() == plumb::ErrorKind::unreachable_framing);
  }
}

TEST_CASE("enumeration cardinality, parity, symmetry and order") {
  for (std::int64_t f1 = -5; f1 <= -2; ++f1)
    for (std::int64_t f2 = -4; f2 <= -1; ++f2)
      for (std::int64_t tb1 : {-1, 0}) {
        const std::vector<StabilizationTarget> t{{tb1, f1}, {0, f2}, {-1, -3}};
        const auto vs = plumb::enumerate_rotation_vectors(t);
        std::size_t expect = 1;
        for (const auto& x : t) expect *= static_cast<std::size_t>(x.stabilizations() + 1);
        REQUIRE(vs.size() == expect);
        REQUIRE(std::is_sorted(vs.begin(), vs.end()));
        for (const auto& v : vs)
          for (std::size_t i = 0; i < v.size(); ++i) {
            const auto k = t[i].stabilizations();
            REQUIRE(std::abs(v[i]) <= k);
            REQUIRE((v[i] - k) % 2 == 0);
            V mirrored = v;
            mirrored[i] = -mirrored[i];
            REQUIRE(std::binary_search(vs.begin(), vs.end(), mirrored));
          }
        REQUIRE(plumb::count_distinct_spinc(vs) == vs.size());
      }
}

TEST_CASE("Chern cochains and Spin^c classes") {
  CHECK(plumb::chern_cochain({0, 0, 0}).values == V{0, 0, 0});
  const auto c = plumb::chern_cochain({-1, 0});
  CHECK(c.on_handle(0) == -1);
  CHECK(c.on_handle(1) == 0);
  CHECK(plumb::chern_cochain({1, 0}) != plumb::chern_cochain({-1, 0}));

  const std::vector<V> two{{1, 0}, {-1, 0}};
  const std::vector<V> delta{{2, 0}};
  CHECK(plumb::count_distinct_spinc(two) == 2);
  CHECK(plumb::count_distinct_spinc(two, delta) == 1);
  CHECK(plumb::count_distinct_spinc(std::vector<V>{}) == 0);
  const std::vector<V> mixed{{1, 0}, {0, 1, 2}};
  CHECK_THROWS_AS(plumb::count_distinct_spinc(mixed), plumb::Error);
  const std::vector<V> three{{0, 0}, {1, 1}, {2, 2}, {0, 1}};
  const std::vector<V> diag{{1, 1}};
  CHECK(plumb::count_distinct_spinc(three, diag) == 2);
}

TEST_CASE("signature") {
  CHECK(plumb::signature(Mat{}) == 0);
  CHECK(plumb::signature(Mat{{-2}}) == -1);
  CHECK(plumb::signature(Mat{{0, 1}, {1, 0}}) == 0);
  CHECK(plumb::signature(Mat{{-2, 1}, {1, -2}}) == -2);
  CHECK(plumb::signature(Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, 3}}) == 1);
}

TEST_CASE("d3 examples") {
  CHECK(plumb::d3({{}, 0}, {}) == Rational(plumb::BigInt(-1), plumb::BigInt(2)));
  CHECK(plumb::d3({{{-2}}, 0}, {0}) == Rational(plumb::BigInt(-1), plumb::BigInt(4)));
  CHECK(plumb::d3({{{-2, 0}, {0, -2}}, 0}, {0, 0}) == Rational(0));
  CHECK_THROWS_AS(plumb::d3({{{0}}, 0}, {0}), plumb::Error);
  CHECK_THROWS_AS(plumb::d3({{{-2}}, 0}, {0, 1}), plumb::Error);
}

TEST_CASE("d3 is invariant under unimodular change of basis") {
  std::mt19937_64 rng(3);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(rnd(0, 1));
    Mat L(n, V(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) L[i][j] = L[j][i] = i == j ? rnd(-6, -2) : rnd(-1, 1);
    V v(n);
    for (auto& x : v) x = rnd(-3, 3);
    // Unimodular P from elementary row operations.
    Mat P(n, V(n));
    for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
    for (int s = 0; s < 4; ++s) {
      const auto i = static_cast<std::size_t>(rnd(0, static_cast<int>(n) - 1));
      const auto j = (i + 1 + static_cast<std::size_t>(rnd(0, static_cast<int>(n) - 2))) % n;
      const int c = rnd(-2, 2);
      for (std::size_t k = 0; k < n; ++k) P[i][k] += c * P[j][k];
    }
    Mat PtLP(n, V(n));
    V Ptv(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) PtLP[i][j] += P[a][i] * L[a][b] * P[b][j];
      for (std::size_t a = 0; a < n; ++a) Ptv[i] += P[a][i] * v[a];
    }
    bool singular = false;
    try {
      const auto x = plumb::d3({L, 1}, v);
      REQUIRE(plumb::d3({PtLP, 1}, Ptv) == x);
    } catch (const plumb::Error& e) {
      singular = e.kind() == plumb::ErrorKind::singular;
      REQUIRE(singular);
    }
  }
}
