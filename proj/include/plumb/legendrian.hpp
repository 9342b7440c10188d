#pragma once

// Front-projection invariants, stabilization bookkeeping, the Chern cochain of
// a Stein handle attachment and the d3 invariant.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumb/cfrac.hpp"

namespace plumb {

enum class KnotClass {
  nullhomologous,  ///< contained in a 3-ball; framing relative to a Seifert surface
  gamma,           ///< smoothly isotopic to S^1 x {pt} x {t0}; framing relative to the torus
};

/// Combinatorial front of one link component.
struct FrontComponent {
  std::int64_t writhe = 0;
  std::int64_t cusps_up = 0;
  std::int64_t cusps_down = 0;
  KnotClass knot_class = KnotClass::nullhomologous;
};

using FrontDiagram = std::vector<FrontComponent>;

struct LegendrianInvariants {
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  friend bool operator==(const LegendrianInvariants&, const LegendrianInvariants&) = default;
};

using RotationVector = std::vector<std::int64_t>;

/// tb = w - c/2, rot = (c_d - c_u)/2.
LegendrianInvariants invariants(const FrontComponent& front);

/// Minimal front of an unknot in a ball: no crossings, one cusp of each kind.
FrontComponent standard_unknot();

/// Front of K_1..K_m along the arm: K_1 is the fibre class gamma drawn
/// without cusps, the rest are standard unknots.
FrontDiagram arm_front(std::size_t m);
std::vector<LegendrianInvariants> invariants(const FrontDiagram& diagram);

/// `up` stabilizations lower rot by one each, `down` raise it.
LegendrianInvariants stabilize(const LegendrianInvariants& inv, std::int64_t up, std::int64_t down);

/// A component starting at Thurston-Bennequin number `tb` that must end with
/// smooth framing `framing` (i.e. final tb = framing + 1).
struct StabilizationTarget {
  std::int64_t tb = 0;
  std::int64_t framing = 0;

  std::int64_t stabilizations() const;
};

/// Cartesian product of admissible rotation values, lexicographically ordered.
std::vector<RotationVector> enumerate_rotation_vectors(std::span<const StabilizationTarget> targets);

/// Cellular 2-cochain: value on handle h_i.
struct ChernCochain {
  std::vector<std::int64_t> values;
  std::int64_t on_handle(std::size_t i) const { return values.at(i); }
  friend auto operator<=>(const ChernCochain&, const ChernCochain&) = default;
};

ChernCochain chern_cochain(const RotationVector& v);

/// Classes of Chern cochains modulo the integer span of `coboundary`.
std::size_t count_distinct_spinc(std::span<const RotationVector> vectors,
                                 std::span<const std::vector<std::int64_t>> coboundary = {});

struct FillingData {
  std::vector<std::vector<std::int64_t>> linking;  ///< symmetric framing/linking matrix
  std::int64_t one_handles = 0;
};

/// (c^2 - 2 chi - 3 sigma) / 4 with c^2 = v^T L^{-1} v.
Rational d3(const FillingData& f, const RotationVector& v);

/// Signature of a symmetric integer matrix by exact congruence diagonalization.
std::int64_t signature(const std::vector<std::vector<std::int64_t>>& m);

std::string format_vector(std::span<const std::int64_t> v);

}  // namespace plumb
