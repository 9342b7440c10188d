#pragma once

// Counts and labelled enumerations of tight contact structures on the boundary
// of a cyclic plumbing, with or without an arm (z_1..z_m).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumb/cycles.hpp"
#include "plumb/legendrian.hpp"

namespace plumb {

struct PlumbingSpec {
  Sign sign = Sign::plus;
  Coeffs a;
  Coeffs z;

  /// a_i >= 2, a_1 >= 3, |a| >= 2; z_j >= 2 and, unless `allow_empty_arm`, |z| >= 1.
  void validate(bool allow_empty_arm = false) const;
  std::string to_string() const;
  friend auto operator<=>(const PlumbingSpec&, const PlumbingSpec&) = default;
};

enum class Fillability { stein, weak, stein_if_embeddable };

std::string to_string(Fillability f);
Fillability parse_fillability(const std::string& text);

struct StructureDescriptor {
  RotationVector rotation;
  std::int64_t torsion = 0;    ///< Giroux torsion level l (0: minimally twisting)
  std::int64_t twisting = 0;   ///< twisting as a multiple of pi (0: minimally twisting)
  Fillability fillability = Fillability::stein;
  friend bool operator==(const StructureDescriptor&, const StructureDescriptor&) = default;
};

struct CensusCounts {
  std::int64_t min_twisting = 0;
  std::int64_t per_torsion = 0;
  std::int64_t no_giroux = 0;
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct EmbeddableSummary {
  std::string verdict;  ///< embeddable | not_embeddable | bound_exceeded | not_applicable
  std::vector<std::int64_t> dual;
  std::optional<EmbeddingWitness> witness;
  std::string reason;
  friend bool operator==(const EmbeddableSummary&, const EmbeddableSummary&) = default;
};

struct CensusReport {
  PlumbingSpec spec;
  CensusCounts counts;
  std::vector<StructureDescriptor> structures;
  EmbeddableSummary embeddable;
  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct CensusOptions {
  std::int64_t torsion = 1;             ///< torsion level listed next to l = 0
  bool list_structures = true;
  bool resolve_embeddable = true;       ///< only consulted for sign -
  std::int64_t max_k = 8;
};

/// (c_1 - 1)...(c_{k-1} - 1) * c_k.
std::int64_t honda_count(std::span<const std::int64_t> coeffs);

/// Torus-bundle classification for the cycle alone (arm ignored).
CensusReport cyclic_census(std::span<const std::int64_t> a, Sign sign, const CensusOptions& opts = {});

CensusReport census(const PlumbingSpec& spec, const CensusOptions& opts = {});

/// Structures at torsion level l; sizes match the census counts.
std::vector<StructureDescriptor> enumerate_tight(const PlumbingSpec& spec, std::int64_t torsion);

/// Twisting (in units of pi) at torsion level l >= 1.
std::int64_t twisting_for(Sign sign, std::int64_t torsion);

}  // namespace plumb
