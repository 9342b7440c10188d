#pragma once

// Cyclic framing chains: monodromy, blowup/blowdown rewriting, the dual cycle
// and embeddability into a blowup of (0,0).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumb/slopecalc.hpp"

namespace plumb {

enum class Sign { plus, minus };

std::string to_string(Sign s);
Sign parse_sign(const std::string& text);

/// Cyclic sequence of framings with an edge-sign decoration. Equality is up to
/// rotation and reflection.
class CyclicChain {
 public:
  CyclicChain() = default;
  explicit CyclicChain(std::vector<std::int64_t> framings, Sign sign = Sign::plus);

  const std::vector<std::int64_t>& framings() const { return framings_; }
  Sign sign() const { return sign_; }
  std::size_t size() const { return framings_.size(); }
  std::int64_t sum() const;

  /// Lexicographically least rotation/reflection.
  CyclicChain canonical() const;

  /// "(a1,a2,...,an)+" or "...-".
  std::string to_string() const;
  static CyclicChain parse(const std::string& text);

  friend bool operator==(const CyclicChain& x, const CyclicChain& y);
  friend bool operator<(const CyclicChain& x, const CyclicChain& y);

 private:
  std::vector<std::int64_t> framings_;
  Sign sign_ = Sign::plus;
};

std::vector<std::int64_t> canonical_framings(std::span<const std::int64_t> framings);

struct MonodromyClass {
  std::int64_t trace = 0;
  std::int64_t det = 1;
  Sign sign = Sign::plus;
};

struct Monodromy {
  IntMat2 B;
  MonodromyClass cls;
};

/// +-B(a_1..a_n) for a chain of entries >= 2.
Monodromy monodromy(const CyclicChain& chain);

/// Product of [[x,1],[-1,0]] over the chain; defined for any integer entries
/// and conjugate to B when all entries are >= 2.
IntMat2 framing_product(std::span<const std::int64_t> framings);

bool is_hyperbolic(const MonodromyClass& cls);

enum class BlowupStyle { internal, leaf };

/// (..,x,y,..) -> (..,x+1,1,y+1,..) on edge `edge` (between entries edge and edge+1).
CyclicChain blow_up(const CyclicChain& chain, std::size_t edge, BlowupStyle style = BlowupStyle::internal);

/// (..,x,1,y,..) -> (..,x-1,y-1,..); length must be >= 3.
CyclicChain blow_down(const CyclicChain& chain, std::size_t entry);

struct SearchLimits {
  std::size_t max_states = 100000;
  std::int64_t max_blowup_depth = 8;

  /// Defaults, with PLUMBING_CENSUS_BOUND overriding max_states when set.
  static SearchLimits from_env();
};

/// Dual framing cycle (d_1..d_k) of a chain with entries >= 2, one of them >= 3.
CyclicChain dual_cycle(const CyclicChain& chain, const SearchLimits& limits = SearchLimits::from_env());

/// A cycle reached from (0,0) by internal blowups, with the edge indices used.
struct BlowupRecord {
  std::vector<std::int64_t> framings;  ///< raw sequence produced by replaying `moves`
  std::vector<std::size_t> moves;
  CyclicChain canonical() const { return CyclicChain(framings).canonical(); }
  friend bool operator==(const BlowupRecord&, const BlowupRecord&) = default;
};

/// Canonically ordered cycles reachable from (0,0) by exactly k blowups.
std::vector<BlowupRecord> enumerate_blowups(std::int64_t k,
                                            const SearchLimits& limits = SearchLimits::from_env());

/// Replays blowup moves from (0,0).
std::vector<std::int64_t> replay_blowups(std::span<const std::size_t> moves);

struct EmbeddingWitness {
  BlowupRecord blowup;
  std::size_t offset = 0;
  bool reflected = false;

  /// c aligned to d: entry i of the result sits against d_i.
  std::vector<std::int64_t> aligned() const;
  std::string to_string() const;
  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

enum class EmbedVerdict { embeddable, not_embeddable, bound_exceeded };

struct EmbeddabilityResult {
  EmbedVerdict verdict = EmbedVerdict::not_embeddable;
  std::vector<std::int64_t> dual;  ///< the (d_i) that was tested
  std::optional<EmbeddingWitness> witness;
  std::string reason;
};

std::string to_string(EmbedVerdict v);

/// Is (d_i) dominated entrywise by some blowup of (0,0) of the same length?
EmbeddabilityResult embeddable_dual(std::span<const std::int64_t> d, std::int64_t max_k);

/// Computes d = dual_cycle(a) and tests it.
EmbeddabilityResult is_embeddable(std::span<const std::int64_t> a, std::int64_t max_k,
                                  const SearchLimits& limits = SearchLimits::from_env());

/// Re-checks a witness by replay and entrywise comparison.
bool verify_witness(const EmbeddingWitness& w, std::span<const std::int64_t> d);

}  // namespace plumb
