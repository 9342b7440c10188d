#include "plumb/census.hpp"

#include <stdexcept>

namespace plumb {

namespace {

std::int64_t product_minus_one(std::span<const std::int64_t> xs) {
  std::int64_t out = 1;
  for (auto x : xs) out = mul_checked(out, x - 1);
  return out;
}

// z_1 (z_2 - 1) ... (z_m - 1)
std::int64_t torsion_product(std::span<const std::int64_t> z) {
  return mul_checked(z.front(), product_minus_one(z.subspan(1)));
}

void require_cycle(std::span<const std::int64_t> a) {
  if (a.size() < 2) fail(ErrorKind::usage, "cycle length must be > 1");
  for (auto x : a)
    if (x < 2) fail(ErrorKind::usage, "cycle entries must be >= 2");
  if (a.front() < 3) fail(ErrorKind::usage, "a_1 must be >= 3");
}

void cross_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("census cross-check failed: ") + what);
}

EmbeddableSummary summarize(const EmbeddabilityResult& r) {
  return {to_string(r.verdict), r.dual, r.witness, r.reason};
}

EmbeddableSummary resolve_embeddable(std::span<const std::int64_t> a, Sign sign, const CensusOptions& opts) {
  if (sign == Sign::plus) return {"not_applicable", {}, std::nullopt, "sign + needs no embedding"};
  if (!opts.resolve_embeddable) return {"not_requested", {}, std::nullopt, ""};
  try {
    return summarize(is_embeddable(a, opts.max_k));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::bound_exceeded) throw;
    return {"bound_exceeded", {}, std::nullopt, e.what()};
  }
}

}  // namespace

void PlumbingSpec::validate(bool allow_empty_arm) const {
  require_cycle(a);
  if (z.empty() && !allow_empty_arm) fail(ErrorKind::usage, "arm (z) must be nonempty");
  for (auto x : z)
    if (x < 2) fail(ErrorKind::usage, "arm entries must be >= 2");
}

std::string PlumbingSpec::to_string() const {
  return "(" + plumb::to_string(sign) + ",(" + format_vector(a) + "),(" + format_vector(z) + "))";
}

std::string to_string(Fillability f) {
  switch (f) {
    case Fillability::stein: return "Stein";
    case Fillability::weak: return "weak";
    case Fillability::stein_if_embeddable: return "Stein-if-embeddable";
  }
  return "?";
}

Fillability parse_fillability(const std::string& text) {
  if (text == "Stein") return Fillability::stein;
  if (text == "weak") return Fillability::weak;
  if (text == "Stein-if-embeddable") return Fillability::stein_if_embeddable;
  fail(ErrorKind::usage, "unknown fillability tag '" + text + "'");
}

std::int64_t honda_count(std::span<const std::int64_t> coeffs) {
  validate_coeffs(coeffs, true);
  return mul_checked(product_minus_one(coeffs.first(coeffs.size() - 1)), coeffs.back());
}

std::int64_t twisting_for(Sign sign, std::int64_t torsion) {
  if (torsion < 1) fail(ErrorKind::usage, "torsion level must be >= 1");
  return sign == Sign::plus ? 2 * torsion : 2 * torsion - 1;
}

CensusReport cyclic_census(std::span<const std::int64_t> a, Sign sign, const CensusOptions& opts) {
  require_cycle(a);
  if (opts.torsion < 1) fail(ErrorKind::usage, "torsion level must be >= 1");
  CensusReport rep;
  rep.spec = {sign, Coeffs(a.begin(), a.end()), {}};
  rep.counts.min_twisting = product_minus_one(a);
  rep.counts.per_torsion = 1;
  rep.counts.no_giroux = rep.counts.min_twisting + (sign == Sign::minus ? 1 : 0);
  cross_check(rep.counts.min_twisting == honda_count(decrement_last(a)), "count of the cycle");

  if (opts.list_structures) {
    std::vector<StabilizationTarget> targets;
    for (auto x : a) targets.push_back({invariants(standard_unknot()).tb, -x});
    for (auto& v : enumerate_rotation_vectors(targets))
      rep.structures.push_back({std::move(v), 0, 0, Fillability::stein});
    const std::int64_t tw = twisting_for(sign, opts.torsion);
    const bool conditional = sign == Sign::minus && tw == 1;
    rep.structures.push_back(
        {{}, opts.torsion, tw, conditional ? Fillability::stein_if_embeddable : Fillability::weak});
  }
  rep.embeddable = resolve_embeddable(a, sign, opts);
  return rep;
}

std::vector<StructureDescriptor> enumerate_tight(const PlumbingSpec& spec, std::int64_t torsion) {
  spec.validate();
  if (torsion < 0) fail(ErrorKind::usage, "torsion level must be >= 0");
  std::vector<StabilizationTarget> targets;
  std::vector<StructureDescriptor> out;
  if (torsion == 0) {
    // Every unknot of the plumbing diagram starts at tb = -1.
    const std::int64_t tb = invariants(standard_unknot()).tb;
    for (auto x : spec.a) targets.push_back({tb, -x});
    for (auto x : spec.z) targets.push_back({tb, -x});
    for (auto& v : enumerate_rotation_vectors(targets))
      out.push_back({std::move(v), 0, 0, Fillability::stein});
    return out;
  }
  const auto front = invariants(arm_front(spec.z.size()));
  for (std::size_t j = 0; j < spec.z.size(); ++j) targets.push_back({front[j].tb, -spec.z[j]});
  const std::int64_t tw = twisting_for(spec.sign, torsion);
  const Fillability fill =
      spec.sign == Sign::minus && tw == 1 ? Fillability::stein_if_embeddable : Fillability::weak;
  for (auto& v : enumerate_rotation_vectors(targets)) out.push_back({std::move(v), torsion, tw, fill});
  return out;
}

CensusReport census(const PlumbingSpec& spec, const CensusOptions& opts) {
  spec.validate();
  if (opts.torsion < 1) fail(ErrorKind::usage, "torsion level must be >= 1");
  CensusReport rep;
  rep.spec = spec;
  rep.counts.min_twisting = mul_checked(product_minus_one(spec.a), product_minus_one(spec.z));
  rep.counts.per_torsion = torsion_product(spec.z);
  rep.counts.no_giroux = spec.sign == Sign::plus ? rep.counts.min_twisting
                                                 : add_checked(rep.counts.min_twisting, rep.counts.per_torsion);

  cross_check(rep.counts.min_twisting ==
                  mul_checked(honda_count(decrement_last(spec.a)), honda_count(reverse_decrement_last(spec.z))),
              "minimally twisting count");
  Coeffs z_reversed(spec.z.rbegin(), spec.z.rend());
  cross_check(rep.counts.per_torsion == honda_count(z_reversed), "per-torsion count");

  if (opts.list_structures) {
    rep.structures = enumerate_tight(spec, 0);
    cross_check(static_cast<std::int64_t>(rep.structures.size()) == rep.counts.min_twisting,
                "enumeration size at l = 0");
    auto torsion = enumerate_tight(spec, opts.torsion);
    cross_check(static_cast<std::int64_t>(torsion.size()) == rep.counts.per_torsion,
                "enumeration size at l >= 1");
    rep.structures.insert(rep.structures.end(), torsion.begin(), torsion.end());
  }
  rep.embeddable = resolve_embeddable(spec.a, spec.sign, opts);
  return rep;
}

}  // namespace plumb
