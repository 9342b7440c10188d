#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "plumb/census.hpp"
#include "plumb/error.hpp"
#include "plumb/report.hpp"

using plumb::Fillability;
using plumb::PlumbingSpec;
using plumb::Sign;
using V = std::vector<std::int64_t>;

namespace {

plumb::CensusOptions quick() {
  plumb::CensusOptions o;
  o.resolve_embeddable = false;
  return o;
}

std::vector<PlumbingSpec> grid() {
  std::vector<V> as, zs;
  for (std::int64_t a1 : {3, 4})
    for (std::int64_t x = 2; x <= 4; ++x) {
      as.push_back({a1, x});
      for (std::int64_t y = 2; y <= 4; ++y) as.push_back({a1, x, y});
    }
  for (std::int64_t x = 2; x <= 4; ++x) {
    zs.push_back({x});
    for (std::int64_t y = 2; y <= 4; ++y) zs.push_back({x, y});
  }
  std::vector<PlumbingSpec> out;
  for (auto s : {Sign::plus, Sign::minus})
    for (const auto& a : as)
      for (const auto& z : zs) out.push_back({s, a, z});
  return out;
}

}  // namespace

TEST_CASE("honda_count") {
  CHECK(plumb::honda_count(V{1}) == 1);
  CHECK(plumb::honda_count(V{2}) == 2);
  CHECK(plumb::honda_count(V{3, 2}) == 4);
  CHECK_THROWS_AS(plumb::honda_count(V{}), plumb::Error);
  CHECK_THROWS_AS(plumb::honda_count(V{1, 2}), plumb::Error);
}

TEST_CASE("cyclic census examples") {
  auto r = plumb::cyclic_census(V{3, 2}, Sign::plus);
  CHECK(r.counts.no_giroux == 2);
  CHECK(r.counts.per_torsion == 1);
  CHECK(r.structures.back().twisting == 2);
  CHECK(r.structures.back().fillability == Fillability::weak);
  r = plumb::cyclic_census(V{3, 2}, Sign::minus);
  CHECK(r.counts.no_giroux == 3);
  CHECK(r.counts.min_twisting == 2);
  CHECK(r.structures.back().fillability == Fillability::stein_if_embeddable);
  CHECK(r.structures.back().twisting == 1);
  CHECK(plumb::cyclic_census(V{3, 3}, Sign::plus).counts.no_giroux == 4);
  CHECK_THROWS_AS(plumb::cyclic_census(V{4}, Sign::plus), plumb::Error);
}

TEST_CASE("census examples") {
  auto r = plumb::census({Sign::plus, {3, 2}, {2}});
  CHECK(r.counts == plumb::CensusCounts{2, 2, 2});
  r = plumb::census({Sign::minus, {3, 2}, {2}});
  CHECK(r.counts.no_giroux == 4);
  CHECK(r.embeddable.verdict == "not_embeddable");
  CHECK(r.embeddable.dual == V{4});
  r = plumb::census({Sign::plus, {3, 2}, {2, 2}});
  CHECK(r.counts.min_twisting == 2);
  CHECK(r.counts.per_torsion == 2);
}

TEST_CASE("census validation") {
  CHECK_THROWS_AS(plumb::census({Sign::plus, {2, 3}, {2}}), plumb::Error);
  CHECK_THROWS_AS(plumb::census({Sign::plus, {3}, {2}}), plumb::Error);
  CHECK_THROWS_AS(plumb::census({Sign::plus, {3, 2}, {}}), plumb::Error);
  CHECK_THROWS_AS(plumb::census({Sign::plus, {3, 2}, {1}}), plumb::Error);
  CHECK_NOTHROW(PlumbingSpec({Sign::plus, {3, 2}, {}}).validate(true));
}

TEST_CASE("enumerate_tight examples") {
  const PlumbingSpec plus{Sign::plus, {3, 2}, {2}};
  auto l0 = plumb::enumerate_tight(plus, 0);
  REQUIRE(l0.size() == 2);
  CHECK(l0[0].rotation == V{-1, 0, 0});
  CHECK(l0[1].rotation == V{1, 0, 0});
  auto l1 = plumb::enumerate_tight(plus, 1);
  REQUIRE(l1.size() == 2);
  CHECK(l1[0].rotation == V{-1});
  CHECK(l1[1].rotation == V{1});
  for (const auto& s : plumb::enumerate_tight({Sign::minus, {3, 2}, {2}}, 1))
    CHECK(s.fillability == Fillability::stein_if_embeddable);
  for (const auto& s : plumb::enumerate_tight({Sign::minus, {3, 2}, {2}}, 2)) {
    CHECK(s.fillability == Fillability::weak);
    CHECK(s.twisting == 3);
  }
}

TEST_CASE("twisting dictionary") {
  for (std::int64_t l = 1; l <= 5; ++l) {
    CHECK(plumb::twisting_for(Sign::plus, l) == 2 * l);
    CHECK(plumb::twisting_for(Sign::minus, l) == 2 * l - 1);
  }
}

TEST_CASE("census grid: formulas, enumerations and distinct Chern data") {
  for (const auto& spec : grid()) {
    const auto r = plumb::census(spec, quick());
    const auto min = oracle::prod_minus_one(spec.a) * oracle::prod_minus_one(spec.z);
    const auto per = spec.z[0] * oracle::prod_minus_one(V(spec.z.begin() + 1, spec.z.end()));
    REQUIRE(r.counts.min_twisting == min);
    REQUIRE(r.counts.per_torsion == per);
    REQUIRE(r.counts.no_giroux == (spec.sign == Sign::plus ? min : min + per));
    for (std::int64_t l = 0; l <= 2; ++l)
      REQUIRE(static_cast<std::int64_t>(plumb::enumerate_tight(spec, l).size()) == (l == 0 ? min : per));
    std::set<std::vector<std::int64_t>> chern;
    for (const auto& s : plumb::enumerate_tight(spec, 0)) chern.insert(plumb::chern_cochain(s.rotation).values);
    REQUIRE(static_cast<std::int64_t>(chern.size()) == min);
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& spec : {PlumbingSpec{Sign::plus, {3, 2}, {2}}, PlumbingSpec{Sign::minus, {3, 2}, {2}},
                           PlumbingSpec{Sign::minus, {5, 2}, {3, 2}}, PlumbingSpec{Sign::minus, {4, 3, 2}, {2}}}) {
    const auto r = plumb::census(spec);
    const auto j = plumb::to_json(r);
    const auto back = plumb::report_from_json(nlohmann::ordered_json::parse(j.dump()));
    CHECK(back == r);
    CHECK(plumb::to_json(back).dump() == j.dump());
  }
  const auto cyc = plumb::cyclic_census(V{3, 3}, Sign::minus);
  CHECK(plumb::report_from_json(plumb::to_json(cyc)) == cyc);
  CHECK_THROWS_AS(plumb::report_from_json(nlohmann::ordered_json::parse("{\"spec\":1}")), plumb::Error);
}

TEST_CASE("JSON shape") {
  const auto j = plumb::to_json(plumb::census({Sign::plus, {3, 2}, {2}}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"spec", "counts", "structures", "embeddable"});
  CHECK(j["counts"]["min_twisting"] == 2);
  CHECK(j["structures"][0].contains("rotation"));
  CHECK(j["structures"][0]["fillability"] == "Stein");
  CHECK(j["embeddable"].contains("verdict"));
}

TEST_CASE("TSV rows") {
  const auto r = plumb::census({Sign::plus, {3, 2}, {2}});
  const auto rows = plumb::to_tsv_rows(r);
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 4);
  CHECK(rows.rfind("+\t3,2\t2\t2\t2\t2\t0\t0\t-1,0,0\tStein\t", 0) == 0);
}
