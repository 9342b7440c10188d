#include "plumb/report.hpp"

#include <sstream>

namespace plumb {

using nlohmann::ordered_json;

namespace {

ordered_json witness_json(const EmbeddingWitness& w) {
  return ordered_json{{"blowup", w.blowup.framings},
                      {"moves", w.blowup.moves},
                      {"offset", w.offset},
                      {"reflected", w.reflected},
                      {"aligned", w.aligned()}};
}

EmbeddingWitness witness_from_json(const ordered_json& j) {
  EmbeddingWitness w;
  w.blowup.framings = j.at("blowup").get<std::vector<std::int64_t>>();
  w.blowup.moves = j.at("moves").get<std::vector<std::size_t>>();
  w.offset = j.at("offset").get<std::size_t>();
  w.reflected = j.at("reflected").get<bool>();
  return w;
}

}  // namespace

ordered_json to_json(const PlumbingSpec& spec) {
  return ordered_json{{"sign", to_string(spec.sign)}, {"a", spec.a}, {"z", spec.z}};
}

ordered_json to_json(const EmbeddableSummary& e) {
  ordered_json j{{"verdict", e.verdict}, {"dual", e.dual}};
  if (e.witness) j["witness"] = witness_json(*e.witness);
  if (!e.reason.empty()) j["reason"] = e.reason;
  return j;
}

ordered_json to_json(const CensusReport& report) {
  ordered_json structures = ordered_json::array();
  for (const auto& s : report.structures)
    structures.push_back({{"rotation", s.rotation},
                          {"torsion", s.torsion},
                          {"twisting", s.twisting},
                          {"fillability", to_string(s.fillability)}});
  return ordered_json{{"spec", to_json(report.spec)},
                      {"counts",
                       {{"min_twisting", report.counts.min_twisting},
                        {"per_torsion", report.counts.per_torsion},
                        {"no_giroux", report.counts.no_giroux}}},
                      {"structures", std::move(structures)},
                      {"embeddable", to_json(report.embeddable)}};
}

PlumbingSpec spec_from_json(const ordered_json& j) {
  return {parse_sign(j.at("sign").get<std::string>()), j.at("a").get<Coeffs>(), j.at("z").get<Coeffs>()};
}

CensusReport report_from_json(const ordered_json& j) {
  try {
    CensusReport r;
    r.spec = spec_from_json(j.at("spec"));
    const auto& c = j.at("counts");
    r.counts = {c.at("min_twisting").get<std::int64_t>(), c.at("per_torsion").get<std::int64_t>(),
                c.at("no_giroux").get<std::int64_t>()};
    for (const auto& s : j.at("structures"))
      r.structures.push_back({s.at("rotation").get<RotationVector>(), s.at("torsion").get<std::int64_t>(),
                              s.at("twisting").get<std::int64_t>(),
                              parse_fillability(s.at("fillability").get<std::string>())});
    const auto& e = j.at("embeddable");
    r.embeddable.verdict = e.at("verdict").get<std::string>();
    r.embeddable.dual = e.at("dual").get<std::vector<std::int64_t>>();
    if (e.contains("witness")) r.embeddable.witness = witness_from_json(e.at("witness"));
    r.embeddable.reason = e.value("reason", std::string{});
    return r;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::usage, std::string("malformed report: ") + ex.what());
  }
}

std::string tsv_header() {
  return "sign\ta\tz\tmin_twisting\tper_torsion\tno_giroux\ttorsion\ttwisting\trotation\tfillability\tembeddable";
}

std::string to_tsv_rows(const CensusReport& r) {
  std::ostringstream prefix;
  prefix << to_string(r.spec.sign) << '\t' << format_vector(r.spec.a) << '\t' << format_vector(r.spec.z) << '\t'
         << r.counts.min_twisting << '\t' << r.counts.per_torsion << '\t' << r.counts.no_giroux << '\t';
  std::ostringstream out;
  if (r.structures.empty()) out << prefix.str() << "\t\t\t\t" << r.embeddable.verdict << '\n';
  for (const auto& s : r.structures)
    out << prefix.str() << s.torsion << '\t' << s.twisting << '\t' << format_vector(s.rotation) << '\t'
        << to_string(s.fillability) << '\t' << r.embeddable.verdict << '\n';
  return out.str();
}

std::string to_text(const CensusReport& r) {
  std::ostringstream out;
  out << "spec " << r.spec.to_string() << '\n'
      << "  minimally twisting: " << r.counts.min_twisting << '\n'
      << "  per torsion level:  " << r.counts.per_torsion << '\n'
      << "  no Giroux torsion:  " << r.counts.no_giroux << '\n';
  for (const auto& s : r.structures) {
    out << "  l=" << s.torsion << " twisting=" << s.twisting << "pi rot=(" << format_vector(s.rotation) << ") "
        << to_string(s.fillability) << '\n';
  }
  out << "  embeddable: " << r.embeddable.verdict;
  if (!r.embeddable.dual.empty()) out << " dual=(" << format_vector(r.embeddable.dual) << ")";
  if (r.embeddable.witness) out << " witness " << r.embeddable.witness->to_string();
  out << '\n';
  return out.str();
}

void GridSummary::add(const CensusReport& r) {
  ++specs;
  for (const auto& s : r.structures) {
    switch (s.fillability) {
      case Fillability::stein: ++stein; break;
      case Fillability::weak: ++weak; break;
      case Fillability::stein_if_embeddable: ++conditional; break;
    }
  }
  if (r.embeddable.verdict == "embeddable") ++embeddable;
  else if (r.embeddable.verdict == "not_embeddable") ++not_embeddable;
  else if (r.embeddable.verdict == "bound_exceeded") ++bound_exceeded;
}

ordered_json GridSummary::to_json() const {
  return ordered_json{{"specs", specs},
                      {"stein", stein},
                      {"weak", weak},
                      {"stein_if_embeddable", conditional},
                      {"embeddable", embeddable},
                      {"not_embeddable", not_embeddable},
                      {"bound_exceeded", bound_exceeded}};
}

std::string GridSummary::to_text() const {
  std::ostringstream out;
  out << "specs " << specs << ": Stein " << stein << ", weak " << weak << ", Stein-if-embeddable " << conditional
      << " (embeddable " << embeddable << ", not embeddable " << not_embeddable << ", bound exceeded "
      << bound_exceeded << ")\n";
  return out.str();
}

}  // namespace plumb
