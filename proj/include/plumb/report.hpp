#pragma once

// Serialization of census reports. JSON is canonical and round-trips; TSV
// flattens one structure per row; text is for people.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "plumb/census.hpp"

namespace plumb {

nlohmann::ordered_json to_json(const PlumbingSpec& spec);
nlohmann::ordered_json to_json(const EmbeddableSummary& e);
nlohmann::ordered_json to_json(const CensusReport& report);

PlumbingSpec spec_from_json(const nlohmann::ordered_json& j);
CensusReport report_from_json(const nlohmann::ordered_json& j);

/// Header line for TSV output.
std::string tsv_header();
/// One line per structure descriptor; a report with no structures yields one row with empty structure columns.
std::string to_tsv_rows(const CensusReport& report);
std::string to_text(const CensusReport& report);

/// Tallies of fillability tags across a batch.
struct GridSummary {
  std::size_t specs = 0;
  std::size_t stein = 0;
  std::size_t weak = 0;
  std::size_t conditional = 0;
  std::size_t embeddable = 0;
  std::size_t not_embeddable = 0;
  std::size_t bound_exceeded = 0;

  void add(const CensusReport& report);
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace plumb
