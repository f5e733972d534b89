#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdiv/divisibility.hpp"
#include "pdiv/graph.hpp"

namespace pdiv {

/// Decoded graphs in file order. Blank lines are skipped; a bad line throws
/// malformed-line carrying its 1-based line number. Throws io-error.
std::vector<Graph> load_corpus(const std::string& path);

/// Campaign names in catalog order ("odd-torch", ..., "pxx-classes").
std::span<const std::string_view> campaign_names();

/// Accepts a catalog name or its short id C1..C11. Throws invalid-argument.
std::string resolve_campaign(std::string_view name);

struct CampaignSpec {
  std::string name;
  /// Builtin enumeration covers n = 1..max_n; 0 means the input file only.
  int max_n = 8;
  int wmax = 2;
  /// Bounded-weight checks run only on graphs with at most this many vertices.
  int weighted_max_n = 7;
  /// graph6 file appended after the builtin enumeration.
  std::optional<std::string> input;
  int jobs = 1;
  /// Record per-graph and total wall time. Off keeps reports byte-stable.
  bool timing = false;
};

/// Throws invalid-argument on an unknown name or out-of-range field, and
/// budget-exceeded when max_n is beyond the builtin enumeration.
void validate(const CampaignSpec& spec);

/// Largest n the builtin enumeration accepts.
inline constexpr int kMaxEnumerationOrder = 9;

struct CampaignRecord {
  std::string campaign;
  std::size_t index = 0;
  std::string graph6;
  int n = 0;
  /// The graph lies in the scope of at least one of the campaign's checks.
  bool member = false;
  /// "consistent", "counterexample" or "not-member".
  std::string verdict;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  std::vector<std::vector<Vertex>> witness;
  long millis = 0;
  /// A bounded-weight check contributed to the verdict.
  bool semi = false;
};

struct CampaignReport {
  CampaignSpec spec;
  std::vector<CampaignRecord> records;
  long wall_millis = 0;

  std::size_t members() const;
  std::size_t counterexamples() const;
  std::vector<std::size_t> counterexample_indices() const;
};

/// Records come back ordered by input index whatever the job count.
/// Throws io-error, budget-exceeded, invalid-argument.
CampaignReport run_campaign(const CampaignSpec& spec);

/// One campaign check on a single graph; `index` only labels the record.
CampaignRecord evaluate_graph(const CampaignSpec& spec, const Graph& g, std::size_t index,
                              const DivisibilityOptions& opts = {});

/// Re-derives a record from its graph6 string alone, without the shared memo.
CampaignRecord recheck_record(const CampaignSpec& spec, const CampaignRecord& record);

nlohmann::ordered_json to_json(const CampaignRecord& record);
nlohmann::ordered_json summary_json(const CampaignReport& report);

/// Line-delimited JSON: one record per line, then the summary line.
std::string render_report(const CampaignReport& report);
/// Throws io-error.
void emit_report(const CampaignReport& report, const std::string& path);

}  // namespace pdiv
