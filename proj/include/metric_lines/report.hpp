#pragma once

#include <string>

#include <json.hpp>

#include "metric_lines/extremal.hpp"
#include "metric_lines/line.hpp"
#include "metric_lines/search.hpp"
#include "metric_lines/triple_system.hpp"

namespace metric_lines {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv };

struct ReportOptions {
  Format format = Format::json;
  // elapsed_ms is the only field that varies between identical runs.
  bool timing = true;
};

std::string witness_text(const Witness& witness);

Json to_json(const LineFamily& family);
Json to_json(const TripleSystem& system);
Json to_json(const BoundReport& report);
Json to_json(const SearchReport& report, bool timing = true);
Json to_json(const ConjectureReport& report, bool timing = true);
Json to_json(const FeasibilityResult& result);

// TSV layouts (first line is the header):
//   lines       line  size  universal  points  generators
//   triples     a  b  c
//   check       bound_id  params  lines_found  bound_lo  bound_hi  pass
//   search      universe  n  exclude_universal  minimum  witness  instances_examined  iso_classes  elapsed_ms
//   scan        n  connected_classes  without_universal  minimum  violators
//   metrizable  verdict  assignments_tried  best_margin  witness
// Multi-line witnesses are written with `\n` escapes.
std::string render(const LineFamily& family, const ReportOptions& options);
std::string render(const TripleSystem& system, const ReportOptions& options);
std::string render(const BoundReport& report, const ReportOptions& options);
std::string render(const SearchReport& report, const ReportOptions& options);
std::string render(const ConjectureReport& report, const ReportOptions& options);
std::string render(const FeasibilityResult& result, const ReportOptions& options);

}  // namespace metric_lines
