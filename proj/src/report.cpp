#include "metric_lines/report.hpp"

#include <sstream>

#include "metric_lines/io.hpp"

namespace metric_lines {

namespace {

std::string escape_newlines(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}

std::string pair_text(const PointPair& p) {
  return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

std::string triple_text(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

Json rational_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return to_string(value);
}

std::string params_text(const BoundParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name + "=" + to_string(value);
  }
  return out;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace

std::string witness_text(const Witness& witness) {
  return std::visit(
      [](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, Graph>)
          return format_graph(w);
        else
          return format_triples(w);
      },
      witness);
}

Json to_json(const LineFamily& family) {
  Json lines = Json::array();
  for (const auto& line : family.lines) {
    Json generators = Json::array();
    for (const auto& g : line.generators) generators.push_back(pair_text(g));
    lines.push_back({{"points", line.points.to_string()},
                     {"size", line.points.size()},
                     {"universal", line.points.full()},
                     {"generators", generators}});
  }
  return {{"n", family.n},
          {"count", family.count()},
          {"universal", family.universal_present},
          {"pair_count", family.pair_count},
          {"lines", lines}};
}

Json to_json(const TripleSystem& system) {
  Json edges = Json::array();
  for (const auto& t : system.edges()) edges.push_back(triple_text(t));
  return {{"n", system.size()}, {"m", system.edge_count()}, {"edges", edges}};
}

Json to_json(const BoundReport& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.params) params[name] = rational_json(value);
  return {{"bound_id", to_string(report.id)},
          {"params", params},
          {"lines_found", rational_json(report.lines_found)},
          {"bound_lo", to_string(report.bound.lo)},
          {"bound_hi", to_string(report.bound.hi)},
          {"pass", report.pass}};
}

Json to_json(const SearchReport& report, bool timing) {
  Json out = {{"universe", to_string(report.universe)},
              {"n", report.n},
              {"exclude_universal", report.exclude_universal},
              {"minimum", report.minimum},
              {"witness", witness_text(report.witness)},
              {"instances_examined", report.instances_examined},
              {"iso_classes", report.iso_classes}};
  if (timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

Json to_json(const ConjectureReport& report, bool timing) {
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    levels.push_back({{"n", level.n},
                      {"connected_classes", level.connected_classes},
                      {"without_universal", level.without_universal},
                      {"minimum", level.minimum ? Json(*level.minimum) : Json(nullptr)},
                      {"witness", level.witness ? Json(format_graph(*level.witness)) : Json(nullptr)}});
  }
  Json violators = Json::array();
  for (const auto& v : report.violators)
    violators.push_back({{"n", v.graph.size()}, {"lines", v.lines}, {"graph", format_graph(v.graph)}});
  Json out = {{"n_max", report.n_max}, {"violators", violators}, {"levels", levels}};
  if (timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

Json to_json(const FeasibilityResult& result) {
  return {{"verdict", result.metrizable ? "feasible" : "infeasible"},
          {"metrizable", result.metrizable},
          {"assignments_tried", result.assignments_tried},
          {"best_margin", to_string(result.best_margin)},
          {"witness", result.witness ? Json(format_metric(*result.witness)) : Json(nullptr)}};
}

std::string render(const LineFamily& family, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(family));
  std::ostringstream out;
  out << "line\tsize\tuniversal\tpoints\tgenerators\n";
  for (std::size_t i = 0; i < family.lines.size(); ++i) {
    const auto& line = family.lines[i];
    out << i << '\t' << line.points.size() << '\t' << (line.points.full() ? "true" : "false") << '\t'
        << line.points.to_string() << '\t';
    for (std::size_t g = 0; g < line.generators.size(); ++g) out << (g ? " " : "") << pair_text(line.generators[g]);
    out << '\n';
  }
  return out.str();
}

std::string render(const TripleSystem& system, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(system));
  std::ostringstream out;
  out << "a\tb\tc\n";
  for (const auto& t : system.edges()) out << t[0] << '\t' << t[1] << '\t' << t[2] << '\n';
  return out.str();
}

std::string render(const BoundReport& report, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(report));
  std::ostringstream out;
  out << "bound_id\tparams\tlines_found\tbound_lo\tbound_hi\tpass\n"
      << to_string(report.id) << '\t' << params_text(report.params) << '\t' << to_string(report.lines_found) << '\t'
      << to_string(report.bound.lo) << '\t' << to_string(report.bound.hi) << '\t'
      << (report.pass ? "true" : "false") << '\n';
  return out.str();
}

std::string render(const SearchReport& report, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(report, options.timing));
  std::ostringstream out;
  out << "universe\tn\texclude_universal\tminimum\twitness\tinstances_examined\tiso_classes\telapsed_ms\n"
      << to_string(report.universe) << '\t' << report.n << '\t' << (report.exclude_universal ? "true" : "false")
      << '\t' << report.minimum << '\t' << escape_newlines(witness_text(report.witness)) << '\t'
      << report.instances_examined << '\t' << report.iso_classes << '\t'
      << (options.timing ? std::to_string(report.elapsed.count()) : "") << '\n';
  return out.str();
}

std::string render(const ConjectureReport& report, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(report, options.timing));
  std::ostringstream out;
  out << "n\tconnected_classes\twithout_universal\tminimum\tviolators\n";
  for (const auto& level : report.levels) {
    std::size_t violators = 0;
    for (const auto& v : report.violators) violators += v.graph.size() == level.n;
    out << level.n << '\t' << level.connected_classes << '\t' << level.without_universal << '\t'
        << (level.minimum ? std::to_string(*level.minimum) : "") << '\t' << violators << '\n';
  }
  return out.str();
}

std::string render(const FeasibilityResult& result, const ReportOptions& options) {
  if (options.format == Format::json) return dump(to_json(result));
  std::ostringstream out;
  out << "verdict\tassignments_tried\tbest_margin\twitness\n"
      << (result.metrizable ? "feasible" : "infeasible") << '\t' << result.assignments_tried << '\t'
      << to_string(result.best_margin) << '\t'
      << (result.witness ? escape_newlines(format_metric(*result.witness)) : "") << '\n';
  return out.str();
}

}  // namespace metric_lines
