// metric-lines: command-line front end for the metric_lines library.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "metric_lines/metric_lines.hpp"

namespace ml = metric_lines;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Parse>
auto load(const std::string& path, Parse&& parse) {
  std::string text;
  try {
    text = ml::read_file(path);
  } catch (const ml::Error& e) {
    throw InputError(e.what());
  }
  try {
    return parse(text);
  } catch (const ml::Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

ml::MetricSpace load_metric(const std::string& path) {
  return load(path, [](const std::string& t) { return ml::parse_metric(t); });
}
ml::TripleSystem load_triples(const std::string& path) {
  return load(path, [](const std::string& t) { return ml::parse_triples(t); });
}
ml::Graph load_graph(const std::string& path) {
  return load(path, [](const std::string& t) { return ml::parse_graph(t); });
}

ml::PointSet parse_point_list(const std::string& text, std::size_t universe) {
  ml::PointSet set(universe);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const std::size_t p = std::stoul(item);
    if (p >= universe) throw ml::Error(ml::ErrorKind::BadParams, "point " + item + " out of range");
    set.insert(p);
  }
  return set;
}

std::string instance_text(const ml::Instance& instance) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, ml::MetricSpace>)
          return ml::format_metric(value);
        else if constexpr (std::is_same_v<T, ml::Graph>)
          return ml::format_graph(value);
        else
          return ml::format_triples(value);
      },
      instance);
}

int exit_code_for(ml::ErrorKind kind) {
  switch (kind) {
    case ml::ErrorKind::BadParams:
    case ml::ErrorKind::SizeCap:
    case ml::ErrorKind::ArityMismatch:
    case ml::ErrorKind::IndexOutOfRange:
    case ml::ErrorKind::DegeneratePair:
    case ml::ErrorKind::XInsideT: return kUsage;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines induced by metric betweenness in finite metric spaces and 3-uniform hypergraphs"};
  app.require_subcommand(1);
  // Global options are also accepted after the subcommand.
  app.fallthrough();

  std::string format_name = "json";
  bool no_timing = false;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--no-timing", no_timing, "Omit elapsed_ms so reports are byte-reproducible");

  std::string input, kind, bound_name, universe_name, output, witness_dir = ".", tset_text;
  std::vector<std::string> params;
  std::size_t n = 0;
  std::optional<std::string> x_text, y_text;
  bool exclude = false, include = false;
  std::string cap_text = "1";
  std::size_t max_edges = 12;

  auto* lines = app.add_subcommand("lines", "Distinct lines of a metric space");
  lines->add_option("metric-file", input)->required();
  auto* hyperlines = app.add_subcommand("hyperlines", "Distinct lines of a triple system");
  hyperlines->add_option("triples-file", input)->required();
  auto* triples = app.add_subcommand("triples", "Betweenness triples of a metric space");
  triples->add_option("metric-file", input)->required();

  auto* check = app.add_subcommand("check", "Check a bound on an instance");
  check->add_option("bound_id", bound_name)->required();
  check->add_option("file", input, "Metric file (range, onetwo_lower, turan_clique), graph file (diam, "
                                   "graphs_corollary) or triples file (sparse_lemma)");
  check->add_option("--x", x_text, "Vertex x (sparse_lemma) or rational x (calculus)");
  check->add_option("--y", y_text, "Rational y (calculus)");
  check->add_option("--tset", tset_text, "Comma-separated candidate set (sparse_lemma)");

  auto* construct = app.add_subcommand("construct", "Write a named instance");
  construct->add_option("kind", kind)->required();
  construct->add_option("params", params);
  construct->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* search = app.add_subcommand("search", "Exhaustive minimum line count");
  search->add_option("universe", universe_name)->required()->check(
      CLI::IsMember({"hypergraphs", "one_two", "graph_metrics"}));
  search->add_option("n", n)->required();
  auto* exclude_flag = search->add_flag("--exclude-universal", exclude, "Skip instances with a universal line");
  search->add_flag("--include-universal", include, "Keep instances with a universal line")->excludes(exclude_flag);

  std::size_t n_max = 0;
  auto* scan = app.add_subcommand("scan", "Search connected graphs for fewer than n lines without a universal line");
  scan->add_option("n_max", n_max)->required();
  scan->add_option("--witness-dir", witness_dir, "Directory for violator witness files");

  auto* metrizable = app.add_subcommand("metrizable", "Decide whether a triple system arises from a metric");
  metrizable->add_option("triples-file", input)->required();
  metrizable->add_option("--cap", cap_text, "Normalization cap on distances");
  metrizable->add_option("--max-edges", max_edges, "Refuse systems with more edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const ml::ReportOptions options{format_name == "tsv" ? ml::Format::tsv : ml::Format::json, !no_timing};

  try {
    if (lines->parsed()) {
      std::cout << ml::render(ml::line_family(load_metric(input)), options);
      return kOk;
    }
    if (hyperlines->parsed()) {
      std::cout << ml::render(ml::hyper_line_family(load_triples(input)), options);
      return kOk;
    }
    if (triples->parsed()) {
      const auto space = load_metric(input);
      std::cout << ml::render(ml::betweenness_triples(space), options);
      return kOk;
    }
    if (check->parsed()) {
      const auto id = ml::parse_bound_id(bound_name);
      if (!id) {
        std::cerr << "unknown bound '" << bound_name << "'\n";
        return kUsage;
      }
      std::optional<ml::Instance> instance;
      ml::CheckOptions check_options;
      switch (*id) {
        case ml::BoundId::range:
        case ml::BoundId::onetwo_lower:
        case ml::BoundId::turan_clique:
          if (input.empty()) throw ml::Error(ml::ErrorKind::BadParams, "this bound needs a metric file");
          instance = load_metric(input);
          break;
        case ml::BoundId::diam:
        case ml::BoundId::graphs_corollary:
          if (input.empty()) throw ml::Error(ml::ErrorKind::BadParams, "this bound needs a graph file");
          instance = load_graph(input);
          break;
        case ml::BoundId::sparse_lemma: {
          if (input.empty() || !x_text || tset_text.empty())
            throw ml::Error(ml::ErrorKind::BadParams, "sparse_lemma needs a triples file, --x and --tset");
          auto system = load_triples(input);
          check_options.x = std::stoul(*x_text);
          check_options.candidates = parse_point_list(tset_text, system.size());
          instance = std::move(system);
          break;
        }
        case ml::BoundId::calculus:
          if (!x_text || !y_text) throw ml::Error(ml::ErrorKind::BadParams, "calculus needs --x and --y");
          check_options.calculus_x = ml::parse_rational(*x_text);
          check_options.calculus_y = ml::parse_rational(*y_text);
          break;
      }
      const auto report = ml::check_bound(*id, instance ? &*instance : nullptr, check_options);
      std::cout << ml::render(report, options);
      return report.pass ? kOk : kFailed;
    }
    if (construct->parsed()) {
      std::vector<ml::Rational> values;
      for (const auto& p : params) values.push_back(ml::parse_rational(p));
      const std::string text = instance_text(ml::construct(kind, values));
      if (output.empty())
        std::cout << text;
      else
        ml::write_file(output, text);
      return kOk;
    }
    if (search->parsed()) {
      const auto universe = *ml::parse_universe(universe_name);
      const bool exclude_universal =
          exclude ? true : (include ? false : ml::default_exclude_universal(universe));
      std::cout << ml::render(ml::min_lines(universe, n, exclude_universal), options);
      return kOk;
    }
    if (scan->parsed()) {
      const auto report = ml::conjecture_scan(n_max);
      for (std::size_t i = 0; i < report.violators.size(); ++i) {
        const auto path = std::filesystem::path(witness_dir) /
                          ("violator_n" + std::to_string(report.violators[i].graph.size()) + "_" +
                           std::to_string(i) + ".graph");
        ml::write_file(path.string(), ml::format_graph(report.violators[i].graph));
      }
      std::cout << ml::render(report, options);
      return report.violators.empty() ? kOk : kFailed;
    }
    if (metrizable->parsed()) {
      ml::MetrizableOptions feasibility;
      feasibility.normalization_cap = ml::parse_rational(cap_text);
      feasibility.max_edges = max_edges;
      const auto system = load_triples(input);
      std::cout << ml::render(ml::metrizable(system, feasibility), options);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ml::Error& e) {
    std::cerr << "error: " << ml::to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
