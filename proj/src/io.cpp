#include "metric_lines/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "metric_lines/error.hpp"

namespace metric_lines {

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Splits into lines of whitespace-separated tokens; blank lines are kept so
// that line numbers stay true.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) {
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view row = text.substr(start, end - start);
      if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
      std::vector<Token> tokens;
      std::size_t i = 0;
      while (i < row.size()) {
        while (i < row.size() && (row[i] == ' ' || row[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < row.size() && row[j] != ' ' && row[j] != '\t') ++j;
        if (j > i) tokens.push_back({row.substr(i, j - i), line, i + 1});
        i = j;
      }
      lines_.push_back(std::move(tokens));
      ++line;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  // Tokens of the next data line, or throws at end of input.
  const std::vector<Token>& next(std::string_view expecting) {
    if (cursor_ >= lines_.size() || (cursor_ + 1 == lines_.size() && lines_[cursor_].empty()))
      throw ParseError(lines_.size(), 1, "unexpected end of input, expected " + std::string(expecting));
    return lines_[cursor_++];
  }

  std::size_t line_number() const { return cursor_ + 1; }

  void expect_end() const {
    for (std::size_t i = cursor_; i < lines_.size(); ++i)
      if (!lines_[i].empty()) throw ParseError(i + 1, lines_[i].front().column, "unexpected trailing content");
  }

 private:
  std::vector<std::vector<Token>> lines_;
  std::size_t cursor_ = 0;
};

std::size_t to_count(const Token& token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc{} || ptr != token.text.data() + token.text.size())
    throw ParseError(token.line, token.column, "expected a nonnegative integer, got '" + std::string(token.text) + "'");
  return value;
}

void expect_count(const std::vector<Token>& tokens, std::size_t expected, std::size_t line, std::string_view what) {
  if (tokens.size() == expected) return;
  if (tokens.size() > expected)
    throw ParseError(line, tokens[expected].column, "too many values, expected " + std::string(what));
  const std::size_t column = tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size();
  throw ParseError(line, column, "too few values, expected " + std::string(what));
}

std::pair<std::size_t, std::size_t> parse_header(Tokenizer& in) {
  const std::size_t line = in.line_number();
  const auto& head = in.next("header `n m`");
  expect_count(head, 2, line, "`n m`");
  return {to_count(head[0]), to_count(head[1])};
}

}  // namespace

DistanceMatrix parse_distance_matrix(std::string_view text) {
  Tokenizer in(text);
  std::size_t line = in.line_number();
  const auto& head = in.next("point count");
  expect_count(head, 1, line, "the point count `n`");
  const std::size_t n = to_count(head[0]);
  if (n == 0) throw ParseError(line, head[0].column, "point count must be positive");

  DistanceMatrix dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    line = in.line_number();
    const auto& row = in.next("matrix row");
    expect_count(row, n, line, std::to_string(n) + " distances");
    for (std::size_t j = 0; j < n; ++j) {
      try {
        dist(i, j) = parse_rational(row[j].text);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(row[j].line, row[j].column, e.what());
      }
    }
  }
  in.expect_end();
  return dist;
}

MetricSpace parse_metric(std::string_view text) { return validate_metric(parse_distance_matrix(text)); }

std::string format_metric(const MetricSpace& space) {
  std::ostringstream out;
  out << space.size() << '\n';
  for (Point i = 0; i < space.size(); ++i) {
    for (Point j = 0; j < space.size(); ++j) out << (j ? " " : "") << to_string(space(i, j));
    out << '\n';
  }
  return out.str();
}

TripleSystem parse_triples(std::string_view text) {
  Tokenizer in(text);
  const auto [n, m] = parse_header(in);
  std::vector<Triple> edges;
  std::set<Triple> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t line = in.line_number();
    const auto& row = in.next("triple `a b c`");
    expect_count(row, 3, line, "`a b c`");
    Triple t{to_count(row[0]), to_count(row[1]), to_count(row[2])};
    if (!(t[0] < t[1] && t[1] < t[2])) throw ParseError(line, row[0].column, "triple must satisfy a < b < c");
    if (t[2] >= n) throw ParseError(line, row[2].column, "vertex out of range");
    if (!seen.insert(t).second) throw ParseError(line, row[0].column, "duplicate triple");
    edges.push_back(t);
  }
  in.expect_end();
  return TripleSystem(n, edges);
}

std::string format_triples(const TripleSystem& system) {
  std::ostringstream out;
  out << system.size() << ' ' << system.edge_count() << '\n';
  for (const auto& t : system.edges()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  Tokenizer in(text);
  const auto [n, m] = parse_header(in);
  Graph graph(n);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t line = in.line_number();
    const auto& row = in.next("edge `u v`");
    expect_count(row, 2, line, "`u v`");
    const Point u = to_count(row[0]), v = to_count(row[1]);
    if (u >= v) throw ParseError(line, row[0].column, "edge must satisfy u < v");
    if (v >= n) throw ParseError(line, row[1].column, "vertex out of range");
    if (graph.adjacent(u, v)) throw ParseError(line, row[0].column, "duplicate edge");
    graph.add_edge(u, v);
  }
  in.expect_end();
  return graph;
}

std::string format_graph(const Graph& graph) {
  std::ostringstream out;
  const auto edges = graph.edges();
  out << graph.size() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace metric_lines
