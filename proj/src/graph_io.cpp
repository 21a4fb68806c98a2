#include "alphawidth/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace alphawidth {
namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

long parse_int(std::string_view tok, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

void add_checked_edge(Graph& g, long u, long v, long line_no) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
  }
  if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
  g.add_edge(static_cast<int>(u), static_cast<int>(v));
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edges" || name == "edge-list") return GraphFormat::EdgeList;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < kOffset || c > 126) throw ParseError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported or truncated header");
    n = ((text[1] - kOffset) << 12) | ((text[2] - kOffset) << 6) | (text[3] - kOffset);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity");
  const long bits = n * (n - 1) / 2;
  const long chunks = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != chunks) {
    throw ParseError("graph6: expected " + std::to_string(chunks) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = text[pos + static_cast<std::size_t>(k / 6)] - kOffset;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (k % 6 != 0) {
    int chunk = text.back() - kOffset;
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  Graph g;
  bool have_header = false;
  long line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    auto tok = split_ws(line);
    if (tok[0] == "p") {
      if (have_header) throw ParseError("dimacs: duplicate header");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError("dimacs: malformed header '" + std::string(line) + "'");
      }
      long n = parse_int(tok[2], "vertex count");
      parse_int(tok[3], "edge count");
      if (n < 0 || n > kMaxVertices) throw ParseError("dimacs: vertex count out of range");
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError("dimacs: edge before header");
      if (tok.size() != 3) throw ParseError("dimacs: malformed edge line " + std::to_string(line_no));
      add_checked_edge(g, parse_int(tok[1], "vertex") - 1, parse_int(tok[2], "vertex") - 1, line_no);
    } else {
      throw ParseError("dimacs: unexpected line " + std::to_string(line_no));
    }
  }
  if (!have_header) throw ParseError("dimacs: missing 'p edge' header");
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long, long>> pairs;
  std::vector<long> line_of;
  long declared = -1;
  long max_id = -1;
  long line_no = 0;
  bool seen_content = false;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tok = split_ws(line);
    if (tok.size() == 1 && !seen_content) {
      declared = parse_int(tok[0], "vertex count");
      if (declared < 0 || declared > kMaxVertices) throw ParseError("edge list: vertex count out of range");
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tok.size() != 2) throw ParseError("edge list: line " + std::to_string(line_no) + " is not 'u v'");
    long u = parse_int(tok[0], "vertex");
    long v = parse_int(tok[1], "vertex");
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id on line " + std::to_string(line_no));
    if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u));
    pairs.emplace_back(u, v);
    line_of.push_back(line_no);
    max_id = std::max({max_id, u, v});
  }
  long n = declared >= 0 ? declared : max_id + 1;
  if (n > kMaxVertices) throw ParseError("edge list: too many vertices");
  Graph g(static_cast<int>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i) add_checked_edge(g, pairs[i].first, pairs[i].second, line_of[i]);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::EdgeList: return parse_edge_list(text);
  }
  throw std::logic_error("unreachable graph format");
}

std::string format_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return to_graph6(g) + "\n";
    case GraphFormat::Dimacs: return to_dimacs(g);
    case GraphFormat::EdgeList: return to_edge_list(g);
  }
  throw std::logic_error("unreachable graph format");
}

std::vector<Graph> read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<Graph> out;
  if (format == GraphFormat::Graph6) {
    for (auto line : split_lines(text)) {
      line = trim(line);
      if (!line.empty()) out.push_back(parse_graph6(line));
    }
    if (out.empty()) throw ParseError("'" + path + "' holds no graph6 lines");
  } else {
    out.push_back(parse_graph(text, format));
  }
  return out;
}

}  // namespace alphawidth
