#include "starec/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "starec/error.hpp"

namespace starec {
namespace {

// Yields non-empty lines with comments stripped, tracking line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::istringstream& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.clear();
      out.str(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

template <typename T>
T read_field(std::istringstream& line, const LineReader& reader, const char* name) {
  T value{};
  if (!(line >> value)) reader.fail(std::string("expected ") + name);
  return value;
}

std::int64_t parse_integer(const std::string& token, const LineReader& reader) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    reader.fail("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) reader.fail("expected an integer, got '" + token + "'");
  return value;
}

void expect_end(std::istringstream& line, const LineReader& reader) {
  std::string rest;
  if (line >> rest) reader.fail("unexpected token '" + rest + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  return out;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  LineReader reader(in);
  std::istringstream line;
  if (!reader.next(line)) reader.fail("empty graph file");
  if (read_field<std::string>(line, reader, "header") != "graph") reader.fail("expected 'graph <n> <m>'");
  const auto n = read_field<std::int64_t>(line, reader, "vertex count");
  const auto m = read_field<std::int64_t>(line, reader, "edge count");
  expect_end(line, reader);
  if (n < 0 || m < 0 || n > (1 << 28) || m > (1 << 28)) reader.fail("bad graph size");

  GraphFile file;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (reader.next(line)) {
    const auto word = read_field<std::string>(line, reader, "edge or directive");
    if (word == "bipartite") {
      if (!edges.empty() || file.bipartite_x) reader.fail("misplaced bipartite line");
      const auto x = read_field<std::int64_t>(line, reader, "|X|");
      if (x < 0 || x > n) reader.fail("|X| out of range");
      file.bipartite_x = static_cast<std::int32_t>(x);
      expect_end(line, reader);
      continue;
    }
    if (word == "halin") {
      if (!edges.empty() || file.halin_cycle) reader.fail("misplaced halin line");
      std::vector<Vertex> order;
      std::int64_t v = 0;
      while (line >> v) {
        if (v < 0 || v >= n) reader.fail("halin vertex out of range");
        order.push_back(static_cast<Vertex>(v));
      }
      if (!line.eof()) reader.fail("bad halin vertex");
      file.halin_cycle = std::move(order);
      continue;
    }
    const auto u = parse_integer(word, reader);
    const auto v = read_field<std::int64_t>(line, reader, "edge endpoint");
    expect_end(line, reader);
    if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("edge endpoint out of range");
    if (u == v) reader.fail("loop edge");
    if (static_cast<std::int64_t>(edges.size()) == m) reader.fail("more edges than declared");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  file.graph = Graph(static_cast<std::int32_t>(n), std::move(edges));
  if (file.bipartite_x) {
    BipartitePartition::prefix(file.graph.vertex_count(), *file.bipartite_x).validate(file.graph);
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const GraphFile& file) {
  const Graph& g = file.graph;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (file.bipartite_x) out << "bipartite " << *file.bipartite_x << '\n';
  if (file.halin_cycle) {
    out << "halin";
    for (Vertex v : *file.halin_cycle) out << ' ' << v;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(std::ostream& out, const Graph& g, std::optional<std::int32_t> bipartite_x) {
  write_graph(out, GraphFile{g, bipartite_x, std::nullopt});
}

void write_graph_file(const std::string& path, const GraphFile& file) {
  auto out = open_output(path);
  write_graph(out, file);
}

EdgeColoring read_coloring(std::istream& in) {
  LineReader reader(in);
  std::istringstream line;
  if (!reader.next(line)) reader.fail("empty coloring file");
  if (read_field<std::string>(line, reader, "header") != "coloring") reader.fail("expected 'coloring <m>'");
  const auto m = read_field<std::int64_t>(line, reader, "edge count");
  expect_end(line, reader);
  if (m < 0 || m > (1 << 28)) reader.fail("bad edge count");
  EdgeColoring c(static_cast<std::int32_t>(m));
  while (reader.next(line)) {
    const auto e = read_field<std::int64_t>(line, reader, "edge id");
    const auto color = read_field<std::int64_t>(line, reader, "color");
    expect_end(line, reader);
    if (e < 0 || e >= m) reader.fail("edge id out of range");
    if (color <= 0 || color > (1 << 30)) reader.fail("color must be positive");
    if (c.is_colored(static_cast<EdgeId>(e))) reader.fail("edge listed twice");
    c.set(static_cast<EdgeId>(e), static_cast<Color>(color));
  }
  return c;
}

EdgeColoring read_coloring_file(const std::string& path) {
  auto in = open_input(path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << "coloring " << c.size() << '\n';
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (c.is_colored(e)) out << e << ' ' << c[e] << '\n';
  }
}

void write_coloring_file(const std::string& path, const EdgeColoring& c) {
  auto out = open_output(path);
  write_coloring(out, c);
}

std::vector<EdgeId> read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::istringstream line;
  std::vector<EdgeId> out;
  while (reader.next(line)) {
    std::int64_t e = 0;
    while (line >> e) {
      if (e < 0) reader.fail("negative edge id");
      out.push_back(static_cast<EdgeId>(e));
    }
    if (!line.eof()) reader.fail("bad edge id");
  }
  return out;
}

std::vector<EdgeId> read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

}  // namespace starec
