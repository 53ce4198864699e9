#include "genergy/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "genergy/error.hpp"

namespace genergy {

Graph::Graph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ == 0) throw GuardError("graph order must be positive");
  for (auto& [u, v] : edges_) {
    if (u == v) throw GuardError("self-loop at vertex " + std::to_string(u));
    if (u >= order_ || v >= order_) {
      throw GuardError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint >= order " + std::to_string(order_));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GuardError("duplicate edge");
  }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order_, 0);
  for (const auto& [u, v] : edges_) {
    ++d[u];
    ++d[v];
  }
  return d;
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  e.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GuardError("complete_bipartite needs both parts nonempty");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GuardError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e));
}

Graph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, std::move(e));
}

namespace {

std::size_t parse_size(const std::string& tok, const std::string& spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
    throw GuardError("bad family parameter '" + tok + "' in '" + spec + "'");
  }
  return v;
}

}  // namespace

Graph family(const std::string& spec) {
  std::string normalized = spec;
  std::replace(normalized.begin(), normalized.end(), ':', ' ');
  std::istringstream ss(normalized);
  std::vector<std::string> parts{std::istream_iterator<std::string>(ss),
                                 std::istream_iterator<std::string>()};
  if (parts.empty()) throw GuardError("empty family spec");
  const std::string& name = parts[0];
  auto expect = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw GuardError("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "petersen") {
    expect(0);
    return petersen();
  }
  if (name == "complete_bipartite") {
    expect(2);
    return complete_bipartite(parse_size(parts[1], spec), parse_size(parts[2], spec));
  }
  if (name == "complete" || name == "cycle" || name == "path" || name == "star") {
    expect(1);
    const std::size_t n = parse_size(parts[1], spec);
    if (name == "complete") return complete(n);
    if (name == "cycle") return cycle(n);
    if (name == "path") return path(n);
    return star(n);
  }
  throw GuardError("unknown family '" + name + "'");
}

DenseMatrix adjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (const auto& [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
  return DenseMatrix(n, n, std::move(a));
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
  if (n == 0 || n > max_order) {
    throw GuardError("graph enumeration supports 1 <= n <= " + std::to_string(max_order) +
                     ", got n = " + std::to_string(n));
  }
}

LabeledGraphs enumerate_graphs(std::size_t n) { return LabeledGraphs(n); }

namespace {

bool parse_index(const std::string& tok, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_order = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ss),
                                 std::istream_iterator<std::string>()};
    if (!have_order) {
      if (tok.size() != 1 || !parse_index(tok[0], n) || n == 0) {
        throw ParseError(ParseErrorKind::bad_header, line_no,
                         "expected vertex count, got '" + line + "'");
      }
      have_order = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (tok.size() != 2 || !parse_index(tok[0], u) || !parse_index(tok[1], v)) {
      throw ParseError(ParseErrorKind::malformed, line_no, "expected 'u v', got '" + line + "'");
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseErrorKind::endpoint_out_of_range, line_no,
                       "endpoint " + std::to_string(std::max(u, v)) + " >= n = " +
                           std::to_string(n));
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::self_loop, line_no,
                       "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }
  if (!have_order) throw ParseError(ParseErrorKind::bad_header, 0, "missing vertex count");

  // Report a duplicate at the line of its second occurrence.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::size_t dup_line = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (edges[idx[k]] == edges[idx[k - 1]]) {
      const std::size_t at = edge_lines[idx[k]];
      if (dup_line == 0 || at < dup_line) dup_line = at;
    }
  }
  if (dup_line != 0) {
    throw ParseError(ParseErrorKind::duplicate_edge, dup_line, "duplicate edge");
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace genergy
