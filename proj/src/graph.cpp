#include "ame/graph.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ame/state.hpp"

namespace ame {

namespace {

void check_vertex_count(int n) {
  if (n < 1 || n > Graph::max_vertices) {
    throw std::invalid_argument("vertex count must be in 1.." +
                                std::to_string(Graph::max_vertices));
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) {
    throw std::invalid_argument("vertex index out of range");
  }
}

void check_edge_ends(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
}

Graph build(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g = Graph::empty(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph Graph::empty(int n) {
  check_vertex_count(n);
  Graph g;
  g.n = n;
  return g;
}

void Graph::add_edge(int u, int v) {
  check_edge_ends(*this, u, v);
  adj[u] |= uint16_t(1u << v);
  adj[v] |= uint16_t(1u << u);
}

void Graph::toggle_edge(int u, int v) {
  check_edge_ends(*this, u, v);
  adj[u] ^= uint16_t(1u << v);
  adj[v] ^= uint16_t(1u << u);
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

int edge_rank(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

EdgeBits edge_bits(const Graph& g) {
  EdgeBits bits = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) bits |= EdgeBits{1} << edge_rank(u, v);
    }
  }
  return bits;
}

Graph graph_from_edge_bits(int n, EdgeBits bits) {
  Graph g = Graph::empty(n);
  int rank = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++rank) {
      if ((bits >> rank) & 1u) g.add_edge(u, v);
    }
  }
  if (bits >> rank) {
    throw std::invalid_argument("edge bits outside n*(n-1)/2 range");
  }
  return g;
}

std::string graph_to_hex(const Graph& g) {
  EdgeBits bits = edge_bits(g);
  std::string hex;
  do {
    hex += "0123456789ABCDEF"[int(bits & 0xF)];
    bits >>= 4;
  } while (bits != 0);
  std::string out = std::to_string(g.n) + ":";
  out.append(hex.rbegin(), hex.rend());
  return out;
}

Graph graph_from_hex(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("compact graph form must look like \"n:HEX\"");
  }
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad vertex count in compact graph form");
  }
  check_vertex_count(n);
  std::string_view hex = text.substr(colon + 1);
  if (hex.empty()) {
    throw std::invalid_argument("compact graph form is missing hex digits");
  }
  EdgeBits bits = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw std::invalid_argument("bad hex digit in compact graph form");
    bits = (bits << 4) | EdgeBits(digit);
  }
  return graph_from_edge_bits(n, bits);
}

Graph local_complement(const Graph& g, int v) {
  check_vertex(g, v);
  Graph out = g;
  uint16_t nb = g.adj[v];
  for (int u = 0; u < g.n; ++u) {
    if ((nb >> u) & 1u) {
      out.adj[u] ^= uint16_t(nb & ~(1u << u));
    }
  }
  return out;
}

Graph named_graph(std::string_view name) {
  if (name == "bell") {
    return build(2, {{0, 1}});
  }
  if (name == "triangle") {
    return build(3, {{0, 1}, {1, 2}, {0, 2}});
  }
  if (name == "ring5") {
    return build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  }
  if (name == "wheel7") {
    // Hub 0 joined to the 6-cycle 1..6.
    return build(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                     {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  }
  if (name == "ame6") {
    // First 6-vertex graph (edge-bitmask order) whose state has all 3-body
    // marginals maximally mixed; frozen from the exhaustive scan ("6:1EEB").
    // `amekit fixtures` re-derives and diffs it.
    return build(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {0, 4},
                     {1, 4}, {3, 4}, {0, 5}, {1, 5}, {2, 5}});
  }
  if (name == "fano7") {
    // Smallest edge-bitmask member of wheel7's local-complementation orbit
    // whose degree profile differs from the wheel's ("7:3AF4C"); frozen from
    // the orbit scan, re-derived by `amekit fixtures`.
    return build(7, {{1, 2}, {0, 3}, {0, 4}, {2, 4}, {3, 4}, {0, 5},
                     {1, 5}, {3, 5}, {0, 6}, {1, 6}, {2, 6}});
  }
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

StateVector graph_state_vector(const Graph& g) {
  if (g.n > StateVector::max_qubits) {
    throw std::invalid_argument("graph too large for a dense state vector");
  }
  StateVector state = StateVector::uniform_plus(g.n);
  // (-1)^(#edges inside i); each inner edge is counted twice in the sum.
  for (uint32_t i = 0; i < state.dim(); ++i) {
    int twice = 0;
    uint32_t rest = i;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      twice += std::popcount(uint32_t(g.adj[u]) & i);
    }
    if ((twice / 2) & 1) state.amplitudes[i] = -state.amplitudes[i];
  }
  return state;
}

Graph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      line = line.substr(pos);
      return true;
    }
    return false;
  };

  if (!next_line()) {
    throw std::invalid_argument("empty graph file");
  }
  if (line.find(':') != std::string::npos) {
    return graph_from_hex(line);
  }

  int n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n)) {
      throw std::invalid_argument("graph file must start with the vertex count");
    }
  }
  check_vertex_count(n);
  Graph g = Graph::empty(n);
  while (next_line()) {
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("bad edge line in graph file: " + line);
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.n << "\n";
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) out << u << " " << v << "\n";
    }
  }
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write graph file: " + path);
  }
  write_graph(g, out);
}

}  // namespace ame
