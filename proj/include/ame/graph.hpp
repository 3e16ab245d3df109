#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ame {

struct StateVector;

// Simple undirected graph on up to 16 labeled vertices, stored as one
// neighbor bitmask per vertex.
struct Graph {
  int n = 1;
  std::array<uint16_t, 16> adj{};

  static constexpr int max_vertices = 16;

  static Graph empty(int n);

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Packed edge form: bit index of edge (u,v) with u<v is the colex rank
// v(v-1)/2 + u.  128 bits cover n <= 16.
using EdgeBits = unsigned __int128;

int edge_rank(int u, int v);
EdgeBits edge_bits(const Graph& g);
Graph graph_from_edge_bits(int n, EdgeBits bits);

// Compact text form "n:HEX" of the edge bits, uppercase, no leading zeros.
std::string graph_to_hex(const Graph& g);
Graph graph_from_hex(std::string_view text);

// Complements the subgraph induced on the neighborhood of v.
Graph local_complement(const Graph& g, int v);

// Canonical instances: bell, triangle, ring5, ame6, wheel7, fano7.
Graph named_graph(std::string_view name);

// Dense vector (prod_edges CZ) |+...+>; every amplitude is +-2^(-n/2).
StateVector graph_state_vector(const Graph& g);

// Text file: either "n" followed by one "u v" line per edge, or a single
// "n:HEX" line.  Lines starting with '#' are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace ame
