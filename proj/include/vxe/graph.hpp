#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vxe {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Vertex ids are 0-based everywhere in the library and in files; a vertex
// written v_i in 1-based notation is id i-1 here.
//
// Neighbor lists are kept sorted and duplicate-free, so a Graph is
// loop-free, symmetric and satisfies sum(deg) == 2m by construction.
// Instances are immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Builds a graph from an edge list. Duplicate and reversed pairs are
    // merged. Throws OutOfRange for ids >= n and BadParameters for loops.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    // Sorted pairs (u, v) with u < v.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

std::size_t degree(const Graph& g, Vertex v);

struct DegreeExtremes {
    std::size_t min = 0;
    std::size_t max = 0;
};

DegreeExtremes degree_extremes(const Graph& g);

// Number of closed walks of length k that start and end at v. Exact,
// integer-only; k must lie in [0, kMaxWalkLength].
inline constexpr unsigned kMaxWalkLength = 32;
std::uint64_t closed_walk_count(const Graph& g, Vertex v, unsigned k);

// Closed-walk counts at v for every length 0..k_max.
std::vector<std::uint64_t> closed_walk_counts(const Graph& g, Vertex v, unsigned k_max);

// BFS distances from v; unreachable vertices get std::nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex v);

std::size_t eccentricity(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

// Component index of every vertex, numbered in order of their smallest vertex.
std::vector<std::size_t> component_labels(const Graph& g);

struct Bipartition {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

// Two-coloring with the smallest vertex of every component (and every
// isolated vertex) in `first`. Empty when g contains an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

bool quadrangle_through(const Graph& g, Vertex v);

bool is_quadrangle_free(const Graph& g);

struct Component {
    Graph graph;
    // original_ids[new_id] is the vertex id in the parent graph.
    std::vector<Vertex> original_ids;

    Vertex local_id(Vertex original) const;
};

// Induced subgraph on the component of v, vertices renumbered in
// increasing order of their original ids.
Component component_of(const Graph& g, Vertex v);

// Induced subgraph on `vertices` (must be sorted and unique).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph remove_edge(const Graph& g, Vertex u, Vertex v);

// Vertex v of g becomes vertex permutation[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> permutation);

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

// Seeded Erdos-Renyi style graphs: n uniform in [1, n_max], edge
// probability uniform in (0, 1). Within every complete block of ten
// graphs at least one is connected and one is bipartite.
std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t n_max, std::size_t how_many);

// Edge-list text format: '#' comments, optional leading "n <count>" line,
// then one "<u> <v>" pair per line.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

} // namespace vxe
