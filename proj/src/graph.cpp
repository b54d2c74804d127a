#include "vxe/graph.hpp"

#include "vxe/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace vxe {

namespace {

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(g.order()));
}

} // namespace

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw OutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a vertex >= " + std::to_string(n));
        if (u == v)
            throw BadParameters("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        total += list.size();
    }
    g.edge_count_ = total / 2;
    return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(*this, v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto list = neighbors(u);
    check_vertex(*this, v);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t degree(const Graph& g, Vertex v)
{
    return g.neighbors(v).size();
}

DegreeExtremes degree_extremes(const Graph& g)
{
    if (g.order() == 0)
        return {};
    DegreeExtremes ext{degree(g, 0), degree(g, 0)};
    for (Vertex v = 1; v < g.order(); ++v) {
        ext.min = std::min(ext.min, degree(g, v));
        ext.max = std::max(ext.max, degree(g, v));
    }
    return ext;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<Vertex> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::size_t eccentricity(const Graph& g, Vertex v)
{
    std::size_t ecc = 0;
    for (const auto& d : distances_from(g, v)) {
        if (!d)
            throw DisconnectedError();
        ecc = std::max(ecc, *d);
    }
    return ecc;
}

std::vector<std::size_t> component_labels(const Graph& g)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::size_t next = 0;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (label[root] != unset)
            continue;
        std::vector<Vertex> stack{root};
        label[root] = next;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g)
{
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    std::vector<int> color(g.order(), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (color[root] >= 0)
            continue;
        color[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < g.order(); ++v)
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

bool quadrangle_through(const Graph& g, Vertex v)
{
    auto nbrs = g.neighbors(v);
    // For each neighbor a, mark the vertices w != v reached through it; a
    // second neighbor b reaching a marked w closes v-a-w-b-v.
    std::vector<Vertex> seen_via(g.order(), g.order());
    for (Vertex a : nbrs) {
        for (Vertex w : g.neighbors(a)) {
            if (w == v)
                continue;
            if (seen_via[w] != g.order() && seen_via[w] != a)
                return true;
            seen_via[w] = a;
        }
    }
    return false;
}

bool is_quadrangle_free(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (quadrangle_through(g, v))
            return false;
    return true;
}

Vertex Component::local_id(Vertex original) const
{
    auto it = std::lower_bound(original_ids.begin(), original_ids.end(), original);
    if (it == original_ids.end() || *it != original)
        throw OutOfRange("vertex " + std::to_string(original) + " is not in this component");
    return static_cast<Vertex>(it - original_ids.begin());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> local(g.order(), g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(g, vertices[i]);
        local[vertices[i]] = i;
    }
    std::vector<Edge> edges;
    for (Vertex u : vertices)
        for (Vertex w : g.neighbors(u))
            if (local[w] != g.order() && u < w)
                edges.emplace_back(local[u], local[w]);
    return Graph::from_edges(vertices.size(), edges);
}

Component component_of(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    auto labels = component_labels(g);
    Component c;
    for (Vertex u = 0; u < g.order(); ++u)
        if (labels[u] == labels[v])
            c.original_ids.push_back(u);
    c.graph = induced_subgraph(g, c.original_ids);
    return c;
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v)
{
    if (!g.adjacent(u, v))
        throw BadParameters("no edge between " + std::to_string(u) + " and " + std::to_string(v));
    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph::from_edges(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation)
{
    if (permutation.size() != g.order())
        throw BadParameters("permutation length does not match graph order");
    std::vector<bool> hit(g.order(), false);
    for (Vertex p : permutation) {
        if (p >= g.order() || hit[p])
            throw BadParameters("not a permutation");
        hit[p] = true;
    }
    auto edges = g.edges();
    for (auto& [a, b] : edges) {
        a = permutation[a];
        b = permutation[b];
    }
    return Graph::from_edges(g.order(), edges);
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

} // namespace vxe
