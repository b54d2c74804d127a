#pragma once

#include "vxe/families.hpp"
#include "vxe/graph.hpp"

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fixture {

using vxe::Edge;
using vxe::Graph;

inline Graph make(std::size_t n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

// Edges given with 1-based labels.
inline Graph make_one_based(std::size_t n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> list;
    for (auto [u, v] : edges)
        list.emplace_back(u - 1, v - 1);
    return Graph::from_edges(n, list);
}

inline Graph family(const vxe::families::FamilySpec& spec) { return vxe::families::generate(spec); }

inline Graph k2() { return make(2, {{0, 1}}); }
inline Graph complete(std::size_t n) { return family(vxe::families::Complete{n}); }
inline Graph cycle(std::size_t n) { return family(vxe::families::Cycle{n}); }
inline Graph path(std::size_t n) { return family(vxe::families::Path{n}); }
inline Graph star(std::size_t n) { return family(vxe::families::Star{n}); }
inline Graph kbip(std::size_t a, std::size_t b) { return family(vxe::families::CompleteBipartite{a, b}); }

// K_{2,3} with a pendant vertex (4) hung on one of the degree-3 vertices (6).
inline Graph k23_pendant()
{
    return make_one_based(6, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6}});
}

// K_{3,3} minus the edge 3-4.
inline Graph k33_minus_edge()
{
    return make_one_based(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}});
}

// Three graphs on six vertices where every vertex has energy 4/3.
inline Graph g1() { return make_one_based(6, {{1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {3, 6}}); }
inline Graph g2()
{
    return make_one_based(6, {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6}});
}
inline Graph g3()
{
    return make_one_based(
        6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
}

// Point-line incidence graph of the projective plane over Z_q, q prime:
// (q+1)-regular, bipartite, girth 6, with 2(q^2+q+1) vertices. Points come
// first, then lines.
inline Graph projective_plane_incidence(std::size_t q)
{
    std::vector<std::array<std::size_t, 3>> points;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            points.push_back({1, a, b});
    for (std::size_t b = 0; b < q; ++b)
        points.push_back({0, 1, b});
    points.push_back({0, 0, 1});

    std::size_t n = points.size();
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t l = 0; l < n; ++l) {
            std::size_t dot = 0;
            for (int i = 0; i < 3; ++i)
                dot += points[p][i] * points[l][i];
            if (dot % q == 0)
                edges.emplace_back(p, n + l);
        }
    return Graph::from_edges(2 * n, edges);
}

} // namespace fixture
