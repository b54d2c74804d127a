#include "vxe/errors.hpp"
#include "vxe/graph.hpp"

#include <cmath>
#include <random>

namespace vxe {

namespace {

Graph draw_graph(std::mt19937_64& rng, std::size_t n_max)
{
    std::uniform_int_distribution<std::size_t> order(1, n_max);
    // Open interval (0, 1).
    std::uniform_real_distribution<double> density(std::nextafter(0.0, 1.0), 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::size_t n = order(rng);
    double p = density(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t n_max, std::size_t how_many)
{
    if (n_max < 1)
        throw BadParameters("random_corpus needs n_max >= 1");

    std::mt19937_64 rng(seed);
    std::vector<Graph> corpus;
    corpus.reserve(how_many);

    bool block_connected = false;
    bool block_bipartite = false;
    for (std::size_t i = 0; i < how_many; ++i) {
        std::size_t slot = i % 10;
        if (slot == 0)
            block_connected = block_bipartite = false;
        bool complete_block = i - slot + 10 <= how_many;

        Graph g = draw_graph(rng, n_max);
        if (complete_block && slot == 8 && !block_connected)
            while (!is_connected(g))
                g = draw_graph(rng, n_max);
        if (complete_block && slot == 9 && !block_bipartite)
            while (!bipartition(g))
                g = draw_graph(rng, n_max);

        block_connected = block_connected || is_connected(g);
        block_bipartite = block_bipartite || bipartition(g).has_value();
        corpus.push_back(std::move(g));
    }
    return corpus;
}

} // namespace vxe
