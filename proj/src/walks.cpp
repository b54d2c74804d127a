#include "vxe/errors.hpp"
#include "vxe/graph.hpp"

namespace vxe {

std::vector<std::uint64_t> closed_walk_counts(const Graph& g, Vertex v, unsigned k_max)
{
    if (v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    if (k_max > kMaxWalkLength)
        throw OutOfRange("walk length " + std::to_string(k_max) + " exceeds " +
                         std::to_string(kMaxWalkLength));

    // walks[u] = number of walks of the current length from v to u. Counts
    // that no longer fit in 64 bits are tracked as saturated; only a
    // saturated closed count is an error.
    std::vector<std::uint64_t> walks(g.order(), 0), next(g.order());
    std::vector<char> saturated(g.order(), 0), next_saturated(g.order());
    walks[v] = 1;
    std::vector<std::uint64_t> closed{1};
    for (unsigned k = 1; k <= k_max; ++k) {
        std::fill(next.begin(), next.end(), 0);
        std::fill(next_saturated.begin(), next_saturated.end(), 0);
        for (Vertex u = 0; u < g.order(); ++u) {
            if (walks[u] == 0 && !saturated[u])
                continue;
            for (Vertex w : g.neighbors(u)) {
                if (saturated[u] || __builtin_add_overflow(next[w], walks[u], &next[w]))
                    next_saturated[w] = 1;
            }
        }
        walks.swap(next);
        saturated.swap(next_saturated);
        if (saturated[v])
            throw OverflowError("closed walk count of length " + std::to_string(k) +
                                " at vertex " + std::to_string(v) + " exceeds 64 bits");
        closed.push_back(walks[v]);
    }
    return closed;
}

std::uint64_t closed_walk_count(const Graph& g, Vertex v, unsigned k)
{
    return closed_walk_counts(g, v, k).back();
}

} // namespace vxe
