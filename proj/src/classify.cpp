#include "vxe/classify.hpp"

#include "vxe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vxe {

namespace {

std::optional<std::size_t> regular_degree(const Graph& g)
{
    if (g.order() == 0)
        return std::nullopt;
    auto ext = degree_extremes(g);
    if (ext.min != ext.max)
        return std::nullopt;
    return ext.min;
}

std::string part_sizes(std::size_t n1, std::size_t n2)
{
    std::ostringstream out;
    out << "n1=" << n1 << ",n2=" << n2;
    return out.str();
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

} // namespace

VertexClass classify_energy(Vertex v, double energy)
{
    VertexClass c;
    c.vertex = v;
    c.energy = energy;
    c.hyperenergetic = energy >= kHyperThreshold - kBorderlineBand;
    c.hypoenergetic = energy < kHypoThreshold - kBorderlineBand;
    c.borderline = std::abs(energy - kHyperThreshold) <= kBorderlineBand ||
                   std::abs(energy - kHypoThreshold) <= kBorderlineBand;
    return c;
}

VertexClass classify_vertex(const SpectralDecomposition& s, Vertex v)
{
    return classify_energy(v, vertex_energy(s, v));
}

VertexClass classify_vertex(const Graph& g, Vertex v, const DecomposeOptions& options)
{
    if (v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    return classify_vertex(decompose(g, options), v);
}

std::string to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::completely_non_hyperenergetic:
        return "completely_non_hyperenergetic";
    case Conclusion::completely_hyperenergetic:
        return "completely_hyperenergetic";
    case Conclusion::completely_non_hypoenergetic:
        return "completely_non_hypoenergetic";
    case Conclusion::vertices_hypoenergetic:
        return "vertices_hypoenergetic";
    case Conclusion::energy_below_order:
        return "energy_below_order";
    }
    return "unknown";
}

std::vector<Criterion> criteria_check(const Graph& g, std::optional<std::span<const Vertex>> independent_set)
{
    std::vector<Criterion> out;
    auto regular = regular_degree(g);
    auto ext = degree_extremes(g);
    bool quad_free = is_quadrangle_free(g);
    std::string d_param = regular ? "d=" + std::to_string(*regular) : "not regular";

    out.push_back({"regular_degree_at_most_4", d_param, regular && *regular <= 4,
                   Conclusion::completely_non_hyperenergetic, {}});
    out.push_back({"quadrangle_free_regular_degree_at_least_8", d_param,
                   regular && quad_free && *regular >= 8, Conclusion::completely_hyperenergetic, {}});
    {
        std::ostringstream params;
        params << "delta=" << ext.min << ",Delta=" << ext.max << (quad_free ? "" : ",has quadrangle");
        bool holds = g.order() > 0 && quad_free &&
                     static_cast<double>(ext.min) >= 2.0 * std::sqrt(static_cast<double>(ext.max)) + 2.0;
        out.push_back({"quadrangle_free_min_degree", params.str(), holds,
                       Conclusion::completely_hyperenergetic, {}});
    }
    out.push_back({"regular_degree_at_least_1", d_param, regular && *regular >= 1,
                   Conclusion::completely_non_hypoenergetic, {}});

    {
        // A pendant vertex whose component is K2 has energy exactly 1.
        Criterion pendant{"pendant_vertices", "", false, Conclusion::vertices_hypoenergetic, {}};
        for (Vertex v = 0; v < g.order(); ++v) {
            if (degree(g, v) != 1)
                continue;
            Vertex w = g.neighbors(v).front();
            if (degree(g, w) == 1)
                continue;
            pendant.vertices.push_back(v);
        }
        pendant.holds = !pendant.vertices.empty();
        pendant.parameters = "count=" + std::to_string(pendant.vertices.size());
        out.push_back(std::move(pendant));
    }

    auto parts = bipartition(g);
    {
        Criterion small_part{"bipartite_small_part", "not bipartite", false,
                             Conclusion::energy_below_order, {}};
        if (parts) {
            std::size_t a = parts->first.size();
            std::size_t b = parts->second.size();
            auto fires = [](std::size_t n1, std::size_t n2) {
                return 2.0 * static_cast<double>(n1) <= std::sqrt(static_cast<double>(n2));
            };
            std::size_t n1 = std::min(a, b), n2 = std::max(a, b);
            small_part.holds = fires(n1, n2) || fires(n2, n1);
            small_part.parameters = part_sizes(n1, n2);
        }
        out.push_back(std::move(small_part));
    }
    {
        Criterion tree{"tree_small_part", "not a tree", false, Conclusion::energy_below_order, {}};
        if (parts && is_tree(g)) {
            std::size_t n1 = std::min(parts->first.size(), parts->second.size());
            std::size_t n2 = std::max(parts->first.size(), parts->second.size());
            tree.holds = 4 * n1 <= g.order();
            tree.parameters = part_sizes(n1, n2);
        }
        out.push_back(std::move(tree));
    }
    {
        Criterion indep{"independent_set", "no independent set supplied", false,
                        Conclusion::energy_below_order, {}};
        std::vector<Vertex> w2;
        bool usable = false;
        if (independent_set) {
            w2.assign(independent_set->begin(), independent_set->end());
            std::sort(w2.begin(), w2.end());
            w2.erase(std::unique(w2.begin(), w2.end()), w2.end());
            usable = std::all_of(w2.begin(), w2.end(), [&](Vertex v) { return v < g.order(); }) &&
                     is_independent_set(g, w2);
            if (!usable)
                indep.parameters = "supplied set is not an independent set of this graph";
        } else if (parts) {
            w2 = parts->first.size() >= parts->second.size() ? parts->first : parts->second;
            usable = true;
        }
        if (usable) {
            std::size_t n2 = w2.size();
            std::size_t n1 = g.order() - n2;
            indep.holds = static_cast<double>(n1) <= 0.4 * std::sqrt(static_cast<double>(n2));
            indep.parameters = part_sizes(n1, n2);
        }
        out.push_back(std::move(indep));
    }
    return out;
}

bool conclusion_satisfied(const Criterion& c, const EnergyVector& energies, double tol)
{
    const auto& e = energies.per_vertex;
    switch (c.conclusion) {
    case Conclusion::completely_non_hyperenergetic:
        return std::all_of(e.begin(), e.end(), [&](double x) { return x < kHyperThreshold + tol; });
    case Conclusion::completely_hyperenergetic:
        return std::all_of(e.begin(), e.end(), [&](double x) { return x >= kHyperThreshold - tol; });
    case Conclusion::completely_non_hypoenergetic:
        return std::all_of(e.begin(), e.end(), [&](double x) { return x >= kHypoThreshold - tol; });
    case Conclusion::vertices_hypoenergetic:
        return std::all_of(c.vertices.begin(), c.vertices.end(),
                           [&](Vertex v) { return e.at(v) < kHypoThreshold + tol; });
    case Conclusion::energy_below_order:
        return energies.total < static_cast<double>(e.size()) + tol;
    }
    return false;
}

GraphClass classify_graph(const Graph& g, const SpectralDecomposition& s,
                          std::optional<std::span<const Vertex>> independent_set)
{
    GraphClass gc;
    for (Vertex v = 0; v < s.order(); ++v)
        gc.vertices.push_back(classify_vertex(s, v));

    auto all = [&](auto pred) { return std::all_of(gc.vertices.begin(), gc.vertices.end(), pred); };
    gc.completely_hyperenergetic = all([](const VertexClass& c) { return c.hyperenergetic; });
    gc.completely_non_hyperenergetic = all([](const VertexClass& c) { return !c.hyperenergetic; });
    gc.completely_hypoenergetic = all([](const VertexClass& c) { return c.hypoenergetic; });
    gc.completely_non_hypoenergetic = all([](const VertexClass& c) { return !c.hypoenergetic; });

    for (auto& c : criteria_check(g, independent_set))
        if (c.holds)
            gc.satisfied_criteria.push_back(std::move(c));
    return gc;
}

GraphClass classify_graph(const Graph& g, const DecomposeOptions& options)
{
    return classify_graph(g, decompose(g, options));
}

} // namespace vxe
