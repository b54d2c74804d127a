#include "vxe/bounds.hpp"

#include "vxe/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vxe {

namespace {

constexpr double kRadicandSlack = 1e-10;

double checked_sqrt(double radicand, const char* what)
{
    if (radicand < -kRadicandSlack)
        throw NegativeRadicand(std::string(what) + ": radicand " + std::to_string(radicand) +
                               " is negative");
    return std::sqrt(std::max(radicand, 0.0));
}

std::size_t max_degree_or_throw(const Graph& g)
{
    std::size_t delta = degree_extremes(g).max;
    if (delta == 0)
        throw EmptyGraph();
    return delta;
}

void require_connected_with_edges(const Graph& g)
{
    if (!is_connected(g))
        throw DisconnectedError();
    if (g.size() == 0)
        throw EmptyGraph();
}

std::size_t require_degree(const Graph& g, Vertex v)
{
    std::size_t d = degree(g, v);
    if (d == 0)
        throw ZeroDegree(v);
    return d;
}

} // namespace

double upper_sqrt_degree(const Graph& g, Vertex v)
{
    return std::sqrt(static_cast<double>(degree(g, v)));
}

double lower_degree_ratio(const Graph& g, Vertex v)
{
    std::size_t d = degree(g, v);
    return static_cast<double>(d) / static_cast<double>(max_degree_or_throw(g));
}

double lower_sqrt_degree_ratio(const Graph& g, Vertex v)
{
    return std::sqrt(lower_degree_ratio(g, v));
}

double lower_m4(const Graph& g, Vertex v)
{
    auto d = static_cast<double>(require_degree(g, v));
    auto m4 = static_cast<double>(closed_walk_count(g, v, 4));
    return std::pow(d, 1.5) / std::sqrt(m4);
}

double lower_holder(const Graph& g, const SpectralDecomposition& s, Vertex v, unsigned k, double p)
{
    if (k < 2)
        throw BadExponent("Hoelder bound needs k >= 2");
    if (!(p > 1.0) || !std::isfinite(p))
        throw BadExponent("Hoelder bound needs a finite exponent p > 1");
    require_degree(g, v);
    double q = p / (p - 1.0);
    double numerator = abs_moment(s, v, static_cast<double>(k));
    double denominator = abs_moment(s, v, p * static_cast<double>(k - 1) + 1.0);
    return std::pow(numerator, q) / std::pow(denominator, q / p);
}

std::optional<double> lower_quadrangle_free(const Graph& g, Vertex v)
{
    auto d = static_cast<double>(require_degree(g, v));
    if (quadrangle_through(g, v))
        return std::nullopt;
    auto delta = static_cast<double>(degree_extremes(g).max);
    return std::sqrt(d) * std::sqrt(d / (d + delta - 1.0));
}

double top_group_weight(const SpectralDecomposition& s, Vertex v)
{
    auto groups = eigenvalue_groups(s);
    return group_weights(s, groups, v).front();
}

AbsTopGroup abs_top_group(const SpectralDecomposition& s, Vertex v)
{
    if (v >= s.order())
        throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    double top = std::abs(s.eigenvalues().front());
    for (double lambda : s.eigenvalues())
        top = std::max(top, std::abs(lambda));
    double tol = grouping_tolerance(s);
    AbsTopGroup group;
    for (std::size_t j = 0; j < s.order(); ++j) {
        if (top - std::abs(s.eigenvalues()[j]) <= tol) {
            group.weight += s.weight(v, j);
            ++group.multiplicity;
        }
    }
    return group;
}

double km_weight_lower_bound(const Graph& g, const SpectralDecomposition& s, Vertex v)
{
    require_connected_with_edges(g);
    auto r = static_cast<double>(eccentricity(g, v));
    double lambda1 = s.eigenvalues().front();
    return 1.0 / (std::pow(lambda1, 2.0 * r) + std::pow(lambda1, 2.0 * r - 2.0));
}

double km_upper_raw(const Graph& g, const SpectralDecomposition& s, Vertex v)
{
    require_connected_with_edges(g);
    auto d = static_cast<double>(degree(g, v));
    double p = top_group_weight(s, v);
    double lambda1 = std::abs(s.eigenvalues().front());
    return p * lambda1 + checked_sqrt((d - p * lambda1 * lambda1) * (1.0 - p), "km_upper_raw");
}

double km_alpha(const Graph& g)
{
    if (g.order() == 0)
        return 0.0;
    double sum_sq = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = static_cast<double>(degree(g, v));
        sum_sq += d * d;
    }
    auto delta = static_cast<double>(degree_extremes(g).max);
    return std::max(std::sqrt(sum_sq / static_cast<double>(g.order())), std::sqrt(delta));
}

double km_upper(const Graph& g, Vertex v)
{
    require_connected_with_edges(g);
    auto d = static_cast<double>(degree(g, v));
    auto delta = static_cast<double>(degree_extremes(g).max);
    auto r = static_cast<double>(eccentricity(g, v));
    double alpha = km_alpha(g);
    double p = 1.0 / (2.0 * std::pow(delta, 2.0 * r));
    return p * std::abs(alpha) + checked_sqrt((d - p * alpha * alpha) * (1.0 - p), "km_upper");
}

GlobalBounds global_bounds(const Graph& g)
{
    GlobalBounds b;
    for (Vertex v = 0; v < g.order(); ++v)
        b.sum_sqrt_degrees += std::sqrt(static_cast<double>(degree(g, v)));
    b.mcclelland = std::sqrt(2.0 * static_cast<double>(g.size()) * static_cast<double>(g.order()));
    return b;
}

BipartiteBounds bipartite_global_bounds(const Graph& g)
{
    auto split = bipartition(g);
    if (!split)
        throw NotBipartite();

    BipartiteBounds b;
    b.parts[0].vertices = std::move(split->first);
    b.parts[1].vertices = std::move(split->second);
    if (b.parts[1].vertices.size() < b.parts[0].vertices.size())
        std::swap(b.parts[0].vertices, b.parts[1].vertices);

    auto delta = static_cast<double>(degree_extremes(g).max);
    for (auto& part : b.parts) {
        double sum = 0.0;
        for (Vertex v : part.vertices)
            sum += std::sqrt(static_cast<double>(degree(g, v)));
        part.upper = 2.0 * sum;
        part.lower = delta > 0.0 ? 2.0 * sum / std::sqrt(delta) : 0.0;
    }
    b.tighter_lower_part = b.parts[1].lower > b.parts[0].lower ? 1 : 0;
    b.tighter_upper_part = b.parts[1].upper < b.parts[0].upper ? 1 : 0;

    b.size_bounds_applicable = is_connected(g) && g.size() > 0;
    if (b.size_bounds_applicable) {
        auto m = static_cast<double>(g.size());
        auto n1 = static_cast<double>(b.parts[0].vertices.size());
        b.size_upper = 2.0 * std::sqrt(n1 * m);
        for (std::size_t x = 0; x < 2; ++x) {
            auto nx = static_cast<double>(b.parts[x].vertices.size());
            b.size_lower[x] = 2.0 * (nx - 1.0 + std::sqrt(m - nx + 1.0)) / std::sqrt(delta);
        }
    }
    return b;
}

bool BoundReport::sandwich_holds(double tol) const
{
    for (const auto& b : lower_bounds)
        if (b.applicable && b.value > energy + tol)
            return false;
    for (const auto& b : upper_bounds)
        if (b.applicable && energy > b.value + tol)
            return false;
    return true;
}

BoundReport bound_report(const Graph& g, const SpectralDecomposition& s, Vertex v)
{
    BoundReport r;
    r.vertex = v;
    r.degree = degree(g, v);
    r.energy = vertex_energy(s, v);
    r.alpha = km_alpha(g);

    bool connected = is_connected(g);
    bool has_edges = g.size() > 0;
    if (connected)
        r.eccentricity = eccentricity(g, v);

    static const char* const kLowerNames[] = {
        "degree_ratio", "sqrt_degree_ratio", "m4", "holder_k2_p3", "holder_k2_p2", "holder_k3_p2",
        "quadrangle_free",
    };
    static const char* const kUpperNames[] = {"sqrt_degree", "km_raw", "km"};

    // Isolated vertex: energy 0 and every bound degenerates to 0. The
    // eccentricity-based ones still need a connected graph (n == 1).
    if (r.degree == 0) {
        for (const char* name : kLowerNames)
            r.lower_bounds.push_back({name, 0.0, true});
        r.upper_bounds.push_back({kUpperNames[0], 0.0, true});
        r.upper_bounds.push_back({kUpperNames[1], 0.0, connected});
        r.upper_bounds.push_back({kUpperNames[2], 0.0, connected});
        return r;
    }

    r.lower_bounds = {
        {kLowerNames[0], lower_degree_ratio(g, v), true},
        {kLowerNames[1], lower_sqrt_degree_ratio(g, v), true},
        {kLowerNames[2], lower_m4(g, v), true},
        {kLowerNames[3], lower_holder(g, s, v, 2, 3.0), true},
        {kLowerNames[4], lower_holder(g, s, v, 2, 2.0), true},
        {kLowerNames[5], lower_holder(g, s, v, 3, 2.0), true},
    };
    auto quad = lower_quadrangle_free(g, v);
    r.lower_bounds.push_back({kLowerNames[6], quad.value_or(0.0), quad.has_value()});

    r.upper_bounds.push_back({kUpperNames[0], upper_sqrt_degree(g, v), true});
    if (connected && has_edges) {
        r.upper_bounds.push_back({kUpperNames[1], km_upper_raw(g, s, v), true});
        r.upper_bounds.push_back({kUpperNames[2], km_upper(g, v), true});
        r.top_weight = top_group_weight(s, v);
        r.top_weight_lower_bound = km_weight_lower_bound(g, s, v);
    } else {
        r.upper_bounds.push_back({kUpperNames[1], 0.0, false});
        r.upper_bounds.push_back({kUpperNames[2], 0.0, false});
    }
    return r;
}

BoundReport bound_report(const Graph& g, Vertex v, const DecomposeOptions& options)
{
    if (v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    return bound_report(g, decompose(g, options), v);
}

} // namespace vxe
