#include "vxe/limits.hpp"

#include "vxe/errors.hpp"
#include "vxe/quadrature.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace vxe::limits {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t parse_parameter(std::string_view token, std::string_view whole)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw BadParameters("malformed number in model '" + std::string(whole) + "'");
    return value;
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

double root_energy(const Graph& g, Vertex root, const DecomposeOptions& options)
{
    return vertex_energy(decompose(g, options), root);
}

} // namespace

void validate(const LimitModel& model)
{
    std::visit(overloaded{
                   [](const Line&) {},
                   [](const SemiLine& m) {
                       if (m.index < 1)
                           throw BadParameters("semiline vertex index must be at least 1");
                   },
                   [](const RegularTree& m) {
                       if (m.d < 3)
                           throw BadParameters("regular tree degree must be at least 3");
                   },
               },
               model);
}

LimitModel parse_model(std::string_view text)
{
    LimitModel model;
    if (text == "line") {
        model = Line{};
    } else if (text.starts_with("semiline:")) {
        model = SemiLine{parse_parameter(text.substr(9), text)};
    } else if (text.starts_with("tree:")) {
        model = RegularTree{parse_parameter(text.substr(5), text)};
    } else {
        throw BadParameters("unknown model '" + std::string(text) + "'");
    }
    validate(model);
    return model;
}

std::string to_string(const LimitModel& model)
{
    return std::visit(overloaded{
                          [](const Line&) { return std::string("line"); },
                          [](const SemiLine& m) { return "semiline:" + std::to_string(m.index); },
                          [](const RegularTree& m) { return "tree:" + std::to_string(m.d); },
                      },
                      model);
}

double semiline_limit(std::size_t index)
{
    if (index < 1)
        throw BadParameters("semiline vertex index must be at least 1");
    auto i = static_cast<double>(index);
    double sign = index % 2 == 0 ? 1.0 : -1.0;
    return 4.0 / pi + 4.0 * sign / (pi * (4.0 * i * i - 1.0));
}

double limit_energy(const LimitModel& model)
{
    validate(model);
    return std::visit(overloaded{
                          [](const Line&) { return 4.0 / pi; },
                          [](const SemiLine& m) {
                              if (m.index == 1)
                                  return 8.0 / (3.0 * pi);
                              return semiline_limit(m.index);
                          },
                          [](const RegularTree& m) {
                              auto d = static_cast<double>(m.d);
                              double s = std::sqrt(d - 1.0);
                              return (2.0 * d * s - d * (d - 2.0) * std::atan(2.0 * s / (d - 2.0))) / pi;
                          },
                      },
                      model);
}

DensitySpec density(const LimitModel& model)
{
    validate(model);
    return std::visit(
        overloaded{
            [](const Line&) {
                return DensitySpec{
                    -2.0, 2.0,
                    [](double x) { return 1.0 / (pi * std::sqrt(4.0 - x * x)); },
                    [](double) { return 1.0 / pi; },
                };
            },
            [](const SemiLine& m) {
                if (m.index != 1)
                    throw UnsupportedModel("no density available for semiline vertex " +
                                           std::to_string(m.index));
                return DensitySpec{
                    -2.0, 2.0,
                    [](double x) { return std::sqrt(4.0 - x * x) / (2.0 * pi); },
                    [](double t) {
                        double c = std::cos(t);
                        return 2.0 * c * c / pi;
                    },
                };
            },
            [](const RegularTree& m) {
                auto d = static_cast<double>(m.d);
                double r = 2.0 * std::sqrt(d - 1.0);
                return DensitySpec{
                    -r, r,
                    [d, r](double x) {
                        return d * std::sqrt(r * r - x * x) / (2.0 * pi * (d * d - x * x));
                    },
                    [d, r](double t) {
                        double c = r * std::cos(t);
                        double x = r * std::sin(t);
                        return d * c * c / (2.0 * pi * (d * d - x * x));
                    },
                };
            },
        },
        model);
}

double density_moment(const LimitModel& model, double abs_power)
{
    if (!(abs_power >= 0.0))
        throw BadExponent("absolute moment exponent must be non-negative");
    DensitySpec spec = density(model);
    double r = spec.upper;
    auto integrand = [&](double t) {
        double weight = spec.angular(t);
        return abs_power == 0.0 ? weight : weight * std::pow(r * std::sin(t), abs_power);
    };
    return 2.0 * adaptive_simpson(integrand, 0.0, 0.5 * pi);
}

double density_mass(const LimitModel& model) { return density_moment(model, 0.0); }

double density_quadrature(const LimitModel& model) { return density_moment(model, 1.0); }

std::size_t regular_tree_ball_order(std::size_t d, std::size_t radius)
{
    if (d < 3)
        throw BadParameters("regular tree degree must be at least 3");
    constexpr std::size_t max = std::numeric_limits<std::size_t>::max();
    std::size_t total = 1;
    std::size_t layer = 1;
    for (std::size_t depth = 1; depth <= radius; ++depth) {
        std::size_t branching = depth == 1 ? d : d - 1;
        if (layer > max / branching)
            return max;
        layer *= branching;
        if (total > max - layer)
            return max;
        total += layer;
    }
    return total;
}

Graph regular_tree_ball(std::size_t d, std::size_t radius, std::size_t cap)
{
    std::size_t n = regular_tree_ball_order(d, radius);
    if (n > cap)
        throw SizeCapExceeded(n, cap);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // BFS numbering: each vertex's children are contiguous and vertices at
    // depth < radius are expanded in order.
    std::size_t next = 1;
    std::size_t layer_begin = 0;
    std::size_t layer_end = 1;
    for (std::size_t depth = 0; depth < radius; ++depth) {
        std::size_t children = depth == 0 ? d : d - 1;
        for (Vertex v = layer_begin; v < layer_end; ++v)
            for (std::size_t c = 0; c < children; ++c)
                edges.emplace_back(v, next++);
        layer_begin = layer_end;
        layer_end = next;
    }
    return Graph::from_edges(n, edges);
}

std::vector<TruncationPoint> truncation_series(const LimitModel& model, const std::vector<std::size_t>& sizes,
                                               const DecomposeOptions& options)
{
    validate(model);
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] < sizes[i - 1])
            throw BadParameters("truncation sizes must be ascending");

    std::vector<TruncationPoint> out;
    out.reserve(sizes.size());
    for (std::size_t s : sizes) {
        double energy = std::visit(
            overloaded{
                [&](const Line&) {
                    if (s > (options.size_cap - 1) / 2)
                        throw SizeCapExceeded(s > (std::numeric_limits<std::size_t>::max() - 1) / 2
                                                  ? std::numeric_limits<std::size_t>::max()
                                                  : 2 * s + 1,
                                              options.size_cap);
                    return root_energy(path_graph(2 * s + 1), s, options);
                },
                [&](const SemiLine& m) {
                    if (s < m.index)
                        throw BadParameters("semiline truncation size " + std::to_string(s) +
                                            " is smaller than the vertex index " + std::to_string(m.index));
                    if (s > options.size_cap)
                        throw SizeCapExceeded(s, options.size_cap);
                    return root_energy(path_graph(s), m.index - 1, options);
                },
                [&](const RegularTree& m) {
                    return root_energy(regular_tree_ball(m.d, s, options.size_cap), 0, options);
                },
            },
            model);
        out.push_back({s, energy});
    }
    return out;
}

} // namespace vxe::limits
