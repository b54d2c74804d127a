#include "vxe/families.hpp"

#include "vxe/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace vxe::families {

namespace {

constexpr std::size_t kMaxGeneratedOrder = std::size_t{1} << 22;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        out.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
        if (end == std::string_view::npos)
            return out;
        start = end + 1;
    }
}

std::size_t parse_count(std::string_view token, std::string_view whole)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw BadParameters("malformed number '" + std::string(token) + "' in family spec '" +
                            std::string(whole) + "'");
    return value;
}

std::vector<std::size_t> parse_list(std::string_view token, std::string_view whole)
{
    std::vector<std::size_t> out;
    for (auto item : split(token, ','))
        out.push_back(parse_count(item, whole));
    return out;
}

std::size_t order_of(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const Complete& f) { return f.n; },
                          [](const Cycle& f) { return f.n; },
                          [](const Path& f) { return f.n; },
                          [](const Star& f) { return f.n; },
                          [](const CompleteBipartite& f) { return f.n1 + f.n2; },
                          [](const Hypercube& f) { return std::size_t{1} << f.dim; },
                          [](const Friendship& f) { return 2 * f.k + 1; },
                          [](const Circulant& f) { return f.n; },
                      },
                      spec);
}

std::vector<Vertex> range(Vertex first, Vertex last)
{
    std::vector<Vertex> out;
    for (Vertex v = first; v < last; ++v)
        out.push_back(v);
    return out;
}

double cycle_vertex_energy(std::size_t n)
{
    constexpr double pi = std::numbers::pi;
    auto nn = static_cast<double>(n);
    if (n % 2 == 1)
        return 2.0 / (nn * std::sin(pi / (2.0 * nn)));
    if (n % 4 == 0)
        return 4.0 * std::cos(pi / nn) / (nn * std::sin(pi / nn));
    return 4.0 / (nn * std::sin(pi / nn));
}

// Position i is 1-based, as in the eigenvector formula
// u_ij = sqrt(2/(n+1)) sin(ij pi/(n+1)).
double path_vertex_energy(std::size_t n, std::size_t i)
{
    constexpr double pi = std::numbers::pi;
    double np1 = static_cast<double>(n + 1);
    double sum = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        double s = std::sin(static_cast<double>(i * j) * pi / np1);
        sum += std::abs(std::cos(static_cast<double>(j) * pi / np1)) * s * s;
    }
    return 4.0 / np1 * sum;
}

double binomial(std::size_t n, std::size_t k)
{
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return out;
}

} // namespace

void validate(const FamilySpec& spec)
{
    std::visit(overloaded{
                   [](const Complete& f) {
                       if (f.n < 1)
                           throw BadParameters("complete graph needs n >= 1");
                   },
                   [](const Cycle& f) {
                       if (f.n < 3)
                           throw BadParameters("cycle needs n >= 3");
                   },
                   [](const Path& f) {
                       if (f.n < 1)
                           throw BadParameters("path needs n >= 1");
                   },
                   [](const Star& f) {
                       if (f.n < 1)
                           throw BadParameters("star needs n >= 1");
                   },
                   [](const CompleteBipartite& f) {
                       if (f.n1 < 1 || f.n2 < 1)
                           throw BadParameters("complete bipartite graph needs n1, n2 >= 1");
                   },
                   [](const Hypercube& f) {
                       if (f.dim > 22)
                           throw BadParameters("hypercube dimension above 22 is not supported");
                   },
                   [](const Friendship& f) {
                       if (f.k < 1)
                           throw BadParameters("friendship graph needs k >= 1");
                   },
                   [](const Circulant& f) {
                       if (f.n < 2)
                           throw BadParameters("circulant needs n >= 2");
                       if (f.connections.empty())
                           throw BadParameters("circulant needs a nonempty connection set");
                       for (std::size_t s : f.connections)
                           if (s < 1 || s > f.n / 2)
                               throw BadParameters("circulant connection " + std::to_string(s) +
                                                   " outside 1.." + std::to_string(f.n / 2));
                   },
               },
               spec);
    if (order_of(spec) > kMaxGeneratedOrder)
        throw BadParameters("family instance has too many vertices");
}

FamilySpec parse_family(std::string_view text)
{
    auto fields = split(text, ':');
    std::string_view name = fields.front();
    auto expect_fields = [&](std::size_t count) {
        if (fields.size() != count)
            throw BadParameters("family spec '" + std::string(text) + "' has the wrong number of fields");
    };

    FamilySpec spec;
    if (name == "complete") {
        expect_fields(2);
        spec = Complete{parse_count(fields[1], text)};
    } else if (name == "cycle") {
        expect_fields(2);
        spec = Cycle{parse_count(fields[1], text)};
    } else if (name == "path") {
        expect_fields(2);
        spec = Path{parse_count(fields[1], text)};
    } else if (name == "star") {
        expect_fields(2);
        spec = Star{parse_count(fields[1], text)};
    } else if (name == "kbip") {
        expect_fields(2);
        auto sizes = parse_list(fields[1], text);
        if (sizes.size() != 2)
            throw BadParameters("kbip needs two part sizes, e.g. kbip:2,3");
        spec = CompleteBipartite{sizes[0], sizes[1]};
    } else if (name == "hypercube") {
        expect_fields(2);
        spec = Hypercube{parse_count(fields[1], text)};
    } else if (name == "friendship") {
        expect_fields(2);
        spec = Friendship{parse_count(fields[1], text)};
    } else if (name == "circulant") {
        expect_fields(3);
        auto connections = parse_list(fields[2], text);
        std::sort(connections.begin(), connections.end());
        connections.erase(std::unique(connections.begin(), connections.end()), connections.end());
        spec = Circulant{parse_count(fields[1], text), std::move(connections)};
    } else {
        throw BadParameters("unknown graph family '" + std::string(name) + "'");
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const Complete& f) { return "complete:" + std::to_string(f.n); },
                          [](const Cycle& f) { return "cycle:" + std::to_string(f.n); },
                          [](const Path& f) { return "path:" + std::to_string(f.n); },
                          [](const Star& f) { return "star:" + std::to_string(f.n); },
                          [](const CompleteBipartite& f) {
                              return "kbip:" + std::to_string(f.n1) + "," + std::to_string(f.n2);
                          },
                          [](const Hypercube& f) { return "hypercube:" + std::to_string(f.dim); },
                          [](const Friendship& f) { return "friendship:" + std::to_string(f.k); },
                          [](const Circulant& f) {
                              std::string out = "circulant:" + std::to_string(f.n) + ":";
                              for (std::size_t i = 0; i < f.connections.size(); ++i)
                                  out += (i ? "," : "") + std::to_string(f.connections[i]);
                              return out;
                          },
                      },
                      spec);
}

Graph generate(const FamilySpec& spec)
{
    validate(spec);
    std::vector<Edge> edges;
    std::size_t n = order_of(spec);
    std::visit(overloaded{
                   [&](const Complete& f) {
                       for (Vertex u = 0; u < f.n; ++u)
                           for (Vertex v = u + 1; v < f.n; ++v)
                               edges.emplace_back(u, v);
                   },
                   [&](const Cycle& f) {
                       for (Vertex u = 0; u < f.n; ++u)
                           edges.emplace_back(u, (u + 1) % f.n);
                   },
                   [&](const Path& f) {
                       for (Vertex u = 0; u + 1 < f.n; ++u)
                           edges.emplace_back(u, u + 1);
                   },
                   [&](const Star& f) {
                       for (Vertex v = 1; v < f.n; ++v)
                           edges.emplace_back(0, v);
                   },
                   [&](const CompleteBipartite& f) {
                       for (Vertex u = 0; u < f.n1; ++u)
                           for (Vertex v = 0; v < f.n2; ++v)
                               edges.emplace_back(u, f.n1 + v);
                   },
                   [&](const Hypercube& f) {
                       for (Vertex u = 0; u < n; ++u)
                           for (std::size_t bit = 0; bit < f.dim; ++bit) {
                               Vertex v = u ^ (Vertex{1} << bit);
                               if (u < v)
                                   edges.emplace_back(u, v);
                           }
                   },
                   [&](const Friendship& f) {
                       for (std::size_t t = 0; t < f.k; ++t) {
                           edges.emplace_back(0, 2 * t + 1);
                           edges.emplace_back(0, 2 * t + 2);
                           edges.emplace_back(2 * t + 1, 2 * t + 2);
                       }
                   },
                   [&](const Circulant& f) {
                       for (Vertex u = 0; u < f.n; ++u)
                           for (std::size_t s : f.connections)
                               edges.emplace_back(u, (u + s) % f.n);
                   },
               },
               spec);
    return Graph::from_edges(n, edges);
}

std::vector<double> RoleEnergies::per_vertex(std::size_t n) const
{
    std::vector<double> out(n, 0.0);
    for (const auto& role : roles)
        for (Vertex v : role.vertices)
            out.at(v) = role.energy;
    return out;
}

RoleEnergies closed_form_energies(const FamilySpec& spec)
{
    validate(spec);
    std::size_t n = order_of(spec);
    RoleEnergies out;
    std::visit(
        overloaded{
            [&](const Complete& f) {
                auto nn = static_cast<double>(f.n);
                out.roles.push_back({"vertex", range(0, n), 2.0 * (nn - 1.0) / nn});
            },
            [&](const Cycle& f) { out.roles.push_back({"vertex", range(0, n), cycle_vertex_energy(f.n)}); },
            [&](const Path& f) {
                // Positions i and n+1-i are mirror images and share a role.
                for (std::size_t i = 1; 2 * i <= f.n + 1; ++i) {
                    std::vector<Vertex> members{i - 1};
                    if (f.n - i != i - 1)
                        members.push_back(f.n - i);
                    out.roles.push_back({"position " + std::to_string(i), members, path_vertex_energy(f.n, i)});
                }
            },
            [&](const Star& f) {
                double root = std::sqrt(static_cast<double>(f.n - 1));
                out.roles.push_back({"center", {0}, root});
                if (f.n > 1)
                    out.roles.push_back({"leaf", range(1, n), 1.0 / root});
            },
            [&](const CompleteBipartite& f) {
                auto n1 = static_cast<double>(f.n1);
                auto n2 = static_cast<double>(f.n2);
                out.roles.push_back({"first part", range(0, f.n1), std::sqrt(n2) / std::sqrt(n1)});
                out.roles.push_back({"second part", range(f.n1, n), std::sqrt(n1) / std::sqrt(n2)});
            },
            [&](const Hypercube& f) {
                std::size_t half = (f.dim + 1) / 2;
                double total = 2.0 * static_cast<double>(half) * binomial(f.dim, half);
                out.roles.push_back({"vertex", range(0, n), total / static_cast<double>(n)});
            },
            [&](const Friendship& f) {
                auto k = static_cast<double>(f.k);
                double root = std::sqrt(8.0 * k + 1.0);
                out.roles.push_back({"hub", {0}, 4.0 * k / root});
                out.roles.push_back(
                    {"blade", range(1, n), (1.0 + 4.0 * k + (2.0 * k - 1.0) * root) / (2.0 * k * root)});
            },
            [&](const Circulant&) { out.has_closed_form = false; },
        },
        spec);
    return out;
}

} // namespace vxe::families
