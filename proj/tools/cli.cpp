#include "cli.hpp"

#include "output.hpp"

#include "vxe/bounds.hpp"
#include "vxe/classify.hpp"
#include "vxe/errors.hpp"
#include "vxe/families.hpp"
#include "vxe/graph.hpp"
#include "vxe/limits.hpp"
#include "vxe/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <new>
#include <ostream>

namespace vxe::cli {

namespace {

// Bad command-line values that only show up after CLI11 has parsed them.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string input;
    std::string format = "table";
    std::optional<std::size_t> vertex;
    unsigned k = 0;
    std::string spec;
    std::string emit_graph;
    std::string model;
    std::vector<std::size_t> truncate;
    std::vector<std::size_t> independent_set;
    bool has_independent_set = false;
};

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    return Format::table;
}

DecomposeOptions decompose_options()
{
    DecomposeOptions options;
    if (const char* cap = std::getenv("VXE_EIG_CAP")) {
        std::string_view text(cap);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
            throw UsageError("VXE_EIG_CAP must be a positive integer, got '" + std::string(text) + "'");
        options.size_cap = value;
    }
    return options;
}

Json graph_json(const Graph& g) { return Json{{"n", g.order()}, {"m", g.size()}}; }

Json global_bounds_json(const Graph& g)
{
    Json b = Json::object();
    auto gb = global_bounds(g);
    b["sum_sqrt_degrees"] = number(gb.sum_sqrt_degrees);
    b["mcclelland"] = number(gb.mcclelland);
    if (!bipartition(g)) {
        b["bipartite"] = nullptr;
        return b;
    }
    auto bb = bipartite_global_bounds(g);
    Json parts = Json::object();
    const char* names[2] = {"small_part", "large_part"};
    for (std::size_t x = 0; x < 2; ++x) {
        Json p = Json::object();
        p["size"] = bb.parts[x].vertices.size();
        p["lower"] = number(bb.parts[x].lower);
        p["upper"] = number(bb.parts[x].upper);
        p["size_lower"] = bb.size_bounds_applicable ? number(bb.size_lower[x]) : Json(nullptr);
        parts[names[x]] = p;
    }
    parts["size_upper"] = bb.size_bounds_applicable ? number(bb.size_upper) : Json(nullptr);
    b["bipartite"] = parts;
    return b;
}

Json vertex_row(const Graph& g, Vertex v, double energy)
{
    return Json{{"vertex", v}, {"degree", degree(g, v)}, {"energy", number(energy)}};
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " is not in a graph of order " +
                         std::to_string(g.order()));
}

Report energy_report(const Settings& s)
{
    Graph g = read_edge_list_file(s.input);
    auto e = all_vertex_energies(g, decompose_options());
    Report r;
    r.graph = graph_json(g);
    for (Vertex v = 0; v < g.order(); ++v)
        r.vertices.push_back(vertex_row(g, v, e.per_vertex[v]));
    r.global["energy"] = number(e.total);
    r.global["bounds"] = global_bounds_json(g);
    return r;
}

Json bound_values(const std::vector<BoundValue>& values)
{
    Json out = Json::object();
    for (const auto& b : values)
        out[b.name] = b.applicable ? number(b.value) : Json(nullptr);
    return out;
}

Report bounds_report(const Settings& s)
{
    Graph g = read_edge_list_file(s.input);
    auto decomposition = decompose(g, decompose_options());
    std::vector<Vertex> targets;
    if (s.vertex) {
        check_vertex(g, *s.vertex);
        targets.push_back(*s.vertex);
    } else {
        for (Vertex v = 0; v < g.order(); ++v)
            targets.push_back(v);
    }
    Report r;
    r.graph = graph_json(g);
    for (Vertex v : targets) {
        BoundReport b = bound_report(g, decomposition, v);
        Json row = vertex_row(g, v, b.energy);
        row["eccentricity"] = b.eccentricity ? Json(*b.eccentricity) : Json(nullptr);
        row["alpha"] = number(b.alpha);
        row["top_weight"] = number(b.top_weight);
        row["top_weight_lower_bound"] = number(b.top_weight_lower_bound);
        row["lower"] = bound_values(b.lower_bounds);
        row["upper"] = bound_values(b.upper_bounds);
        row["sandwich_holds"] = b.sandwich_holds();
        r.vertices.push_back(std::move(row));
    }
    r.global["energy"] = number(graph_energy(decomposition));
    r.global["bounds"] = global_bounds_json(g);
    return r;
}

Report classify_report(const Settings& s)
{
    Graph g = read_edge_list_file(s.input);
    auto decomposition = decompose(g, decompose_options());
    std::optional<std::span<const Vertex>> set;
    if (s.has_independent_set)
        set = std::span<const Vertex>(s.independent_set);

    GraphClass cls = classify_graph(g, decomposition, set);
    Report r;
    r.graph = graph_json(g);
    for (const auto& vc : cls.vertices) {
        Json row = vertex_row(g, vc.vertex, vc.energy);
        row["hyperenergetic"] = vc.hyperenergetic;
        row["hypoenergetic"] = vc.hypoenergetic;
        row["borderline"] = vc.borderline;
        r.vertices.push_back(std::move(row));
    }
    r.global["energy"] = number(graph_energy(decomposition));
    r.global["bounds"] = global_bounds_json(g);
    r.global["completely_hyperenergetic"] = cls.completely_hyperenergetic;
    r.global["completely_non_hyperenergetic"] = cls.completely_non_hyperenergetic;
    r.global["completely_hypoenergetic"] = cls.completely_hypoenergetic;
    r.global["completely_non_hypoenergetic"] = cls.completely_non_hypoenergetic;

    auto energies = all_vertex_energies(decomposition);
    std::vector<Json> rows;
    for (const auto& c : criteria_check(g, set)) {
        Json row = Json::object();
        row["criterion"] = c.name;
        row["parameters"] = c.parameters;
        row["holds"] = c.holds;
        row["conclusion"] = to_string(c.conclusion);
        row["vertices"] = c.vertices;
        row["confirmed"] = c.holds ? Json(conclusion_satisfied(c, energies)) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    r.tables.emplace_back("criteria", std::move(rows));
    return r;
}

Report moments_report(const Settings& s)
{
    Graph g = read_edge_list_file(s.input);
    Vertex v = *s.vertex;
    check_vertex(g, v);
    auto decomposition = decompose(g, decompose_options());
    auto walks = closed_walk_counts(g, v, s.k);

    Report r;
    r.graph = graph_json(g);
    r.vertices.push_back(vertex_row(g, v, vertex_energy(decomposition, v)));
    r.global["energy"] = number(graph_energy(decomposition));
    r.global["bounds"] = global_bounds_json(g);
    std::vector<Json> rows;
    for (unsigned k = 0; k <= s.k; ++k) {
        double moment = spectral_moment(decomposition, v, k);
        Json row = Json::object();
        row["k"] = k;
        row["closed_walks"] = walks[k];
        row["spectral_moment"] = number(moment);
        row["difference"] = number(moment - static_cast<double>(walks[k]));
        rows.push_back(std::move(row));
    }
    r.tables.emplace_back("moments", std::move(rows));
    return r;
}

families::FamilySpec parse_family_arg(const std::string& text)
{
    try {
        return families::parse_family(text);
    } catch (const BadParameters& e) {
        throw UsageError(e.what());
    }
}

limits::LimitModel parse_model_arg(const std::string& text)
{
    try {
        return limits::parse_model(text);
    } catch (const BadParameters& e) {
        throw UsageError(e.what());
    }
}

Report family_report(const Settings& s)
{
    auto spec = parse_family_arg(s.spec);
    Graph g = families::generate(spec);
    if (!s.emit_graph.empty()) {
        std::ofstream file(s.emit_graph, std::ios::binary);
        file << format_edge_list(g);
        if (!file)
            throw InputError("cannot write '" + s.emit_graph + "'");
    }
    auto energies = all_vertex_energies(g, decompose_options());
    auto closed = families::closed_form_energies(spec);

    std::vector<std::string> role_of(g.order());
    for (const auto& role : closed.roles)
        for (Vertex v : role.vertices)
            role_of[v] = role.name;
    std::vector<double> expected;
    if (closed.has_closed_form)
        expected = closed.per_vertex(g.order());

    Report r;
    r.graph = graph_json(g);
    double max_deviation = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        Json row = Json::object();
        row["vertex"] = v;
        row["degree"] = degree(g, v);
        row["role"] = closed.has_closed_form ? Json(role_of[v]) : Json(nullptr);
        row["closed_form"] = closed.has_closed_form ? number(expected[v]) : Json(nullptr);
        row["energy"] = number(energies.per_vertex[v]);
        if (closed.has_closed_form) {
            double deviation = std::abs(energies.per_vertex[v] - expected[v]);
            max_deviation = std::max(max_deviation, deviation);
            row["deviation"] = number(deviation);
        } else {
            row["deviation"] = nullptr;
        }
        r.vertices.push_back(std::move(row));
    }
    r.global["family"] = families::to_string(spec);
    r.global["energy"] = number(energies.total);
    r.global["bounds"] = global_bounds_json(g);
    r.global["closed_form_available"] = closed.has_closed_form;
    r.global["max_deviation"] = closed.has_closed_form ? number(max_deviation) : Json(nullptr);

    std::vector<Json> rows;
    for (const auto& role : closed.roles) {
        Json row = Json::object();
        row["role"] = role.name;
        row["count"] = role.vertices.size();
        row["closed_form"] = number(role.energy);
        rows.push_back(std::move(row));
    }
    r.tables.emplace_back("roles", std::move(rows));
    return r;
}

Report limit_report(const Settings& s)
{
    auto model = parse_model_arg(s.model);
    if (!std::is_sorted(s.truncate.begin(), s.truncate.end()))
        throw UsageError("--truncate sizes must be ascending");
    auto options = decompose_options();

    Report r;
    r.graph = nullptr;
    double closed = limits::limit_energy(model);
    r.global["model"] = limits::to_string(model);
    r.global["closed_form"] = number(closed);
    try {
        double quad = limits::density_quadrature(model);
        r.global["quadrature"] = number(quad);
        r.global["quadrature_difference"] = number(quad - closed);
        r.global["density_mass"] = number(limits::density_mass(model));
    } catch (const UnsupportedModel&) {
        r.global["quadrature"] = nullptr;
        r.global["quadrature_difference"] = nullptr;
        r.global["density_mass"] = nullptr;
    }

    std::vector<Json> rows;
    for (const auto& p : limits::truncation_series(model, s.truncate, options)) {
        Json row = Json::object();
        row["size"] = p.size;
        row["energy"] = number(p.energy);
        row["difference"] = number(p.energy - closed);
        rows.push_back(std::move(row));
    }
    r.tables.emplace_back("truncation", std::move(rows));
    return r;
}

Report split_report(const Settings& s)
{
    Graph g = read_edge_list_file(s.input);
    auto parts = bipartition(g);
    if (!parts)
        throw NotBipartite();
    auto decomposition = decompose(g, decompose_options());
    auto energies = all_vertex_energies(decomposition);
    auto split = bipartite_energy_split(g, decomposition);

    std::vector<std::string> side(g.order(), "first");
    for (Vertex v : parts->second)
        side[v] = "second";
    Report r;
    r.graph = graph_json(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        Json row = vertex_row(g, v, energies.per_vertex[v]);
        row["part"] = side[v];
        r.vertices.push_back(std::move(row));
    }
    r.global["energy"] = number(energies.total);
    r.global["first"] = number(split.first);
    r.global["second"] = number(split.second);
    r.global["difference"] = number(split.first - split.second);
    r.global["bounds"] = global_bounds_json(g);
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Vertex energies of finite simple graphs"};
    app.name("vxe");
    app.require_subcommand(1);

    Settings s;
    const std::vector<std::string> formats{"table", "json", "csv"};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember(formats));
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", s.input, "Edge-list file")->required();
        add_format(sub);
    };

    auto* energy = app.add_subcommand("energy", "Per-vertex energies and total");
    add_input(energy);

    auto* bounds = app.add_subcommand("bounds", "Vertex energy bounds");
    add_input(bounds);
    bounds->add_option("--vertex", s.vertex, "Only this vertex");

    auto* classify = app.add_subcommand("classify", "Hyper/hypoenergetic classification and criteria");
    add_input(classify);
    classify->add_option("--independent-set", s.independent_set, "Comma-separated independent set")
        ->delimiter(',');

    auto* moments = app.add_subcommand("moments", "Closed walks against spectral moments");
    add_input(moments);
    moments->add_option("--vertex", s.vertex, "Vertex")->required();
    moments->add_option("--k", s.k, "Largest walk length")->required();

    auto* family = app.add_subcommand("family", "Closed-form family energies against the eigensolver");
    family->add_option("--spec", s.spec, "Family, e.g. complete:4, kbip:2,3, circulant:17:1,4")->required();
    family->add_option("--emit-graph", s.emit_graph, "Write the generated graph as an edge list");
    add_format(family);

    auto* limit = app.add_subcommand("limit", "Limit energies of infinite graph models");
    limit->add_option("--model", s.model, "line, semiline:<i> or tree:<d>")->required();
    limit->add_option("--truncate", s.truncate, "Comma-separated truncation sizes")->delimiter(',');
    add_format(limit);

    auto* split = app.add_subcommand("split", "Energy sums over the two bipartition parts");
    add_input(split);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    s.has_independent_set = classify->count("--independent-set") > 0;

    try {
        Report report;
        if (energy->parsed())
            report = energy_report(s);
        else if (bounds->parsed())
            report = bounds_report(s);
        else if (classify->parsed())
            report = classify_report(s);
        else if (moments->parsed())
            report = moments_report(s);
        else if (family->parsed())
            report = family_report(s);
        else if (limit->parsed())
            report = limit_report(s);
        else
            report = split_report(s);
        render(report, parse_format(s.format), out);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const ComputationError& e) {
        err << "computation error: " << e.what() << '\n';
        return kComputation;
    } catch (const std::bad_alloc&) {
        err << "computation error: out of memory\n";
        return kComputation;
    }
}

} // namespace vxe::cli
