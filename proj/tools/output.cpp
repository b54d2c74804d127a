#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace vxe::cli {

namespace {

using Cells = std::vector<std::pair<std::string, Json>>;

void flatten(const Json& value, const std::string& prefix, Cells& out)
{
    if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        return;
    }
    if (value.is_array()) {
        // Lists of scalars, e.g. vertex sets, collapse to one cell.
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty())
                joined += ' ';
            joined += item.is_string() ? item.get<std::string>() : item.dump();
        }
        out.emplace_back(prefix, joined);
        return;
    }
    out.emplace_back(prefix, value);
}

std::string text(const Json& cell, bool csv)
{
    if (cell.is_null())
        return csv ? "" : "-";
    if (cell.is_boolean())
        return cell.get<bool>() ? "true" : "false";
    if (cell.is_number_float())
        return format_number(cell.get<double>());
    if (cell.is_number())
        return cell.dump();
    std::string s = cell.get<std::string>();
    if (csv && s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"')
                quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return s;
}

struct Grid {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Grid grid(const std::vector<Json>& records, bool csv)
{
    std::vector<Cells> flat;
    Grid g;
    for (const auto& r : records) {
        flat.emplace_back();
        flatten(r, "", flat.back());
        for (const auto& [key, _] : flat.back())
            if (std::find(g.columns.begin(), g.columns.end(), key) == g.columns.end())
                g.columns.push_back(key);
    }
    for (const auto& cells : flat) {
        std::vector<std::string> row(g.columns.size(), csv ? "" : "-");
        for (const auto& [key, value] : cells) {
            auto at = std::find(g.columns.begin(), g.columns.end(), key) - g.columns.begin();
            row[static_cast<std::size_t>(at)] = text(value, csv);
        }
        g.rows.push_back(std::move(row));
    }
    return g;
}

void write_csv_row(const std::vector<std::string>& row, std::ostream& out)
{
    for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
    out << '\n';
}

void write_csv_grid(const Grid& g, std::ostream& out)
{
    write_csv_row(g.columns, out);
    for (const auto& row : g.rows)
        write_csv_row(row, out);
}

void write_aligned(const Grid& g, std::ostream& out)
{
    std::vector<std::size_t> width(g.columns.size());
    for (std::size_t c = 0; c < g.columns.size(); ++c) {
        width[c] = g.columns[c].size();
        for (const auto& row : g.rows)
            width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size(); ++c) {
            s += row[c];
            if (c + 1 < row.size())
                s += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(g.columns);
    for (const auto& row : g.rows)
        line(row);
}

// Scalars of the global object, extra tables excluded.
Cells global_cells(const Report& report)
{
    Cells cells;
    for (auto it = report.global.begin(); it != report.global.end(); ++it) {
        bool is_table = std::any_of(report.tables.begin(), report.tables.end(),
                                    [&](const auto& t) { return t.first == it.key(); });
        if (!is_table)
            flatten(it.value(), it.key(), cells);
    }
    return cells;
}

} // namespace

Json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Json number(std::optional<double> x) { return x ? number(*x) : Json(nullptr); }

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s = buf;
    if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos)
        s += ".0";
    return s;
}

void render(const Report& report, Format format, std::ostream& out)
{
    if (format == Format::json) {
        Json doc = Json::object();
        doc["graph"] = report.graph;
        doc["vertices"] = Json::array();
        for (const auto& v : report.vertices)
            doc["vertices"].push_back(v);
        doc["global"] = report.global;
        for (const auto& [name, rows] : report.tables) {
            doc["global"][name] = Json::array();
            for (const auto& r : rows)
                doc["global"][name].push_back(r);
        }
        out << doc.dump(2) << '\n';
        return;
    }

    bool csv = format == Format::csv;
    Grid vertices = grid(report.vertices, csv);
    Cells globals = global_cells(report);

    if (csv) {
        // Summary rows keep the column count: label first, value last.
        std::size_t width = std::max<std::size_t>(2, vertices.columns.size());
        if (!vertices.columns.empty())
            write_csv_grid(vertices, out);
        for (const auto& [key, value] : globals) {
            std::vector<std::string> row(width);
            row.front() = key == "energy" ? "total" : key;
            row.back() = text(value, true);
            write_csv_row(row, out);
        }
        for (const auto& [name, rows] : report.tables) {
            out << '\n';
            write_csv_grid(grid(rows, true), out);
        }
        return;
    }

    if (!report.graph.is_null())
        out << "graph: n=" << report.graph["n"].dump() << " m=" << report.graph["m"].dump() << "\n\n";
    if (!vertices.columns.empty()) {
        write_aligned(vertices, out);
        out << '\n';
    }
    std::size_t key_width = 0;
    for (const auto& [key, _] : globals)
        key_width = std::max(key_width, key.size());
    for (const auto& [key, value] : globals)
        out << key << ':' << std::string(key_width - key.size() + 1, ' ') << text(value, false) << '\n';
    for (const auto& [name, rows] : report.tables) {
        out << '\n' << name << '\n';
        write_aligned(grid(rows, false), out);
    }
}

} // namespace vxe::cli
