#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vxe::cli {

using Json = nlohmann::ordered_json;

enum class Format { table, json, csv };

// What every subcommand produces. The JSON rendering is
//   {"graph": {n, m} | null, "vertices": [...], "global": {...}}
// with each extra table stored under global[name].
struct Report {
    Json graph;                   // null when there is no input graph
    std::vector<Json> vertices;   // one flat-ish object per row
    Json global = Json::object(); // scalars and small nested objects
    std::vector<std::pair<std::string, std::vector<Json>>> tables;
};

// Doubles are rounded to 12 significant digits before they are stored, so
// all three formats show the same value. Non-finite values become null.
Json number(double x);
Json number(std::optional<double> x);

// %.12g, with ".0" appended when the result reads as an integer.
std::string format_number(double x);

void render(const Report& report, Format format, std::ostream& out);

} // namespace vxe::cli
