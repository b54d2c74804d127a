#include "vxe/errors.hpp"
#include "vxe/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vxe {

namespace {

// Guards against a single stray id allocating an enormous adjacency table.
constexpr std::size_t kMaxVertexId = std::size_t{1} << 24;

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::size_t parse_id(std::string_view token, std::size_t line_no)
{
    if (!token.empty() && token.front() == '-')
        throw ParseError(line_no, "negative vertex id '" + std::string(token) + "'");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
    if (value > kMaxVertexId)
        throw ParseError(line_no, "vertex id " + std::string(token) + " is too large");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    if (text.starts_with("\xEF\xBB\xBF"))
        text.remove_prefix(3);

    std::optional<std::size_t> declared_n;
    std::vector<Edge> edges;
    std::size_t max_id = 0;
    bool any_edge = false;
    bool seen_data = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().starts_with('#'))
            continue;

        if (tokens.front() == "n") {
            if (seen_data)
                throw ParseError(line_no, "header 'n <count>' must precede all edges");
            if (tokens.size() != 2)
                throw ParseError(line_no, "header must be 'n <count>'");
            declared_n = parse_id(tokens[1], line_no);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two vertex ids, found " +
                                          std::to_string(tokens.size()) + " tokens");
        std::size_t u = parse_id(tokens[0], line_no);
        std::size_t v = parse_id(tokens[1], line_no);
        if (u == v)
            throw SelfLoopError(line_no, u);
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(*declared_n));
        max_id = std::max({max_id, u, v});
        any_edge = true;
        edges.emplace_back(u, v);
    }

    std::size_t n = declared_n ? *declared_n : (any_edge ? max_id + 1 : 0);
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace vxe
