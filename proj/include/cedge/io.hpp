/**
 * Graph input (line-oriented text or JSON) and the JSON emitted for graphs,
 * ideals, Betti tables and reports.
 *
 * Text format:   "n m" on the first line, then m lines "u v".
 * JSON format:   {"n": 4, "edges": [[1, 2], [2, 3]]}
 */

#ifndef CEDGE_IO_HPP
#define CEDGE_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "homology.hpp"
#include "ideal.hpp"
#include "invariants.hpp"

namespace cedge {

using nlohmann::json;

class ParseError : public std::runtime_error
{
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const { return line_; }

  private:
    int line_;
};

namespace detail {

inline bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly `count` integers from one line and rejects trailing tokens.
inline std::vector<long long> read_ints(const std::string& text, int count, int line_no, const char* what)
{
    std::istringstream in(text);
    std::vector<long long> out(count);
    for (auto& v : out)
        if (!(in >> v))
            throw ParseError(line_no, std::string("malformed ") + what + ": expected " + std::to_string(count) +
                                          " integers");
    std::string extra;
    if (in >> extra)
        throw ParseError(line_no, std::string("malformed ") + what + ": unexpected token '" + extra + "'");
    return out;
}

inline SimpleGraph build_checked(int n, std::vector<Edge> edges, const std::vector<int>& lines)
{
    for (std::size_t k = 0; k < edges.size(); ++k)
    {
        const auto& e = edges[k];
        if (e.u == e.v)
            throw ParseError(lines[k], "self-loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw ParseError(lines[k], "vertex label out of range 1.." + std::to_string(n));
    }
    std::vector<std::pair<Edge, int>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k)
        seen.push_back({{std::min(edges[k].u, edges[k].v), std::max(edges[k].u, edges[k].v)}, lines[k]});
    std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    for (std::size_t k = 1; k < seen.size(); ++k)
        if (seen[k].first == seen[k - 1].first)
            throw ParseError(seen[k].second, "duplicate edge {" + std::to_string(seen[k].first.u) + "," +
                                                 std::to_string(seen[k].first.v) + "}");
    return {n, std::move(edges)};
}

inline SimpleGraph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!blank(line))
            break;
    }
    if (blank(line))
        throw ParseError(line_no, "malformed header: empty input");
    auto header = read_ints(line, 2, line_no, "header");
    if (header[0] < 1 || header[0] > (1 << 20))
        throw ParseError(line_no, "malformed header: vertex count must be positive");
    if (header[1] < 0)
        throw ParseError(line_no, "malformed header: edge count must be non-negative");
    const int n = static_cast<int>(header[0]);

    std::vector<Edge> edges;
    std::vector<int> lines;
    while (std::getline(in, line))
    {
        ++line_no;
        if (blank(line))
            continue;
        if (static_cast<long long>(edges.size()) == header[1])
            throw ParseError(line_no, "more edge lines than the header's m=" + std::to_string(header[1]));
        auto uv = read_ints(line, 2, line_no, "edge");
        if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
            throw ParseError(line_no, "vertex label out of range 1.." + std::to_string(n));
        edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
        lines.push_back(line_no);
    }
    if (static_cast<long long>(edges.size()) != header[1])
        throw ParseError(line_no, "header announces m=" + std::to_string(header[1]) + " edges, found " +
                                      std::to_string(edges.size()));
    return build_checked(n, std::move(edges), lines);
}

inline SimpleGraph parse_graph_json(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError(1, std::string("malformed JSON at byte ") + std::to_string(e.byte));
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
        !doc["edges"].is_array())
        throw ParseError(1, "malformed header: expected {\"n\": int, \"edges\": [[u, v], ...]}");
    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > (1 << 20))
        throw ParseError(1, "malformed header: vertex count must be positive");

    std::vector<Edge> edges;
    std::vector<int> positions;
    for (std::size_t k = 0; k < doc["edges"].size(); ++k)
    {
        const auto& e = doc["edges"][k];
        const int pos = static_cast<int>(k) + 1;
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(pos, "edge entry " + std::to_string(pos) + " is not a pair of integers");
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(pos, "vertex label out of range 1.." + std::to_string(n));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        positions.push_back(pos);
    }
    return build_checked(static_cast<int>(n), std::move(edges), positions);
}

}   // namespace detail

/**
 * Parses either graph format; input whose first non-blank character is '{'
 * is read as JSON. For JSON input the "line" of a ParseError is the 1-based
 * position of the offending edge entry.
 */
inline SimpleGraph parse_graph(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return detail::parse_graph_json(text);
    return detail::parse_graph_text(text);
}

inline SimpleGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline json to_json(const SimpleGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", edges}};
}

inline json to_json(const SquarefreeIdeal& ideal)
{
    json gens = json::array();
    for (auto s : ideal.generators())
        gens.push_back(indices(s));
    return {{"n", ideal.ambient()}, {"generators", gens}};
}

inline json to_json(const BettiTable& t)
{
    json rows = json::array();
    for (const auto& [key, value] : t.entries)
        if (value)
            rows.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return {{"n", t.n}, {"field", field_name(t.field)}, {"betti", rows}};
}

inline json to_json(const InvariantReport& r)
{
    return {{"n", r.n},
            {"graph_class", to_string(r.graph_class)},
            {"height", r.height},
            {"cohen_macaulay", r.cohen_macaulay},
            {"pd_I", range_json(r.pd_ideal)},
            {"reg_I", range_json(r.reg_ideal)},
            {"indeg", r.indeg},
            {"licci", r.licci.licci},
            {"licci_reason", to_string(r.licci.reason)},
            {"notes", r.notes},
            {"provenance", r.provenance}};
}

inline json to_json(const OracleInvariants& o)
{
    return {{"field", field_name(o.field)},
            {"height", o.height},
            {"cohen_macaulay", o.cohen_macaulay},
            {"pd_I", o.reg_pd.pd_ideal},
            {"reg_I", o.reg_pd.reg_ideal},
            {"pd_quotient", o.reg_pd.pd_quotient},
            {"reg_quotient", o.reg_pd.reg_quotient},
            {"betti", to_json(o.betti)["betti"]}};
}

inline json to_json(const DiscrepancyReport& d)
{
    json mismatches = json::array();
    for (const auto& m : d.mismatches)
        mismatches.push_back({{"invariant", m.invariant}, {"predicted", m.predicted}, {"oracle", m.oracle}});
    return {{"graph", to_json(d.graph)}, {"field", field_name(d.field)}, {"mismatches", mismatches}};
}

inline std::string to_string(QuotientsOutcome o)
{
    switch (o)
    {
        case QuotientsOutcome::yes: return "yes";
        case QuotientsOutcome::no: return "no";
        case QuotientsOutcome::inconclusive: return "inconclusive";
    }
    return "";
}

inline json to_json(const ImplicationSuite& s)
{
    json ordering = json::array();
    for (auto g : s.dual_linear_quotients.ordering)
        ordering.push_back(indices(g));
    return {{"licci", s.licci.licci},
            {"sequentially_cm", s.sequentially_cm},
            {"dual_componentwise_linear", s.dual_componentwise_linear},
            {"dual_linear_quotients", to_string(s.dual_linear_quotients.outcome)},
            {"dual_linear_quotients_order", ordering},
            {"dual_linear_resolution", s.dual_linear_resolution},
            {"linear_resolution", s.linear_resolution},
            {"failed_claims", s.failed_claims},
            {"notes", s.notes}};
}

}   // namespace cedge

#endif
