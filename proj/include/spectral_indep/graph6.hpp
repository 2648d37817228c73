#pragma once

// graph6 and JSON edge-list readers/writers.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spectral_indep/errors.hpp"
#include "spectral_indep/graph.hpp"

namespace spectral_indep {

namespace detail {

inline int graph6_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - 63;
}

}  // namespace detail

/// Decodes one graph6 line. Supports the 1-byte header (n <= 62) and the
/// 4-byte long form (n <= 258047). An optional ">>graph6<<" prefix and a
/// trailing newline are accepted.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    std::size_t n = 0;
    if (pos < text.size() && text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw ParseError("graph6: 8-byte header (n > 258047) not supported", pos);
        for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(detail::graph6_byte(text, pos + i));
        if (n <= 62) throw ParseError("graph6: long header used for n <= 62", pos);
        pos += 4;
    } else {
        n = static_cast<std::size_t>(detail::graph6_byte(text, pos));
        pos += 1;
    }
    if (n == 0) throw ParseError("graph6: graph must have at least one vertex", 0);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() < pos + body) throw ParseError("graph6: body too short", text.size());
    if (text.size() > pos + body) throw ParseError("graph6: trailing garbage", pos + body);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            int chunk = detail::graph6_byte(text, pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    if (bits % 6 != 0) {
        int last = detail::graph6_byte(text, pos + body - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + body - 1);
    }
    return Graph(n, edges);
}

inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw ContractError("graph6: cannot encode a graph with no vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw ContractError("graph6: n > 258047 not supported");
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

/// {"n": int, "edges": [[u, v], ...]}
inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("edge-list JSON must be an object with \"n\" and \"edges\"", 0);
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw ParseError("edge-list JSON: \"n\" must be a positive integer", 0);
    std::vector<Edge> edges;
    std::size_t idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
            throw ParseError("edge-list JSON: edge must be a pair of nonnegative integers", idx);
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        ++idx;
    }
    return Graph(j["n"].get<std::size_t>(), edges);
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

/// Reads a stream holding either graph6 lines or JSON edge lists. A stream
/// whose first non-blank character is '{' or '[' is treated as JSON (an object
/// or an array of objects); anything else is one graph6 graph per line.
inline std::vector<Graph> read_graphs(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    std::vector<Graph> out;
    if (first == std::string::npos) return out;
    if (text[first] == '{' || text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("edge-list JSON: ") + e.what(), e.byte);
        }
        if (j.is_array())
            for (const auto& item : j) out.push_back(graph_from_json(item));
        else
            out.push_back(graph_from_json(j));
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace spectral_indep
