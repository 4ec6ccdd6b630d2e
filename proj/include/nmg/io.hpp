#pragma once

#include <nmg/graph.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace nmg {

namespace detail {

struct Token {
    std::string_view text;
    int column;
};

inline auto split_tokens(std::string_view line) -> std::vector<Token>
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

inline auto parse_int(const Token & token, int line, const char * what) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc{} || ptr != token.text.data() + token.text.size())
        throw ParseError(line, token.column, "expected integer " + std::string(what) + ", found '" + std::string(token.text) + "'");
    return value;
}

inline auto is_blank(std::string_view line) -> bool
{
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline auto is_comment(std::string_view line) -> bool
{
    auto first = line.find_first_not_of(" \t");
    return first != std::string_view::npos && line[first] == '#';
}

} // namespace detail

/// Reads the .nmg text format: a header `nmg <n> <m> <order> <pair-count>` followed by one
/// `<u> <v> <label>` line per adjacent pair. Arcs are written tail first, so reverse-arc labels
/// are rejected. Lines starting with `#` after the header are comments; blank lines are ignored.
inline auto parse_nmg(std::string_view text) -> NMGraph
{
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }

    if (lines.empty() || detail::is_blank(lines[0]))
        throw ParseError(1, 1, "missing header 'nmg <n> <m> <order> <pair-count>'");

    auto header = detail::split_tokens(lines[0]);
    if (header[0].text != "nmg")
        throw ParseError(1, header[0].column, "expected 'nmg', found '" + std::string(header[0].text) + "'");
    if (header.size() != 5)
        throw ParseError(1, header.size() > 5 ? header[5].column : static_cast<int>(lines[0].size()) + 1,
            "header needs exactly four integers: n m order pair-count");

    int n = detail::parse_int(header[1], 1, "n");
    int m = detail::parse_int(header[2], 1, "m");
    int order = detail::parse_int(header[3], 1, "order");
    int pairs = detail::parse_int(header[4], 1, "pair-count");
    if (n < 0 || m < 0 || n + m < 1)
        throw ParseError(1, header[1].column, "invalid parameters: need n, m >= 0 and n + m >= 1");
    if (order < 0 || order > kMaxOrder)
        throw ParseError(1, header[3].column, "order " + std::to_string(order) + " outside [0," + std::to_string(kMaxOrder) + "]");
    if (pairs < 0)
        throw ParseError(1, header[4].column, "negative pair-count");

    Params params{n, m};
    NMGraph g{params, order};
    int seen = 0;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        int line_no = static_cast<int>(idx) + 1;
        auto line = lines[idx];
        if (detail::is_blank(line) || detail::is_comment(line))
            continue;
        auto tokens = detail::split_tokens(line);
        if (tokens.size() != 3)
            throw ParseError(line_no, tokens.size() > 3 ? tokens[3].column : static_cast<int>(line.size()) + 1, "expected '<u> <v> <label>'");
        if (seen == pairs)
            throw ParseError(line_no, tokens[0].column, "more adjacency lines than the declared pair-count " + std::to_string(pairs));

        int u = detail::parse_int(tokens[0], line_no, "vertex");
        int v = detail::parse_int(tokens[1], line_no, "vertex");
        int label = detail::parse_int(tokens[2], line_no, "label");
        if (u < 0 || u >= order)
            throw ParseError(line_no, tokens[0].column, "vertex " + std::to_string(u) + " outside [0," + std::to_string(order) + ")", ErrorKind::VertexRange);
        if (v < 0 || v >= order)
            throw ParseError(line_no, tokens[1].column, "vertex " + std::to_string(v) + " outside [0," + std::to_string(order) + ")", ErrorKind::VertexRange);
        if (u == v)
            throw ParseError(line_no, tokens[0].column, "loop at vertex " + std::to_string(u), ErrorKind::Loop);
        if (! label_in_range(label, params))
            throw ParseError(line_no, tokens[2].column, "label " + std::to_string(label) + " outside {1,...," + std::to_string(params.p()) + "}", ErrorKind::LabelRange);
        if (is_reverse_arc(label, params))
            throw ParseError(line_no, tokens[2].column,
                "reverse-arc label " + std::to_string(label) + "; write the arc as '" + std::to_string(v) + " " + std::to_string(u) + " " + std::to_string(label + 1) + "'",
                ErrorKind::LabelRange);
        if (g.adjacent(u, v))
            throw ParseError(line_no, tokens[0].column, "duplicate adjacency between " + std::to_string(u) + " and " + std::to_string(v), ErrorKind::DuplicateAdjacency);
        g.add_adjacency(u, v, label);
        ++seen;
    }
    if (seen != pairs)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1, "expected " + std::to_string(pairs) + " adjacency lines, found " + std::to_string(seen));
    return g;
}

/// Canonical text: pairs sorted by (min endpoint, max endpoint), arcs tail first, no comments.
inline auto write_nmg(const NMGraph & g) -> std::string
{
    auto adjacencies = g.adjacencies();
    std::string out = "nmg " + std::to_string(g.params().n) + " " + std::to_string(g.params().m) + " " + std::to_string(g.order()) + " "
        + std::to_string(adjacencies.size()) + "\n";
    for (const auto & [u, v, l] : adjacencies)
        out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(l) + "\n";
    return out;
}

inline auto read_nmg_file(const std::string & path) -> NMGraph
{
    std::ifstream in{path, std::ios::binary};
    if (! in)
        throw Error(ErrorKind::Domain, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_nmg(buffer.str());
}

inline void write_nmg_file(const std::string & path, const NMGraph & g)
{
    std::ofstream out{path, std::ios::binary};
    if (! out)
        throw Error(ErrorKind::Domain, "cannot write " + path);
    out << write_nmg(g);
}

} // namespace nmg
