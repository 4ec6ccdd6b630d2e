#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#ifndef NMG_MAX_ORDER
#define NMG_MAX_ORDER 256
#endif

namespace nmg {

/// Largest vertex count a graph may have. Adjacency rows are fixed-width bitsets of this size.
inline constexpr int kMaxOrder = NMG_MAX_ORDER;

using Vertex = int;

enum class ErrorKind {
    Domain,
    Loop,
    DuplicateAdjacency,
    LabelRange,
    VertexRange,
    ExcludedParams,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) : std::runtime_error(what), _kind(kind) {}

    auto kind() const -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

/// Raised by the .nmg reader; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string & message, ErrorKind detail = ErrorKind::Parse) :
        Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        _line(line),
        _column(column),
        _detail(detail)
    {
    }

    auto line() const -> int { return _line; }
    auto column() const -> int { return _column; }

    /// Parse for syntax errors; the semantic kind (LabelRange, Loop, ...) otherwise.
    auto detail() const -> ErrorKind { return _detail; }

private:
    int _line, _column;
    ErrorKind _detail;
};

/// Number of arc types and edge types of a mixed graph.
struct Params {
    int n = 0;
    int m = 0;

    Params() = default;
    Params(int arcs, int edges) : n(arcs), m(edges)
    {
        if (n < 0 || m < 0 || n + m < 1)
            throw Error(ErrorKind::Domain, "invalid parameters (" + std::to_string(n) + "," + std::to_string(m) + "): need n, m >= 0 and n + m >= 1");
    }

    /// Number of adjacency types, 2n + m.
    auto p() const -> int { return 2 * n + m; }

    /// (0,1) is the ordinary undirected case, where the planar bound does not apply.
    auto excluded() const -> bool { return n == 0 && m == 1; }

    auto operator<=>(const Params &) const = default;
};

/// An adjacency type in {1, ..., 2n+m}. Even values up to 2n are arcs, the odd value just below is
/// the matching reverse arc, values above 2n are edges.
class AdjLabel {
public:
    constexpr AdjLabel() = default;
    constexpr explicit AdjLabel(int value) : _value(value) {}

    constexpr auto value() const -> int { return _value; }

    constexpr auto operator<=>(const AdjLabel &) const = default;

private:
    int _value = 0;
};

inline auto label_in_range(int label, const Params & params) -> bool
{
    return label >= 1 && label <= params.p();
}

inline auto is_arc(int label, const Params & params) -> bool
{
    return label_in_range(label, params) && label <= 2 * params.n && label % 2 == 0;
}

inline auto is_reverse_arc(int label, const Params & params) -> bool
{
    return label_in_range(label, params) && label <= 2 * params.n && label % 2 == 1;
}

inline auto is_edge(int label, const Params & params) -> bool
{
    return label_in_range(label, params) && label > 2 * params.n;
}

inline auto reverse_type(int label, const Params & params) -> int
{
    if (! label_in_range(label, params))
        throw Error(ErrorKind::LabelRange, "label " + std::to_string(label) + " outside {1,...," + std::to_string(params.p()) + "}");
    if (label > 2 * params.n)
        return label;
    return label % 2 == 0 ? label - 1 : label + 1;
}

inline auto reverse_type(AdjLabel label, const Params & params) -> AdjLabel
{
    return AdjLabel{reverse_type(label.value(), params)};
}

/// Maximum order of a planar (n,m)-complete graph: 3p^2 + p + 1 with p = 2n + m.
inline auto order_bound(const Params & params) -> long long
{
    if (params.excluded())
        throw Error(ErrorKind::ExcludedParams, "the planar order bound does not hold for (n,m) = (0,1)");
    const long long p = params.p();
    return 3 * p * p + p + 1;
}

} // namespace nmg
