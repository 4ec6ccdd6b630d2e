#pragma once

#include <nmg/core.hpp>

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nmg {

using Row = std::bitset<kMaxOrder>;

/// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<Vertex>;

inline auto to_vertex_set(const Row & row, int order) -> VertexSet
{
    VertexSet result;
    for (int v = 0; v < order; ++v)
        if (row.test(v))
            result.push_back(v);
    return result;
}

/// One adjacent pair as it appears in a canonical listing: the arc tail (or smaller endpoint of an
/// edge) first.
struct Adjacency {
    Vertex u;
    Vertex v;
    int label;

    auto operator<=>(const Adjacency &) const = default;
};

/// An unchecked ordered-pair label map. This is what a hand-built or partially read graph looks
/// like before it has been validated; NMGraph can only be built from a map that passes validate().
struct AdjacencyMap {
    Params params;
    int order = 0;
    std::map<std::pair<Vertex, Vertex>, int> labels;
};

enum class ViolationKind {
    VertexRange,
    Loop,
    LabelRange,
    MissingReverse,
    Pairing,
    OrderRange,
};

struct Violation {
    ViolationKind kind;
    Vertex u;
    Vertex v;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    auto ok() const -> bool { return violations.empty(); }
};

inline auto validate(const AdjacencyMap & map) -> ValidationReport
{
    ValidationReport report;
    auto add = [&](ViolationKind kind, Vertex u, Vertex v, std::string message) {
        report.violations.push_back(Violation{kind, u, v, std::move(message)});
    };
    auto where = [](Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; };

    if (map.order < 0 || map.order > kMaxOrder)
        add(ViolationKind::OrderRange, -1, -1, "order " + std::to_string(map.order) + " outside [0," + std::to_string(kMaxOrder) + "]");

    for (const auto & [pair, label] : map.labels) {
        auto [u, v] = pair;
        if (u < 0 || v < 0 || u >= map.order || v >= map.order) {
            add(ViolationKind::VertexRange, u, v, "vertex out of range at " + where(u, v));
            continue;
        }
        if (u == v) {
            add(ViolationKind::Loop, u, v, "loop at " + where(u, v));
            continue;
        }
        if (! label_in_range(label, map.params)) {
            add(ViolationKind::LabelRange, u, v, "label " + std::to_string(label) + " at " + where(u, v) + " outside {1,...," + std::to_string(map.params.p()) + "}");
            continue;
        }
        auto back = map.labels.find({v, u});
        if (back == map.labels.end()) {
            add(ViolationKind::MissingReverse, v, u, "missing reverse adjacency at " + where(v, u));
            continue;
        }
        // each unordered pair is reported once, at the position whose stored label disagrees
        if (label_in_range(back->second, map.params) && u < v && back->second != reverse_type(label, map.params))
            add(ViolationKind::Pairing, v, u,
                "pairing violation at " + where(v, u) + ": expected " + std::to_string(reverse_type(label, map.params)) + ", found " + std::to_string(back->second));
    }
    return report;
}

/// A mixed graph with n arc types and m edge types. label(u,v) = a means v is an a-neighbour of u.
/// Built once, then read; concurrent readers are safe.
class NMGraph {
public:
    NMGraph() : NMGraph(Params{0, 1}, 0) {}

    NMGraph(Params params, int order) : _params(params), _order(order)
    {
        if (order < 0 || order > kMaxOrder)
            throw Error(ErrorKind::Domain, "order " + std::to_string(order) + " outside [0," + std::to_string(kMaxOrder) + "]");
        _labels.assign(static_cast<std::size_t>(order) * order, 0);
        _rows.assign(order, Row{});
        _label_rows.assign(static_cast<std::size_t>(order) * (params.p() + 1), Row{});
    }

    static auto from_map(const AdjacencyMap & map) -> NMGraph
    {
        auto report = validate(map);
        if (! report.ok())
            throw Error(ErrorKind::Domain, report.violations.front().message);
        NMGraph g{map.params, map.order};
        for (const auto & [pair, label] : map.labels)
            if (pair.first < pair.second)
                g.add_adjacency(pair.first, pair.second, label);
        return g;
    }

    auto params() const -> const Params & { return _params; }
    auto order() const -> int { return _order; }

    /// Number of adjacent unordered pairs.
    auto size() const -> int { return _size; }

    auto label(Vertex u, Vertex v) const -> int { return _labels[index(u, v)]; }
    auto adjacent(Vertex u, Vertex v) const -> bool { return _labels[index(u, v)] != 0; }

    auto neighbours(Vertex v) const -> const Row & { return _rows[v]; }

    auto neighbours(Vertex v, int alpha) const -> const Row &
    {
        return _label_rows[static_cast<std::size_t>(v) * (_params.p() + 1) + alpha];
    }

    auto degree(Vertex v) const -> int { return static_cast<int>(_rows[v].count()); }
    auto degree(Vertex v, int alpha) const -> int { return static_cast<int>(neighbours(v, alpha).count()); }

    void add_adjacency(Vertex u, Vertex v, int label)
    {
        auto where = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= _order || v >= _order)
            throw Error(ErrorKind::VertexRange, "vertex out of range at " + where);
        if (u == v)
            throw Error(ErrorKind::Loop, "loop requested at " + where);
        if (! label_in_range(label, _params))
            throw Error(ErrorKind::LabelRange, "label " + std::to_string(label) + " at " + where + " outside {1,...," + std::to_string(_params.p()) + "}");
        if (adjacent(u, v))
            throw Error(ErrorKind::DuplicateAdjacency, "duplicate adjacency at " + where);
        int back = reverse_type(label, _params);
        _labels[index(u, v)] = static_cast<std::uint8_t>(label);
        _labels[index(v, u)] = static_cast<std::uint8_t>(back);
        _rows[u].set(v);
        _rows[v].set(u);
        _label_rows[static_cast<std::size_t>(u) * (_params.p() + 1) + label].set(v);
        _label_rows[static_cast<std::size_t>(v) * (_params.p() + 1) + back].set(u);
        ++_size;
    }

    void add_adjacency(Vertex u, Vertex v, AdjLabel label) { add_adjacency(u, v, label.value()); }

    /// Adjacent pairs, one per unordered pair, listed from the arc tail (smaller endpoint for
    /// edges), sorted by (min endpoint, max endpoint).
    auto adjacencies() const -> std::vector<Adjacency>
    {
        std::vector<Adjacency> result;
        result.reserve(_size);
        for (Vertex u = 0; u < _order; ++u)
            for (Vertex v = u + 1; v < _order; ++v)
                if (int a = label(u, v)) {
                    if (is_reverse_arc(a, _params))
                        result.push_back(Adjacency{v, u, reverse_type(a, _params)});
                    else
                        result.push_back(Adjacency{u, v, a});
                }
        return result;
    }

    auto to_map() const -> AdjacencyMap
    {
        AdjacencyMap map{_params, _order, {}};
        for (Vertex u = 0; u < _order; ++u)
            for (Vertex v = 0; v < _order; ++v)
                if (int a = label(u, v))
                    map.labels[{u, v}] = a;
        return map;
    }

    auto operator==(const NMGraph & other) const -> bool
    {
        return _params == other._params && _order == other._order && _labels == other._labels;
    }

private:
    auto index(Vertex u, Vertex v) const -> std::size_t { return static_cast<std::size_t>(u) * _order + v; }

    Params _params;
    int _order;
    int _size = 0;
    std::vector<std::uint8_t> _labels;
    std::vector<Row> _rows;
    std::vector<Row> _label_rows;
};

inline auto validate(const NMGraph & g) -> ValidationReport
{
    return validate(g.to_map());
}

/// N^alpha(v) as a sorted vertex list.
inline auto alpha_neighbours(const NMGraph & g, Vertex v, AdjLabel alpha) -> VertexSet
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::VertexRange, "vertex " + std::to_string(v) + " out of range");
    if (! label_in_range(alpha.value(), g.params()))
        throw Error(ErrorKind::LabelRange, "label " + std::to_string(alpha.value()) + " out of range");
    return to_vertex_set(g.neighbours(v, alpha.value()), g.order());
}

/// The subgraph induced by `vertices`, renumbered 0..k-1 in the order given.
inline auto induced_subgraph(const NMGraph & g, std::span<const Vertex> vertices) -> NMGraph
{
    NMGraph result{g.params(), static_cast<int>(vertices.size())};
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (int l = g.label(vertices[a], vertices[b]))
                result.add_adjacency(static_cast<int>(a), static_cast<int>(b), l);
    return result;
}

/// Relabels vertex v as perm[v].
inline auto permute(const NMGraph & g, std::span<const Vertex> perm) -> NMGraph
{
    NMGraph result{g.params(), g.order()};
    for (const auto & [u, v, l] : g.adjacencies())
        result.add_adjacency(perm[u], perm[v], l);
    return result;
}

inline auto underlying_edges(const NMGraph & g) -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                result.emplace_back(u, v);
    return result;
}

} // namespace nmg
