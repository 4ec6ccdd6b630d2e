#pragma once

#include <nmg/graph.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nmg {

/// (alpha, beta) such that w is an alpha-neighbour of u and a beta-neighbour of v.
struct LabelPair {
    int alpha;
    int beta;

    auto operator<=>(const LabelPair &) const = default;
};

struct SeeWitness {
    enum class Kind { Adjacent, SpecialPath };

    Kind kind = Kind::Adjacent;
    std::optional<Vertex> middle;
    std::optional<LabelPair> labels;

    static auto adjacent() -> SeeWitness { return SeeWitness{}; }
    static auto through(Vertex w, LabelPair labels) -> SeeWitness { return SeeWitness{Kind::SpecialPath, w, labels}; }

    auto operator==(const SeeWitness &) const -> bool = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Outcome of a completeness check; on failure `blame` is the lexicographically least pair that
/// does not see each other.
struct CompletenessResult {
    bool complete = true;
    std::optional<VertexPair> blame;

    explicit operator bool() const { return complete; }
};

namespace detail {

inline void check_vertex(const NMGraph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::VertexRange, "vertex " + std::to_string(v) + " out of range");
}

} // namespace detail

/// Whether u w v is a special 2-path. Labels are unique per ordered pair, so the pair is unique.
inline auto is_special_two_path(const NMGraph & g, Vertex u, Vertex w, Vertex v) -> std::optional<LabelPair>
{
    detail::check_vertex(g, u);
    detail::check_vertex(g, w);
    detail::check_vertex(g, v);
    if (u == w || u == v || w == v)
        throw Error(ErrorKind::Domain, "special 2-path needs three distinct vertices");
    int alpha = g.label(u, w), beta = g.label(v, w);
    if (alpha == 0 || beta == 0 || alpha == beta)
        return std::nullopt;
    return LabelPair{alpha, beta};
}

/// Adjacent if u and v are adjacent, otherwise the special 2-path with the smallest middle vertex.
inline auto sees(const NMGraph & g, Vertex u, Vertex v) -> std::optional<SeeWitness>
{
    detail::check_vertex(g, u);
    detail::check_vertex(g, v);
    if (u == v)
        throw Error(ErrorKind::Domain, "a vertex is not compared with itself");
    if (g.adjacent(u, v))
        return SeeWitness::adjacent();
    auto common = g.neighbours(u) & g.neighbours(v);
    for (auto w = common._Find_first(); w < static_cast<std::size_t>(g.order()); w = common._Find_next(w)) {
        int alpha = g.label(u, static_cast<Vertex>(w)), beta = g.label(v, static_cast<Vertex>(w));
        if (alpha != beta)
            return SeeWitness::through(static_cast<Vertex>(w), LabelPair{alpha, beta});
    }
    return std::nullopt;
}

/// Fast predicate form of sees(): some common neighbour offers distinct labels.
inline auto sees_quickly(const NMGraph & g, Vertex u, Vertex v) -> bool
{
    if (g.adjacent(u, v))
        return true;
    const int p = g.params().p();
    auto common = g.neighbours(u) & g.neighbours(v);
    if (common.none())
        return false;
    // common neighbours w with label(u,w) = label(v,w) = a for the same a do not help
    Row same;
    for (int a = 1; a <= p; ++a)
        same |= g.neighbours(u, a) & g.neighbours(v, a);
    return (common & ~same).any();
}

inline auto non_seeing_pairs(const NMGraph & g) -> std::vector<VertexPair>
{
    std::vector<VertexPair> result;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! sees_quickly(g, u, v))
                result.emplace_back(u, v);
    return result;
}

inline auto is_nm_complete_by_seeing(const NMGraph & g) -> CompletenessResult
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! sees(g, u, v))
                return CompletenessResult{false, VertexPair{u, v}};
    return CompletenessResult{};
}

/// Identifies u and v into one vertex and lists what the merged vertex is attached to: a loop if u
/// and v were adjacent, otherwise every (neighbour, label) adjacency, with parallel entries kept.
struct MergedVertex {
    bool loop = false;
    std::multimap<Vertex, int> adjacencies;

    /// True when identifying u and v cannot be a homomorphism: a loop, or two parallel
    /// adjacencies to the same neighbour with different labels.
    auto conflicting() const -> bool
    {
        if (loop)
            return true;
        for (auto it = adjacencies.begin(); it != adjacencies.end();) {
            auto range = adjacencies.equal_range(it->first);
            for (auto a = range.first; a != range.second; ++a)
                if (a->second != range.first->second)
                    return true;
            it = range.second;
        }
        return false;
    }
};

inline auto identify(const NMGraph & g, Vertex u, Vertex v) -> MergedVertex
{
    MergedVertex merged;
    for (const auto & [a, b, label] : g.adjacencies()) {
        // rewrite the adjacency from the merged vertex's side
        bool a_in = a == u || a == v, b_in = b == u || b == v;
        if (a_in && b_in)
            merged.loop = true;
        else if (a_in)
            merged.adjacencies.emplace(b, label);
        else if (b_in)
            merged.adjacencies.emplace(a, reverse_type(label, g.params()));
    }
    return merged;
}

/// Completeness decided literally: every identification of two vertices must yield a loop or
/// parallel adjacencies with distinct labels.
inline auto is_nm_complete_by_identification(const NMGraph & g) -> CompletenessResult
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! identify(g, u, v).conflicting())
                return CompletenessResult{false, VertexPair{u, v}};
    return CompletenessResult{};
}

inline auto is_nm_complete(const NMGraph & g) -> bool
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! sees_quickly(g, u, v))
                return false;
    return true;
}

} // namespace nmg
