#pragma once

#include <nmg/graph.hpp>
#include <nmg/planarity.hpp>
#include <nmg/seeing.hpp>

#include <optional>
#include <vector>

namespace nmg {

struct HomMapping {
    int source_order = 0;
    int target_order = 0;
    std::vector<Vertex> map;

    auto operator==(const HomMapping &) const -> bool = default;
};

struct HomViolation {
    Vertex u;
    Vertex v;
    int required;
    int found; // 0 when the images are not adjacent (or coincide)
};

struct HomCheck {
    bool ok = true;
    std::vector<HomViolation> violations;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline void check_same_params(const NMGraph & g, const NMGraph & h)
{
    if (g.params() != h.params())
        throw Error(ErrorKind::Domain, "homomorphisms need equal (n,m) on both sides");
}

} // namespace detail

inline auto check_homomorphism(const NMGraph & g, const NMGraph & h, const HomMapping & f) -> HomCheck
{
    detail::check_same_params(g, h);
    if (f.source_order != g.order() || f.target_order != h.order() || static_cast<int>(f.map.size()) != g.order())
        throw Error(ErrorKind::Domain, "mapping does not match the graph orders");
    for (Vertex image : f.map)
        if (image < 0 || image >= h.order())
            throw Error(ErrorKind::VertexRange, "mapping image " + std::to_string(image) + " out of range");

    HomCheck result;
    for (const auto & [u, v, l] : g.adjacencies()) {
        int found = f.map[u] == f.map[v] ? 0 : h.label(f.map[u], f.map[v]);
        if (found != l) {
            result.ok = false;
            result.violations.push_back(HomViolation{u, v, l, found});
        }
    }
    return result;
}

namespace detail {

class HomSearcher {
public:
    HomSearcher(const NMGraph & g, const NMGraph & h) : _g(g), _h(h), _map(g.order(), -1) {}

    auto run() -> std::optional<std::vector<Vertex>>
    {
        Row all;
        for (Vertex a = 0; a < _h.order(); ++a)
            all.set(a);
        std::vector<Row> domains(_g.order(), all);
        // a vertex with an alpha-neighbour needs an image with an alpha-neighbour
        for (Vertex v = 0; v < _g.order(); ++v)
            for (int alpha = 1; alpha <= _g.params().p(); ++alpha)
                if (_g.degree(v, alpha) > 0)
                    for (Vertex a = 0; a < _h.order(); ++a)
                        if (_h.degree(a, alpha) == 0)
                            domains[v].reset(a);
        if (search(0, domains))
            return _map;
        return std::nullopt;
    }

private:
    auto search(Vertex v, const std::vector<Row> & domains) -> bool
    {
        if (v == _g.order())
            return true;
        const auto & domain = domains[v];
        for (auto a = domain._Find_first(); a < static_cast<std::size_t>(_h.order()); a = domain._Find_next(a)) {
            _map[v] = static_cast<Vertex>(a);
            auto next = domains;
            bool wiped = false;
            const auto & later = _g.neighbours(v);
            for (auto w = later._Find_next(v); w < static_cast<std::size_t>(_g.order()); w = later._Find_next(w)) {
                next[w] &= _h.neighbours(static_cast<Vertex>(a), _g.label(v, static_cast<Vertex>(w)));
                if (next[w].none()) {
                    wiped = true;
                    break;
                }
            }
            if (! wiped && search(v + 1, next))
                return true;
        }
        _map[v] = -1;
        return false;
    }

    const NMGraph & _g;
    const NMGraph & _h;
    std::vector<Vertex> _map;
};

} // namespace detail

/// The lexicographically least homomorphism g -> h, by backtracking in vertex order with forward
/// checking on label-restricted candidate sets.
inline auto find_homomorphism(const NMGraph & g, const NMGraph & h) -> std::optional<HomMapping>
{
    detail::check_same_params(g, h);
    if (g.order() > 0 && h.order() == 0)
        return std::nullopt;
    auto map = detail::HomSearcher{g, h}.run();
    if (! map)
        return std::nullopt;
    return HomMapping{g.order(), h.order(), std::move(*map)};
}

/// The homomorphic image of g obtained by collapsing each colour class to one vertex. The
/// colouring must be a valid quotient (no adjacency inside a class, consistent labels between
/// classes).
inline auto quotient(const NMGraph & g, const std::vector<int> & colouring) -> NMGraph
{
    int classes = 0;
    for (int c : colouring)
        classes = std::max(classes, c + 1);
    NMGraph h{g.params(), classes};
    for (const auto & [u, v, l] : g.adjacencies()) {
        int a = colouring[u], b = colouring[v];
        if (a == b)
            throw Error(ErrorKind::Domain, "colouring puts adjacent vertices together");
        if (! h.adjacent(a, b))
            h.add_adjacency(a, b, l);
        else if (h.label(a, b) != l)
            throw Error(ErrorKind::Domain, "colouring merges adjacencies with different labels");
    }
    return h;
}

struct ChromaticResult {
    /// Absent when no image with at most `limit` vertices exists.
    std::optional<int> value;
    /// Colour class per vertex of the best image found.
    std::vector<int> colouring;
};

namespace detail {

/// Assigns vertices in index order to existing or fresh colour classes. Two classes keep one
/// agreed label between them, so every complete assignment is a well-defined quotient.
class QuotientSearcher {
public:
    QuotientSearcher(const NMGraph & g, int limit) :
        _g(g),
        _best(limit + 1),
        _class_of(g.order(), -1),
        _relation(g.order() * g.order(), 0),
        _uses(g.order() * g.order(), 0)
    {
    }

    auto run() -> ChromaticResult
    {
        if (_g.order() == 0)
            return ChromaticResult{0, {}};
        search(0, 0);
        if (_best_colouring.empty())
            return ChromaticResult{std::nullopt, {}};
        return ChromaticResult{_best, _best_colouring};
    }

private:
    auto rel(int a, int b) -> int & { return _relation[a * _g.order() + b]; }
    auto uses(int a, int b) -> int & { return _uses[a * _g.order() + b]; }

    auto place(Vertex v, int cls, std::vector<std::pair<int, int>> & touched) -> bool
    {
        const auto & nbrs = _g.neighbours(v);
        for (auto w = nbrs._Find_first(); w < static_cast<std::size_t>(v); w = nbrs._Find_next(w)) {
            int other = _class_of[w];
            if (other == cls)
                return false;
            int l = _g.label(v, static_cast<Vertex>(w));
            if (uses(cls, other) > 0 && rel(cls, other) != l)
                return false;
            rel(cls, other) = l;
            rel(other, cls) = reverse_type(l, _g.params());
            ++uses(cls, other);
            ++uses(other, cls);
            touched.emplace_back(cls, other);
        }
        return true;
    }

    void unplace(const std::vector<std::pair<int, int>> & touched)
    {
        for (auto [a, b] : touched) {
            --uses(a, b);
            --uses(b, a);
        }
    }

    void search(Vertex v, int used)
    {
        if (used >= _best)
            return;
        if (v == _g.order()) {
            _best = used;
            _best_colouring = _class_of;
            return;
        }
        for (int cls = 0; cls <= used; ++cls) {
            int now_used = cls == used ? used + 1 : used;
            if (now_used >= _best)
                break;
            std::vector<std::pair<int, int>> touched;
            if (place(v, cls, touched)) {
                _class_of[v] = cls;
                search(v + 1, now_used);
                _class_of[v] = -1;
            }
            unplace(touched);
        }
    }

    const NMGraph & _g;
    int _best;
    std::vector<int> _best_colouring;
    std::vector<int> _class_of;
    std::vector<int> _relation;
    std::vector<int> _uses;
};

} // namespace detail

/// Least k <= limit such that g maps to some (n,m)-graph on k vertices. Searches quotients of g,
/// which is enough since the image of a homomorphism is a quotient. `limit` defaults to |V(g)|.
inline auto chromatic_number(const NMGraph & g, std::optional<int> limit = std::nullopt) -> ChromaticResult
{
    int bound = limit.value_or(g.order());
    if (bound < 1)
        throw Error(ErrorKind::Domain, "limit must be at least 1");
    return detail::QuotientSearcher{g, std::min(bound, std::max(g.order(), 1))}.run();
}

struct CliqueResult {
    int size = 0;
    VertexSet witness;
};

namespace detail {

/// Completeness of the subgraph induced by `members`, with 2-paths restricted to it.
inline auto induces_complete(const NMGraph & g, const Row & members) -> bool
{
    const int p = g.params().p();
    for (auto u = members._Find_first(); u < static_cast<std::size_t>(g.order()); u = members._Find_next(u))
        for (auto v = members._Find_next(u); v < static_cast<std::size_t>(g.order()); v = members._Find_next(v)) {
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                continue;
            auto common = g.neighbours(static_cast<Vertex>(u)) & g.neighbours(static_cast<Vertex>(v)) & members;
            Row same;
            for (int a = 1; a <= p; ++a)
                same |= g.neighbours(static_cast<Vertex>(u), a) & g.neighbours(static_cast<Vertex>(v), a);
            if ((common & ~same).none())
                return false;
        }
    return true;
}

/// In a planar complete graph an adjacent pair (or a pair with six or more common neighbours)
/// shares at most three vertices under any fixed label pair. Counts only grow with the vertex set.
inline auto violates_pair_intersection_bound(const NMGraph & g, const Row & members) -> bool
{
    const int p = g.params().p();
    for (auto u = members._Find_first(); u < static_cast<std::size_t>(g.order()); u = members._Find_next(u))
        for (auto v = members._Find_next(u); v < static_cast<std::size_t>(g.order()); v = members._Find_next(v)) {
            auto uu = static_cast<Vertex>(u), vv = static_cast<Vertex>(v);
            if (! g.adjacent(uu, vv) && (g.neighbours(uu) & g.neighbours(vv) & members).count() < 6)
                continue;
            for (int a = 1; a <= p; ++a) {
                auto left = g.neighbours(uu, a) & members;
                if (left.count() < 4)
                    continue;
                for (int b = 1; b <= p; ++b)
                    if ((left & g.neighbours(vv, b)).count() > 3)
                        return true;
            }
        }
    return false;
}

class CliqueSearcher {
public:
    explicit CliqueSearcher(const NMGraph & g) : _g(g), _compatible(g.order())
    {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v)
                if (u != v && sees_quickly(g, u, v))
                    _compatible[u].set(v);
        _planar = is_planar(g);
    }

    auto run() -> CliqueResult
    {
        Row candidates;
        for (Vertex v = 0; v < _g.order(); ++v)
            candidates.set(v);
        Row chosen;
        search(chosen, 0, candidates);
        return CliqueResult{_best, to_vertex_set(_best_set, _g.order())};
    }

private:
    // include-first in index order, so the first set of each size reached is the lexicographically least
    void search(Row & chosen, int size, Row candidates)
    {
        if (size > _best && induces_complete(_g, chosen)) {
            _best = size;
            _best_set = chosen;
        }
        if (size + static_cast<int>(candidates.count()) <= _best)
            return;
        for (auto v = candidates._Find_first(); v < static_cast<std::size_t>(_g.order()); v = candidates._Find_first()) {
            if (size + static_cast<int>(candidates.count()) <= _best)
                return;
            candidates.reset(v);
            chosen.set(v);
            if (! (_planar && violates_pair_intersection_bound(_g, chosen)))
                search(chosen, size + 1, candidates & _compatible[v]);
            chosen.reset(v);
        }
    }

    const NMGraph & _g;
    std::vector<Row> _compatible;
    bool _planar = false;
    int _best = 0;
    Row _best_set;
};

} // namespace detail

/// Largest vertex subset inducing an (n,m)-complete graph; the witness is the lexicographically
/// least among the largest.
inline auto absolute_clique_number(const NMGraph & g) -> CliqueResult
{
    return detail::CliqueSearcher{g}.run();
}

} // namespace nmg
