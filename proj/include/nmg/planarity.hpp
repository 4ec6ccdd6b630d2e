#pragma once

#include <nmg/graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace nmg {

/// A combinatorial embedding: for each vertex the cyclic order of its neighbours, plus the face
/// chosen as the outer one (an index into faces()).
struct RotationSystem {
    int order = 0;
    std::vector<std::vector<Vertex>> rotations;
    int outer_face = 0;
};

/// A face as the cyclic sequence of vertices met along its boundary walk.
using Face = std::vector<Vertex>;

namespace detail {

/// Left-right planarity test (de Fraysseix-Rosenstiehl, in Brandes' formulation). Produces a
/// clockwise rotation per vertex when the graph is planar.
class LeftRightPlanarity {
public:
    LeftRightPlanarity(int order, const std::vector<std::vector<Vertex>> & adjacency) :
        _n(order),
        _adj(adjacency),
        _height(order, -1),
        _parent_edge(order, -1),
        _ordered(order),
        _left_ref(order, -1),
        _right_ref(order, -1)
    {
        std::size_t darts = static_cast<std::size_t>(order) * order;
        _lowpt.assign(darts, 0);
        _lowpt2.assign(darts, 0);
        _nesting_depth.assign(darts, 0);
        _oriented.assign(darts, false);
        _ref.assign(darts, -1);
        _side.assign(darts, 1);
        _lowpt_edge.assign(darts, -1);
        _stack_bottom.assign(darts, -1);
        _cw.assign(darts, -1);
        _ccw.assign(darts, -1);
        _first.assign(order, -1);
    }

    auto run() -> std::optional<std::vector<std::vector<Vertex>>>
    {
        std::size_t edges = 0;
        for (const auto & nbrs : _adj)
            edges += nbrs.size();
        edges /= 2;
        if (_n > 2 && edges > static_cast<std::size_t>(3 * _n - 6))
            return std::nullopt;

        for (Vertex v = 0; v < _n; ++v)
            if (_height[v] == -1) {
                _height[v] = 0;
                _roots.push_back(v);
                orient(v);
            }

        for (Vertex v = 0; v < _n; ++v)
            sort_by_nesting_depth(v);

        for (Vertex root : _roots)
            if (! test(root))
                return std::nullopt;

        for (Vertex v = 0; v < _n; ++v)
            for (Vertex w : _ordered[v])
                _nesting_depth[id(v, w)] *= sign(id(v, w));

        for (Vertex v = 0; v < _n; ++v) {
            sort_by_nesting_depth(v);
            Vertex previous = -1;
            for (Vertex w : _ordered[v]) {
                add_half_edge_cw(v, w, previous);
                previous = w;
            }
        }

        for (Vertex root : _roots)
            embed(root);

        std::vector<std::vector<Vertex>> rotations(_n);
        for (Vertex v = 0; v < _n; ++v) {
            if (_first[v] == -1)
                continue;
            Vertex w = _first[v];
            do {
                rotations[v].push_back(w);
                w = _cw[id(v, w)];
            } while (w != _first[v]);
        }
        return rotations;
    }

private:
    struct Interval {
        int low = -1, high = -1;

        auto empty() const -> bool { return low == -1 && high == -1; }
    };

    struct ConflictPair {
        Interval left, right;
        long serial = -1;

        void swap_sides() { std::swap(left, right); }
    };

    auto id(Vertex v, Vertex w) const -> int { return v * _n + w; }
    auto head(int e) const -> Vertex { return e % _n; }
    auto tail(int e) const -> Vertex { return e / _n; }

    void sort_by_nesting_depth(Vertex v)
    {
        std::stable_sort(_ordered[v].begin(), _ordered[v].end(), [&](Vertex a, Vertex b) { return _nesting_depth[id(v, a)] < _nesting_depth[id(v, b)]; });
    }

    void orient(Vertex v)
    {
        int e = _parent_edge[v];
        for (Vertex w : _adj[v]) {
            if (_oriented[id(v, w)] || _oriented[id(w, v)])
                continue;
            int vw = id(v, w);
            _oriented[vw] = true;
            _ordered[v].push_back(w);
            _lowpt[vw] = _height[v];
            _lowpt2[vw] = _height[v];
            if (_height[w] == -1) {
                _parent_edge[w] = vw;
                _height[w] = _height[v] + 1;
                orient(w);
            }
            else
                _lowpt[vw] = _height[w];

            _nesting_depth[vw] = 2 * _lowpt[vw];
            if (_lowpt2[vw] < _height[v])
                _nesting_depth[vw] += 1;

            if (e != -1) {
                if (_lowpt[vw] < _lowpt[e]) {
                    _lowpt2[e] = std::min(_lowpt[e], _lowpt2[vw]);
                    _lowpt[e] = _lowpt[vw];
                }
                else if (_lowpt[vw] > _lowpt[e])
                    _lowpt2[e] = std::min(_lowpt2[e], _lowpt[vw]);
                else
                    _lowpt2[e] = std::min(_lowpt2[e], _lowpt2[vw]);
            }
        }
    }

    auto top_serial() const -> long { return _stack.empty() ? -1 : _stack.back().serial; }

    void push(ConflictPair pair)
    {
        if (pair.serial == -1)
            pair.serial = _next_serial++;
        _stack.push_back(pair);
    }

    auto pop() -> ConflictPair
    {
        auto pair = _stack.back();
        _stack.pop_back();
        return pair;
    }

    auto conflicting(const Interval & interval, int b) const -> bool
    {
        return ! interval.empty() && _lowpt[interval.high] > _lowpt[b];
    }

    auto lowest(const ConflictPair & pair) const -> int
    {
        if (pair.left.empty())
            return _lowpt[pair.right.low];
        if (pair.right.empty())
            return _lowpt[pair.left.low];
        return std::min(_lowpt[pair.left.low], _lowpt[pair.right.low]);
    }

    auto test(Vertex v) -> bool
    {
        int e = _parent_edge[v];
        for (Vertex w : _ordered[v]) {
            int ei = id(v, w);
            _stack_bottom[ei] = static_cast<int>(top_serial());
            if (ei == _parent_edge[w]) {
                if (! test(w))
                    return false;
            }
            else {
                _lowpt_edge[ei] = ei;
                ConflictPair pair;
                pair.right = Interval{ei, ei};
                push(pair);
            }

            if (_lowpt[ei] < _height[v]) {
                if (w == _ordered[v].front())
                    _lowpt_edge[e] = _lowpt_edge[ei];
                else if (! add_constraints(ei, e))
                    return false;
            }
        }
        if (e != -1)
            remove_back_edges(e);
        return true;
    }

    auto add_constraints(int ei, int e) -> bool
    {
        ConflictPair merged;
        do {
            auto q = pop();
            if (! q.left.empty())
                q.swap_sides();
            if (! q.left.empty())
                return false;
            if (_lowpt[q.right.low] > _lowpt[e]) {
                if (merged.right.empty())
                    merged.right = q.right;
                else
                    _ref[merged.right.low] = q.right.high;
                merged.right.low = q.right.low;
            }
            else
                _ref[q.right.low] = _lowpt_edge[e];
        } while (top_serial() != _stack_bottom[ei]);

        while (! _stack.empty() && (conflicting(_stack.back().left, ei) || conflicting(_stack.back().right, ei))) {
            auto q = pop();
            if (conflicting(q.right, ei))
                q.swap_sides();
            if (conflicting(q.right, ei))
                return false;
            if (merged.right.low != -1)
                _ref[merged.right.low] = q.right.high;
            if (q.right.low != -1)
                merged.right.low = q.right.low;
            if (merged.left.empty())
                merged.left = q.left;
            else if (merged.left.low != -1)
                _ref[merged.left.low] = q.left.high;
            merged.left.low = q.left.low;
        }
        if (! (merged.left.empty() && merged.right.empty()))
            push(merged);
        return true;
    }

    void remove_back_edges(int e)
    {
        Vertex u = tail(e);
        while (! _stack.empty() && lowest(_stack.back()) == _height[u]) {
            auto pair = pop();
            if (pair.left.low != -1)
                _side[pair.left.low] = -1;
        }
        if (! _stack.empty()) {
            auto pair = pop();
            while (pair.left.high != -1 && head(pair.left.high) == u)
                pair.left.high = _ref[pair.left.high];
            if (pair.left.high == -1 && pair.left.low != -1) {
                _ref[pair.left.low] = pair.right.low;
                _side[pair.left.low] = -1;
                pair.left.low = -1;
            }
            while (pair.right.high != -1 && head(pair.right.high) == u)
                pair.right.high = _ref[pair.right.high];
            if (pair.right.high == -1 && pair.right.low != -1) {
                _ref[pair.right.low] = pair.left.low;
                _side[pair.right.low] = -1;
                pair.right.low = -1;
            }
            push(pair);
        }
        if (_lowpt[e] < _height[u] && ! _stack.empty()) {
            int hl = _stack.back().left.high, hr = _stack.back().right.high;
            if (hl != -1 && (hr == -1 || _lowpt[hl] > _lowpt[hr]))
                _ref[e] = hl;
            else
                _ref[e] = hr;
        }
    }

    auto sign(int e) -> int
    {
        if (_ref[e] != -1) {
            _side[e] *= sign(_ref[e]);
            _ref[e] = -1;
        }
        return _side[e];
    }

    void add_half_edge_cw(Vertex start, Vertex end, Vertex reference)
    {
        if (reference == -1) {
            _cw[id(start, end)] = end;
            _ccw[id(start, end)] = end;
            _first[start] = end;
            return;
        }
        Vertex cw_reference = _cw[id(start, reference)];
        _cw[id(start, reference)] = end;
        _cw[id(start, end)] = cw_reference;
        _ccw[id(start, cw_reference)] = end;
        _ccw[id(start, end)] = reference;
    }

    void add_half_edge_ccw(Vertex start, Vertex end, Vertex reference)
    {
        if (reference == -1) {
            add_half_edge_cw(start, end, -1);
            return;
        }
        Vertex ccw_reference = _ccw[id(start, reference)];
        add_half_edge_cw(start, end, ccw_reference);
        if (reference == _first[start])
            _first[start] = end;
    }

    void add_half_edge_first(Vertex start, Vertex end)
    {
        add_half_edge_ccw(start, end, _first[start]);
    }

    void embed(Vertex v)
    {
        for (Vertex w : _ordered[v]) {
            int ei = id(v, w);
            if (ei == _parent_edge[w]) {
                add_half_edge_first(w, v);
                _left_ref[v] = w;
                _right_ref[v] = w;
                embed(w);
            }
            else if (_side[ei] == 1)
                add_half_edge_cw(w, v, _right_ref[w]);
            else {
                add_half_edge_ccw(w, v, _left_ref[w]);
                _left_ref[w] = v;
            }
        }
    }

    int _n;
    const std::vector<std::vector<Vertex>> & _adj;
    std::vector<int> _height;
    std::vector<int> _parent_edge;
    std::vector<std::vector<Vertex>> _ordered;
    std::vector<Vertex> _left_ref, _right_ref;
    std::vector<Vertex> _roots;

    std::vector<int> _lowpt, _lowpt2, _nesting_depth;
    std::vector<bool> _oriented;
    std::vector<int> _ref, _side, _lowpt_edge, _stack_bottom;
    std::vector<ConflictPair> _stack;
    long _next_serial = 0;

    std::vector<Vertex> _cw, _ccw, _first;
};

inline auto adjacency_lists(const NMGraph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v] = to_vertex_set(g.neighbours(v), g.order());
    return adj;
}

inline auto validate_rotations(const RotationSystem & rs) -> void
{
    if (static_cast<int>(rs.rotations.size()) != rs.order)
        throw Error(ErrorKind::Domain, "rotation system has " + std::to_string(rs.rotations.size()) + " rotations for order " + std::to_string(rs.order));
    std::vector<std::vector<bool>> present(rs.order, std::vector<bool>(rs.order, false));
    for (Vertex v = 0; v < rs.order; ++v)
        for (Vertex w : rs.rotations[v]) {
            if (w < 0 || w >= rs.order || w == v)
                throw Error(ErrorKind::Domain, "rotation at " + std::to_string(v) + " lists invalid neighbour " + std::to_string(w));
            if (present[v][w])
                throw Error(ErrorKind::Domain, "rotation at " + std::to_string(v) + " repeats " + std::to_string(w));
            present[v][w] = true;
        }
    for (Vertex v = 0; v < rs.order; ++v)
        for (Vertex w : rs.rotations[v])
            if (! present[w][v])
                throw Error(ErrorKind::Domain, "rotation at " + std::to_string(w) + " misses " + std::to_string(v));
}

} // namespace detail

/// Successor of `w` in the rotation at `v`.
inline auto rotation_successor(const RotationSystem & rs, Vertex v, Vertex w) -> Vertex
{
    const auto & rot = rs.rotations[v];
    auto it = std::find(rot.begin(), rot.end(), w);
    if (it == rot.end())
        throw Error(ErrorKind::Domain, std::to_string(w) + " is not in the rotation at " + std::to_string(v));
    ++it;
    return it == rot.end() ? rot.front() : *it;
}

inline auto rotation_predecessor(const RotationSystem & rs, Vertex v, Vertex w) -> Vertex
{
    const auto & rot = rs.rotations[v];
    auto it = std::find(rot.begin(), rot.end(), w);
    if (it == rot.end())
        throw Error(ErrorKind::Domain, std::to_string(w) + " is not in the rotation at " + std::to_string(v));
    return it == rot.begin() ? rot.back() : *std::prev(it);
}

/// Face tracing: from dart (u,v) the walk continues with (v, successor of u at v). Faces are
/// numbered in the order their first dart is met scanning vertices, then rotations.
inline auto faces(const RotationSystem & rs) -> std::vector<Face>
{
    detail::validate_rotations(rs);
    std::vector<std::vector<bool>> used(rs.order);
    for (Vertex v = 0; v < rs.order; ++v)
        used[v].assign(rs.rotations[v].size(), false);
    auto position = [&](Vertex v, Vertex w) {
        const auto & rot = rs.rotations[v];
        return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
    };

    std::vector<Face> result;
    for (Vertex v = 0; v < rs.order; ++v)
        for (std::size_t i = 0; i < rs.rotations[v].size(); ++i) {
            if (used[v][i])
                continue;
            Face face;
            Vertex a = v, b = rs.rotations[v][i];
            std::size_t pos = i;
            while (! used[a][pos]) {
                used[a][pos] = true;
                face.push_back(a);
                Vertex next = rotation_successor(rs, b, a);
                a = b;
                b = next;
                pos = position(a, b);
            }
            result.push_back(std::move(face));
        }
    return result;
}

/// |V|, |E| and |F| of one connected component; an isolated vertex counts as one face.
struct ComponentEuler {
    int vertices = 0;
    int edges = 0;
    int faces = 0;

    auto holds() const -> bool { return vertices - edges + faces == 2; }
};

inline auto euler_per_component(const RotationSystem & rs) -> std::vector<ComponentEuler>
{
    auto all_faces = faces(rs);
    std::vector<int> component(rs.order, -1);
    int count = 0;
    for (Vertex s = 0; s < rs.order; ++s) {
        if (component[s] != -1)
            continue;
        std::vector<Vertex> stack{s};
        component[s] = count;
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : rs.rotations[v])
                if (component[w] == -1) {
                    component[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    std::vector<ComponentEuler> result(count);
    for (Vertex v = 0; v < rs.order; ++v) {
        ++result[component[v]].vertices;
        result[component[v]].edges += static_cast<int>(rs.rotations[v].size());
    }
    for (auto & c : result)
        c.edges /= 2;
    for (const auto & face : all_faces)
        ++result[component[face.front()]].faces;
    for (auto & c : result)
        if (c.edges == 0)
            c.faces = 1;
    return result;
}

inline auto is_planar(const NMGraph & g) -> bool
{
    if (g.order() > 2 && g.size() > 3 * g.order() - 6)
        return false;
    auto adj = detail::adjacency_lists(g);
    return detail::LeftRightPlanarity{g.order(), adj}.run().has_value();
}

/// A planar rotation system for g, or nothing if g is not planar. The outer face is a longest
/// face, the first one traced on ties.
inline auto embed(const NMGraph & g) -> std::optional<RotationSystem>
{
    auto adj = detail::adjacency_lists(g);
    auto rotations = detail::LeftRightPlanarity{g.order(), adj}.run();
    if (! rotations)
        return std::nullopt;
    RotationSystem rs{g.order(), std::move(*rotations), 0};
    auto all = faces(rs);
    for (std::size_t f = 1; f < all.size(); ++f)
        if (all[f].size() > all[rs.outer_face].size())
            rs.outer_face = static_cast<int>(f);
    return rs;
}

/// Outerplanar iff planar after adding a vertex adjacent to every vertex.
inline auto is_outerplanar(const NMGraph & g) -> bool
{
    if (g.order() > 1 && g.size() > 2 * g.order() - 3)
        return false;
    auto adj = detail::adjacency_lists(g);
    const Vertex apex = g.order();
    adj.emplace_back();
    for (Vertex v = 0; v < g.order(); ++v) {
        adj[v].push_back(apex);
        adj[apex].push_back(v);
    }
    return detail::LeftRightPlanarity{g.order() + 1, adj}.run().has_value();
}

} // namespace nmg
