#pragma once

// Builders and brute-force oracles shared by the test programs. The oracles restate definitions
// directly and avoid the library's search code.

#include <nmg/nmg.hpp>

#include <functional>
#include <random>
#include <vector>

namespace nmg::testing {

inline auto make(Params params, int order, std::initializer_list<Adjacency> adjacencies) -> NMGraph
{
    NMGraph g{params, order};
    for (const auto & a : adjacencies)
        g.add_adjacency(a.u, a.v, a.label);
    return g;
}

inline auto directed_triangle() -> NMGraph { return make(Params{1, 0}, 3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}); }
inline auto directed_path() -> NMGraph { return make(Params{1, 0}, 3, {{0, 1, 2}, {1, 2, 2}}); }
/// 0 -> 1 <- 2
inline auto converging_path() -> NMGraph { return make(Params{1, 0}, 3, {{0, 1, 2}, {2, 1, 2}}); }
inline auto single_arc() -> NMGraph { return make(Params{1, 0}, 2, {{0, 1, 2}}); }

inline auto underlying(const std::vector<std::pair<Vertex, Vertex>> & edges, int order, Params params = Params{0, 2}, int label = 1) -> NMGraph
{
    NMGraph g{params, order};
    for (auto [u, v] : edges)
        g.add_adjacency(u, v, label);
    return g;
}

inline auto complete_underlying(int order, Params params = Params{0, 2}, int label = 1) -> NMGraph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            edges.emplace_back(u, v);
    return underlying(edges, order, params, label);
}

/// Label choices for one unordered pair u < v: 0 (absent) or a label from u's side with no
/// duplicates (arcs both ways, edges once).
inline auto pair_states(Params params) -> std::vector<int>
{
    std::vector<int> states{0};
    for (int l = 1; l <= params.p(); ++l)
        states.push_back(l);
    return states;
}

/// Calls f on every labelled graph on `order` vertices.
inline void for_each_graph(Params params, int order, const std::function<void(const NMGraph &)> & f)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            pairs.emplace_back(u, v);
    auto states = pair_states(params);
    std::vector<std::size_t> digit(pairs.size(), 0);
    while (true) {
        NMGraph g{params, order};
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (states[digit[i]])
                g.add_adjacency(pairs[i].first, pairs[i].second, states[digit[i]]);
        f(g);
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == states.size())
            digit[i++] = 0;
        if (i == digit.size())
            break;
    }
}

inline auto random_graph(std::mt19937_64 & rng, Params params, int order, double density) -> NMGraph
{
    NMGraph g{params, order};
    std::bernoulli_distribution edge(density);
    std::uniform_int_distribution<int> label(1, params.p());
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            if (edge(rng))
                g.add_adjacency(u, v, label(rng));
    return g;
}

/// Completeness of the subgraph induced by `members`, straight from the definition.
inline auto naive_induced_complete(const NMGraph & g, const std::vector<Vertex> & members) -> bool
{
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            Vertex u = members[a], v = members[b];
            if (g.label(u, v) != 0)
                continue;
            bool seen = false;
            for (Vertex w : members)
                if (w != u && w != v && g.label(u, w) != 0 && g.label(v, w) != 0 && g.label(u, w) != g.label(v, w))
                    seen = true;
            if (! seen)
                return false;
        }
    return true;
}

inline auto naive_complete(const NMGraph & g) -> bool
{
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        all[v] = v;
    return naive_induced_complete(g, all);
}

/// Largest subset inducing a complete graph, by trying every subset.
inline auto naive_clique_number(const NMGraph & g) -> int
{
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.order(); ++v)
            if (mask >> v & 1)
                members.push_back(v);
        if (static_cast<int>(members.size()) > best && naive_induced_complete(g, members))
            best = static_cast<int>(members.size());
    }
    return best;
}

/// Whether v -> colour[v] is a homomorphism onto some (n,m)-graph on the used colours: adjacent
/// vertices get distinct colours and every pair of colours carries one label.
inline auto naive_is_quotient(const NMGraph & g, const std::vector<int> & colour) -> bool
{
    std::map<std::pair<int, int>, int> seen;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            int l = g.label(u, v);
            if (u == v || l == 0)
                continue;
            if (colour[u] == colour[v])
                return false;
            auto [it, fresh] = seen.emplace(std::pair{colour[u], colour[v]}, l);
            if (! fresh && it->second != l)
                return false;
        }
    return true;
}

/// Least k such that some map V -> {0..k-1} is a homomorphism onto a k-vertex graph.
inline auto naive_chromatic_number(const NMGraph & g) -> int
{
    const int n = g.order();
    if (n == 0)
        return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colour(n, 0);
        while (true) {
            if (naive_is_quotient(g, colour))
                return k;
            int i = 0;
            while (i < n && ++colour[i] == k)
                colour[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

/// Largest order <= max_order of a connected-or-not labelled graph in the class that is complete,
/// by enumerating every labelled graph.
inline auto naive_extremal(Params params, GraphClass graph_class, int max_order) -> int
{
    int best = 1;
    for (int order = 2; order <= max_order; ++order) {
        bool found = false;
        for_each_graph(params, order, [&](const NMGraph & g) {
            if (! found && naive_complete(g) && in_class(g, graph_class))
                found = true;
        });
        if (found)
            best = order;
    }
    return best;
}

} // namespace nmg::testing
