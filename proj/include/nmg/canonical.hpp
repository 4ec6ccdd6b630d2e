#pragma once

#include <nmg/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nmg {

namespace detail {

/// Individualisation-refinement canonical labelling. Cells are refined by the multiset of
/// (label, neighbour colour) pairs; the canonical leaf is the least certificate among leaves whose
/// sequence of refinement traces is least.
class CanonicalLabeller {
public:
    explicit CanonicalLabeller(const NMGraph & g) : _g(g), _n(g.order()) {}

    auto run() -> std::vector<Vertex>
    {
        std::vector<int> colours(_n, 0);
        std::vector<std::uint64_t> path;
        search(std::move(colours), path);
        std::vector<Vertex> position(_n);
        for (int i = 0; i < _n; ++i)
            position[_best_order[i]] = i;
        return position;
    }

private:
    using Signature = std::vector<int>;

    /// Refines to an equitable colouring with colours ranked 0..k-1; returns a trace hash.
    auto refine(std::vector<int> & colours) const -> std::uint64_t
    {
        int cells = count_cells(colours);
        std::uint64_t trace = 1469598103934665603ULL;
        while (true) {
            std::vector<std::pair<Signature, Vertex>> signatures(_n);
            for (Vertex v = 0; v < _n; ++v) {
                Signature sig;
                sig.push_back(colours[v]);
                const auto & nbrs = _g.neighbours(v);
                std::vector<int> entries;
                for (auto w = nbrs._Find_first(); w < static_cast<std::size_t>(_n); w = nbrs._Find_next(w))
                    entries.push_back(_g.label(v, static_cast<Vertex>(w)) * (_n + 1) + colours[w]);
                std::sort(entries.begin(), entries.end());
                sig.insert(sig.end(), entries.begin(), entries.end());
                signatures[v] = {std::move(sig), v};
            }
            std::sort(signatures.begin(), signatures.end());
            int rank = -1;
            const Signature * previous = nullptr;
            for (auto & [sig, v] : signatures) {
                if (! previous || sig != *previous) {
                    ++rank;
                    for (int x : sig)
                        trace = (trace ^ static_cast<std::uint64_t>(x + 7)) * 1099511628211ULL;
                    trace = (trace ^ 0xffULL) * 1099511628211ULL;
                }
                colours[v] = rank;
                previous = &sig;
            }
            int now = rank + 1;
            if (now == cells)
                break;
            cells = now;
        }
        return trace ^ static_cast<std::uint64_t>(cells);
    }

    static auto count_cells(const std::vector<int> & colours) -> int
    {
        int top = -1;
        for (int c : colours)
            top = std::max(top, c);
        return top + 1;
    }

    auto certificate(const std::vector<Vertex> & order) const -> std::string
    {
        std::string cert;
        cert.reserve(static_cast<std::size_t>(_n) * (_n - 1) / 2);
        for (int i = 0; i < _n; ++i)
            for (int j = i + 1; j < _n; ++j)
                cert.push_back(static_cast<char>(_g.label(order[i], order[j])));
        return cert;
    }

    /// u and v can be exchanged by an automorphism fixing all other vertices.
    auto twins(Vertex u, Vertex v) const -> bool
    {
        if (_g.label(u, v) != _g.label(v, u))
            return false;
        for (Vertex w = 0; w < _n; ++w)
            if (w != u && w != v && _g.label(u, w) != _g.label(v, w))
                return false;
        return true;
    }

    void search(std::vector<int> colours, std::vector<std::uint64_t> & path)
    {
        std::uint64_t trace = refine(colours);
        std::size_t depth = path.size();
        path.push_back(trace);
        if (_have_best) {
            // compare the trace sequence with the best one so far, level by level
            if (depth < _best_path.size()) {
                if (trace > _best_path[depth]) {
                    path.pop_back();
                    return;
                }
                if (trace < _best_path[depth]) {
                    _have_best = false;
                    _best_path.resize(depth);
                }
            }
        }

        int cells = count_cells(colours);
        if (cells == _n) {
            std::vector<Vertex> order(_n);
            for (Vertex v = 0; v < _n; ++v)
                order[colours[v]] = v;
            auto cert = certificate(order);
            bool better = ! _have_best || path.size() < _best_path.size() || (path.size() == _best_path.size() && cert < _best_certificate);
            if (better) {
                _have_best = true;
                _best_path = path;
                _best_certificate = std::move(cert);
                _best_order = std::move(order);
            }
            path.pop_back();
            return;
        }
        if (! _have_best && _best_path.size() < path.size())
            _best_path = path;

        // first smallest non-singleton cell
        std::vector<int> sizes(cells, 0);
        for (int c : colours)
            ++sizes[c];
        int target = -1;
        for (int c = 0; c < cells; ++c)
            if (sizes[c] > 1 && (target == -1 || sizes[c] < sizes[target]))
                target = c;

        std::vector<Vertex> tried;
        for (Vertex v = 0; v < _n; ++v) {
            if (colours[v] != target)
                continue;
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); }))
                continue;
            tried.push_back(v);
            std::vector<int> next(_n);
            for (Vertex u = 0; u < _n; ++u)
                next[u] = 2 * colours[u] + (colours[u] == target && u != v ? 1 : 0);
            search(std::move(next), path);
        }
        path.pop_back();
    }

    const NMGraph & _g;
    int _n;
    bool _have_best = false;
    std::vector<std::uint64_t> _best_path;
    std::string _best_certificate;
    std::vector<Vertex> _best_order;
};

} // namespace detail

/// position[v] of every vertex in the canonical order.
inline auto canonical_labeling(const NMGraph & g) -> std::vector<Vertex>
{
    if (g.order() == 0)
        return {};
    return detail::CanonicalLabeller{g}.run();
}

/// The graph relabelled into canonical order; isomorphic inputs give identical graphs.
inline auto canonical_graph(const NMGraph & g) -> NMGraph
{
    auto position = canonical_labeling(g);
    return permute(g, position);
}

/// Byte string that is equal for two graphs exactly when they are label-preserving isomorphic:
/// a small header followed by one label byte per position pair of the canonical order.
inline auto canonical_form(const NMGraph & g) -> std::string
{
    auto canon = canonical_graph(g);
    std::string out = std::to_string(g.params().n) + ":" + std::to_string(g.params().m) + ":" + std::to_string(g.order()) + ":";
    for (Vertex i = 0; i < canon.order(); ++i)
        for (Vertex j = i + 1; j < canon.order(); ++j)
            out.push_back(static_cast<char>(canon.label(i, j)));
    return out;
}

/// Rebuilds a graph from canonical_form output.
inline auto from_canonical_form(const std::string & form) -> NMGraph
{
    std::size_t a = form.find(':'), b = form.find(':', a + 1), c = form.find(':', b + 1);
    Params params{std::stoi(form.substr(0, a)), std::stoi(form.substr(a + 1, b - a - 1))};
    int order = std::stoi(form.substr(b + 1, c - b - 1));
    NMGraph g{params, order};
    std::size_t k = c + 1;
    for (Vertex i = 0; i < order; ++i)
        for (Vertex j = i + 1; j < order; ++j, ++k)
            if (int l = static_cast<unsigned char>(form[k]))
                g.add_adjacency(i, j, l);
    return g;
}

} // namespace nmg
