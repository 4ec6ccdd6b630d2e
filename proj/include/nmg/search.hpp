#pragma once

#include <nmg/canonical.hpp>
#include <nmg/graph.hpp>
#include <nmg/homomorphism.hpp>
#include <nmg/io.hpp>
#include <nmg/planarity.hpp>
#include <nmg/seeing.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

namespace nmg {

enum class GraphClass { Planar, Outerplanar, Any };

inline auto to_string(GraphClass c) -> std::string
{
    switch (c) {
    case GraphClass::Planar: return "planar";
    case GraphClass::Outerplanar: return "outerplanar";
    case GraphClass::Any: return "any";
    }
    return "any";
}

inline auto parse_graph_class(std::string_view name) -> GraphClass
{
    if (name == "planar")
        return GraphClass::Planar;
    if (name == "outerplanar")
        return GraphClass::Outerplanar;
    if (name == "any")
        return GraphClass::Any;
    throw Error(ErrorKind::Domain, "unknown graph class '" + std::string(name) + "' (expected planar, outerplanar or any)");
}

inline auto in_class(const NMGraph & g, GraphClass c) -> bool
{
    switch (c) {
    case GraphClass::Planar: return is_planar(g);
    case GraphClass::Outerplanar: return is_outerplanar(g);
    case GraphClass::Any: return true;
    }
    return true;
}

struct WitnessReport {
    GraphClass graph_class = GraphClass::Any;
    bool class_ok = false;
    CompletenessResult by_seeing;
    CompletenessResult by_identification;
    int order = 0;
    /// Absent for (n,m) = (0,1).
    std::optional<long long> bound;
    bool within_bound = true;

    auto complete() const -> bool { return by_seeing.complete && by_identification.complete; }
    auto ok() const -> bool { return class_ok && complete() && within_bound; }
};

/// Independent re-check of a claimed extremal graph: class membership, completeness by both
/// checkers, and the order against the planar bound (when the class is planar or outerplanar).
inline auto verify_witness(const NMGraph & g, GraphClass graph_class) -> WitnessReport
{
    WitnessReport report;
    report.graph_class = graph_class;
    report.class_ok = in_class(g, graph_class);
    report.by_seeing = is_nm_complete_by_seeing(g);
    report.by_identification = is_nm_complete_by_identification(g);
    report.order = g.order();
    if (! g.params().excluded()) {
        report.bound = order_bound(g.params());
        if (graph_class != GraphClass::Any && report.class_ok && report.complete())
            report.within_bound = g.order() <= *report.bound;
    }
    return report;
}

/// Individual pruning rules; switching one off must never change best_order.
struct Pruning {
    bool pair_intersection = true;
    bool edge_count = true;
    bool isomorphism = true;
    bool repairability = true;
};

struct SearchConfig {
    Params params{1, 0};
    GraphClass graph_class = GraphClass::Any;
    int max_order = 1;
    std::chrono::duration<double> time_budget{60.0};
    int thread_count = 1;
    std::uint64_t seed = 0;
    /// For planar classes, stop at order_bound(params) instead of max_order.
    bool cap_at_bound = false;
    Pruning pruning;
};

enum class SearchStatus { Exhausted, BudgetExhausted };

inline auto to_string(SearchStatus s) -> std::string
{
    return s == SearchStatus::Exhausted ? "exhausted" : "budget_exhausted";
}

struct SearchOutcome {
    int best_order = 0;
    NMGraph witness;
    SearchStatus status = SearchStatus::Exhausted;
    std::uint64_t nodes_explored = 0;
    /// Graphs kept (after deduplication) at each order, index = order.
    std::vector<std::uint64_t> frontier_sizes;
};

namespace detail {

/// Non-empty subsets of {0..k-1} in lexicographic order of their sorted member lists.
inline auto lexicographic_subsets(int k) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result;
    std::vector<Vertex> current;
    auto rec = [&](auto & self, Vertex from) -> void {
        for (Vertex v = from; v < k; ++v) {
            current.push_back(v);
            result.push_back(current);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

inline auto underlying_key(const NMGraph & g) -> std::uint64_t
{
    std::uint64_t key = 0;
    int bit = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v, ++bit)
            if (g.adjacent(u, v))
                key |= std::uint64_t{1} << bit;
    return key;
}

inline auto plain_encoding(const NMGraph & g) -> std::string
{
    std::string out = std::to_string(g.params().n) + ":" + std::to_string(g.params().m) + ":" + std::to_string(g.order()) + ":";
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j)
            out.push_back(static_cast<char>(g.label(i, j)));
    return out;
}

class ExtremalSearcher {
public:
    explicit ExtremalSearcher(const SearchConfig & config) : _config(config), _p(config.params.p()) {}

    auto run() -> SearchOutcome
    {
        auto start = std::chrono::steady_clock::now();
        _deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(_config.time_budget);

        int target = _config.max_order;
        if (_config.cap_at_bound && _config.graph_class != GraphClass::Any && ! _config.params.excluded())
            target = static_cast<int>(std::min<long long>(target, order_bound(_config.params)));

        SearchOutcome outcome;
        outcome.best_order = 1;
        outcome.witness = NMGraph{_config.params, 1};
        outcome.frontier_sizes = {0, 1};

        std::vector<std::string> frontier{encode(NMGraph{_config.params, 1})};
        for (int order = 1; order < target && ! frontier.empty(); ++order) {
            bool last = order + 1 == target;
            auto level = extend_level(frontier, order, target, last);
            outcome.nodes_explored += level.nodes;
            if (level.best_complete) {
                outcome.best_order = order + 1;
                outcome.witness = from_canonical_form(*level.best_complete);
            }
            if (level.timed_out) {
                outcome.status = SearchStatus::BudgetExhausted;
                break;
            }
            frontier = std::move(level.children);
            outcome.frontier_sizes.push_back(last ? level.complete_count : frontier.size());
        }
        if (! verify_witness(outcome.witness, _config.graph_class).ok() || outcome.witness.order() != outcome.best_order)
            throw Error(ErrorKind::Domain, "internal error: search witness failed re-verification");
        return outcome;
    }

private:
    struct LevelResult {
        std::vector<std::string> children;
        std::optional<std::string> best_complete;
        std::uint64_t nodes = 0;
        std::uint64_t complete_count = 0;
        bool timed_out = false;
    };

    auto encode(const NMGraph & g) const -> std::string
    {
        return _config.pruning.isomorphism ? canonical_form(g) : plain_encoding(g);
    }

    auto extend_level(const std::vector<std::string> & frontier, int order, int target, bool last) -> LevelResult
    {
        auto subsets = lexicographic_subsets(order);
        int threads = std::max(1, std::min<int>(_config.thread_count, static_cast<int>(frontier.size())));

        // work is dealt out in seed-shuffled chunks; results are merged in sorted order afterwards
        std::vector<std::size_t> chunks;
        const std::size_t chunk = 64;
        for (std::size_t s = 0; s < frontier.size(); s += chunk)
            chunks.push_back(s);
        std::mt19937_64 rng{_config.seed};
        std::shuffle(chunks.begin(), chunks.end(), rng);

        std::atomic<std::size_t> next_chunk{0};
        std::atomic<bool> timed_out{false};
        std::vector<LevelResult> partial(threads);

        auto worker = [&](int t) {
            auto & mine = partial[t];
            std::unordered_map<std::uint64_t, bool> class_cache;
            std::uint64_t counter = 0;
            while (! timed_out.load()) {
                std::size_t c = next_chunk.fetch_add(1);
                if (c >= chunks.size())
                    break;
                for (std::size_t idx = chunks[c]; idx < std::min(chunks[c] + chunk, frontier.size()); ++idx) {
                    NMGraph parent = from_canonical_form(frontier[idx]);
                    extend_parent(parent, subsets, target, last, mine, class_cache, counter);
                    if (std::chrono::steady_clock::now() > _deadline) {
                        timed_out.store(true);
                        break;
                    }
                }
            }
        };

        if (threads == 1)
            worker(0);
        else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker, t);
            for (auto & th : pool)
                th.join();
        }

        LevelResult merged;
        merged.timed_out = timed_out.load();
        for (auto & part : partial) {
            merged.nodes += part.nodes;
            merged.complete_count += part.complete_count;
            if (part.best_complete && (! merged.best_complete || *part.best_complete < *merged.best_complete))
                merged.best_complete = part.best_complete;
            merged.children.insert(merged.children.end(), std::make_move_iterator(part.children.begin()), std::make_move_iterator(part.children.end()));
        }
        std::sort(merged.children.begin(), merged.children.end());
        merged.children.erase(std::unique(merged.children.begin(), merged.children.end()), merged.children.end());
        if (! _config.pruning.isomorphism && merged.best_complete)
            merged.best_complete = canonical_form(from_canonical_form(*merged.best_complete));
        return merged;
    }

    auto class_ok(const NMGraph & g, std::unordered_map<std::uint64_t, bool> & cache) const -> bool
    {
        if (_config.graph_class == GraphClass::Any)
            return true;
        int k = g.order();
        if (_config.pruning.edge_count) {
            if (_config.graph_class == GraphClass::Planar && k > 2 && g.size() > 3 * k - 6)
                return false;
            if (_config.graph_class == GraphClass::Outerplanar && k > 1 && g.size() > 2 * k - 3)
                return false;
        }
        if (k * (k - 1) / 2 <= 64) {
            auto key = underlying_key(g);
            if (auto it = cache.find(key); it != cache.end())
                return it->second;
            bool ok = in_class(g, _config.graph_class);
            if (cache.size() > (1u << 22))
                cache.clear();
            cache.emplace(key, ok);
            return ok;
        }
        return in_class(g, _config.graph_class);
    }

    /// Whether every non-seeing pair can still gain a common neighbour among `remaining` vertices
    /// still to be added while staying in the class.
    auto repairable(const NMGraph & g, int remaining, std::unordered_map<std::uint64_t, bool> & cache) const -> bool
    {
        auto pairs = non_seeing_pairs(g);
        if (pairs.empty())
            return true;
        if (remaining == 0 || _p < 2)
            return false;
        if (_config.graph_class == GraphClass::Any)
            return true;

        if (remaining == 1) {
            // the last vertex must be adjacent to every vertex of a non-seeing pair and give the two
            // ends different labels: a proper p-colouring of the non-seeing pairs
            Row involved;
            for (auto [u, v] : pairs) {
                involved.set(u);
                involved.set(v);
            }
            NMGraph extended = with_new_vertex(g, involved);
            if (! in_class(extended, _config.graph_class))
                return false;
            return colourable(g.order(), pairs, _p);
        }

        for (auto [u, v] : pairs) {
            Row ends;
            ends.set(u);
            ends.set(v);
            if (! class_ok(with_new_vertex(g, ends), cache))
                return false;
        }
        return true;
    }

    static auto with_new_vertex(const NMGraph & g, const Row & attach) -> NMGraph
    {
        NMGraph extended{g.params(), g.order() + 1};
        for (const auto & [a, b, l] : g.adjacencies())
            extended.add_adjacency(a, b, l);
        for (Vertex v = 0; v < g.order(); ++v)
            if (attach.test(v))
                extended.add_adjacency(g.order(), v, 1);
        return extended;
    }

    static auto colourable(int order, const std::vector<VertexPair> & pairs, int colours) -> bool
    {
        std::vector<std::vector<Vertex>> adj(order);
        for (auto [u, v] : pairs) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<int> colour(order, -1);
        auto rec = [&](auto & self, Vertex v) -> bool {
            if (v == order)
                return true;
            if (adj[v].empty())
                return self(self, v + 1);
            for (int c = 0; c < colours; ++c) {
                bool clash = false;
                for (Vertex w : adj[v])
                    if (colour[w] == c)
                        clash = true;
                if (clash)
                    continue;
                colour[v] = c;
                if (self(self, v + 1))
                    return true;
                colour[v] = -1;
            }
            return false;
        };
        return rec(rec, 0);
    }

    void extend_parent(const NMGraph & parent, const std::vector<std::vector<Vertex>> & subsets, int target, bool last, LevelResult & out,
        std::unordered_map<std::uint64_t, bool> & cache, std::uint64_t & counter) const
    {
        const int k = parent.order();
        const bool planar_family = _config.graph_class != GraphClass::Any;
        const int remaining = target - (k + 1);
        NMGraph base{_config.params, k + 1};
        for (const auto & [a, b, l] : parent.adjacencies())
            base.add_adjacency(a, b, l);

        for (const auto & subset : subsets) {
            NMGraph shape = base;
            for (Vertex v : subset)
                shape.add_adjacency(k, v, 1);
            if (! class_ok(shape, cache))
                continue;

            std::vector<int> labels(subset.size(), 1);
            while (true) {
                NMGraph child = base;
                for (std::size_t i = 0; i < subset.size(); ++i)
                    child.add_adjacency(k, subset[i], labels[i]);
                ++out.nodes;
                ++counter;
                consider(child, remaining, last, planar_family, out, cache);

                std::size_t i = labels.size();
                while (i > 0 && labels[i - 1] == _p)
                    labels[--i] = 1;
                if (i == 0)
                    break;
                ++labels[i - 1];
            }
        }
    }

    void consider(const NMGraph & child, int remaining, bool last, bool planar_family, LevelResult & out, std::unordered_map<std::uint64_t, bool> & cache) const
    {
        if (planar_family && _config.pruning.pair_intersection) {
            Row all;
            for (Vertex v = 0; v < child.order(); ++v)
                all.set(v);
            if (violates_pair_intersection_bound(child, all))
                return;
        }
        bool complete = is_nm_complete(child);
        if (complete) {
            ++out.complete_count;
            auto form = canonical_form(child);
            if (! out.best_complete || form < *out.best_complete)
                out.best_complete = std::move(form);
        }
        if (last)
            return;
        if (! complete && _config.pruning.repairability && ! repairable(child, remaining, cache))
            return;
        out.children.push_back(encode(child));
    }

    const SearchConfig & _config;
    int _p;
    std::chrono::steady_clock::time_point _deadline;
};

} // namespace detail

/// Largest order of an (n,m)-complete graph in the class with at most max_order vertices.
/// Connected graphs are generated vertex by vertex (one representative per isomorphism class per
/// order), so with status Exhausted the answer is exact; otherwise it is a lower bound.
inline auto search_extremal(const SearchConfig & config) -> SearchOutcome
{
    if (config.max_order < 1 || config.max_order > kMaxOrder)
        throw Error(ErrorKind::Domain, "max_order must lie in [1," + std::to_string(kMaxOrder) + "]");
    if (config.thread_count < 1)
        throw Error(ErrorKind::Domain, "thread_count must be at least 1");
    if (config.time_budget.count() <= 0)
        throw Error(ErrorKind::Domain, "time budget must be positive");
    if (config.params.n < 0 || config.params.m < 0 || config.params.n + config.params.m < 1)
        throw Error(ErrorKind::Domain, "invalid parameters");
    return detail::ExtremalSearcher{config}.run();
}

} // namespace nmg
