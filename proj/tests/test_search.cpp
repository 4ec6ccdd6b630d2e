#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmg;
using namespace nmg::testing;

namespace {

/// Isomorphism by trying every permutation.
auto naive_isomorphic(const NMGraph & a, const NMGraph & b) -> bool
{
    if (a.params() != b.params() || a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (permute(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

auto random_permutation(std::mt19937_64 & rng, int order) -> std::vector<Vertex>
{
    std::vector<Vertex> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

auto config(Params params, GraphClass graph_class, int max_order) -> SearchConfig
{
    SearchConfig c;
    c.params = params;
    c.graph_class = graph_class;
    c.max_order = max_order;
    c.time_budget = std::chrono::duration<double>(120.0);
    return c;
}

} // namespace

TEST_CASE("canonical form examples")
{
    auto tri = directed_triangle();
    std::vector<Vertex> rotate{2, 0, 1};
    CHECK(canonical_form(tri) == canonical_form(permute(tri, rotate)));
    auto backwards = make(Params{1, 0}, 3, {{1, 0, 2}, {2, 1, 2}});
    CHECK(canonical_form(directed_path()) == canonical_form(backwards));
    CHECK(canonical_form(directed_path()) != canonical_form(converging_path()));
    CHECK_FALSE(naive_isomorphic(directed_path(), converging_path()));
    CHECK(from_canonical_form(canonical_form(tri)).order() == 3);
    CHECK(canonical_form(NMGraph{Params{1, 0}, 0}) == "1:0:0:");
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng{11};
    const std::vector<Params> params{{1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 4}};
    for (int round = 0; round < 60; ++round) {
        int order = 1 + static_cast<int>(rng() % 12);
        auto g = random_graph(rng, params[round % params.size()], order, 0.1 + 0.8 * (round % 7) / 7.0);
        auto form = canonical_form(g);
        auto decoded = from_canonical_form(form);
        REQUIRE(canonical_form(decoded) == form);
        REQUIRE(decoded.size() == g.size());
        for (int k = 0; k < 100; ++k)
            REQUIRE(canonical_form(permute(g, random_permutation(rng, order))) == form);
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes")
{
    std::mt19937_64 rng{12};
    for (int round = 0; round < 1500; ++round) {
        Params params = round % 2 ? Params{1, 0} : Params{0, 2};
        int order = 2 + static_cast<int>(rng() % 5);
        auto a = random_graph(rng, params, order, 0.5);
        // half the time compare against a relabelled copy with one adjacency possibly changed
        auto b = permute(a, random_permutation(rng, order));
        if (rng() % 2) {
            auto adj = b.adjacencies();
            NMGraph c{params, order};
            for (std::size_t i = 1; i < adj.size(); ++i)
                c.add_adjacency(adj[i].u, adj[i].v, adj[i].label);
            if (! adj.empty())
                c.add_adjacency(adj[0].u, adj[0].v, 1 + static_cast<int>(rng() % params.p()));
            b = c;
        }
        REQUIRE((canonical_form(a) == canonical_form(b)) == naive_isomorphic(a, b));
    }
}

TEST_CASE("verify_witness reports")
{
    auto tri = verify_witness(directed_triangle(), GraphClass::Any);
    CHECK(tri.ok());
    CHECK(tri.order == 3);
    CHECK(tri.bound == 15);

    auto k5 = verify_witness(complete_underlying(5), GraphClass::Planar);
    CHECK_FALSE(k5.class_ok);
    CHECK(k5.complete());
    CHECK_FALSE(k5.ok());

    auto conv = verify_witness(converging_path(), GraphClass::Any);
    CHECK_FALSE(conv.complete());
    CHECK(conv.by_seeing.blame == VertexPair{0, 2});
    CHECK(conv.by_identification.blame == VertexPair{0, 2});

    auto k4 = verify_witness(complete_underlying(4, Params{0, 1}), GraphClass::Planar);
    CHECK(k4.ok());
    CHECK_FALSE(k4.bound.has_value());
}

TEST_CASE("search examples")
{
    auto three = search_extremal(config(Params{1, 0}, GraphClass::Any, 3));
    CHECK(three.best_order == 3);
    CHECK(three.status == SearchStatus::Exhausted);
    CHECK(verify_witness(three.witness, GraphClass::Any).ok());
    CHECK(three.witness.order() == 3);

    auto k4 = search_extremal(config(Params{0, 1}, GraphClass::Planar, 6));
    CHECK(k4.best_order == 4);
    CHECK(k4.status == SearchStatus::Exhausted);
    CHECK(k4.witness == complete_underlying(4, Params{0, 1}));

    CHECK(search_extremal(config(Params{1, 0}, GraphClass::Any, 1)).best_order == 1);
    CHECK_THROWS_AS(search_extremal(config(Params{1, 0}, GraphClass::Any, 0)), Error);
    auto bad = config(Params{1, 0}, GraphClass::Any, 3);
    bad.thread_count = 0;
    CHECK_THROWS_AS(search_extremal(bad), Error);
}

TEST_CASE("the witness is the least canonical form among largest complete graphs")
{
    // every complete (1,0)-graph on 3 vertices is connected, so brute force covers the same space
    std::optional<std::string> least;
    for_each_graph(Params{1, 0}, 3, [&](const NMGraph & g) {
        if (naive_complete(g)) {
            auto form = canonical_form(g);
            if (! least || form < *least)
                least = form;
        }
    });
    REQUIRE(least.has_value());
    CHECK(canonical_form(search_extremal(config(Params{1, 0}, GraphClass::Any, 3)).witness) == *least);
}

TEST_CASE("search agrees with brute force under every pruning combination")
{
    struct Case {
        Params params;
        GraphClass graph_class;
        int max_order;
    };
    const std::vector<Case> cases{
        {{1, 0}, GraphClass::Any, 5},
        {{1, 0}, GraphClass::Planar, 5},
        {{1, 0}, GraphClass::Outerplanar, 5},
        {{0, 2}, GraphClass::Any, 5},
        {{0, 2}, GraphClass::Outerplanar, 5},
        {{1, 1}, GraphClass::Planar, 4},
        {{0, 1}, GraphClass::Planar, 5},
    };
    for (const auto & c : cases) {
        int expected = naive_extremal(c.params, c.graph_class, c.max_order);
        for (int mask = 0; mask < 16; ++mask) {
            auto cfg = config(c.params, c.graph_class, c.max_order);
            cfg.pruning = Pruning{bool(mask & 1), bool(mask & 2), bool(mask & 4), bool(mask & 8)};
            auto outcome = search_extremal(cfg);
            INFO("params (" << c.params.n << "," << c.params.m << ") class " << to_string(c.graph_class) << " pruning mask " << mask);
            REQUIRE(outcome.status == SearchStatus::Exhausted);
            REQUIRE(outcome.best_order == expected);
            REQUIRE(verify_witness(outcome.witness, c.graph_class).ok());
        }
    }
}

TEST_CASE("outerplanar (1,0) golden value")
{
    auto outcome = search_extremal(config(Params{1, 0}, GraphClass::Outerplanar, 8));
    CHECK(outcome.status == SearchStatus::Exhausted);
    CHECK(outcome.best_order == 7);
    CHECK(verify_witness(outcome.witness, GraphClass::Outerplanar).ok());
}

TEST_CASE("search results do not depend on threads or seed")
{
    auto base = config(Params{1, 0}, GraphClass::Planar, 6);
    auto reference = search_extremal(base);
    for (int threads : {1, 2, 4})
        for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
            auto cfg = base;
            cfg.thread_count = threads;
            cfg.seed = seed;
            auto outcome = search_extremal(cfg);
            REQUIRE(outcome.best_order == reference.best_order);
            REQUIRE(write_nmg(outcome.witness) == write_nmg(reference.witness));
            REQUIRE(outcome.frontier_sizes == reference.frontier_sizes);
        }
}

TEST_CASE("a tiny budget reports budget exhaustion with a valid lower bound")
{
    auto cfg = config(Params{1, 1}, GraphClass::Planar, 12);
    cfg.time_budget = std::chrono::duration<double>(0.05);
    auto outcome = search_extremal(cfg);
    CHECK(outcome.status == SearchStatus::BudgetExhausted);
    CHECK(verify_witness(outcome.witness, GraphClass::Planar).ok());
    CHECK(outcome.best_order >= 1);
}

TEST_CASE("cap_at_bound stops at the planar bound")
{
    auto cfg = config(Params{1, 0}, GraphClass::Outerplanar, 40);
    cfg.cap_at_bound = true;
    cfg.time_budget = std::chrono::duration<double>(2.0);
    auto outcome = search_extremal(cfg);
    CHECK(outcome.frontier_sizes.size() <= 16);
    CHECK(outcome.best_order <= 15);
}
