#pragma once

#include <nmg/planarity.hpp>
#include <nmg/seeing.hpp>
#include <nmg/structure.hpp>

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nmg {

struct Quantities {
    int p = 0;
    std::optional<int> k;
    std::optional<int> i;
    std::optional<int> j;
    std::optional<int> s_max;
    std::optional<int> e;
    int order = 0;
};

struct StructureReport {
    std::string input;
    bool valid = false;
    std::string case_name = "inapplicable";
    Quantities quantities;
    std::optional<long long> bound;
    std::vector<InequalityReport> inequalities;
    std::string verdict = "inapplicable";
    std::vector<std::string> notes;

    std::optional<Vertex> dominating_vertex;
    std::optional<Decomposition> decomposition;
    std::optional<RegionAssignment> regions;

    auto order_within_bound() const -> bool { return ! bound || quantities.order <= *bound; }
};

namespace detail {

/// Fewest consecutive C-positions (cyclically) covering every excess vertex.
inline auto excess_window(const RegionAssignment & ra, const VertexSet & excess) -> int
{
    const int k = ra.region_count();
    if (excess.empty())
        return 0;
    int best = k;
    for (int s = 0; s < k; ++s) {
        int span = 0;
        for (Vertex e : excess)
            span = std::max(span, (ra.index_of(e) - s + k) % k + 1);
        best = std::min(best, span);
    }
    return best;
}

} // namespace detail

/// Runs the counting argument on a concrete planar complete graph: finds the dominating pair,
/// decomposes, places private neighbours into regions, picks the first applicable proof case and
/// evaluates its inequalities. Never throws on inputs outside the argument's scope; they come back
/// with valid = false.
inline auto audit(const NMGraph & g, std::string input = "<graph>") -> StructureReport
{
    StructureReport report;
    report.input = std::move(input);
    const int p = g.params().p();
    const long long n = g.order();
    report.quantities.p = p;
    report.quantities.order = g.order();

    if (g.params().excluded()) {
        report.notes.push_back("(n,m) = (0,1) has no order bound");
        return report;
    }
    report.bound = order_bound(g.params());
    const long long bound = *report.bound;

    auto embedding = embed(g);
    bool complete = is_nm_complete(g);
    if (! embedding)
        report.notes.push_back("graph is not planar");
    if (! complete)
        report.notes.push_back("graph is not (n,m)-complete");
    if (! embedding || ! complete)
        return report;
    report.valid = true;
    if (n >= 3 && g.size() != 3 * n - 6)
        report.notes.push_back("graph is not triangulated; arguments assuming a triangulation are evaluated on the graph as given");
    if (p < 3)
        report.notes.push_back("p < 3: case arguments that need 2n+m >= 3 are reported with a false hypothesis");

    auto & ineq = report.inequalities;
    auto add = [&](std::string name, bool hypothesis, long long lhs, long long rhs) {
        ineq.push_back(InequalityReport::make(std::move(name), hypothesis, lhs, rhs));
    };
    auto finish = [&] {
        add("order_within_bound", true, n, bound);
        long long worst = 0;
        bool any = false;
        for (const auto & r : check_pair_intersections(g)) {
            any = true;
            worst = std::max(worst, r.lhs);
        }
        add("pair_intersection_max", any, worst, 3);
        report.verdict = violated(ineq).empty() ? "consistent" : "violation";
    };

    auto domination = dominating_pair(g);
    if (domination.dominating_vertex) {
        report.dominating_vertex = domination.dominating_vertex;
        report.case_name = "dominated";
        finish();
        return report;
    }
    if (! domination.pair) {
        report.case_name = "domination_number_above_two";
        finish();
        return report;
    }

    auto dec = decompose(g, *domination.pair);
    const long long k = dec.pair.k();
    const long long e = static_cast<long long>(dec.excess.size());
    const long long s = static_cast<long long>(dec.private_all().size());
    report.quantities.k = static_cast<int>(k);
    report.quantities.i = dec.i;
    report.quantities.j = dec.j;
    report.quantities.s_max = dec.s_max;
    report.quantities.e = static_cast<int>(e);
    std::optional<RegionAssignment> ra;
    if (k >= 2)
        ra = regions(g, dec.pair, *embedding);
    report.decomposition = dec;
    report.regions = ra;

    for (const auto & r : check_trade_offs(g, dec, ra))
        ineq.push_back(r);

    const bool x_private = dec.i > 0, y_private = dec.j > 0;
    std::set<int> occupied;
    if (ra)
        for (const auto & [v, t] : ra->placement)
            occupied.insert(t);

    if (! x_private && ! y_private) {
        report.case_name = "no_private_neighbours";
        for (const auto & [labels, set] : dec.c_by_labels)
            add("common_label_pair_at_most_3" + detail::bracket({std::to_string(labels.alpha), std::to_string(labels.beta)}), k >= 6,
                static_cast<long long>(set.size()), 3);
        long long cap = std::max(5LL, 3LL * p * p);
        add("common_size", true, k, cap);
        add("order_from_common", true, n, 2 + cap);
    }
    else if (! y_private && k <= 5) {
        report.case_name = "one_side_private_small_common";
        add("private_size", true, s, 15);
    }
    else if (! y_private) {
        report.case_name = "one_side_private_large_common";
        for (int a = 1; a <= p; ++a)
            add("common_and_private_by_label" + detail::bracket({std::to_string(a)}), true,
                static_cast<long long>(dec.c_x.at(a).size() + dec.s_x.at(a).size()), 3LL * p);
        add("order_from_labels", true, n, 2 + 3LL * p * p);
    }
    else if (k <= 2) {
        report.case_name = "both_private_small_common";
    }
    else if (k <= 4 && static_cast<long long>(occupied.size()) == k) {
        report.case_name = "both_private_all_regions";
    }
    else {
        const long long i = dec.i, j = dec.j;
        if (i <= p - 2 || (i == p - 1 && j >= 2) || (i == p - 1 && j == 1 && e <= 4))
            report.case_name = "key_bound_direct";
        else if (i == p - 1 && j == 1)
            report.case_name = "key_bound_single_y_label";
        else if (j < i)
            report.case_name = "key_bound_all_x_labels";
        else
            report.case_name = "key_bound_all_labels";

        const bool pair_trigger = g.adjacent(dec.pair.x, dec.pair.y) || k >= 6;
        const long long key = eval_key_bigC(p, i, j, dec.s_max, e);
        add("excess_at_most_6", true, e, 6);
        add("excess_window", true, detail::excess_window(*ra, dec.excess), 6);
        add("estimate_common", pair_trigger, k - e, eval_estimate_C(p, i, j));
        add("estimate_private", true, s, eval_estimate_S(p, i, j, dec.s_max));
        add("key_bound", e <= 6, n, key);
        if (report.case_name == "key_bound_direct")
            add("key_bound_within_order_bound", p >= 3 && e <= 6, key, bound);
        else if (report.case_name == "key_bound_single_y_label")
            add("key_bound_within_order_bound", p >= 3 && e <= 6 && dec.s_max >= 2, key, bound);
        else if (report.case_name == "key_bound_all_x_labels")
            add("common_all_excess", p >= 3, k - e, 0);
        else
            add("key_bound_excess_allowance", p >= 3 && e <= 6, key, bound + e + 1);
    }
    finish();
    return report;
}

inline auto to_json(const StructureReport & r) -> nlohmann::ordered_json
{
    using nlohmann::ordered_json;
    auto opt = [](const std::optional<int> & v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
    ordered_json q;
    q["p"] = r.quantities.p;
    q["k"] = opt(r.quantities.k);
    q["i"] = opt(r.quantities.i);
    q["j"] = opt(r.quantities.j);
    q["s_max"] = opt(r.quantities.s_max);
    q["E"] = opt(r.quantities.e);
    q["|V|"] = r.quantities.order;

    ordered_json list = ordered_json::array();
    for (const auto & i : r.inequalities)
        list.push_back(ordered_json{{"name", i.name}, {"hypothesis", i.hypothesis_holds}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"ok", i.satisfied}});

    ordered_json out;
    out["input"] = r.input;
    out["valid"] = r.valid;
    out["case"] = r.case_name;
    out["quantities"] = q;
    out["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
    out["inequalities"] = list;
    out["verdict"] = r.verdict;
    out["notes"] = r.notes;
    return out;
}

} // namespace nmg
