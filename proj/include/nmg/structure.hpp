#pragma once

#include <nmg/graph.hpp>
#include <nmg/planarity.hpp>
#include <nmg/seeing.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nmg {

/// A dominating pair {x,y} and its common neighbourhood C.
struct DominatingPair {
    Vertex x;
    Vertex y;
    VertexSet common;

    auto k() const -> int { return static_cast<int>(common.size()); }
};

struct Domination {
    /// Least vertex adjacent to every other vertex, if any.
    std::optional<Vertex> dominating_vertex;
    /// Dominating pair with the most common neighbours (least (x,y) on ties).
    std::optional<DominatingPair> pair;
};

inline auto dominating_pair(const NMGraph & g) -> Domination
{
    Domination result;
    const int n = g.order();
    Row all;
    for (Vertex v = 0; v < n; ++v)
        all.set(v);
    for (Vertex v = 0; v < n && ! result.dominating_vertex; ++v) {
        Row covered = g.neighbours(v);
        covered.set(v);
        if (covered == all)
            result.dominating_vertex = v;
    }
    int best = -1;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            Row covered = g.neighbours(x) | g.neighbours(y);
            covered.set(x);
            covered.set(y);
            if (covered != all)
                continue;
            Row common = g.neighbours(x) & g.neighbours(y);
            int size = static_cast<int>(common.count());
            if (size > best) {
                best = size;
                result.pair = DominatingPair{x, y, to_vertex_set(common, n)};
            }
        }
    return result;
}

/// The C/S/E split of a graph around a dominating pair, normalised so that i >= j.
struct Decomposition {
    DominatingPair pair;
    int p = 0;
    std::map<LabelPair, VertexSet> c_by_labels;
    std::map<int, VertexSet> c_x;
    std::map<int, VertexSet> c_y;
    std::map<int, VertexSet> s_x;
    std::map<int, VertexSet> s_y;
    VertexSet excess;
    int i = 0;
    int j = 0;
    int s_max = 0;
    bool swapped = false;

    auto private_x() const -> VertexSet
    {
        VertexSet out;
        for (const auto & [a, set] : s_x)
            out.insert(out.end(), set.begin(), set.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    auto private_y() const -> VertexSet
    {
        VertexSet out;
        for (const auto & [a, set] : s_y)
            out.insert(out.end(), set.begin(), set.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    auto private_all() const -> VertexSet
    {
        VertexSet out = private_x(), other = private_y();
        out.insert(out.end(), other.begin(), other.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline auto decompose(const NMGraph & g, const DominatingPair & pair) -> Decomposition
{
    const int n = g.order();
    auto check = [&](Vertex v) {
        if (v < 0 || v >= n)
            throw Error(ErrorKind::VertexRange, "pair vertex " + std::to_string(v) + " out of range");
    };
    check(pair.x);
    check(pair.y);
    if (pair.x == pair.y)
        throw Error(ErrorKind::Domain, "a dominating pair needs two distinct vertices");
    for (Vertex v = 0; v < n; ++v)
        if (v != pair.x && v != pair.y && ! g.adjacent(v, pair.x) && ! g.adjacent(v, pair.y))
            throw Error(ErrorKind::Domain, "{" + std::to_string(pair.x) + "," + std::to_string(pair.y) + "} does not dominate vertex " + std::to_string(v));

    const int p = g.params().p();
    auto build = [&](Vertex x, Vertex y) {
        Decomposition d;
        d.p = p;
        Row common = g.neighbours(x) & g.neighbours(y);
        d.pair = DominatingPair{x, y, to_vertex_set(common, n)};
        for (int a = 1; a <= p; ++a) {
            d.c_x[a] = to_vertex_set(common & g.neighbours(x, a), n);
            d.c_y[a] = to_vertex_set(common & g.neighbours(y, a), n);
            Row sx = g.neighbours(x, a) & ~common, sy = g.neighbours(y, a) & ~common;
            sx.reset(y);
            sy.reset(x);
            d.s_x[a] = to_vertex_set(sx, n);
            d.s_y[a] = to_vertex_set(sy, n);
            if (! d.s_x[a].empty())
                ++d.i;
            if (! d.s_y[a].empty())
                ++d.j;
            d.s_max = std::max(d.s_max, static_cast<int>(d.s_y[a].size()));
        }
        for (Vertex c : d.pair.common) {
            int a = g.label(x, c), b = g.label(y, c);
            d.c_by_labels[LabelPair{a, b}].push_back(c);
            if (! d.s_x[a].empty() || ! d.s_y[b].empty())
                d.excess.push_back(c);
        }
        return d;
    };
    auto d = build(pair.x, pair.y);
    if (d.i < d.j) {
        d = build(pair.y, pair.x);
        d.swapped = true;
    }
    return d;
}

/// Regions of the K_{2,k} spanned by x, y and C. c[0..k-1] follow the stored rotation at x and
/// start at the least vertex of C; region t is bounded by x c[t-1] y c[t] (region 0 by x c[k-1] y c[0]).
struct RegionAssignment {
    Vertex x = -1;
    Vertex y = -1;
    VertexSet c;
    std::vector<std::array<Vertex, 4>> boundary;
    std::map<Vertex, int> placement;

    auto region_count() const -> int { return static_cast<int>(c.size()); }
    auto index_of(Vertex v) const -> int
    {
        auto it = std::find(c.begin(), c.end(), v);
        return it == c.end() ? -1 : static_cast<int>(it - c.begin());
    }
    auto adjacent_regions(int a, int b) const -> bool
    {
        int k = region_count();
        if (a == b)
            return false;
        return k == 2 || (a - b + k) % k == 1 || (b - a + k) % k == 1;
    }
    /// C-vertices on the boundary of region t.
    auto boundary_common(int t) const -> std::array<Vertex, 2> { return {boundary[t][1], boundary[t][3]}; }
};

inline auto regions(const NMGraph & g, const DominatingPair & pair, const RotationSystem & rs) -> RegionAssignment
{
    const int k = pair.k();
    if (k < 2)
        throw Error(ErrorKind::Domain, "regions need at least two common neighbours (k = " + std::to_string(k) + ")");
    if (rs.order != g.order())
        throw Error(ErrorKind::Domain, "rotation system does not match the graph");
    std::set<Vertex> in_c(pair.common.begin(), pair.common.end());

    RegionAssignment ra;
    ra.x = pair.x;
    ra.y = pair.y;
    std::vector<Vertex> around;
    for (Vertex w : rs.rotations[pair.x])
        if (in_c.count(w))
            around.push_back(w);
    if (static_cast<int>(around.size()) != k)
        throw Error(ErrorKind::Domain, "rotation at x does not list every common neighbour");
    auto start = std::min_element(around.begin(), around.end());
    std::rotate(around.begin(), start, around.end());
    ra.c = around;
    for (int t = 0; t < k; ++t)
        ra.boundary.push_back({pair.x, ra.c[(t + k - 1) % k], pair.y, ra.c[t]});

    // an S-vertex lies in the region containing the corner its edge to x (or y) leaves from:
    // at x, region t is the corner just before c[t]; at y, the corner just after c[t]
    auto corner_region = [&](Vertex hub, Vertex s, bool at_x) {
        std::vector<Vertex> restricted;
        for (Vertex w : rs.rotations[hub])
            if (in_c.count(w) || w == s)
                restricted.push_back(w);
        auto it = std::find(restricted.begin(), restricted.end(), s);
        std::size_t at = static_cast<std::size_t>(it - restricted.begin()), size = restricted.size();
        Vertex neighbour = at_x ? restricted[(at + 1) % size] : restricted[(at + size - 1) % size];
        return ra.index_of(neighbour);
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        if (s == pair.x || s == pair.y || in_c.count(s))
            continue;
        if (g.adjacent(s, pair.x))
            ra.placement[s] = corner_region(pair.x, s, true);
        else if (g.adjacent(s, pair.y))
            ra.placement[s] = corner_region(pair.y, s, false);
        else
            throw Error(ErrorKind::Domain, "vertex " + std::to_string(s) + " is not dominated by the pair");
    }
    return ra;
}

/// Z ordered from 1-nearest to |Z|-nearest with respect to the boundary edge uv of a region; the
/// reverse order lists the farthest first.
inline auto nearest_order(const NMGraph & g, const RotationSystem & rs, const RegionAssignment & ra, int region, Vertex u, Vertex v, const VertexSet & z)
    -> VertexSet
{
    if (region < 0 || region >= ra.region_count())
        throw Error(ErrorKind::Domain, "region index out of range");
    for (Vertex w : z)
        if (! g.adjacent(w, u) || ! g.adjacent(w, v))
            throw Error(ErrorKind::Domain, "vertex " + std::to_string(w) + " is not adjacent to both ends of the boundary edge");
    if (z.empty())
        return {};
    const auto & b = ra.boundary[region];
    // boundary darts of the region in tracing order: c[t-1]->x, x->c[t], c[t]->y, y->c[t-1]
    const std::array<std::pair<Vertex, Vertex>, 4> darts{{{b[1], b[0]}, {b[0], b[3]}, {b[3], b[2]}, {b[2], b[1]}}};
    bool arrive = std::find(darts.begin(), darts.end(), std::pair{v, u}) != darts.end();
    bool leave = std::find(darts.begin(), darts.end(), std::pair{u, v}) != darts.end();
    if (! arrive && ! leave)
        throw Error(ErrorKind::Domain, "uv is not a boundary edge of the region");

    std::set<Vertex> members(z.begin(), z.end());
    VertexSet ordered;
    // the face wedge at u opens from v in successor direction when the face arrives at u from v
    Vertex w = v;
    for (std::size_t step = 0; step < rs.rotations[u].size() && ordered.size() < z.size(); ++step) {
        w = arrive ? rotation_successor(rs, u, w) : rotation_predecessor(rs, u, w);
        if (members.count(w))
            ordered.push_back(w);
    }
    return ordered;
}

/// |C \ E| <= 3(p-i)(p-j).
inline auto eval_estimate_C(long long p, long long i, long long j) -> long long
{
    return 3 * (p - i) * (p - j);
}

/// |S| <= 3pi + j - (i-j) s_max; needs i >= j.
inline auto eval_estimate_S(long long p, long long i, long long j, long long s_max) -> long long
{
    if (i < j)
        throw Error(ErrorKind::Domain, "estimate needs i >= j (swap x and y first)");
    return 3 * p * i + j - (i - j) * s_max;
}

/// Upper bound on |V| in the both-sides-private case with |C| >= 3.
inline auto eval_key_bigC(long long p, long long i, long long j, long long s_max, long long e) -> long long
{
    if (i < j)
        throw Error(ErrorKind::Domain, "bound needs i >= j (swap x and y first)");
    return (3 * p * p + p + 1) - (3 * j * (p - i) + p + (i - j) * s_max - j - e - 1);
}

struct InequalityReport {
    std::string name;
    bool hypothesis_holds = false;
    long long lhs = 0;
    long long rhs = 0;
    bool satisfied = true;

    static auto make(std::string name, bool hypothesis, long long lhs, long long rhs) -> InequalityReport
    {
        return InequalityReport{std::move(name), hypothesis, lhs, rhs, ! hypothesis || lhs <= rhs};
    }
};

inline auto violated(const std::vector<InequalityReport> & reports) -> std::vector<InequalityReport>
{
    std::vector<InequalityReport> out;
    for (const auto & r : reports)
        if (! r.satisfied)
            out.push_back(r);
    return out;
}

namespace detail {

inline auto bracket(std::initializer_list<std::string> parts) -> std::string
{
    std::string out = "[";
    bool first = true;
    for (const auto & part : parts) {
        if (! first)
            out += ",";
        out += part;
        first = false;
    }
    return out + "]";
}

} // namespace detail

/// In a planar complete graph, a pair that is adjacent or has six or more common neighbours has at
/// most three common vertices under any fixed label pair. One report per triggering pair and
/// label pair with a non-empty intersection.
inline auto check_pair_intersections(const NMGraph & g) -> std::vector<InequalityReport>
{
    std::vector<InequalityReport> reports;
    const bool gate = is_planar(g) && is_nm_complete(g);
    const int p = g.params().p();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            bool triggered = g.adjacent(u, v) || (g.neighbours(u) & g.neighbours(v)).count() >= 6;
            if (! triggered)
                continue;
            for (int a = 1; a <= p; ++a)
                for (int b = 1; b <= p; ++b) {
                    auto count = static_cast<long long>((g.neighbours(u, a) & g.neighbours(v, b)).count());
                    if (count == 0)
                        continue;
                    reports.push_back(InequalityReport::make(
                        "pair_intersection" + detail::bracket({std::to_string(u), std::to_string(v), std::to_string(a), std::to_string(b)}), gate, count, 3));
                }
        }
    return reports;
}

/// Size trade-offs between common and private neighbourhoods, and how private neighbours spread
/// over regions. Region-dependent checks need `ra`; without it they are reported with a false
/// hypothesis.
inline auto check_trade_offs(const NMGraph & g, const Decomposition & dec, const std::optional<RegionAssignment> & ra) -> std::vector<InequalityReport>
{
    std::vector<InequalityReport> reports;
    const bool gate = is_planar(g) && is_nm_complete(g);
    const int p = dec.p;
    const long long k = dec.pair.k();
    const bool both = dec.i > 0 && dec.j > 0;
    auto size = [](const std::map<int, VertexSet> & m, int a) { return static_cast<long long>(m.at(a).size()); };

    // private neighbours cannot crowd a label already crowded among common neighbours
    for (int side = 0; side < 2; ++side) {
        const auto & cs = side == 0 ? dec.c_x : dec.c_y;
        const auto & ss = side == 0 ? dec.s_x : dec.s_y;
        std::string t = side == 0 ? "x" : "y";
        for (int a = 1; a <= p; ++a) {
            auto c = size(cs, a), s = size(ss, a);
            std::string at = detail::bracket({t, std::to_string(a)});
            reports.push_back(InequalityReport::make("no_private_beside_five_common" + at, gate && c >= 5, s, 0));
            reports.push_back(InequalityReport::make("two_private_beside_four_common" + at, gate && c >= 4, s, 2));
            reports.push_back(InequalityReport::make("one_private_beside_four_common_when_five_shared" + at, gate && c >= 4 && k >= 5, s, 1));
        }
    }

    std::set<int> occupied;
    if (ra)
        for (const auto & [v, t] : ra->placement)
            occupied.insert(t);
    const bool not_all_regions = ra && static_cast<long long>(occupied.size()) < k;

    long long max_sx = 0;
    for (int a = 1; a <= p; ++a)
        max_sx = std::max(max_sx, size(dec.s_x, a));
    for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= p; ++b) {
            auto uni = size(dec.s_x, a) + size(dec.s_y, b);
            reports.push_back(InequalityReport::make(
                "private_union_bound" + detail::bracket({std::to_string(a), std::to_string(b)}), gate && k >= 3 && not_all_regions, uni, 3LL * p + 1));
        }
    for (int a = 1; a <= p; ++a) {
        std::string at = detail::bracket({std::to_string(a)});
        reports.push_back(InequalityReport::make("private_x_against_largest_private_y" + at, gate && k >= 3 && both, size(dec.s_x, a), 3LL * p + 1 - dec.s_max));
        reports.push_back(InequalityReport::make("private_y_against_largest_private_x" + at, gate && k >= 3 && both, size(dec.s_y, a), 3LL * p + 1 - max_sx));
        reports.push_back(InequalityReport::make("private_x_at_most_3p" + at, gate && k >= 3 && both, size(dec.s_x, a), 3LL * p));
        reports.push_back(InequalityReport::make("private_y_at_most_3p" + at, gate && k >= 3 && both, size(dec.s_y, a), 3LL * p));
    }

    const bool have_regions = ra.has_value();
    auto region_of = [&](Vertex v) { return ra->placement.at(v); };
    auto near = [&](int a, int b) { return a == b || ra->adjacent_regions(a, b); };

    // a private union sits in at most two regions, and two such regions are adjacent
    for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= p; ++b) {
            std::set<int> spread;
            if (have_regions) {
                for (Vertex v : dec.s_x.at(a))
                    spread.insert(region_of(v));
                for (Vertex v : dec.s_y.at(b))
                    spread.insert(region_of(v));
            }
            long long far = spread.size() == 2 && ! near(*spread.begin(), *spread.rbegin()) ? 1 : 0;
            std::string at = detail::bracket({std::to_string(a), std::to_string(b)});
            reports.push_back(InequalityReport::make("private_union_region_count" + at, gate && have_regions && k >= 4, static_cast<long long>(spread.size()), 2));
            reports.push_back(InequalityReport::make("private_union_regions_adjacent" + at, gate && have_regions && k >= 4, far, 0));
        }

    // pairs that cannot see through x or y stay in the same or adjacent regions
    long long cross = 0, same_label = 0, private_common = 0;
    if (have_regions) {
        auto sx = dec.private_x(), sy = dec.private_y();
        for (Vertex u : sx)
            for (Vertex v : sy)
                if (! near(region_of(u), region_of(v)))
                    ++cross;
        for (const auto * side : {&dec.s_x, &dec.s_y})
            for (const auto & [a, set] : *side)
                for (std::size_t s = 0; s < set.size(); ++s)
                    for (std::size_t t = s + 1; t < set.size(); ++t)
                        if (! near(region_of(set[s]), region_of(set[t])))
                            ++same_label;
        const int kk = ra->region_count();
        for (int side = 0; side < 2; ++side) {
            const auto & ss = side == 0 ? dec.s_x : dec.s_y;
            const auto & cs = side == 0 ? dec.c_x : dec.c_y;
            for (int a = 1; a <= p; ++a)
                for (Vertex u : ss.at(a)) {
                    int r = region_of(u);
                    std::set<Vertex> allowed;
                    for (int d = -2; d <= 1; ++d)
                        allowed.insert(ra->c[((r + d) % kk + kk) % kk]);
                    for (Vertex c : cs.at(a))
                        if (! allowed.count(c))
                            ++private_common;
                }
        }
    }
    reports.push_back(InequalityReport::make("private_cross_pairs_in_near_regions", gate && have_regions, cross, 0));
    reports.push_back(InequalityReport::make("same_label_private_pairs_in_near_regions", gate && have_regions, same_label, 0));
    reports.push_back(InequalityReport::make("same_label_common_near_private_region", gate && have_regions, private_common, 0));
    return reports;
}

} // namespace nmg
