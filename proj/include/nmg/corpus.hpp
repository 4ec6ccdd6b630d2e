#pragma once

#include <nmg/audit.hpp>
#include <nmg/io.hpp>
#include <nmg/search.hpp>
#include <nmg/structure.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace nmg {

/// One `manifest.tsv` row: file, n, m, class, claimed order (tab or space separated).
struct ManifestRow {
    std::string file;
    int n = 0;
    int m = 0;
    GraphClass graph_class = GraphClass::Any;
    int claimed_order = 0;
    int line = 0;
};

inline auto parse_manifest(const std::string & text) -> std::vector<ManifestRow>
{
    std::vector<ManifestRow> rows;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::vector<std::string> parts;
        for (std::string f; fields >> f;)
            parts.push_back(f);
        if (parts.empty() || parts[0][0] == '#')
            continue;
        if (parts[0] == "file")
            continue;
        if (parts.size() != 5)
            throw ParseError(number, 1, "manifest row needs 5 fields: file n m class claimed_order");
        ManifestRow row;
        row.file = parts[0];
        row.line = number;
        try {
            std::size_t used = 0;
            auto field = [&](const std::string & s) {
                int v = std::stoi(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(s);
                return v;
            };
            row.n = field(parts[1]);
            row.m = field(parts[2]);
            row.claimed_order = field(parts[4]);
        }
        catch (const std::exception &) {
            throw ParseError(number, 1, "manifest row has a non-integer n, m or claimed_order");
        }
        try {
            row.graph_class = parse_graph_class(parts[3]);
        }
        catch (const Error & e) {
            throw ParseError(number, 1, e.what());
        }
        rows.push_back(row);
    }
    return rows;
}

struct CorpusRowResult {
    ManifestRow row;
    bool ok = false;
    std::optional<WitnessReport> witness;
    std::optional<StructureReport> audit;
    std::vector<std::string> problems;
};

/// Certifies one manifest row: the file parses with the stated parameters and order, passes
/// verify_witness, and, for planar graphs, the pair-intersection, trade-off and audit checks.
inline auto verify_corpus_row(const std::filesystem::path & dir, const ManifestRow & row) -> CorpusRowResult
{
    CorpusRowResult result;
    result.row = row;
    NMGraph g;
    try {
        g = read_nmg_file((dir / row.file).string());
    }
    catch (const std::exception & e) {
        result.problems.push_back(std::string("cannot read: ") + e.what());
        return result;
    }
    if (g.params().n != row.n || g.params().m != row.m)
        result.problems.push_back("file parameters differ from the manifest");
    if (g.order() != row.claimed_order)
        result.problems.push_back("order " + std::to_string(g.order()) + " differs from claimed " + std::to_string(row.claimed_order));
    result.witness = verify_witness(g, row.graph_class);
    if (! result.witness->class_ok)
        result.problems.push_back("not " + to_string(row.graph_class));
    if (! result.witness->complete())
        result.problems.push_back("not (n,m)-complete");
    if (! result.witness->within_bound)
        result.problems.push_back("order exceeds the planar bound");

    if (result.witness->complete() && is_planar(g) && ! g.params().excluded()) {
        for (const auto & r : violated(check_pair_intersections(g)))
            result.problems.push_back("violated " + r.name);
        auto report = audit(g, row.file);
        if (report.decomposition)
            for (const auto & r : violated(check_trade_offs(g, *report.decomposition, report.regions)))
                result.problems.push_back("violated " + r.name);
        if (! report.order_within_bound())
            result.problems.push_back("audit: order exceeds bound");
        if (report.verdict == "violation")
            for (const auto & r : violated(report.inequalities))
                result.problems.push_back("audit (" + report.case_name + ") violated " + r.name);
        result.audit = std::move(report);
    }
    result.ok = result.problems.empty();
    return result;
}

inline auto verify_corpus(const std::filesystem::path & dir) -> std::vector<CorpusRowResult>
{
    std::ifstream in(dir / "manifest.tsv");
    if (! in)
        throw Error(ErrorKind::Domain, "no manifest.tsv in " + dir.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<CorpusRowResult> results;
    for (const auto & row : parse_manifest(buffer.str()))
        results.push_back(verify_corpus_row(dir, row));
    return results;
}

} // namespace nmg
