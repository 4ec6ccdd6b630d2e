#pragma once

#include <nmg/nmg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nmg::cli {

enum Exit : int { ok = 0, property_false = 1, usage = 2, budget = 3 };

namespace detail {

using json = nlohmann::ordered_json;

struct JsonTarget {
    CLI::Option * option = nullptr;
    std::string path;

    auto requested() const -> bool { return option && option->count() > 0; }
    auto to_stdout() const -> bool { return requested() && path.empty(); }

    /// Emits the document; the caller prints human output unless it went to stdout.
    void emit(const json & doc, std::ostream & out) const
    {
        if (! requested())
            return;
        if (path.empty()) {
            out << doc.dump(2) << "\n";
            return;
        }
        std::ofstream file(path);
        if (! file)
            throw Error(ErrorKind::Domain, "cannot write " + path);
        file << doc.dump(2) << "\n";
    }
};

inline auto add_json(CLI::App * app, JsonTarget & target) -> void
{
    target.option = app->add_option("--json", target.path, "write JSON to PATH, or to stdout when PATH is omitted")->expected(0, 1);
}

inline auto yes(bool b) -> std::string { return b ? "yes" : "no"; }

inline auto pair_json(const std::optional<VertexPair> & pair) -> json
{
    if (! pair)
        return nullptr;
    return json::array({pair->first, pair->second});
}

inline auto vertex_list(const VertexSet & set) -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i)
        out += (i ? " " : "") + std::to_string(set[i]);
    return out + "}";
}

inline auto witness_json(const WitnessReport & r) -> json
{
    json doc;
    doc["class"] = to_string(r.graph_class);
    doc["class_ok"] = r.class_ok;
    doc["complete_by_seeing"] = r.by_seeing.complete;
    doc["complete_by_identification"] = r.by_identification.complete;
    doc["blame"] = pair_json(r.by_seeing.blame);
    doc["order"] = r.order;
    doc["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    doc["within_bound"] = r.within_bound;
    doc["ok"] = r.ok();
    return doc;
}

inline void print_witness(const WitnessReport & r, std::ostream & out)
{
    out << to_string(r.graph_class) << ": " << yes(r.class_ok) << "\n";
    out << "complete: " << yes(r.complete());
    if (r.by_seeing.blame)
        out << " (" << r.by_seeing.blame->first << " and " << r.by_seeing.blame->second << " do not see each other)";
    out << "\n";
    out << "order: " << r.order;
    if (r.bound)
        out << " (bound " << *r.bound << (r.within_bound ? "" : ", exceeded") << ")";
    out << "\n";
}

} // namespace detail

/// Runs one command line; returns the process exit code.
inline auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    using detail::json;
    CLI::App app{"Tools for (n,m)-graphs: completeness, homomorphisms, extremal search and structure audits", "nmg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    int bound_n = 0, bound_m = 0;
    auto * bound = app.add_subcommand("bound", "print 3p^2+p+1 with p = 2n+m");
    bound->add_option("n", bound_n)->required();
    bound->add_option("m", bound_m)->required();

    std::string verify_file, verify_class = "any";
    detail::JsonTarget verify_json;
    auto * verify = app.add_subcommand("verify", "check class membership, completeness and the order bound");
    verify->add_option("file", verify_file)->required();
    verify->add_option("--class", verify_class)->check(CLI::IsMember({"planar", "outerplanar", "any"}));
    detail::add_json(verify, verify_json);

    std::string sees_file;
    int sees_u = 0, sees_v = 0;
    detail::JsonTarget sees_json;
    auto * sees_cmd = app.add_subcommand("sees", "show why two vertices see each other, or NONE");
    sees_cmd->add_option("file", sees_file)->required();
    sees_cmd->add_option("u", sees_u)->required();
    sees_cmd->add_option("v", sees_v)->required();
    detail::add_json(sees_cmd, sees_json);

    std::string hom_g, hom_h;
    detail::JsonTarget hom_json;
    auto * hom = app.add_subcommand("hom", "find the least homomorphism from the first graph to the second");
    hom->add_option("gfile", hom_g)->required();
    hom->add_option("hfile", hom_h)->required();
    detail::add_json(hom, hom_json);

    std::string chi_file;
    std::optional<int> chi_limit;
    detail::JsonTarget chi_json;
    auto * chi = app.add_subcommand("chi", "chromatic number: fewest vertices of a homomorphic image");
    chi->add_option("file", chi_file)->required();
    chi->add_option("--limit", chi_limit)->check(CLI::PositiveNumber);
    detail::add_json(chi, chi_json);

    std::string clique_file;
    detail::JsonTarget clique_json;
    auto * clique = app.add_subcommand("clique", "largest vertex set inducing a complete graph");
    clique->add_option("file", clique_file)->required();
    detail::add_json(clique, clique_json);

    int search_n = 0, search_m = 0, search_max = 0, search_threads = 1;
    std::uint64_t search_seed = 0;
    double search_budget = 60.0;
    std::string search_class, search_out = "witness.nmg";
    bool search_cap = false;
    detail::JsonTarget search_json;
    auto * search = app.add_subcommand("search", "largest complete graph of a class up to a given order");
    search->add_option("--n", search_n)->required();
    search->add_option("--m", search_m)->required();
    search->add_option("--class", search_class)->required()->check(CLI::IsMember({"planar", "outerplanar", "any"}));
    search->add_option("--max-order", search_max)->required();
    search->add_option("--budget", search_budget, "seconds")->capture_default_str();
    search->add_option("--threads", search_threads)->capture_default_str();
    search->add_option("--seed", search_seed)->capture_default_str();
    search->add_option("--out", search_out, "where to write the witness")->capture_default_str();
    search->add_flag("--cap-at-bound", search_cap, "for planar classes stop at 3p^2+p+1");
    detail::add_json(search, search_json);

    std::string audit_file;
    detail::JsonTarget audit_json;
    auto * audit_cmd = app.add_subcommand("audit", "evaluate the counting argument on a planar complete graph");
    audit_cmd->add_option("file", audit_file)->required();
    detail::add_json(audit_cmd, audit_json);

    std::string corpus_dir;
    detail::JsonTarget corpus_json;
    auto * corpus = app.add_subcommand("verify-corpus", "check every row of DIR/manifest.tsv");
    corpus->add_option("dir", corpus_dir)->required();
    detail::add_json(corpus, corpus_json);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "nmg: " << e.what() << "\n";
        return Exit::usage;
    }

    try {
        if (*bound) {
            Params params{bound_n, bound_m};
            out << order_bound(params) << "\n";
            return Exit::ok;
        }

        if (*verify) {
            auto g = read_nmg_file(verify_file);
            auto report = verify_witness(g, parse_graph_class(verify_class));
            verify_json.emit(detail::witness_json(report), out);
            if (! verify_json.to_stdout())
                detail::print_witness(report, out);
            return report.ok() ? Exit::ok : Exit::property_false;
        }

        if (*sees_cmd) {
            auto g = read_nmg_file(sees_file);
            auto w = sees(g, sees_u, sees_v);
            json doc;
            doc["u"] = sees_u;
            doc["v"] = sees_v;
            if (! w)
                doc["kind"] = "none";
            else if (w->kind == SeeWitness::Kind::Adjacent) {
                doc["kind"] = "adjacent";
                doc["label"] = g.label(sees_u, sees_v);
            }
            else {
                doc["kind"] = "special_path";
                doc["middle"] = *w->middle;
                doc["labels"] = json::array({w->labels->alpha, w->labels->beta});
            }
            sees_json.emit(doc, out);
            if (! sees_json.to_stdout()) {
                if (! w)
                    out << "NONE\n";
                else if (w->kind == SeeWitness::Kind::Adjacent)
                    out << "adjacent (label " << g.label(sees_u, sees_v) << ")\n";
                else
                    out << "through " << *w->middle << " (labels " << w->labels->alpha << "," << w->labels->beta << ")\n";
            }
            return w ? Exit::ok : Exit::property_false;
        }

        if (*hom) {
            auto g = read_nmg_file(hom_g), h = read_nmg_file(hom_h);
            auto f = find_homomorphism(g, h);
            json doc;
            doc["found"] = f.has_value();
            doc["map"] = f ? json(f->map) : json(nullptr);
            hom_json.emit(doc, out);
            if (! hom_json.to_stdout()) {
                if (! f)
                    out << "NONE\n";
                else
                    for (Vertex v = 0; v < g.order(); ++v)
                        out << v << " -> " << f->map[v] << "\n";
            }
            return f ? Exit::ok : Exit::property_false;
        }

        if (*chi) {
            auto g = read_nmg_file(chi_file);
            auto r = chromatic_number(g, chi_limit);
            json doc;
            doc["value"] = r.value ? json(*r.value) : json(nullptr);
            doc["colouring"] = r.colouring;
            chi_json.emit(doc, out);
            if (! chi_json.to_stdout()) {
                if (! r.value)
                    out << "NONE (no image with at most " << *chi_limit << " vertices)\n";
                else {
                    out << "chromatic number: " << *r.value << "\n";
                    out << "colouring:";
                    for (int c : r.colouring)
                        out << " " << c;
                    out << "\n";
                }
            }
            return r.value ? Exit::ok : Exit::property_false;
        }

        if (*clique) {
            auto g = read_nmg_file(clique_file);
            auto r = absolute_clique_number(g);
            json doc;
            doc["size"] = r.size;
            doc["witness"] = r.witness;
            clique_json.emit(doc, out);
            if (! clique_json.to_stdout())
                out << "absolute clique number: " << r.size << "\nwitness: " << detail::vertex_list(r.witness) << "\n";
            return Exit::ok;
        }

        if (*search) {
            SearchConfig config;
            config.params = Params{search_n, search_m};
            config.graph_class = parse_graph_class(search_class);
            config.max_order = search_max;
            config.time_budget = std::chrono::duration<double>(search_budget);
            config.thread_count = search_threads;
            config.seed = search_seed;
            config.cap_at_bound = search_cap;
            auto outcome = search_extremal(config);
            write_nmg_file(search_out, outcome.witness);

            json doc;
            doc["n"] = search_n;
            doc["m"] = search_m;
            doc["class"] = search_class;
            doc["max_order"] = search_max;
            doc["best_order"] = outcome.best_order;
            doc["status"] = to_string(outcome.status);
            doc["nodes_explored"] = outcome.nodes_explored;
            doc["witness"] = search_out;
            search_json.emit(doc, out);
            if (! search_json.to_stdout()) {
                out << "best order: " << outcome.best_order << "\n";
                out << "status: " << to_string(outcome.status) << "\n";
                out << "nodes explored: " << outcome.nodes_explored << "\n";
                out << "witness: " << search_out << "\n";
            }
            return outcome.status == SearchStatus::Exhausted ? Exit::ok : Exit::budget;
        }

        if (*audit_cmd) {
            auto g = read_nmg_file(audit_file);
            auto report = audit(g, audit_file);
            audit_json.emit(to_json(report), out);
            if (! audit_json.to_stdout()) {
                out << "input: " << report.input << "\n";
                out << "valid: " << detail::yes(report.valid) << "\n";
                out << "case: " << report.case_name << "\n";
                const auto & q = report.quantities;
                auto show = [](const std::optional<int> & v) { return v ? std::to_string(*v) : std::string("-"); };
                out << "p=" << q.p << " k=" << show(q.k) << " i=" << show(q.i) << " j=" << show(q.j) << " s_max=" << show(q.s_max)
                    << " |E|=" << show(q.e) << " |V|=" << q.order << "\n";
                if (report.bound)
                    out << "bound: " << *report.bound << "\n";
                for (const auto & i : report.inequalities)
                    if (i.hypothesis_holds)
                        out << (i.satisfied ? "  ok   " : "  FAIL ") << i.name << ": " << i.lhs << " <= " << i.rhs << "\n";
                for (const auto & note : report.notes)
                    out << "note: " << note << "\n";
                out << "verdict: " << report.verdict << "\n";
            }
            return report.verdict == "consistent" ? Exit::ok : Exit::property_false;
        }

        if (*corpus) {
            auto results = verify_corpus(corpus_dir);
            bool all = true;
            json rows = json::array();
            for (const auto & r : results) {
                all = all && r.ok;
                json row;
                row["file"] = r.row.file;
                row["ok"] = r.ok;
                row["case"] = r.audit ? json(r.audit->case_name) : json(nullptr);
                row["problems"] = r.problems;
                rows.push_back(row);
            }
            corpus_json.emit(json{{"rows", rows}, {"ok", all}}, out);
            if (! corpus_json.to_stdout()) {
                for (const auto & r : results) {
                    out << (r.ok ? "ok   " : "FAIL ") << r.row.file << " (" << r.row.n << "," << r.row.m << ") " << to_string(r.row.graph_class) << " order "
                        << r.row.claimed_order;
                    if (r.audit)
                        out << " case " << r.audit->case_name;
                    out << "\n";
                    for (const auto & problem : r.problems)
                        out << "     " << problem << "\n";
                }
                out << results.size() << " rows, " << (all ? "all verified" : "some rows failed") << "\n";
            }
            return all ? Exit::ok : Exit::property_false;
        }
    }
    catch (const ParseError & e) {
        err << "nmg: parse error at " << e.what() << "\n";
        return Exit::usage;
    }
    catch (const Error & e) {
        err << "nmg: " << e.what() << "\n";
        return Exit::usage;
    }
    catch (const std::exception & e) {
        err << "nmg: " << e.what() << "\n";
        return Exit::usage;
    }
    return Exit::usage;
}

} // namespace nmg::cli
