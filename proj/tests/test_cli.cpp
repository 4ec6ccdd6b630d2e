#include "../tools/cli.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmg;
using namespace nmg::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

auto run_cli(std::vector<std::string> args) -> Result
{
    args.insert(args.begin(), "nmg");
    std::vector<const char *> argv;
    for (const auto & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;

    Scratch()
    {
        dir = fs::temp_directory_path() / ("nmg-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
        write_nmg_file(file("triangle.nmg"), directed_triangle());
        write_nmg_file(file("path.nmg"), directed_path());
        write_nmg_file(file("converging.nmg"), converging_path());
        write_nmg_file(file("arc.nmg"), single_arc());
        write_nmg_file(file("k5.nmg"), complete_underlying(5));
        std::ofstream(file("broken.nmg")) << "nmg 1 0 2 1\n0 1 9\n";
    }
    ~Scratch() { fs::remove_all(dir); }

    auto file(const std::string & name) const -> std::string { return (dir / name).string(); }
};

auto slurp(const std::string & path) -> std::string
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("cli bound")
{
    auto r = run_cli({"bound", "1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "31\n");
    CHECK(run_cli({"bound", "1", "0"}).out == "15\n");
    CHECK(run_cli({"bound", "0", "1"}).code == 2);
    CHECK(run_cli({"bound", "0"}).code == 2);
    CHECK(run_cli({"bound", "x", "1"}).code == 2);
}

TEST_CASE("cli usage errors and help")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify-corpus") != std::string::npos);
}

TEST_CASE("cli verify")
{
    Scratch s;
    auto tri = run_cli({"verify", s.file("triangle.nmg"), "--class", "any"});
    CHECK(tri.code == 0);
    CHECK(tri.out.find("complete: yes") != std::string::npos);
    auto conv = run_cli({"verify", s.file("converging.nmg")});
    CHECK(conv.code == 1);
    CHECK(conv.out.find("complete: no (0 and 2 do not see each other)") != std::string::npos);
    CHECK(run_cli({"verify", s.file("k5.nmg"), "--class", "planar"}).code == 1);
    CHECK(run_cli({"verify", s.file("triangle.nmg"), "--class", "round"}).code == 2);
    CHECK(run_cli({"verify", s.file("missing.nmg")}).code == 2);

    auto broken = run_cli({"verify", s.file("broken.nmg")});
    CHECK(broken.code == 2);
    CHECK(broken.err.find("line 2, column 5") != std::string::npos);

    auto json = run_cli({"verify", s.file("triangle.nmg"), "--json"});
    CHECK(json.code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["order"] == 3);
    CHECK(doc["bound"] == 15);
    CHECK(doc["blame"].is_null());

    auto to_file = run_cli({"verify", s.file("converging.nmg"), "--json", s.file("v.json")});
    CHECK(to_file.code == 1);
    CHECK(to_file.out.find("complete: no") != std::string::npos);
    CHECK(nlohmann::json::parse(slurp(s.file("v.json")))["blame"] == nlohmann::json::array({0, 2}));
}

TEST_CASE("cli sees")
{
    Scratch s;
    auto none = run_cli({"sees", s.file("converging.nmg"), "0", "2"});
    CHECK(none.code == 1);
    CHECK(none.out == "NONE\n");
    auto path = run_cli({"sees", s.file("path.nmg"), "0", "2"});
    CHECK(path.code == 0);
    CHECK(path.out == "through 1 (labels 2,1)\n");
    CHECK(run_cli({"sees", s.file("path.nmg"), "0", "1"}).out == "adjacent (label 2)\n");
    CHECK(run_cli({"sees", s.file("path.nmg"), "0", "0"}).code == 2);
    CHECK(run_cli({"sees", s.file("path.nmg"), "0", "7"}).code == 2);
    auto doc = nlohmann::json::parse(run_cli({"sees", s.file("path.nmg"), "0", "2", "--json"}).out);
    CHECK(doc["kind"] == "special_path");
    CHECK(doc["middle"] == 1);
}

TEST_CASE("cli hom")
{
    Scratch s;
    auto found = run_cli({"hom", s.file("converging.nmg"), s.file("arc.nmg")});
    CHECK(found.code == 0);
    CHECK(found.out == "0 -> 0\n1 -> 1\n2 -> 0\n");
    auto none = run_cli({"hom", s.file("triangle.nmg"), s.file("arc.nmg")});
    CHECK(none.code == 1);
    CHECK(none.out == "NONE\n");
    CHECK(run_cli({"hom", s.file("triangle.nmg"), s.file("k5.nmg")}).code == 2);
    auto doc = nlohmann::json::parse(run_cli({"hom", s.file("converging.nmg"), s.file("arc.nmg"), "--json"}).out);
    CHECK(doc["map"] == nlohmann::json::array({0, 1, 0}));
}

TEST_CASE("cli chi and clique")
{
    Scratch s;
    auto chi = run_cli({"chi", s.file("converging.nmg")});
    CHECK(chi.code == 0);
    CHECK(chi.out.rfind("chromatic number: 2\n", 0) == 0);
    auto limited = run_cli({"chi", s.file("triangle.nmg"), "--limit", "2"});
    CHECK(limited.code == 1);
    CHECK(limited.out.rfind("NONE", 0) == 0);
    CHECK(run_cli({"chi", s.file("triangle.nmg"), "--limit", "0"}).code == 2);

    auto clique = run_cli({"clique", s.file("converging.nmg")});
    CHECK(clique.code == 0);
    CHECK(clique.out == "absolute clique number: 2\nwitness: {0 1}\n");
    auto doc = nlohmann::json::parse(run_cli({"clique", s.file("triangle.nmg"), "--json"}).out);
    CHECK(doc["size"] == 3);
    CHECK(doc["witness"] == nlohmann::json::array({0, 1, 2}));
}

TEST_CASE("cli search")
{
    Scratch s;
    auto r = run_cli({"search", "--n", "0", "--m", "1", "--class", "planar", "--max-order", "6", "--out", s.file("k4.nmg")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("best order: 4\nstatus: exhausted\n", 0) == 0);
    CHECK(read_nmg_file(s.file("k4.nmg")) == complete_underlying(4, Params{0, 1}));

    auto again = run_cli({"search", "--n", "0", "--m", "1", "--class", "planar", "--max-order", "6", "--out", s.file("k4b.nmg")});
    CHECK(slurp(s.file("k4.nmg")) == slurp(s.file("k4b.nmg")));

    auto budget = run_cli({"search", "--n", "1", "--m", "1", "--class", "planar", "--max-order", "12", "--budget", "0.05", "--out", s.file("b.nmg")});
    CHECK(budget.code == 3);
    CHECK(budget.out.find("status: budget_exhausted") != std::string::npos);
    CHECK(verify_witness(read_nmg_file(s.file("b.nmg")), GraphClass::Planar).ok());

    CHECK(run_cli({"search", "--n", "1", "--m", "0", "--class", "any"}).code == 2);
    CHECK(run_cli({"search", "--n", "1", "--m", "0", "--class", "any", "--max-order", "0", "--out", s.file("z.nmg")}).code == 2);

    auto doc = nlohmann::json::parse(
        run_cli({"search", "--n", "1", "--m", "0", "--class", "any", "--max-order", "3", "--out", s.file("t.nmg"), "--json"}).out);
    CHECK(doc["best_order"] == 3);
    CHECK(doc["status"] == "exhausted");
}

TEST_CASE("cli audit")
{
    Scratch s;
    auto tri = run_cli({"audit", s.file("triangle.nmg")});
    CHECK(tri.code == 0);
    CHECK(tri.out.find("case: dominated") != std::string::npos);
    CHECK(tri.out.find("verdict: consistent") != std::string::npos);

    auto conv = run_cli({"audit", s.file("converging.nmg")});
    CHECK(conv.code == 1);
    CHECK(conv.out.find("verdict: inapplicable") != std::string::npos);

    auto json = run_cli({"audit", s.file("triangle.nmg"), "--json", s.file("a.json")});
    CHECK(json.code == 0);
    auto doc = nlohmann::json::parse(slurp(s.file("a.json")));
    CHECK(doc["case"] == "dominated");
    CHECK(doc["quantities"]["|V|"] == 3);
    CHECK(doc["verdict"] == "consistent");
}

TEST_CASE("cli verify-corpus")
{
    Scratch s;
    fs::create_directories(s.dir / "corpus");
    write_nmg_file((s.dir / "corpus" / "triangle.nmg").string(), directed_triangle());
    write_nmg_file((s.dir / "corpus" / "converging.nmg").string(), converging_path());
    std::ofstream(s.dir / "corpus" / "manifest.tsv") << "file\tn\tm\tclass\tclaimed_order\ntriangle.nmg\t1\t0\tplanar\t3\n";
    auto good = run_cli({"verify-corpus", (s.dir / "corpus").string()});
    CHECK(good.code == 0);
    CHECK(good.out.find("1 rows, all verified") != std::string::npos);

    std::ofstream(s.dir / "corpus" / "manifest.tsv", std::ios::app) << "converging.nmg\t1\t0\tany\t3\n";
    auto bad = run_cli({"verify-corpus", (s.dir / "corpus").string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL converging.nmg") != std::string::npos);

    auto doc = nlohmann::json::parse(run_cli({"verify-corpus", (s.dir / "corpus").string(), "--json"}).out);
    CHECK(doc["ok"] == false);
    CHECK(doc["rows"].size() == 2);

    CHECK(run_cli({"verify-corpus", (s.dir / "nowhere").string()}).code == 2);
}

TEST_CASE("cli output is byte-identical across runs")
{
    Scratch s;
    for (const auto & args : std::vector<std::vector<std::string>>{
             {"verify", s.file("path.nmg"), "--json"},
             {"chi", s.file("path.nmg")},
             {"clique", s.file("triangle.nmg")},
             {"audit", s.file("triangle.nmg"), "--json"},
             {"search", "--n", "1", "--m", "0", "--class", "planar", "--max-order", "5", "--threads", "1", "--out", s.file("w.nmg")},
         }) {
        auto first = run_cli(args), second = run_cli(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}
