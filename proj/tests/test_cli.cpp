#include "distinguo/catalog.hpp"
#include "distinguo/cli.hpp"
#include "distinguo/dist.hpp"
#include "distinguo/families.hpp"
#include "distinguo/graph6.hpp"

#include "oracles.hpp"
#include "temp_dir.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace distinguo;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

struct CliFixture {
    TempDir dir;

    CliFixture() { setenv("DISTINGUO_CACHE", (dir / "cache.txt").c_str(), 1); }
    ~CliFixture() { unsetenv("DISTINGUO_CACHE"); }

    Run run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string write(const std::string &name, const std::string &text)
    {
        auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }

    std::string read(const std::string &name)
    {
        std::ifstream in(dir / name);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
};

std::vector<std::string> lines_of(const std::string &text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE_FIXTURE(CliFixture, "compute on a friendship graph")
{
    auto r = run({"compute", "--family", "friendship", "--n", "4", "--std", "--bd", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["D"] == 4);
    CHECK(j["stD"] == 1);
    CHECK(j["bD"] == 1);
    CHECK(j["bD_status"] == "exact");
    CHECK(j["aut_order"] == "384");
}

TEST_CASE_FIXTURE(CliFixture, "compute on an edgeless graph and on P_2")
{
    auto r = run({"compute", "--graph6", "D??"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("D: 5\n") != std::string::npos);
    auto p2 = run({"compute", "--family", "path", "--n", "2", "--bd"});
    CHECK(p2.code == kExitOk);
    CHECK(p2.out.find("bD: 0 (exact)") != std::string::npos);
}

TEST_CASE_FIXTURE(CliFixture, "compute from an edge list")
{
    auto file = write("g.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    auto r = run({"compute", "--edges", file, "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["D"] == 3);
}

TEST_CASE_FIXTURE(CliFixture, "compute exit codes")
{
    CHECK(run({"compute", "--graph6", "D?"}).code == kExitUsage);
    CHECK(run({"compute", "--family", "path", "--n", "20"}).code == kExitTooLarge);
    CHECK(run({"compute", "--family", "path", "--n", "20", "--force"}).code == kExitOk);
    CHECK(run({"compute", "--family", "path", "--n", "5", "--limit", "4"}).code == kExitTooLarge);
    CHECK(run({"compute"}).code == kExitUsage);
    CHECK(run({"compute", "--graph6", "C~", "--family", "path", "--n", "3"}).code == kExitUsage);
    CHECK(run({"compute", "--family", "wheel", "--n", "5"}).code == kExitUsage);
    CHECK(run({"compute", "--family", "cycle", "--n", "2"}).code == kExitUsage);
    CHECK(run({"compute", "--edges", (dir / "missing").string()}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE_FIXTURE(CliFixture, "compute fills the cache")
{
    run({"compute", "--family", "cycle", "--n", "6", "--std"});
    DCache cache(dir / "cache.txt");
    CHECK(cache.size() > 1);
    CHECK(cache.lookup(canonical_form(make_family(FamilySpec::cycle(6)))) == 2);
}

TEST_CASE_FIXTURE(CliFixture, "scan of all graphs on four vertices")
{
    std::string catalog;
    for (const auto &g : all_graphs(4))
        catalog += to_graph6(g) + "\n";
    auto input = write("n4.g6", catalog);
    auto r = run({"scan", "--input", input, "--output", (dir / "a.csv").string(), "--jobs", "1"});
    REQUIRE(r.code == kExitOk);
    auto rows = lines_of(read("a.csv"));
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "graph6,n,m,D,stD,bD,bD_status,aut_order,elapsed_ms");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto g6 = rows[i].substr(0, rows[i].find(','));
        std::istringstream fields(rows[i]);
        std::vector<std::string> cells;
        for (std::string c; std::getline(fields, c, ',');)
            cells.push_back(c);
        CHECK(std::stoi(cells[3]) == oracle::distinguishing_number(from_graph6(g6)));
    }

    auto again = run({"scan", "--input", input, "--output", (dir / "b.csv").string(), "--jobs", "3"});
    CHECK(again.code == kExitOk);
    CHECK(read("a.csv") == read("b.csv"));
}

TEST_CASE_FIXTURE(CliFixture, "scan edge cases")
{
    auto empty = write("empty.g6", "");
    auto r = run({"scan", "--input", empty});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "graph6,n,m,D,stD,bD,bD_status,aut_order,elapsed_ms\n");

    auto mixed = write("mixed.g6", "C~\nD?\n@\n");
    auto m = run({"scan", "--input", mixed, "--skip-bd"});
    CHECK(m.code == kExitOk);
    auto rows = lines_of(m.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == "C~,4,6,4,1,,skipped,24,");
    CHECK(rows[2].find(",error,") != std::string::npos);
    CHECK(rows[3] == "@,1,0,1,,,skipped,1,");
    CHECK(m.err.find("line 2") != std::string::npos);

    CHECK(run({"scan", "--input", (dir / "missing").string()}).code == kExitUsage);
    auto timed = run({"scan", "--input", mixed, "--timing", "--skip-bd"});
    CHECK(lines_of(timed.out)[1].back() != ',');
}

TEST_CASE_FIXTURE(CliFixture, "gen round trips through compute")
{
    auto r = run({"gen", "--family", "cycle", "--from", "3", "--to", "5"});
    REQUIRE(r.code == kExitOk);
    auto lines = lines_of(r.out);
    CHECK(lines.size() == 3);
    for (const auto &l : lines)
        CHECK(run({"compute", "--graph6", l}).code == kExitOk);
    auto book = run({"gen", "--family", "book", "--from", "2", "--to", "2"});
    CHECK(from_graph6(lines_of(book.out).at(0)).order() == 6);
    CHECK(run({"gen", "--family", "cycle", "--from", "5", "--to", "3"}).code == kExitUsage);
    CHECK(run({"gen", "--family", "cycle", "--from", "1", "--to", "3"}).code == kExitUsage);
    CHECK(lines_of(run({"gen", "--family", "complete_bipartite", "--from", "1", "--to", "2", "--q", "3"}).out).size() == 2);
}

TEST_CASE_FIXTURE(CliFixture, "catalog command")
{
    CHECK(lines_of(run({"catalog", "--n", "5"}).out).size() == 34);
    CHECK(lines_of(run({"catalog", "--n", "5", "--connected"}).out).size() == 21);
    CHECK(run({"catalog", "--n", "11"}).code == kExitUsage);
}

TEST_CASE_FIXTURE(CliFixture, "verify command")
{
    auto r = run({"verify", "--checks", "friendship_window"});
    CHECK(r.code == kExitOk);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(nlohmann::json::parse(lines.back())["summary"]["overall"]["pass"] == 3);

    CHECK(run({"verify", "--checks", "bogus"}).code == kExitUsage);
    CHECK(run({"verify", "--checks", "bounds"}).code == kExitUsage);

    auto input = write("c.g6", "Dhc\nC~\n");
    auto b = run({"verify", "--checks", "bounds,conjecture", "--input", input, "--output", (dir / "r.jsonl").string()});
    CHECK(b.code == kExitOk);
    auto out = lines_of(read("r.jsonl"));
    CHECK(out.size() == 2 * 10 + 1);
    auto first = nlohmann::json::parse(out.front());
    CHECK(first["check_id"] <= nlohmann::json::parse(out[1])["check_id"]);

    auto fam = run({"verify", "--checks", "families,conjecture", "--family", "cycle", "--from", "3", "--to", "6"});
    CHECK(fam.code == kExitOk);
    CHECK(run({"verify", "--checks", "bounds", "--family", "cycle", "--from", "6", "--to", "3"}).code == kExitUsage);
}

TEST_CASE_FIXTURE(CliFixture, "verify exits 1 on a substantive failure")
{
    // book(2): computed st_D is 2 while the closed form gives 1
    auto r = run({"verify", "--checks", "families", "--family", "book", "--from", "2", "--to", "2"});
    CHECK(r.code == kExitCheckFailed);
    CHECK(r.err.find("violation family.book.stD") != std::string::npos);
}

TEST_CASE_FIXTURE(CliFixture, "cache audit")
{
    run({"catalog", "--n", "3"});
    for (auto n : {"3", "4", "5", "6"})
        run({"compute", "--family", "complete", "--n", n});
    auto r = run({"cache", "audit", "--samples", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("3 of 4 entries audited, 0 mismatches") != std::string::npos);
    write("bad.txt", "C~ 3\n");
    auto bad = run({"cache", "audit", "--cache", (dir / "bad.txt").string()});
    CHECK(bad.code == kExitCheckFailed);
    CHECK(run({"cache", "stats"}).out.find("entries: 4") != std::string::npos);
}
