#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "subcorona/cli.hpp"
#include "subcorona/corona.hpp"
#include "subcorona/graph.hpp"
#include "subcorona/io.hpp"

using namespace subcorona;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("edge list round trip") {
    for (const Graph& g : {complete(4), path(5), cycle(6), complete_bipartite(2, 3),
                           empty_graph(3), disjoint_union(cycle(3), path(2))})
        CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("edge list parser skips comments and blank lines") {
    const Graph g = parse_edge_list("# a comment\n\n3 2\n0 1\n# another\n\n1 2\n");
    CHECK(g == path(3));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), error);     // truncated
    CHECK_THROWS_AS(parse_edge_list(""), error);               // empty
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), error);     // loop
}

TEST_CASE("json round trips") {
    for (const Graph& g : {complete(4), empty_graph(2), complete_bipartite(1, 4)})
        CHECK(graph_from_json(graph_json(g)) == g);

    const IntPoly big(std::vector<BigInt>{BigInt("-123456789012345678901234567890"), BigInt(0),
                                          BigInt("99999999999999999999"), BigInt(1)});
    CHECK(poly_from_json(poly_json(big)) == big);
    CHECK(poly_from_json(poly_json(IntPoly())) == IntPoly());

    const auto j = spectrum_json({1.0, 1.0, 2.5});
    CHECK(j.contains("values"));
    CHECK(j.contains("clusters"));
    CHECK(j["values"].size() == 3);
    CHECK(j["clusters"].size() == 2);
}

TEST_CASE("graph specs accept families and files") {
    CHECK(graph_from_spec("complete:5") == complete(5));
    CHECK(graph_from_spec("complete_bipartite:2,3") == complete_bipartite(2, 3));
    CHECK(graph_from_spec("complete_bipartite:2:3") == complete_bipartite(2, 3));
    CHECK(graph_from_spec("empty:4") == empty_graph(4));
    CHECK(graph_from_spec("complement_of:cycle:6") == complement_of(cycle(6)));

    const std::string file = "test_io_graph.txt";
    {
        std::ofstream f(file);
        f << to_edge_list(cycle(7));
    }
    CHECK(graph_from_spec(file) == cycle(7));
    {
        std::ofstream f(file);
        f << graph_json(path(4)).dump();
    }
    CHECK(graph_from_spec(file) == path(4));
    std::remove(file.c_str());

    CHECK_THROWS_AS(graph_from_spec("no_such_family:3"), error);
    CHECK_THROWS_AS(graph_from_spec("no/such/file.txt"), error);
    CHECK_THROWS_AS(graph_from_spec("complete:zero"), error);
}

TEST_CASE("cli: family output re-parses") {
    const auto r = run_cli({"family", "complete_bipartite", "3", "3"});
    CHECK(r.exit_code == 0);
    CHECK(parse_edge_list(r.out) == complete_bipartite(3, 3));
    const auto c = run_cli({"family", "complement_of", "cycle:6"});
    CHECK(c.exit_code == 0);
    CHECK(parse_edge_list(c.out) == complement_of(cycle(6)));
}

TEST_CASE("cli: corona output re-parses to the assembled graph") {
    const auto r = run_cli({"corona", "--g1", "cycle:4", "--g2", "path:2", "--kind", "edge"});
    CHECK(r.exit_code == 0);
    const Graph expected = corona(cycle(4), path(2), CoronaKind::edge).graph;
    CHECK(parse_edge_list(r.out) == expected);

    const auto j = run_cli({"corona", "--g1", "cycle:4", "--g2", "path:2", "--kind", "edge",
                            "--json"});
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(graph_from_json(parsed["graph"]) == expected);
    // Labeling sidecar: id arrays for originals and inserted, one id array
    // per copy; every corona vertex appears exactly once across the three.
    const auto& lab = parsed["labeling"];
    CHECK(lab["original"].size() == 4);
    CHECK(lab["inserted"].size() == 4);
    REQUIRE(lab["copies"].size() == 4);
    CHECK(lab["copies"][0].size() == 2);
    std::vector<int> all;
    for (const auto& v : lab["original"]) all.push_back(v.get<int>());
    for (const auto& v : lab["inserted"]) all.push_back(v.get<int>());
    for (const auto& copy : lab["copies"])
        for (const auto& v : copy) all.push_back(v.get<int>());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < expected.n; ++i) CHECK(all[static_cast<size_t>(i)] == i);
}

TEST_CASE("cli: charpoly and spectrum in both methods") {
    const auto th = run_cli({"charpoly", "--g1", "complete:5", "--g2", "empty:1", "--kind",
                             "vertex", "--matrix", "A", "--method", "theorem", "--json"});
    CHECK(th.exit_code == 0);
    const auto dr = run_cli({"charpoly", "--g1", "complete:5", "--g2", "empty:1", "--kind",
                             "vertex", "--matrix", "A", "--method", "direct", "--json"});
    CHECK(dr.exit_code == 0);
    const auto jth = nlohmann::json::parse(th.out);
    const auto jdr = nlohmann::json::parse(dr.out);
    CHECK(poly_from_json(jth["expanded"]) == poly_from_json(jdr["coeffs"]));
    CHECK(jth.contains("factors"));
    CHECK(jth["oracle_match"] == true);
    CHECK(jth["spectrum"].size() == 20);

    const auto sp = run_cli({"spectrum", "--g1", "complete:3", "--g2", "path:3", "--kind",
                             "edge", "--matrix", "Q", "--method", "theorem", "--json"});
    CHECK(sp.exit_code == 0);
    const auto jsp = nlohmann::json::parse(sp.out);
    CHECK(jsp["values"].size() == corona_order({complete(3), path(3), CoronaKind::edge}));
}

TEST_CASE("cli: verify returns zero on a clean cross-check") {
    const auto r = run_cli({"verify", "--g1", "complete:3", "--g2", "path:3", "--matrix",
                            "all", "--kind", "both"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("A vertex exact_match=true") != std::string::npos);
    CHECK(r.out.find("Q edge exact_match=true") != std::string::npos);
    const auto one = run_cli({"verify", "--g1", "complete:2", "--g2", "complete:3",
                              "--matrix", "L", "--kind", "vertex", "--json"});
    CHECK(one.exit_code == 0);
    const auto arr = nlohmann::json::parse(one.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["exact_match"] == true);
}

TEST_CASE("cli: invariants") {
    const auto r = run_cli({"invariants", "--g1", "complete:3", "--g2", "empty:1", "--kind",
                            "vertex", "--json"});
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["spanning_trees"] == "6");
    CHECK(j["spanning_trees_direct"] == "6");
    CHECK(double(j["kirchhoff"]) == doctest::Approx(63.0));
}

TEST_CASE("cli: integral family and cospectral tooling") {
    const auto r = run_cli({"integral-family", "vertex_complete", "3", "2", "--json"});
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["integral"] == true);
    CHECK(j["n1"] == 5);

    const auto s = run_cli({"cospectral-search", "--n", "5", "--matrix", "A", "--json"});
    CHECK(s.exit_code == 0);
    CHECK(nlohmann::json::parse(s.out).size() == 1);

    const auto v = run_cli({"cospectral-verify", "--first", "cycle:5", "--second",
                            "complement_of:cycle:5", "--partner", "complete:2", "--matrix",
                            "A", "--kind", "vertex", "--side", "vary_g1"});
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("true") != std::string::npos);
}

TEST_CASE("cli: exit codes separate usage from precondition failures") {
    CHECK(run_cli({"bogus-subcommand"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"charpoly", "--g1", "complete:3"}).exit_code == 2);  // missing --g2
    CHECK(run_cli({"spectrum", "--g1", "complete:3", "--g2", "empty:1", "--matrix", "Z"})
              .exit_code == 2);

    // Irregular base: precondition, not usage.
    const auto pre = run_cli({"charpoly", "--g1", "path:3", "--g2", "empty:1", "--method",
                              "theorem"});
    CHECK(pre.exit_code == 3);
    CHECK(pre.err.find("REG_REQUIRED") != std::string::npos);

    const auto edge = run_cli({"corona", "--g1", "empty:3", "--g2", "empty:1", "--kind",
                               "edge"});
    CHECK(edge.exit_code == 3);
    CHECK(edge.err.find("EDGE_REQUIRED") != std::string::npos);

    const auto big = run_cli({"cospectral-search", "--n", "9", "--matrix", "A"});
    CHECK(big.exit_code == 3);
    CHECK(big.err.find("TOO_LARGE") != std::string::npos);

    const auto help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}
