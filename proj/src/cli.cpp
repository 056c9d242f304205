#include "subcorona/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "subcorona/corona.hpp"
#include "subcorona/error.hpp"
#include "subcorona/graph.hpp"
#include "subcorona/invariants.hpp"
#include "subcorona/io.hpp"
#include "subcorona/spectra.hpp"
#include "subcorona/theorems.hpp"

namespace subcorona {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

MatrixKind matrix_from_flag(const std::string& s) {
    if (s == "A") return MatrixKind::adjacency;
    if (s == "L") return MatrixKind::laplacian;
    return MatrixKind::signless_laplacian;
}

CoronaKind corona_from_flag(const std::string& s) {
    return s == "edge" ? CoronaKind::edge : CoronaKind::vertex;
}

void print_poly(std::ostream& out, const IntPoly& p) {
    out << "degree " << p.degree() << "\n";
    out << "coeffs";
    for (const BigInt& c : p.coeffs()) out << ' ' << c.get_str();
    out << "\n";
    out << p.pretty("x") << "\n";
}

void print_clusters(std::ostream& out, const std::vector<SpectrumCluster>& clusters) {
    for (const auto& c : clusters) out << fmt(c.value) << " x " << c.count << "\n";
}

// ---- family ---------------------------------------------------------------

struct FamilyArgs {
    std::string kind;
    std::vector<std::string> params;
    bool json = false;
};

int run_family(const FamilyArgs& a, std::ostream& out) {
    auto kind = parse_family_kind(a.kind);
    if (!kind) fail(errc::invalid_params, "unknown family kind: " + a.kind);
    Graph g;
    if (*kind == FamilyKind::complement_of) {
        if (a.params.size() != 1)
            fail(errc::invalid_params, "complement_of expects one graph argument");
        g = make_family(*kind, graph_from_spec(a.params[0]));
    } else {
        std::vector<long> sizes;
        for (const auto& p : a.params) {
            std::size_t used = 0;
            long v = std::stol(p, &used);
            if (used != p.size()) fail(errc::invalid_params, "bad size parameter: " + p);
            sizes.push_back(v);
        }
        g = make_family(*kind, sizes);
    }
    if (a.json)
        out << graph_json(g).dump(2) << "\n";
    else
        out << to_edge_list(g);
    return 0;
}

// ---- corona ---------------------------------------------------------------

struct CoronaArgs {
    std::string g1, g2;
    std::string kind = "vertex";
    bool json = false;
};

int run_corona(const CoronaArgs& a, std::ostream& out) {
    const CoronaSpec spec{graph_from_spec(a.g1), graph_from_spec(a.g2), corona_from_flag(a.kind)};
    const LabeledGraph built = corona(spec);
    if (a.json) {
        nlohmann::json j;
        j["graph"] = graph_json(built.graph);
        j["labeling"] = labeling_json(built.labeling);
        out << j.dump(2) << "\n";
        return 0;
    }
    const auto& lab = built.labeling;
    out << "# kind " << name(spec.kind) << "\n";
    out << "# originals " << lab.originals << " inserted " << lab.inserted << " copies "
        << lab.copies << " x " << lab.copy_size << "\n";
    out << to_edge_list(built.graph);
    return 0;
}

// ---- charpoly / spectrum ---------------------------------------------------

struct PolyArgs {
    std::string g1, g2;
    std::string kind = "vertex";
    std::string matrix = "A";
    std::string method = "theorem";
    bool json = false;
};

int run_charpoly(const PolyArgs& a, std::ostream& out) {
    const CoronaSpec spec{graph_from_spec(a.g1), graph_from_spec(a.g2), corona_from_flag(a.kind)};
    const MatrixKind which = matrix_from_flag(a.matrix);
    if (a.method == "direct") {
        const IntPoly p = direct_charpoly(spec, which);
        if (a.json) {
            nlohmann::json j;
            j["method"] = "direct";
            j["coeffs"] = poly_json(p);
            out << j.dump(2) << "\n";
        } else {
            print_poly(out, p);
        }
        return 0;
    }
    const FactoredCharPoly fac = theorem_charpoly(spec, which);
    if (a.json) {
        nlohmann::json j;
        j["method"] = "theorem";
        j["factors"] = factors_json(fac.factors);
        j["expanded"] = poly_json(fac.expanded);
        j["spectrum"] = spectrum_json(spectrum_from_factors(fac.factors))["values"];
        j["oracle_match"] = fac.expanded == direct_charpoly(spec, which);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [factor, mult] : fac.factors)
            out << "factor x" << mult << ": " << factor.pretty("x") << "\n";
        print_poly(out, fac.expanded);
    }
    return 0;
}

int run_spectrum(const PolyArgs& a, std::ostream& out) {
    const CoronaSpec spec{graph_from_spec(a.g1), graph_from_spec(a.g2), corona_from_flag(a.kind)};
    const MatrixKind which = matrix_from_flag(a.matrix);
    Spectrum values;
    if (a.method == "direct")
        values = eigenvalues_sym(matrix_of(corona(spec).graph, which));
    else
        values = spectrum_from_factors(theorem_factors(spec, which));
    if (a.json) {
        out << spectrum_json(values).dump(2) << "\n";
    } else {
        out << "values";
        for (double v : values) out << ' ' << fmt(v);
        out << "\nclusters\n";
        print_clusters(out, cluster(values));
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string g1, g2;
    std::string matrix = "all";
    std::string kind = "both";
    bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    std::optional<MatrixKind> which;
    if (a.matrix != "all") which = matrix_from_flag(a.matrix);
    std::optional<CoronaKind> kind;
    if (a.kind != "both") kind = corona_from_flag(a.kind);
    const auto reports =
        verify_corona(graph_from_spec(a.g1), graph_from_spec(a.g2), which, kind);
    bool all_ok = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        all_ok = all_ok && r.exact_match;
        if (a.json) {
            nlohmann::json j;
            j["matrix"] = name(r.which);
            j["kind"] = name(r.kind);
            j["exact_match"] = r.exact_match;
            j["spectrum_residual"] = r.spectrum_residual;
            j["elapsed_ms"] = r.elapsed_ms;
            j["theorem"] = poly_json(r.theorem_poly);
            j["direct"] = poly_json(r.direct_poly);
            arr.push_back(std::move(j));
        } else {
            out << name(r.which) << ' ' << name(r.kind)
                << " exact_match=" << (r.exact_match ? "true" : "false")
                << " residual=" << fmt(r.spectrum_residual)
                << " elapsed_ms=" << fmt(r.elapsed_ms) << "\n";
            if (!r.exact_match) {
                out << "  theorem: " << r.theorem_poly.pretty("x") << "\n";
                out << "  direct:  " << r.direct_poly.pretty("x") << "\n";
            }
        }
    }
    if (a.json) out << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

// ---- invariants ------------------------------------------------------------

struct InvariantArgs {
    std::string g1, g2;
    std::string kind = "vertex";
    bool json = false;
};

int run_invariants(const InvariantArgs& a, std::ostream& out) {
    const CoronaSpec spec{graph_from_spec(a.g1), graph_from_spec(a.g2), corona_from_flag(a.kind)};
    const Graph built = corona(spec).graph;
    const BigInt trees_direct = spanning_trees_oracle(built);
    const BigInt trees_formula = spanning_trees_formula(spec);
    const double kf_direct = kirchhoff_oracle(built);
    const double kf_formula = kirchhoff_formula(spec);
    if (a.json) {
        nlohmann::json j;
        j["order"] = built.n;
        j["size"] = built.m();
        j["spanning_trees"] = trees_formula.get_str();
        j["spanning_trees_direct"] = trees_direct.get_str();
        j["kirchhoff"] = kf_formula;
        j["kirchhoff_direct"] = kf_direct;
        out << j.dump(2) << "\n";
    } else {
        out << "order " << built.n << "\n";
        out << "size " << built.m() << "\n";
        out << "spanning_trees " << trees_formula.get_str() << " (direct "
            << trees_direct.get_str() << ")\n";
        out << "kirchhoff " << fmt(kf_formula) << " (direct " << fmt(kf_direct) << ")\n";
    }
    return 0;
}

// ---- integral-family -------------------------------------------------------

struct IntegralArgs {
    std::string family;
    std::vector<long> params;
    bool json = false;
};

int run_integral_family(const IntegralArgs& a, std::ostream& out) {
    auto fam = parse_integral_family(a.family);
    if (!fam) fail(errc::invalid_params, "unknown integral family: " + a.family);
    const IntegralInstance inst = integral_family(*fam, a.params);
    const auto g1_spectrum = exact_integer_spectrum(adjacency_matrix(inst.spec.g1));
    const auto factors = theorem_factors(inst.spec, MatrixKind::adjacency, g1_spectrum);
    nlohmann::json jroots = nlohmann::json::array();
    bool integral = true;
    std::vector<std::pair<BigInt, long>> merged;
    for (const auto& [factor, mult] : factors) {
        auto roots = integer_root_factorization(factor);
        if (!roots) {
            integral = false;
            break;
        }
        for (const auto& [root, count] : *roots) {
            bool found = false;
            for (auto& entry : merged)
                if (entry.first == root) {
                    entry.second += count * mult;
                    found = true;
                    break;
                }
            if (!found) merged.emplace_back(root, count * mult);
        }
    }
    std::sort(merged.begin(), merged.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (a.json) {
        nlohmann::json j;
        j["family"] = name(*fam);
        j["n1"] = inst.n1;
        j["n2"] = inst.n2;
        j["order"] = static_cast<long>(corona_order(inst.spec));
        j["size"] = static_cast<long>(corona_size(inst.spec));
        j["integral"] = integral;
        if (integral) {
            for (const auto& [root, count] : merged) {
                nlohmann::json e;
                e["value"] = root.get_str();
                e["count"] = count;
                jroots.push_back(std::move(e));
            }
            j["spectrum"] = std::move(jroots);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "family " << name(*fam) << "\n";
        out << "n1 " << inst.n1 << " n2 " << inst.n2 << "\n";
        out << "order " << corona_order(inst.spec) << " size " << corona_size(inst.spec)
            << "\n";
        out << "integral " << (integral ? "true" : "false") << "\n";
        if (integral)
            for (const auto& [root, count] : merged)
                out << root.get_str() << " x " << count << "\n";
    }
    return integral ? 0 : 1;
}

// ---- cospectral ------------------------------------------------------------

struct SearchArgs {
    long n = 5;
    std::string matrix = "A";
    bool regular = false;
    bool json = false;
};

int run_cospectral_search(const SearchArgs& a, std::ostream& out) {
    const auto pairs =
        cospectral_search(static_cast<int>(a.n), matrix_from_flag(a.matrix), a.regular);
    if (a.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pairs) {
            nlohmann::json j;
            j["first"] = graph_json(p.first);
            j["second"] = graph_json(p.second);
            j["charpoly"] = poly_json(p.shared_charpoly);
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return 0;
    }
    out << "pairs " << pairs.size() << "\n";
    std::size_t index = 1;
    for (const auto& p : pairs) {
        out << "pair " << index++ << " charpoly " << p.shared_charpoly.pretty("x") << "\n";
        out << to_edge_list(p.first);
        out << "--\n";
        out << to_edge_list(p.second);
    }
    return 0;
}

struct CospectralVerifyArgs {
    std::string a, b, h;
    std::string matrix = "A";
    std::string kind = "vertex";
    std::string side = "vary_g1";
    bool json = false;
};

int run_cospectral_verify(const CospectralVerifyArgs& a, std::ostream& out) {
    const CoronaSide side = a.side == "vary_g2" ? CoronaSide::vary_g2 : CoronaSide::vary_g1;
    const bool ok = verify_cospectral_corollary(
        graph_from_spec(a.a), graph_from_spec(a.b), graph_from_spec(a.h),
        matrix_from_flag(a.matrix), corona_from_flag(a.kind), side);
    if (a.json) {
        nlohmann::json j;
        j["cospectral_coronae"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "cospectral_coronae " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

void add_graph_pair(CLI::App* sub, std::string& g1, std::string& g2) {
    sub->add_option("--g1", g1, "first graph (file path or family spec like complete:5)")
        ->required();
    sub->add_option("--g2", g2, "second graph (file path or family spec)")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"subdivision coronae: spectra, characteristic polynomials, invariants"};
    app.require_subcommand(1);

    const std::vector<std::string> matrices{"A", "L", "Q"};
    const std::vector<std::string> matrices_all{"A", "L", "Q", "all"};
    const std::vector<std::string> kinds{"vertex", "edge"};
    const std::vector<std::string> kinds_both{"vertex", "edge", "both"};
    const std::vector<std::string> methods{"direct", "theorem"};

    FamilyArgs family_args;
    auto* family = app.add_subcommand("family", "build a named graph family");
    family->add_option("kind", family_args.kind,
                       "complete|complete_bipartite|path|cycle|empty|complement_of")
        ->required();
    family->add_option("params", family_args.params, "size parameters (or a graph spec)");
    family->add_flag("--json", family_args.json, "machine-readable output");

    CoronaArgs corona_args;
    auto* corona_cmd = app.add_subcommand("corona", "assemble a subdivision corona");
    add_graph_pair(corona_cmd, corona_args.g1, corona_args.g2);
    corona_cmd->add_option("--kind", corona_args.kind, "corona kind")
        ->check(CLI::IsMember(kinds));
    corona_cmd->add_flag("--json", corona_args.json, "machine-readable output");

    PolyArgs charpoly_args;
    auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial");
    add_graph_pair(charpoly_cmd, charpoly_args.g1, charpoly_args.g2);
    charpoly_cmd->add_option("--kind", charpoly_args.kind, "corona kind")
        ->check(CLI::IsMember(kinds));
    charpoly_cmd->add_option("--matrix", charpoly_args.matrix, "matrix kind")
        ->check(CLI::IsMember(matrices));
    charpoly_cmd->add_option("--method", charpoly_args.method, "direct|theorem")
        ->check(CLI::IsMember(methods));
    charpoly_cmd->add_flag("--json", charpoly_args.json, "machine-readable output");

    PolyArgs spectrum_args;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of a corona matrix");
    add_graph_pair(spectrum_cmd, spectrum_args.g1, spectrum_args.g2);
    spectrum_cmd->add_option("--kind", spectrum_args.kind, "corona kind")
        ->check(CLI::IsMember(kinds));
    spectrum_cmd->add_option("--matrix", spectrum_args.matrix, "matrix kind")
        ->check(CLI::IsMember(matrices));
    spectrum_cmd->add_option("--method", spectrum_args.method, "direct|theorem")
        ->check(CLI::IsMember(methods));
    spectrum_cmd->add_flag("--json", spectrum_args.json, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "cross-check factorization against direct computation");
    add_graph_pair(verify_cmd, verify_args.g1, verify_args.g2);
    verify_cmd->add_option("--matrix", verify_args.matrix, "matrix kind or all")
        ->check(CLI::IsMember(matrices_all));
    verify_cmd->add_option("--kind", verify_args.kind, "corona kind or both")
        ->check(CLI::IsMember(kinds_both));
    verify_cmd->add_flag("--json", verify_args.json, "machine-readable output");

    InvariantArgs invariant_args;
    auto* invariants_cmd =
        app.add_subcommand("invariants", "spanning trees and Kirchhoff index");
    add_graph_pair(invariants_cmd, invariant_args.g1, invariant_args.g2);
    invariants_cmd->add_option("--kind", invariant_args.kind, "corona kind")
        ->check(CLI::IsMember(kinds));
    invariants_cmd->add_flag("--json", invariant_args.json, "machine-readable output");

    IntegralArgs integral_args;
    auto* integral_cmd =
        app.add_subcommand("integral-family", "construct an integral corona instance");
    integral_cmd->add_option("name", integral_args.family,
                             "vertex_complete|edge_complete|vertex_bipartite|edge_bipartite")
        ->required();
    integral_cmd->add_option("params", integral_args.params, "family parameters");
    integral_cmd->add_flag("--json", integral_args.json, "machine-readable output");

    SearchArgs search_args;
    auto* search_cmd =
        app.add_subcommand("cospectral-search", "enumerate cospectral pairs on n vertices");
    search_cmd->add_option("--n", search_args.n, "number of vertices (1..8)")->required();
    search_cmd->add_option("--matrix", search_args.matrix, "matrix kind")
        ->check(CLI::IsMember(matrices));
    search_cmd->add_flag("--regular", search_args.regular, "restrict to regular graphs");
    search_cmd->add_flag("--json", search_args.json, "machine-readable output");

    CospectralVerifyArgs cverify_args;
    auto* cverify_cmd = app.add_subcommand(
        "cospectral-verify", "check that a cospectral pair yields cospectral coronae");
    cverify_cmd->add_option("--first", cverify_args.a, "first graph of the pair")->required();
    cverify_cmd->add_option("--second", cverify_args.b, "second graph of the pair")
        ->required();
    cverify_cmd->add_option("--partner", cverify_args.h, "fixed partner graph")->required();
    cverify_cmd->add_option("--matrix", cverify_args.matrix, "matrix kind")
        ->check(CLI::IsMember(matrices));
    cverify_cmd->add_option("--kind", cverify_args.kind, "corona kind")
        ->check(CLI::IsMember(kinds));
    cverify_cmd->add_option("--side", cverify_args.side, "vary_g1|vary_g2")
        ->check(CLI::IsMember({"vary_g1", "vary_g2"}));
    cverify_cmd->add_flag("--json", cverify_args.json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (family->parsed()) return run_family(family_args, out);
        if (corona_cmd->parsed()) return run_corona(corona_args, out);
        if (charpoly_cmd->parsed()) return run_charpoly(charpoly_args, out);
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args, out);
        if (verify_cmd->parsed()) return run_verify(verify_args, out);
        if (invariants_cmd->parsed()) return run_invariants(invariant_args, out);
        if (integral_cmd->parsed()) return run_integral_family(integral_args, out);
        if (search_cmd->parsed()) return run_cospectral_search(search_args, out);
        if (cverify_cmd->parsed()) return run_cospectral_verify(cverify_args, out);
    } catch (const error& e) {
        err << e.what() << "\n";  // already prefixed with the error name
        return 3;
    } catch (const std::exception& e) {
        err << "INVALID_PARAMS: " << e.what() << "\n";
        return 3;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace subcorona
