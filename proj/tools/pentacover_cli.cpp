// pentacover command line: build the classified pentavalent symmetric
// graph families, compute automorphism groups, test isomorphism, verify
// covers, and run the acceptance suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "cli_run.hpp"
#include "pentacover/acceptance.hpp"
#include "pentacover/construct.hpp"
#include "pentacover/covers.hpp"
#include "pentacover/graph6.hpp"
#include "pentacover/modarith.hpp"
#include "pentacover/symmetry.hpp"

namespace {

using namespace pentacover;

struct FamilyArgs {
    std::string name;
    i64 m = 0, p = 0, e = 0;
    std::optional<i64> r, lambda;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool with_overrides = true) {
    cmd->add_option("--family", fa.name, "family key (see `catalog`)")->required();
    cmd->add_option("--m", fa.m, "parameter m");
    cmd->add_option("--p", fa.p, "parameter p (prime)");
    cmd->add_option("--e", fa.e, "parameter e");
    if (with_overrides) {
        fa.r.reset();
        fa.lambda.reset();
        cmd->add_option_function<i64>("--r", [&fa](i64 v) { fa.r = v; },
                                      "override the canonical root r");
        cmd->add_option_function<i64>("--lambda", [&fa](i64 v) { fa.lambda = v; },
                                      "override the canonical lambda");
    }
}

FamilyInstance build_family(const FamilyArgs& fa) {
    return family(fa.name, fa.m, fa.p, fa.e, fa.r, fa.lambda);
}

/// Canonical cover subgroup of the instance, transported onto the file
/// graph's labeling when the two differ by an isomorphism.
PermGroup locate_subgroup(const Graph& file_graph, const FamilyInstance& fi,
                          std::optional<PermGroup>& arc_group_out) {
    std::optional<PermGroup> K;
    std::optional<PermGroup> F;
    if (fi.is_cgd() || fi.family == "cd") {
        K = canonical_cover_subgroup(fi);
        if (!K) throw family_error(fi.family + ": no canonical cover subgroup (5 | (p+1))");
        F = canonical_arc_group(fi, false); // beta need not normalize N_4
    } else {
        AutResult a = automorphism_group(fi.graph);
        PermGroup A;
        A.degree = fi.graph.vertex_count();
        A.gens = a.generators;
        A = close(A);
        i64 korder = fi.graph.vertex_count() / 6;
        Graph k6 = family("k6").graph;
        K = find_dihedral_cover_group(fi.graph, A, korder, k6);
        if (!K) K = find_cover_group(fi.graph, A, korder, k6); // g48: quaternion
        if (!K) throw family_error(fi.family + ": no cover subgroup found in Aut");
        F = normalizer(A, *K);
    }
    if (!(file_graph == fi.graph)) {
        auto phi = are_isomorphic(file_graph, fi.graph);
        if (!phi)
            throw graph_error("input graph is not isomorphic to " + fi.family +
                              " at these parameters");
        Perm phii = phi->inverse();
        auto transport = [&](PermGroup& g) {
            for (auto& x : g.gens) x = phi->then(x).then(phii);
            g.closure.reset();
            g = close(g);
        };
        transport(*K);
        if (F && !F->known_order) transport(*F);
        else if (F) {
            for (auto& x : F->gens) x = phi->then(x).then(phii);
            F->closure.reset();
        }
    }
    arc_group_out = F;
    return *K;
}

int do_build(const FamilyArgs& fa, const std::string& outfile, const std::string& format,
             std::ostream& out) {
    FamilyInstance fi = build_family(fa);
    write_graph_file(outfile, fi.graph, format);
    out << fi.family << ": " << fi.graph.vertex_count() << " vertices, valency 5 -> " << outfile
        << " (" << format << ")\n";
    return 0;
}

int do_aut(const std::string& file, bool json_out, std::ostream& out) {
    Graph g = read_graph_file(file);
    AutResult a = automorphism_group(g);
    std::string stab_label = "n/a";
    PermGroup st = vertex_stabilizer(g, a, a.base_vertex);
    if (st.order() <= 10'000) stab_label = identify(fingerprint(st));
    std::optional<int> s;
    if (regular_valency(g) == std::optional<int>(5) && is_arc_transitive(g, a))
        s = s_transitivity(g, a);
    if (json_out) {
        nlohmann::json j;
        j["order"] = a.order;
        j["generators"] = static_cast<i64>(a.generators.size());
        j["stabilizer_order"] = st.order();
        j["stabilizer"] = stab_label;
        if (s)
            j["s"] = *s;
        else
            j["s"] = nullptr;
        out << j.dump(2) << "\n";
    } else {
        out << "|Aut| = " << a.order << " (" << a.generators.size() << " generators)\n";
        out << "vertex stabilizer: order " << st.order() << " = " << stab_label << "\n";
        if (s) out << "s-transitivity: " << *s << "\n";
    }
    return 0;
}

int do_iso(const std::string& f1, const std::string& f2, std::ostream& out) {
    Graph g1 = read_graph_file(f1), g2 = read_graph_file(f2);
    auto phi = are_isomorphic(g1, g2);
    out << (phi ? "isomorphic" : "not isomorphic") << "\n";
    return 0;
}

int do_solve_eq1(i64 m, std::ostream& out) {
    auto roots = solve_eq1(m);
    out << "x^4+x^3+x^2+x+1 = 0 (mod " << m << "): ";
    if (roots.empty()) {
        out << "no roots\n";
    } else {
        for (size_t i = 0; i < roots.size(); ++i) out << (i ? " " : "") << roots[i].value;
        out << "\n";
    }
    return 0;
}

int do_quotient(const std::string& file, const std::string& subgroup, const FamilyArgs& fa,
                const std::string& outfile, const std::string& format, std::ostream& out) {
    Graph g = read_graph_file(file);
    PermGroup K;
    if (subgroup == "canonical") {
        if (fa.name.empty())
            throw CLI::ValidationError("--subgroup canonical needs --family (and parameters)");
        FamilyInstance fi = build_family(fa);
        std::optional<PermGroup> F;
        K = locate_subgroup(g, fi, F);
    } else {
        std::ifstream in(subgroup);
        if (!in) throw graph_error("cannot open subgroup file " + subgroup);
        std::stringstream ss;
        ss << in.rdbuf();
        K.gens = perms_from_text(ss.str());
        if (K.gens.empty()) throw graph_error("subgroup file holds no permutations");
        K.degree = K.gens[0].degree();
        K = close(K);
    }
    auto [q, proj] = quotient(g, K);
    (void)proj;
    write_graph_file(outfile, q, format);
    out << "quotient: " << q.vertex_count() << " vertices -> " << outfile << "\n";
    return 0;
}

int do_verify_cover(const std::string& file, const FamilyArgs& fa, bool json_out,
                    std::ostream& out) {
    Graph cover = read_graph_file(file);
    FamilyInstance fi = build_family(fa);
    std::optional<PermGroup> F;
    PermGroup K = locate_subgroup(cover, fi, F);
    Graph base = cover_base_graph(fi);
    CoverReport rep = verify_symmetric_cover(cover, K, base, F ? &*F : nullptr);
    if (json_out) {
        out << cover_report_json(rep) << "\n";
    } else {
        out << "semiregular: " << (rep.semiregular ? "yes" : "no")
            << ", orbits: " << rep.orbit_count << ", quotient order "
            << rep.quotient.vertex_count()
            << ", valency preserved: " << (rep.valency_preserved ? "yes" : "no")
            << ", iso to base: " << (rep.quotient_iso_target ? "yes" : "no") << "\n";
        if (rep.fibre_group_order) out << "fibre group order: " << *rep.fibre_group_order << "\n";
        if (rep.fibre_arc_transitive)
            out << "fibre group arc-transitive: " << (*rep.fibre_arc_transitive ? "yes" : "no")
                << "\n";
        out << (rep.checks_passed ? "cover verified" : "cover verification FAILED") << "\n";
        for (const auto& f : rep.failures) out << "  - " << f << "\n";
    }
    return rep.checks_passed ? 0 : 1;
}

int do_catalog(std::ostream& out) {
    out << "family    parameters  conditions\n";
    for (const auto& d : family_catalog()) {
        out << "  " << d.name;
        for (size_t i = d.name.size(); i < 10; ++i) out << ' ';
        out << (d.parameters.empty() ? "-" : d.parameters) << "\n            conditions: "
            << d.conditions << "\n            |Aut|: " << d.aut_order << "\n";
    }
    return 0;
}

} // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pentavalent symmetric graph families: construction and verification"};
    app.require_subcommand(1);

    FamilyArgs build_fa;
    std::string build_out, build_format = "graph6";
    auto* cmd_build = app.add_subcommand("build", "construct a family member and write it");
    add_family_options(cmd_build, build_fa);
    cmd_build->add_option("-o,--out", build_out, "output file")->required();
    cmd_build->add_option("--format", build_format, "graph6 or sparse6")
        ->check(CLI::IsMember({"graph6", "sparse6"}));

    std::string aut_file;
    bool aut_json = false;
    auto* cmd_aut = app.add_subcommand("aut", "automorphism group of a graph file");
    cmd_aut->add_option("file", aut_file, "graph6/sparse6 file")->required();
    cmd_aut->add_flag("--json", aut_json, "JSON output");

    std::string iso_f1, iso_f2;
    auto* cmd_iso = app.add_subcommand("iso", "isomorphism test between two graph files");
    cmd_iso->add_option("file1", iso_f1)->required();
    cmd_iso->add_option("file2", iso_f2)->required();

    i64 eq1_m = 0;
    auto* cmd_eq1 = app.add_subcommand("solve-eq1", "roots of x^4+x^3+x^2+x+1 mod m");
    cmd_eq1->add_option("--m", eq1_m, "modulus")->required();

    std::string quot_file, quot_sub, quot_out, quot_format = "graph6";
    FamilyArgs quot_fa;
    auto* cmd_quot = app.add_subcommand("quotient", "quotient a graph by a semiregular subgroup");
    cmd_quot->add_option("file", quot_file)->required();
    cmd_quot->add_option("--subgroup", quot_sub,
                         "'canonical' (with --family) or a file of permutations")
        ->required();
    cmd_quot->add_option("--family", quot_fa.name, "family key for --subgroup canonical");
    cmd_quot->add_option("--m", quot_fa.m);
    cmd_quot->add_option("--p", quot_fa.p);
    cmd_quot->add_option("--e", quot_fa.e);
    cmd_quot->add_option("-o,--out", quot_out)->required();
    cmd_quot->add_option("--format", quot_format)->check(CLI::IsMember({"graph6", "sparse6"}));

    std::string vc_file;
    FamilyArgs vc_fa;
    bool vc_json = false;
    auto* cmd_vc = app.add_subcommand("verify-cover", "verify a graph as the family's cover");
    cmd_vc->add_option("cover", vc_file)->required();
    add_family_options(cmd_vc, vc_fa);
    cmd_vc->add_flag("--json", vc_json);

    auto* cmd_cat = app.add_subcommand("catalog", "list families and side conditions");

    bool acc_quick = false;
    std::string acc_manifest;
    auto* cmd_acc = app.add_subcommand("acceptance", "run the acceptance suite");
    cmd_acc->add_flag("--quick", acc_quick, "skip the 2662-vertex search checks");
    cmd_acc->add_option("--manifest", acc_manifest, "path to family_manifest.json");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_build->parsed()) return do_build(build_fa, build_out, build_format, out);
        if (cmd_aut->parsed()) return do_aut(aut_file, aut_json, out);
        if (cmd_iso->parsed()) return do_iso(iso_f1, iso_f2, out);
        if (cmd_eq1->parsed()) return do_solve_eq1(eq1_m, out);
        if (cmd_quot->parsed())
            return do_quotient(quot_file, quot_sub, quot_fa, quot_out, quot_format, out);
        if (cmd_vc->parsed()) return do_verify_cover(vc_file, vc_fa, vc_json, out);
        if (cmd_cat->parsed()) return do_catalog(out);
        if (cmd_acc->parsed()) {
            AcceptanceOptions opts;
            opts.quick = acc_quick;
            opts.manifest_path = acc_manifest;
            auto rs = run_acceptance(opts, out);
            return all_passed(rs) ? 0 : 1;
        }
    } catch (const family_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

#ifndef PENTACOVER_CLI_NO_MAIN
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_run(std::move(args), std::cout, std::cerr);
}
#endif
