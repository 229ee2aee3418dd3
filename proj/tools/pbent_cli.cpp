#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include <pbent/pbent.hpp>

#ifndef PBENT_GOLDEN_DIR
#define PBENT_GOLDEN_DIR "test-data"
#endif

using namespace pbent;

namespace {

int report(const std::vector<Check>& checks) {
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        ok = ok && c.pass;
    }
    return ok ? 0 : 2;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write " + path);
    out << text;
}

ClassificationReport run_classification(int p, int n, int degree_bound, unsigned jobs, const std::string& ckpt,
                                        bool quiet) {
    EnumerateOptions opt;
    opt.jobs = jobs;
    opt.checkpoint = ckpt;
    if (!quiet)
        opt.progress = [](std::uint64_t done, std::uint64_t total) {
            if (done == total || done % std::max<std::uint64_t>(1, total / 20) == 0)
                std::cerr << "\r" << done << "/" << total << " chunks" << std::flush;
        };
    auto en = degree_bound ? enumerate_bent_degree_bounded(p, n, degree_bound, opt) : enumerate_bent_even(p, n, opt);
    if (!quiet) std::cerr << "\n";
    return classify_bent_set(std::move(en));
}

int cmd_classify(int p, int n, int degree_bound, unsigned jobs, const std::string& ckpt, bool unsafe,
                 const std::string& json_out, const std::string& csv_out) {
    const std::set<std::pair<int, int>> known{{3, 2}, {3, 3}, {5, 2}};
    if (!known.count({p, n}) && !unsafe) {
        std::cerr << "classification is limited to (3,2), (3,3) and (5,2); pass --unsafe-scale to override\n";
        return 1;
    }
    auto rep = run_classification(p, n, degree_bound, jobs, ckpt, false);
    const auto& en = rep.enumeration;
    std::cout << "mode " << en.mode << ": " << en.candidates << " candidates, " << en.bent.size() << " bent, "
              << rep.orbits.size() << " orbits (" << en.seconds << " s)\n";
    if (en.chunks_resumed) std::cout << "resumed " << en.chunks_resumed << " of " << en.chunks_total << " chunks\n";
    std::cout << orbit_csv(rep);
    if (!json_out.empty()) write_file(json_out, orbit_report_json(rep).dump(2) + "\n");
    if (!csv_out.empty()) write_file(csv_out, orbit_csv(rep));

    if (!known.count({p, n})) return 0;
    auto fx = load_fixture(PBENT_GOLDEN_DIR, fixture_for(p, n));
    auto checks = classification_checks(rep, fx);
    if (degree_bound) {
        if (fx.contains("degree_bound_" + std::to_string(degree_bound))) {
            const auto& d = fx.at("degree_bound_" + std::to_string(degree_bound));
            checks.push_back({"degree-bounded candidate count", en.candidates == d.at("candidates").get<std::uint64_t>(),
                              std::to_string(en.candidates)});
        }
    }
    auto tables = table_checks(rep, fx);
    checks.insert(checks.end(), tables.begin(), tables.end());
    return report(checks);
}

int cmd_analyze(int p, int n, const std::string& values, const std::string& anf, const std::string& dot_out,
                const std::string& json_out) {
    PAryFunction f = values.empty() ? evaluate_anf(parse_anf(anf, p, n), p, n) : parse_values(p, n, values);
    json j;
    j["p"] = p;
    j["n"] = n;
    j["values"] = values_csv(f);
    j["anf"] = to_string(to_anf(f));
    j["even"] = is_even(f);
    j["signature"] = signature(f);
    auto W = walsh_transform(f);
    j["walsh"] = spectrum_json(W, p, n)["values"];
    j["profile"] = profile_json(classify_regularity(f, W));
    auto g = build_cayley_graph(f);
    j["self_loops"] = g.self_loop_warning;
    j["components"] = connected_components(g).count;
    if (auto s = is_strongly_regular_unweighted(g)) j["unweighted_srg"] = {s->v, s->k, s->lambda, s->mu};
    else j["unweighted_srg"] = nullptr;
    j["weighted_srg"] = weighted_srg_json(weighted_srg_verdict(g));
    if (is_even(f) && !g.self_loop_warning) {
        auto spec = spectrum_via_fourier(f);
        json ev = json::array();
        for (const auto& e : spec.eigenvalues) ev.push_back(to_json(e));
        j["eigenvalues"] = ev;
        j["eigen_relation"] = spec.eigen_relation_holds;
        auto curves = level_curves(f);
        auto trace = intersection_numbers_trace(g, curves);
        j["level_curves"] = wpds_json(is_weighted_pds(curves), &trace);
        j["trace_tables"] = trace_tables_json(trace);
    }
    if (!dot_out.empty()) write_file(dot_out, to_dot(g));
    if (!json_out.empty()) write_file(json_out, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_search(int n, std::uint64_t seed, const std::string& trace_out) {
    auto r = search_bent(n, seed);
    std::cout << values_csv(r.f) << "\n";
    std::cout << "nodes " << r.nodes << ", bent " << (is_bent(r.f) ? "yes" : "no") << "\n";
    if (!trace_out.empty()) {
        // one (vector, bit, W) triple per assignment, root first
        json t = json::array();
        for (const auto& s : r.trace) t.push_back(json::array({index_vector(s.vector, 2, n), s.bit, s.W}));
        write_file(trace_out, t.dump() + "\n");
    }
    return 0;
}

int cmd_lemma34() {
    auto en = enumerate_bent_even(3, 2);
    auto r = regularity_characterization(en.bent);
    std::cout << "values,regular,weakly_regular,weighted_srg,complete\n";
    for (const auto& row : r.rows)
        std::cout << values_csv(row.f) << "," << row.regular << "," << row.weakly_regular << "," << row.weighted_srg
                  << "," << row.complete << "\n";
    return report({{"weighted SRG characterizes regularity over " + std::to_string(r.rows.size()) + " bent functions", r.holds, ""}});
}

int cmd_conjectures(unsigned jobs) {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
        auto rep = run_classification(p, n, 0, jobs, "", true);
        std::cout << "GF(" << p << ")^" << n << "\n";
        for (const auto& o : conjecture_report(rep)) {
            std::cout << "  " << to_string(to_anf(o.f)) << " (orbit " << o.orbit_size << ")"
                      << " homogeneous=" << o.homogeneous << " weakly_regular=" << o.weakly_regular
                      << " weighted_srg=" << o.weighted_srg << " mu_ii=";
            for (std::size_t i = 0; i < o.mu_diagonal.size(); ++i)
                std::cout << (i ? "," : "") << (o.mu_diagonal[i].empty() ? "-" : to_string(o.mu_diagonal[i]));
            std::cout << "\n";
            if (!o.main_holds) std::cout << "    counterexample: weighted PDS but not homogeneous and weakly regular\n";
            if (o.walsh_applies && !o.walsh_holds) std::cout << "    counterexample: weakly regular weighted SRG with mu_ii != 0\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-ary bent function toolkit"};
    app.require_subcommand(1);

    int p = 3, n = 2, degree_bound = 0;
    unsigned jobs = 0;
    std::string resume, json_out, csv_out, values, anf, dot_out;
    bool unsafe = false;
    std::string trace_out;
    std::uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "enumerate and classify even bent functions");
    classify->add_option("--p", p)->required();
    classify->add_option("--n", n)->required();
    classify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    classify->add_option("--resume", resume, "checkpoint file");
    classify->add_option("--degree-bound", degree_bound, "restrict to even polynomials of degree <= d");
    classify->add_flag("--unsafe-scale", unsafe);
    classify->add_option("--json", json_out);
    classify->add_option("--csv", csv_out);

    auto* analyze = app.add_subcommand("analyze", "report on a single function");
    analyze->add_option("--p", p)->required();
    analyze->add_option("--n", n)->required();
    auto* vopt = analyze->add_option("--values", values, "value table, comma separated");
    auto* aopt = analyze->add_option("--anf", anf, "polynomial such as x0^2+x0*x1");
    vopt->excludes(aopt);
    analyze->add_option("--emit-dot", dot_out);
    analyze->add_option("--json", json_out);

    auto* search = app.add_subcommand("search-bent", "randomised search for a Boolean bent function");
    search->add_option("--n", n)->required();
    search->add_option("--seed", seed)->required();
    search->add_option("--trace", trace_out, "write the assignment trace as JSON");

    auto* lemma = app.add_subcommand("lemma34", "check the (3,2) weighted SRG / regularity equivalence");
    auto* conj = app.add_subcommand("conjectures", "report on the weighted PDS conjectures");
    conj->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*classify) return cmd_classify(p, n, degree_bound, jobs, resume, unsafe, json_out, csv_out);
        if (*analyze) {
            if (values.empty() == anf.empty()) {
                std::cerr << "analyze needs exactly one of --values or --anf\n";
                return 1;
            }
            return cmd_analyze(p, n, values, anf, dot_out, json_out);
        }
        if (*search) return cmd_search(n, seed, trace_out);
        if (*lemma) return cmd_lemma34();
        if (*conj) return cmd_conjectures(jobs);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
