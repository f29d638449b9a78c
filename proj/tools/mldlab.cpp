// mldlab: construct the Sylvester-indexed Fano family, compute minimal log
// discrepancies of cyclic-quotient and hypersurface-quotient germs, and emit
// verification certificates. Reports go to stdout (JSON by default), progress
// and diagnostics to stderr. Exit codes: 0 success, 1 a mathematical check
// failed, 2 bad usage or malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mldlab/alpha.hpp"
#include "mldlab/certificate.hpp"
#include "mldlab/family.hpp"
#include "mldlab/mld.hpp"
#include "mldlab/polynomial.hpp"
#include "mldlab/report.hpp"

namespace {

using namespace mldlab;
using report::json;

struct GlobalOptions {
    std::string format = "json";
    unsigned workers = 1;
    std::string budget = "10000000";
    bool brute_force = false;
};

ScanOptions make_scan_options(const GlobalOptions& g) {
    ScanOptions scan;
    scan.workers = g.workers;
    scan.progress = [](std::uint64_t done) {
        std::cerr << "progress: " << done << " candidates scanned\n";
    };
    return scan;
}

void emit(const std::string& command, const json& inputs, const json& results,
          std::chrono::steady_clock::time_point t0, const GlobalOptions& g,
          const std::string& flat_override = "") {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (g.format == "json") {
        std::cout << report::wrap(command, inputs, results, ms).dump(2) << '\n';
    } else if (g.format == "csv") {
        std::cout << (flat_override.empty() ? report::csv_flat(results) : flat_override);
    } else {
        std::cout << (flat_override.empty() ? report::tex_flat(results) : flat_override);
    }
}

int cmd_family(int n, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    FamilyMember F = build_family(n);
    json results = report::member_json(F);
    results["coordinate_points"] = report::quasismooth_json(F.equation);
    results["alpha"] = report::alpha_json(alpha_bounds(F));
    json inputs{{"n", std::to_string(n)}, {"format", g.format}};
    emit("family", inputs, results, t0, g);
    return 0;
}

int cmd_verify(int n, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    CertificateOptions opts;
    opts.brute_force = g.brute_force;
    opts.budget = parse_int(g.budget);
    opts.scan = make_scan_options(g);
    if (g.brute_force) {
        const FamilyMember probe = build_family(n);
        if (probe.a[static_cast<std::size_t>(n) + 1] > opts.budget)
            std::cerr << "note: brute force skipped, group order "
                      << probe.a[static_cast<std::size_t>(n) + 1].get_str()
                      << " exceeds budget " << opts.budget.get_str() << '\n';
    }
    FamilyCertificate cert = run_certificate(n, opts);
    json inputs{{"n", std::to_string(n)},
                {"brute_force", g.brute_force},
                {"budget", g.budget},
                {"workers", std::to_string(g.workers)},
                {"format", g.format}};
    emit("verify", inputs, report::certificate_json(cert), t0, g);
    return cert.all_ok() ? 0 : 1;
}

int cmd_mld_quotient(const std::string& r_str, const std::vector<std::string>& weight_strs,
                     const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    Int r = parse_int(r_str);
    std::vector<Int> weights;
    for (const std::string& w : weight_strs) weights.push_back(parse_int(w));
    QuotientSingularity q = make_quotient_singularity(r, weights);
    MldResult res = cyclic_quotient_mld(q, make_scan_options(g));
    json results;
    results["r"] = report::jint(q.order);
    results["weights"] = report::jint_list(weights);
    results["reduced_weights"] = report::jint_list(q.weights);
    results["mld"] = report::mld_result_json(res);
    json inputs{{"r", r_str},
                {"weights", weight_strs},
                {"workers", std::to_string(g.workers)},
                {"format", g.format}};
    emit("mld quotient", inputs, results, t0, g);
    return 0;
}

int cmd_mld_hypersurface(const std::string& chart_path, const std::string& r_str,
                         const std::vector<std::string>& weight_strs, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ifstream in(chart_path);
    if (!in) throw std::invalid_argument("cannot open chart file: " + chart_path);
    WeightedPolynomial chart = parse_polynomial(in);
    Int r = parse_int(r_str);
    std::vector<Int> weights = chart.weights;
    if (!weight_strs.empty()) {
        std::vector<Int> flag_weights;
        for (const std::string& w : weight_strs) flag_weights.push_back(parse_int(w));
        if (flag_weights != chart.weights)
            throw std::invalid_argument(
                "--weights disagrees with the chart file's weight line");
        weights = std::move(flag_weights);
    }
    MldResult res = hypersurface_quotient_mld(chart, r, weights, make_scan_options(g));
    json results;
    results["r"] = report::jint(r);
    results["weights"] = report::jint_list(weights);
    results["chart"] = report::pretty_monomials_json(chart);
    results["newton_nondegenerate"] = "assumed";
    results["mld"] = report::mld_result_json(res);
    json inputs{{"chart", chart_path},
                {"group", r_str},
                {"weights", weight_strs},
                {"workers", std::to_string(g.workers)},
                {"format", g.format}};
    emit("mld hypersurface", inputs, results, t0, g);
    return 0;
}

int cmd_table(int from, int to, const GlobalOptions& g) {
    const auto t0 = std::chrono::steady_clock::now();
    if (from < 2) throw std::invalid_argument("table range must start at n >= 2");
    if (to < from) throw std::invalid_argument("table range is empty: --to < --from");
    constexpr int kCertifyUpTo = 8;
    std::vector<report::TableRow> rows;
    bool all_pass = true;
    for (int n = from; n <= to; ++n) {
        report::TableRow row;
        row.n = n;
        if (n <= kCertifyUpTo) {
            CertificateOptions opts;
            opts.scan = make_scan_options(g);
            FamilyCertificate cert = run_certificate(n, opts);
            row.certificates_checked = true;
            row.certificates_ok = cert.all_ok();
            all_pass = all_pass && cert.all_ok();
            row.weights = cert.member.a;
            row.d = cert.member.d;
            row.mld = cert.closed_form;
            row.mld_sylvester_form = cert.sylvester_form;
            row.alpha_lower = cert.alpha.lower;
            row.alpha_upper = cert.alpha.upper;
        } else {
            FamilyMember F = build_family(n);
            AlphaBounds ab = alpha_bounds(F);
            row.certificates_checked = false;
            row.certificates_ok = true;
            row.weights = F.a;
            row.d = F.d;
            row.mld = closed_form_mld(F);
            row.mld_sylvester_form = sylvester_form_mld(F);
            row.alpha_lower = ab.lower;
            row.alpha_upper = ab.upper;
        }
        rows.push_back(std::move(row));
    }
    json results;
    results["rows"] = report::table_json(rows);
    results["all_certificates_pass"] = all_pass;
    json inputs{{"from", std::to_string(from)},
                {"to", std::to_string(to)},
                {"workers", std::to_string(g.workers)},
                {"format", g.format}};
    std::string flat;
    if (g.format == "csv")
        flat = report::table_csv(rows);
    else if (g.format == "tex")
        flat = report::table_tex(rows);
    emit("table", inputs, results, t0, g, flat);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of a Sylvester-indexed family of Fano hypersurfaces"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "tex"}));
    app.add_option("--workers", g.workers, "scan worker threads")
        ->envname("MLDLAB_WORKERS")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--budget", g.budget, "largest group order brute force may scan");
    app.add_flag("--brute-force", g.brute_force, "run the full group scan when affordable");

    int family_n = 0;
    auto* fam = app.add_subcommand("family", "print one family member");
    fam->fallthrough();
    fam->add_option("n", family_n, "member index (>= 2)")->required();

    int verify_n = 0;
    auto* ver = app.add_subcommand("verify", "run the full certificate for one member");
    ver->fallthrough();
    ver->add_option("n", verify_n, "member index (>= 2)")->required();

    auto* mld_cmd = app.add_subcommand("mld", "minimal log discrepancy of a germ");
    mld_cmd->fallthrough();
    mld_cmd->require_subcommand(1);

    std::string quot_r;
    std::vector<std::string> quot_weights;
    auto* quot = mld_cmd->add_subcommand("quotient", "cyclic quotient germ 1/r(b_1..b_s)");
    quot->fallthrough();
    quot->add_option("r", quot_r, "group order")->required();
    quot->add_option("weights", quot_weights, "group weights")->required()->expected(-1);

    std::string hyp_chart, hyp_r;
    std::vector<std::string> hyp_weights;
    auto* hyp = mld_cmd->add_subcommand("hypersurface",
                                        "hypersurface singularity divided by a cyclic group");
    hyp->fallthrough();
    hyp->add_option("--chart", hyp_chart, "chart file (weights line, then exponent rows)")
        ->required();
    hyp->add_option("--group", hyp_r, "group order")->required();
    hyp->add_option("--weights", hyp_weights, "group weights, must match the chart file")
        ->delimiter(',');

    int table_from = 0, table_to = 0;
    auto* tab = app.add_subcommand("table", "one summary row per member");
    tab->fallthrough();
    tab->add_option("--from", table_from, "first member")->required();
    tab->add_option("--to", table_to, "last member")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fam->parsed()) return cmd_family(family_n, g);
        if (ver->parsed()) return cmd_verify(verify_n, g);
        if (quot->parsed()) return cmd_mld_quotient(quot_r, quot_weights, g);
        if (hyp->parsed()) return cmd_mld_hypersurface(hyp_chart, hyp_r, hyp_weights, g);
        if (tab->parsed()) return cmd_table(table_from, table_to, g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
