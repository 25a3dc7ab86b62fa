#include "cli.hpp"

#include "secb/constraints.hpp"
#include "secb/experiments.hpp"
#include "secb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace secb::cli {

namespace {

using nlohmann::json;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json config_json(const ExperimentConfig& c) {
    return {{"delta", c.delta},           {"s", c.s},
            {"T", c.T},                   {"c", c.c},
            {"k_delta", c.k_delta_product()}, {"n_elements", c.n_elements},
            {"n_contour", c.n_contour},   {"y_max", c.y_max},
            {"nu", c.nu},                 {"sigma", c.sigma},
            {"n_terms", c.n_terms},       {"seed", c.seed}};
}

json run_json(const TableRun& run) {
    json rows = json::array();
    for (const auto& r : run.table.rows) rows.push_back({{"t", r.t}, {"computed", r.computed}, {"predicted", r.predicted}});
    return {{"config", config_json(run.config)},
            {"K", run.K},
            {"lambda", run.lambda},
            {"gamma", run.gamma},
            {"cutoff", run.cutoff},
            {"rows", rows},
            {"membership",
             {{"init_distance", run.membership.init_distance},
              {"secb_residual", run.membership.secb_residual},
              {"in_class", run.membership.in_class}}}};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path);
}

void write_manifest(const std::string& path, const std::string& command, const std::string& output,
                    json runs) {
    json m = {{"tool", "secb"},
              {"version", kVersion},
              {"command", command},
              {"output", output},
              {"created", utc_timestamp()},
              {"runs", std::move(runs)}};
    write_file(path, m.dump(2) + "\n");
}

// Shared experiment flags.
void add_experiment_options(CLI::App* cmd, ExperimentConfig& cfg, double& k_delta) {
    cmd->add_option("--seed", cfg.seed, "noise seed")->capture_default_str();
    cmd->add_option("--kdelta", k_delta, "K*delta product (default 0.142 at s=3.8, 0.084 at s=3.9)");
    cmd->add_option("--T", cfg.T, "final time")->capture_default_str();
    cmd->add_option("--c", cfg.c, "diffusion coefficient")->capture_default_str();
    cmd->add_option("--elements", cfg.n_elements, "finite elements")->capture_default_str();
    cmd->add_option("--contour-points", cfg.n_contour, "contour quadrature nodes")->capture_default_str();
    cmd->add_option("--ymax", cfg.y_max, "contour truncation |Im z|")->capture_default_str();
    cmd->add_option("--nu", cfg.nu, "hyperbola vertex parameter")->capture_default_str();
    cmd->add_option("--sigma", cfg.sigma, "hyperbola slope")->capture_default_str();
    cmd->add_option("--terms", cfg.n_terms, "reference series terms")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"SECB-regularized backward parabolic solver", "secb"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // lambda
    double K = 0.0, s = 0.0, T = 4.0, tol = kDefaultLambdaTol;
    auto* lam = app.add_subcommand("lambda", "solve x = K + x^(s/T)");
    lam->add_option("--K", K, "SECB ratio")->required();
    lam->add_option("--s", s, "SECB time")->required();
    lam->add_option("--T", T, "final time")->required();
    lam->add_option("--tol", tol, "relative tolerance")->capture_default_str();

    // sstar
    double delta = 0.0, M = 0.0;
    auto* sstar = app.add_subcommand("sstar", "critical SECB time s*(delta, M, K)");
    sstar->add_option("--delta", delta, "noise level")->required();
    sstar->add_option("--M", M, "a priori bound on ||u(T)||")->required();
    sstar->add_option("--K", K, "SECB ratio")->required();
    sstar->add_option("--T", T, "final time")->required();

    // table
    ExperimentConfig table_cfg;
    double table_kdelta = 0.0;
    std::string table_out, table_manifest;
    auto* table = app.add_subcommand("table", "error table at t = T/4, T/2, 3T/4, T");
    table->add_option("--delta", table_cfg.delta, "noise level")->required();
    table->add_option("--s", table_cfg.s, "SECB time")->required();
    table->add_option("--out", table_out, "CSV path (stdout when omitted)");
    table->add_option("--manifest", table_manifest, "JSON manifest path (default <out>.json)");
    add_experiment_options(table, table_cfg, table_kdelta);

    // figure
    ExperimentConfig fig_cfg;
    double fig_kdelta = 0.0;
    std::vector<double> deltas{1e-4, 1e-3, 1e-2};
    std::string fig_out, fig_manifest;
    auto* figure = app.add_subcommand("figure", "final-time profiles for several noise levels");
    figure->add_option("--s", fig_cfg.s, "SECB time")->required();
    figure->add_option("--deltas", deltas, "noise levels")->delimiter(',')->capture_default_str();
    figure->add_option("--out", fig_out, "TSV path (stdout when omitted)");
    figure->add_option("--manifest", fig_manifest, "JSON manifest path (default <out>.json)");
    add_experiment_options(figure, fig_cfg, fig_kdelta);

    // verify
    bool quick = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--quick", quick, "skip convergence-order sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*lam) {
            const auto root = solve_lambda(K, s, T, tol);
            out << "lambda = " << fmt("%.15g", root.lambda) << "\n"
                << "residual = " << fmt("%.3e", root.residual) << "\n"
                << "iterations = " << root.iterations << "\n";
        } else if (*sstar) {
            out << "s_star = " << fmt("%.15g", compute_s_star(delta, M, K, T)) << "\n";
        } else if (*table) {
            if (table->count("--kdelta")) table_cfg.k_delta = table_kdelta;
            const TableRun r = run_table(table_cfg);
            const std::string csv = format_table_csv(r.table);
            if (table_out.empty()) {
                out << csv;
            } else {
                write_file(table_out, csv);
                write_manifest(table_manifest.empty() ? table_out + ".json" : table_manifest, "table",
                               table_out, json::array({run_json(r)}));
            }
            err << "lambda=" << fmt("%.6g", r.lambda) << " gamma=" << fmt("%.6g", r.gamma)
                << " N=" << r.cutoff << " secb_residual=" << fmt("%.4g", r.membership.secb_residual)
                << (r.membership.in_class ? " (in class)" : " (not in class)") << "\n";
        } else if (*figure) {
            if (deltas.empty()) throw CLI::ValidationError("--deltas", "needs at least one value");
            std::vector<ExperimentConfig> configs;
            for (double d : deltas) {
                ExperimentConfig cfg = fig_cfg;
                cfg.delta = d;
                if (figure->count("--kdelta")) cfg.k_delta = fig_kdelta;
                configs.push_back(cfg);
            }
            const FigureData fig = run_figure(configs);
            const std::string tsv = format_figure_tsv(fig);
            if (fig_out.empty()) {
                out << tsv;
            } else {
                write_file(fig_out, tsv);
                json runs = json::array();
                for (const auto& r : fig.runs) runs.push_back(run_json(r));
                write_manifest(fig_manifest.empty() ? fig_out + ".json" : fig_manifest, "figure", fig_out,
                               std::move(runs));
            }
        } else if (*verify) {
            VerifyOptions opts;
            opts.quick = quick;
            if (const char* env = std::getenv("SECB_VERIFY_TOL_SCALE")) opts.tolerance_scale = std::atof(env);
            const auto results = run_invariant_suite(opts);
            int failed = 0;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << fmt("%.3e", r.value)
                    << " <= " << fmt("%.3e", r.tolerance) << ")\n";
                failed += r.passed ? 0 : 1;
            }
            out << results.size() - failed << "/" << results.size() << " checks passed\n";
            return failed == 0 ? kExitOk : 1;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

}  // namespace secb::cli
