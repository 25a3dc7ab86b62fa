#include "secb/experiments.hpp"

#include "secb/resolvent_fem.hpp"
#include "secb/spectral.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace secb {

double ExperimentConfig::k_delta_product() const {
    if (k_delta) return *k_delta;
    if (std::abs(s - 3.8) < 1e-12) return 0.142;
    if (std::abs(s - 3.9) < 1e-12) return 0.084;
    throw DomainError("no default K*delta for this s; pass it explicitly");
}

void ExperimentConfig::validate() const {
    if (!(delta > 0.0) || !(T > 0.0) || !(c > 0.0)) throw DomainError("delta, T and c must be positive");
    if (!(s > 0.0 && s < T)) throw DomainError("s must lie in (0, T)");
    if (!(k_delta_product() > 0.0)) throw DomainError("K*delta must be positive");
    if (n_elements < 2 || n_terms == 0) throw DomainError("mesh and series sizes must be positive");
    if (n_contour == 0 || n_contour % 2 != 0) throw DomainError("contour node count must be even and positive");
    if (!(nu > 0.0) || !(sigma > 0.0) || !(y_max > 0.0)) throw DomainError("contour parameters must be positive");
}

GridFunction perturb(const GridFunction& u, double delta, std::uint64_t seed) {
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    std::mt19937_64 rng(seed);
    GridFunction noise(u.mesh);
    for (auto& v : noise.values) {
        const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        v = 2.0 * unit - 1.0;
    }
    const double norm = mass_norm(noise);
    if (!(norm > 0.0)) throw std::runtime_error("degenerate noise sample");
    noise *= delta / norm;
    return u + noise;
}

std::uint64_t run_seed(std::uint64_t seed, double delta, double s) {
    const auto d = std::bit_cast<std::uint64_t>(delta);
    const auto t = std::bit_cast<std::uint64_t>(s);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<double> table_times(double T) { return {T / 4.0, T / 2.0, 3.0 * T / 4.0, T}; }

TableRun run_table(const ExperimentConfig& config) {
    config.validate();
    const Mesh mesh(config.n_elements);
    const ReferenceProblem reference{config.c, config.T, config.n_terms};

    const GridFunction u_ref0 = reference_field(mesh, 0.0, reference);
    const GridFunction u0 = perturb(u_ref0, config.delta, run_seed(config.seed, config.delta, config.s));

    SecbParams params;
    params.delta = config.delta;
    params.K = config.K();
    params.s = config.s;
    params.T = config.T;

    SolverOptions options;
    options.nu = config.nu;
    options.sigma = config.sigma;
    options.n_points = config.n_contour;
    options.y_max = config.y_max;
    options.mode = EvaluationMode::contour;
    options.execution = config.execution;
    const RegularizedSolver solver(params, mesh, CoefficientField(config.c), options);

    auto times = table_times(config.T);
    times.push_back(config.s);
    const auto u = solver.evaluate(u0, times);

    TableRun run;
    run.config = config;
    run.lambda = solver.lambda().lambda;
    run.K = params.K;
    run.gamma = solver.contour().gamma;
    run.cutoff = solver.cutoff();
    for (std::size_t i = 0; i < 4; ++i) {
        const double t = times[i];
        const GridFunction u_ref = reference_field(mesh, t, reference);
        run.table.rows.push_back(
            {t, mass_norm(u[i] - u_ref), secb_stability_bound(t, config.T, run.lambda, config.delta)});
    }
    run.membership.init_distance = mass_norm(u0 - u_ref0);
    run.membership.secb_residual = mass_norm(u[3] - u[4]);
    run.membership.in_class = run.membership.init_distance <= params.delta * (1.0 + 1e-12) &&
                              run.membership.secb_residual <= params.K * params.delta;
    run.final_state = u[3];
    return run;
}

std::vector<TableRun> run_tables_serial(const std::vector<ExperimentConfig>& configs) {
    std::vector<TableRun> runs;
    runs.reserve(configs.size());
    for (auto cfg : configs) {
        cfg.execution = Execution::serial;
        runs.push_back(run_table(cfg));
    }
    return runs;
}

std::vector<TableRun> run_tables(const std::vector<ExperimentConfig>& configs) {
    std::vector<TableRun> runs(configs.size());
    const auto n = static_cast<std::ptrdiff_t>(configs.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            auto cfg = configs[static_cast<std::size_t>(i)];
            cfg.execution = Execution::serial;
            runs[static_cast<std::size_t>(i)] = run_table(cfg);
        } catch (...) {
#pragma omp critical(secb_run_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return runs;
}

FigureData run_figure(const std::vector<ExperimentConfig>& configs) {
    if (configs.empty()) throw std::invalid_argument("figure needs at least one configuration");
    for (const auto& cfg : configs) {
        if (cfg.s != configs.front().s || cfg.n_elements != configs.front().n_elements)
            throw std::invalid_argument("figure configurations must share s and the mesh");
    }
    FigureData fig;
    fig.runs = run_tables(configs);

    const Mesh mesh(configs.front().n_elements);
    for (std::size_t i = 0; i <= mesh.n_elements(); ++i) {
        fig.x.push_back(mesh.node(i));
        fig.exact.push_back(tent(mesh.node(i)));
    }
    for (const auto& run : fig.runs) {
        fig.deltas.push_back(run.config.delta);
        std::vector<double> col;
        col.reserve(fig.x.size());
        col.push_back(0.0);
        col.insert(col.end(), run.final_state.values.begin(), run.final_state.values.end());
        col.push_back(0.0);
        fig.computed.push_back(std::move(col));
    }
    return fig;
}

namespace {

void append(std::string& out, const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    out += buf;
}

}  // namespace

std::string format_table_csv(const ErrorTable& table) {
    std::string out = "t,computed,predicted\n";
    for (const auto& row : table.rows) {
        append(out, "%.5e", row.t);
        out += ',';
        append(out, "%.5e", row.computed);
        out += ',';
        append(out, "%.5e", row.predicted);
        out += '\n';
    }
    return out;
}

std::string format_figure_tsv(const FigureData& figure) {
    std::string out = "x\texact";
    for (double d : figure.deltas) {
        out += "\tdelta=";
        append(out, "%.0e", d);
    }
    out += '\n';
    for (std::size_t i = 0; i < figure.x.size(); ++i) {
        append(out, "%.9e", figure.x[i]);
        out += '\t';
        append(out, "%.9e", figure.exact[i]);
        for (const auto& col : figure.computed) {
            out += '\t';
            append(out, "%.9e", col[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace secb
