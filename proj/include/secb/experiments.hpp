#pragma once

// Numerical experiments on the tent test problem: error tables against the
// series reference, SECB membership and figure data at the final time.

#include "secb/mesh.hpp"
#include "secb/regularizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace secb {

struct ExperimentConfig {
    double delta = 1e-4;
    double s = 3.8;
    double T = 4.0;
    double c = 1.0 / 32.0;
    /// Product K * delta; when unset it follows the s rule (0.142 at s = 3.8,
    /// 0.084 at s = 3.9).
    std::optional<double> k_delta;
    std::size_t n_elements = 1024;
    std::size_t n_contour = kDefaultContourPoints;
    double y_max = kDefaultYMax;
    double nu = 0.5;
    double sigma = 1.0;
    std::size_t n_terms = 1000;
    std::uint64_t seed = 1;
    Execution execution = Execution::parallel;

    /// K delta product in effect; throws DomainError when it cannot be derived.
    double k_delta_product() const;
    double K() const { return k_delta_product() / delta; }
    void validate() const;
};

/// Adds seeded uniform(-1, 1) nodal noise rescaled to mass norm exactly delta.
/// The stream depends only on the seed.
GridFunction perturb(const GridFunction& u, double delta, std::uint64_t seed);

/// Seed for one (seed, delta, s) run, so independent runs own distinct streams.
std::uint64_t run_seed(std::uint64_t seed, double delta, double s);

struct ErrorRow {
    double t = 0.0;
    double computed = 0.0;
    double predicted = 0.0;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
};

struct TableRun {
    ExperimentConfig config;
    ErrorTable table;
    ClassMembership membership;
    double lambda = 0.0;
    double K = 0.0;
    double gamma = 0.0;
    std::size_t cutoff = 0;
    GridFunction final_state;  // regularized solution at t = T
};

/// Times T/4, T/2, 3T/4, T.
std::vector<double> table_times(double T);

TableRun run_table(const ExperimentConfig& config);

/// Serial loop over runs.
std::vector<TableRun> run_tables_serial(const std::vector<ExperimentConfig>& configs);
/// Runs distributed over OpenMP threads; results in input order.
std::vector<TableRun> run_tables(const std::vector<ExperimentConfig>& configs);

struct FigureData {
    std::vector<double> x;                     // all mesh nodes, boundaries included
    std::vector<double> exact;                 // tent
    std::vector<double> deltas;
    std::vector<std::vector<double>> computed; // one column per delta
    std::vector<TableRun> runs;

    /// Value columns next to x: the exact profile plus one per delta.
    std::size_t column_count() const { return 1 + computed.size(); }
};

/// Computed final states for configurations sharing s and mesh.
FigureData run_figure(const std::vector<ExperimentConfig>& configs);

std::string format_table_csv(const ErrorTable& table);
std::string format_figure_tsv(const FigureData& figure);

}  // namespace secb
