#include "doctest.h"

#include "secb/constraints.hpp"
#include "secb/experiments.hpp"
#include "secb/resolvent_fem.hpp"
#include "secb/spectral.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

using namespace secb;

namespace {

// Predicted columns, rows T/4, T/2, 3T/4, T.
constexpr std::array<std::array<double, 4>, 3> kTable1{{
    {1.61e-3, 1.29e-2, 1.04e-1, 8.33e-1},
    {9.59e-3, 4.59e-2, 2.20e-1, 1.06},
    {5.86e-2, 1.71e-1, 5.02e-1, 1.47},
}};
constexpr std::array<std::array<double, 4>, 3> kTable2{{
    {1.63e-3, 1.33e-2, 1.09e-1, 8.88e-1},
    {9.78e-3, 4.79e-2, 2.34e-1, 1.15},
    {6.00e-2, 1.80e-1, 5.39e-1, 1.62},
}};
constexpr std::array<double, 3> kDeltas{1e-4, 1e-3, 1e-2};

ExperimentConfig config(double delta, double s) {
    ExperimentConfig c;
    c.delta = delta;
    c.s = s;
    return c;
}

}  // namespace

TEST_CASE("ExperimentConfig") {
    CHECK(config(1e-4, 3.8).K() == doctest::Approx(1420.0));
    CHECK(config(1e-2, 3.9).K() == doctest::Approx(8.4));
    auto c = config(1e-3, 3.5);
    CHECK_THROWS_AS(c.K(), DomainError);
    c.k_delta = 0.2;
    CHECK(c.K() == doctest::Approx(200.0));
    c.n_contour = 7;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("perturb") {
    const Mesh mesh(1024);
    const GridFunction u = sample(mesh, tent);
    for (double delta : kDeltas) {
        const auto p = perturb(u, delta, 17);
        CHECK(mass_norm(p - u) == doctest::Approx(delta).epsilon(1e-12));
    }
    CHECK(mass_norm(perturb(u, 1e-3, 5) - perturb(u, 1e-3, 5)) == 0.0);
    CHECK(mass_norm(perturb(u, 1e-3, 5) - perturb(u, 1e-3, 6)) > 1e-4);
    CHECK(run_seed(1, 1e-4, 3.8) != run_seed(1, 1e-3, 3.8));
    CHECK(run_seed(1, 1e-4, 3.8) != run_seed(2, 1e-4, 3.8));
    CHECK(run_seed(1, 1e-4, 3.8) == run_seed(1, 1e-4, 3.8));
    CHECK_THROWS_AS(perturb(u, 0.0, 1), DomainError);
}

TEST_CASE("table_times") {
    const auto t = table_times(4.0);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == 1.0);
    CHECK(t[3] == 4.0);
}

TEST_CASE("predicted columns reproduce both tables") {
    for (std::size_t d = 0; d < kDeltas.size(); ++d) {
        const auto r38 = run_table(config(kDeltas[d], 3.8));
        const auto r39 = run_table(config(kDeltas[d], 3.9));
        for (std::size_t i = 0; i < 4; ++i) {
            CAPTURE(kDeltas[d]);
            CAPTURE(i);
            CHECK(std::abs(r38.table.rows[i].predicted / kTable1[d][i] - 1.0) <= 0.01);
            CHECK(std::abs(r39.table.rows[i].predicted / kTable2[d][i] - 1.0) <= 0.01);
        }
    }
}

TEST_CASE("run_table at delta = 1e-4") {
    const auto run = run_table(config(1e-4, 3.8));
    CHECK(run.cutoff == 8);
    CHECK(run.K == doctest::Approx(1420.0));
    CHECK(run.gamma == doctest::Approx(2.583).epsilon(2e-3));
    REQUIRE(run.table.rows.size() == 4);
    CHECK(run.table.rows.back().computed == doctest::Approx(0.148).epsilon(0.2));
    for (const auto& row : run.table.rows) CHECK(row.computed <= row.predicted);
    CHECK(run.final_state.size() == 1023);
    CHECK(run.membership.init_distance == doctest::Approx(1e-4).epsilon(1e-10));
    CHECK(run.membership.in_class);

    // Same config, same numbers.
    const auto again = run_table(config(1e-4, 3.8));
    for (std::size_t i = 0; i < 4; ++i) CHECK(again.table.rows[i].computed == run.table.rows[i].computed);
}

TEST_CASE("parallel run_tables matches the serial loop") {
    std::vector<ExperimentConfig> configs;
    for (double d : kDeltas) configs.push_back(config(d, 3.8));
    const auto a = run_tables_serial(configs);
    const auto b = run_tables(configs);
    REQUIRE(a.size() == b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(a[r].table.rows[i].computed == doctest::Approx(b[r].table.rows[i].computed).epsilon(1e-12));
            CHECK(a[r].table.rows[i].predicted == b[r].table.rows[i].predicted);
        }
}

TEST_CASE("run_figure") {
    std::vector<ExperimentConfig> configs;
    for (double d : kDeltas) configs.push_back(config(d, 3.8));
    const auto fig = run_figure(configs);
    CHECK(fig.x.size() == 1025);
    CHECK(fig.column_count() == 4);
    CHECK(fig.x.front() == 0.0);
    CHECK(fig.x.back() == doctest::Approx(std::numbers::pi));
    CHECK(fig.exact[256] == doctest::Approx(4.0));
    for (const auto& col : fig.computed) {
        REQUIRE(col.size() == 1025);
        CHECK(col.front() == 0.0);
        CHECK(col.back() == 0.0);
    }
    // Interior columns are the table runs' final states.
    for (std::size_t r = 0; r < fig.runs.size(); ++r) {
        GridFunction interior(fig.runs[r].final_state.mesh,
                              std::vector<double>(fig.computed[r].begin() + 1, fig.computed[r].end() - 1));
        const GridFunction exact = sample(interior.mesh, tent);
        CHECK(mass_norm(interior - exact) == doctest::Approx(fig.runs[r].table.rows.back().computed).epsilon(2e-2));
    }

    auto mixed = configs;
    mixed[1].s = 3.9;
    CHECK_THROWS_AS(run_figure(mixed), std::invalid_argument);
}

TEST_CASE("formatting") {
    ErrorTable t;
    t.rows.push_back({1.0, 4.25e-5, 1.61e-3});
    t.rows.push_back({4.0, 0.148, 0.833});
    CHECK(format_table_csv(t) == "t,computed,predicted\n1.00000e+00,4.25000e-05,1.61000e-03\n"
                                 "4.00000e+00,1.48000e-01,8.33000e-01\n");

    FigureData f;
    f.x = {0.0, 1.0};
    f.exact = {0.0, 0.5};
    f.deltas = {1e-4};
    f.computed = {{0.0, 0.25}};
    const std::string tsv = format_figure_tsv(f);
    std::istringstream in(tsv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x\texact\tdelta=1e-04");
    CHECK(tsv.find("1.000000000e+00\t5.000000000e-01\t2.500000000e-01") != std::string::npos);
}
