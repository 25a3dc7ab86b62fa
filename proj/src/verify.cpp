#include "secb/verify.hpp"

#include "secb/constraints.hpp"
#include "secb/contour.hpp"
#include "secb/regularizer.hpp"
#include "secb/resolvent_fem.hpp"
#include "secb/spectral.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace secb {

namespace {

constexpr double kC = 1.0 / 32.0;
constexpr double kT = 4.0;

struct Suite {
    double scale;
    std::vector<CheckResult> results;

    void record(std::string name, double value, double tol) {
        const double scaled = tol * scale;
        results.push_back({std::move(name), value <= scaled, value, scaled});
    }
};

// Root of x - K - x^p through a bracketing solver independent of the
// fixed-point iteration.
double bracketed_lambda(double K, double p) {
    auto f = [&](double x) { return x - K - std::pow(x, p); };
    double lo = std::max(1.0, K);
    double hi = K + std::pow(K + 1.0, p) + 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    if (f(lo) >= 0.0) return lo;
    std::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
    return 0.5 * (a + b);
}

void check_lambda(Suite& suite, bool quick) {
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> logK(-2.0, 4.0), frac(0.05, 0.95), Tdist(0.5, 10.0);
    const int samples = quick ? 20 : 100;
    double worst_residual = 0.0, worst_gap = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double K = std::pow(10.0, logK(rng));
        const double T = Tdist(rng);
        const double s = frac(rng) * T;
        const auto root = solve_lambda(K, s, T);
        worst_residual = std::max(worst_residual, root.residual);
        const double ref = bracketed_lambda(K, s / T);
        worst_gap = std::max(worst_gap, std::abs(root.lambda - ref) / ref);
    }
    suite.record("lambda fixed-point residual", worst_residual, 1e-12);
    suite.record("lambda vs bracketing root", worst_gap, 1e-12);

    // s = s* recovers Lambda = M / delta.
    const double delta = 1e-4, M = 1.0, K = 1420.0;
    const double s_star = compute_s_star(delta, M, K, kT);
    const auto root = solve_lambda(K, s_star, kT);
    suite.record("Lambda(s*) = M/delta", std::abs(root.lambda - M / delta) / (M / delta), 1e-8);
}

void check_contour(Suite& suite) {
    const double lambda = solve_lambda(1420.0, 3.8, kT).lambda;
    const Contour contour = build_contour(lambda, kT);
    const double cutoff = std::log(lambda) / kT;
    suite.record("contour vertex at log(Lambda)/T", std::abs(contour.vertex() - cutoff) / cutoff, 1e-14);

    const auto q = discretize(contour);
    double asym = 0.0;
    for (std::size_t j = 0; j < q.count(); ++j)
        asym = std::max(asym, std::abs(q.nodes[j] - std::conj(q.nodes[q.count() - 1 - j])));
    suite.record("contour conjugate symmetry", asym, 1e-14);

    double worst = 0.0;
    const double lam1 = eigenvalue(1, kC);
    for (double t : {kT / 4.0, kT / 2.0, 3.0 * kT / 4.0, kT}) {
        const double exact = std::exp(lam1 * t);
        worst = std::max(worst, std::abs(scalar_contour_integral(q, t, lam1) - exact) / exact);
    }
    suite.record("scalar contour integral of one pole", worst, 1e-6);
}

void check_resolvent(Suite& suite, bool quick) {
    const Mesh mesh(1024);
    const CoefficientField coeff(kC);
    const ResolventSolver solver(mesh, coeff);
    const GridFunction phi1 = sample(mesh, [](double x) { return eigenfunction(1, x); });

    const complex z(1.7, 0.9);
    const auto v = solver.solve(z, phi1);
    const auto w = solver.solve(std::conj(z), phi1);
    suite.record("resolvent conjugate symmetry", mass_norm(w - conj(v)) / mass_norm(v), 1e-13);

    double eig_gap = 0.0;
    for (std::size_t k = 1; k <= 16; ++k)
        eig_gap = std::max(eig_gap, std::abs(discrete_eigenvalue(k, mesh, kC) / eigenvalue(k, kC) - 1.0));
    suite.record("discrete eigenvalues within 1%", eig_gap, 1e-2);

    if (quick) return;
    std::vector<double> errors;
    for (std::size_t n : {128, 256, 512}) {
        const Mesh m(n);
        const GridFunction u = sample(m, [](double x) { return eigenfunction(1, x); });
        const auto vz = resolvent_solve(1.0, u, coeff);
        double err = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j)
            err = std::max(err, std::abs(vz[j] - u[j] / (1.0 - kC)));
        errors.push_back(err);
    }
    const double worst_ratio_gap =
        std::max(std::abs(errors[0] / errors[1] - 4.0), std::abs(errors[1] / errors[2] - 4.0));
    suite.record("FEM second-order convergence", worst_ratio_gap, 0.2);
}

void check_regularizer(Suite& suite) {
    const Mesh mesh(1024);
    SecbParams params{1e-4, 1420.0, 3.8, kT, std::nullopt};
    const RegularizedSolver solver(params, mesh, CoefficientField(kC));
    const std::size_t N = solver.cutoff();

    GridFunction u0(mesh);
    for (std::size_t k = 1; k <= N; ++k) {
        const double a = 1.0 / static_cast<double>(k);
        u0 += a * sample(mesh, [k](double x) { return eigenfunction(k, x); });
    }
    const auto times = std::vector<double>{kT / 4.0, kT / 2.0, 3.0 * kT / 4.0, kT};
    const auto contour = solver.evaluate(u0, times);
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto oracle = spectral_regularized_solution(u0, times[i], solver.lambda().lambda, kT, kC);
        worst = std::max(worst, mass_norm(contour[i] - oracle) / mass_norm(oracle));
    }
    suite.record("contour agrees with spectral oracle", worst, 1e-3);

    const auto full = solver.evaluate_full(u0, kT);
    suite.record("imaginary residue of contour sum",
                 mass_norm(full.imag) / (mass_norm(full.real) + params.delta), 1e-8);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options) {
    Suite suite{options.tolerance_scale, {}};
    check_lambda(suite, options.quick);
    check_contour(suite);
    check_resolvent(suite, options.quick);
    check_regularizer(suite);
    return suite.results;
}

}  // namespace secb
