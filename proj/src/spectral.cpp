#include "secb/spectral.hpp"

#include "secb/constraints.hpp"

#include <cmath>
#include <numbers>

namespace secb {

namespace {

const double kNormalization = std::sqrt(2.0 / std::numbers::pi);

}  // namespace

double eigenvalue(std::size_t k, double c) {
    const double kk = static_cast<double>(k);
    return c * kk * kk;
}

double eigenfunction(std::size_t k, double x) {
    return kNormalization * std::sin(static_cast<double>(k) * x);
}

std::size_t truncation_index(double lambda, double T, double c) {
    if (!(lambda > 1.0)) throw DomainError("Lambda must exceed 1");
    if (!(T > 0.0) || !(c > 0.0)) throw DomainError("T and c must be positive");
    const double cutoff = std::log(lambda) / T;
    const double guarded = cutoff * (1.0 - 1e-12);
    std::size_t N = 0;
    while (eigenvalue(N + 1, c) < guarded) ++N;
    return N;
}

double SpectralExpansion::norm() const {
    double acc = 0.0;
    for (double a : coefficients) acc += a * a;
    return std::sqrt(acc);
}

SpectralExpansion analyze(const GridFunction& u, std::size_t n_modes) {
    // Boundary values vanish, so the trapezoid rule is h times the interior sum.
    const Mesh& mesh = u.mesh;
    SpectralExpansion e;
    e.coefficients.assign(n_modes, 0.0);
    for (std::size_t k = 1; k <= n_modes; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j)
            acc += u[j] * eigenfunction(k, mesh.interior_node(j));
        e.coefficients[k - 1] = mesh.h() * acc;
    }
    return e;
}

GridFunction synthesize(const SpectralExpansion& expansion, const Mesh& mesh) {
    GridFunction u(mesh);
    for (std::size_t k = 1; k <= expansion.size(); ++k) {
        const double a = expansion[k - 1];
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += a * eigenfunction(k, mesh.interior_node(j));
    }
    return u;
}

GridFunction project_gamma(const GridFunction& u, std::size_t N) {
    return synthesize(analyze(u, N), u.mesh);
}

GridFunction spectral_regularized_solution(const GridFunction& u0, double t, double lambda,
                                           double T, double c) {
    if (!(t >= 0.0 && t <= T)) throw DomainError("t must lie in [0, T]");
    const std::size_t N = truncation_index(lambda, T, c);
    SpectralExpansion e = analyze(u0, N);
    for (std::size_t k = 1; k <= N; ++k) e.coefficients[k - 1] *= std::exp(eigenvalue(k, c) * t);
    return synthesize(e, u0.mesh);
}

double tent(double x) {
    constexpr double pi = std::numbers::pi;
    if (x < 0.0 || x > pi / 2.0) return 0.0;
    if (x <= pi / 4.0) return 16.0 / pi * x;
    return -16.0 / pi * x + 8.0;
}

double reference_coefficient(std::size_t k, double c) {
    constexpr double pi = std::numbers::pi;
    const double kp = static_cast<double>(k) * pi;
    return (2.0 * std::sin(0.25 * kp) - std::sin(0.5 * kp)) / (c * kp * kp);
}

double reference_solution(double x, double t, const ReferenceProblem& problem) {
    if (!(t >= 0.0 && t <= problem.T)) throw DomainError("t must lie in [0, T]");
    double acc = 0.0;
    for (std::size_t k = 1; k <= problem.n_terms; ++k) {
        const double decay = std::exp(-eigenvalue(k, problem.c) * (problem.T - t));
        acc += reference_coefficient(k, problem.c) * std::sin(static_cast<double>(k) * x) * decay;
    }
    return acc;
}

namespace {

std::vector<double> series_weights(double t, const ReferenceProblem& problem) {
    if (!(t >= 0.0 && t <= problem.T)) throw DomainError("t must lie in [0, T]");
    std::vector<double> w(problem.n_terms);
    for (std::size_t k = 1; k <= problem.n_terms; ++k)
        w[k - 1] = reference_coefficient(k, problem.c) *
                   std::exp(-eigenvalue(k, problem.c) * (problem.T - t));
    return w;
}

double series_at(const std::vector<double>& w, double x) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= w.size(); ++k) acc += w[k - 1] * std::sin(static_cast<double>(k) * x);
    return acc;
}

}  // namespace

GridFunction reference_field_serial(const Mesh& mesh, double t, const ReferenceProblem& problem) {
    const auto w = series_weights(t, problem);
    GridFunction u(mesh);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = series_at(w, mesh.interior_node(j));
    return u;
}

GridFunction reference_field(const Mesh& mesh, double t, const ReferenceProblem& problem) {
    const auto w = series_weights(t, problem);
    GridFunction u(mesh);
    const auto n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        u[jj] = series_at(w, mesh.interior_node(jj));
    }
    return u;
}

double lemma32_bound(const SpectralExpansion& expansion, double K, double delta, double s,
                     double T, double c) {
    if (!(s > 0.0 && s < T)) throw DomainError("s must lie in (0, T)");
    const double lead = 2.0 * K * delta / (T - s);
    double acc = lead * lead;
    for (std::size_t n = 1; n <= expansion.size(); ++n) {
        const double lam = eigenvalue(n, c);
        if (!(lam < 1.0)) break;
        const double zn = expansion[n - 1];
        acc += zn * zn * (1.0 - lam * lam) * std::exp(2.0 * lam * s);
    }
    return acc;
}

}  // namespace secb
