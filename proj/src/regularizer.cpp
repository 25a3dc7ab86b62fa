#include "secb/regularizer.hpp"

#include "secb/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace secb {

namespace {

double initial_clearance(const ContourQuadrature& q, const Mesh& mesh, const CoefficientField& coeff) {
    if (!coeff.is_constant()) return std::numeric_limits<double>::infinity();
    std::vector<double> eig(mesh.n_interior());
    for (std::size_t k = 1; k <= eig.size(); ++k) eig[k - 1] = discrete_eigenvalue(k, mesh, coeff.constant());
    return spectrum_clearance(q, eig);
}

// (step / 2 pi i) e^{z t} z'
complex node_weight(const ContourQuadrature& q, std::size_t j, double t) {
    const complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    return q.step / two_pi_i * std::exp(q.nodes[j] * t) * q.derivs[j];
}

}  // namespace

RegularizedSolver::RegularizedSolver(const SecbParams& params, const Mesh& mesh,
                                     const CoefficientField& coeff, const SolverOptions& options)
    : params_(params),
      options_(options),
      lambda_(),
      contour_(),
      quad_(),
      resolvent_(mesh, coeff),
      clearance_(0.0) {
    params_.validate();
    if (options_.mode == EvaluationMode::spectral_oracle && !coeff.is_constant())
        throw DomainError("the spectral oracle needs a constant coefficient");
    lambda_ = solve_lambda(params_.K, params_.s, params_.T, options_.lambda_tol);
    contour_ = build_contour(lambda_.lambda, params_.T, options_.nu, options_.sigma);
    quad_ = discretize(contour_, options_.n_points, options_.y_max);
    clearance_ = initial_clearance(quad_, mesh, coeff);
}

std::size_t RegularizedSolver::cutoff() const {
    const auto& coeff = resolvent_.coefficient();
    if (!coeff.is_constant()) throw DomainError("cutoff is only defined for a constant coefficient");
    return truncation_index(lambda_.lambda, params_.T, coeff.constant());
}

void RegularizedSolver::check_time(double t, EvaluationMode mode) const {
    const double T = params_.T;
    const double lo = mode == EvaluationMode::contour ? T / 8.0 : 0.0;
    if (!(t >= lo && t <= T))
        throw DomainError(mode == EvaluationMode::contour ? "contour evaluation needs T/8 <= t <= T"
                                                          : "t must lie in [0, T]");
}

GridFunction RegularizedSolver::evaluate(const GridFunction& u0, double t) const {
    return evaluate(u0, std::span<const double>(&t, 1)).front();
}

std::vector<GridFunction> RegularizedSolver::evaluate(const GridFunction& u0,
                                                      std::span<const double> times) const {
    if (options_.mode == EvaluationMode::spectral_oracle) {
        for (double t : times) check_time(t, options_.mode);
        std::vector<GridFunction> out;
        out.reserve(times.size());
        const double c = resolvent_.coefficient().constant();
        for (double t : times)
            out.push_back(spectral_regularized_solution(u0, t, lambda_.lambda, params_.T, c));
        return out;
    }
    return evaluate_contour(u0, times, options_.execution);
}

std::vector<GridFunction> RegularizedSolver::evaluate_contour(const GridFunction& u0,
                                                              std::span<const double> times,
                                                              Execution execution) const {
    for (double t : times) check_time(t, EvaluationMode::contour);
    const auto load = resolvent_.load(u0);
    const std::size_t n = u0.size();
    const std::size_t n_times = times.size();
    const std::size_t first = quad_.upper_begin();
    const std::size_t last = quad_.count();

    // acc[i * n + x]: complex sum for time i at unknown x
    std::vector<complex> acc(n_times * n);

    if (execution == Execution::serial) {
        for (std::size_t j = first; j < last; ++j) {
            const auto v = resolvent_.solve_load(quad_.nodes[j], load);
            for (std::size_t i = 0; i < n_times; ++i) {
                const complex w = node_weight(quad_, j, times[i]);
                for (std::size_t x = 0; x < n; ++x) acc[i * n + x] += w * v[x];
            }
        }
    } else {
        const auto lo = static_cast<std::ptrdiff_t>(first);
        const auto hi = static_cast<std::ptrdiff_t>(last);
#pragma omp parallel
        {
            std::vector<complex> local(n_times * n);
#pragma omp for schedule(dynamic, 1) nowait
            for (std::ptrdiff_t jj = lo; jj < hi; ++jj) {
                const auto j = static_cast<std::size_t>(jj);
                const auto v = resolvent_.solve_load(quad_.nodes[j], load);
                for (std::size_t i = 0; i < n_times; ++i) {
                    const complex w = node_weight(quad_, j, times[i]);
                    for (std::size_t x = 0; x < n; ++x) local[i * n + x] += w * v[x];
                }
            }
#pragma omp critical(secb_contour_reduce)
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += local[k];
        }
    }

    // The lower half contributes the conjugate of the upper half.
    std::vector<GridFunction> out;
    out.reserve(n_times);
    for (std::size_t i = 0; i < n_times; ++i) {
        GridFunction u(u0.mesh);
        for (std::size_t x = 0; x < n; ++x) u[x] = 2.0 * acc[i * n + x].real();
        out.push_back(std::move(u));
    }
    return out;
}

ContourSum RegularizedSolver::evaluate_full(const GridFunction& u0, double t) const {
    check_time(t, EvaluationMode::contour);
    const auto load = resolvent_.load(u0);
    std::vector<complex> acc(u0.size());
    for (std::size_t j = 0; j < quad_.count(); ++j) {
        const auto v = resolvent_.solve_load(quad_.nodes[j], load);
        const complex w = node_weight(quad_, j, t);
        for (std::size_t x = 0; x < acc.size(); ++x) acc[x] += w * v[x];
    }
    ContourSum sum{GridFunction(u0.mesh), GridFunction(u0.mesh)};
    for (std::size_t x = 0; x < acc.size(); ++x) {
        sum.real[x] = acc[x].real();
        sum.imag[x] = acc[x].imag();
    }
    return sum;
}

ClassMembership RegularizedSolver::check_membership(const GridFunction& u0, const GridFunction& g) const {
    ClassMembership m;
    m.init_distance = mass_norm(u0 - g);
    const double times[] = {params_.T, params_.s};
    const auto u = evaluate(u0, times);
    m.secb_residual = mass_norm(u[0] - u[1]);
    m.in_class = m.init_distance <= params_.delta && m.secb_residual <= params_.K * params_.delta;
    return m;
}

std::pair<double, double> RegularizedSolver::stability_gap(const GridFunction& u10,
                                                           const GridFunction& u20, double t) const {
    const double gap0 = mass_norm(u10 - u20);
    if (gap0 > params_.delta * (1.0 + 1e-12))
        throw DomainError("initial data differ by more than delta");
    const double observed = mass_norm(evaluate(u10, t) - evaluate(u20, t));
    return {observed, secb_stability_bound(t, params_.T, lambda_.lambda, params_.delta)};
}

}  // namespace secb
