#include "secb/contour.hpp"

#include "secb/constraints.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <algorithm>

namespace secb {

complex Contour::at(double y) const {
    return {gamma - std::sqrt(nu * nu + y * y), sigma * y};
}

complex Contour::derivative(double y) const {
    return {-y / std::sqrt(nu * nu + y * y), sigma};
}

Contour build_contour(double lambda, double T, double nu, double sigma) {
    if (!(lambda > 1.0)) throw DomainError("Lambda must exceed 1");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (!(nu > 0.0) || !(sigma > 0.0)) throw DomainError("nu and sigma must be positive");
    return Contour{std::log(lambda) / T + nu, nu, sigma};
}

ContourQuadrature discretize(const Contour& contour, std::size_t n_points, double y_max) {
    if (n_points == 0 || n_points % 2 != 0) throw DomainError("contour point count must be even");
    if (!(y_max > 0.0)) throw DomainError("y_max must be positive");

    const double nu = contour.nu;
    const double u_max = std::asinh(y_max / nu);
    ContourQuadrature q;
    q.step = 2.0 * u_max / static_cast<double>(n_points);
    q.y_max = y_max;
    q.nodes.reserve(n_points);
    q.derivs.reserve(n_points);
    q.params.reserve(n_points);

    const auto half = static_cast<std::ptrdiff_t>(n_points / 2);
    for (std::ptrdiff_t j = -half; j < half; ++j) {
        const double u = (static_cast<double>(j) + 0.5) * q.step;
        const double ch = std::cosh(u), sh = std::sinh(u);
        q.params.push_back(u);
        q.nodes.emplace_back(contour.gamma - nu * ch, contour.sigma * nu * sh);
        q.derivs.emplace_back(-nu * sh, contour.sigma * nu * ch);
    }
    return q;
}

complex scalar_contour_integral(const ContourQuadrature& q, double t, complex pole) {
    complex acc{};
    for (std::size_t j = 0; j < q.count(); ++j)
        acc += std::exp(q.nodes[j] * t) / (q.nodes[j] - pole) * q.derivs[j];
    return acc * q.step / (2.0 * std::numbers::pi * complex(0.0, 1.0));
}

double spectrum_clearance(const ContourQuadrature& q, std::span<const double> eigenvalues,
                          double min_clearance) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const complex& z : q.nodes)
        for (double lam : eigenvalues) clearance = std::min(clearance, std::abs(z - lam));
    if (clearance < min_clearance)
        throw DomainError("contour node within " + std::to_string(clearance) +
                          " of the spectrum");
    return clearance;
}

}  // namespace secb
