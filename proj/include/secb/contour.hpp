#pragma once

// Left-opening hyperbola
//
//     z(y) = gamma - sqrt(nu^2 + y^2) + i sigma y,   y in (-inf, inf),
//
// with vertex Re z(0) = gamma - nu placed at log(Lambda) / T, and its
// truncated trapezoid discretization.

#include "secb/mesh.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace secb {

struct Contour {
    double gamma = 0.0;
    double nu = 0.5;
    double sigma = 1.0;

    complex at(double y) const;
    /// dz/dy
    complex derivative(double y) const;
    double vertex() const { return gamma - nu; }
};

/// gamma = log(Lambda)/T + nu, so Re z(0) = log(Lambda)/T.
Contour build_contour(double lambda, double T, double nu = 0.5, double sigma = 1.0);

/// Trapezoid nodes on the hyperbola. The contour is parametrized by the
/// hyperbolic angle u with y = nu sinh(u), in which z(u) = gamma - nu cosh(u)
/// + i sigma nu sinh(u) is entire; the rule is uniform in u on
/// [-asinh(y_max/nu), asinh(y_max/nu)] with midpoint-offset nodes.
struct ContourQuadrature {
    std::vector<complex> nodes;   // z_j
    std::vector<complex> derivs;  // dz/du at u_j
    std::vector<double> params;   // u_j
    double step = 0.0;            // spacing in u
    double y_max = 0.0;

    std::size_t count() const { return nodes.size(); }
    /// Nodes are stored in increasing u; the upper half (Im z > 0) starts here.
    std::size_t upper_begin() const { return nodes.size() / 2; }
};

inline constexpr std::size_t kDefaultContourPoints = 160;
inline constexpr double kDefaultYMax = 50.0;

ContourQuadrature discretize(const Contour& contour, std::size_t n_points = kDefaultContourPoints,
                             double y_max = kDefaultYMax);

/// (1/2 pi i) sum_j w_j e^{z_j t} f(z_j) z'(u_j): the discrete Cauchy integral
/// of a scalar resolvent 1/(z - pole). Used for scalar dry runs.
complex scalar_contour_integral(const ContourQuadrature& q, double t, complex pole);

/// Minimum distance from any node to any eigenvalue; +inf for an empty list.
/// Throws DomainError below min_clearance.
double spectrum_clearance(const ContourQuadrature& q, std::span<const double> eigenvalues,
                          double min_clearance = 1e-6);

}  // namespace secb
