#pragma once

// Regularized backward solutions by contour quadrature:
//
//     u(t) = (1 / 2 pi i) \int_Gamma e^{zt} v(z) dz,   z v + A v = u0,
//
// evaluated from one resolvent solve per contour node. For real data the
// integrand is conjugate-symmetric, so only the upper-half nodes are solved.

#include "secb/constraints.hpp"
#include "secb/contour.hpp"
#include "secb/mesh.hpp"
#include "secb/resolvent_fem.hpp"

#include <span>
#include <utility>
#include <vector>

namespace secb {

enum class EvaluationMode { contour, spectral_oracle };
enum class Execution { serial, parallel };

struct SolverOptions {
    double nu = 0.5;
    double sigma = 1.0;
    std::size_t n_points = kDefaultContourPoints;
    double y_max = kDefaultYMax;
    double lambda_tol = kDefaultLambdaTol;
    EvaluationMode mode = EvaluationMode::contour;
    Execution execution = Execution::parallel;
};

struct ClassMembership {
    double init_distance = 0.0;  // ||u0 - g||
    double secb_residual = 0.0;  // ||u(T) - u(s)||
    bool in_class = false;
};

/// Full-contour quadrature sum, kept complex to expose the imaginary residue.
struct ContourSum {
    GridFunction real;
    GridFunction imag;
};

class RegularizedSolver {
public:
    RegularizedSolver(const SecbParams& params, const Mesh& mesh, const CoefficientField& coeff,
                      const SolverOptions& options = {});

    const SecbParams& params() const { return params_; }
    const LambdaRoot& lambda() const { return lambda_; }
    const Contour& contour() const { return contour_; }
    const ContourQuadrature& quadrature() const { return quad_; }
    const SolverOptions& options() const { return options_; }
    const Mesh& mesh() const { return resolvent_.mesh(); }
    const ResolventSolver& resolvent() const { return resolvent_; }
    /// Number of eigenmodes enclosed by the contour; constant coefficient only.
    std::size_t cutoff() const;
    /// Smallest node-to-eigenvalue distance; +inf for variable coefficients.
    double clearance() const { return clearance_; }
    EvaluationMode mode() const { return options_.mode; }

    /// Contour mode needs T/8 <= t <= T, oracle mode 0 <= t <= T.
    GridFunction evaluate(const GridFunction& u0, double t) const;
    /// Evaluates several times from one set of resolvent solves.
    std::vector<GridFunction> evaluate(const GridFunction& u0, std::span<const double> times) const;

    /// Contour mode with an explicit mode of execution; the serial branch is
    /// the reference the parallel kernel is tested against.
    std::vector<GridFunction> evaluate_contour(const GridFunction& u0, std::span<const double> times,
                                               Execution execution) const;

    /// Sums every node without folding conjugate pairs.
    ContourSum evaluate_full(const GridFunction& u0, double t) const;

    ClassMembership check_membership(const GridFunction& u0, const GridFunction& g) const;

    /// (observed ||u1(t) - u2(t)||, bound 2 Lambda^{t/T} delta). Requires
    /// ||u10 - u20|| <= delta.
    std::pair<double, double> stability_gap(const GridFunction& u10, const GridFunction& u20,
                                            double t) const;

private:
    void check_time(double t, EvaluationMode mode) const;

    SecbParams params_;
    SolverOptions options_;
    LambdaRoot lambda_;
    Contour contour_;
    ContourQuadrature quad_;
    ResolventSolver resolvent_;
    double clearance_;
};

}  // namespace secb
