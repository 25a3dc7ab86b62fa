#pragma once

// P1 finite elements for the complex-shifted resolvent problem
//
//     z v - d/dx (c dv/dx) = u0   on (0, pi),   v(0) = v(pi) = 0,
//
// which is zv + Av = u0 for A = d/dx(c d/dx). The discrete system is
// (z M - K) V = M U0 with consistent mass M and stiffness K.

#include "secb/mesh.hpp"
#include "secb/tridiagonal.hpp"

#include <span>
#include <stdexcept>

namespace secb {

struct FemMatrices {
    SymTridiagonal<double> mass;
    SymTridiagonal<double> stiffness;  // of -d/dx(c d/dx), positive definite
};

FemMatrices assemble(const Mesh& mesh, const CoefficientField& coeff);

/// The shifted system is singular or its solution fails the residual check.
class ResolventError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResolventSolver {
public:
    static constexpr double kResidualTol = 1e-10;

    ResolventSolver(const Mesh& mesh, const CoefficientField& coeff);

    const Mesh& mesh() const { return mesh_; }
    const CoefficientField& coefficient() const { return coeff_; }
    const FemMatrices& matrices() const { return mats_; }

    /// Mass-weighted load M U0, shared by all shifts for a fixed u0.
    std::vector<double> load(const GridFunction& u0) const;

    /// Solves (z M - K) V = load. Each call owns its elimination workspace.
    ComplexGridFunction solve_load(complex z, std::span<const double> load) const;

    ComplexGridFunction solve(complex z, const GridFunction& u0) const {
        return solve_load(z, load(u0));
    }

private:
    Mesh mesh_;
    CoefficientField coeff_;
    FemMatrices mats_;
};

inline ComplexGridFunction resolvent_solve(complex z, const GridFunction& u0,
                                           const CoefficientField& coeff) {
    return ResolventSolver(u0.mesh, coeff).solve(z, u0);
}

/// sqrt(U^T M U): exact L2 norm of the P1 interpolant.
double mass_norm(const GridFunction& u);
double mass_norm(const ComplexGridFunction& u);

/// k-th generalized eigenvalue of (c K, M) for constant c on a uniform mesh.
double discrete_eigenvalue(std::size_t k, const Mesh& mesh, double c);

}  // namespace secb
