#pragma once

// Sine eigenbasis of the constant-coefficient operator on (0, pi): -A has
// eigenvalues c k^2 with orthonormal eigenfunctions sqrt(2/pi) sin(k x).

#include "secb/mesh.hpp"

#include <cstddef>
#include <vector>

namespace secb {

double eigenvalue(std::size_t k, double c);

/// sqrt(2/pi) sin(k x)
double eigenfunction(std::size_t k, double x);

/// Largest N with c N^2 < log(Lambda) / T, or 0 when even the first mode is
/// not below the cutoff. Eigenvalues within a relative 1e-12 of the cutoff
/// are excluded.
std::size_t truncation_index(double lambda, double T, double c);

/// Coefficients (u, phi_k), k = 1 .. size().
struct SpectralExpansion {
    std::vector<double> coefficients;

    std::size_t size() const { return coefficients.size(); }
    double operator[](std::size_t k_minus_one) const { return coefficients[k_minus_one]; }
    /// sqrt of the sum of squares (Parseval norm).
    double norm() const;
};

/// Composite trapezoid approximation of (u, phi_k) for k = 1 .. n_modes.
SpectralExpansion analyze(const GridFunction& u, std::size_t n_modes);

/// sum_k a_k phi_k sampled on the mesh.
GridFunction synthesize(const SpectralExpansion& expansion, const Mesh& mesh);

/// L2 projection onto span{phi_1, ..., phi_N}.
GridFunction project_gamma(const GridFunction& u, std::size_t N);

/// sum_{k <= N} e^{lambda_k t} (u0, phi_k) phi_k with N = truncation_index.
GridFunction spectral_regularized_solution(const GridFunction& u0, double t, double lambda,
                                           double T, double c);

// Reference problem: the backward solution whose final state is the tent
// 16x/pi on [0, pi/4], 8 - 16x/pi on [pi/4, pi/2], zero beyond.
struct ReferenceProblem {
    double c = 1.0 / 32.0;
    double T = 4.0;
    std::size_t n_terms = 1000;
};

/// Tent profile at the final time.
double tent(double x);

/// Sine-series coefficient b_k of the tent, u(x, T) = sum_k b_k sin(k x):
/// b_k = (2 sin(k pi/4) - sin(k pi/2)) / (c (k pi)^2).
double reference_coefficient(std::size_t k, double c);

/// Partial sum of the series representation of u(x, t).
double reference_solution(double x, double t, const ReferenceProblem& problem = {});

/// reference_solution at every interior node, serial reference kernel.
GridFunction reference_field_serial(const Mesh& mesh, double t, const ReferenceProblem& problem = {});
/// Same values, nodes split across OpenMP threads.
GridFunction reference_field(const Mesh& mesh, double t, const ReferenceProblem& problem = {});

/// Diagnostic upper bound for ||z(s)||^2 from the slow-evolution constraint:
/// (2 K delta / (T - s))^2 + sum_{n <= l} z_n^2 (1 - lambda_n^2) e^{2 lambda_n s},
/// l being the largest index with lambda_l < 1.
double lemma32_bound(const SpectralExpansion& expansion, double K, double delta, double s,
                     double T, double c);

}  // namespace secb
