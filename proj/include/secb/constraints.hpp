#pragma once

// Scalar mathematics of the slow-evolution (SECB) constraint: the critical
// time s*, the amplification constant Lambda and the two stability bounds.

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace secb {

/// Raised when a scalar input lies outside the domain of a formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an iteration fails to converge within its step cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Constraint data: noise radius delta, SECB ratio K, SECB time s, final
/// time T and an optional a priori bound M on ||u(T)||.
struct SecbParams {
    double delta = 0.0;
    double K = 0.0;
    double s = 0.0;
    double T = 0.0;
    std::optional<double> M;

    /// Throws DomainError unless delta, K, T > 0, 0 < s < T and, when M is
    /// given, K + 1 < M / delta.
    void validate() const;
};

struct LambdaRoot {
    double lambda = 1.0;
    double residual = 0.0;  // |lambda - K - lambda^(s/T)| / lambda
    std::size_t iterations = 0;
};

inline constexpr double kDefaultLambdaTol = 1e-12;
inline constexpr std::size_t kDefaultLambdaMaxIter = 1'000'000;

/// s* = T log(M/delta - K) / log(M/delta).
double compute_s_star(double delta, double M, double K, double T);

/// Root of x = K + x^(s/T) by fixed-point iteration started at K + 1.
/// Stops once the contraction estimate of the remaining error drops below
/// tol relative to the iterate, or the iterates stop moving in floating point.
LambdaRoot solve_lambda(double K, double s, double T, double tol = kDefaultLambdaTol,
                        std::size_t max_iter = kDefaultLambdaMaxIter);

/// 2 Lambda^(t/T) delta.
double secb_stability_bound(double t, double T, double lambda, double delta);

/// 2 M^(t/T) delta^(1 - t/T).
double holder_bound(double t, double T, double M, double delta);

enum class SecbRegime { improves, equals_john, degrades };

const char* to_string(SecbRegime regime);

/// Places params.s relative to s*(delta, M, K). Requires params.M.
/// |s - s*| <= tol * T counts as equal.
SecbRegime classify_s(const SecbParams& params, double tol = 1e-9);

}  // namespace secb
