#include "secb/constraints.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace secb {

namespace {

void require_time(double t, double T) {
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (!(t >= 0.0 && t <= T)) throw DomainError("t must lie in [0, T]");
}

}  // namespace

void SecbParams::validate() const {
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    if (!(K > 0.0)) throw DomainError("K must be positive");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (!(s > 0.0)) throw DomainError("s must be positive");
    if (!(s < T)) throw DomainError("s must be < T");
    if (M) {
        if (!(*M > 0.0)) throw DomainError("M must be positive");
        if (!(K + 1.0 < *M / delta)) throw DomainError("K + 1 must be < M/delta");
    }
}

double compute_s_star(double delta, double M, double K, double T) {
    if (!(delta > 0.0) || !(M > 0.0)) throw DomainError("delta and M must be positive");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    const double ratio = M / delta;
    if (!(ratio > K)) throw DomainError("M/delta must exceed K");
    if (!(ratio > 1.0)) throw DomainError("M/delta must exceed 1");
    return T * std::log(ratio - K) / std::log(ratio);
}

LambdaRoot solve_lambda(double K, double s, double T, double tol, std::size_t max_iter) {
    if (!(K >= 0.0)) throw DomainError("K must be nonnegative");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    if (!(s > 0.0)) throw DomainError("s must be positive");
    if (!(s < T)) throw DomainError("s must be < T");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");

    const double p = s / T;
    // x -> K + x^p contracts on [1, inf) with rate p, so the distance to the
    // root after a step is at most step * p / (1 - p).
    const double tail = p / (1.0 - p);
    double z = K + 1.0;
    for (std::size_t n = 1; n <= max_iter; ++n) {
        const double next = K + std::pow(z, p);
        const double step = std::abs(next - z);
        z = next;
        const bool settled = step <= 4.0 * std::numeric_limits<double>::epsilon() * z;
        if (step * tail <= tol * z || settled) {
            LambdaRoot root;
            root.lambda = z;
            root.residual = std::abs(z - K - std::pow(z, p)) / z;
            root.iterations = n;
            return root;
        }
    }
    throw ConvergenceError("Lambda iteration did not converge in " + std::to_string(max_iter) +
                           " steps");
}

double secb_stability_bound(double t, double T, double lambda, double delta) {
    require_time(t, T);
    return 2.0 * std::pow(lambda, t / T) * delta;
}

double holder_bound(double t, double T, double M, double delta) {
    require_time(t, T);
    if (!(M > 0.0) || !(delta > 0.0)) throw DomainError("M and delta must be positive");
    const double theta = t / T;
    return 2.0 * std::pow(M, theta) * std::pow(delta, 1.0 - theta);
}

const char* to_string(SecbRegime regime) {
    switch (regime) {
        case SecbRegime::improves: return "improves";
        case SecbRegime::equals_john: return "equals_john";
        case SecbRegime::degrades: return "degrades";
    }
    return "unknown";
}

SecbRegime classify_s(const SecbParams& params, double tol) {
    if (!params.M) throw DomainError("classify_s requires the a priori bound M");
    const double s_star = compute_s_star(params.delta, *params.M, params.K, params.T);
    if (std::abs(params.s - s_star) <= tol * params.T) return SecbRegime::equals_john;
    return params.s < s_star ? SecbRegime::improves : SecbRegime::degrades;
}

}  // namespace secb
