#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace secb {

/// Symmetric tridiagonal matrix: diag has n entries, off has n - 1.
template <typename T>
struct SymTridiagonal {
    std::vector<T> diag;
    std::vector<T> off;

    std::size_t size() const { return diag.size(); }

    /// y = A x
    template <typename X>
    auto apply(std::span<const X> x) const {
        using R = decltype(T{} * X{});
        const std::size_t n = diag.size();
        std::vector<R> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            R acc = diag[i] * x[i];
            if (i > 0) acc += off[i - 1] * x[i - 1];
            if (i + 1 < n) acc += off[i] * x[i + 1];
            y[i] = acc;
        }
        return y;
    }
};

/// Thomas elimination for a symmetric tridiagonal system, no pivoting.
/// Throws std::runtime_error on a zero pivot.
template <typename T>
std::vector<T> thomas_solve(std::span<const T> diag, std::span<const T> off, std::span<const T> rhs) {
    const std::size_t n = diag.size();
    if (rhs.size() != n || (n > 0 && off.size() + 1 != n))
        throw std::invalid_argument("tridiagonal size mismatch");
    std::vector<T> c_prime(n);
    std::vector<T> x(n);
    if (n == 0) return x;

    // Forward sweep
    T pivot = diag[0];
    if (pivot == T{}) throw std::runtime_error("zero pivot in tridiagonal solve");
    c_prime[0] = n > 1 ? off[0] / pivot : T{};
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - off[i - 1] * c_prime[i - 1];
        if (pivot == T{}) throw std::runtime_error("zero pivot in tridiagonal solve");
        if (i + 1 < n) c_prime[i] = off[i] / pivot;
        x[i] = (rhs[i] - off[i - 1] * x[i - 1]) / pivot;
    }

    // Back substitution
    for (std::size_t i = n - 1; i > 0; --i) x[i - 1] -= c_prime[i - 1] * x[i];
    return x;
}

}  // namespace secb
