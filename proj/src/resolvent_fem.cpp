#include "secb/resolvent_fem.hpp"

#include <cmath>
#include <algorithm>
#include <string>

namespace secb {

FemMatrices assemble(const Mesh& mesh, const CoefficientField& coeff) {
    coeff.check(mesh);
    const std::size_t n = mesh.n_interior();
    const double h = mesh.h();

    FemMatrices m;
    m.mass.diag.assign(n, 2.0 * h / 3.0);
    m.mass.off.assign(n - 1, h / 6.0);

    // Element e spans nodes e and e + 1; interior unknown j is node j + 1,
    // flanked by elements j and j + 1.
    m.stiffness.diag.resize(n);
    m.stiffness.off.resize(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        m.stiffness.diag[j] = (coeff.on_element(j) + coeff.on_element(j + 1)) / h;
    for (std::size_t j = 0; j + 1 < n; ++j) m.stiffness.off[j] = -coeff.on_element(j + 1) / h;
    return m;
}

ResolventSolver::ResolventSolver(const Mesh& mesh, const CoefficientField& coeff)
    : mesh_(mesh), coeff_(coeff), mats_(assemble(mesh, coeff)) {}

std::vector<double> ResolventSolver::load(const GridFunction& u0) const {
    if (!(u0.mesh == mesh_)) throw std::invalid_argument("grid function on a different mesh");
    return mats_.mass.apply(std::span<const double>(u0.values));
}

ComplexGridFunction ResolventSolver::solve_load(complex z, std::span<const double> load) const {
    const std::size_t n = mesh_.n_interior();
    if (load.size() != n) throw std::invalid_argument("load size does not match mesh");

    std::vector<complex> diag(n), off(n - 1), rhs(load.begin(), load.end());
    for (std::size_t j = 0; j < n; ++j) diag[j] = z * mats_.mass.diag[j] - mats_.stiffness.diag[j];
    for (std::size_t j = 0; j + 1 < n; ++j) off[j] = z * mats_.mass.off[j] - mats_.stiffness.off[j];

    std::vector<complex> v;
    try {
        v = thomas_solve<complex>(diag, off, rhs);
    } catch (const std::runtime_error&) {
        throw ResolventError("resolvent system singular: shift on the spectrum");
    }

    // (z M - K) V - load
    const SymTridiagonal<complex> system{std::move(diag), std::move(off)};
    const auto av = system.apply(std::span<const complex>(v));
    double res2 = 0.0, rhs2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        res2 += std::norm(av[j] - rhs[j]);
        rhs2 += rhs[j].real() * rhs[j].real();
    }
    if (!std::isfinite(res2) || std::sqrt(res2) > kResidualTol * std::sqrt(rhs2))
        throw ResolventError("resolvent residual too large: shift too close to the spectrum");
    return ComplexGridFunction(mesh_, std::move(v));
}

double mass_norm(const GridFunction& u) {
    const double h = u.mesh.h();
    const auto& v = u.values;
    double acc = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        acc += (2.0 * h / 3.0) * v[j] * v[j];
        if (j + 1 < v.size()) acc += 2.0 * (h / 6.0) * v[j] * v[j + 1];
    }
    return std::sqrt(std::max(acc, 0.0));
}

double mass_norm(const ComplexGridFunction& u) {
    const double re = mass_norm(real_part(u));
    const double im = mass_norm(imag_part(u));
    return std::hypot(re, im);
}

double discrete_eigenvalue(std::size_t k, const Mesh& mesh, double c) {
    const double h = mesh.h();
    const double ch = std::cos(static_cast<double>(k) * h);
    return 6.0 * c / (h * h) * (1.0 - ch) / (2.0 + ch);
}

}  // namespace secb
