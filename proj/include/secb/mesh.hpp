#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace secb {

using complex = std::complex<double>;

/// Uniform partition of [0, pi] with homogeneous Dirichlet ends. Unknowns
/// live on the n_elements - 1 interior nodes.
class Mesh {
public:
    static constexpr double kLength = std::numbers::pi;

    explicit Mesh(std::size_t n_elements = 1024);

    std::size_t n_elements() const { return n_elements_; }
    std::size_t n_interior() const { return n_elements_ - 1; }
    double h() const { return h_; }

    /// Coordinate of node i, i = 0 .. n_elements (0 and n_elements are boundary).
    double node(std::size_t i) const { return static_cast<double>(i) * h_; }
    /// Coordinate of the interior unknown j (node j + 1).
    double interior_node(std::size_t j) const { return node(j + 1); }

    bool operator==(const Mesh&) const = default;

private:
    std::size_t n_elements_;
    double h_;
};

/// Nodal values of a P1 field at interior nodes; the boundary values are zero.
template <typename T>
struct BasicGridFunction {
    Mesh mesh;
    std::vector<T> values;

    BasicGridFunction() : mesh(2), values(1) {}
    explicit BasicGridFunction(const Mesh& m) : mesh(m), values(m.n_interior()) {}
    BasicGridFunction(const Mesh& m, std::vector<T> v);

    std::size_t size() const { return values.size(); }
    T& operator[](std::size_t j) { return values[j]; }
    const T& operator[](std::size_t j) const { return values[j]; }

    BasicGridFunction& operator+=(const BasicGridFunction& o);
    BasicGridFunction& operator-=(const BasicGridFunction& o);
    BasicGridFunction& operator*=(T a);
};

using GridFunction = BasicGridFunction<double>;
using ComplexGridFunction = BasicGridFunction<complex>;

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double a, GridFunction u);
ComplexGridFunction operator-(ComplexGridFunction a, const ComplexGridFunction& b);

GridFunction real_part(const ComplexGridFunction& v);
GridFunction imag_part(const ComplexGridFunction& v);
ComplexGridFunction conj(const ComplexGridFunction& v);

/// Samples f at the interior nodes.
template <typename F>
GridFunction sample(const Mesh& mesh, F&& f) {
    GridFunction u(mesh);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = f(mesh.interior_node(j));
    return u;
}

/// Diffusion coefficient, either one constant or one positive value per element.
class CoefficientField {
public:
    explicit CoefficientField(double c);
    explicit CoefficientField(std::vector<double> per_element);

    bool is_constant() const { return per_element_.empty(); }
    /// Constant value; only meaningful when is_constant().
    double constant() const { return constant_; }
    double on_element(std::size_t e) const {
        return per_element_.empty() ? constant_ : per_element_[e];
    }
    /// Checks positivity and, for per-element data, the element count.
    void check(const Mesh& mesh) const;

private:
    double constant_ = 0.0;
    std::vector<double> per_element_;
};

}  // namespace secb
