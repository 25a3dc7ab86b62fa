#include "secb/mesh.hpp"

#include "secb/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace secb {

Mesh::Mesh(std::size_t n_elements)
    : n_elements_(n_elements), h_(kLength / static_cast<double>(n_elements)) {
    if (n_elements < 2) throw std::invalid_argument("mesh needs at least two elements");
}

template <typename T>
BasicGridFunction<T>::BasicGridFunction(const Mesh& m, std::vector<T> v)
    : mesh(m), values(std::move(v)) {
    if (values.size() != mesh.n_interior())
        throw std::invalid_argument("grid function size does not match mesh");
}

template <typename T>
BasicGridFunction<T>& BasicGridFunction<T>::operator+=(const BasicGridFunction& o) {
    if (!(mesh == o.mesh)) throw std::invalid_argument("mesh mismatch");
    for (std::size_t j = 0; j < values.size(); ++j) values[j] += o.values[j];
    return *this;
}

template <typename T>
BasicGridFunction<T>& BasicGridFunction<T>::operator-=(const BasicGridFunction& o) {
    if (!(mesh == o.mesh)) throw std::invalid_argument("mesh mismatch");
    for (std::size_t j = 0; j < values.size(); ++j) values[j] -= o.values[j];
    return *this;
}

template <typename T>
BasicGridFunction<T>& BasicGridFunction<T>::operator*=(T a) {
    for (auto& v : values) v *= a;
    return *this;
}

template struct BasicGridFunction<double>;
template struct BasicGridFunction<complex>;

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double a, GridFunction u) { return u *= a; }
ComplexGridFunction operator-(ComplexGridFunction a, const ComplexGridFunction& b) { return a -= b; }

GridFunction real_part(const ComplexGridFunction& v) {
    GridFunction out(v.mesh);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j].real();
    return out;
}

GridFunction imag_part(const ComplexGridFunction& v) {
    GridFunction out(v.mesh);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j].imag();
    return out;
}

ComplexGridFunction conj(const ComplexGridFunction& v) {
    ComplexGridFunction out(v.mesh);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = std::conj(v[j]);
    return out;
}

CoefficientField::CoefficientField(double c) : constant_(c) {
    if (!(c > 0.0)) throw DomainError("diffusion coefficient must be positive");
}

CoefficientField::CoefficientField(std::vector<double> per_element)
    : per_element_(std::move(per_element)) {
    if (per_element_.empty()) throw std::invalid_argument("empty coefficient field");
    if (!std::all_of(per_element_.begin(), per_element_.end(), [](double c) { return c > 0.0; }))
        throw DomainError("diffusion coefficient must be positive");
}

void CoefficientField::check(const Mesh& mesh) const {
    if (is_constant()) {
        if (!(constant_ > 0.0)) throw DomainError("diffusion coefficient must be positive");
        return;
    }
    if (per_element_.size() != mesh.n_elements())
        throw std::invalid_argument("coefficient field size does not match mesh");
}

}  // namespace secb
