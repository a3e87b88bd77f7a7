#include "qkick/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cctype>
#include <numbers>

#include "qkick/errors.hpp"
#include "qkick/propagators.hpp"

namespace qkick {

namespace {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

constexpr Mat2 identity2{{{1.0, 0.0}, {0.0, 1.0}}};
constexpr Mat2 pauli_x{{{0.0, 1.0}, {1.0, 0.0}}};
constexpr Mat2 pauli_y{{{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}};

const Matrix4& spin_flip() {
    static const Matrix4 yy = kron(pauli_y, pauli_y);
    return yy;
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4& rho) : rho_(rho) {
    if (!rho.is_finite()) throw SpectrumError("density matrix has non-finite entries");
    if (max_abs_diff(rho, adjoint(rho)) > 1e-10) throw SpectrumError("density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-10) throw SpectrumError("density matrix trace is not 1");
    for (const cplx& l : eigvals(rho))
        if (l.real() < -1e-9) throw SpectrumError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const Vector4& psi) {
    const double n2 = psi.norm() * psi.norm();
    Matrix4 rho;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) / n2;
    return DensityMatrix(rho);
}

double concurrence_pure(const Vector4& state) {
    const double n = state.norm();
    if (!(std::abs(n - 1.0) <= normalization_tolerance))
        throw NormalizationError("state norm " + std::to_string(n) + " is not 1");
    const double c = 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
    return std::clamp(c, 0.0, 1.0);
}

std::array<double, 4> concurrence_spectrum(const DensityMatrix& rho) {
    const Matrix4& r = rho.matrix();
    const Matrix4 product = r * spin_flip() * r.conj() * spin_flip();
    std::array<double, 4> out{};
    const auto lambdas = eigvals(product);
    // Eigenvalues this close to zero are rounding noise; under the square
    // roots they would otherwise contribute ~1e-8 each.
    const double noise_floor = 32.0 * std::numeric_limits<double>::epsilon() * product.norm1();
    for (std::size_t i = 0; i < 4; ++i) {
        cplx l = lambdas[i];
        if (std::abs(l.imag()) < 1e-9) l.imag(0.0);
        if (l.real() < 0.0 && l.real() >= -1e-9) l.real(0.0);
        if (std::abs(l.real()) <= noise_floor) l.real(0.0);
        if (l.real() < -1e-6)
            throw SpectrumError("concurrence matrix has eigenvalue " + std::to_string(l.real()));
        out[i] = l.real();
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double concurrence_density(const DensityMatrix& rho) {
    const auto l = concurrence_spectrum(rho);
    auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };
    const double c = root(l[0]) - root(l[1]) - root(l[2]) - root(l[3]);
    return std::clamp(c, 0.0, 1.0);
}

NamedState named_state(StateLabel label) {
    const double h = std::numbers::sqrt2 / 2.0;
    NamedState s{label, {}};
    switch (label) {
        case StateLabel::s11: s.vector = {{1.0, 0.0, 0.0, 0.0}}; break;
        case StateLabel::s10: s.vector = {{0.0, 1.0, 0.0, 0.0}}; break;
        case StateLabel::s01: s.vector = {{0.0, 0.0, 1.0, 0.0}}; break;
        case StateLabel::s00: s.vector = {{0.0, 0.0, 0.0, 1.0}}; break;
        case StateLabel::phi_plus: s.vector = {{h, 0.0, 0.0, h}}; break;
        case StateLabel::phi_minus: s.vector = {{h, 0.0, 0.0, -h}}; break;
        case StateLabel::psi_plus: s.vector = {{0.0, h, h, 0.0}}; break;
        case StateLabel::psi_minus: s.vector = {{0.0, h, -h, 0.0}}; break;
        case StateLabel::custom: throw UnknownLabel("custom states have no canonical vector");
    }
    return s;
}

NamedState named_state(std::string_view label) {
    std::string key(label);
    if (key.size() >= 2 && key.front() == '|' && key.back() == '>') key = key.substr(1, key.size() - 2);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto l : {StateLabel::s11, StateLabel::s10, StateLabel::s01, StateLabel::s00,
                   StateLabel::phi_plus, StateLabel::phi_minus, StateLabel::psi_plus,
                   StateLabel::psi_minus})
        if (key == to_string(l)) return named_state(l);
    throw UnknownLabel("unknown state label '" + std::string(label) + "'");
}

std::string to_string(StateLabel label) {
    switch (label) {
        case StateLabel::s11: return "11";
        case StateLabel::s10: return "10";
        case StateLabel::s01: return "01";
        case StateLabel::s00: return "00";
        case StateLabel::phi_plus: return "phi+";
        case StateLabel::phi_minus: return "phi-";
        case StateLabel::psi_plus: return "psi+";
        case StateLabel::psi_minus: return "psi-";
        case StateLabel::custom: return "custom";
    }
    return "custom";
}

Matrix4 local_pauli(int which_qubit, PauliAxis axis) {
    const Mat2& p = axis == PauliAxis::x ? pauli_x : pauli_y;
    if (which_qubit == 1) return kron(p, identity2);
    if (which_qubit == 2) return kron(identity2, p);
    throw DomainError("qubit index must be 1 or 2");
}

}  // namespace qkick
