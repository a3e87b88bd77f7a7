#include "qkick/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qkick/errors.hpp"

namespace qkick {

namespace {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

constexpr Mat2 identity2{{{1.0, 0.0}, {0.0, 1.0}}};

// cos(theta) sx + sin(theta) sy in the single-qubit order (|1>, |0>).
Mat2 in_plane_pauli(double theta) {
    const cplx e = std::polar(1.0, -theta);
    return {{{0.0, e}, {std::conj(e), 0.0}}};
}

// exp(-i phi/2 n.sigma) = cos(phi/2) I - i sin(phi/2) n.sigma
Mat2 rotation(double phi, double theta) {
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    const cplx off = cplx{0.0, -s} * std::polar(1.0, -theta);
    const cplx off_conj = cplx{0.0, -s} * std::polar(1.0, theta);
    return {{{c, off}, {off_conj, c}}};
}

}  // namespace

std::optional<std::string> theta_range_warning(const SystemParams& params) {
    if (params.theta < 0.0 || params.theta > 0.5 * std::numbers::pi)
        return "theta = " + std::to_string(params.theta) +
               " lies outside [0, pi/2]; continuing";
    return std::nullopt;
}

Matrix4 h0(const SystemParams& params) {
    const double J = params.J;
    Matrix4 h = Matrix4::diagonal(J, -J, -J, J);
    h(1, 2) = 2.0 * J;
    h(2, 1) = 2.0 * J;
    return h;
}

Matrix4 h_int(const FieldSample& sample, const SystemParams& params) {
    const Mat2 n = in_plane_pauli(params.theta);
    Matrix4 h = 0.5 * sample.b1 * kron(n, identity2);
    h += 0.5 * sample.b2 * kron(identity2, n);
    return h;
}

FieldSample gaussian_field(const GaussianSchedule& sched, double t) {
    double shape = 0.0;
    for (double c : sched.centers) {
        const double x = (t - c) / sched.tau;
        shape += std::exp(-x * x);
    }
    const double peak = 1.0 / (std::sqrt(std::numbers::pi) * sched.tau);
    return {sched.alpha * peak * shape, sched.beta * peak * shape};
}

Matrix4 h_total(double t, const SystemParams& params, const PulseSchedule& schedule) {
    if (std::holds_alternative<KickSchedule>(schedule))
        throw KickPointwiseError("delta-kick schedule has no pointwise field value");
    return h0(params) + h_int(gaussian_field(std::get<GaussianSchedule>(schedule), t), params);
}

Matrix4 kick_generator(const SystemParams& params, double alpha, double beta) {
    return kron(rotation(alpha, params.theta), rotation(beta, params.theta));
}

Matrix4 field_commutator(const SystemParams& params, const FieldSample& s1, const FieldSample& s2) {
    const double d = (s2.b2 - s2.b1) - (s1.b2 - s1.b1);
    const cplx a = std::polar(1.0, -params.theta);
    const cplx ac = std::conj(a);
    Matrix4 m;
    m(0, 1) = a;
    m(0, 2) = -a;
    m(1, 0) = -ac;
    m(1, 3) = a;
    m(2, 0) = ac;
    m(2, 3) = -a;
    m(3, 1) = -ac;
    m(3, 2) = ac;
    return (params.J * d) * m;
}

}  // namespace qkick
