#include "qkick/propagators.hpp"

#include <cmath>
#include <string>

#include "qkick/errors.hpp"

namespace qkick {

namespace {

constexpr cplx I{0.0, 1.0};

cplx expi(double x) { return std::polar(1.0, x); }

// Kicks at T, 2T, ..., nT to within rounding.
bool equally_spaced_from_origin(const std::vector<double>& times, std::size_t n) {
    if (times.size() < n || n == 0) return false;
    const double spacing = times[0];
    const double tol = 1e-12 * std::max(1.0, std::abs(spacing));
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(times[k] - static_cast<double>(k + 1) * spacing) > tol * static_cast<double>(k + 1))
            return false;
    return true;
}

void require_layout(const KickSchedule& sched, std::size_t n) {
    sched.validate();
    if (sched.times.size() != n || !equally_spaced_from_origin(sched.times, n)) {
        std::string expected = "[T";
        for (std::size_t k = 2; k <= n; ++k) expected += ", " + std::to_string(k) + "T";
        throw SpacingError("closed form needs kicks at " + expected + "]; use n_kick_propagator");
    }
}

void require_after(double t, double last_kick) {
    if (!(t > last_kick))
        throw DomainError("propagator requested at t = " + std::to_string(t) +
                          ", closed form holds only for t > " + std::to_string(last_kick));
}

ClosedFormElements one_kick(const SystemParams& p, double alpha, double beta, double T, double t) {
    const double J = p.J;
    const double th = p.theta;
    const double delta = alpha - beta;
    const double omega = alpha + beta;
    const double xi = 2.0 * J * (t - T);
    const cplx pre = expi(-J * t);
    const double ca = std::cos(0.5 * alpha), sa = std::sin(0.5 * alpha);
    const double cb = std::cos(0.5 * beta), sb = std::sin(0.5 * beta);

    ClosedFormElements e{};
    e.u11 = pre * ca * cb;
    e.u22 = 0.5 * pre * (expi(4.0 * J * t) * std::cos(0.5 * delta) + std::cos(0.5 * omega));
    e.u23 = -0.5 * pre * (expi(4.0 * J * t) * std::cos(0.5 * delta) - std::cos(0.5 * omega));
    e.u12 = 0.5 * I * pre * expi(-th) *
            (expi(4.0 * J * T) * std::sin(0.5 * delta) - std::sin(0.5 * omega));
    e.u13 = -0.5 * I * pre * expi(-th) *
            (expi(4.0 * J * T) * std::sin(0.5 * delta) + std::sin(0.5 * omega));
    e.u14 = -pre * expi(-2.0 * th) * sa * sb;
    e.u21 = -expi(J * (t - 2.0 * T)) * expi(th) *
            (cb * sa * std::sin(xi) + I * ca * sb * std::cos(xi));
    e.u24 = -0.5 * I * pre * expi(-th) *
            (expi(2.0 * xi) * std::sin(0.5 * delta) + std::sin(0.5 * omega));
    return e;
}

ClosedFormElements two_kicks(const SystemParams& p, double alpha, double beta, double T, double t) {
    const double J = p.J;
    const double th = p.theta;
    const double cd = std::cos(alpha - beta), sd = std::sin(alpha - beta);
    const double co = std::cos(alpha + beta), so = std::sin(alpha + beta);
    const cplx pre = expi(-J * t);
    const cplx e4T = expi(4.0 * J * T);
    const cplx e4t = expi(4.0 * J * t);
    const cplx e4tT = expi(4.0 * J * (t - T));
    const cplx e4t2T = expi(4.0 * J * (t - 2.0 * T));

    ClosedFormElements e{};
    e.u11 = 0.25 * pre * (1.0 + e4T * (cd - 1.0) + cd + 2.0 * co);
    e.u22 = 0.25 * pre * (e4t + e4tT * (cd - 1.0) + e4t * cd + 2.0 * co);
    e.u23 = -0.25 * pre * (e4t + e4tT * (cd - 1.0) + e4t * cd - 2.0 * co);
    e.u12 = 0.5 * I * pre * expi(-th) * (expi(6.0 * J * T) * std::cos(2.0 * J * T) * sd - so);
    e.u13 = -0.5 * I * pre * expi(-th) * (expi(6.0 * J * T) * std::cos(2.0 * J * T) * sd + so);
    e.u14 = 0.25 * pre * expi(-2.0 * th) * (e4T - 1.0 - (1.0 + e4T) * cd + 2.0 * co);
    e.u21 = 0.25 * I * pre * expi(th) * (e4t2T * (1.0 + e4T) * sd - 2.0 * so);
    e.u24 = -0.25 * I * pre * expi(-th) * (e4t2T * (1.0 + e4T) * sd + 2.0 * so);
    return e;
}

ClosedFormElements three_kicks(const SystemParams& p, double alpha, double beta, double T, double t) {
    const double J = p.J;
    const double th = p.theta;
    const double delta = alpha - beta;
    const double omega = alpha + beta;
    const double chd = std::cos(0.5 * delta), shd = std::sin(0.5 * delta);
    const double c3hd = std::cos(1.5 * delta);
    const double c3ho = std::cos(1.5 * omega), s3ho = std::sin(1.5 * omega);
    const cplx pre = expi(-J * t);
    const cplx e4T = expi(4.0 * J * T);
    const cplx e8T = expi(8.0 * J * T);
    const cplx e4tT = expi(4.0 * J * (t - T));
    const cplx e4t2T = expi(4.0 * J * (t - 2.0 * T));
    const cplx one_plus_sq = (1.0 + e4T) * (1.0 + e4T);
    const double c2JT = std::cos(2.0 * J * T);
    // shared factors of the central block and of the off-diagonal rows
    const cplx g = (1.0 + std::cos(4.0 * J * T)) * std::cos(delta) + I * std::sin(4.0 * J * T) - 1.0;
    const double h = (std::cos(4.0 * J * T) + 2.0 * c2JT * c2JT * std::cos(delta)) * shd;

    ClosedFormElements e{};
    e.u11 = 0.125 * pre * ((3.0 - 2.0 * e4T - e8T) * chd + one_plus_sq * c3hd + 4.0 * c3ho);
    e.u22 = 0.5 * pre * (c3ho + e4tT * chd * g);
    e.u23 = 0.5 * pre * (c3ho - e4tT * chd * g);
    e.u12 = 0.5 * I * pre * expi(-th) * (e8T * h - s3ho);
    e.u13 = -0.5 * I * pre * expi(-th) * (e8T * h + s3ho);
    e.u14 = 0.125 * pre * expi(-2.0 * th) *
            ((2.0 * e4T + e8T - 3.0) * chd - one_plus_sq * c3hd + 4.0 * c3ho);
    e.u21 = 0.5 * I * pre * expi(th) * (e4t2T * h - s3ho);
    e.u24 = -0.5 * I * pre * expi(-th) * (e4t2T * h + s3ho);
    return e;
}

}  // namespace

cplx& ClosedFormElements::operator[](std::size_t i) {
    std::array<cplx*, 8> p{&u11, &u12, &u13, &u14, &u21, &u22, &u23, &u24};
    return *p.at(i);
}

const cplx& ClosedFormElements::operator[](std::size_t i) const {
    return const_cast<ClosedFormElements&>(*this)[i];
}

Matrix4 assemble(const ClosedFormElements& e, double theta) {
    Matrix4 u;
    u(0, 0) = e.u11;
    u(0, 1) = e.u12;
    u(0, 2) = e.u13;
    u(0, 3) = e.u14;
    u(1, 0) = e.u21;
    u(1, 1) = e.u22;
    u(1, 2) = e.u23;
    u(1, 3) = e.u24;
    u(2, 0) = expi(2.0 * theta) * e.u24;
    u(2, 1) = e.u23;
    u(2, 2) = e.u22;
    u(2, 3) = expi(-2.0 * theta) * e.u21;
    u(3, 0) = expi(4.0 * theta) * e.u14;
    u(3, 1) = expi(2.0 * theta) * e.u13;
    u(3, 2) = expi(2.0 * theta) * e.u12;
    u(3, 3) = e.u11;
    return u;
}

ClosedFormElements closed_form_elements(int kicks, const SystemParams& params, double alpha,
                                        double beta, double spacing, double t) {
    switch (kicks) {
        case 1: return one_kick(params, alpha, beta, spacing, t);
        case 2: return two_kicks(params, alpha, beta, spacing, t);
        case 3: return three_kicks(params, alpha, beta, spacing, t);
        default: throw DomainError("closed forms exist for 1, 2 or 3 kicks only");
    }
}

Propagator free_propagator(const SystemParams& params, double t) {
    if (!(t >= 0.0)) throw DomainError("free propagator needs t >= 0");
    const double J = params.J;
    const cplx corner = expi(-J * t);
    const cplx centre = expi(J * t);
    const double c = std::cos(2.0 * J * t);
    const double s = std::sin(2.0 * J * t);
    Propagator p;
    p.matrix = Matrix4::diagonal(corner, centre * c, centre * c, corner);
    p.matrix(1, 2) = -I * centre * s;
    p.matrix(2, 1) = -I * centre * s;
    p.valid_from = 0.0;
    return p;
}

Propagator one_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t) {
    require_layout(sched, 1);
    const double T = sched.times[0];
    require_after(t, T);
    return {assemble(one_kick(params, sched.alpha, sched.beta, T, t), params.theta), T};
}

Propagator two_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t) {
    require_layout(sched, 2);
    const double T = sched.times[0];
    require_after(t, sched.times[1]);
    return {assemble(two_kicks(params, sched.alpha, sched.beta, T, t), params.theta), sched.times[1]};
}

Propagator three_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t) {
    require_layout(sched, 3);
    const double T = sched.times[0];
    require_after(t, sched.times[2]);
    return {assemble(three_kicks(params, sched.alpha, sched.beta, T, t), params.theta), sched.times[2]};
}

Propagator n_kick_propagator(const SystemParams& params, const KickSchedule& sched, double t) {
    sched.validate();
    const double last = sched.times.empty() ? 0.0 : sched.times.back();
    if (sched.times.empty()) {
        if (!(t >= 0.0)) throw DomainError("propagator needs t >= 0");
    } else {
        require_after(t, last);
    }
    const Matrix4 kick = kick_generator(params, sched.alpha, sched.beta);
    Matrix4 u = Matrix4::identity();
    double prev = 0.0;
    for (double tk : sched.times) {
        u = kick * (free_propagator(params, tk - prev).matrix * u);
        prev = tk;
    }
    u = free_propagator(params, t - prev).matrix * u;
    return {u, last};
}

Propagator kick_propagator_at(const SystemParams& params, const KickSchedule& sched, double t) {
    std::size_t applied = 0;
    while (applied < sched.times.size() && sched.times[applied] < t) ++applied;
    if (applied == 0) return free_propagator(params, t);

    KickSchedule prefix{sched.alpha, sched.beta,
                        std::vector<double>(sched.times.begin(),
                                            sched.times.begin() + static_cast<std::ptrdiff_t>(applied))};
    if (applied <= 3 && equally_spaced_from_origin(prefix.times, applied)) {
        switch (applied) {
            case 1: return one_kick_propagator(params, prefix, t);
            case 2: return two_kick_propagator(params, prefix, t);
            default: return three_kick_propagator(params, prefix, t);
        }
    }
    return n_kick_propagator(params, prefix, t);
}

Vector4 apply_propagator(const Propagator& u, const Vector4& state0) {
    const double n = state0.norm();
    if (!(std::abs(n - 1.0) <= normalization_tolerance))
        throw NormalizationError("initial state norm " + std::to_string(n) + " is not 1");
    return u.matrix * state0;
}

}  // namespace qkick
