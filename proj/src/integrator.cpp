#include "qkick/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qkick/errors.hpp"

namespace qkick {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// The user tolerances bound the global error; local steps run this much tighter
// because DP5 errors accumulate over the ~1e3 steps of a typical run.
constexpr double local_tolerance_factor = 1e-2;

// continuous extension
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

class Rhs {
public:
    Rhs(const SystemParams& params, const GaussianSchedule& sched)
        : sched_(sched),
          h0_(h0(params)),
          x1_(h_int({1.0, 0.0}, params)),
          x2_(h_int({0.0, 1.0}, params)) {}

    Vector4 operator()(double t, const Vector4& y) const {
        const FieldSample f = gaussian_field(sched_, t);
        Matrix4 h = h0_;
        if (f.b1 != 0.0) h += f.b1 * x1_;
        if (f.b2 != 0.0) h += f.b2 * x2_;
        return cplx{0.0, -1.0} * (h * y);
    }

private:
    const GaussianSchedule& sched_;
    Matrix4 h0_, x1_, x2_;
};

Vector4 combine(const Vector4& y, double h, std::initializer_list<std::pair<double, const Vector4*>> terms) {
    Vector4 r = y;
    for (const auto& [w, k] : terms) {
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < 4; ++i) r[i] += (h * w) * (*k)[i];
    }
    return r;
}

std::vector<double> breakpoints(const GaussianSchedule& sched, double t_end) {
    std::vector<double> out;
    for (double c : sched.centers)
        for (int k = -6; k <= 6; ++k) {
            const double p = c + k * sched.tau;
            if (p > 0.0 && p < t_end) out.push_back(p);
        }
    out.push_back(t_end);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<double> uniform_grid(double start, double stop, std::size_t count) {
    if (count < 2) throw DomainError("grid needs at least two points");
    std::vector<double> g(count);
    const double n = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) g[i] = start + (stop - start) * static_cast<double>(i) / n;
    g.back() = stop;
    return g;
}

Trajectory integrate(const SystemParams& params, const GaussianSchedule& sched, const Vector4& state0,
                     double t_end, const std::vector<double>& samples, const IntegratorOptions& options) {
    sched.validate();
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be > 0");
    if (std::abs(state0.norm() - 1.0) > 1e-10)
        throw NormalizationError("initial state is not normalized to 1e-10");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] < 0.0 || samples[i] > t_end)
            throw DomainError("sample time " + std::to_string(samples[i]) + " outside [0, t_end]");
        if (i > 0 && samples[i] < samples[i - 1]) throw DomainError("sample times must be ascending");
    }

    const Rhs rhs(params, sched);
    const std::vector<double> stops = breakpoints(sched, t_end);

    Trajectory traj;
    traj.times = samples;
    traj.states.reserve(samples.size());
    auto drift = [&](const Vector4& y) {
        traj.norm_drift = std::max(traj.norm_drift, std::abs(y.norm() - 1.0));
    };

    std::size_t next_sample = 0;
    while (next_sample < samples.size() && samples[next_sample] <= 0.0) {
        traj.states.push_back(state0);
        ++next_sample;
    }

    double t = 0.0;
    Vector4 y = state0;
    Vector4 k1 = rhs(t, y);
    double h = 1e-3 / std::max(1.0, (h0(params) + h_int(gaussian_field(sched, 0.0), params)).max_abs());
    std::size_t stop_idx = 0;
    bool last_rejected = false;

    while (t < t_end) {
        if (++traj.steps > options.max_steps) throw StepSizeUnderflow("step budget exhausted");
        while (stops[stop_idx] <= t) ++stop_idx;
        const double target = stops[stop_idx];
        bool lands = false;
        double step = h;
        if (t + step >= target) {
            step = target - t;
            lands = true;
        }
        if (step < 1e-14 * std::max(1.0, std::abs(t)))
            throw StepSizeUnderflow("step size underflow at t = " + std::to_string(t));

        const Vector4 k2 = rhs(t + c2 * step, combine(y, step, {{a21, &k1}}));
        const Vector4 k3 = rhs(t + c3 * step, combine(y, step, {{a31, &k1}, {a32, &k2}}));
        const Vector4 k4 = rhs(t + c4 * step, combine(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const Vector4 k5 =
            rhs(t + c5 * step, combine(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const Vector4 k6 = rhs(t + step, combine(y, step, {{a61, &k1}, {a62, &k2}, {a63, &k3},
                                                           {a64, &k4}, {a65, &k5}}));
        const Vector4 y_new = combine(y, step, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const double t_new = lands ? target : t + step;
        const Vector4 k7 = rhs(t_new, y_new);

        double err = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const cplx e = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                   e7 * k7[i]);
            const double sc = local_tolerance_factor *
                              (options.atol + options.rtol * std::max(std::abs(y[i]), std::abs(y_new[i])));
            err += std::norm(e) / (sc * sc);
        }
        err = std::sqrt(err / 4.0);
        if (!std::isfinite(err)) throw StepSizeUnderflow("non-finite error estimate");

        if (err <= 1.0) {
            // dense output for every sample inside (t, t_new]
            if (next_sample < samples.size() && samples[next_sample] <= t_new) {
                const Vector4 ydiff = y_new - y;
                const Vector4 bspl = combine(Vector4{}, step, {{1.0, &k1}}) - ydiff;
                const Vector4 r4 = ydiff - combine(Vector4{}, step, {{1.0, &k7}}) - bspl;
                const Vector4 r5 = combine(Vector4{}, step, {{d1, &k1}, {d3, &k3}, {d4, &k4},
                                                             {d5, &k5}, {d6, &k6}, {d7, &k7}});
                while (next_sample < samples.size() && samples[next_sample] <= t_new) {
                    const double s = samples[next_sample];
                    Vector4 ys;
                    if (s == t_new) {
                        ys = y_new;
                    } else {
                        const double th = (s - t) / step;
                        const double th1 = 1.0 - th;
                        for (std::size_t i = 0; i < 4; ++i)
                            ys[i] = y[i] + th * (ydiff[i] + th1 * (bspl[i] + th * (r4[i] + th1 * r5[i])));
                    }
                    drift(ys);
                    traj.states.push_back(ys);
                    ++next_sample;
                }
            }
            t = t_new;
            y = y_new;
            k1 = k7;
            drift(y);
            if (traj.norm_drift > options.norm_error_threshold)
                throw NormalizationError("norm drift " + std::to_string(traj.norm_drift) +
                                         " exceeds threshold");
            double fac = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
            fac = std::clamp(fac, 0.2, last_rejected ? 1.0 : 5.0);
            // a landing step may have been truncated; grow from the proposed size
            h = (lands ? std::max(h, step) : step) * fac;
            last_rejected = false;
        } else {
            h = step * std::max(0.2, 0.9 * std::pow(err, -0.2));
            last_rejected = true;
        }
    }
    return traj;
}

Propagator numeric_propagator(const SystemParams& params, const GaussianSchedule& sched, double t,
                              const IntegratorOptions& options) {
    Propagator p;
    p.valid_from = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        Vector4 e;
        e[j] = 1.0;
        const Trajectory tr = integrate(params, sched, e, t, {t}, options);
        for (std::size_t i = 0; i < 4; ++i) p.matrix(i, j) = tr.states.front()[i];
    }
    return p;
}

}  // namespace qkick
