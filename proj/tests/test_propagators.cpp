#include "doctest.h"

#include <numbers>

#include "oracles.hpp"
#include "qkick/entanglement.hpp"
#include "qkick/errors.hpp"
#include "qkick/propagators.hpp"

using namespace qkick;
using std::numbers::pi;

namespace {

struct Draw {
    SystemParams p;
    double alpha, beta, spacing, t;
};

Draw random_draw(oracle::Random& rng, int kicks) {
    Draw d;
    d.p = {rng.uniform(-2, 2), rng.uniform(0, pi / 2)};
    d.alpha = rng.uniform(-6, 6);
    d.beta = rng.uniform(-6, 6);
    d.spacing = rng.uniform(0.1, 6);
    d.t = kicks * d.spacing + rng.uniform(1e-3, 6);
    return d;
}

std::vector<double> equally_spaced(double spacing, int n) {
    std::vector<double> v;
    for (int k = 1; k <= n; ++k) v.push_back(k * spacing);
    return v;
}

double conc(const Propagator& u, StateLabel s) {
    return concurrence_pure(apply_propagator(u, named_state(s).vector));
}

}  // namespace

TEST_CASE("free propagator") {
    const SystemParams p{1.0, 0.0};
    CHECK(max_abs_diff(free_propagator(p, 0.0).matrix, Matrix4::identity()) == 0.0);
    CHECK(max_abs_diff(free_propagator(p, 0.3).matrix, oracle::free_expm(p, 0.3)) < 1e-12);
    for (double t = 0.0; t < 20.0; t += 0.37) {
        CHECK(conc(free_propagator(p, t), StateLabel::s11) == 0.0);
        CHECK(conc(free_propagator(p, t), StateLabel::phi_plus) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(free_propagator(p, -0.1), DomainError);
}

TEST_CASE("apply_propagator") {
    oracle::Random rng(21);
    const Vector4 psi = rng.state();
    const Vector4 out = apply_propagator(Propagator{}, psi);
    CHECK(out == psi);

    const double J = 1.0, t = 0.83;
    const Vector4 a = apply_propagator(free_propagator({J, 0.0}, t), named_state(StateLabel::s10).vector);
    CHECK(std::abs(a[1] - std::polar(1.0, J * t) * std::cos(2 * J * t)) < 1e-15);
    CHECK(std::abs(a[2] - cplx{0.0, -1.0} * std::polar(1.0, J * t) * std::sin(2 * J * t)) < 1e-15);
    CHECK(a[0] == cplx{});
    CHECK(a[3] == cplx{});

    CHECK_THROWS_AS(apply_propagator(Propagator{}, cplx{1.01} * psi), NormalizationError);

    const KickSchedule three{3.0, 1.0, {5.0, 10.0, 15.0}};
    const Vector4 b = apply_propagator(three_kick_propagator({1.0, pi / 2}, three, 17.0),
                                       named_state(StateLabel::s11).vector);
    CHECK(std::abs(b.norm() - 1.0) < 1e-12);
    CHECK(concurrence_pure(b) > 0.9);
}

TEST_CASE("one-kick closed form") {
    const SystemParams p{1.0, 0.4};
    const KickSchedule zero{0.0, 0.0, {2.0}};
    CHECK(max_abs_diff(one_kick_propagator(p, zero, 3.1).matrix, free_propagator(p, 3.1).matrix) < 1e-14);

    oracle::Random rng(22);
    for (int k = 0; k < 200; ++k) {
        const Draw d = random_draw(rng, 1);
        const KickSchedule s{d.alpha, d.beta, {d.spacing}};
        const Propagator u = one_kick_propagator(d.p, s, d.t);
        CHECK(max_abs_diff(u.matrix, oracle::composition(d.p, d.alpha, d.beta, s.times, d.t)) < 1e-12);
        CHECK(u.valid_from == d.spacing);
    }

    // equal strengths commute with h0: the Bell state is untouched
    const KickSchedule equal{1.0, 1.0, {5.0}};
    for (double t = 5.01; t < 20.0; t += 0.25)
        CHECK(conc(one_kick_propagator({1.0, pi / 2}, equal, t), StateLabel::phi_plus) ==
              doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(one_kick_propagator(p, equal, 5.0), DomainError);
    CHECK_THROWS_AS(one_kick_propagator(p, equal, 4.0), DomainError);
    CHECK_THROWS_AS(one_kick_propagator(p, KickSchedule{1.0, 1.0, {1.0, 2.0}}, 4.0), SpacingError);
}

TEST_CASE("two-kick closed form") {
    const SystemParams p{0.7, 1.1};
    CHECK(max_abs_diff(two_kick_propagator(p, {0.0, 0.0, {1.5, 3.0}}, 4.2).matrix,
                       free_propagator(p, 4.2).matrix) < 1e-14);

    oracle::Random rng(23);
    for (int k = 0; k < 200; ++k) {
        const Draw d = random_draw(rng, 2);
        const KickSchedule s{d.alpha, d.beta, equally_spaced(d.spacing, 2)};
        CHECK(max_abs_diff(two_kick_propagator(d.p, s, d.t).matrix,
                           oracle::composition(d.p, d.alpha, d.beta, s.times, d.t)) < 1e-12);
    }

    // Bell state with alpha/beta = 2 dips to (almost) zero between the 2nd and 3rd kick
    const KickSchedule s{2.0, 1.0, {5.0, 10.0}};
    double lowest = 1.0;
    for (double t = 10.0025; t < 15.0; t += 0.0025)
        lowest = std::min(lowest, conc(two_kick_propagator({1.0, pi / 2}, s, t), StateLabel::phi_plus));
    CHECK(lowest < 0.05);

    CHECK_THROWS_AS(two_kick_propagator(p, s, 10.0), DomainError);
    CHECK_THROWS_AS(two_kick_propagator(p, {2.0, 1.0, {5.0, 11.0}}, 12.0), SpacingError);
    CHECK_THROWS_AS(two_kick_propagator(p, {2.0, 1.0, {5.0}}, 12.0), SpacingError);
}

TEST_CASE("three-kick closed form") {
    const SystemParams p{-1.3, 0.2};
    CHECK(max_abs_diff(three_kick_propagator(p, {0.0, 0.0, {1.0, 2.0, 3.0}}, 3.5).matrix,
                       free_propagator(p, 3.5).matrix) < 1e-14);

    oracle::Random rng(24);
    for (int k = 0; k < 200; ++k) {
        const Draw d = random_draw(rng, 3);
        const KickSchedule s{d.alpha, d.beta, equally_spaced(d.spacing, 3)};
        CHECK(max_abs_diff(three_kick_propagator(d.p, s, d.t).matrix,
                           oracle::composition(d.p, d.alpha, d.beta, s.times, d.t)) < 1e-12);
    }

    const KickSchedule s{3.0, 1.0, {5.0, 10.0, 15.0}};
    double lowest = 1.0;
    for (double t = 15.0025; t < 20.0; t += 0.0025)
        lowest = std::min(lowest, conc(three_kick_propagator({1.0, pi / 2}, s, t), StateLabel::s11));
    CHECK(lowest > 0.9);

    CHECK_THROWS_AS(three_kick_propagator(p, s, 15.0), DomainError);
    CHECK_THROWS_AS(three_kick_propagator(p, {3.0, 1.0, {5.0, 10.0, 16.0}}, 17.0), SpacingError);
}

TEST_CASE("n-kick product form") {
    oracle::Random rng(25);
    for (int k = 0; k < 100; ++k) {
        const Draw d1 = random_draw(rng, 1);
        const KickSchedule s1{d1.alpha, d1.beta, {d1.spacing}};
        CHECK(max_abs_diff(n_kick_propagator(d1.p, s1, d1.t).matrix,
                           one_kick_propagator(d1.p, s1, d1.t).matrix) < 1e-12);

        const Draw d3 = random_draw(rng, 3);
        const KickSchedule s3{d3.alpha, d3.beta, equally_spaced(d3.spacing, 3)};
        CHECK(max_abs_diff(n_kick_propagator(d3.p, s3, d3.t).matrix,
                           three_kick_propagator(d3.p, s3, d3.t).matrix) < 1e-12);

        // irregular spacing and more kicks against the expm oracle
        std::vector<double> times;
        double t = 0.0;
        for (int n = 0; n < 5; ++n) times.push_back(t += rng.uniform(0.05, 3.0));
        const KickSchedule s5{d3.alpha, d3.beta, times};
        const double t_end = times.back() + rng.uniform(0.01, 2.0);
        CHECK(max_abs_diff(n_kick_propagator(d3.p, s5, t_end).matrix,
                           oracle::composition(d3.p, d3.alpha, d3.beta, times, t_end)) < 1e-12);
    }

    const SystemParams p{1.0, 0.5};
    CHECK(max_abs_diff(n_kick_propagator(p, {2.0, 1.0, {}}, 4.0).matrix, free_propagator(p, 4.0).matrix) == 0.0);
    CHECK_THROWS_AS(n_kick_propagator(p, {2.0, 1.0, {1.0, 2.0}}, 2.0), DomainError);
    CHECK_THROWS_AS(n_kick_propagator(p, {2.0, 1.0, {2.0, 1.0}}, 3.0), DomainError);
}

TEST_CASE("every propagator is unitary") {
    oracle::Random rng(26);
    for (int k = 0; k < 100; ++k) {
        for (int n = 1; n <= 3; ++n) {
            const Draw d = random_draw(rng, n);
            const KickSchedule s{d.alpha, d.beta, equally_spaced(d.spacing, n)};
            CHECK(unitarity_defect(kick_propagator_at(d.p, s, d.t).matrix) < 1e-10);
            CHECK(unitarity_defect(n_kick_propagator(d.p, s, d.t).matrix) < 1e-10);
        }
    }
}

TEST_CASE("closed-form symmetry relations hold for the product form") {
    // The product form never uses the symmetry relations, so checking them
    // here tests the relations themselves.
    oracle::Random rng(27);
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + k % 3;
        const Draw d = random_draw(rng, n);
        const Matrix4 u = n_kick_propagator(d.p, {d.alpha, d.beta, equally_spaced(d.spacing, n)}, d.t).matrix;
        const double th = d.p.theta;
        auto e = [](double x) { return std::polar(1.0, x); };
        CHECK(std::abs(u(0, 0) - u(3, 3)) < 1e-12);
        CHECK(std::abs(u(1, 1) - u(2, 2)) < 1e-12);
        CHECK(std::abs(u(1, 2) - u(2, 1)) < 1e-12);
        CHECK(std::abs(u(0, 1) - e(-2 * th) * u(3, 2)) < 1e-12);
        CHECK(std::abs(u(0, 2) - e(-2 * th) * u(3, 1)) < 1e-12);
        CHECK(std::abs(u(0, 3) - e(-4 * th) * u(3, 0)) < 1e-12);
        CHECK(std::abs(u(1, 0) - e(2 * th) * u(2, 3)) < 1e-12);
        CHECK(std::abs(u(1, 3) - e(-2 * th) * u(2, 0)) < 1e-12);
    }
}

TEST_CASE("region selection") {
    const SystemParams p{1.0, pi / 2};
    const KickSchedule s{3.0, 1.0, {5.0, 10.0, 15.0}};
    CHECK(kick_propagator_at(p, s, 5.0).valid_from == 0.0);
    CHECK(kick_propagator_at(p, s, 7.0).valid_from == 5.0);
    CHECK(kick_propagator_at(p, s, 12.0).valid_from == 10.0);
    CHECK(kick_propagator_at(p, s, 19.0).valid_from == 15.0);

    // just after each kick the branch agrees with the oracle
    for (double tk : s.times) {
        std::vector<double> applied;
        for (double x : s.times)
            if (x <= tk) applied.push_back(x);
        const double t = tk + 1e-9;
        CHECK(max_abs_diff(kick_propagator_at(p, s, t).matrix, oracle::composition(p, 3.0, 1.0, applied, t)) < 1e-8);
    }

    // irregular schedules route to the product form
    const KickSchedule irregular{3.0, 1.0, {5.0, 9.0}};
    CHECK(max_abs_diff(kick_propagator_at(p, irregular, 11.0).matrix,
                       oracle::composition(p, 3.0, 1.0, irregular.times, 11.0)) < 1e-12);
}

TEST_CASE("dynamics without time ordering") {
    // alpha = beta or J = 0: [H(t''), H(t')] = 0 and entanglement is frozen
    oracle::Random rng(28);
    for (int k = 0; k < 20; ++k) {
        const double a = rng.uniform(-8, 8);
        const SystemParams p{rng.uniform(0.2, 2), rng.uniform(0, pi / 2)};
        const SystemParams decoupled{0.0, p.theta};
        const KickSchedule equal{a, a, {5.0, 10.0, 15.0}};
        const KickSchedule unequal{a, rng.uniform(-8, 8), {5.0, 10.0, 15.0}};
        for (double t = 0.1; t < 20.0; t += 0.7) {
            CHECK(conc(kick_propagator_at(p, equal, t), StateLabel::s11) < 1e-10);
            CHECK(conc(kick_propagator_at(p, equal, t), StateLabel::phi_plus) > 1 - 1e-10);
            CHECK(conc(kick_propagator_at(decoupled, unequal, t), StateLabel::s11) < 1e-10);
            CHECK(conc(kick_propagator_at(decoupled, unequal, t), StateLabel::phi_plus) > 1 - 1e-10);
        }
    }
}

TEST_CASE("theta independence of |11> and immunity of psi+") {
    oracle::Random rng(29);
    for (int k = 0; k < 20; ++k) {
        const KickSchedule s{rng.uniform(-10, 10), rng.uniform(-10, 10), {5.0, 10.0, 15.0}};
        const double J = rng.uniform(0.2, 2);
        const double th1 = rng.uniform(0, pi / 2), th2 = rng.uniform(0, pi / 2);
        for (double t = 0.1; t < 20.0; t += 0.3) {
            const double c1 = conc(kick_propagator_at({J, th1}, s, t), StateLabel::s11);
            const double c2 = conc(kick_propagator_at({J, th2}, s, t), StateLabel::s11);
            CHECK(std::abs(c1 - c2) <= 1e-10);
            CHECK(conc(kick_propagator_at({J, th1}, s, t), StateLabel::psi_plus) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}
