#include "doctest.h"

#include <numbers>

#include "oracles.hpp"
#include "qkick/errors.hpp"
#include "qkick/scan.hpp"

using namespace qkick;
using std::numbers::pi;

namespace {

ScanSpec fig1(StateLabel state, Drive drive = Drive::kick) {
    ScanSpec s;
    s.drive = drive;
    s.theta = pi / 2;
    s.alpha_over_beta = 3.0;
    s.tau = 0.3;
    s.centers = {5.0, 10.0, 15.0};
    s.time = {0.0, 20.0, 2001};
    s.initial_state = named_state(state);
    return s;
}

}  // namespace

TEST_CASE("ScanSpec validation") {
    ScanSpec s = fig1(StateLabel::s11);
    CHECK_NOTHROW(s.validate());

    ScanSpec bad = s;
    bad.time.count = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = s;
    bad.time = {5.0, 5.0, 10};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = s;
    bad.beta = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = s;
    bad.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 20.0, 1}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = s;
    bad.centers = {10.0, 5.0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(grid_scan(s), DomainError);
}

TEST_CASE("row substitutes the sweep parameter") {
    ScanSpec s = fig1(StateLabel::s11);
    s.sweep = SweepAxis{SweepParameter::theta_over_pi, {0.0, 0.5, 11}};
    const ScanSpec r = s.row(0.25);
    CHECK(r.theta == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK_FALSE(r.sweep.has_value());
    s.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 20.0, 11}};
    CHECK(s.row(7.0).alpha_over_beta == 7.0);
    CHECK(s.row(7.0).kick_schedule().alpha == 7.0);
}

TEST_CASE("kick series follows the analytic branches") {
    const ConcurrenceSeries s = time_series(fig1(StateLabel::s11));
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] < 5.0) CHECK(s.values[i] < 1e-12);
        CHECK(s.values[i] >= 0.0);
        CHECK(s.values[i] <= 1.0);
    }
    CHECK(steady_value(s, 15.0, 20.0).min > 0.9);

    // branch choice against the composition oracle on both sides of every kick
    const ScanSpec spec = fig1(StateLabel::phi_plus);
    for (double t : {4.9, 5.0 + 1e-9, 9.9, 10.0 + 1e-9, 14.9, 15.0 + 1e-9, 19.0}) {
        std::vector<double> applied;
        for (double c : spec.centers)
            if (c < t) applied.push_back(c);
        const Matrix4 u = oracle::composition(spec.system(), 3.0, 1.0, applied, t);
        const double expected = concurrence_pure(u * spec.initial_state.vector);
        ScanSpec one = spec;
        one.time = {t - 1e-12, t, 2};
        CAPTURE(t);
        CHECK(std::abs(time_series(one).values.back() - expected) < 1e-8);
    }
}

TEST_CASE("Bell states before the first kick and under a free drive") {
    const ConcurrenceSeries s = time_series(fig1(StateLabel::phi_plus));
    for (std::size_t i = 0; s.times[i] < 5.0; ++i) CHECK(s.values[i] == doctest::Approx(1.0).epsilon(1e-12));

    ScanSpec empty = fig1(StateLabel::phi_plus);
    empty.centers.clear();
    const ConcurrenceSeries free_run = time_series(empty);
    const SteadyStats st = steady_value(free_run, 0.0, 5.0);
    CHECK(st.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(st.spread < 1e-12);
    CHECK(st.steady);
}

TEST_CASE("psi+ is immune to transverse drives") {
    oracle::Random rng(51);
    for (int k = 0; k < 10; ++k) {
        ScanSpec s = fig1(StateLabel::psi_plus, k % 2 ? Drive::gaussian : Drive::kick);
        s.theta = rng.uniform(0, pi / 2);
        s.alpha_over_beta = rng.uniform(0, 20);
        s.beta = rng.uniform(0.2, 2);
        s.tau = rng.uniform(0.01, 1);
        s.time.count = 401;
        for (double c : time_series(s).values) CHECK(std::abs(c - 1.0) < 1e-10);
    }
}

TEST_CASE("phi+ plateau table") {
    const std::array<std::pair<double, double>, 4> table{{{0.06, 0.93}, {0.18, 0.44}, {0.25, 0.08}, {0.36, 0.63}}};
    for (const auto& [theta_over_pi, expected] : table) {
        ScanSpec s = fig1(StateLabel::phi_plus);
        s.theta = theta_over_pi * pi;
        const SteadyStats st = steady_value(time_series(s), 15.0, 20.0);
        CAPTURE(theta_over_pi);
        CHECK(std::abs(st.mean - expected) <= 0.03);
        CHECK(st.spread <= 0.05);
        CHECK(st.steady);
    }
}

TEST_CASE("steady_value window errors") {
    const ConcurrenceSeries s = time_series(fig1(StateLabel::s11));
    CHECK_THROWS_AS(steady_value(s, 15.0, 25.0), WindowError);
    CHECK_THROWS_AS(steady_value(s, -1.0, 5.0), WindowError);
    CHECK_THROWS_AS(steady_value(s, 5.0, 5.0), WindowError);
    CHECK_THROWS_AS(steady_value(s, 10.0, 10.005), WindowError);
    CHECK_THROWS_AS(steady_value(s, 10.0, 10.095), WindowError);
    CHECK(steady_value(s, 10.0, 10.105).samples == 10);
}

TEST_CASE("|11> grid: the alpha/beta = 1 row is separable") {
    ScanSpec s = fig1(StateLabel::s11);
    s.time.count = 401;
    s.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 2.0, 5}};
    const ScanGrid g = grid_scan(s, 2);
    REQUIRE(g.axis2.size() == 5);
    REQUIRE(g.axis2[2] == 1.0);
    REQUIRE(g.concurrence.size() == 5 * 401);
    for (std::size_t c = 0; c < g.axis1.size(); ++c) CHECK(g.at(2, c) < 1e-12);
}

TEST_CASE("|11> grid over theta has identical rows") {
    for (Drive d : {Drive::kick, Drive::gaussian}) {
        ScanSpec s = fig1(StateLabel::s11, d);
        s.time.count = 401;
        s.sweep = SweepAxis{SweepParameter::theta_over_pi, {0.0, 0.5, 6}};
        const ScanGrid g = grid_scan(s, 3);
        double worst = 0.0;
        for (std::size_t r = 1; r < g.axis2.size(); ++r)
            for (std::size_t c = 0; c < g.axis1.size(); ++c) worst = std::max(worst, std::abs(g.at(r, c) - g.at(0, c)));
        CAPTURE(to_string(d));
        CHECK(worst <= 1e-10);
        CHECK(g.norm_drift <= 1e-8);
    }
}

TEST_CASE("grid output does not depend on the thread count") {
    ScanSpec s = fig1(StateLabel::phi_plus, Drive::gaussian);
    s.time.count = 201;
    s.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 6.0, 7}};
    const ScanGrid one = grid_scan(s, 1);
    const ScanGrid four = grid_scan(s, 4);
    CHECK(one.concurrence == four.concurrence);
    CHECK(one.axis2 == four.axis2);
    CHECK(one.norm_drift == four.norm_drift);
}

TEST_CASE("a failing row aborts the grid") {
    ScanSpec s = fig1(StateLabel::s11, Drive::gaussian);
    s.time.count = 51;
    s.integrator.max_steps = 10;
    s.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 3.0, 4}};
    CHECK_THROWS_AS(grid_scan(s, 2), StepSizeUnderflow);
}

TEST_CASE("narrow Gaussian grid matches the kick grid") {
    ScanSpec kick = fig1(StateLabel::s11);
    kick.time = {0.0, 20.0, 20};
    kick.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 19.0, 20}};
    ScanSpec narrow = kick;
    narrow.drive = Drive::gaussian;
    narrow.tau = 0.001;
    const ScanGrid a = grid_scan(kick, 1);
    const ScanGrid b = grid_scan(narrow, 1);
    double worst = 0.0;
    for (std::size_t r = 0; r < 20; ++r)
        for (std::size_t c = 0; c < 20; ++c) {
            // the two drives differ inside a pulse; keep samples away from the centres
            bool inside = false;
            for (double t0 : kick.centers) inside = inside || std::abs(a.axis1[c] - t0) < 0.01;
            if (!inside) worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
        }
    CHECK(worst <= 2e-3);
}

TEST_CASE("narrow Gaussian grid converges to the kick grid at first order") {
    ScanSpec kick = fig1(StateLabel::s11);
    kick.time = {0.0, 20.0, 20};
    kick.sweep = SweepAxis{SweepParameter::alpha_over_beta, {0.0, 19.0, 20}};
    const ScanGrid limit = grid_scan(kick, 1);
    auto worst_at = [&](double tau) {
        ScanSpec g = kick;
        g.drive = Drive::gaussian;
        g.tau = tau;
        const ScanGrid b = grid_scan(g, 1);
        double w = 0.0;
        for (std::size_t i = 0; i < b.concurrence.size(); ++i)
            w = std::max(w, std::abs(b.concurrence[i] - limit.concurrence[i]));
        return w;
    };
    const double d1 = worst_at(0.001), d2 = worst_at(0.0005);
    CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("names") {
    CHECK(to_string(Drive::kick) == "kick");
    CHECK(to_string(Drive::gaussian) == "gaussian");
    CHECK(to_string(SweepParameter::theta_over_pi) == "theta_over_pi");
}
