#include <cmath>

#include "doctest.h"
#include "minkpair/oracle.hpp"
#include "minkpair/orthonormalize.hpp"

using namespace minkpair;

namespace {

SymForm<double> random_minkowski(DetRng& rng) {
    const Transition<Rational> s = random_congruence_exact(rng, 20.0);
    const SymForm<Rational> g = congruence(SymForm<Rational>::minkowski(), s);
    return {to_double(g.m00), to_double(g.m01), to_double(g.m11)};
}

}  // namespace

TEST_CASE("orthonormal_transition on already-orthonormal g is the identity") {
    CHECK(orthonormal_transition(SymForm<double>::minkowski()) ==
          Transition<double>::identity());
}

TEST_CASE("orthonormal_transition scales a diagonal g") {
    const Transition<double> s = orthonormal_transition(SymForm<double>::diag(4.0, -9.0));
    CHECK(s.s00 == 0.5);
    CHECK(s.s01 == 0.0);
    CHECK(s.s10 == 0.0);
    CHECK(s.s11 == 1.0 / 3.0);
}

TEST_CASE("orthonormal_transition handles the null-diagonal frame") {
    const SymForm<double> g = SymForm<double>::null_frame();
    const Transition<double> s = orthonormal_transition(g);
    const double r = 1.0 / std::sqrt(2.0);
    // first column (r, r); second column (-r, r), sign fixed by det S > 0
    CHECK(s.s00 == doctest::Approx(r).epsilon(1e-15));
    CHECK(s.s10 == doctest::Approx(r).epsilon(1e-15));
    CHECK(s.s01 == doctest::Approx(-r).epsilon(1e-15));
    CHECK(s.s11 == doctest::Approx(r).epsilon(1e-15));
    CHECK(s.det() > 0);
    CHECK(deviation_inf(congruence(g, s), SymForm<double>::minkowski()) <= 1e-12);
}

TEST_CASE("orthonormalize_pair keeps an orthonormal pair fixed") {
    const MetricPair<double> pair{SymForm<double>::minkowski(), {2.0, 1.0, 0.0}};
    const auto [on, s] = orthonormalize_pair(pair);
    CHECK(s == Transition<double>::identity());
    CHECK(on.g == pair.g);
    CHECK(on.gcheck == pair.gcheck);
}

TEST_CASE("orthonormalize_pair transforms both metrics with the same transition") {
    const MetricPair<double> pair{SymForm<double>::null_frame(), {1.0, 1.0, 0.0}};
    const auto [on, s] = orthonormalize_pair(pair);
    CHECK(deviation_inf(on.g, SymForm<double>::minkowski()) <= 1e-12);
    // derived by hand from the det > 0 transition above
    CHECK(deviation_inf(on.gcheck, SymForm<double>{1.5, -0.5, -0.5}) <= 1e-12);
    CHECK(deviation_inf(congruence(pair.gcheck, s), on.gcheck) == 0.0);
}

TEST_CASE("orthonormalize_pair normalizes a proportional pair to a=1") {
    const MetricPair<double> pair{SymForm<double>::diag(2.0, -2.0),
                                  SymForm<double>::diag(2.0, -2.0)};
    const auto [on, s] = orthonormalize_pair(pair);
    CHECK(deviation_inf(on.gcheck, SymForm<double>::minkowski()) <= 1e-12);
}

TEST_CASE("transformed g is diag(1,-1) for random Minkowski forms") {
    DetRng rng(21, 0);
    for (int i = 0; i < 200; ++i) {
        const SymForm<double> g = random_minkowski(rng);
        const Transition<double> s = orthonormal_transition(g);
        const SymForm<double> on = congruence(g, s);
        CHECK(std::fabs(on.m00 - 1.0) <= 1e-12 * std::max(1.0, norm_inf(g)));
        CHECK(std::fabs(on.m11 + 1.0) <= 1e-12 * std::max(1.0, norm_inf(g)));
        CHECK(std::fabs(on.m01) <= 1e-12 * std::max(1.0, norm_inf(g)));
        CHECK(s.det() > 0);
    }
}

TEST_CASE("orthonormalizing an orthonormalized form is a residual no-op") {
    DetRng rng(22, 0);
    for (int i = 0; i < 50; ++i) {
        const SymForm<double> g = random_minkowski(rng);
        const SymForm<double> on = congruence(g, orthonormal_transition(g));
        const Transition<double> s2 = orthonormal_transition(on);
        CHECK(deviation_inf(congruence(on, s2), SymForm<double>::minkowski()) <= 1e-11);
    }
}

TEST_CASE("orthonormal_transition pivots to e1 when g00 vanishes") {
    const SymForm<double> g{0.0, 1.0, -2.0};
    const Transition<double> s = orthonormal_transition(g);
    CHECK(deviation_inf(congruence(g, s), SymForm<double>::minkowski()) <= 1e-12);
    CHECK(s.det() > 0);
}

TEST_CASE("orthonormal_transition rejects non-Minkowski signatures") {
    CHECK_THROWS_AS(orthonormal_transition(SymForm<double>::diag(1.0, 1.0)), SignatureError);
    CHECK_THROWS_AS(orthonormal_transition(SymForm<double>::diag(-1.0, -1.0)), SignatureError);
    CHECK_THROWS_AS(orthonormal_transition(SymForm<double>{}), SignatureError);
    // indefinite with positive diagonal is accepted: det = 1 - 4 < 0
    CHECK_NOTHROW(orthonormal_transition(SymForm<double>{1.0, 2.0, 1.0}));
}

TEST_CASE("g_orthogonal_frame stays rational on the exact backend") {
    const SymForm<Rational> g = SymForm<Rational>::null_frame();
    const OrthogonalFrame<Rational> fr = g_orthogonal_frame(g);
    CHECK(fr.vx == Rational(1));
    CHECK(fr.vy == Rational(1));
    CHECK(fr.wx == Rational(-1));
    CHECK(fr.wy == Rational(1));
    CHECK(fr.q_time == Rational(2));
    CHECK(fr.q_space == Rational(-2));
    CHECK(eval_form(g, fr.vx, fr.vy, fr.wx, fr.wy) == Rational(0));
}

TEST_CASE("g_orthogonal_frame is g-orthogonal with opposite-sign values") {
    DetRng rng(23, 0);
    for (int i = 0; i < 100; ++i) {
        const Transition<Rational> s = random_congruence_exact(rng, 20.0);
        const SymForm<Rational> g = congruence(SymForm<Rational>::minkowski(), s);
        const OrthogonalFrame<Rational> fr = g_orthogonal_frame(g);
        CHECK(eval_form(g, fr.vx, fr.vy, fr.wx, fr.wy) == Rational(0));
        CHECK(fr.q_time.sign() == 1);
        CHECK(fr.q_space.sign() == -1);
    }
}
