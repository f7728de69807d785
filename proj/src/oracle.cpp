#include "minkpair/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minkpair {

std::uint64_t DetRng::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D4A4FBCFB3782Full;
    return z ^ (z >> 31);
}

std::uint64_t DetRng::below(std::uint64_t n) {
    if (n == 0) throw DomainError("below(n) requires n > 0");
    return next() % n;  // modulo bias is irrelevant for test-data generation
}

long DetRng::pick(long lo, long hi) {
    if (lo > hi) throw DomainError("pick(lo, hi) requires lo <= hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

Rational DetRng::fraction(long num_lo, long num_hi, long den) {
    return Rational(pick(num_lo, num_hi), den);
}

GridMin grid_min_offdiag(const SymForm<double>& gcheck_orthonormal,
                         double phi_lo, double phi_hi, int steps) {
    if (steps < 3) throw DomainError("grid scan requires at least 3 steps");
    if (!std::isfinite(phi_lo) || !std::isfinite(phi_hi) || !(phi_lo < phi_hi))
        throw DomainError("phi range must be finite with phi_lo < phi_hi");

    const double half_sum =
        0.5 * (gcheck_orthonormal.m00 + gcheck_orthonormal.m11);
    const double off = gcheck_orthonormal.m01;
    const auto h = [&](double phi) {
        return std::abs(half_sum * std::sinh(2.0 * phi) +
                        off * std::cosh(2.0 * phi));
    };

    const double width = phi_hi - phi_lo;
    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < steps; ++i) {
        const double phi = phi_lo + width * i / (steps - 1);
        const double v = h(phi);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }

    // Golden-section refinement inside the bracketing grid cells.
    double a = phi_lo + width * std::max(0, best - 1) / (steps - 1);
    double b = phi_lo + width * std::min(steps - 1, best + 1) / (steps - 1);
    constexpr double kGolden = 0.6180339887498949;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    for (int it = 0;
         it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (h(c) < h(d))
            b = d;
        else
            a = c;
        c = b - kGolden * (b - a);
        d = a + kGolden * (b - a);
    }
    const double phi = 0.5 * (a + b);
    return {phi, h(phi)};
}

MetricPair<Rational> canonical_pair(CanonicalClass cls, const Rational& a,
                                    const std::optional<Rational>& b) {
    MetricPair<Rational> pair;
    switch (cls) {
        case CanonicalClass::Hyperbolic:
            if (!b) throw DomainError("hyperbolic class requires parameter b");
            if ((a + *b).is_zero())
                throw DomainError("hyperbolic class requires b != -a");
            pair.g = SymForm<Rational>::minkowski();
            pair.gcheck = SymForm<Rational>::diag(a, *b);
            return pair;
        case CanonicalClass::Elliptic:
            if (!b) throw DomainError("elliptic class requires parameter b");
            if (b->sign() <= 0)
                throw DomainError("elliptic class requires b > 0");
            pair.g = SymForm<Rational>::minkowski();
            pair.gcheck = {a, *b, -a};
            return pair;
        case CanonicalClass::ParabolicPos:
            if (b) throw DomainError("parabolic_pos class takes only parameter a");
            pair.g = SymForm<Rational>::null_frame();
            pair.gcheck = {Rational(1), a, Rational(0)};
            return pair;
        case CanonicalClass::ParabolicNeg:
            if (b) throw DomainError("parabolic_neg class takes only parameter a");
            pair.g = SymForm<Rational>::null_frame();
            pair.gcheck = {Rational(0), a, Rational(-1)};
            return pair;
        case CanonicalClass::Proportional:
            if (b) throw DomainError("proportional class takes only parameter a");
            pair.g = SymForm<Rational>::minkowski();
            pair.gcheck = SymForm<Rational>::diag(a, -a);
            return pair;
    }
    throw DomainError("unknown canonical class");
}

namespace {

// Rational rotation from the Pythagorean parameterization: orthogonal with
// determinant 1 for every rational t.
Transition<Rational> rotation(const Rational& t) {
    const Rational d = Rational(1) + t * t;
    const Rational c = (Rational(1) - t * t) / d;
    const Rational s = (Rational(2) * t) / d;
    return {c, -s, s, c};
}

}  // namespace

Transition<Rational> random_congruence_exact(DetRng& rng, double max_condition) {
    if (!std::isfinite(max_condition) || !(max_condition >= 1.0))
        throw DomainError("max_condition must be >= 1");
    const long cap = std::max(1L, static_cast<long>(max_condition));

    const Transition<Rational> r1 = rotation(rng.fraction(-16, 16, 16));
    const Transition<Rational> r2 = rotation(rng.fraction(-16, 16, 16));
    // Singular values of the product below are c and c*d2, so the condition
    // number is exactly 1/d2 <= cap.
    const Rational d2(rng.pick(16, 16 * cap), 16 * cap);
    const Rational c = rng.fraction(12, 24, 16);  // overall scale in [3/4, 3/2]

    const Transition<Rational> diag{Rational(1), Rational(0), Rational(0), d2};
    Transition<Rational> s = compose(compose(r1, diag), r2);
    if (rng.below(2) == 1) {  // random orientation
        s.s01 = -s.s01;
        s.s11 = -s.s11;
    }
    s.s00 = c * s.s00;
    s.s01 = c * s.s01;
    s.s10 = c * s.s10;
    s.s11 = c * s.s11;
    return s;
}

Transition<double> random_congruence(DetRng& rng, double max_condition) {
    return to_double_transition(random_congruence_exact(rng, max_condition));
}

Instance random_pair(CanonicalClass cls, const Rational& a,
                     const std::optional<Rational>& b, DetRng& rng,
                     double max_condition) {
    Instance inst;
    const MetricPair<Rational> canon = canonical_pair(cls, a, b);
    const Transition<Rational> t = random_congruence_exact(rng, max_condition);
    inst.pair.g = congruence(canon.g, t);
    inst.pair.gcheck = congruence(canon.gcheck, t);
    inst.truth = {cls, a, b, t};
    return inst;
}

Instance random_instance(const FuzzConfig& cfg, std::uint64_t index) {
    if (cfg.count == 0) throw DomainError("fuzz count must be positive");
    DetRng rng(cfg.seed, index);
    constexpr CanonicalClass kAll[5] = {
        CanonicalClass::Hyperbolic, CanonicalClass::Elliptic,
        CanonicalClass::ParabolicPos, CanonicalClass::ParabolicNeg,
        CanonicalClass::Proportional};
    const CanonicalClass cls =
        cfg.class_filter ? *cfg.class_filter : kAll[rng.below(5)];

    // Parameters on a coarse rational lattice in [-10, 10]; rejection keeps a
    // safety margin to the neighboring class boundary so that double-precision
    // classification of scrambled instances stays determinate.
    const Rational a = rng.fraction(-80, 80, 8);
    std::optional<Rational> b;
    if (cls == CanonicalClass::Hyperbolic) {
        do {
            b = rng.fraction(-80, 80, 8);
        } while (scalar_abs(a + *b) < Rational(1, 2));
    } else if (cls == CanonicalClass::Elliptic) {
        b = rng.fraction(4, 80, 8);  // [1/2, 10]
    }
    return random_pair(cls, a, b, rng, cfg.max_condition);
}

}  // namespace minkpair
