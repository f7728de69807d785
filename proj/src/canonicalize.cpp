#include "minkpair/canonicalize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "minkpair/orthonormalize.hpp"

namespace minkpair {

namespace {

// Agreement threshold for the two independent construction routes.
constexpr double kRouteRelTol = 1e-10;
// Residual allowed when verifying a normalized eigenvector frame.
constexpr double kFrameTol = 1e-8;

// Rounding allowance for parameters read off a boosted matrix: entries of
// magnitude ~norm are squeezed through cosh(phi)^2-sized intermediates, so
// the achievable absolute accuracy degrades by exactly that factor.
double boost_rounding(double phi, const SymForm<double>& gcheck_on) {
    const double ch = std::cosh(phi);
    return 256.0 * std::numeric_limits<double>::epsilon() * ch * ch * norm_inf(gcheck_on);
}

bool values_agree(double x, double y, double slack) {
    return std::abs(x - y) <=
           kRouteRelTol * std::max({1.0, std::abs(x), std::abs(y)}) + slack;
}

// Kernel vector of F - lam*I, taken from whichever matrix row is better
// conditioned. Real and complex flavors share the shape.
template <typename C>
void kernel_vector(const AssocOperator<double>& f, const C& lam, C& vx, C& vy) {
    const C ax = C(f.f01);
    const C ay = lam - C(f.f00);
    const C bx = lam - C(f.f11);
    const C by = C(f.f10);
    const double na = std::norm(std::complex<double>(ax)) + std::norm(std::complex<double>(ay));
    const double nb = std::norm(std::complex<double>(bx)) + std::norm(std::complex<double>(by));
    if (na >= nb) {
        vx = ax;
        vy = ay;
    } else {
        vx = bx;
        vy = by;
    }
}

std::pair<double, double> residuals_for(const MetricPair<double>& pair,
                                        const Transition<double>& total,
                                        CanonicalClass cls, double a,
                                        std::optional<double> b) {
    const SymForm<double> g2 = congruence(pair.g, total);
    const SymForm<double> gc2 = congruence(pair.gcheck, total);
    return {deviation_inf(g2, canonical_g(cls)),
            deviation_inf(gc2, canonical_gcheck(cls, a, b))};
}

}  // namespace

SymForm<double> canonical_g(CanonicalClass cls) {
    switch (cls) {
        case CanonicalClass::ParabolicPos:
        case CanonicalClass::ParabolicNeg:
            return SymForm<double>::null_frame();
        default:
            return SymForm<double>::minkowski();
    }
}

SymForm<double> canonical_gcheck(CanonicalClass cls, double a, std::optional<double> b) {
    switch (cls) {
        case CanonicalClass::Hyperbolic:
            if (!b) throw DomainError("hyperbolic canonical form requires parameter b");
            return SymForm<double>::diag(a, *b);
        case CanonicalClass::Elliptic:
            if (!b) throw DomainError("elliptic canonical form requires parameter b");
            return {a, *b, -a};
        case CanonicalClass::ParabolicPos:
            return {1.0, a, 0.0};
        case CanonicalClass::ParabolicNeg:
            return {0.0, a, -1.0};
        case CanonicalClass::Proportional:
            return SymForm<double>::diag(a, -a);
    }
    throw DomainError("unknown canonical class");
}

double boost_for_diagonalization(const SymForm<double>& gcheck_orthonormal) {
    const double s = gcheck_orthonormal.m00 + gcheck_orthonormal.m11;
    const double c = 2.0 * gcheck_orthonormal.m01;
    if (!(std::abs(c) < std::abs(s)))
        throw WrongBranchError(
            "diagonalizing boost requires |2*m01| < |m00 + m11|");
    return 0.5 * atanh_checked(-c / s);
}

double boost_for_antidiagonalization(const SymForm<double>& gcheck_orthonormal) {
    const double s = gcheck_orthonormal.m00 + gcheck_orthonormal.m11;
    const double c = 2.0 * gcheck_orthonormal.m01;
    if (!(std::abs(s) < std::abs(c)))
        throw WrongBranchError(
            "antidiagonalizing boost requires |m00 + m11| < |2*m01|");
    return 0.5 * atanh_checked(-s / c);
}

Transition<double> lorentz(double phi) {
    if (!std::isfinite(phi)) throw DomainError("boost parameter must be finite");
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    if (!std::isfinite(ch) || !std::isfinite(sh))
        throw DomainError("boost parameter too large: cosh overflows");
    return {ch, sh, sh, ch};
}

Transition<double> reflection() { return {1.0, 0.0, 0.0, -1.0}; }

Transition<double> parabolic_transition(int sig, double beta) {
    if (sig != 1 && sig != -1) throw DomainError("sig must be +1 or -1");
    if (!std::isfinite(beta) || !(beta > 0.0))
        throw DomainError("beta must be positive and finite");
    const double h = 0.5 / beta;
    if (sig == 1) return {h, beta, h, -beta};
    return {beta, h, -beta, h};
}

CanonicalResult eigen_route_hyperbolic(const MetricPair<double>& onPair,
                                       const TolerancePolicy& policy) {
    validate_pair(onPair, policy);
    const AssocOperator<double> f = associated_operator(onPair);
    const double tr = f.trace();
    const double det = f.det();
    const double disc = tr * tr - 4.0 * det;
    if (sign_of(disc, discriminant_scale(tr, det), policy) <= 0)
        throw WrongBranchError(
            "eigenvector route for distinct real eigenvalues requires a positive "
            "discriminant");

    const double root = std::sqrt(disc);
    double lam[2] = {0.5 * (tr + root), 0.5 * (tr - root)};
    double vx[2], vy[2], q[2];
    for (int i = 0; i < 2; ++i) {
        kernel_vector(f, lam[i], vx[i], vy[i]);
        q[i] = eval_form(onPair.g, vx[i], vy[i], vx[i], vy[i]);
    }
    if (!(q[0] * q[1] < 0.0))
        throw DegeneracyError(
            "eigenvectors do not split into timelike/spacelike; input is "
            "numerically degenerate");
    const int it = q[0] > 0.0 ? 0 : 1;  // timelike index
    const int is = 1 - it;
    double tx = vx[it] / std::sqrt(q[it]);
    double ty = vy[it] / std::sqrt(q[it]);
    double sx = vx[is] / std::sqrt(-q[is]);
    double sy = vy[is] / std::sqrt(-q[is]);
    // Deterministic signs: dominant component of the timelike column positive,
    // spacelike column oriented so the transition has positive determinant.
    if ((std::abs(tx) >= std::abs(ty) ? tx : ty) < 0.0) {
        tx = -tx;
        ty = -ty;
    }
    if (tx * sy - sx * ty < 0.0) {
        sx = -sx;
        sy = -sy;
    }

    CanonicalResult r;
    r.cls = CanonicalClass::Hyperbolic;
    r.a = lam[it];
    r.b = -lam[is];
    r.total = Transition<double>::from_columns(tx, ty, sx, sy);
    std::tie(r.residual_g, r.residual_gcheck) =
        residuals_for(onPair, r.total, r.cls, r.a, r.b);
    return r;
}

CanonicalResult eigen_route_elliptic(const MetricPair<double>& onPair,
                                     const TolerancePolicy& policy) {
    validate_pair(onPair, policy);
    const AssocOperator<double> f = associated_operator(onPair);
    const double tr = f.trace();
    const double det = f.det();
    const double disc = tr * tr - 4.0 * det;
    if (sign_of(disc, discriminant_scale(tr, det), policy) >= 0)
        throw WrongBranchError(
            "eigenvector route for complex eigenvalues requires a negative "
            "discriminant");

    using cplx = std::complex<double>;
    const cplx lam(0.5 * tr, 0.5 * std::sqrt(-disc));  // Im lam > 0
    cplx vx, vy;
    kernel_vector(f, lam, vx, vy);
    // Complex-bilinear (not Hermitian) extension of the first metric.
    const cplx c = onPair.g.m00 * vx * vx + 2.0 * onPair.g.m01 * vx * vy +
                   onPair.g.m11 * vy * vy;
    const double vscale = std::norm(vx) + std::norm(vy);
    if (std::abs(c) <= policy.band(vscale * norm_inf(onPair.g)))
        throw DegeneracyError(
            "complex eigenvector is numerically null for the first metric; "
            "cannot normalize");
    const cplx inv = 1.0 / std::sqrt(c);
    vx *= inv;
    vy *= inv;
    const double s2 = std::numbers::sqrt2;
    const double e0x = s2 * vx.real(), e0y = s2 * vy.real();
    const double e1x = s2 * vx.imag(), e1y = s2 * vy.imag();
    const double q00 = eval_form(onPair.g, e0x, e0y, e0x, e0y);
    const double q01 = eval_form(onPair.g, e0x, e0y, e1x, e1y);
    const double q11 = eval_form(onPair.g, e1x, e1y, e1x, e1y);
    if (std::abs(q00 - 1.0) > kFrameTol || std::abs(q01) > kFrameTol ||
        std::abs(q11 + 1.0) > kFrameTol)
        throw DegeneracyError(
            "normalized eigenvector frame fails the orthonormality check");

    CanonicalResult r;
    r.cls = CanonicalClass::Elliptic;
    r.a = lam.real();
    r.b = lam.imag();
    r.total = Transition<double>::from_columns(e0x, e0y, e1x, e1y);
    std::tie(r.residual_g, r.residual_gcheck) =
        residuals_for(onPair, r.total, r.cls, r.a, r.b);
    return r;
}

CanonicalResult canonical_form(const MetricPair<double>& pair,
                               const TolerancePolicy& policy) {
    return canonical_form(pair, classify(pair, policy), policy);
}

CanonicalResult canonical_form(const MetricPair<double>& pair,
                               const Classification& cls,
                               const TolerancePolicy& policy) {
    validate_pair(pair, policy);
    const auto [onPair, sOrth] = orthonormalize_pair(pair, policy);

    CanonicalResult r;
    r.cls = cls.label;

    if (cls.indeterminate) {
        // No construction is attempted; report the orthonormalization step and
        // the (large) residuals against the primary candidate as diagnostics.
        r.indeterminate = true;
        r.candidates = cls.candidates;
        r.a = 0.5 * (onPair.gcheck.m00 - onPair.gcheck.m11);
        r.total = sOrth;
        std::optional<double> beff;
        if (r.cls == CanonicalClass::Hyperbolic) beff = -r.a;
        if (r.cls == CanonicalClass::Elliptic) beff = 0.0;
        std::tie(r.residual_g, r.residual_gcheck) =
            residuals_for(pair, sOrth, r.cls, r.a, beff);
        return r;
    }

    Transition<double> total = sOrth;
    switch (cls.label) {
        case CanonicalClass::Hyperbolic: {
            double phi = 0.0;
            try {
                phi = boost_for_diagonalization(onPair.gcheck);
            } catch (const Error& e) {
                throw ConsistencyError(
                    std::string("hyperbolic construction failed after "
                                "classification: ") +
                    e.what());
            }
            const Transition<double> sb = lorentz(phi);
            const SymForm<double> gc2 = congruence(onPair.gcheck, sb);
            r.a = gc2.m00;
            r.b = gc2.m11;
            total = compose(total, sb);
            // Cross-check against the eigenvector construction where that
            // route is numerically applicable; near the class boundary it
            // declines (WrongBranch/Degeneracy) and the boost construction
            // stands on its final residuals alone.
            std::optional<CanonicalResult> er;
            try {
                er = eigen_route_hyperbolic(onPair, policy);
            } catch (const WrongBranchError&) {
            } catch (const DegeneracyError&) {
            } catch (const Error& e) {
                throw ConsistencyError(
                    std::string("hyperbolic eigenvector cross-check failed: ") + e.what());
            }
            const double slack = boost_rounding(phi, onPair.gcheck);
            if (er && (!values_agree(r.a, er->a, slack) ||
                       !values_agree(*r.b, *er->b, slack)))
                throw ConsistencyError(
                    "boost route and eigenvector route disagree on (a, b) for a "
                    "hyperbolic pair");
            break;
        }
        case CanonicalClass::Elliptic: {
            double phi = 0.0;
            try {
                phi = boost_for_antidiagonalization(onPair.gcheck);
            } catch (const Error& e) {
                throw ConsistencyError(
                    std::string("elliptic construction failed after "
                                "classification: ") +
                    e.what());
            }
            const Transition<double> sb = lorentz(phi);
            const SymForm<double> gc2 = congruence(onPair.gcheck, sb);
            r.a = 0.5 * (gc2.m00 - gc2.m11);
            double b = gc2.m01;
            total = compose(total, sb);
            if (b < 0.0) {
                total = compose(total, reflection());
                b = -b;
            }
            r.b = b;
            std::optional<CanonicalResult> er;
            try {
                er = eigen_route_elliptic(onPair, policy);
            } catch (const WrongBranchError&) {
            } catch (const DegeneracyError&) {
            } catch (const Error& e) {
                throw ConsistencyError(
                    std::string("elliptic eigenvector cross-check failed: ") + e.what());
            }
            const double slack = boost_rounding(phi, onPair.gcheck);
            if (er && (!values_agree(r.a, er->a, slack) ||
                       !values_agree(*r.b, *er->b, slack)))
                throw ConsistencyError(
                    "boost route and eigenvector route disagree on (a, b) for an "
                    "elliptic pair");
            break;
        }
        case CanonicalClass::Proportional: {
            r.a = onPair.gcheck.m00;
            break;
        }
        case CanonicalClass::ParabolicPos:
        case CanonicalClass::ParabolicNeg: {
            SymForm<double> gc = onPair.gcheck;
            const double s = gc.m00 + gc.m11;
            const int sig = cls.label == CanonicalClass::ParabolicPos ? 1 : -1;
            const int offSign = sign_of(gc.m01, std::abs(s), policy);
            if (offSign == 0)
                throw ConsistencyError(
                    "parabolic pair has a vanishing off-diagonal entry after "
                    "orthonormalization");
            if (offSign * sig < 0) {
                // Flip the spacelike axis to move the relation
                // 2*m01 = -(m00 + m11) onto 2*m01 = m00 + m11.
                total = compose(total, reflection());
                gc = congruence(gc, reflection());
            }
            gc.m01 = 0.5 * s;  // project onto the exact double-root locus
            r.a = 0.5 * (gc.m00 - gc.m11);
            const double beta = std::sqrt(0.5 * std::abs(s));
            total = compose(total, parabolic_transition(sig, beta));
            break;
        }
    }

    r.total = total;
    std::tie(r.residual_g, r.residual_gcheck) =
        residuals_for(pair, total, r.cls, r.a, r.b);
    return r;
}

}  // namespace minkpair
