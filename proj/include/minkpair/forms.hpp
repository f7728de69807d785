#pragma once

#include <algorithm>

#include "minkpair/scalar.hpp"

namespace minkpair {

// Symmetric 2x2 Gram matrix [[m00, m01], [m01, m11]]. Symmetry is structural:
// only the three distinct entries are stored.
template <typename S>
struct SymForm {
    S m00{}, m01{}, m11{};

    S det() const { return m00 * m11 - m01 * m01; }

    static SymForm diag(S a, S b) { return {a, S(0), b}; }
    // The Minkowski normal form diag(1,-1).
    static SymForm minkowski() { return diag(S(1), S(-1)); }
    // The null-basis presentation [[0,1],[1,0]] of the same signature.
    static SymForm null_frame() { return {S(0), S(1), S(0)}; }

    bool operator==(const SymForm&) const = default;
};

// Invertible change-of-basis matrix; column i holds the coordinates of the
// new basis vector e~_i in the old basis.
template <typename S>
struct Transition {
    S s00{}, s01{}, s10{}, s11{};

    S det() const { return s00 * s11 - s01 * s10; }

    static Transition identity() { return {S(1), S(0), S(0), S(1)}; }
    static Transition from_columns(S c0x, S c0y, S c1x, S c1y) {
        return {c0x, c1x, c0y, c1y};
    }

    bool operator==(const Transition&) const = default;
};

template <typename S>
struct MetricPair {
    SymForm<S> g;
    SymForm<S> gcheck;
};

template <typename S>
double norm_inf(const SymForm<S>& f) {
    return std::max({to_double(scalar_abs(f.m00)), to_double(scalar_abs(f.m01)),
                     to_double(scalar_abs(f.m11))});
}

template <typename S>
double norm_inf(const Transition<S>& t) {
    return std::max({to_double(scalar_abs(t.s00)), to_double(scalar_abs(t.s01)),
                     to_double(scalar_abs(t.s10)), to_double(scalar_abs(t.s11))});
}

// Max entry-wise deviation between two symmetric forms.
template <typename S>
double deviation_inf(const SymForm<S>& a, const SymForm<S>& b) {
    return std::max({to_double(scalar_abs(a.m00 - b.m00)), to_double(scalar_abs(a.m01 - b.m01)),
                     to_double(scalar_abs(a.m11 - b.m11))});
}

// Declared-singularity test. The scale is the magnitude of the two diagonal
// products entering the determinant, so a uniformly scaled matrix is judged
// the same way at any scale.
template <typename S>
void require_invertible(const Transition<S>& t,
                        const TolerancePolicy& policy = TolerancePolicy::identity()) {
    const S d = t.det();
    const double scale =
        to_double(scalar_abs(t.s00 * t.s11)) + to_double(scalar_abs(t.s01 * t.s10));
    if (sign_of(d, scale, policy) == 0)
        throw InvalidTransitionError("transition matrix is singular (det declared zero)");
}

// The congruence action M -> S^T M S on Gram matrices; symmetric by construction.
template <typename S>
SymForm<S> congruence(const SymForm<S>& form, const Transition<S>& t,
                      const TolerancePolicy& policy = TolerancePolicy::identity()) {
    require_invertible(t, policy);
    const S r00 = t.s00 * t.s00 * form.m00 + S(2) * t.s00 * t.s10 * form.m01 +
                  t.s10 * t.s10 * form.m11;
    const S r01 = t.s00 * t.s01 * form.m00 + (t.s00 * t.s11 + t.s01 * t.s10) * form.m01 +
                  t.s10 * t.s11 * form.m11;
    const S r11 = t.s01 * t.s01 * form.m00 + S(2) * t.s01 * t.s11 * form.m01 +
                  t.s11 * t.s11 * form.m11;
    return {r00, r01, r11};
}

template <typename S>
S det_form(const SymForm<S>& form) {
    return form.det();
}

// Chains two changes of basis: applying compose(S1, S2) equals applying S1
// and then S2, i.e. congruence(M, compose(S1,S2)) == congruence(congruence(M,S1), S2).
template <typename S>
Transition<S> compose(const Transition<S>& a, const Transition<S>& b) {
    return {a.s00 * b.s00 + a.s01 * b.s10, a.s00 * b.s01 + a.s01 * b.s11,
            a.s10 * b.s00 + a.s11 * b.s10, a.s10 * b.s01 + a.s11 * b.s11};
}

template <typename S>
Transition<S> inverse(const Transition<S>& t,
                      const TolerancePolicy& policy = TolerancePolicy::identity()) {
    require_invertible(t, policy);
    const S d = t.det();
    return {t.s11 / d, -(t.s01 / d), -(t.s10 / d), t.s00 / d};
}

inline std::string scalar_str(double x) { return std::to_string(x); }
inline std::string scalar_str(const Rational& x) { return x.str(); }

// Accepts the pair iff g has Minkowski signature (+,-), equivalently det g < 0.
// The second metric is unrestricted; degenerate and zero forms are fine.
template <typename S>
MetricPair<S> validate_pair(const MetricPair<S>& pair,
                            const TolerancePolicy& policy = TolerancePolicy::classification()) {
    const S d = pair.g.det();
    const double scale = norm_inf(pair.g) * norm_inf(pair.g);
    if (sign_of(d, scale, policy) >= 0)
        throw SignatureError("first metric must have signature (+,-): det g = " + scalar_str(d) +
                             " is not negative");
    if constexpr (!is_exact_backend_v<S>) {
        for (double x : {to_double(pair.g.m00), to_double(pair.g.m01), to_double(pair.g.m11),
                         to_double(pair.gcheck.m00), to_double(pair.gcheck.m01),
                         to_double(pair.gcheck.m11)})
            if (!std::isfinite(x)) throw DomainError("metric entries must be finite");
    }
    return pair;
}

template <typename S>
MetricPair<double> to_double_pair(const MetricPair<S>& pair) {
    return {{to_double(pair.g.m00), to_double(pair.g.m01), to_double(pair.g.m11)},
            {to_double(pair.gcheck.m00), to_double(pair.gcheck.m01), to_double(pair.gcheck.m11)}};
}

template <typename S>
Transition<double> to_double_transition(const Transition<S>& t) {
    return {to_double(t.s00), to_double(t.s01), to_double(t.s10), to_double(t.s11)};
}

}  // namespace minkpair
