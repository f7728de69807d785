#pragma once

#include <utility>

#include "minkpair/forms.hpp"

namespace minkpair {

// A g-orthogonal (not yet normalized) basis: v timelike with q_time = g(v,v) > 0,
// w spacelike with q_space = g(w,w) < 0, and g(v,w) = 0. All coordinates stay in
// the scalar field of the input, so the exact backend can use this frame without
// leaving the rationals: the orthonormal-frame diagonal entries of any second
// form are gcheck(v,v)/q_time and gcheck(w,w)/(-q_space).
template <typename S>
struct OrthogonalFrame {
    S vx, vy;  // timelike vector
    S wx, wy;  // spacelike vector
    S q_time;
    S q_space;
};

template <typename S>
S eval_form(const SymForm<S>& f, const S& ax, const S& ay, const S& bx, const S& by) {
    return f.m00 * ax * bx + f.m01 * (ax * by + ay * bx) + f.m11 * ay * by;
}

// Picks a first vector with g(v,v) nonzero, completes it with the
// g-orthogonal complement, and orders the result timelike-first. Among the
// pivot candidates e0, e1, e0+e1 the one with the largest |g(v,v)| wins:
// since det g < 0 that maximum is at least norm_inf(g)/2, so the normalized
// frame never degrades beyond the conditioning of g itself (a near-null
// pivot would inflate the columns even for a well-conditioned metric).
template <typename S>
OrthogonalFrame<S> g_orthogonal_frame(const SymForm<S>& g) {
    S vx = S(1), vy = S(0);
    double best = to_double(scalar_abs(g.m00));
    if (to_double(scalar_abs(g.m11)) > best) {
        best = to_double(scalar_abs(g.m11));
        vx = S(0);
        vy = S(1);
    }
    if (to_double(scalar_abs(g.m00 + S(2) * g.m01 + g.m11)) > best) {
        vx = S(1);
        vy = S(1);
    }
    // w is the perpendicular of the covector u = g*v, so g(v,w) = 0 identically.
    const S ux = g.m00 * vx + g.m01 * vy;
    const S uy = g.m01 * vx + g.m11 * vy;
    S wx = -uy;
    S wy = ux;
    const S qv = eval_form(g, vx, vy, vx, vy);
    const S qw = eval_form(g, wx, wy, wx, wy);
    // Signature (+,-) puts the two values on opposite sides of zero.
    if (to_double(qv) > 0) return {vx, vy, wx, wy, qv, qw};
    return {wx, wy, vx, vy, qw, qv};
}

// Transition to a basis where g becomes diag(1,-1), timelike vector first,
// det > 0. Involves square roots, so it exists only on the approximate backend.
Transition<double> orthonormal_transition(const SymForm<double>& g,
                                          const TolerancePolicy& policy =
                                              TolerancePolicy::classification());

// Applies the same orthonormalizing transition to both metrics of a validated
// pair and returns the transformed pair together with the transition used.
std::pair<MetricPair<double>, Transition<double>> orthonormalize_pair(
    const MetricPair<double>& pair,
    const TolerancePolicy& policy = TolerancePolicy::classification());

}  // namespace minkpair
