#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minkpair/orthonormalize.hpp"

namespace minkpair {

// Matrix of the operator carrying the second metric against the first:
// g(F(X), Y) = gcheck(X, Y), i.e. F = g^{-1} * gcheck. It is symmetric with
// respect to g, and in a g-orthonormal basis its matrix has the shape
// [[gc00, gc01], [-gc01, -gc11]].
template <typename S>
struct AssocOperator {
    S f00{}, f01{}, f10{}, f11{};

    S trace() const { return f00 + f11; }
    S det() const { return f00 * f11 - f01 * f10; }
};

// Congruence invariants of a metric pair. trace and determinant are the
// similarity invariants of the associated operator; the discriminant
// trace^2 - 4 det separates the three top-level classes. sigma is defined
// only on the discriminant-zero family and is carried separately because it
// is not a function of (trace, det).
template <typename S>
struct PairInvariants {
    S trace{};
    S determinant{};
    S discriminant{};
    std::optional<int> sigma;
};

enum class CanonicalClass { Hyperbolic, Elliptic, ParabolicPos, ParabolicNeg, Proportional };

std::string class_label(CanonicalClass c);
std::optional<CanonicalClass> parse_class_label(const std::string& label);

// Classification outcome of the approximate backend. When the discriminant
// sits inside the declared zero band but the orthonormal-frame data
// contradicts every discriminant-zero row, the result is flagged
// indeterminate and carries the plausible candidates instead of silently
// picking a side of the boundary.
struct Classification {
    CanonicalClass label;
    bool indeterminate = false;
    std::vector<CanonicalClass> candidates;
};

template <typename S>
AssocOperator<S> associated_operator(const MetricPair<S>& pair) {
    const S d = pair.g.det();
    const SymForm<S>& gc = pair.gcheck;
    return {(pair.g.m11 * gc.m00 - pair.g.m01 * gc.m01) / d,
            (pair.g.m11 * gc.m01 - pair.g.m01 * gc.m11) / d,
            (pair.g.m00 * gc.m01 - pair.g.m01 * gc.m00) / d,
            (pair.g.m00 * gc.m11 - pair.g.m01 * gc.m01) / d};
}

// Orthonormal-frame value of gc00 + gc11 computed without square roots: the
// two normalizations enter the diagonal entries through their squares, so the
// sum stays inside the scalar field. This is what keeps sigma exactly
// decidable over the rationals.
template <typename S>
S orthonormal_diagonal_sum(const MetricPair<S>& pair) {
    const OrthogonalFrame<S> fr = g_orthogonal_frame(pair.g);
    const S gvv = eval_form(pair.gcheck, fr.vx, fr.vy, fr.vx, fr.vy);
    const S gww = eval_form(pair.gcheck, fr.wx, fr.wy, fr.wx, fr.wy);
    return gvv / fr.q_time - gww / fr.q_space;
}

// --- exact backend -------------------------------------------------------

// sign(gc00 + gc11) in a g-orthonormal basis; defined only when the
// discriminant vanishes (on that family it is basis-independent).
int sigma(const MetricPair<Rational>& pair);
CanonicalClass classify(const MetricPair<Rational>& pair);
PairInvariants<Rational> invariants(const MetricPair<Rational>& pair);

// --- approximate backend -------------------------------------------------

int sigma(const MetricPair<double>& pair,
          const TolerancePolicy& policy = TolerancePolicy::classification());
Classification classify(const MetricPair<double>& pair,
                        const TolerancePolicy& policy = TolerancePolicy::classification());
PairInvariants<double> invariants(const MetricPair<double>& pair,
                                  const TolerancePolicy& policy =
                                      TolerancePolicy::classification());

// Scale used for the declared-zero test on the discriminant.
inline double discriminant_scale(double trace, double det) {
    return std::max({trace * trace, 4.0 * std::fabs(det), 1.0});
}

}  // namespace minkpair
