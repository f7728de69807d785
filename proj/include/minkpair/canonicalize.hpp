#pragma once

#include "minkpair/associated.hpp"

namespace minkpair {

// Outcome of carrying a validated pair to its canonical presentation:
// class label, canonical parameters, the total change of basis, and the
// max-norm deviations of the transformed metrics from the canonical matrices.
// When the classification was indeterminate, `candidates` lists the plausible
// classes, S_total holds only the orthonormalization step, and the residuals
// are measured against the primary label (and are typically large).
struct CanonicalResult {
    CanonicalClass cls = CanonicalClass::Proportional;
    bool indeterminate = false;
    std::vector<CanonicalClass> candidates;
    double a = 0.0;
    std::optional<double> b;
    Transition<double> total = Transition<double>::identity();
    double residual_g = 0.0;
    double residual_gcheck = 0.0;
};

// Canonical matrices of each class (the second one parameterized by a and b).
SymForm<double> canonical_g(CanonicalClass cls);
SymForm<double> canonical_gcheck(CanonicalClass cls, double a, std::optional<double> b);

// Boost parameter solving tanh(2*phi) = -2*gc01 / (gc00 + gc11); applicable
// when |2*gc01| < |gc00 + gc11| and then the boosted second metric is diagonal.
double boost_for_diagonalization(const SymForm<double>& gcheck_orthonormal);

// Boost parameter solving tanh(2*phi) = -(gc00 + gc11) / (2*gc01); applicable
// when |2*gc01| > |gc00 + gc11| and then the boosted second metric has zero
// diagonal sum.
double boost_for_antidiagonalization(const SymForm<double>& gcheck_orthonormal);

// Hyperbolic rotation [[cosh phi, sinh phi], [sinh phi, cosh phi]]; preserves
// diag(1,-1) under congruence.
Transition<double> lorentz(double phi);

// diag(1,-1): flips the sign of the second basis vector, preserving g and the
// diagonal of the second metric while negating its off-diagonal entry.
Transition<double> reflection();

// Change of basis carrying the discriminant-zero normal forms, parameterized
// by beta > 0, onto the null-frame canonical matrices. `sig` is +1 or -1.
Transition<double> parabolic_transition(int sig, double beta);

// Eigenvector constructions. Both expect a pair already carried to a
// g-orthonormal frame and serve as an independent route cross-checking the
// boost pipeline above.
CanonicalResult eigen_route_hyperbolic(const MetricPair<double>& onPair,
                                       const TolerancePolicy& policy =
                                           TolerancePolicy::classification());
CanonicalResult eigen_route_elliptic(const MetricPair<double>& onPair,
                                     const TolerancePolicy& policy =
                                         TolerancePolicy::classification());

// Full pipeline: validates, classifies, orthonormalizes, applies the
// class-specific construction, cross-checks against the eigenvector route
// where one exists, and reports the total transition with residuals.
CanonicalResult canonical_form(const MetricPair<double>& pair,
                               const TolerancePolicy& policy =
                                   TolerancePolicy::classification());

// Same pipeline with the classification supplied by the caller (e.g. decided
// by the exact backend) instead of recomputed.
CanonicalResult canonical_form(const MetricPair<double>& pair,
                               const Classification& cls,
                               const TolerancePolicy& policy =
                                   TolerancePolicy::classification());

}  // namespace minkpair
