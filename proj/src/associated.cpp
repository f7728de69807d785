#include "minkpair/associated.hpp"

namespace minkpair {

std::string class_label(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Hyperbolic: return "hyperbolic";
        case CanonicalClass::Elliptic: return "elliptic";
        case CanonicalClass::ParabolicPos: return "parabolic_pos";
        case CanonicalClass::ParabolicNeg: return "parabolic_neg";
        case CanonicalClass::Proportional: return "proportional";
    }
    return "?";
}

std::optional<CanonicalClass> parse_class_label(const std::string& label) {
    for (CanonicalClass c :
         {CanonicalClass::Hyperbolic, CanonicalClass::Elliptic, CanonicalClass::ParabolicPos,
          CanonicalClass::ParabolicNeg, CanonicalClass::Proportional})
        if (class_label(c) == label) return c;
    return std::nullopt;
}

int sigma(const MetricPair<Rational>& pair) {
    const AssocOperator<Rational> f = associated_operator(pair);
    const Rational disc = f.trace() * f.trace() - Rational(4) * f.det();
    if (!disc.is_zero())
        throw ClassMismatchError("sigma is defined only when the discriminant vanishes, got " +
                                 disc.str());
    return orthonormal_diagonal_sum(pair).sign();
}

CanonicalClass classify(const MetricPair<Rational>& pair) {
    validate_pair(pair);
    const AssocOperator<Rational> f = associated_operator(pair);
    const Rational disc = f.trace() * f.trace() - Rational(4) * f.det();
    const int d = disc.sign();
    if (d > 0) return CanonicalClass::Hyperbolic;
    if (d < 0) return CanonicalClass::Elliptic;
    const int s = orthonormal_diagonal_sum(pair).sign();
    if (s > 0) return CanonicalClass::ParabolicPos;
    if (s < 0) return CanonicalClass::ParabolicNeg;
    return CanonicalClass::Proportional;
}

PairInvariants<Rational> invariants(const MetricPair<Rational>& pair) {
    const AssocOperator<Rational> f = associated_operator(pair);
    PairInvariants<Rational> inv{f.trace(), f.det(),
                                 f.trace() * f.trace() - Rational(4) * f.det(), std::nullopt};
    if (inv.discriminant.is_zero()) inv.sigma = sigma(pair);
    return inv;
}

int sigma(const MetricPair<double>& pair, const TolerancePolicy& policy) {
    const AssocOperator<double> f = associated_operator(pair);
    const double disc = f.trace() * f.trace() - 4.0 * f.det();
    if (sign_of(disc, discriminant_scale(f.trace(), f.det()), policy) != 0)
        throw ClassMismatchError(
            "sigma is defined only when the discriminant is declared zero, got " +
            std::to_string(disc));
    const auto [onPair, s] = orthonormalize_pair(pair, policy);
    const double sum = onPair.gcheck.m00 + onPair.gcheck.m11;
    return sign_of(sum, norm_inf(onPair.gcheck), policy);
}

Classification classify(const MetricPair<double>& pair, const TolerancePolicy& policy) {
    validate_pair(pair, policy);
    const AssocOperator<double> f = associated_operator(pair);
    const double disc = f.trace() * f.trace() - 4.0 * f.det();
    const int d = sign_of(disc, discriminant_scale(f.trace(), f.det()), policy);
    if (d > 0) return {CanonicalClass::Hyperbolic};
    if (d < 0) return {CanonicalClass::Elliptic};

    // Discriminant declared zero: split by sigma in the orthonormal frame and
    // cross-check against the frame identity disc = (gc00+gc11)^2 - (2 gc01)^2.
    const auto [onPair, s] = orthonormalize_pair(pair, policy);
    const double sum = onPair.gcheck.m00 + onPair.gcheck.m11;
    const double off = 2.0 * onPair.gcheck.m01;
    const double scale = norm_inf(onPair.gcheck);
    const int sig = sign_of(sum, scale, policy);
    const int sig_off = sign_of(off, scale, policy);

    if (sig == 0) {
        if (sig_off != 0)
            return {CanonicalClass::Proportional, true,
                    {CanonicalClass::Elliptic, CanonicalClass::Proportional}};
        return {CanonicalClass::Proportional};
    }
    const CanonicalClass parabolic =
        sig > 0 ? CanonicalClass::ParabolicPos : CanonicalClass::ParabolicNeg;
    if (sig_off == 0)
        return {parabolic, true, {CanonicalClass::Hyperbolic, parabolic}};
    if (sign_of(std::fabs(off) - std::fabs(sum), scale, policy) != 0) {
        const CanonicalClass other = std::fabs(off) > std::fabs(sum)
                                         ? CanonicalClass::Elliptic
                                         : CanonicalClass::Hyperbolic;
        return {parabolic, true, {other, parabolic}};
    }
    return {parabolic};
}

PairInvariants<double> invariants(const MetricPair<double>& pair, const TolerancePolicy& policy) {
    const AssocOperator<double> f = associated_operator(pair);
    PairInvariants<double> inv{f.trace(), f.det(), f.trace() * f.trace() - 4.0 * f.det(),
                               std::nullopt};
    if (sign_of(inv.discriminant, discriminant_scale(inv.trace, inv.determinant), policy) == 0)
        inv.sigma = sigma(pair, policy);
    return inv;
}

}  // namespace minkpair
