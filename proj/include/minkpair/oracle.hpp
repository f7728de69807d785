#pragma once

#include <cstdint>
#include <optional>

#include "minkpair/canonicalize.hpp"

namespace minkpair {

// Counter-based deterministic generator (SplitMix64). A (seed, stream) pair
// fully determines the value sequence on every platform, so any fuzz failure
// is replayable from two integers.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed + 0x9E3779B97F4A7C15ull * (stream + 1)) {
        next();  // decorrelate neighboring streams
        next();
    }

    std::uint64_t next();
    // Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    // Uniform integer in [lo, hi] inclusive.
    long pick(long lo, long hi);
    // Uniform rational with the given denominator and numerator in
    // [num_lo, num_hi] inclusive.
    Rational fraction(long num_lo, long num_hi, long den);

  private:
    std::uint64_t state_;
};

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    std::optional<CanonicalClass> class_filter;
    double max_condition = 20.0;  // bound on generated congruence conditioning
};

// What a generated instance is known to be: its class, its canonical
// parameters, and the scrambling transition that was applied to the canonical
// pair (so its inverse carries the instance back).
struct GroundTruth {
    CanonicalClass cls = CanonicalClass::Proportional;
    Rational a;
    std::optional<Rational> b;
    Transition<Rational> scramble = Transition<Rational>::identity();
};

struct Instance {
    MetricPair<Rational> pair;
    GroundTruth truth;
};

struct GridMin {
    double phi = 0.0;
    double value = 0.0;
};

// Brute-force oracle: scans |(m00+m11)/2 * sinh(2*phi) + m01 * cosh(2*phi)|
// (the boosted off-diagonal entry of the second metric, first metric assumed
// orthonormal) over a grid and refines the minimizer by golden section.
GridMin grid_min_offdiag(const SymForm<double>& gcheck_orthonormal,
                         double phi_lo, double phi_hi, int steps);

// Canonical matrices of a class as an exact pair; validates the parameter
// constraints (hyperbolic needs b != -a, elliptic needs b > 0, the remaining
// classes take no b).
MetricPair<Rational> canonical_pair(CanonicalClass cls, const Rational& a,
                                    const std::optional<Rational>& b);

// Random invertible transition with 2-norm condition number <= max_condition
// (exactly, by construction from scaled rational rotations) and entries
// bounded by 3/2.
Transition<Rational> random_congruence_exact(DetRng& rng, double max_condition);
Transition<double> random_congruence(DetRng& rng, double max_condition);

// Congruence-scrambled canonical pair with the stated class and parameters.
Instance random_pair(CanonicalClass cls, const Rational& a,
                     const std::optional<Rational>& b, DetRng& rng,
                     double max_condition);

// Instance `index` of the stream defined by `cfg`; pure in (cfg, index).
Instance random_instance(const FuzzConfig& cfg, std::uint64_t index);

}  // namespace minkpair
