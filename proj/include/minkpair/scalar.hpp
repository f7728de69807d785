#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "minkpair/errors.hpp"

namespace minkpair {

// Arbitrary-precision rational, kept in lowest terms with positive denominator.
// Thin wrapper over GMP's mpq_class that enforces canonical form on every
// construction path and checks division by zero instead of trapping.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Exact conversion of a finite double (every finite double is p/2^k).
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
        Rational r;
        mpq_set_d(r.v_.get_mpq_t(), x);
        return r;
    }

    // Accepts "p" or "p/q" with p a (signed) integer and q a positive integer.
    static Rational parse(const std::string& text);

    double to_double() const { return v_.get_d(); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    // Always "p/q", q kept even when it is 1, so output parses back exactly.
    std::string str() const { return numerator_str() + "/" + denominator_str(); }

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    bool is_zero() const { return sign() == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DomainError("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  private:
    mpq_class v_;
};

// Declared-zero test for the approximate backend: x counts as zero at scale s
// iff |x| <= atol + rtol*s. The exact backend never consults a policy.
struct TolerancePolicy {
    double atol = 1e-9;
    double rtol = 1e-9;

    static TolerancePolicy classification() { return {1e-9, 1e-9}; }
    static TolerancePolicy identity() { return {1e-12, 1e-12}; }
    static TolerancePolicy uniform(double tol) { return {tol, tol}; }

    double band(double scale) const { return atol + rtol * scale; }
};

// Sign decision with a declared zero band. `scale` is the caller-supplied
// magnitude of the quantities x was computed from.
inline int sign_of(double x, double scale, const TolerancePolicy& policy) {
    if (!std::isfinite(x) || !std::isfinite(scale) || scale < 0)
        throw DomainError("sign_of: non-finite value or negative scale");
    if (std::fabs(x) <= policy.band(scale)) return 0;
    return x > 0 ? 1 : -1;
}

// Exact backend: the policy is irrelevant, the sign is decidable.
inline int sign_of(const Rational& x, double /*scale*/, const TolerancePolicy& /*policy*/) {
    return x.sign();
}

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x.abs(); }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }

template <typename S>
inline constexpr bool is_exact_backend_v = false;
template <>
inline constexpr bool is_exact_backend_v<Rational> = true;

// Inverse hyperbolic tangent restricted to the open interval (-1, 1).
// An argument at or beyond the boundary means the caller picked the wrong
// case-table branch, so it is reported as a domain error rather than clamped.
double atanh_checked(double t);

}  // namespace minkpair
