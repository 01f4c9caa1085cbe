#pragma once

// Scalar backends the algebra is generic over: IEEE double for everyday use
// and the exact quadratic field Q(sqrt2) for oracle-grade arithmetic. Every
// irrational constant the algebra needs (sqrt2, 1/sqrt8 = (1/4)sqrt2) lies in
// Q(sqrt2), so the exact backend represents all of them without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <utility>

#include "walg/errors.hpp"

namespace walg {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; chained exact operations cannot overflow.
using Rational = boost::multiprecision::cpp_rational;

// Default absolute comparison tolerance for the float backend (values of
// magnitude <= 1e3); operations that need a scale-aware test widen it
// explicitly.
inline constexpr double kDefaultTol = 1e-9;

// a + b*sqrt2 with rational a, b. The representation is unique (sqrt2 is
// irrational), so equality is memberwise and needs no normalization beyond
// what Rational already guarantees.
class QRoot2 {
public:
    QRoot2() = default;
    QRoot2(long long n) : a_(n) {}  // NOLINT: integers embed implicitly
    QRoot2(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static QRoot2 sqrt2() { return {0, 1}; }

    const Rational& rat() const { return a_; }  // rational part a
    const Rational& irr() const { return b_; }  // sqrt2 coefficient b

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Sign of the real value a + b*sqrt2. In the mixed-sign case compare
    // a^2 with 2b^2; they cannot be equal unless a = b = 0.
    int sign() const {
        const int sa = a_.sign(), sb = b_.sign();
        if (sa == 0 && sb == 0) return 0;
        if (sa >= 0 && sb >= 0) return 1;
        if (sa <= 0 && sb <= 0) return -1;
        const int larger = (a_ * a_ > 2 * b_ * b_) ? 1 : -1;
        return larger > 0 ? sa : sb;
    }

    double to_double() const {
        return static_cast<double>(a_) + static_cast<double>(b_) * std::numbers::sqrt2;
    }

    friend QRoot2 operator+(const QRoot2& x, const QRoot2& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QRoot2 operator-(const QRoot2& x, const QRoot2& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QRoot2 operator-(const QRoot2& x) { return {-x.a_, -x.b_}; }
    friend QRoot2 operator*(const QRoot2& x, const QRoot2& y) {
        // (a + b sqrt2)(c + d sqrt2) = (ac + 2bd) + (ad + bc) sqrt2
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend QRoot2 operator/(const QRoot2& x, const QRoot2& y) {
        if (y.is_zero()) throw DivisionByZero();
        // multiply by the field conjugate c - d sqrt2; the rational
        // denominator c^2 - 2d^2 vanishes only at c = d = 0
        const Rational den = y.a_ * y.a_ - 2 * y.b_ * y.b_;
        return {(x.a_ * y.a_ - 2 * x.b_ * y.b_) / den, (x.b_ * y.a_ - x.a_ * y.b_) / den};
    }

    QRoot2& operator+=(const QRoot2& y) { return *this = *this + y; }
    QRoot2& operator-=(const QRoot2& y) { return *this = *this - y; }
    QRoot2& operator*=(const QRoot2& y) { return *this = *this * y; }
    QRoot2& operator/=(const QRoot2& y) { return *this = *this / y; }

    friend bool operator==(const QRoot2&, const QRoot2&) = default;
    friend std::strong_ordering operator<=>(const QRoot2& x, const QRoot2& y) {
        const int s = (x - y).sign();
        return s <=> 0;
    }

private:
    Rational a_{};
    Rational b_{};
};

inline QRoot2 abs(const QRoot2& x) { return x.sign() < 0 ? -x : x; }

// Uniform access to backend constants and conversions for generic code.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long long n) { return static_cast<double>(n); }
    static double sqrt2() { return std::numbers::sqrt2; }
    static double to_double(double v) { return v; }
    static double abs(double v) { return std::fabs(v); }
};

template <>
struct ScalarOps<QRoot2> {
    static constexpr bool exact = true;
    static QRoot2 zero() { return 0; }
    static QRoot2 one() { return 1; }
    static QRoot2 from_int(long long n) { return n; }
    static QRoot2 sqrt2() { return QRoot2::sqrt2(); }
    static double to_double(const QRoot2& v) { return v.to_double(); }
    static QRoot2 abs(const QRoot2& v) { return walg::abs(v); }
};

template <class S>
concept ScalarBackend = requires(S a, S b) {
    { ScalarOps<S>::zero() } -> std::convertible_to<S>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
};

// Backend-aware scalar comparison: exact equality or absolute tolerance.
template <ScalarBackend S>
bool scalar_close(const S& a, const S& b, double tol = kDefaultTol) {
    if constexpr (ScalarOps<S>::exact) {
        (void)tol;
        return a == b;
    } else {
        return ScalarOps<S>::abs(a - b) <= tol;
    }
}

}  // namespace walg
