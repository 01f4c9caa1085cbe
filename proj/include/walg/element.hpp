#pragma once

// Elements of the 4-dimensional commutative algebra W over the reals:
// coordinate vectors over the basis (1, i, j, k) under the skew-circulant
// product. The product below is the single production code path; the matrix
// representation provides an independent route used by the tests.

#include <array>
#include <cmath>

#include "walg/scalar.hpp"

namespace walg {

template <ScalarBackend S>
struct Element {
    S x1{}, xi{}, xj{}, xk{};

    static Element zero() { return {}; }
    static Element one() { return {ScalarOps<S>::one(), S{}, S{}, S{}}; }
    static Element unit_i() { return {S{}, ScalarOps<S>::one(), S{}, S{}}; }
    static Element unit_j() { return {S{}, S{}, ScalarOps<S>::one(), S{}}; }
    static Element unit_k() { return {S{}, S{}, S{}, ScalarOps<S>::one()}; }

    std::array<S, 4> coords() const { return {x1, xi, xj, xk}; }

    friend bool operator==(const Element&, const Element&) = default;
};

template <ScalarBackend S>
Element<S> operator+(const Element<S>& x, const Element<S>& y) {
    return {x.x1 + y.x1, x.xi + y.xi, x.xj + y.xj, x.xk + y.xk};
}

template <ScalarBackend S>
Element<S> operator-(const Element<S>& x, const Element<S>& y) {
    return {x.x1 - y.x1, x.xi - y.xi, x.xj - y.xj, x.xk - y.xk};
}

template <ScalarBackend S>
Element<S> operator-(const Element<S>& x) {
    return {-x.x1, -x.xi, -x.xj, -x.xk};
}

template <ScalarBackend S>
Element<S> operator*(const S& c, const Element<S>& x) {
    return {c * x.x1, c * x.xi, c * x.xj, c * x.xk};
}

template <ScalarBackend S>
Element<S> operator*(const Element<S>& x, const S& c) {
    return c * x;
}

template <ScalarBackend S>
Element<S> operator/(const Element<S>& x, const S& c) {
    return {x.x1 / c, x.xi / c, x.xj / c, x.xk / c};
}

// The skew-circulant product: 16 multiplies, sign pattern of the wrapped
// (negacyclic) convolution. Commutative and associative with identity 1.
template <ScalarBackend S>
Element<S> operator*(const Element<S>& x, const Element<S>& y) {
    return {
        x.x1 * y.x1 - x.xi * y.xk - x.xj * y.xj - x.xk * y.xi,
        x.x1 * y.xi + x.xi * y.x1 - x.xj * y.xk - x.xk * y.xj,
        x.x1 * y.xj + x.xi * y.xi + x.xj * y.x1 - x.xk * y.xk,
        x.x1 * y.xk + x.xi * y.xj + x.xj * y.xi + x.xk * y.x1,
    };
}

template <ScalarBackend S>
Element<S> mul(const Element<S>& x, const Element<S>& y) {
    return x * y;
}

// i^n for any integer n; i^2 = j, i^3 = k, i^4 = -1, so the powers cycle
// through the signed basis orbit with period 8.
template <ScalarBackend S>
Element<S> power_basis(long long n) {
    const long long r = ((n % 8) + 8) % 8;
    Element<S> b{};
    switch (r % 4) {
        case 0: b = Element<S>::one(); break;
        case 1: b = Element<S>::unit_i(); break;
        case 2: b = Element<S>::unit_j(); break;
        case 3: b = Element<S>::unit_k(); break;
    }
    return r < 4 ? b : -b;
}

// Componentwise dot product; agrees with the polarization identity
// (|x+y|^2 - |x-y|^2)/4 on both backends.
template <ScalarBackend S>
S inner(const Element<S>& x, const Element<S>& y) {
    return x.x1 * y.x1 + x.xi * y.xi + x.xj * y.xj + x.xk * y.xk;
}

// Radicand of the Euclidean norm; exact on the exact backend.
template <ScalarBackend S>
S euclid_norm_squared(const Element<S>& x) {
    return inner(x, x);
}

template <ScalarBackend S>
double euclid_norm(const Element<S>& x) {
    return std::sqrt(ScalarOps<S>::to_double(euclid_norm_squared(x)));
}

// Backend-aware comparison: exact equality or componentwise absolute tolerance.
template <ScalarBackend S>
bool element_close(const Element<S>& x, const Element<S>& y, double tol = kDefaultTol) {
    return scalar_close(x.x1, y.x1, tol) && scalar_close(x.xi, y.xi, tol) &&
           scalar_close(x.xj, y.xj, tol) && scalar_close(x.xk, y.xk, tol);
}

}  // namespace walg
