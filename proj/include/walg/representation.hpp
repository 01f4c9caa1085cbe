#pragma once

// Two faithful representations of the algebra: 4x4 skew-circulant matrices
// (psi) and the polynomial quotient ring R[y]/(y^4 + 1) (phi). The matrix
// route is the independent multiplication oracle used by the tests; psi and
// phi are algebra homomorphisms and bijections onto their images.

#include <algorithm>
#include <array>
#include <stdexcept>

#include "walg/element.hpp"

namespace walg {

// Only the first row is stored; every other entry is derived, so the
// skew-circulant structure holds by construction.
template <ScalarBackend S>
struct SkewCirculant {
    std::array<S, 4> first_row{};

    // entry(r, c) = sigma_{c-r} with the wrap rule sigma_{-l} = -sigma_{4-l}:
    // each row is the previous one shifted right, wrapped entry negated.
    S entry(int r, int c) const {
        const int d = c - r;
        return d >= 0 ? first_row[static_cast<std::size_t>(d)]
                      : -first_row[static_cast<std::size_t>(4 + d)];
    }

    std::array<std::array<S, 4>, 4> expand() const {
        std::array<std::array<S, 4>, 4> m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] = entry(r, c);
        return m;
    }

    friend bool operator==(const SkewCirculant&, const SkewCirculant&) = default;
};

template <ScalarBackend S>
SkewCirculant<S> psi(const Element<S>& x) {
    return {{x.x1, x.xi, x.xj, x.xk}};
}

template <ScalarBackend S>
Element<S> psi_inv(const SkewCirculant<S>& m) {
    return {m.first_row[0], m.first_row[1], m.first_row[2], m.first_row[3]};
}

// Dense row-by-column product. The product of two skew-circulant matrices is
// again skew-circulant; the closure check guards that invariant (a violation
// signals an implementation bug, hence logic_error).
template <ScalarBackend S>
SkewCirculant<S> mat_mul(const SkewCirculant<S>& a, const SkewCirculant<S>& b,
                         double tol = kDefaultTol) {
    const auto ma = a.expand();
    const auto mb = b.expand();
    std::array<std::array<S, 4>, 4> p{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            S acc{};
            for (int t = 0; t < 4; ++t) acc += ma[r][t] * mb[t][c];
            p[r][c] = acc;
        }

    const SkewCirculant<S> result{p[0]};
    double scale = 1.0;
    if constexpr (!ScalarOps<S>::exact) {
        for (const auto& row : p)
            for (const S& v : row) scale = std::max(scale, ScalarOps<S>::abs(v));
    }
    for (int r = 1; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (!scalar_close(p[r][c], result.entry(r, c), tol * scale))
                throw std::logic_error("skew-circulant closure violated in mat_mul");
    return result;
}

namespace detail {

template <ScalarBackend S>
S det3(const std::array<std::array<S, 4>, 4>& m, int r0, int r1, int r2, int c0, int c1,
       int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

}  // namespace detail

// Laplace expansion along the first row; n = 4 is fixed, no need for anything
// cleverer. Equals the invertibility discriminant A^2 - B^2 of psi_inv(m).
template <ScalarBackend S>
S det(const SkewCirculant<S>& mat) {
    const auto m = mat.expand();
    return m[0][0] * detail::det3(m, 1, 2, 3, 1, 2, 3) -
           m[0][1] * detail::det3(m, 1, 2, 3, 0, 2, 3) +
           m[0][2] * detail::det3(m, 1, 2, 3, 0, 1, 3) -
           m[0][3] * detail::det3(m, 1, 2, 3, 0, 1, 2);
}

// Representative of degree <= 3 modulo y^4 + 1, always fully reduced.
template <ScalarBackend S>
struct QuotientPoly {
    std::array<S, 4> c{};  // c[0] + c[1] y + c[2] y^2 + c[3] y^3

    friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;
};

template <ScalarBackend S>
QuotientPoly<S> phi(const Element<S>& x) {
    return {{x.x1, x.xi, x.xj, x.xk}};
}

template <ScalarBackend S>
Element<S> phi_inv(const QuotientPoly<S>& p) {
    return {p.c[0], p.c[1], p.c[2], p.c[3]};
}

// Schoolbook convolution of the degree-<=3 representatives followed by the
// reduction y^4 = -1 (degree-(t+4) coefficients subtract from degree t).
template <ScalarBackend S>
QuotientPoly<S> poly_mul(const QuotientPoly<S>& p, const QuotientPoly<S>& q) {
    std::array<S, 7> full{};
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) full[static_cast<std::size_t>(s + t)] += p.c[s] * q.c[t];
    QuotientPoly<S> r;
    for (int t = 0; t < 3; ++t)
        r.c[static_cast<std::size_t>(t)] =
            full[static_cast<std::size_t>(t)] - full[static_cast<std::size_t>(t + 4)];
    r.c[3] = full[3];
    return r;
}

}  // namespace walg
