#pragma once

// Structure theory of the algebra: the triangle conjugation, the quadratic
// functionals A and B, the split-complex plane span{1, Theta}, the two
// zero-divisor ideals D+ and D- with their parametrizations and idempotents,
// and the isomorphism W ~= C x C.

#include <algorithm>
#include <string>
#include <utility>

#include "walg/element.hpp"
#include "walg/errors.hpp"

namespace walg {

enum class IdealTag { Invertible, InDPlus, InDMinus, Zero };

inline const char* to_string(IdealTag t) {
    switch (t) {
        case IdealTag::Invertible: return "Invertible";
        case IdealTag::InDPlus: return "InDPlus";
        case IdealTag::InDMinus: return "InDMinus";
        case IdealTag::Zero: return "Zero";
    }
    return "?";
}

// Triangle conjugation (x1, xi, xj, xk) -> (x1, -xk, -xj, -xi): an involution
// and a homomorphism for +, * and scalar action.
template <ScalarBackend S>
Element<S> conj(const Element<S>& x) {
    return {x.x1, -x.xk, -x.xj, -x.xi};
}

// A = x1^2 + xi^2 + xj^2 + xk^2 and B = sqrt2 * (x1 xi + xi xj + xj xk - xk x1),
// so that x * conj(x) = A*1 + B*Theta. Always A >= |B|.
template <ScalarBackend S>
struct ABPair {
    S cal_a;
    S cal_b;
};

template <ScalarBackend S>
ABPair<S> ab(const Element<S>& x) {
    const S a = x.x1 * x.x1 + x.xi * x.xi + x.xj * x.xj + x.xk * x.xk;
    const S b = x.x1 * x.xi + x.xi * x.xj + x.xj * x.xk - x.xk * x.x1;
    return {a, ScalarOps<S>::sqrt2() * b};
}

// theta = i - k; Theta = theta / sqrt2 has Euclidean norm 1 and Theta^2 = 1,
// making span{1, Theta} a split-complex (hyperbolic) plane.
template <ScalarBackend S>
Element<S> theta() {
    const S one = ScalarOps<S>::one();
    return {S{}, one, S{}, -one};
}

template <ScalarBackend S>
Element<S> capital_theta() {
    const S h = ScalarOps<S>::one() / ScalarOps<S>::sqrt2();
    return {S{}, h, S{}, -h};
}

// Split-complex product on coordinates over {1, Theta}:
// (a + b Theta)(c + d Theta) = (ac + bd) + (ad + bc) Theta.
template <ScalarBackend S>
std::pair<S, S> pi_plane_mul(const std::pair<S, S>& p, const std::pair<S, S>& q) {
    return {p.first * q.first + p.second * q.second,
            p.first * q.second + p.second * q.first};
}

// Residuals of the two quartic identities
//   4(A -+ B) = (1 -+ sqrt2) * Sp + (1 +- sqrt2) * Sm
// with Sp = (x1+xi)^2 + (xi+xj)^2 + (xj+xk)^2 + (xk-x1)^2 and Sm its
// sign-flipped twin. Returned as (minus residual, plus residual); both are
// identically zero, and exposing them keeps the identity a tested artifact.
template <ScalarBackend S>
std::pair<S, S> quartic_identity_check(const Element<S>& x) {
    const auto [a, b] = ab(x);
    const S one = ScalarOps<S>::one();
    const S four = ScalarOps<S>::from_int(4);
    const S rt2 = ScalarOps<S>::sqrt2();
    const auto sq = [](const S& v) { return v * v; };
    const S sp = sq(x.x1 + x.xi) + sq(x.xi + x.xj) + sq(x.xj + x.xk) + sq(x.xk - x.x1);
    const S sm = sq(x.x1 - x.xi) + sq(x.xi - x.xj) + sq(x.xj - x.xk) + sq(x.xk + x.x1);
    const S res_minus = four * (a - b) - ((one - rt2) * sp + (one + rt2) * sm);
    const S res_plus = four * (a + b) - ((one + rt2) * sp + (one - rt2) * sm);
    return {res_minus, res_plus};
}

// Sum-of-squares witnesses: r_minus^2 + s_minus^2 = A - B and
// r_plus^2 + s_plus^2 = A + B. Membership in D+ is exactly the vanishing of
// the minus pair, membership in D- the vanishing of the plus pair.
template <ScalarBackend S>
struct SosDecomposition {
    S r_minus, s_minus, r_plus, s_plus;
};

template <ScalarBackend S>
SosDecomposition<S> sos_decomposition(const Element<S>& x) {
    const S h = ScalarOps<S>::one() / ScalarOps<S>::sqrt2();
    return {
        x.x1 * h - x.xi + x.xj * h,
        x.x1 * h - x.xj * h + x.xk,
        x.x1 * h + x.xi + x.xj * h,
        x.x1 * h - x.xj * h - x.xk,
    };
}

// D+ = {A = B}, D- = {A = -B}; the zero element satisfies both, nonzero
// elements at most one. Float membership is tested relative to max(1, A)
// because the ideals are measure-zero planes.
template <ScalarBackend S>
IdealTag classify(const Element<S>& x, double tol = kDefaultTol) {
    const auto [a, b] = ab(x);
    bool in_plus, in_minus;
    if constexpr (ScalarOps<S>::exact) {
        (void)tol;
        in_plus = a == b;
        in_minus = a == -b;
    } else {
        const double scale = tol * std::max(1.0, ScalarOps<S>::to_double(a));
        in_plus = ScalarOps<S>::abs(a - b) <= scale;
        in_minus = ScalarOps<S>::abs(a + b) <= scale;
    }
    if (in_plus && in_minus) return IdealTag::Zero;
    if (in_plus) return IdealTag::InDPlus;
    if (in_minus) return IdealTag::InDMinus;
    return IdealTag::Invertible;
}

// Parametrizations: D+ = {(alpha, (alpha+beta)/sqrt2, beta, (beta-alpha)/sqrt2)}
// and D- = {(gamma, -(gamma+delta)/sqrt2, delta, (gamma-delta)/sqrt2)}.
template <ScalarBackend S>
Element<S> dplus_from_params(const S& alpha, const S& beta) {
    const S h = ScalarOps<S>::one() / ScalarOps<S>::sqrt2();
    return {alpha, (alpha + beta) * h, beta, (beta - alpha) * h};
}

template <ScalarBackend S>
Element<S> dminus_from_params(const S& gamma, const S& delta) {
    const S h = ScalarOps<S>::one() / ScalarOps<S>::sqrt2();
    return {gamma, -(gamma + delta) * h, delta, (gamma - delta) * h};
}

// Inverse of either parametrization: the parameters are the x1 and xj
// coordinates. Only defined on the ideals.
template <ScalarBackend S>
std::pair<S, S> params_from(const Element<S>& x, double tol = kDefaultTol) {
    const IdealTag tag = classify(x, tol);
    if (tag == IdealTag::Invertible)
        throw NotInIdeal("params_from: element is invertible, not in D+ or D-");
    return {x.x1, x.xj};
}

// The identities of the two ideals; e_plus + e_minus = 1, e_plus * e_minus = 0,
// and each is idempotent. i_plus/i_minus are the imaginary units, squaring to
// the negated ideal identities.
template <ScalarBackend S>
Element<S> e_plus() {
    const S half{ScalarOps<S>::one() / ScalarOps<S>::from_int(2)};
    return dplus_from_params(half, S{});
}

template <ScalarBackend S>
Element<S> e_minus() {
    const S half{ScalarOps<S>::one() / ScalarOps<S>::from_int(2)};
    return dminus_from_params(half, S{});
}

template <ScalarBackend S>
Element<S> i_plus() {
    const S half{ScalarOps<S>::one() / ScalarOps<S>::from_int(2)};
    return dplus_from_params(S{}, half);
}

template <ScalarBackend S>
Element<S> i_minus() {
    const S half{ScalarOps<S>::one() / ScalarOps<S>::from_int(2)};
    return dminus_from_params(S{}, half);
}

template <ScalarBackend S>
std::pair<Element<S>, Element<S>> idempotents() {
    return {e_plus<S>(), e_minus<S>()};
}

// Direct-sum split x = x_plus + x_minus by multiplication with the
// idempotents; x_plus lands in D+, x_minus in D-.
template <ScalarBackend S>
struct Projection {
    Element<S> plus;
    Element<S> minus;
};

template <ScalarBackend S>
Projection<S> project(const Element<S>& x) {
    return {x * e_plus<S>(), x * e_minus<S>()};
}

// Image of x under W ~= C x C. Coordinates over (e_plus, i_plus) resp.
// (e_minus, i_minus) are twice the x1 and xj coordinates of the projections
// (the ideal basis vectors carry 1/2 there). Sign convention: i_plus^2 =
// -e_plus, so zplus multiplies like an ordinary complex number.
template <ScalarBackend S>
struct CPair {
    S plus_re{}, plus_im{}, minus_re{}, minus_im{};

    friend bool operator==(const CPair&, const CPair&) = default;
};

template <ScalarBackend S>
CPair<S> to_cpair(const Element<S>& x) {
    const S two = ScalarOps<S>::from_int(2);
    const Projection<S> p = project(x);
    return {two * p.plus.x1, two * p.plus.xj, two * p.minus.x1, two * p.minus.xj};
}

template <ScalarBackend S>
Element<S> from_cpair(const CPair<S>& z) {
    return z.plus_re * e_plus<S>() + z.plus_im * i_plus<S>() + z.minus_re * e_minus<S>() +
           z.minus_im * i_minus<S>();
}

}  // namespace walg
