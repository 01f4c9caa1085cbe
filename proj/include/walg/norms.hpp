#pragma once

// Ideal norms sqrt(A + B) on D+ and sqrt(A - B) on D-, and the combined norm
// ||x|| = ||x_plus|| + ||x_minus|| on the whole algebra. The square roots are
// evaluated in double precision; the radicands are exposed separately so the
// exact backend can state them without rounding.

#include <algorithm>
#include <cmath>

#include "walg/structure.hpp"

namespace walg {

// A + B; only a norm squared on D+, hence the membership check.
template <ScalarBackend S>
S norm_plus_squared(const Element<S>& x, double tol = kDefaultTol) {
    const IdealTag tag = classify(x, tol);
    if (tag != IdealTag::InDPlus && tag != IdealTag::Zero)
        throw NotInIdeal("norm_plus: element is not in D+");
    const auto [a, b] = ab(x);
    return a + b;
}

// A - B; only a norm squared on D-.
template <ScalarBackend S>
S norm_minus_squared(const Element<S>& x, double tol = kDefaultTol) {
    const IdealTag tag = classify(x, tol);
    if (tag != IdealTag::InDMinus && tag != IdealTag::Zero)
        throw NotInIdeal("norm_minus: element is not in D-");
    const auto [a, b] = ab(x);
    return a - b;
}

// On D+ with parameters (alpha, beta) the value is 2*sqrt(alpha^2 + beta^2),
// the modulus of the corresponding complex number.
template <ScalarBackend S>
double norm_plus(const Element<S>& x, double tol = kDefaultTol) {
    return std::sqrt(std::max(0.0, ScalarOps<S>::to_double(norm_plus_squared(x, tol))));
}

template <ScalarBackend S>
double norm_minus(const Element<S>& x, double tol = kDefaultTol) {
    return std::sqrt(std::max(0.0, ScalarOps<S>::to_double(norm_minus_squared(x, tol))));
}

// ||x|| = |zplus| + |zminus|; equivalent to the Euclidean norm with sharp
// constants sqrt2 * |||x||| <= ||x|| <= 2 * |||x|||. Total on all of W: the
// projections are in their ideals by construction, so the radicands are
// evaluated directly instead of through the membership-checked norms (float
// roundoff must not be able to fail the split).
template <ScalarBackend S>
double combined_norm(const Element<S>& x) {
    const Projection<S> p = project(x);
    const auto abp = ab(p.plus);
    const auto abm = ab(p.minus);
    const double plus_sq = ScalarOps<S>::to_double(abp.cal_a + abp.cal_b);
    const double minus_sq = ScalarOps<S>::to_double(abm.cal_a - abm.cal_b);
    return std::sqrt(std::max(0.0, plus_sq)) + std::sqrt(std::max(0.0, minus_sq));
}

}  // namespace walg
