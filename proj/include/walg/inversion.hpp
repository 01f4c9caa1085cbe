#pragma once

// Closed-form multiplicative inverses. The production route evaluates
//   x^-1 = conj(x) * (A*1 - B*Theta) / ((A+B)(A-B)),
// the alternative route inverts componentwise through C x C; the two must
// agree on every invertible element.

#include <cmath>
#include <string>

#include "walg/structure.hpp"

namespace walg {

// Raised when inverting a zero divisor or the zero element; carries the
// classification of the offending input.
struct NotInvertible : std::domain_error {
    IdealTag tag;
    explicit NotInvertible(IdealTag t)
        : std::domain_error(std::string("element is not invertible: ") + to_string(t)),
          tag(t) {}
};

template <ScalarBackend S>
struct InverseResult {
    Element<S> value;
    // Float backend only: 0 < |A^2 - B^2| < 1e-12 * A^2. The zero divisors
    // form two planes, so nearby inputs are legitimate but ill-conditioned;
    // the value is still returned.
    bool ill_conditioned = false;
};

template <ScalarBackend S>
InverseResult<S> invert(const Element<S>& x, double tol = kDefaultTol) {
    const IdealTag tag = classify(x, tol);
    if (tag != IdealTag::Invertible) throw NotInvertible(tag);
    const auto [a, b] = ab(x);
    const S disc = (a + b) * (a - b);  // = A^2 - B^2 = det(psi(x))
    const Element<S> numerator = conj(x) * (a * Element<S>::one() - b * capital_theta<S>());
    InverseResult<S> r{numerator / disc, false};
    if constexpr (!ScalarOps<S>::exact) {
        const double d = std::fabs(ScalarOps<S>::to_double(disc));
        const double aa = ScalarOps<S>::to_double(a);
        r.ill_conditioned = d > 0.0 && d < 1e-12 * aa * aa;
    }
    return r;
}

template <ScalarBackend S>
Element<S> inverse(const Element<S>& x, double tol = kDefaultTol) {
    return invert(x, tol).value;
}

// Inversion through the C x C isomorphism: both complex components of an
// invertible element are nonzero (the zero of either component is exactly
// membership in the opposite ideal), so reciprocals exist.
template <ScalarBackend S>
Element<S> inverse_via_cpair(const Element<S>& x, double tol = kDefaultTol) {
    const IdealTag tag = classify(x, tol);
    if (tag != IdealTag::Invertible) throw NotInvertible(tag);
    const CPair<S> z = to_cpair(x);
    const S dp = z.plus_re * z.plus_re + z.plus_im * z.plus_im;
    const S dm = z.minus_re * z.minus_re + z.minus_im * z.minus_im;
    return from_cpair<S>({z.plus_re / dp, -z.plus_im / dp, z.minus_re / dm, -z.minus_im / dm});
}

}  // namespace walg
