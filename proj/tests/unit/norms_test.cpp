#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/random_values.hpp"
#include "walg/norms.hpp"

using walg::Element;
using walg::QRoot2;
using walg::Rational;
using EQ = Element<QRoot2>;
using ED = Element<double>;

TEST_CASE("norm golden values") {
    CHECK(walg::norm_plus_squared(walg::e_plus<QRoot2>()) == QRoot2(1));
    CHECK(walg::norm_minus_squared(walg::e_minus<QRoot2>()) == QRoot2(1));
    CHECK(walg::norm_plus(walg::e_plus<QRoot2>()) == 1.0);
    CHECK(walg::norm_minus(walg::e_minus<QRoot2>()) == 1.0);
    CHECK(walg::combined_norm(EQ::one()) == 2.0);
    CHECK(walg::combined_norm(EQ::zero()) == 0.0);
    CHECK(walg::combined_norm(walg::e_plus<QRoot2>()) == 1.0);
    // on D+ the norm is twice the Euclidean length of the parameter vector
    const EQ d = walg::dplus_from_params(QRoot2(3), QRoot2(4));
    CHECK(walg::norm_plus_squared(d) == QRoot2(100));
    CHECK(walg::norm_plus(d) == 10.0);
}

TEST_CASE("ideal norms reject elements outside their domain") {
    CHECK_THROWS_AS((void)walg::norm_plus(walg::e_minus<QRoot2>()), walg::NotInIdeal);
    CHECK_THROWS_AS((void)walg::norm_minus(walg::e_plus<QRoot2>()), walg::NotInIdeal);
    CHECK_THROWS_AS((void)walg::norm_plus(EQ{1, 2, 3, 4}), walg::NotInIdeal);
    CHECK_THROWS_AS((void)walg::norm_minus(ED{1, 2, 3, 4}), walg::NotInIdeal);
    // zero belongs to both ideals
    CHECK(walg::norm_plus(EQ::zero()) == 0.0);
    CHECK(walg::norm_minus(EQ::zero()) == 0.0);
}

TEST_CASE("norm axioms on the ideals") {
    std::mt19937_64 rng(71);
    for (int n = 0; n < 200; ++n) {
        const EQ x = testsupport::random_dplus<QRoot2>(rng);
        const EQ y = testsupport::random_dplus<QRoot2>(rng);
        const QRoot2 sq = walg::norm_plus_squared(x);
        CHECK(sq.sign() >= 0);
        if (x != EQ::zero()) CHECK(sq.sign() > 0);  // definiteness
        // absolute homogeneity, checked exactly on the squares
        const QRoot2 c = testsupport::random_exact_scalar(rng);
        CHECK(walg::norm_plus_squared(c * x) == c * c * sq);
        // triangle inequality
        const double nx = walg::norm_plus(x);
        const double ny = walg::norm_plus(y);
        CHECK(walg::norm_plus(x + y) <= nx + ny + 1e-9);
        // multiplicativity: the ideal is a complex field under the product
        CHECK(walg::norm_plus_squared(x * y) == sq * walg::norm_plus_squared(y));
    }
    for (int n = 0; n < 200; ++n) {
        const EQ x = testsupport::random_dminus<QRoot2>(rng);
        const EQ y = testsupport::random_dminus<QRoot2>(rng);
        const QRoot2 sq = walg::norm_minus_squared(x);
        CHECK(sq.sign() >= 0);
        if (x != EQ::zero()) CHECK(sq.sign() > 0);
        const QRoot2 c = testsupport::random_exact_scalar(rng);
        CHECK(walg::norm_minus_squared(c * x) == c * c * sq);
        CHECK(walg::norm_minus(x + y) <=
              walg::norm_minus(x) + walg::norm_minus(y) + 1e-9);
        CHECK(walg::norm_minus_squared(x * y) == sq * walg::norm_minus_squared(y));
    }
}

TEST_CASE("combined norm axioms on the whole algebra") {
    std::mt19937_64 rng(72);
    for (int n = 0; n < 200; ++n) {
        const ED x = testsupport::random_element<double>(rng);
        const ED y = testsupport::random_element<double>(rng);
        const double nx = walg::combined_norm(x);
        const double ny = walg::combined_norm(y);
        CHECK(nx >= 0.0);
        CHECK(walg::combined_norm(x + y) <= nx + ny + 1e-9);
        CHECK(walg::combined_norm(2.5 * x) == doctest::Approx(2.5 * nx).epsilon(1e-12));
        // submultiplicative
        CHECK(walg::combined_norm(x * y) <= nx * ny + 1e-9);
    }
}

TEST_CASE("combined norm equals the sum of complex moduli") {
    std::mt19937_64 rng(73);
    for (int n = 0; n < 200; ++n) {
        const ED x = testsupport::random_element<double>(rng);
        const auto z = walg::to_cpair(x);
        const double expected =
            std::hypot(z.plus_re, z.plus_im) + std::hypot(z.minus_re, z.minus_im);
        const double got = walg::combined_norm(x);
        CHECK(std::fabs(got - expected) <= 1e-12 * std::max(1.0, expected));
    }
}

TEST_CASE("equivalence with the Euclidean norm, with sharp constants") {
    std::mt19937_64 rng(74);
    const double rt2 = std::sqrt(2.0);
    for (int n = 0; n < 500; ++n) {
        const ED x = testsupport::random_element<double>(rng);
        const double e = euclid_norm(x);
        const double c = walg::combined_norm(x);
        CHECK(rt2 * e <= c + 1e-9);
        CHECK(c <= 2.0 * e + 1e-9);
    }
    // both constants are attained
    const double at_ep = walg::combined_norm(walg::e_plus<double>());
    CHECK(at_ep == doctest::Approx(rt2 * euclid_norm(walg::e_plus<double>())).epsilon(1e-12));
    const double at_one = walg::combined_norm(ED::one());
    CHECK(at_one == doctest::Approx(2.0 * euclid_norm(ED::one())).epsilon(1e-12));
}
