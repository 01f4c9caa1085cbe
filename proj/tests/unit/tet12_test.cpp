#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/random_values.hpp"
#include "walg/tet12.hpp"

using walg::Element;
using walg::QRoot2;
using walg::Tone;
using EQ = Element<QRoot2>;
using ED = Element<double>;

TEST_CASE("frequency evaluation") {
    CHECK(walg::frequency(Tone{0, 0, 1.0}) == 440.0);  // camertone, bit exact
    CHECK(walg::frequency(Tone{0, 1, 1.0}) == 880.0);
    CHECK(walg::frequency(Tone{0, -1, 1.0}) == 220.0);
    CHECK(walg::frequency(Tone{3, 0, 1.0}) == doctest::Approx(523.2511306).epsilon(1e-9));
    CHECK(walg::frequency(Tone{6, 0, 1.0}) == doctest::Approx(622.2539674).epsilon(1e-9));
    CHECK(walg::frequency(Tone{9, 0, 1.0}) == doctest::Approx(739.9888454).epsilon(1e-9));
    // custom reference pitch
    CHECK(walg::frequency(Tone{0, 0, 1.0}, 432.0) == 432.0);

    // one octave up doubles bit-exactly for every pitch class and octave
    for (int p : {0, 3, 6, 9})
        for (int k = -4; k < 4; ++k)
            CHECK(walg::frequency(Tone{p, k + 1, 1.0}) == 2.0 * walg::frequency(Tone{p, k, 1.0}));
}

TEST_CASE("tones embed on the basis axes") {
    CHECK(walg::tone_to_element(Tone{0, 0, 1.0}) == ED::one());
    CHECK(walg::tone_to_element(Tone{3, 2, 1.0}) == ED::unit_i());  // octave discarded
    CHECK(walg::tone_to_element(Tone{6, 0, 1.0}) == ED::unit_j());
    CHECK(walg::tone_to_element(Tone{9, -1, 1.0}) == ED::unit_k());
    CHECK(walg::tone_to_element(Tone{6, 0, 2.5}) == ED{0, 0, 2.5, 0});
    CHECK(!walg::valid_pitch_class(1));
    CHECK_THROWS_AS((void)walg::tone_to_element(Tone{1, 0, 1.0}), std::domain_error);
}

TEST_CASE("transposition golden values and periodicity") {
    CHECK(walg::transpose(EQ::one(), 1) == EQ::unit_i());
    CHECK(walg::transpose(EQ::one(), 2) == EQ::unit_j());
    CHECK(walg::transpose(EQ::unit_k(), 1) == -EQ::one());
    CHECK(walg::transpose(EQ::unit_i(), -1) == EQ::one());
    CHECK(walg::transpose(EQ{1, 2, 3, 4}, 4) == -EQ{1, 2, 3, 4});

    std::mt19937_64 rng(81);
    for (int n = 0; n < 100; ++n) {
        const EQ x = testsupport::random_element<QRoot2>(rng);
        CHECK(walg::transpose(x, 8) == x);
        CHECK(walg::transpose(walg::transpose(x, 3), 5) == x);
        CHECK(walg::transpose(walg::transpose(x, 2), -2) == x);
    }
}

TEST_CASE("transposition is a 4-cycle on the tone axes modulo sign") {
    const ED axes[4] = {ED::one(), ED::unit_i(), ED::unit_j(), ED::unit_k()};
    for (int s = 0; s < 4; ++s) {
        for (int steps = 0; steps < 8; ++steps) {
            const ED y = walg::transpose(axes[s], steps);
            // lands on the axis (s + steps) mod 4, up to sign
            CHECK(walg::sign_equivalent(y, axes[(s + steps) % 4]));
            // and on no other axis
            for (int other = 0; other < 4; ++other)
                if (other != (s + steps) % 4) CHECK(!walg::sign_equivalent(y, axes[other]));
        }
        // exactly four steps flips the sign
        CHECK(walg::transpose(axes[s], 4) == -axes[s]);
    }
}

TEST_CASE("sign equivalence") {
    const ED x{1, 2, 3, 4};
    CHECK(walg::sign_equivalent(x, x));
    CHECK(walg::sign_equivalent(x, -x));
    CHECK(!walg::sign_equivalent(x, 2.0 * x));
    CHECK(!walg::sign_equivalent(x, ED::one()));
    CHECK(walg::sign_equivalent(x, -x + ED{1e-12, 0, 0, 0}));
    CHECK(walg::sign_equivalent(EQ::unit_i(), -EQ::unit_i()));
}

TEST_CASE("tone text form") {
    const Tone a = walg::parse_tone("c4");
    CHECK(a.pitch_class == 0);
    CHECK(a.octave == 4);
    const Tone b = walg::parse_tone("dis-2");
    CHECK(b.pitch_class == 3);
    CHECK(b.octave == -2);
    const Tone c = walg::parse_tone("fis");
    CHECK(c.pitch_class == 6);
    CHECK(c.octave == 0);
    const Tone d = walg::parse_tone("a-4");
    CHECK(d.pitch_class == 9);
    CHECK(d.octave == -4);

    CHECK(walg::to_string(Tone{3, -2, 1.0}) == "dis-2");
    for (int p : {0, 3, 6, 9})
        for (int k = -4; k <= 4; ++k) {
            const Tone t{p, k, 1.0};
            const Tone back = walg::parse_tone(walg::to_string(t));
            CHECK(back.pitch_class == p);
            CHECK(back.octave == k);
        }

    CHECK_THROWS_AS((void)walg::parse_tone("b3"), walg::ParseError);
    CHECK_THROWS_AS((void)walg::parse_tone("c5"), walg::ParseError);
    CHECK_THROWS_AS((void)walg::parse_tone("dis-9"), walg::ParseError);
    CHECK_THROWS_AS((void)walg::parse_tone("c4x"), walg::ParseError);
    CHECK_THROWS_AS((void)walg::parse_tone("c-"), walg::ParseError);
    try {
        (void)walg::parse_tone("q1");
    } catch (const walg::ParseError& e) {
        CHECK(e.position == 0);
    }
}
