#pragma once

// 12-tone equal temperament demo on the diminished-seventh orbit
// {c, dis, fis, a}: frequency evaluation, the embedding of tones into the
// algebra, transposition as multiplication by powers of i, and the
// sign-equivalence of tones (T and -T are not distinguished).

#include <cmath>
#include <string>
#include <string_view>

#include "walg/element.hpp"
#include "walg/errors.hpp"

namespace walg {

struct Tone {
    int pitch_class = 0;     // 0 (c), 3 (dis), 6 (fis) or 9 (a)
    int octave = 0;          // k in [-4, 4]
    double amplitude = 1.0;  // loudness scalar, >= 0
};

inline bool valid_pitch_class(int p) { return p == 0 || p == 3 || p == 6 || p == 9; }

// a0 * 2^((p + 12k)/12) Hz with the camertone default a0 = 440. Written as
// ldexp(..., k) so that moving one octave doubles the result bit-exactly.
inline double frequency(const Tone& t, double a0 = 440.0) {
    return std::ldexp(a0 * std::exp2(static_cast<double>(t.pitch_class) / 12.0), t.octave);
}

// Embedding convention: c -> 1, dis -> i, fis -> j, a -> k, scaled by
// amplitude. The octave is deliberately discarded (octave equivalence).
inline Element<double> tone_to_element(const Tone& t) {
    Element<double> b;
    switch (t.pitch_class) {
        case 0: b = Element<double>::one(); break;
        case 3: b = Element<double>::unit_i(); break;
        case 6: b = Element<double>::unit_j(); break;
        case 9: b = Element<double>::unit_k(); break;
        default: throw std::domain_error("tone_to_element: pitch class not in {0,3,6,9}");
    }
    return t.amplitude * b;
}

// x * i^steps; period 8 in steps with a sign flip at 4, so the quotient by
// sign equivalence is the 4-cycle c -> dis -> fis -> a -> c.
template <ScalarBackend S>
Element<S> transpose(const Element<S>& x, long long steps) {
    return x * power_basis<S>(steps);
}

// True iff y = x or y = -x (exact equality or componentwise tolerance).
template <ScalarBackend S>
bool sign_equivalent(const Element<S>& x, const Element<S>& y, double tol = kDefaultTol) {
    return element_close(x, y, tol) || element_close(x, -y, tol);
}

// Tone text form: pitch-class name followed by the octave, e.g. "c4", "dis3",
// "fis-2"; a bare name means octave 0. Amplitude is not part of the text form.
inline Tone parse_tone(std::string_view text) {
    std::size_t pos = 0;
    const auto starts = [&](std::string_view name) {
        return text.substr(pos, name.size()) == name;
    };
    Tone t;
    if (starts("dis")) {
        t.pitch_class = 3;
        pos += 3;
    } else if (starts("fis")) {
        t.pitch_class = 6;
        pos += 3;
    } else if (starts("c")) {
        t.pitch_class = 0;
        pos += 1;
    } else if (starts("a")) {
        t.pitch_class = 9;
        pos += 1;
    } else {
        throw ParseError("expected tone name c, dis, fis or a", pos);
    }
    if (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw ParseError("expected octave digit", pos);
        int k = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            k = k * 10 + (text[pos] - '0');
            if (k > 4) throw ParseError("octave out of range [-4, 4]", pos);
            ++pos;
        }
        t.octave = negative ? -k : k;
    }
    if (pos != text.size()) throw ParseError("unexpected trailing text after tone", pos);
    return t;
}

inline std::string to_string(const Tone& t) {
    static const char* const names[] = {"c", "dis", "fis", "a"};
    return std::string(names[t.pitch_class / 3]) + std::to_string(t.octave);
}

}  // namespace walg
