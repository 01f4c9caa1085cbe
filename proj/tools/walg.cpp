// Command-line calculator for the algebra: one subcommand per library
// operation, float scalars by default, exact Q(sqrt2) scalars under --exact.
// Exit codes: 0 success, 2 parse error, 3 domain error.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "walg/walg.hpp"

namespace {

using nlohmann::ordered_json;
using walg::Element;
using walg::ScalarOps;

struct Options {
    bool exact = false;
    bool json = false;
    double tol = walg::kDefaultTol;
};

struct Args {
    std::string x;
    std::string y;
    std::string tone;
    long long steps = 0;
};

// Library ParseError with the offending input attached for caret rendering.
struct ParseFailure {
    std::string input;
    std::string message;
    std::size_t position;
};

template <walg::ScalarBackend S>
Element<S> parse_element_arg(const std::string& text) {
    try {
        return walg::parse_element<S>(text);
    } catch (const walg::ParseError& e) {
        throw ParseFailure{text, e.what(), e.position};
    }
}

walg::Tone parse_tone_arg(const std::string& text) {
    try {
        return walg::parse_tone(text);
    } catch (const walg::ParseError& e) {
        throw ParseFailure{text, e.what(), e.position};
    }
}

const char* backend_name(const Options& opt) { return opt.exact ? "exact" : "float"; }

template <walg::ScalarBackend S>
ordered_json element_json(const Element<S>& x) {
    return ordered_json::array({walg::format_scalar(x.x1), walg::format_scalar(x.xi),
                                walg::format_scalar(x.xj), walg::format_scalar(x.xk)});
}

void emit_json(const ordered_json& result, const Options& opt, const char* warning = nullptr) {
    ordered_json j;
    j["result"] = result;
    j["backend"] = backend_name(opt);
    if (warning != nullptr) j["warning"] = warning;
    std::cout << j.dump() << '\n';
}

template <walg::ScalarBackend S>
void print_element(const Element<S>& x, const Options& opt, const char* warning = nullptr) {
    if (opt.json)
        emit_json(element_json(x), opt, warning);
    else
        std::cout << walg::format_element(x) << '\n';
}

// "1 + 2*y + 3*y^2 + 4*y^3"; compound coefficients are parenthesized.
template <walg::ScalarBackend S>
std::string poly_text(const walg::QuotientPoly<S>& p) {
    const S zero = ScalarOps<S>::zero();
    const S one = ScalarOps<S>::one();
    std::string out;
    for (int d = 0; d < 4; ++d) {
        const S& c = p.c[static_cast<std::size_t>(d)];
        if (c == zero) continue;
        const std::string cs = walg::format_scalar(c);
        std::string term;
        if (d == 0) {
            term = cs;
        } else {
            const std::string base = d == 1 ? "y" : "y^" + std::to_string(d);
            if (c == one) {
                term = base;
            } else if (c == zero - one) {
                term = "-" + base;
            } else {
                const std::size_t from = cs.empty() || cs[0] != '-' ? 0 : 1;
                const bool plain = cs.find_first_not_of("0123456789/", from) == std::string::npos;
                term = (plain ? cs : "(" + cs + ")") + "*" + base;
            }
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

template <walg::ScalarBackend S>
int run_cmd(const std::string& cmd, const Args& a, const Options& opt) {
    if (cmd == "mul") {
        const auto x = parse_element_arg<S>(a.x);
        const auto y = parse_element_arg<S>(a.y);
        print_element(x * y, opt);
        return 0;
    }
    if (cmd == "inv") {
        const auto x = parse_element_arg<S>(a.x);
        const auto r = walg::invert(x, opt.tol);
        if (!opt.json && r.ill_conditioned)
            std::fprintf(stderr, "warning: determinant nearly vanishes; inverse may be inaccurate\n");
        print_element(r.value, opt, r.ill_conditioned ? "ill_conditioned" : nullptr);
        return 0;
    }
    if (cmd == "conj") {
        print_element(conj(parse_element_arg<S>(a.x)), opt);
        return 0;
    }
    if (cmd == "ab") {
        const auto [ca, cb] = walg::ab(parse_element_arg<S>(a.x));
        if (opt.json) {
            ordered_json r;
            r["A"] = walg::format_scalar(ca);
            r["B"] = walg::format_scalar(cb);
            emit_json(r, opt);
        } else {
            std::cout << "A = " << walg::format_scalar(ca) << '\n'
                      << "B = " << walg::format_scalar(cb) << '\n';
        }
        return 0;
    }
    if (cmd == "classify") {
        const std::string tag = walg::to_string(walg::classify(parse_element_arg<S>(a.x), opt.tol));
        if (opt.json)
            emit_json(tag, opt);
        else
            std::cout << tag << '\n';
        return 0;
    }
    if (cmd == "project") {
        const auto p = walg::project(parse_element_arg<S>(a.x));
        if (opt.json) {
            ordered_json r;
            r["plus"] = element_json(p.plus);
            r["minus"] = element_json(p.minus);
            emit_json(r, opt);
        } else {
            std::cout << "plus = " << walg::format_element(p.plus) << '\n'
                      << "minus = " << walg::format_element(p.minus) << '\n';
        }
        return 0;
    }
    if (cmd == "cpair") {
        const auto z = walg::to_cpair(parse_element_arg<S>(a.x));
        const double pre = ScalarOps<S>::to_double(z.plus_re);
        const double pim = ScalarOps<S>::to_double(z.plus_im);
        const double mre = ScalarOps<S>::to_double(z.minus_re);
        const double mim = ScalarOps<S>::to_double(z.minus_im);
        if (opt.json) {
            ordered_json r;
            r["zplus"] = ordered_json::array({pre, pim});
            r["zminus"] = ordered_json::array({mre, mim});
            emit_json(r, opt);
        } else {
            std::cout << "zplus = [" << walg::format_scalar(z.plus_re) << ", "
                      << walg::format_scalar(z.plus_im) << "]\n"
                      << "zminus = [" << walg::format_scalar(z.minus_re) << ", "
                      << walg::format_scalar(z.minus_im) << "]\n";
        }
        return 0;
    }
    if (cmd == "matrix") {
        const auto m = walg::psi(parse_element_arg<S>(a.x)).expand();
        std::array<std::array<std::string, 4>, 4> cell;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) cell[r][c] = walg::format_scalar(m[r][c]);
        if (opt.json) {
            ordered_json rows = ordered_json::array();
            for (int r = 0; r < 4; ++r)
                rows.push_back(ordered_json::array({cell[r][0], cell[r][1], cell[r][2], cell[r][3]}));
            emit_json(rows, opt);
        } else {
            std::size_t width[4] = {0, 0, 0, 0};
            for (int c = 0; c < 4; ++c)
                for (int r = 0; r < 4; ++r) width[c] = std::max(width[c], cell[r][c].size());
            for (int r = 0; r < 4; ++r) {
                std::cout << '[';
                for (int c = 0; c < 4; ++c) {
                    std::cout << std::string(width[c] - cell[r][c].size(), ' ') << cell[r][c];
                    std::cout << (c < 3 ? ", " : "]\n");
                }
            }
        }
        return 0;
    }
    if (cmd == "poly") {
        const auto p = walg::phi(parse_element_arg<S>(a.x));
        if (opt.json) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : p.c) coeffs.push_back(walg::format_scalar(c));
            emit_json(coeffs, opt);
        } else {
            std::cout << poly_text(p) << '\n';
        }
        return 0;
    }
    if (cmd == "norm") {
        const auto x = parse_element_arg<S>(a.x);
        // norms of the projections are computed from their radicands directly;
        // the projections are in their ideals by construction
        const auto p = walg::project(x);
        const auto abp = walg::ab(p.plus);
        const auto abm = walg::ab(p.minus);
        const double plus = std::sqrt(std::max(0.0, ScalarOps<S>::to_double(abp.cal_a + abp.cal_b)));
        const double minus =
            std::sqrt(std::max(0.0, ScalarOps<S>::to_double(abm.cal_a - abm.cal_b)));
        const double combined = plus + minus;
        const double euclidean = euclid_norm(x);
        if (opt.json) {
            ordered_json r;
            r["combined"] = combined;
            r["euclidean"] = euclidean;
            r["plus"] = plus;
            r["minus"] = minus;
            emit_json(r, opt);
        } else {
            std::cout << "combined = " << walg::format_scalar(combined) << '\n'
                      << "euclidean = " << walg::format_scalar(euclidean) << '\n'
                      << "plus = " << walg::format_scalar(plus) << '\n'
                      << "minus = " << walg::format_scalar(minus) << '\n';
        }
        return 0;
    }
    if (cmd == "check") {
        const auto x = parse_element_arg<S>(a.x);
        const auto q = walg::quartic_identity_check(x);
        const auto s = walg::sos_decomposition(x);
        const auto [ca, cb] = walg::ab(x);
        const S sos_minus = s.r_minus * s.r_minus + s.s_minus * s.s_minus - (ca - cb);
        const S sos_plus = s.r_plus * s.r_plus + s.s_plus * s.s_plus - (ca + cb);
        if (opt.json) {
            ordered_json r;
            r["quartic_minus"] = walg::format_scalar(q.first);
            r["quartic_plus"] = walg::format_scalar(q.second);
            r["sos_minus"] = walg::format_scalar(sos_minus);
            r["sos_plus"] = walg::format_scalar(sos_plus);
            emit_json(r, opt);
        } else {
            std::cout << "quartic_minus = " << walg::format_scalar(q.first) << '\n'
                      << "quartic_plus = " << walg::format_scalar(q.second) << '\n'
                      << "sos_minus = " << walg::format_scalar(sos_minus) << '\n'
                      << "sos_plus = " << walg::format_scalar(sos_plus) << '\n';
        }
        return 0;
    }
    if (cmd == "tet freq") {
        const double f = walg::frequency(parse_tone_arg(a.tone));
        if (opt.json)
            emit_json(f, opt);
        else
            std::cout << walg::format_scalar(f) << '\n';
        return 0;
    }
    if (cmd == "tet transpose") {
        print_element(walg::transpose(parse_element_arg<S>(a.x), a.steps), opt);
        return 0;
    }
    std::fprintf(stderr, "error: no subcommand given\n");
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    // detected before CLI11 runs so that even command-line errors honor it
    bool json_errors = false;
    for (int i = 1; i < argc; ++i)
        if (std::string_view(argv[i]) == "--json") json_errors = true;

    Options opt;
    Args args;
    std::string cmd;

    CLI::App app{"Calculator for a four-dimensional commutative algebra with skew-circulant "
                 "multiplication, its zero-divisor ideals and its C x C decomposition"};
    app.require_subcommand(1);
    app.add_flag("--exact", opt.exact, "exact Q(sqrt2) scalars; inputs must use exact syntax");
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_option("--tol", opt.tol, "classification tolerance, default 1e-9");

    const auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        s->callback([&cmd, name] { cmd = name; });
        return s;
    };
    CLI::App* mul = sub("mul", "product of two elements");
    mul->add_option("X", args.x, "element [x1, xi, xj, xk]")->required();
    mul->add_option("Y", args.y, "element [x1, xi, xj, xk]")->required();
    sub("inv", "multiplicative inverse")->add_option("X", args.x)->required();
    sub("conj", "triangle conjugation")->add_option("X", args.x)->required();
    sub("ab", "quadratic functionals A and B")->add_option("X", args.x)->required();
    sub("classify", "Invertible, InDPlus, InDMinus or Zero")->add_option("X", args.x)->required();
    sub("project", "components in the ideals D+ and D-")->add_option("X", args.x)->required();
    sub("cpair", "image under the isomorphism onto C x C")->add_option("X", args.x)->required();
    sub("matrix", "skew-circulant matrix representation")->add_option("X", args.x)->required();
    sub("poly", "representative in R[y]/(y^4+1)")->add_option("X", args.x)->required();
    sub("norm", "combined, Euclidean and ideal norms")->add_option("X", args.x)->required();
    sub("check", "quartic identity and sum-of-squares residuals")
        ->add_option("X", args.x)
        ->required();

    CLI::App* tet = app.add_subcommand("tet", "12-tone equal temperament helpers");
    tet->fallthrough();
    tet->require_subcommand(1);
    CLI::App* freq = tet->add_subcommand("freq", "frequency of a tone in Hz");
    freq->fallthrough();
    freq->callback([&cmd] { cmd = "tet freq"; });
    freq->add_option("TONE", args.tone, "tone text, e.g. c4, dis-2, fis")->required();
    CLI::App* tr = tet->add_subcommand("transpose", "multiply by the N-th power of i");
    tr->fallthrough();
    tr->callback([&cmd] { cmd = "tet transpose"; });
    tr->add_option("X", args.x, "element [x1, xi, xj, xk]")->required();
    tr->add_option("N", args.steps, "minor-third step count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0 && json_errors) {
            ordered_json err;
            err["kind"] = "parse";
            err["message"] = e.what();
            ordered_json j;
            j["error"] = err;
            std::cout << j.dump() << '\n';
            return 2;
        }
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return opt.exact ? run_cmd<walg::QRoot2>(cmd, args, opt) : run_cmd<double>(cmd, args, opt);
    } catch (const ParseFailure& f) {
        if (opt.json) {
            ordered_json err;
            err["kind"] = "parse";
            err["message"] = f.message;
            err["position"] = f.position;
            err["input"] = f.input;
            ordered_json j;
            j["error"] = err;
            std::cout << j.dump() << '\n';
        } else {
            std::fprintf(stderr, "error: %s at position %zu\n  %s\n  %*s^\n", f.message.c_str(),
                         f.position, f.input.c_str(), static_cast<int>(f.position), "");
        }
        return 2;
    } catch (const walg::NotInvertible& e) {
        if (opt.json) {
            ordered_json err;
            err["kind"] = "domain";
            err["message"] = e.what();
            err["tag"] = walg::to_string(e.tag);
            ordered_json j;
            j["error"] = err;
            std::cout << j.dump() << '\n';
        } else {
            std::fprintf(stderr, "error: %s\n", e.what());
        }
        return 3;
    } catch (const std::domain_error& e) {
        if (opt.json) {
            ordered_json err;
            err["kind"] = "domain";
            err["message"] = e.what();
            ordered_json j;
            j["error"] = err;
            std::cout << j.dump() << '\n';
        } else {
            std::fprintf(stderr, "error: %s\n", e.what());
        }
        return 3;
    }
}
