#include "json_io.hpp"

#include <polystuffle/coding.hpp>
#include <polystuffle/products.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace polystuffle;
using json_io::json;
using json_io::to_json;

namespace
{

void emit(const json &j)
{
    std::cout << j.dump(2) << '\n';
}

// "0.5", "-0.2+0.3i", "0.4i", "1e-2-3e-2i".
std::complex<double> parse_complex(const std::string &text)
{
    auto bad = [&]() { return Error(Errc::parse, "not a complex number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    std::size_t used = 0;
    double first = 0.0;
    try {
        first = std::stod(text, &used);
    } catch (const std::exception &) {
        if (text == "i" || text == "+i") {
            return {0.0, 1.0};
        }
        if (text == "-i") {
            return {0.0, -1.0};
        }
        throw bad();
    }
    if (used == text.size()) {
        return {first, 0.0};
    }
    std::string rest = text.substr(used);
    if (rest == "i") {
        return {0.0, first};
    }
    if (rest.back() != 'i' || (rest[0] != '+' && rest[0] != '-')) {
        throw bad();
    }
    rest.pop_back();
    if (rest == "+" || rest == "-") {
        return {first, rest == "+" ? 1.0 : -1.0};
    }
    std::size_t used2 = 0;
    double second = 0.0;
    try {
        second = std::stod(rest, &used2);
    } catch (const std::exception &) {
        throw bad();
    }
    if (used2 != rest.size()) {
        throw bad();
    }
    return {first, second};
}

// An index list when the text looks like one, otherwise an expression.
std::optional<SignedIndex> as_index(const std::string &spec)
{
    for (char c : spec) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == ',' || c == '(' ||
              c == ')' || c == ' ')) {
            return std::nullopt;
        }
    }
    // A bare "3" is the index (3); "1/2" and anything with letters is an expression.
    return SignedIndex::parse(spec);
}

X1StarPoly star_spec(const std::string &spec)
{
    return to_x1star(evaluate(spec));
}

NCPoly operand(const Value &v, Alphabet a)
{
    return to_ncpoly(v, a);
}

Alphabet common_alphabet(const Value &a, const Value &b)
{
    for (const Value *v : {&a, &b}) {
        if (auto *p = std::get_if<NCPoly>(v)) {
            return p->alphabet();
        }
    }
    return Alphabet::X;
}

json run_product(const std::string &lhs, const std::string &rhs, std::optional<std::size_t> cap, bool stuffle_op)
{
    Value a = evaluate(lhs);
    Value b = evaluate(rhs);
    bool a_star = std::holds_alternative<X1StarPoly>(a), b_star = std::holds_alternative<X1StarPoly>(b);
    if (!stuffle_op && (a_star || b_star)) {
        return to_json(shuffle(to_x1star(a), to_x1star(b)));
    }
    if (stuffle_op && std::holds_alternative<PlaneStar>(a) && std::holds_alternative<PlaneStar>(b)) {
        return to_json(plane_star_stuffle(std::get<PlaneStar>(a), std::get<PlaneStar>(b)));
    }
    DegreeCap c = cap ? DegreeCap(*cap) : std::nullopt;
    if (stuffle_op) {
        for (const Value *v : {&a, &b}) {
            auto *p = std::get_if<NCPoly>(v);
            if (!std::holds_alternative<Rat>(*v) && !(p && p->alphabet() == Alphabet::Y)) {
                throw Error(Errc::type, p ? "stuffle needs Y, got X" : "stuffle needs Y polynomials or two plane stars");
            }
        }
        return to_json(stuffle(operand(a, Alphabet::Y), operand(b, Alphabet::Y), c));
    }
    Alphabet al = common_alphabet(a, b);
    return to_json(shuffle(operand(a, al), operand(b, al), c));
}

json run_neg_li(const std::string &spec)
{
    SignedIndex s = SignedIndex::parse(spec);
    RatFuncAtOne f = li_nonpositive(s.entries);
    X1StarPoly p = ratfunc_to_x1star(f);
    json out = to_json(f);
    out["index"] = s.str();
    out["x1star"] = to_json(p);
    return out;
}

NPoly closed_form(const std::string &spec)
{
    if (auto s = as_index(spec)) {
        return h_negindex_closed_form(s->entries);
    }
    return h_x1star_closed_form(star_spec(spec));
}

Rat run_h_eval(const std::string &spec, std::size_t n)
{
    if (auto s = as_index(spec)) {
        return h_signed_eval(*s, n);
    }
    Value v = evaluate(spec);
    if (auto *p = std::get_if<NCPoly>(&v)) {
        return h_poly_eval(p->alphabet() == Alphabet::Y ? *p : pi_Y(*p), n);
    }
    if (auto *st = std::get_if<X1StarPoly>(&v)) {
        return h_x1star_closed_form(*st)(Rat(static_cast<long>(n)));
    }
    if (auto *r = std::get_if<Rat>(&v)) {
        return *r;
    }
    throw Error(Errc::type, "h-eval takes an index list, a polynomial or a star combination");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact shuffle/stuffle calculus for polylogarithms and harmonic sums"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string lhs, rhs, spec, z_text, suite = "all", expr;
    std::optional<std::size_t> cap, ncap, table_n;
    std::size_t n = 0;
    std::uint64_t seed = default_seed;
    double eps = 1e-12;
    bool floating = false, csv = false;

    auto *sh = app.add_subcommand("shuffle", "Shuffle product of two expressions");
    sh->add_option("lhs", lhs)->required();
    sh->add_option("rhs", rhs)->required();
    sh->add_option("--cap", cap, "Drop words whose degree exceeds this");

    auto *st = app.add_subcommand("stuffle", "Stuffle product of two Y expressions or plane stars");
    st->add_option("lhs", lhs)->required();
    st->add_option("rhs", rhs)->required();
    st->add_option("--cap", cap, "Drop words whose weight exceeds this");

    auto *neg = app.add_subcommand("neg-li", "Li at a non-positive index list as p(z)/(1-z)^m and as stars");
    neg->add_option("index", spec, "e.g. -2,-1")->required();

    auto *hcf = app.add_subcommand("h-closed-form", "H as a polynomial in N");
    hcf->add_option("spec", spec, "non-positive index list or star combination")->required();
    hcf->add_option("--table", table_n, "Also print N,H(N) as CSV for N = 0..TABLE");

    auto *hev = app.add_subcommand("h-eval", "Exact H(N)");
    hev->add_option("spec", spec, "index list like (-2,-1), Y expression or star combination")->required();
    hev->add_option("N", n)->required();

    auto *lic = app.add_subcommand("li-coeffs", "Taylor coefficients of Li up to NCAP");
    lic->add_option("spec", spec, "index list or X expression")->required();
    lic->add_option("NCAP", ncap, "defaults to POLYLOG_NCAP_DEFAULT or 30");
    lic->add_flag("--float", floating, "double-precision coefficients");
    lic->add_flag("--csv", csv, "print n,a_n rows instead of JSON");

    auto *lie = app.add_subcommand("li-eval", "Li at a complex point with |z| <= 0.995");
    lie->add_option("spec", spec, "index list")->required();
    lie->add_option("z", z_text, "e.g. 0.5 or 0.3-0.2i")->required();
    lie->add_option("eps", eps, "absolute error target")->capture_default_str();

    auto *ver = app.add_subcommand("verify", "Run identity suites; exit status 0 iff all pass");
    ver->add_option("--suite", suite, "ex3|mixed|morphisms|stars|stirling|all")
        ->check(CLI::IsMember({"ex3", "mixed", "morphisms", "stars", "stirling", "all"}))
        ->capture_default_str();
    ver->add_option("--ncap", ncap, "largest N checked; defaults to POLYLOG_NCAP_DEFAULT or 30");
    ver->add_option("--seed", seed, "seed for the random cases")->capture_default_str();

    auto *ev = app.add_subcommand("eval", "Evaluate an expression");
    ev->add_option("expr", expr)->required();

    auto *reg = app.add_subcommand("regularize", "Write an X polynomial as sum_k P_k sh x0^{sh k}");
    reg->add_option("expr", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (sh->parsed()) {
            emit(run_product(lhs, rhs, cap, false));
        } else if (st->parsed()) {
            emit(run_product(lhs, rhs, cap, true));
        } else if (neg->parsed()) {
            emit(run_neg_li(spec));
        } else if (hcf->parsed()) {
            NPoly p = closed_form(spec);
            if (table_n) {
                std::cout << "N,H\n";
                for (std::size_t k = 0; k <= *table_n; ++k) {
                    std::cout << k << ',' << p(Rat(static_cast<long>(k))).str() << '\n';
                }
            } else {
                emit(to_json(p));
            }
        } else if (hev->parsed()) {
            emit(run_h_eval(spec, n).str());
        } else if (lic->parsed()) {
            const std::size_t cap_n = ncap ? *ncap : ncap_from_env();
            auto idx = as_index(spec);
            if (floating) {
                if (!idx) {
                    throw Error(Errc::invalid_argument, "--float takes an index list");
                }
                auto t = li_taylor_coeffs<std::complex<double>>(*idx, cap_n);
                if (csv) {
                    std::cout << "n,a_n\n";
                    for (std::size_t k = 0; k <= t.cap(); ++k) {
                        std::cout << k << ',' << t[k].real() << '\n';
                    }
                } else {
                    emit(to_json(t));
                }
            } else {
                ExactTaylor t = idx ? li_taylor_coeffs(*idx, cap_n)
                                    : li_taylor_coeffs(to_ncpoly(evaluate(spec), Alphabet::X), cap_n);
                if (csv) {
                    std::cout << "n,a_n\n";
                    for (std::size_t k = 0; k <= t.cap(); ++k) {
                        std::cout << k << ',' << t[k].str() << '\n';
                    }
                } else {
                    emit(to_json(t));
                }
            }
        } else if (lie->parsed()) {
            std::complex<double> v = li_eval(SignedIndex::parse(spec), parse_complex(z_text), eps);
            emit({{"re", v.real()}, {"im", v.imag()}});
        } else if (ver->parsed()) {
            const std::size_t cap_n = ncap ? *ncap : ncap_from_env();
            auto report = run_suite(parse_suite(suite), cap_n, seed);
            emit(to_json(report));
            for (const auto &r : report) {
                if (!r.pass) {
                    return 1;
                }
            }
        } else if (ev->parsed()) {
            emit(to_json(evaluate(expr)));
        } else if (reg->parsed()) {
            json out = json::object();
            for (const auto &[k, part] : regularize_trailing_x0(to_ncpoly(evaluate(expr), Alphabet::X))) {
                out[std::to_string(k)] = to_json(part);
            }
            emit(out);
        }
    } catch (const Error &e) {
        emit({{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}});
        return 2;
    } catch (const std::exception &e) {
        emit({{"error", {{"code", "internal"}, {"message", e.what()}}}});
        return 3;
    }
    return 0;
}
