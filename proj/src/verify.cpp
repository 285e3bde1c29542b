#include <polystuffle/coding.hpp>
#include <polystuffle/polylog_num.hpp>
#include <polystuffle/products.hpp>
#include <polystuffle/verify.hpp>

#include <cstdlib>
#include <random>

namespace polystuffle
{

namespace
{

Rat q(long p, long d = 1)
{
    return Rat(BigInt(p), BigInt(d));
}

X1StarPoly stars(std::initializer_list<std::pair<unsigned long, long>> terms)
{
    X1StarPoly p;
    for (auto [k, c] : terms) {
        p.add_term(k, Rat(c));
    }
    return p;
}

RatFuncAtOne ratfunc(std::initializer_list<long> num, std::size_t pole)
{
    std::vector<Rat> v;
    for (long c : num) {
        v.emplace_back(c);
    }
    return RatFuncAtOne(std::move(v), pole);
}

std::vector<NegIndexExample> build_examples()
{
    std::vector<NegIndexExample> ex;
    ex.push_back({{0}, ratfunc({0, 1}, 1), stars({{1, 1}, {0, -1}}), NPoly({0, 1})});
    ex.push_back({{-1}, ratfunc({0, 1}, 2), stars({{2, 1}, {1, -1}}), NPoly({0, q(1, 2), q(1, 2)})});
    ex.push_back(
        {{0, 0}, ratfunc({0, 0, 1}, 2), stars({{2, 1}, {1, -2}, {0, 1}}), NPoly({0, q(-1, 2), q(1, 2)})});
    ex.push_back({{-2, -1},
                  ratfunc({0, 0, 4, 7, 1}, 5),
                  stars({{5, 12}, {4, -33}, {3, 31}, {2, -11}, {1, 1}}),
                  NPoly({0, q(-1, 60), q(-1, 8), q(-1, 12), q(1, 8), q(1, 10)})});
    ex.push_back({{-2, -2},
                  ratfunc({0, 0, 4, 21, 14, 1}, 6),
                  stars({{6, 40}, {5, -132}, {4, 161}, {3, -87}, {2, 19}, {1, -1}}),
                  NPoly({0, q(1, 60), q(1, 72), q(-1, 12), q(-5, 72), q(1, 15), q(1, 18)})});
    ex.push_back({{-3, -3},
                  ratfunc({0, 0, 8, 179, 584, 424, 64, 1}, 8),
                  stars({{8, 1260}, {7, -5400}, {6, 9270}, {5, -8070}, {4, 3699}, {3, -829}, {2, 71}, {1, -1}}),
                  std::nullopt});
    ex.push_back({{-1, 0, -2},
                  ratfunc({0, 0, 0, 3, 6, 1}, 6),
                  stars({{6, 10}, {5, -38}, {4, 55}, {3, -37}, {2, 11}, {1, -1}}),
                  NPoly({0, q(-1, 60), q(1, 72), q(1, 24), q(-1, 36), q(-1, 40), q(1, 72)})});
    ex.push_back({{-1, -2, -2},
                  ratfunc({0, 0, 0, 12, 100, 133, 34, 1}, 8),
                  stars({{8, 280}, {7, -1312}, {6, 2497}, {5, -2457}, {4, 1310}, {3, -358}, {2, 41}, {1, -1}}),
                  NPoly({0, q(1, 210), q(-7, 360), q(-19, 720), q(1, 24), q(23, 720), q(-7, 240), q(-13, 1260),
                         q(1, 144)})});
    return ex;
}

// First index where two tables differ.
template <typename T>
std::optional<std::size_t> first_mismatch(const std::vector<T> &a, const std::vector<T> &b)
{
    for (std::size_t n = 0; n < a.size() && n < b.size(); ++n) {
        if (a[n] != b[n]) {
            return n;
        }
    }
    if (a.size() != b.size()) {
        return std::min(a.size(), b.size());
    }
    return std::nullopt;
}

std::optional<std::size_t> earliest(std::optional<std::size_t> a, std::optional<std::size_t> b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

CheckResult flag(std::string name, bool ok)
{
    return {std::move(name), ok, std::nullopt};
}

CheckResult by_n(std::string name, std::optional<std::size_t> failure)
{
    return {std::move(name), !failure.has_value(), failure};
}

std::vector<Word> y_words_up_to(std::size_t w)
{
    std::vector<std::vector<Word>> by_weight(w + 1);
    by_weight[0].push_back(Word(Alphabet::Y));
    for (std::size_t k = 1; k <= w; ++k) {
        for (std::size_t first = 1; first <= k; ++first) {
            for (const auto &rest : by_weight[k - first]) {
                std::vector<std::uint32_t> l{static_cast<std::uint32_t>(first)};
                l.insert(l.end(), rest.letters().begin(), rest.letters().end());
                by_weight[k].emplace_back(Alphabet::Y, std::move(l));
            }
        }
    }
    std::vector<Word> out;
    for (auto &layer : by_weight) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Word> regular_x_words_up_to(std::size_t len)
{
    std::vector<Word> out;
    for (const Word &y : y_words_up_to(len)) {
        out.push_back(pi_X(y));
    }
    return out;
}

Word random_y_word(std::mt19937_64 &rng, std::size_t max_weight)
{
    std::size_t left = std::uniform_int_distribution<std::size_t>(0, max_weight)(rng);
    std::vector<std::uint32_t> l;
    while (left > 0) {
        std::size_t s = std::uniform_int_distribution<std::size_t>(1, left)(rng);
        l.push_back(static_cast<std::uint32_t>(s));
        left -= s;
    }
    return Word(Alphabet::Y, std::move(l));
}

Rat random_rat(std::mt19937_64 &rng)
{
    long num = std::uniform_int_distribution<long>(-4, 4)(rng);
    long den = std::uniform_int_distribution<long>(1, 4)(rng);
    return q(num, den);
}

PlaneStar random_plane(std::mt19937_64 &rng, std::size_t max_s)
{
    PlaneStar p;
    p.base.alpha.resize(std::uniform_int_distribution<std::size_t>(1, max_s)(rng));
    for (auto &v : p.base.alpha) {
        v = random_rat(rng);
    }
    return p;
}

std::optional<std::size_t> stuffle_character_failure(const Word &u, const Word &v, std::size_t n_cap)
{
    auto lhs = h_poly_table(stuffle(u, v), n_cap);
    auto hu = h_poly_table(NCPoly(u), n_cap);
    auto hv = h_poly_table(NCPoly(v), n_cap);
    for (std::size_t n = 0; n <= n_cap; ++n) {
        hu[n] *= hv[n];
    }
    return first_mismatch(lhs, hu);
}

void suite_ex3(std::vector<CheckResult> &out, std::size_t n_cap)
{
    out.push_back(by_n("H[star(1)] = N + 1", [&] {
        NPoly p = h_x1star_closed_form(X1StarPoly::star(1));
        std::vector<Rat> a, b;
        for (std::size_t n = 0; n <= n_cap; ++n) {
            a.push_back(p(Rat(static_cast<long>(n))));
            b.push_back(Rat(static_cast<long>(n + 1)));
        }
        return first_mismatch(a, b);
    }()));
    for (const auto &ex : negindex_examples()) {
        const std::string idx = SignedIndex{ex.index}.str();
        RatFuncAtOne f = li_nonpositive(ex.index);
        out.push_back(flag("Li" + idx + " = " + ex.li.str(), f == ex.li));
        out.push_back(flag("Li" + idx + " = Li[" + ex.stars.str() + "]", ratfunc_to_x1star(f) == ex.stars));

        NPoly closed = h_x1star_closed_form(ex.stars);
        std::vector<Rat> from_closed;
        for (std::size_t n = 0; n <= n_cap; ++n) {
            from_closed.push_back(closed(Rat(static_cast<long>(n))));
        }
        auto failure = first_mismatch(from_closed, h_signed_table(SignedIndex{ex.index}, n_cap));
        bool listed_ok = !ex.closed_form || closed == *ex.closed_form;
        CheckResult r = by_n("H[" + ex.stars.str() + "] = S" + idx, failure);
        r.pass = r.pass && listed_ok;
        out.push_back(r);
    }
}

void suite_mixed(std::vector<CheckResult> &out, std::size_t n_cap)
{
    for (const auto &r : verify_mixed_examples(n_cap)) {
        out.push_back({r.identity, r.pass, r.first_failure_n});
    }
}

void suite_morphisms(std::vector<CheckResult> &out, std::size_t n_cap, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto ys = y_words_up_to(3);

    std::optional<std::size_t> fail;
    for (const auto &u : ys) {
        for (const auto &v : ys) {
            fail = earliest(fail, stuffle_character_failure(u, v, n_cap));
        }
    }
    out.push_back(by_n("H[u st v] = H[u] H[v], weights <= 3", fail));

    fail.reset();
    for (int i = 0; i < 50; ++i) {
        fail = earliest(fail, stuffle_character_failure(random_y_word(rng, 6), random_y_word(rng, 6), n_cap));
    }
    out.push_back(by_n("H[u st v] = H[u] H[v], 50 random pairs of weight <= 6", fail));

    fail.reset();
    const auto xs = regular_x_words_up_to(3);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i; j < xs.size(); ++j) {
            auto lhs = cauchy(li_taylor_coeffs(NCPoly(xs[i]), n_cap), li_taylor_coeffs(NCPoly(xs[j]), n_cap));
            auto rhs = li_taylor_coeffs(shuffle(xs[i], xs[j]), n_cap);
            fail = earliest(fail, first_mismatch(lhs.coeffs(), rhs.coeffs()));
        }
    }
    out.push_back(by_n("Li[u sh v] = Li[u] Li[v], lengths <= 3", fail));

    fail.reset();
    for (const auto &u : ys) {
        for (const auto &v : ys) {
            auto lhs = hadamard(div_one_minus_z(li_taylor_coeffs(pi_X(NCPoly(u)), n_cap)),
                                div_one_minus_z(li_taylor_coeffs(pi_X(NCPoly(v)), n_cap)));
            auto rhs = div_one_minus_z(li_taylor_coeffs(pi_X(stuffle(u, v)), n_cap));
            fail = earliest(fail, first_mismatch(lhs.coeffs(), rhs.coeffs()));
        }
    }
    out.push_back(by_n("Li[u]/(1-z) had Li[v]/(1-z) = Li[pix(u st v)]/(1-z), weights <= 3", fail));

    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        SignedIndex s;
        s.entries.resize(std::uniform_int_distribution<std::size_t>(1, 5)(rng));
        for (auto &v : s.entries) {
            v = std::uniform_int_distribution<int>(-4, 4)(rng);
        }
        ok = ok && check_derivative_recursion(s, n_cap);
    }
    out.push_back(flag("theta Li[s1,...] = Li[s1-1,...], 20 random indices", ok));
}

void suite_stars(std::vector<CheckResult> &out, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (unsigned long k = 1; k <= 4; ++k) {
        ok = ok && check_kstar_shuffle_power(k, 8);
    }
    out.push_back(flag("star(k) = star(1)^{sh k}, k <= 4, length <= 8", ok));

    ok = true;
    for (int i = 0; i < 30; ++i) {
        PlaneStar a = random_plane(rng, 3);
        PlaneStar b = random_plane(rng, 3);
        ok = ok && plane_star_expand(plane_star_stuffle(a, b), 6) ==
                       stuffle(plane_star_expand(a, 6), plane_star_expand(b, 6), 6);
    }
    out.push_back(flag("[a]* st [b]* = [a + b + a.b]*, 30 random pairs, weight <= 6", ok));

    ok = true;
    for (int i = 0; i < 20; ++i) {
        PlaneStar a = random_plane(rng, 4);
        PlaneStar prod = plane_star_stuffle(a, plane_star_inverse(a, 8));
        for (std::size_t s = 1; s <= 8; ++s) {
            ok = ok && prod.base.at(s).is_zero();
        }
    }
    out.push_back(flag("[a]* st inverse([a]*) = 1, 20 random stars", ok));

    ok = true;
    for (unsigned long k : {1UL, 2UL, 3UL}) {
        for (const Rat &z : {q(1), q(1, 2), q(-1, 3)}) {
            ok = ok && ykstar_exp_identity(k, z, 6);
        }
    }
    out.push_back(flag("(z y_k)* = exps(-sum y_{nk} (-z)^n / n), k <= 3, weight <= 6", ok));

    ok = true;
    for (int i = 0; i < 5; ++i) {
        QSeriesTrunc t{{random_rat(rng), random_rat(rng), random_rat(rng)}};
        Rat z1 = random_rat(rng), z2 = random_rat(rng);
        ok = ok && stuffle(one_param_group(t, z1, 5), one_param_group(t, z2, 5), 5) == one_param_group(t, z1 + z2, 5);
        ok = ok && one_param_group(t, z1, 5) == exp_stuffle(z1 * umbra_to_plane(t).to_poly(), 5);
    }
    out.push_back(flag("G(z1) st G(z2) = G(z1 + z2) = exps, 5 random cases", ok));

    ok = true;
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < 50; ++i) {
        NCPoly p(Alphabet::X);
        for (int t = 0; t < 4; ++t) {
            std::vector<std::uint32_t> l(std::uniform_int_distribution<std::size_t>(0, 5)(rng));
            for (auto &a : l) {
                a = bit(rng) ? 1u : 0u;
            }
            p.add_term(Word(Alphabet::X, std::move(l)), random_rat(rng));
        }
        NCPoly back(Alphabet::X);
        for (const auto &[k, part] : regularize_trailing_x0(p)) {
            back += shuffle(part, shuffle_pow(NCPoly(Word::x("0")), static_cast<long>(k)));
        }
        ok = ok && back == p;
    }
    out.push_back(flag("P = sum_k P_k sh x0^{sh k}, 50 random P of length <= 5", ok));
}

void suite_stirling(std::vector<CheckResult> &out, std::size_t n_cap)
{
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(n_cap, 20));
    out.push_back(flag("<(x1+)^{sh m} | x1^n> = m! S2(n,m), n <= " + std::to_string(n) + ", m <= 8",
                       check_surjection_lemma(n, 8)));
    auto conv = dom_radius_demo(q(1), q(1, 4), 60);
    out.push_back(flag("M(1/4) -> 3/2 for t = 1", conv.converges && conv.within_bound && conv.closed_form == q(3, 2)));
    auto div = dom_radius_demo(q(1), q(1, 2), 60);
    out.push_back(flag("M(1/2) diverges for t = 1", !div.converges && div.terms_nondecreasing));
}

} // namespace

const std::vector<NegIndexExample> &negindex_examples()
{
    static const std::vector<NegIndexExample> ex = build_examples();
    return ex;
}

Suite parse_suite(const std::string &name)
{
    for (Suite s : {Suite::ex3, Suite::mixed, Suite::morphisms, Suite::stars, Suite::stirling, Suite::all}) {
        if (name == suite_name(s)) {
            return s;
        }
    }
    throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

const char *suite_name(Suite s) noexcept
{
    switch (s) {
        case Suite::ex3: return "ex3";
        case Suite::mixed: return "mixed";
        case Suite::morphisms: return "morphisms";
        case Suite::stars: return "stars";
        case Suite::stirling: return "stirling";
        case Suite::all: return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite s, std::size_t n_cap, std::uint64_t seed)
{
    std::vector<CheckResult> out;
    if (s == Suite::ex3 || s == Suite::all) {
        suite_ex3(out, n_cap);
    }
    if (s == Suite::mixed || s == Suite::all) {
        suite_mixed(out, n_cap);
    }
    if (s == Suite::morphisms || s == Suite::all) {
        suite_morphisms(out, n_cap, seed);
    }
    if (s == Suite::stars || s == Suite::all) {
        suite_stars(out, seed);
    }
    if (s == Suite::stirling || s == Suite::all) {
        suite_stirling(out, n_cap);
    }
    return out;
}

std::size_t ncap_from_env()
{
    const char *v = std::getenv("POLYLOG_NCAP_DEFAULT");
    if (v == nullptr || *v == '\0') {
        return default_ncap;
    }
    char *end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || v[0] == '-') {
        throw Error(Errc::invalid_argument, std::string("POLYLOG_NCAP_DEFAULT is not a natural number: ") + v);
    }
    return static_cast<std::size_t>(n);
}

} // namespace polystuffle
