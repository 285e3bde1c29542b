#include <doctest.h>

#include "helpers.hpp"

#include <polystuffle/coding.hpp>
#include <polystuffle/polylog_num.hpp>
#include <polystuffle/products.hpp>

#include <cmath>
#include <numbers>

using namespace polystuffle;
using test_helpers::q;

namespace
{

ExactTaylor exact(std::vector<Rat> v)
{
    return ExactTaylor(std::move(v));
}

} // namespace

TEST_CASE("li_taylor_coeffs")
{
    auto li2 = li_taylor_coeffs(SignedIndex{{2}}, 10);
    CHECK(li2.cap() == 10);
    CHECK(li2[0] == q(0));
    for (long n = 1; n <= 10; ++n) {
        CHECK(li2[static_cast<std::size_t>(n)] == q(1, n * n));
    }
    CHECK(li_taylor_coeffs(SignedIndex{{1, 1}}, 5)[3] == q(1, 2));
    auto li_m1 = li_taylor_coeffs(SignedIndex{{-1}}, 8);
    for (long n = 0; n <= 8; ++n) {
        CHECK(li_m1[static_cast<std::size_t>(n)] == q(n));
    }
    auto unit = li_taylor_coeffs(SignedIndex{}, 3);
    CHECK(unit.coeffs() == std::vector<Rat>{q(1), q(0), q(0), q(0)});

    auto from_poly = li_taylor_coeffs(test_helpers::X(R"(2*"01" - "1" + 3)"), 6);
    for (long n = 1; n <= 6; ++n) {
        CHECK(from_poly[static_cast<std::size_t>(n)] == q(2, n * n) - q(1, n));
    }
    CHECK(from_poly[0] == q(3));
    try {
        li_taylor_coeffs(test_helpers::X(R"("10")"), 4);
        FAIL("word ending in x0");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::domain);
    }
}

TEST_CASE("float and exact coefficient paths agree")
{
    for (SignedIndex s : {SignedIndex{{2, 1}}, SignedIndex{{-2, 3}}, SignedIndex{{1, -1, 2}}}) {
        auto e = li_taylor_coeffs(s, 30);
        auto f = li_taylor_coeffs<std::complex<double>>(s, 30);
        static_assert(decltype(f)::mode == TaylorMode::floating);
        for (std::size_t n = 0; n <= 30; ++n) {
            double ref = e[n].to_double();
            CHECK(std::abs(f[n].real() - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("li_eval")
{
    auto ln2 = li_eval(SignedIndex{{1}}, {0.5, 0.0}, 1e-10);
    CHECK(std::abs(ln2 - std::complex<double>(std::log(2.0))) <= 1e-10);
    CHECK(li_eval(SignedIndex{}, {0.3, 0.4}, 1e-8) == std::complex<double>(1.0));
    // Li_{-1}(z) = z/(1-z)^2
    std::complex<double> z(0.6, -0.5);
    CHECK(std::abs(li_eval(SignedIndex{{-1}}, z, 1e-9) - z / ((1.0 - z) * (1.0 - z))) <= 1e-9);
    // Li_2 at a modest argument, against the dilogarithm reflection at 1/2.
    double li2_half = std::numbers::pi * std::numbers::pi / 12.0 - std::log(2.0) * std::log(2.0) / 2.0;
    CHECK(std::abs(li_eval(SignedIndex{{2}}, {0.5, 0.0}, 1e-12).real() - li2_half) <= 1e-12);
}

TEST_CASE("li_eval errors")
{
    try {
        li_eval(SignedIndex{{2}}, {0.999, 0.0}, 1e-6);
        FAIL("too close to one");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::domain);
    }
    try {
        li_eval(SignedIndex{{-6000}}, {0.995, 0.0}, 1e-12);
        FAIL("unattainable");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::precision_unattainable);
    }
    CHECK_THROWS_AS(li_eval(SignedIndex{{1}}, {0.1, 0.0}, 0.0), Error);
}

TEST_CASE("property: li_eval agrees with exact partial sums")
{
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> len(1, 3), entry(-2, 3);
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 20; ++i) {
        SignedIndex s;
        s.entries.resize(static_cast<std::size_t>(len(rng)));
        for (auto &v : s.entries) {
            v = entry(rng);
        }
        std::complex<double> z = std::polar(radius(rng), angle(rng));
        const double eps = 1e-8;
        // Reference: long exact-coefficient partial sum, far past the tail bound.
        auto a = li_taylor_coeffs(s, 2000);
        std::complex<double> ref(0.0, 0.0);
        for (std::size_t n = a.cap() + 1; n-- > 0;) {
            ref = ref * z + a[n].to_double();
        }
        CHECK_MESSAGE(std::abs(li_eval(s, z, eps) - ref) <= eps, s.str());
    }
}

TEST_CASE("div_one_minus_z and hadamard")
{
    auto li1 = li_taylor_coeffs(SignedIndex{{1}}, 12);
    auto h = div_one_minus_z(li1);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(h[n] == h_word_eval(Word::y({1}), n));
    }
    auto ones = div_one_minus_z(exact({q(1), q(0), q(0), q(0)}));
    CHECK(ones.coeffs() == std::vector<Rat>(4, q(1)));
    CHECK(div_one_minus_z(ExactTaylor(3)) == ExactTaylor(3));
    auto b = exact({q(2), q(-1, 3), q(5), q(7)});
    CHECK(hadamard(ones, b) == b);
    CHECK(hadamard(b, ExactTaylor(3)) == ExactTaylor(3));
    CHECK_THROWS_AS(hadamard(b, ExactTaylor(4)), Error);
    CHECK_THROWS_AS(cauchy(b, ExactTaylor(2)), Error);
}

TEST_CASE("check_hadamard_identity")
{
    CHECK(check_hadamard_identity(Word::y({1}), Word::y({1}), 50));
    CHECK(check_hadamard_identity(Word::y({2}), Word::y({1}), 100));
    CHECK(check_hadamard_identity(Word(Alphabet::Y), Word::y({2, 1}), 30));
}

TEST_CASE("check_shuffle_morphism")
{
    CHECK(check_shuffle_morphism(Word::x("1"), Word::x("1"), 50));
    CHECK(check_shuffle_morphism(Word::x("01"), Word::x("1"), 80));
    CHECK(check_shuffle_morphism(Word(Alphabet::X), Word::x("011"), 20));
    try {
        check_shuffle_morphism(Word::x("10"), Word::x("1"), 5);
        FAIL("x0 ending");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::domain);
    }
}

TEST_CASE("check_derivative_recursion")
{
    CHECK(check_derivative_recursion(SignedIndex{{2}}, 30));
    CHECK(check_derivative_recursion(SignedIndex{{1, 1}}, 40));
    CHECK(check_derivative_recursion(SignedIndex{{-1, -2}}, 40));
    CHECK(check_derivative_recursion(SignedIndex{{1, -2, 3}}, 40));
    try {
        check_derivative_recursion(SignedIndex{}, 5);
        FAIL("empty index");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::domain);
    }
}

TEST_CASE("property: prefix sums of Li coefficients are harmonic sums")
{
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<int> len(0, 6), entry(-3, 3);
    for (int i = 0; i < 60; ++i) {
        SignedIndex s;
        s.entries.resize(static_cast<std::size_t>(len(rng)));
        for (auto &v : s.entries) {
            v = entry(rng);
        }
        auto b = div_one_minus_z(li_taylor_coeffs(s, 60));
        auto h = h_signed_table(s, 60);
        CHECK_MESSAGE(b.coeffs() == h, s.str());
    }
}

TEST_CASE("stirling2")
{
    CHECK(stirling2(3, 2) == 3);
    for (unsigned n = 0; n < 12; ++n) {
        CHECK(stirling2(n, n) == 1);
    }
    for (unsigned n = 1; n < 12; ++n) {
        CHECK(stirling2(n, 0) == 0);
    }
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(10, 4) == 34105);
    CHECK(stirling2(2, 5) == 0);
}

TEST_CASE("surjection lemma")
{
    NCPoly plus = x1plus_truncated(3);
    NCPoly sq = shuffle(plus, plus, 3);
    CHECK(sq.coeff_of(Word::x("111")) == q(6));
    CHECK(check_surjection_lemma(8, 4));
    CHECK(check_surjection_lemma(0, 0));
}

TEST_CASE("dom_radius_demo")
{
    auto conv = dom_radius_demo(q(1), q(1, 4), 60);
    CHECK(conv.converges);
    CHECK(conv.ratio == q(1, 3));
    REQUIRE(conv.closed_form.has_value());
    CHECK(*conv.closed_form == q(3, 2));
    CHECK(conv.within_bound);
    CHECK(conv.partial_sums.size() == 61);
    for (std::size_t m = 1; m < conv.partial_sums.size(); ++m) {
        CHECK(conv.partial_sums[m] > conv.partial_sums[m - 1]);
    }

    auto div = dom_radius_demo(q(1), q(1, 2), 20);
    CHECK_FALSE(div.converges);
    CHECK(div.ratio == q(1));
    CHECK(div.terms_nondecreasing);
    CHECK_FALSE(div.closed_form.has_value());
    CHECK(div.partial_sums.back() == q(21));

    auto zero_t = dom_radius_demo(q(0), q(9, 10), 5);
    CHECK(zero_t.converges);
    CHECK(*zero_t.closed_form == q(1));
    CHECK(zero_t.partial_sums.back() == q(1));

    try {
        dom_radius_demo(q(1), q(1), 3);
        FAIL("r = 1");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::domain);
    }
    CHECK_THROWS_AS(dom_radius_demo(q(1), q(0), 3), Error);
    CHECK_THROWS_AS(dom_radius_demo(q(-1), q(1, 2), 3), Error);
}
