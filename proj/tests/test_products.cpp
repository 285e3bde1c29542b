#include <doctest.h>

#include "helpers.hpp"

#include <polystuffle/products.hpp>

#include <algorithm>

using namespace polystuffle;
using test_helpers::q;
using test_helpers::X;
using test_helpers::Y;

namespace
{

// Brute-force interleavings: every choice of positions for u inside u+v.
NCPoly shuffle_by_enumeration(const Word &u, const Word &v)
{
    const std::size_t m = u.size(), n = v.size();
    std::vector<bool> mask(m + n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(m), true);
    NCPoly out(u.alphabet());
    // prev_permutation walks every arrangement of m trues among m+n slots.
    do {
        std::vector<std::uint32_t> letters;
        std::size_t i = 0, j = 0;
        for (bool from_u : mask) {
            letters.push_back(from_u ? u[i++] : v[j++]);
        }
        out.add_term(Word(u.alphabet(), letters), Rat(1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

} // namespace

TEST_CASE("conc")
{
    CHECK(conc(X(R"("0")"), X(R"("1")")) == X(R"("01")"));
    NCPoly p = X(R"(2*"01" - "1")");
    CHECK(conc(NCPoly::one(Alphabet::X), p) == p);
    CHECK(conc(Y("y1 + y2"), Y("y1")) == Y("y1y1 + y2y1"));
    CHECK_THROWS_AS(conc(X(R"("0")"), Y("y1")), Error);
}

TEST_CASE("shuffle examples")
{
    CHECK(shuffle(X(R"("0")"), X(R"("1")")) == X(R"("01" + "10")"));
    CHECK(shuffle(Word(Alphabet::X), Word::x("0110")) == NCPoly(Word::x("0110")));
    CHECK(shuffle(X(R"("1")"), X(R"("1")")) == X(R"(2*"11")"));
    CHECK(shuffle(Y("y1"), Y("y2")) == Y("y1y2 + y2y1"));
    try {
        shuffle(X(R"("0")"), Y("y1"));
        FAIL("mixed alphabets");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::alphabet_mismatch);
    }
}

TEST_CASE("shuffle agrees with brute-force interleavings")
{
    for (const Word &u : test_helpers::x_words_up_to(4)) {
        for (const Word &v : test_helpers::x_words_up_to(3)) {
            CHECK(shuffle(u, v) == shuffle_by_enumeration(u, v));
        }
    }
}

TEST_CASE("stuffle examples")
{
    CHECK(stuffle(Y("y1"), Y("y1")) == Y("2*y1y1 + y2"));
    CHECK(stuffle(Y("y2"), Y("y3")) == Y("y2y3 + y3y2 + y5"));
    CHECK(stuffle(NCPoly::one(Alphabet::Y), Y("y2y1")) == Y("y2y1"));
    CHECK(stuffle(Y("y1y2"), Y("y3")) == Y("y1y2y3 + y1y3y2 + y3y1y2 + y1y5 + y4y2"));
    try {
        stuffle(X(R"("1")"), X(R"("1")"));
        FAIL("stuffle over X");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::alphabet_mismatch);
    }
}

TEST_CASE("powers")
{
    CHECK(shuffle_pow(X(R"("1")"), 2) == X(R"(2*"11")"));
    CHECK(stuffle_pow(Y("y1"), 0) == NCPoly::one(Alphabet::Y));
    CHECK(stuffle_pow(Y("y1"), 2) == Y("2*y1y1 + y2"));
    CHECK(shuffle_pow(X(R"("1")"), 5).coeff_of(Word::x("11111")) == q(120));
    CHECK(stuffle_pow(Y("y1 + y2"), 3) == stuffle(Y("y1 + y2"), stuffle(Y("y1 + y2"), Y("y1 + y2"))));
    for (long k : {-1L, -5L}) {
        try {
            shuffle_pow(X(R"("1")"), k);
            FAIL("negative power");
        } catch (const Error &e) {
            CHECK(e.code() == Errc::invalid_argument);
        }
        CHECK_THROWS_AS(stuffle_pow(Y("y1"), k), Error);
    }
}

TEST_CASE("products honour the degree cap")
{
    NCPoly full = shuffle(X(R"("01" + "1")"), X(R"("10" + "0")"));
    CHECK(shuffle(X(R"("01" + "1")"), X(R"("10" + "0")"), 3) == full.truncated(3));
    NCPoly sfull = stuffle(Y("y1 + y2y1"), Y("y2 + y1"));
    CHECK(stuffle(Y("y1 + y2y1"), Y("y2 + y1"), 3) == sfull.truncated(3));
}

TEST_CASE("exp_stuffle examples")
{
    CHECK(exp_stuffle(NCPoly(Alphabet::Y), 5) == NCPoly::one(Alphabet::Y));
    CHECK(exp_stuffle(Y("y1"), 2) == Y("1 + y1 + y1y1 + 1/2*y2"));
    NCPoly p = Y("y1 - 1/3*y2 + y1y2");
    CHECK(stuffle(exp_stuffle(p, 6), exp_stuffle(-p, 6), 6) == NCPoly::one(Alphabet::Y));
    try {
        exp_stuffle(Y("1 + y1"), 3);
        FAIL("constant term");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::nonzero_constant);
    }
}

TEST_CASE("property: commutativity and associativity on short words")
{
    auto xs = test_helpers::x_words_up_to(3);
    for (const auto &u : xs) {
        for (const auto &v : xs) {
            CHECK(shuffle(u, v) == shuffle(v, u));
        }
    }
    auto ys = test_helpers::y_words_up_to(3);
    for (const auto &u : ys) {
        for (const auto &v : ys) {
            CHECK(stuffle(u, v) == stuffle(v, u));
        }
    }
    std::vector<Word> short_x, short_y;
    for (const auto &w : xs) {
        if (w.size() <= 2) {
            short_x.push_back(w);
        }
    }
    for (const auto &w : ys) {
        if (w.size() <= 3) {
            short_y.push_back(w);
        }
    }
    for (const auto &a : short_x) {
        for (const auto &b : short_x) {
            for (const auto &c : xs) {
                CHECK(shuffle(shuffle(a, b), NCPoly(c)) == shuffle(NCPoly(a), shuffle(b, c)));
            }
        }
    }
    for (const auto &a : short_y) {
        for (const auto &b : short_y) {
            for (const auto &c : short_y) {
                CHECK(stuffle(stuffle(a, b), NCPoly(c)) == stuffle(NCPoly(a), stuffle(b, c)));
            }
        }
    }
}

TEST_CASE("property: shuffle coefficients sum to a binomial")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        Word u = test_helpers::random_x_word(rng, 5);
        Word v = test_helpers::random_x_word(rng, 5);
        Rat total;
        const NCPoly prod = shuffle(u, v);
        for (const auto &[w, c] : prod.terms()) {
            total += c;
        }
        CHECK(total == Rat(binomial(u.size() + v.size(), v.size())));
    }
}

TEST_CASE("property: stuffle is weight graded")
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        Word u = test_helpers::random_y_word(rng, 6);
        Word v = test_helpers::random_y_word(rng, 6);
        const NCPoly prod = stuffle(u, v);
        for (const auto &[w, c] : prod.terms()) {
            CHECK(w.weight() == u.weight() + v.weight());
        }
    }
}

TEST_CASE("property: exp_stuffle turns sums into stuffles")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        NCPoly p = test_helpers::random_y_poly(rng, 3, 3);
        NCPoly r = test_helpers::random_y_poly(rng, 3, 3);
        p.add_term(Word(Alphabet::Y), -p.constant_term());
        r.add_term(Word(Alphabet::Y), -r.constant_term());
        const std::size_t cap = 5;
        CHECK(exp_stuffle(p + r, cap) == stuffle(exp_stuffle(p, cap), exp_stuffle(r, cap), cap));
    }
}
