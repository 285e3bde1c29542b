#include <doctest.h>

#include "helpers.hpp"

#include <polystuffle/coding.hpp>
#include <polystuffle/products.hpp>

using namespace polystuffle;
using test_helpers::q;

TEST_CASE("pi_X examples")
{
    CHECK(pi_X(Word::y({2})) == Word::x("01"));
    CHECK(pi_X(Word::y({1, 2})) == Word::x("101"));
    CHECK(pi_X(Word(Alphabet::Y)) == Word(Alphabet::X));
    CHECK(pi_X(test_helpers::Y("y2 - 3*y1")) == test_helpers::X(R"("01" - 3*"1")"));
}

TEST_CASE("pi_Y examples and errors")
{
    CHECK(pi_Y(Word::x("001")) == Word::y({3}));
    CHECK(pi_Y(Word::x("101")) == Word::y({1, 2}));
    try {
        pi_Y(Word::x("10"));
        FAIL("accepted x1x0");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::not_in_image);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
    try {
        pi_Y(test_helpers::X(R"("1" + "0110")"));
        FAIL("accepted polynomial with x0 ending");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::not_in_image);
        CHECK(std::string(e.what()).find("0110") != std::string::npos);
    }
}

TEST_CASE("image characterization")
{
    for (const Word &w : test_helpers::x_words_up_to(5)) {
        bool expected = w.empty() || w.back() == 1;
        CHECK(in_image_of_pi_X(w) == expected);
        if (expected) {
            CHECK(pi_X(pi_Y(w)) == w);
        } else {
            CHECK_THROWS_AS(pi_Y(w), Error);
        }
    }
}

TEST_CASE("property: pi_Y after pi_X is the identity up to weight 6")
{
    for (const Word &w : test_helpers::y_words_up_to(6)) {
        CHECK(pi_Y(pi_X(w)) == w);
        CHECK(pi_X(w).size() == w.weight());
    }
}

TEST_CASE("property: pi_X is a concatenation morphism")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Word u = test_helpers::random_y_word(rng, 5);
        Word v = test_helpers::random_y_word(rng, 5);
        CHECK(pi_X(u + v) == pi_X(u) + pi_X(v));
        NCPoly p = test_helpers::random_y_poly(rng, 4, 3);
        NCPoly r = test_helpers::random_y_poly(rng, 4, 3);
        CHECK(pi_X(conc(p, r)) == conc(pi_X(p), pi_X(r)));
    }
}

TEST_CASE("umbral coding")
{
    PlaneElement a = umbra_to_plane(QSeriesTrunc{{q(1)}});
    CHECK(a.to_poly() == test_helpers::Y("y1"));
    PlaneElement b = umbra_to_plane(QSeriesTrunc{{q(0), q(1, 2)}});
    CHECK(b.to_poly() == test_helpers::Y("1/2*y2"));
    CHECK(b.s_max() == 2);
    CHECK(b.at(5) == q(0));

    std::mt19937_64 rng(32);
    for (int i = 0; i < 50; ++i) {
        QSeriesTrunc s;
        for (int k = 0; k < 1 + i % 6; ++k) {
            s.coeffs.push_back(test_helpers::random_rat(rng));
        }
        CHECK(plane_to_umbra(umbra_to_plane(s)) == s);
    }
}
