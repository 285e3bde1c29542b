#include <doctest.h>

#include "helpers.hpp"

#include <polystuffle/coding.hpp>
#include <polystuffle/products.hpp>
#include <polystuffle/stars.hpp>

#include <cmath>

using namespace polystuffle;
using test_helpers::q;
using test_helpers::X;
using test_helpers::Y;

namespace
{

PlaneStar plane(std::vector<Rat> a)
{
    return PlaneStar{PlaneElement{std::move(a)}};
}

PlaneStar random_plane(std::mt19937_64 &rng, std::size_t max_s)
{
    std::uniform_int_distribution<std::size_t> len(1, max_s);
    std::vector<Rat> a(len(rng));
    for (auto &v : a) {
        v = test_helpers::random_rat(rng, 3);
    }
    return plane(std::move(a));
}

} // namespace

TEST_CASE("x1star_expand")
{
    CHECK(x1star_expand(1, 2) == X(R"(1 + "1" + "11")"));
    CHECK(x1star_expand(2, 5).coeff_of(Word::x("111")) == q(8));
    CHECK(x1star_expand(0, 7) == NCPoly::one(Alphabet::X));
    CHECK(x1star_expand(3, 0) == NCPoly::one(Alphabet::X));
}

TEST_CASE("check_kstar_shuffle_power")
{
    CHECK(check_kstar_shuffle_power(2, 4));
    CHECK(check_kstar_shuffle_power(1, 9));
    CHECK(check_kstar_shuffle_power(3, 5));
    CHECK(check_kstar_shuffle_power(5, 6));
    CHECK_THROWS_AS(check_kstar_shuffle_power(0, 3), Error);
}

TEST_CASE("X1StarPoly arithmetic and text")
{
    X1StarPoly p = X1StarPoly::star(2) - X1StarPoly::star(1);
    CHECK(p.str() == "star(2) - star(1)");
    CHECK(X1StarPoly().str() == "0");
    X1StarPoly r = q(12) * X1StarPoly::star(5) + q(-33) * X1StarPoly::star(4) + X1StarPoly::constant(q(1, 2));
    CHECK(r.str() == "12*star(5) - 33*star(4) + 1/2");
    CHECK((p - p).is_zero());
    CHECK(p.coeff(7) == q(0));
}

TEST_CASE("x1-star shuffle adds the parameters")
{
    CHECK(shuffle(X1StarPoly::star(2), X1StarPoly::star(3)) == X1StarPoly::star(5));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        X1StarPoly a, b;
        for (int k = 0; k < 3; ++k) {
            a.add_term(rng() % 4, test_helpers::random_rat(rng));
            b.add_term(rng() % 4, test_helpers::random_rat(rng));
        }
        const std::size_t cap = 6;
        CHECK(shuffle(a, b).expand(cap) == shuffle(a.expand(cap), b.expand(cap), cap));
    }
}

TEST_CASE("plane_star_stuffle examples")
{
    PlaneStar c = plane_star_stuffle(plane({q(1)}), plane({q(1)}));
    CHECK(c.base.alpha == std::vector<Rat>{q(2), q(1)});
    CHECK(c.str() == "[2,1]*");

    PlaneStar d = plane_star_stuffle(plane({q(1), q(0)}), plane({q(0), q(1)}));
    CHECK(d.s_max() == 4);
    CHECK(d.base.alpha == std::vector<Rat>{q(1), q(1), q(1), q(0)});
    CHECK(d.same_series(plane({q(1), q(1), q(1)})));

    PlaneStar b = plane({q(1, 2), q(-3)});
    CHECK(plane_star_stuffle(plane({q(0)}), b).same_series(b));
}

TEST_CASE("plane_star_expand")
{
    CHECK(plane_star_expand(plane({q(1)}), 2) == Y("1 + y1 + y1y1"));
    CHECK(plane_star_expand(plane({q(0), q(1)}), 4) == Y("1 + y2 + y2y2"));
    CHECK(plane_star_expand(plane({q(2), q(-1)}), 3) ==
          Y("1 + 2*y1 - y2 + 4*y1y1 + 8*y1y1y1 - 2*y1y2 - 2*y2y1"));
}

TEST_CASE("property: expansion respects the stuffle of plane stars")
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        PlaneStar a = random_plane(rng, 3);
        PlaneStar b = random_plane(rng, 3);
        const std::size_t cap = 6;
        CHECK(plane_star_expand(plane_star_stuffle(a, b), cap) ==
              stuffle(plane_star_expand(a, cap), plane_star_expand(b, cap), cap));
    }
}

TEST_CASE("property: plane stars form a commutative group")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        PlaneStar a = random_plane(rng, 4);
        PlaneStar b = random_plane(rng, 4);
        PlaneStar c = random_plane(rng, 4);
        CHECK(plane_star_stuffle(a, b).same_series(plane_star_stuffle(b, a)));
        CHECK(plane_star_stuffle(plane_star_stuffle(a, b), c)
                  .same_series(plane_star_stuffle(a, plane_star_stuffle(b, c))));
        CHECK(plane_star_stuffle(a, plane({})).same_series(a));

        const std::size_t cap = 8;
        PlaneStar inv = plane_star_inverse(a, cap);
        CHECK(inv.s_max() == cap);
        PlaneStar prod = plane_star_stuffle(a, inv);
        for (std::size_t s = 1; s <= cap; ++s) {
            CHECK(prod.base.at(s) == q(0));
        }
    }
}

TEST_CASE("plane star inverse of y1")
{
    // (1+q)(1+T) = 1 gives T = -q + q^2 - q^3 + ...
    PlaneStar inv = plane_star_inverse(plane({q(1)}), 4);
    CHECK(inv.base.alpha == std::vector<Rat>{q(-1), q(1), q(-1), q(1)});
}

TEST_CASE("one-parameter group")
{
    QSeriesTrunc t{{q(1), q(-1, 2), q(1, 3)}};
    CHECK(one_param_group(t, q(0), 5) == NCPoly::one(Alphabet::Y));
    std::mt19937_64 rng(44);
    for (int i = 0; i < 5; ++i) {
        Rat z1 = test_helpers::random_rat(rng, 3);
        Rat z2 = test_helpers::random_rat(rng, 3);
        const std::size_t cap = 5;
        CHECK(stuffle(one_param_group(t, z1, cap), one_param_group(t, z2, cap), cap) ==
              one_param_group(t, z1 + z2, cap));
        CHECK(one_param_group(t, z1, cap) == exp_stuffle(z1 * umbra_to_plane(t).to_poly(), cap));
    }
}

TEST_CASE("(z y_k)* as a stuffle exponential")
{
    CHECK(ykstar_exp_identity(1, q(1), 2));
    CHECK(ykstar_exp_identity(2, q(1, 2), 6));
    CHECK(ykstar_exp_identity(3, q(0), 4));
    CHECK(ykstar_exp_identity(1, q(-1, 3), 7));
    CHECK_THROWS_AS(ykstar_exp_identity(0, q(1), 3), Error);
}

TEST_CASE("letter star closed forms")
{
    CHECK(letter_star_li(q(0), q(0)).is_constant_one());
    CHECK(std::abs(letter_star_li(q(0), q(0)).eval({0.4, 0.1}) - std::complex<double>(1.0)) < 1e-15);
    for (int k = 1; k <= 4; ++k) {
        auto li = letter_star_li(q(0), q(k));
        std::complex<double> z(0.3, -0.2);
        CHECK(std::abs(li.eval(z) - std::pow(1.0 - z, -k)) < 1e-12);
    }
    CHECK(std::abs(letter_star_li(q(1), q(0)).eval({0.3, 0.0}) - std::complex<double>(0.3)) < 1e-15);
    auto mixed = letter_star_li(q(1, 2), q(-3, 2));
    std::complex<double> z(0.25, 0.0);
    CHECK(std::abs(mixed.eval(z) - std::sqrt(0.25) * std::pow(0.75, 1.5)) < 1e-12);
}
