#include <doctest.h>

#include "helpers.hpp"

#include <polystuffle/expr.hpp>
#include <polystuffle/products.hpp>

using namespace polystuffle;
using test_helpers::q;

namespace
{

Errc error_code(const char *text, std::size_t *position = nullptr)
{
    try {
        evaluate(text);
    } catch (const ExprError &e) {
        if (position) {
            *position = e.position();
        }
        return e.code();
    }
    FAIL("no error for " << text);
    return Errc::invalid_argument;
}

} // namespace

TEST_CASE("parse builds typed trees")
{
    auto st = parse("st(y1, y1)");
    CHECK(st->kind == Expr::Kind::call);
    CHECK(st->function == "st");
    CHECK(st->type == ExprType::y_poly);
    CHECK(st->children.size() == 2);

    auto stars = parse("star(2) - star(1)");
    CHECK(stars->kind == Expr::Kind::sub);
    CHECK(stars->type == ExprType::x1_star);

    CHECK(parse(R"(sh("01", 1/2))")->type == ExprType::x_poly);
    CHECK(parse("st([1]*, [0,1]*)")->type == ExprType::plane_star);
    CHECK(parse("3/4")->type == ExprType::scalar);
    CHECK(parse("pix(y2)")->type == ExprType::x_poly);
    CHECK(parse(R"(piy("01"))")->type == ExprType::y_poly);
}

TEST_CASE("evaluate")
{
    CHECK(std::get<NCPoly>(evaluate("st(y1, y1)")) == stuffle(Word::y({1}), Word::y({1})));
    CHECK(std::get<NCPoly>(evaluate(R"(sh("0", "1"))")) == shuffle(Word::x("0"), Word::x("1")));
    CHECK(std::get<NCPoly>(evaluate(R"(conc("0", "1" + 2))")) == test_helpers::X(R"("01" + 2*"0")"));
    CHECK(std::get<NCPoly>(evaluate("pix(y1y2)")) == NCPoly(Word::x("101")));
    CHECK(std::get<NCPoly>(evaluate(R"(piy("001"))")) == NCPoly(Word::y({3})));
    CHECK(std::get<NCPoly>(evaluate("exps(y1, 2)")) == test_helpers::Y("1 + y1 + y1y1 + 1/2*y2"));
    CHECK(std::get<X1StarPoly>(evaluate("sh(star(2), 3*star(1))")) == q(3) * X1StarPoly::star(3));
    CHECK(std::get<PlaneStar>(evaluate("st([1]*, [1]*)")).base.alpha == std::vector<Rat>{q(2), q(1)});
    CHECK(std::get<Rat>(evaluate("1/2 + 2*3 - 1/3")) == q(37, 6));
    CHECK(std::get<NCPoly>(evaluate("-(y1 - y2)")) == test_helpers::Y("y2 - y1"));
    CHECK(std::get<NCPoly>(evaluate("2y1")) == test_helpers::Y("2*y1"));
    CHECK(std::get<X1StarPoly>(evaluate("12star(5)")) == q(12) * X1StarPoly::star(5));
}

TEST_CASE("type errors")
{
    std::size_t pos = 99;
    CHECK(error_code(R"(st("01", y1))", &pos) == Errc::type);
    CHECK(pos == 0);
    try {
        evaluate(R"(st("01", "1"))");
        FAIL("stuffle over X");
    } catch (const ExprError &e) {
        CHECK(std::string(e.what()).find("stuffle needs Y") != std::string::npos);
    }
    CHECK(error_code(R"(y1 + "1")") == Errc::type);
    CHECK(error_code(R"(sh(y1, "1"))") == Errc::type);
    CHECK(error_code("y1 * y2") == Errc::type);
    CHECK(error_code(R"(pix("1"))") == Errc::type);
    CHECK(error_code("piy(y1)") == Errc::type);
    CHECK(error_code("[1]* + [2]*") == Errc::type);
    CHECK(error_code("star(1) + y1") == Errc::type);
    CHECK(error_code("conc(star(1), star(2))") == Errc::type);
}

TEST_CASE("syntax errors carry positions")
{
    std::size_t pos = 0;
    CHECK(error_code("st(y1, y1", &pos) == Errc::parse);
    CHECK(pos == 9);
    CHECK(error_code("y1 +", &pos) == Errc::parse);
    CHECK(pos == 4);
    CHECK(error_code("foo(y1)", &pos) == Errc::parse);
    CHECK(pos == 0);
    CHECK(error_code(R"("012")") == Errc::parse);
    CHECK(error_code(R"("")") == Errc::parse);
    CHECK(error_code("y0") == Errc::parse);
    CHECK(error_code("1/0") == Errc::parse);
    CHECK(error_code("[1,2]") == Errc::parse);
    CHECK(error_code("y1 y2") == Errc::parse);
    CHECK(error_code("star()") == Errc::parse);
}

TEST_CASE("runtime errors are reported as module errors")
{
    try {
        evaluate(R"(piy("10"))");
        FAIL("not in image");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::not_in_image);
    }
    try {
        evaluate("exps(1 + y1, 3)");
        FAIL("constant term");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::nonzero_constant);
    }
}

TEST_CASE("property: printing then parsing is the identity")
{
    std::mt19937_64 rng(81);
    for (int i = 0; i < 200; ++i) {
        NCPoly x = test_helpers::random_x_poly(rng, 4, 5);
        NCPoly y = test_helpers::random_y_poly(rng, 5, 5);
        CHECK(to_ncpoly(evaluate(x.str()), Alphabet::X) == x);
        CHECK(to_ncpoly(evaluate(y.str()), Alphabet::Y) == y);
        X1StarPoly s;
        for (int k = 0; k < 4; ++k) {
            s.add_term(rng() % 7, test_helpers::random_rat(rng, 50));
        }
        CHECK(to_x1star(evaluate(s.str())) == s);
        PlaneStar p{PlaneElement{{test_helpers::random_rat(rng), test_helpers::random_rat(rng)}}};
        CHECK(std::get<PlaneStar>(evaluate(p.str())).base == p.base);
        CHECK(to_string(evaluate(to_string(Value{y}))) == y.str());
    }
}
