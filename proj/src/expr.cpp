#include <polystuffle/coding.hpp>
#include <polystuffle/expr.hpp>
#include <polystuffle/products.hpp>

#include <cctype>

namespace polystuffle
{

const char *expr_type_name(ExprType t) noexcept
{
    switch (t) {
        case ExprType::scalar: return "scalar";
        case ExprType::x_poly: return "X polynomial";
        case ExprType::y_poly: return "Y polynomial";
        case ExprType::x1_star: return "x1-star combination";
        case ExprType::plane_star: return "plane star";
    }
    return "?";
}

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<Expr> run()
    {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const { throw ExprError(Errc::parse, pos_, msg); }
    [[noreturn]] static void type_fail(std::size_t at, const std::string &msg)
    {
        throw ExprError(Errc::type, at, msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned long natural()
    {
        auto d = digits();
        if (d.size() > 18) {
            fail("number too large");
        }
        return std::stoul(d);
    }

    Rat rational(bool allow_sign)
    {
        bool neg = false;
        if (allow_sign) {
            if (accept('-')) {
                neg = true;
            } else {
                accept('+');
            }
        }
        std::string text = digits();
        if (accept('/')) {
            std::size_t at = pos_;
            std::string den = digits();
            if (BigInt(den) == 0) {
                throw ExprError(Errc::parse, at, "zero denominator");
            }
            text += "/" + den;
        }
        Rat r = Rat::parse(text);
        return neg ? -r : r;
    }

    std::string identifier()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, ExprType t, std::size_t at)
    {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->type = t;
        e->position = at;
        return e;
    }

    // Result type of a sum/difference.
    static ExprType additive(ExprType a, ExprType b, std::size_t at)
    {
        if (a == ExprType::scalar) {
            std::swap(a, b);
        }
        if (a == ExprType::plane_star || b == ExprType::plane_star) {
            type_fail(at, "plane stars cannot be added; combine them with st(,)");
        }
        if (b == ExprType::scalar || a == b) {
            return a;
        }
        type_fail(at, std::string("cannot add ") + expr_type_name(a) + " and " + expr_type_name(b));
    }

    std::unique_ptr<Expr> expr()
    {
        std::size_t at = (skip_ws(), pos_);
        std::unique_ptr<Expr> lhs;
        if (accept('-')) {
            auto t = term();
            auto n = node(Expr::Kind::neg, t->type, at);
            if (t->type == ExprType::plane_star) {
                type_fail(at, "plane stars cannot be negated");
            }
            n->children.push_back(std::move(t));
            lhs = std::move(n);
        } else {
            accept('+');
            lhs = term();
        }
        for (;;) {
            at = (skip_ws(), pos_);
            Expr::Kind k;
            if (accept('+')) {
                k = Expr::Kind::add;
            } else if (accept('-')) {
                k = Expr::Kind::sub;
            } else {
                break;
            }
            auto rhs = term();
            auto n = node(k, additive(lhs->type, rhs->type, at), at);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '"' || c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    std::unique_ptr<Expr> term()
    {
        auto lhs = factor();
        for (;;) {
            std::size_t at = (skip_ws(), pos_);
            bool explicit_mul = accept('*');
            if (!explicit_mul && !(lhs->type == ExprType::scalar && starts_factor())) {
                break;
            }
            auto rhs = factor();
            if (lhs->type != ExprType::scalar && rhs->type != ExprType::scalar) {
                type_fail(at, "'*' multiplies by scalars only; use conc/sh/st for products");
            }
            ExprType t = lhs->type == ExprType::scalar ? rhs->type : lhs->type;
            if (t == ExprType::plane_star) {
                type_fail(at, "plane stars cannot be scaled");
            }
            auto n = node(Expr::Kind::mul, t, at);
            n->children.push_back(std::move(lhs));
            n->children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<Expr> factor()
    {
        std::size_t at = (skip_ws(), pos_);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(Expr::Kind::scalar, ExprType::scalar, at);
            n->scalar = rational(false);
            return n;
        }
        if (c == '"') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
                ++pos_;
            }
            if (pos_ >= text_.size() || text_[pos_] != '"') {
                fail("X words are quoted bit strings like \"01\"");
            }
            if (pos_ == start) {
                fail("empty X word; write 1 for the unit");
            }
            auto n = node(Expr::Kind::x_word, ExprType::x_poly, at);
            n->word = Word::parse(Alphabet::X, text_.substr(start, pos_ - start));
            ++pos_;
            return n;
        }
        if (c == '[') {
            ++pos_;
            auto n = node(Expr::Kind::plane_star, ExprType::plane_star, at);
            n->plane.push_back(rational(true));
            while (accept(',')) {
                n->plane.push_back(rational(true));
            }
            expect(']');
            expect('*');
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (c == 'y' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                return y_word(at);
            }
            return call(at);
        }
        if (c == '\0') {
            fail("unexpected end of input");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::unique_ptr<Expr> y_word(std::size_t at)
    {
        std::vector<std::uint32_t> letters;
        while (pos_ < text_.size() && text_[pos_] == 'y') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            auto d = text_.substr(start, pos_ - start);
            if (d.empty() || d.size() > 9 || std::stoul(std::string(d)) == 0) {
                throw ExprError(Errc::parse, start, "Y letters are y1, y2, ...");
            }
            letters.push_back(static_cast<std::uint32_t>(std::stoul(std::string(d))));
        }
        auto n = node(Expr::Kind::y_word, ExprType::y_poly, at);
        n->word = Word(Alphabet::Y, std::move(letters));
        return n;
    }

    std::unique_ptr<Expr> call(std::size_t at)
    {
        std::string name = identifier();
        if (name == "star") {
            expect('(');
            auto n = node(Expr::Kind::star, ExprType::x1_star, at);
            n->star_k = natural();
            expect(')');
            return n;
        }
        static const char *const known[] = {"sh", "st", "conc", "pix", "piy", "exps"};
        bool ok = false;
        for (auto k : known) {
            ok = ok || name == k;
        }
        if (!ok) {
            throw ExprError(Errc::parse, at, "unknown function '" + name + "'");
        }
        expect('(');
        auto n = node(Expr::Kind::call, ExprType::scalar, at);
        n->function = name;
        n->children.push_back(expr());
        if (name == "sh" || name == "st" || name == "conc") {
            expect(',');
            n->children.push_back(expr());
        } else if (name == "exps") {
            expect(',');
            n->cap = natural();
        }
        expect(')');
        n->type = call_type(*n);
        return n;
    }

    static ExprType call_type(const Expr &n)
    {
        const std::string &f = n.function;
        ExprType a = n.children[0]->type;
        if (f == "pix") {
            if (a != ExprType::y_poly && a != ExprType::scalar) {
                type_fail(n.position, std::string("pix expects a Y polynomial, got ") + expr_type_name(a));
            }
            return ExprType::x_poly;
        }
        if (f == "piy") {
            if (a != ExprType::x_poly && a != ExprType::scalar) {
                type_fail(n.position, std::string("piy expects an X polynomial, got ") + expr_type_name(a));
            }
            return ExprType::y_poly;
        }
        if (f == "exps") {
            if (a != ExprType::y_poly && a != ExprType::scalar) {
                type_fail(n.position, std::string("exps expects a Y polynomial, got ") + expr_type_name(a));
            }
            return ExprType::y_poly;
        }
        ExprType b = n.children[1]->type;
        if (a == ExprType::scalar) {
            std::swap(a, b);
        }
        ExprType t = a;
        if (b != ExprType::scalar && b != a) {
            type_fail(n.position, f + " operands differ: " + expr_type_name(a) + " vs " + expr_type_name(b));
        }
        if (f == "st") {
            if (t == ExprType::x_poly || t == ExprType::x1_star) {
                type_fail(n.position, std::string("stuffle needs Y, got ") + expr_type_name(t));
            }
            return t == ExprType::scalar ? ExprType::y_poly : t;
        }
        if (f == "sh") {
            if (t == ExprType::plane_star) {
                type_fail(n.position, "shuffle of plane stars is not supported");
            }
            return t;
        }
        // conc
        if (t == ExprType::x1_star || t == ExprType::plane_star) {
            type_fail(n.position, std::string("conc is defined on polynomials, got ") + expr_type_name(t));
        }
        return t;
    }
};

Alphabet alphabet_of(ExprType t)
{
    return t == ExprType::y_poly ? Alphabet::Y : Alphabet::X;
}

// Coerces a value to the expression type t (scalars become constants).
Value coerce(const Value &v, ExprType t)
{
    if (!std::holds_alternative<Rat>(v)) {
        return v;
    }
    const Rat &c = std::get<Rat>(v);
    switch (t) {
        case ExprType::scalar: return v;
        case ExprType::x_poly: return NCPoly::constant(Alphabet::X, c);
        case ExprType::y_poly: return NCPoly::constant(Alphabet::Y, c);
        case ExprType::x1_star: return X1StarPoly::constant(c);
        case ExprType::plane_star: break;
    }
    throw Error(Errc::type, "cannot use a scalar as a plane star");
}

Value eval_node(const Expr &e)
{
    switch (e.kind) {
        case Expr::Kind::scalar: return e.scalar;
        case Expr::Kind::x_word:
        case Expr::Kind::y_word: return NCPoly(e.word);
        case Expr::Kind::star: return X1StarPoly::star(e.star_k);
        case Expr::Kind::plane_star: return PlaneStar{PlaneElement{e.plane}};
        case Expr::Kind::neg: {
            Value v = eval_node(*e.children[0]);
            return std::visit(
                [](auto &x) -> Value {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, PlaneStar>) {
                        throw Error(Errc::type, "plane stars cannot be negated");
                    } else {
                        return Rat(-1) * x;
                    }
                },
                v);
        }
        case Expr::Kind::add:
        case Expr::Kind::sub: {
            Value a = coerce(eval_node(*e.children[0]), e.type);
            Value b = coerce(eval_node(*e.children[1]), e.type);
            const Rat sign(e.kind == Expr::Kind::add ? 1 : -1);
            if (e.type == ExprType::scalar) {
                return std::get<Rat>(a) + sign * std::get<Rat>(b);
            }
            if (e.type == ExprType::x1_star) {
                return std::get<X1StarPoly>(a) + sign * std::get<X1StarPoly>(b);
            }
            return std::get<NCPoly>(a) + sign * std::get<NCPoly>(b);
        }
        case Expr::Kind::mul: {
            Value a = eval_node(*e.children[0]);
            Value b = eval_node(*e.children[1]);
            if (!std::holds_alternative<Rat>(a)) {
                std::swap(a, b);
            }
            const Rat &c = std::get<Rat>(a);
            if (auto *r = std::get_if<Rat>(&b)) {
                return c * *r;
            }
            if (auto *p = std::get_if<NCPoly>(&b)) {
                return c * *p;
            }
            return c * std::get<X1StarPoly>(b);
        }
        case Expr::Kind::call: break;
    }

    const std::string &f = e.function;
    if (f == "pix") {
        return pi_X(to_ncpoly(eval_node(*e.children[0]), Alphabet::Y));
    }
    if (f == "piy") {
        return pi_Y(to_ncpoly(eval_node(*e.children[0]), Alphabet::X));
    }
    if (f == "exps") {
        return exp_stuffle(to_ncpoly(eval_node(*e.children[0]), Alphabet::Y), e.cap);
    }
    Value a = coerce(eval_node(*e.children[0]), e.type);
    Value b = coerce(eval_node(*e.children[1]), e.type);
    if (e.type == ExprType::x1_star) {
        return shuffle(std::get<X1StarPoly>(a), std::get<X1StarPoly>(b));
    }
    if (e.type == ExprType::plane_star) {
        return plane_star_stuffle(std::get<PlaneStar>(a), std::get<PlaneStar>(b));
    }
    NCPoly pa = to_ncpoly(a, alphabet_of(e.type));
    NCPoly pb = to_ncpoly(b, alphabet_of(e.type));
    if (f == "sh") {
        return shuffle(pa, pb);
    }
    if (f == "st") {
        return stuffle(pa, pb);
    }
    return conc(pa, pb);
}

} // namespace

std::unique_ptr<Expr> parse(std::string_view input)
{
    return Parser(input).run();
}

Value evaluate(const Expr &e)
{
    return eval_node(e);
}

Value evaluate(std::string_view input)
{
    return evaluate(*parse(input));
}

std::string to_string(const Value &v)
{
    return std::visit([](const auto &x) { return x.str(); }, v);
}

NCPoly to_ncpoly(const Value &v, Alphabet a)
{
    if (auto *r = std::get_if<Rat>(&v)) {
        return NCPoly::constant(a, *r);
    }
    if (auto *p = std::get_if<NCPoly>(&v)) {
        if (p->alphabet() != a) {
            throw Error(Errc::type, std::string("expected a polynomial over ") + alphabet_name(a) + ", got one over " +
                                        alphabet_name(p->alphabet()));
        }
        return *p;
    }
    throw Error(Errc::type, std::string("expected a polynomial over ") + alphabet_name(a));
}

X1StarPoly to_x1star(const Value &v)
{
    if (auto *r = std::get_if<Rat>(&v)) {
        return X1StarPoly::constant(*r);
    }
    if (auto *s = std::get_if<X1StarPoly>(&v)) {
        return *s;
    }
    throw Error(Errc::type, "expected a combination of star(k)");
}

} // namespace polystuffle
