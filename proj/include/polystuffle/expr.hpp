#ifndef POLYSTUFFLE_EXPR_HPP
#define POLYSTUFFLE_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <polystuffle/error.hpp>
#include <polystuffle/ncpoly.hpp>
#include <polystuffle/stars.hpp>

namespace polystuffle
{

// Static type of an expression. Scalars promote to constants of any
// polynomial-like type.
enum class ExprType { scalar, x_poly, y_poly, x1_star, plane_star };

const char *expr_type_name(ExprType t) noexcept;

/// Syntax or type error carrying the 0-based source offset.
class ExprError : public Error
{
public:
    ExprError(Errc code, std::size_t position, const std::string &message)
        : Error(code, "at " + std::to_string(position) + ": " + message), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct Expr {
    enum class Kind { scalar, x_word, y_word, star, plane_star, add, sub, neg, mul, call };

    Kind kind;
    ExprType type;
    std::size_t position;
    Rat scalar;                        // scalar literal
    Word word{Alphabet::X};            // word literal
    unsigned long star_k = 0;          // star(k)
    std::vector<Rat> plane;            // [a1,...]*
    std::string function;              // call name
    std::size_t cap = 0;               // exps(_, cap)
    std::vector<std::unique_ptr<Expr>> children;
};

using Value = std::variant<Rat, NCPoly, X1StarPoly, PlaneStar>;

/// Grammar:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := factor ('*'? factor)*          (at most one non-scalar factor)
///   factor:= rat | xword | yword | 'star(' nat ')' | '[' rat (',' rat)* ']*'
///          | func '(' args ')' | '(' expr ')'
///   xword := '"' [01]+ '"'      yword := 'y' nat ('y' nat)*
///   func  := sh | st | conc | pix | piy | exps
/// Operands are type-checked while parsing: st needs Y polynomials or plane
/// stars, sh/conc need a common alphabet.
std::unique_ptr<Expr> parse(std::string_view input);

Value evaluate(const Expr &e);
Value evaluate(std::string_view input);

/// Canonical text of a value; parses back to the same value.
std::string to_string(const Value &v);

/// Interprets a value as a polynomial over the given alphabet (scalars become
/// constants). Throws type for stars or the other alphabet.
NCPoly to_ncpoly(const Value &v, Alphabet a);
X1StarPoly to_x1star(const Value &v);

} // namespace polystuffle

#endif
