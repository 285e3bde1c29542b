#ifndef POLYSTUFFLE_NCPOLY_HPP
#define POLYSTUFFLE_NCPOLY_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include <polystuffle/rat.hpp>
#include <polystuffle/word.hpp>

namespace polystuffle
{

/// Finite Q-linear combination of words over one alphabet.
///
/// Terms are kept in canonical word order (length, then lexicographic) and
/// zero coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal.
class NCPoly
{
public:
    using Terms = std::map<Word, Rat>;

    explicit NCPoly(Alphabet a = Alphabet::X) : alphabet_(a) {}
    NCPoly(const Word &w, const Rat &c = Rat(1));

    static NCPoly one(Alphabet a) { return NCPoly(Word(a)); }
    static NCPoly constant(Alphabet a, const Rat &c) { return NCPoly(Word(a), c); }

    Alphabet alphabet() const { return alphabet_; }
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// <P | w>; zero for absent words.
    Rat coeff_of(const Word &w) const;
    Rat constant_term() const { return coeff_of(Word(alphabet_)); }

    /// Adds c*w in place.
    void add_term(const Word &w, const Rat &c);

    NCPoly &operator+=(const NCPoly &rhs);
    NCPoly &operator-=(const NCPoly &rhs);
    NCPoly &operator*=(const Rat &c);

    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
    friend NCPoly operator*(const Rat &c, NCPoly p) { return p *= c; }
    friend NCPoly operator*(NCPoly p, const Rat &c) { return p *= c; }
    NCPoly operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const NCPoly &, const NCPoly &) = default;

    /// Restriction to words of degree n (length on X, weight on Y).
    NCPoly homogeneous_component(std::size_t n) const;
    /// Restriction to words of degree <= cap.
    NCPoly truncated(std::size_t cap) const;
    /// Degrees that occur in the support.
    std::set<std::size_t> degrees() const;
    std::size_t max_degree() const;
    std::size_t max_length() const;

    /// Canonical expression text, e.g. `"01" + 3*"10"` or `y2y1 - 1/2*y3`.
    /// The output parses back to the same polynomial.
    std::string str() const;

    /// Re-validates the term map (for tests of canonical form).
    NCPoly normalized() const;

private:
    Alphabet alphabet_;
    Terms terms_;
};

NCPoly add(const NCPoly &p, const NCPoly &q);
NCPoly scale(const Rat &c, const NCPoly &p);
Rat coeff_of(const NCPoly &p, const Word &w);
NCPoly homogeneous_component(const NCPoly &p, std::size_t n);

// Expression-syntax spelling of a word: "\"01\"" for X, "y2y1" for Y.
std::string word_expr(const Word &w);

} // namespace polystuffle

#endif
