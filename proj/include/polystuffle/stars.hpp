#ifndef POLYSTUFFLE_STARS_HPP
#define POLYSTUFFLE_STARS_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <string>

#include <polystuffle/coding.hpp>
#include <polystuffle/ncpoly.hpp>

namespace polystuffle
{

/// Σ_k c_k (k x1)*, with (0 x1)* = 1. Hosts the negative-index polylogarithms.
class X1StarPoly
{
public:
    using Terms = std::map<unsigned long, Rat>;

    X1StarPoly() = default;
    static X1StarPoly star(unsigned long k, const Rat &c = Rat(1));
    static X1StarPoly constant(const Rat &c) { return star(0, c); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(unsigned long k) const;
    void add_term(unsigned long k, const Rat &c);

    X1StarPoly &operator+=(const X1StarPoly &rhs);
    X1StarPoly &operator-=(const X1StarPoly &rhs);
    X1StarPoly &operator*=(const Rat &c);
    friend X1StarPoly operator+(X1StarPoly a, const X1StarPoly &b) { return a += b; }
    friend X1StarPoly operator-(X1StarPoly a, const X1StarPoly &b) { return a -= b; }
    friend X1StarPoly operator*(const Rat &c, X1StarPoly p) { return p *= c; }
    friend bool operator==(const X1StarPoly &, const X1StarPoly &) = default;

    /// Truncation to words x1^n with n <= len_cap.
    NCPoly expand(std::size_t len_cap) const;

    /// "12*star(5) - 33*star(4) + ..." in decreasing k; "0" when empty.
    std::string str() const;

private:
    Terms terms_;
};

// (a x1)* ⧢ (b x1)* = ((a+b) x1)*, extended bilinearly.
X1StarPoly shuffle(const X1StarPoly &a, const X1StarPoly &b);

/// Σ_{n=0}^{len_cap} k^n x1^n.
NCPoly x1star_expand(unsigned long k, std::size_t len_cap);

/// (k x1)* = (x1*)^{⧢k}, compared up to length len_cap.
bool check_kstar_shuffle_power(unsigned long k, std::size_t len_cap);

/// (Σ_s α_s y_s)*, a conc-character. S_max is that of the base.
struct PlaneStar {
    PlaneElement base;

    std::size_t s_max() const { return base.s_max(); }
    std::string str() const;
    /// Compares the represented series, ignoring trailing zero coefficients.
    bool same_series(const PlaneStar &other) const;
};

/// Closed form of the stuffle of two stars of the plane:
/// c_n = α_n + β_n + Σ_{i+j=n} α_i β_j, with S_max(A) + S_max(B) entries.
PlaneStar plane_star_stuffle(const PlaneStar &a, const PlaneStar &b);

/// Group inverse for plane_star_stuffle, solved degree by degree from
/// (1+S)(1+T) = 1 in the umbral coding; exact for the first s_max_out entries.
PlaneStar plane_star_inverse(const PlaneStar &a, std::size_t s_max_out);

/// All words y_{s1}...y_{sr} of weight <= weight_cap with coefficient Π α_{s_i}.
NCPoly plane_star_expand(const PlaneStar &a, std::size_t weight_cap);

/// G(z) = (umbra(e^{zT} - 1))* expanded to weight <= weight_cap.
NCPoly one_param_group(const QSeriesTrunc &t, const Rat &z, std::size_t weight_cap);

/// (z y_k)* = exp_⊔⊔(-Σ_{n≥1} y_{nk} (-z)^n / n), compared up to weight_cap.
bool ykstar_exp_identity(unsigned long k, const Rat &z, std::size_t weight_cap);

/// Closed-form polylogarithm of a letter star: Li_{(αx0 + βx1)*}(z) = z^α (1-z)^{-β}.
struct LetterStarLi {
    Rat alpha;
    Rat beta;

    /// Principal branches; valid for z off the cuts (-inf, 0] and [1, +inf).
    std::complex<double> eval(std::complex<double> z) const;
    bool is_constant_one() const { return alpha.is_zero() && beta.is_zero(); }
};

LetterStarLi letter_star_li(const Rat &alpha, const Rat &beta);

} // namespace polystuffle

#endif
