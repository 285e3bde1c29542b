#ifndef POLYSTUFFLE_HARMONIC_HPP
#define POLYSTUFFLE_HARMONIC_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <polystuffle/ncpoly.hpp>
#include <polystuffle/stars.hpp>

namespace polystuffle
{

/// Index list with entries in Z; positive entries are denominators' exponents,
/// non-positive ones are power weights. Empty = unit.
struct SignedIndex {
    std::vector<int> entries;

    std::size_t depth() const { return entries.size(); }
    bool all_nonpositive() const;
    /// "(-2,-1)"; "()" for the empty list.
    std::string str() const;
    /// Accepts "(-2,-1)", "-2,-1", "()" and "".
    static SignedIndex parse(std::string_view text);

    friend bool operator==(const SignedIndex &, const SignedIndex &) = default;
};

/// Polynomial in N with rational coefficients; coeffs[j] multiplies N^j.
class NPoly
{
public:
    NPoly() = default;
    explicit NPoly(std::vector<Rat> coeffs);

    const std::vector<Rat> &coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat operator()(const Rat &n) const;

    NPoly &operator+=(const NPoly &rhs);
    NPoly &operator*=(const NPoly &rhs);
    friend NPoly operator+(NPoly a, const NPoly &b) { return a += b; }
    friend NPoly operator*(NPoly a, const NPoly &b) { return a *= b; }
    friend NPoly operator*(const Rat &c, const NPoly &p);
    friend bool operator==(const NPoly &, const NPoly &) = default;

    /// "1/10*N^5 + 1/8*N^4 - ..." in decreasing degree.
    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

/// Σ_{N >= n1 > ... > nr > 0} Π n_i^{-s_i}, by the prefix recurrence
/// H_s(N) = H_s(N-1) + N^{-s1} H_{s2..}(N-1). This is the brute-force oracle
/// for everything else in the library.
Rat h_signed_eval(const SignedIndex &s, std::size_t n);
/// H_s(0), ..., H_s(n_max).
std::vector<Rat> h_signed_table(const SignedIndex &s, std::size_t n_max);

Rat h_word_eval(const Word &w, std::size_t n);
Rat h_poly_eval(const NCPoly &q, std::size_t n);
std::vector<Rat> h_poly_table(const NCPoly &q, std::size_t n_max);

/// H_{π_Y(S)}(N) as a polynomial in N: Σ_k c_k binom(N+k, k), which is the
/// z^N coefficient of Li_S(z)/(1-z).
NPoly h_x1star_closed_form(const X1StarPoly &s);

/// H_{π_Y(S)}(N) for 0 <= N <= n_max, by expanding the stars to length n_max
/// and summing word by word. Words of depth > N vanish at N, so this is exact.
std::vector<Rat> h_x1star_table(const X1StarPoly &s, std::size_t n_max);

/// Closed form of H_s for s_i <= 0, via li_nonpositive, ratfunc_to_x1star and
/// h_x1star_closed_form. Throws invalid_index for positive entries.
NPoly h_negindex_closed_form(std::span<const int> s);

/// H_{u⊔⊔v}(N) == H_u(N) H_v(N) for all N <= n_max.
bool h_stuffle_check(const Word &u, const Word &v, std::size_t n_max);

/// One summand c · (u ⊔⊔ π_Y(S)) of an element of Dom(H).
struct MixedTerm {
    Rat coeff;
    Word y_factor{Alphabet::Y};
    X1StarPoly stars;
};

struct MixedIdentity {
    std::string name;
    std::vector<MixedTerm> lhs;
    SignedIndex rhs;
    // Closed form stated alongside the identity, when there is one.
    std::optional<NPoly> closed_form;
};

struct MixedResult {
    std::string identity;
    bool pass;
    std::optional<std::size_t> first_failure_n;
};

/// The mixed-sign identities H_{Q}(N) = Σ ... n_i^{-s_i} for elements Q built
/// from stars, each with its nested-sum right-hand side.
const std::vector<MixedIdentity> &mixed_identities();

/// Checks one identity for N = 0..n_max by two routes: the stuffle-character
/// route (Σ c H_u(N) · closed form of S) and the symbolic route (expand the
/// element, stuffle it out, sum word by word). Both must match h_signed_eval,
/// and the stated closed form when present.
MixedResult verify_mixed_identity(const MixedIdentity &id, std::size_t n_max);
std::vector<MixedResult> verify_mixed_examples(std::size_t n_max);

} // namespace polystuffle

#endif
