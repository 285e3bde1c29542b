#ifndef POLYSTUFFLE_POLYLOG_NUM_HPP
#define POLYSTUFFLE_POLYLOG_NUM_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <polystuffle/error.hpp>
#include <polystuffle/harmonic.hpp>
#include <polystuffle/ncpoly.hpp>

namespace polystuffle
{

enum class TaylorMode { exact, floating };

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
    static constexpr TaylorMode mode = TaylorMode::exact;
    static Rat from_int(long v) { return Rat(v); }
    // n^{-s}
    static Rat inverse_power(std::size_t n, int s) { return Rat(static_cast<long>(n)).pow(-static_cast<long>(s)); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr TaylorMode mode = TaylorMode::floating;
    static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static std::complex<double> inverse_power(std::size_t n, int s)
    {
        return {std::pow(static_cast<double>(n), -static_cast<double>(s)), 0.0};
    }
};

/// Truncated Taylor expansion a_0 .. a_{N_cap} around zero.
template <typename Scalar>
class TaylorTrunc
{
public:
    static constexpr TaylorMode mode = ScalarTraits<Scalar>::mode;

    explicit TaylorTrunc(std::size_t n_cap) : coeffs_(n_cap + 1) {}
    explicit TaylorTrunc(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw Error(Errc::invalid_argument, "a truncated Taylor series has at least one coefficient");
        }
    }

    std::size_t cap() const { return coeffs_.size() - 1; }
    const std::vector<Scalar> &coeffs() const { return coeffs_; }
    const Scalar &operator[](std::size_t n) const { return coeffs_[n]; }
    Scalar &operator[](std::size_t n) { return coeffs_[n]; }

    TaylorTrunc &operator+=(const TaylorTrunc &rhs)
    {
        require_same_cap(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += rhs.coeffs_[n];
        }
        return *this;
    }
    TaylorTrunc scaled(const Scalar &c) const
    {
        TaylorTrunc out = *this;
        for (auto &v : out.coeffs_) {
            v *= c;
        }
        return out;
    }

    void require_same_cap(const TaylorTrunc &rhs) const
    {
        if (rhs.cap() != cap()) {
            throw Error(Errc::invalid_argument, "truncated Taylor series with different caps");
        }
    }

    friend bool operator==(const TaylorTrunc &, const TaylorTrunc &) = default;

private:
    std::vector<Scalar> coeffs_;
};

using ExactTaylor = TaylorTrunc<Rat>;
using FloatTaylor = TaylorTrunc<std::complex<double>>;

/// a_N = N^{-s1} H_{(s2..sr)}(N-1); a_0 = 0 unless s is empty (then Li = 1).
template <typename Scalar>
TaylorTrunc<Scalar> li_taylor_coeffs(const SignedIndex &s, std::size_t n_cap)
{
    using T = ScalarTraits<Scalar>;
    // Same prefix recurrence as the harmonic sums, over the chosen scalar.
    std::vector<Scalar> level(n_cap + 1, T::from_int(1));
    std::vector<Scalar> a(n_cap + 1, T::from_int(0));
    if (s.entries.empty()) {
        a[0] = T::from_int(1);
        return TaylorTrunc<Scalar>(std::move(a));
    }
    for (std::size_t i = s.entries.size(); i-- > 1;) {
        std::vector<Scalar> next(n_cap + 1, T::from_int(0));
        for (std::size_t n = 1; n <= n_cap; ++n) {
            next[n] = next[n - 1] + T::inverse_power(n, s.entries[i]) * level[n - 1];
        }
        level = std::move(next);
    }
    for (std::size_t n = 1; n <= n_cap; ++n) {
        a[n] = T::inverse_power(n, s.entries[0]) * level[n - 1];
    }
    return TaylorTrunc<Scalar>(std::move(a));
}

ExactTaylor li_taylor_coeffs(const SignedIndex &s, std::size_t n_cap);
/// Linear extension over an X polynomial; every word must be empty or end in x1.
ExactTaylor li_taylor_coeffs(const NCPoly &p, std::size_t n_cap);

/// Li_s(z) to within eps for |z| <= 0.995.
///
/// The truncation point M comes from |a_n| <= n^σ, σ = r + Σ max(0, -s_i):
/// the tail Σ_{n>M} n^σ |z|^n is bounded by its first term over (1 - ratio)
/// once the term ratio is below one, and M is doubled until that bound is
/// <= eps. Rounding error of the double-precision sum is not included.
std::complex<double> li_eval(const SignedIndex &s, std::complex<double> z, double eps);

inline constexpr double li_eval_max_modulus = 0.995;
inline constexpr std::size_t li_eval_max_terms = std::size_t{1} << 24;

/// b_N = Σ_{n<=N} a_n, the coefficients of A(z)/(1-z).
template <typename Scalar>
TaylorTrunc<Scalar> div_one_minus_z(const TaylorTrunc<Scalar> &a)
{
    TaylorTrunc<Scalar> b = a;
    for (std::size_t n = 1; n <= b.cap(); ++n) {
        b[n] = b[n - 1] + a[n];
    }
    return b;
}

/// c_N = a_N b_N.
template <typename Scalar>
TaylorTrunc<Scalar> hadamard(const TaylorTrunc<Scalar> &a, const TaylorTrunc<Scalar> &b)
{
    a.require_same_cap(b);
    TaylorTrunc<Scalar> c = a;
    for (std::size_t n = 0; n <= c.cap(); ++n) {
        c[n] = a[n] * b[n];
    }
    return c;
}

/// Product of the two series, truncated to the common cap.
template <typename Scalar>
TaylorTrunc<Scalar> cauchy(const TaylorTrunc<Scalar> &a, const TaylorTrunc<Scalar> &b)
{
    a.require_same_cap(b);
    TaylorTrunc<Scalar> c(a.cap());
    for (std::size_t i = 0; i <= a.cap(); ++i) {
        if (a[i] == Scalar{}) {
            continue;
        }
        for (std::size_t j = 0; i + j <= a.cap(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

/// Li_{π_X u}/(1-z) ⊙ Li_{π_X v}/(1-z) = Li_{π_X(u ⊔⊔ v)}/(1-z), exactly up to n_cap.
bool check_hadamard_identity(const Word &u, const Word &v, std::size_t n_cap);

/// Li_u Li_v = Li_{u ⧢ v} on Taylor coefficients up to n_cap. u and v must be
/// empty or end in x1 (domain error otherwise).
bool check_shuffle_morphism(const Word &u, const Word &v, std::size_t n_cap);

/// θ Li_{s1,...} = Li_{s1-1,...} coefficientwise (N a_N = a'_N), and when
/// s1 = 1 and r > 1 also (1-z) d/dz Li_{1,s2..} = Li_{s2..}, i.e.
/// (N+1) a_{N+1} - N a_N = b_N. Empty s is a domain error.
bool check_derivative_recursion(const SignedIndex &s, std::size_t n_cap);

/// x1 + x1^2 + ... + x1^{len_cap}.
NCPoly x1plus_truncated(unsigned len_cap);

/// S2(n, m) from S2(n, m) = m S2(n-1, m) + S2(n-1, m-1), S2(0, 0) = 1.
BigInt stirling2(unsigned n, unsigned m);

/// <(x1^+)^{⧢m} | x1^n> = m! S2(n, m) for n <= n_max, m <= m_max, and the
/// exponential generating function Σ_n m! S2(n,m) x^n/n! = (e^x - 1)^m to
/// order n_max.
bool check_surjection_lemma(unsigned n_max, unsigned m_max);

/// Partial sums of M(r) = Σ_m t^m (r/(1-r))^m for the family
/// S(t) = Σ_m t^m (x1^+)^{⧢m}, which lies in Dom_R exactly for R < 1/(t+1).
struct DomRadiusReport {
    Rat t;
    Rat r;
    std::size_t m_cap;
    Rat ratio;                      // t r / (1 - r)
    std::vector<Rat> partial_sums;  // M_0 .. M_{m_cap}
    bool converges;                 // ratio < 1, i.e. r < 1/(t+1)
    std::optional<Rat> closed_form; // (1-r)/(1-(t+1)r) when converging
    std::optional<Rat> tail_bound;  // ratio^{m_cap+1}/(1-ratio) when converging
    bool within_bound;              // |closed - M_{m_cap}| <= tail bound
    bool terms_nondecreasing;       // when diverging
};

DomRadiusReport dom_radius_demo(const Rat &t, const Rat &r, std::size_t m_cap);

} // namespace polystuffle

#endif
