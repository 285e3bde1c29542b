#include <polystuffle/coding.hpp>
#include <polystuffle/polylog_num.hpp>
#include <polystuffle/products.hpp>

#include <cmath>

namespace polystuffle
{

ExactTaylor li_taylor_coeffs(const SignedIndex &s, std::size_t n_cap)
{
    return li_taylor_coeffs<Rat>(s, n_cap);
}

namespace
{

void require_regular(const Word &w)
{
    if (!in_image_of_pi_X(w)) {
        throw Error(Errc::domain, "word '" + w.str() + "' ends with x0; Li is taken on Q<X>x1 + Q.1 only");
    }
}

} // namespace

ExactTaylor li_taylor_coeffs(const NCPoly &p, std::size_t n_cap)
{
    if (p.alphabet() != Alphabet::X) {
        throw Error(Errc::alphabet_mismatch, "Li is indexed by X polynomials");
    }
    ExactTaylor out(n_cap);
    for (const auto &[w, c] : p.terms()) {
        require_regular(w);
        out += li_taylor_coeffs(SignedIndex{index_from_word(w)}, n_cap).scaled(c);
    }
    return out;
}

std::complex<double> li_eval(const SignedIndex &s, std::complex<double> z, double eps)
{
    if (!(eps > 0.0)) {
        throw Error(Errc::invalid_argument, "eps must be positive");
    }
    const double rho = std::abs(z);
    if (!(rho <= li_eval_max_modulus)) {
        throw Error(Errc::domain, "li_eval is limited to |z| <= 0.995");
    }
    if (s.entries.empty()) {
        return {1.0, 0.0};
    }
    if (rho == 0.0) {
        return {0.0, 0.0};
    }
    double sigma = static_cast<double>(s.entries.size());
    for (int si : s.entries) {
        if (si < 0) {
            sigma += -si;
        }
    }
    const double log_rho = std::log(rho);
    const double log_eps = std::log(eps);
    std::size_t m = 16;
    for (;;) {
        const double n1 = static_cast<double>(m + 1);
        const double ratio = std::pow((n1 + 1.0) / n1, sigma) * rho;
        if (ratio < 1.0) {
            const double log_bound = sigma * std::log(n1) + n1 * log_rho - std::log1p(-ratio);
            if (log_bound <= log_eps) {
                break;
            }
        }
        if (m >= li_eval_max_terms) {
            throw Error(Errc::precision_unattainable,
                        "requested eps needs more than 2^24 terms at this |z|");
        }
        m *= 2;
    }
    const FloatTaylor a = li_taylor_coeffs<std::complex<double>>(s, m);
    // Horner from the top keeps the small tail terms from being swamped.
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t n = m + 1; n-- > 0;) {
        acc = acc * z + a[n];
    }
    return acc;
}

bool check_hadamard_identity(const Word &u, const Word &v, std::size_t n_cap)
{
    auto lhs = hadamard(div_one_minus_z(li_taylor_coeffs(pi_X(NCPoly(u)), n_cap)),
                        div_one_minus_z(li_taylor_coeffs(pi_X(NCPoly(v)), n_cap)));
    auto rhs = div_one_minus_z(li_taylor_coeffs(pi_X(stuffle(u, v)), n_cap));
    return lhs == rhs;
}

bool check_shuffle_morphism(const Word &u, const Word &v, std::size_t n_cap)
{
    require_regular(u);
    require_regular(v);
    auto lhs = cauchy(li_taylor_coeffs(NCPoly(u), n_cap), li_taylor_coeffs(NCPoly(v), n_cap));
    auto rhs = li_taylor_coeffs(shuffle(u, v), n_cap);
    return lhs == rhs;
}

bool check_derivative_recursion(const SignedIndex &s, std::size_t n_cap)
{
    if (s.entries.empty()) {
        throw Error(Errc::domain, "the derivative recursion needs a nonempty index");
    }
    const ExactTaylor a = li_taylor_coeffs(s, n_cap + 1);

    SignedIndex lowered = s;
    lowered.entries[0] -= 1;
    const ExactTaylor a_lowered = li_taylor_coeffs(lowered, n_cap);
    for (std::size_t n = 0; n <= n_cap; ++n) {
        if (Rat(static_cast<long>(n)) * a[n] != a_lowered[n]) {
            return false;
        }
    }

    if (s.entries[0] == 1 && s.entries.size() > 1) {
        SignedIndex tail{std::vector<int>(s.entries.begin() + 1, s.entries.end())};
        const ExactTaylor b = li_taylor_coeffs(tail, n_cap);
        for (std::size_t n = 0; n <= n_cap; ++n) {
            Rat lhs = Rat(static_cast<long>(n + 1)) * a[n + 1] - Rat(static_cast<long>(n)) * a[n];
            if (lhs != b[n]) {
                return false;
            }
        }
    }
    return true;
}

BigInt stirling2(unsigned n, unsigned m)
{
    if (m > n) {
        return 0;
    }
    // row[j] = S2(i, j) for the current i.
    std::vector<BigInt> row(m + 1, BigInt(0));
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, m); j >= 1; --j) {
            row[j] = BigInt(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[m];
}

bool check_surjection_lemma(unsigned n_max, unsigned m_max)
{
    // x1^+ = x1 x1*, truncated at length n_max.
    const NCPoly plus = x1plus_truncated(n_max);
    NCPoly power = NCPoly::one(Alphabet::X);
    // (e^x - 1)^m as a truncated power series.
    std::vector<Rat> expm1(n_max + 1);
    for (unsigned n = 1; n <= n_max; ++n) {
        expm1[n] = Rat(BigInt(1), factorial(n));
    }
    std::vector<Rat> egf(n_max + 1);
    egf[0] = Rat(1);

    for (unsigned m = 0; m <= m_max; ++m) {
        if (m > 0) {
            power = shuffle(power, plus, n_max);
            std::vector<Rat> next(n_max + 1);
            for (unsigned i = 0; i <= n_max; ++i) {
                for (unsigned j = 1; i + j <= n_max; ++j) {
                    next[i + j] += egf[i] * expm1[j];
                }
            }
            egf = std::move(next);
        }
        const BigInt m_fact = factorial(m);
        std::vector<std::uint32_t> letters;
        for (unsigned n = 0; n <= n_max; ++n) {
            const BigInt expected = m_fact * stirling2(n, m);
            if (power.coeff_of(Word(Alphabet::X, letters)) != Rat(expected)) {
                return false;
            }
            if (egf[n] * Rat(factorial(n)) != Rat(expected)) {
                return false;
            }
            letters.push_back(1u);
        }
    }
    return true;
}

NCPoly x1plus_truncated(unsigned len_cap)
{
    NCPoly out(Alphabet::X);
    std::vector<std::uint32_t> letters;
    for (unsigned n = 1; n <= len_cap; ++n) {
        letters.push_back(1u);
        out.add_term(Word(Alphabet::X, letters), Rat(1));
    }
    return out;
}

DomRadiusReport dom_radius_demo(const Rat &t, const Rat &r, std::size_t m_cap)
{
    if (t.sign() < 0) {
        throw Error(Errc::invalid_argument, "t must be >= 0");
    }
    if (r.sign() <= 0 || r >= Rat(1)) {
        throw Error(Errc::domain, "r must lie in (0, 1)");
    }
    DomRadiusReport rep{t, r, m_cap, t * r / (Rat(1) - r), {}, false, std::nullopt, std::nullopt, false, false};
    Rat term(1);
    Rat sum;
    for (std::size_t m = 0; m <= m_cap; ++m) {
        sum += term;
        rep.partial_sums.push_back(sum);
        term *= rep.ratio;
    }
    rep.converges = rep.ratio < Rat(1);
    if (rep.converges) {
        rep.closed_form = (Rat(1) - r) / (Rat(1) - (t + Rat(1)) * r);
        rep.tail_bound = rep.ratio.pow(static_cast<long>(m_cap + 1)) / (Rat(1) - rep.ratio);
        Rat gap = *rep.closed_form - sum;
        rep.within_bound = gap.sign() >= 0 && gap <= *rep.tail_bound;
    } else {
        rep.terms_nondecreasing = true;
    }
    return rep;
}

} // namespace polystuffle
