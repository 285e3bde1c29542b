#include <polystuffle/error.hpp>
#include <polystuffle/negindex.hpp>
#include <polystuffle/products.hpp>

#include <algorithm>

namespace polystuffle
{

namespace
{

using Dense = std::vector<Rat>;

void trim(Dense &p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

Rat eval_at_one(const Dense &p)
{
    Rat s;
    for (const auto &c : p) {
        s += c;
    }
    return s;
}

// p / (1 - z), assuming p(1) = 0.
Dense divide_one_minus_z(const Dense &p)
{
    // p = (1 - z) q  <=>  q = -(p / (z - 1)); synthetic division at 1.
    const std::size_t n = p.size();
    Dense q(n - 1);
    Rat carry;
    for (std::size_t i = n; i-- > 1;) {
        carry += p[i];
        q[i - 1] = -carry;
    }
    return q;
}

Dense multiply(const Dense &a, const Dense &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

RatFuncAtOne::RatFuncAtOne(std::vector<Rat> numerator, std::size_t pole_order)
    : num_(std::move(numerator)), pole_(pole_order)
{
    trim(num_);
    if (num_.empty()) {
        pole_ = 0;
        return;
    }
    while (pole_ > 0 && eval_at_one(num_).is_zero()) {
        num_ = divide_one_minus_z(num_);
        trim(num_);
        --pole_;
    }
}

std::vector<Rat> RatFuncAtOne::taylor(std::size_t n_cap) const
{
    // 1/(1-z)^m = Σ_n binom(n+m-1, m-1) z^n.
    std::vector<Rat> series(n_cap + 1);
    for (std::size_t n = 0; n <= n_cap; ++n) {
        series[n] = pole_ == 0 ? Rat(n == 0 ? 1 : 0) : Rat(binomial(n + pole_ - 1, pole_ - 1));
    }
    std::vector<Rat> out(n_cap + 1);
    for (std::size_t i = 0; i < num_.size() && i <= n_cap; ++i) {
        for (std::size_t n = i; n <= n_cap; ++n) {
            out[n] += num_[i] * series[n - i];
        }
    }
    return out;
}

std::string RatFuncAtOne::str() const
{
    if (num_.empty()) {
        return "0";
    }
    std::string p;
    bool first = true;
    std::size_t monomials = 0;
    for (std::size_t i = num_.size(); i-- > 0;) {
        const Rat &c = num_[i];
        if (c.is_zero()) {
            continue;
        }
        Rat mag = c.sign() < 0 ? -c : c;
        p += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        ++monomials;
        std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (mono.empty()) {
            p += mag.str();
        } else if (mag == Rat(1)) {
            p += mono;
        } else {
            p += mag.str() + "*" + mono;
        }
    }
    if (pole_ == 0) {
        return p;
    }
    if (monomials > 1 || p.front() == '-') {
        p = "(" + p + ")";
    }
    return p + "/(1-z)" + (pole_ == 1 ? "" : "^" + std::to_string(pole_));
}

RatFuncAtOne theta_derivative(const RatFuncAtOne &f)
{
    if (f.is_zero()) {
        return f;
    }
    // (p/(1-z)^m)' = (p'(1-z) + m p) / (1-z)^{m+1}; then multiply by z.
    const Dense &p = f.numerator();
    const std::size_t m = f.pole_order();
    Dense dp(p.size() > 1 ? p.size() - 1 : 0);
    for (std::size_t i = 1; i < p.size(); ++i) {
        dp[i - 1] = Rat(static_cast<long>(i)) * p[i];
    }
    Dense inner = multiply(dp, Dense{Rat(1), Rat(-1)});
    inner.resize(std::max(inner.size(), p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        inner[i] += Rat(static_cast<long>(m)) * p[i];
    }
    Dense shifted(inner.size() + 1);
    std::copy(inner.begin(), inner.end(), shifted.begin() + 1);
    return RatFuncAtOne(std::move(shifted), m + 1);
}

RatFuncAtOne li_nonpositive(std::span<const int> s)
{
    for (int si : s) {
        if (si > 0) {
            throw Error(Errc::invalid_index,
                        "li_nonpositive needs indices <= 0, got " + std::to_string(si));
        }
    }
    RatFuncAtOne f = RatFuncAtOne::constant(Rat(1));
    for (std::size_t i = s.size(); i-- > 0;) {
        Dense num = f.numerator();
        num.insert(num.begin(), Rat(0));
        f = RatFuncAtOne(std::move(num), f.pole_order() + 1);
        for (int k = 0; k < -s[i]; ++k) {
            f = theta_derivative(f);
        }
    }
    return f;
}

X1StarPoly ratfunc_to_x1star(const RatFuncAtOne &f)
{
    const Dense &p = f.numerator();
    const std::size_t m = f.pole_order();
    if (!p.empty() && p.size() - 1 > m) {
        throw Error(Errc::not_representable,
                    "numerator degree exceeds the pole order; not a combination of (k x1)*");
    }
    // Expand p(1 - u) = Σ_j b_j u^j by Horner in the polynomial (1 - u).
    Dense in_u;
    for (std::size_t i = p.size(); i-- > 0;) {
        in_u = multiply(in_u, Dense{Rat(1), Rat(-1)});
        if (in_u.empty()) {
            in_u.push_back(Rat(0));
        }
        in_u[0] += p[i];
    }
    // f = Σ_j b_j u^{j-m} = Σ_j b_j (1-z)^{-(m-j)}.
    X1StarPoly out;
    for (std::size_t j = 0; j < in_u.size(); ++j) {
        out.add_term(m - j, in_u[j]);
    }
    return out;
}

namespace
{

std::size_t trailing_x0(const Word &w)
{
    std::size_t k = 0;
    for (std::size_t i = w.size(); i-- > 0 && w[i] == 0;) {
        ++k;
    }
    return k;
}

} // namespace

std::map<std::size_t, NCPoly> regularize_trailing_x0(const NCPoly &p)
{
    if (p.alphabet() != Alphabet::X) {
        throw Error(Errc::alphabet_mismatch, "regularize_trailing_x0 works on X polynomials");
    }
    // Rewrite c·v x0^k (v empty or ending in x1) as (c/k!) v ⧢ x0^{⧢k} minus
    // the other interleavings of v ⧢ x0^k, all of which have fewer trailing x0.
    std::map<std::size_t, NCPoly> result;
    NCPoly rest = p;
    for (;;) {
        std::size_t k_max = 0;
        for (const auto &[w, c] : rest.terms()) {
            k_max = std::max(k_max, trailing_x0(w));
        }
        if (k_max == 0) {
            break;
        }
        std::vector<std::pair<Word, Rat>> batch;
        for (const auto &[w, c] : rest.terms()) {
            if (trailing_x0(w) == k_max) {
                batch.emplace_back(w, c);
            }
        }
        const Word x0k(Alphabet::X, std::vector<std::uint32_t>(k_max, 0u));
        const Rat inv_fact(BigInt(1), factorial(k_max));
        auto [slot, _] = result.try_emplace(k_max, NCPoly(Alphabet::X));
        for (const auto &[w, c] : batch) {
            Word head(Alphabet::X, std::vector<std::uint32_t>(w.letters().begin(), w.letters().end() - k_max));
            slot->second.add_term(head, c * inv_fact);
            rest -= c * shuffle(head, x0k);
        }
    }
    if (!rest.is_zero()) {
        result[0] += rest;
    }
    std::erase_if(result, [](const auto &kv) { return kv.second.is_zero(); });
    return result;
}

} // namespace polystuffle
