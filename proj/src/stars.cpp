#include <polystuffle/error.hpp>
#include <polystuffle/products.hpp>
#include <polystuffle/stars.hpp>

#include <algorithm>

namespace polystuffle
{

X1StarPoly X1StarPoly::star(unsigned long k, const Rat &c)
{
    X1StarPoly p;
    p.add_term(k, c);
    return p;
}

Rat X1StarPoly::coeff(unsigned long k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

void X1StarPoly::add_term(unsigned long k, const Rat &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

X1StarPoly &X1StarPoly::operator+=(const X1StarPoly &rhs)
{
    for (const auto &[k, c] : rhs.terms_) {
        add_term(k, c);
    }
    return *this;
}

X1StarPoly &X1StarPoly::operator-=(const X1StarPoly &rhs)
{
    for (const auto &[k, c] : rhs.terms_) {
        add_term(k, -c);
    }
    return *this;
}

X1StarPoly &X1StarPoly::operator*=(const Rat &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

NCPoly X1StarPoly::expand(std::size_t len_cap) const
{
    NCPoly out(Alphabet::X);
    for (const auto &[k, c] : terms_) {
        out += c * x1star_expand(k, len_cap);
    }
    return out;
}

std::string X1StarPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[k, c] = *it;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += "star(" + std::to_string(k) + ")";
        } else {
            out += mag.str() + "*star(" + std::to_string(k) + ")";
        }
    }
    return out;
}

X1StarPoly shuffle(const X1StarPoly &a, const X1StarPoly &b)
{
    X1StarPoly out;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            out.add_term(ka + kb, ca * cb);
        }
    }
    return out;
}

NCPoly x1star_expand(unsigned long k, std::size_t len_cap)
{
    NCPoly out(Alphabet::X);
    std::vector<std::uint32_t> letters;
    Rat power(1);
    for (std::size_t n = 0; n <= len_cap; ++n) {
        out.add_term(Word(Alphabet::X, letters), power);
        letters.push_back(1u);
        power *= Rat(BigInt(k));
        if (power.is_zero()) {
            break;
        }
    }
    return out;
}

bool check_kstar_shuffle_power(unsigned long k, std::size_t len_cap)
{
    if (k == 0) {
        throw Error(Errc::invalid_argument, "check_kstar_shuffle_power needs k >= 1");
    }
    NCPoly lhs = x1star_expand(k, len_cap);
    NCPoly rhs = shuffle_pow(x1star_expand(1, len_cap), static_cast<long>(k), len_cap);
    return lhs == rhs;
}

std::string PlaneStar::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < base.alpha.size(); ++i) {
        out += (i ? "," : "") + base.alpha[i].str();
    }
    return out + "]*";
}

bool PlaneStar::same_series(const PlaneStar &other) const
{
    std::size_t n = std::max(s_max(), other.s_max());
    for (std::size_t s = 1; s <= n; ++s) {
        if (base.at(s) != other.base.at(s)) {
            return false;
        }
    }
    return true;
}

PlaneStar plane_star_stuffle(const PlaneStar &a, const PlaneStar &b)
{
    const std::size_t n_max = a.s_max() + b.s_max();
    std::vector<Rat> c(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rat v = a.base.at(n) + b.base.at(n);
        for (std::size_t i = 1; i < n; ++i) {
            v += a.base.at(i) * b.base.at(n - i);
        }
        c[n - 1] = v;
    }
    return PlaneStar{PlaneElement{std::move(c)}};
}

PlaneStar plane_star_inverse(const PlaneStar &a, std::size_t s_max_out)
{
    // (1 + S)(1 + T) = 1  =>  t_n = -s_n - Σ_{i=1}^{n-1} s_i t_{n-i}.
    std::vector<Rat> t(s_max_out);
    for (std::size_t n = 1; n <= s_max_out; ++n) {
        Rat v = -a.base.at(n);
        for (std::size_t i = 1; i < n; ++i) {
            v -= a.base.at(i) * t[n - i - 1];
        }
        t[n - 1] = v;
    }
    return PlaneStar{PlaneElement{std::move(t)}};
}

NCPoly plane_star_expand(const PlaneStar &a, std::size_t weight_cap)
{
    // by_weight[w] collects the words of weight exactly w.
    std::vector<NCPoly> by_weight(weight_cap + 1, NCPoly(Alphabet::Y));
    by_weight[0] = NCPoly::one(Alphabet::Y);
    for (std::size_t w = 1; w <= weight_cap; ++w) {
        for (std::size_t s = 1; s <= std::min(w, a.s_max()); ++s) {
            const Rat &alpha = a.base.alpha[s - 1];
            if (alpha.is_zero()) {
                continue;
            }
            for (const auto &[tail, c] : by_weight[w - s].terms()) {
                by_weight[w].add_term(tail.prepend(static_cast<std::uint32_t>(s)), alpha * c);
            }
        }
    }
    NCPoly out(Alphabet::Y);
    for (const auto &p : by_weight) {
        out += p;
    }
    return out;
}

NCPoly one_param_group(const QSeriesTrunc &t, const Rat &z, std::size_t weight_cap)
{
    // e = exp(zT) as a power series in q, from e' = (zT)' e:
    // n e_n = Σ_{k=1}^{n} k (z t_k) e_{n-k}.
    std::vector<Rat> e(weight_cap + 1);
    e[0] = Rat(1);
    for (std::size_t n = 1; n <= weight_cap; ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= std::min(n, t.s_max()); ++k) {
            acc += Rat(static_cast<long>(k)) * z * t.coeffs[k - 1] * e[n - k];
        }
        e[n] = acc / Rat(static_cast<long>(n));
    }
    QSeriesTrunc shifted{std::vector<Rat>(e.begin() + 1, e.end())};
    return plane_star_expand(PlaneStar{umbra_to_plane(shifted)}, weight_cap);
}

bool ykstar_exp_identity(unsigned long k, const Rat &z, std::size_t weight_cap)
{
    if (k == 0) {
        throw Error(Errc::invalid_argument, "ykstar_exp_identity needs k >= 1");
    }
    std::vector<Rat> alpha(k);
    alpha[k - 1] = z;
    NCPoly lhs = plane_star_expand(PlaneStar{PlaneElement{alpha}}, weight_cap);

    NCPoly log_side(Alphabet::Y);
    Rat neg_z_pow(1);
    for (unsigned long n = 1; n * k <= weight_cap; ++n) {
        neg_z_pow *= -z;
        Word y_nk(Alphabet::Y, {static_cast<std::uint32_t>(n * k)});
        log_side.add_term(y_nk, -neg_z_pow / Rat(static_cast<long>(n)));
    }
    NCPoly rhs = exp_stuffle(log_side, weight_cap);
    return lhs == rhs;
}

std::complex<double> LetterStarLi::eval(std::complex<double> z) const
{
    std::complex<double> v(1.0, 0.0);
    if (!alpha.is_zero()) {
        v *= std::pow(z, alpha.to_double());
    }
    if (!beta.is_zero()) {
        v *= std::pow(1.0 - z, -beta.to_double());
    }
    return v;
}

LetterStarLi letter_star_li(const Rat &alpha, const Rat &beta)
{
    return LetterStarLi{alpha, beta};
}

} // namespace polystuffle
