#include <polystuffle/error.hpp>
#include <polystuffle/products.hpp>

#include <vector>

namespace polystuffle
{

namespace
{

enum class Kind { shuffle, stuffle };

// Word-level product by dynamic programming over suffix pairs:
// table[i][j] holds u[i:] * v[j:], filled from the ends backwards, so each
// subproduct of the recursion is computed once.
NCPoly word_product(const Word &u, const Word &v, Kind kind)
{
    const Alphabet a = u.alphabet();
    const std::size_t m = u.size();
    const std::size_t n = v.size();
    std::vector<std::vector<NCPoly>> table(m + 1, std::vector<NCPoly>(n + 1, NCPoly(a)));
    for (std::size_t i = 0; i <= m; ++i) {
        table[i][n] = NCPoly(u.suffix(i));
    }
    for (std::size_t j = 0; j <= n; ++j) {
        table[m][j] = NCPoly(v.suffix(j));
    }
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n; j-- > 0;) {
            NCPoly cell(a);
            for (const auto &[w, c] : table[i + 1][j].terms()) {
                cell.add_term(w.prepend(u[i]), c);
            }
            for (const auto &[w, c] : table[i][j + 1].terms()) {
                cell.add_term(w.prepend(v[j]), c);
            }
            if (kind == Kind::stuffle) {
                for (const auto &[w, c] : table[i + 1][j + 1].terms()) {
                    cell.add_term(w.prepend(u[i] + v[j]), c);
                }
            }
            table[i][j] = std::move(cell);
        }
    }
    return std::move(table[0][0]);
}

template <typename WordOp>
NCPoly bilinear(const NCPoly &p, const NCPoly &q, DegreeCap cap, WordOp op)
{
    NCPoly out(p.alphabet());
    for (const auto &[u, cu] : p.terms()) {
        for (const auto &[v, cv] : q.terms()) {
            if (cap && u.degree() + v.degree() > *cap) {
                continue;
            }
            out += (cu * cv) * op(u, v);
        }
    }
    return out;
}

void require_same(const NCPoly &p, const NCPoly &q, const char *what)
{
    if (p.alphabet() != q.alphabet()) {
        throw Error(Errc::alphabet_mismatch, std::string(what) + ": operands use different alphabets");
    }
}

void require_y(const NCPoly &p, const char *what)
{
    if (p.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, std::string(what) + " is defined on Y polynomials only");
    }
}

template <typename Product>
NCPoly power(const NCPoly &p, long k, DegreeCap cap, Product prod)
{
    if (k < 0) {
        throw Error(Errc::invalid_argument, "negative product power");
    }
    NCPoly result = NCPoly::one(p.alphabet());
    NCPoly base = cap ? p.truncated(*cap) : p;
    // Square-and-multiply is valid since both products are commutative and associative.
    while (k > 0) {
        if (k & 1) {
            result = prod(result, base, cap);
        }
        k >>= 1;
        if (k > 0) {
            base = prod(base, base, cap);
        }
    }
    return result;
}

} // namespace

NCPoly conc(const NCPoly &p, const NCPoly &q, DegreeCap cap)
{
    require_same(p, q, "conc");
    return bilinear(p, q, cap, [](const Word &u, const Word &v) { return NCPoly(u + v); });
}

NCPoly shuffle(const Word &u, const Word &v)
{
    if (u.alphabet() != v.alphabet()) {
        throw Error(Errc::alphabet_mismatch, "shuffle: operands use different alphabets");
    }
    return word_product(u, v, Kind::shuffle);
}

NCPoly stuffle(const Word &u, const Word &v)
{
    if (u.alphabet() != Alphabet::Y || v.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, "stuffle is defined on Y words only");
    }
    return word_product(u, v, Kind::stuffle);
}

NCPoly shuffle(const NCPoly &p, const NCPoly &q, DegreeCap cap)
{
    require_same(p, q, "shuffle");
    return bilinear(p, q, cap, [](const Word &u, const Word &v) { return word_product(u, v, Kind::shuffle); });
}

NCPoly stuffle(const NCPoly &p, const NCPoly &q, DegreeCap cap)
{
    require_y(p, "stuffle");
    require_y(q, "stuffle");
    return bilinear(p, q, cap, [](const Word &u, const Word &v) { return word_product(u, v, Kind::stuffle); });
}

NCPoly shuffle_pow(const NCPoly &p, long k, DegreeCap cap)
{
    return power(p, k, cap, [](const NCPoly &a, const NCPoly &b, DegreeCap c) { return shuffle(a, b, c); });
}

NCPoly stuffle_pow(const NCPoly &p, long k, DegreeCap cap)
{
    require_y(p, "stuffle_pow");
    return power(p, k, cap, [](const NCPoly &a, const NCPoly &b, DegreeCap c) { return stuffle(a, b, c); });
}

NCPoly exp_stuffle(const NCPoly &p, std::size_t weight_cap)
{
    require_y(p, "exp_stuffle");
    if (!p.constant_term().is_zero()) {
        throw Error(Errc::nonzero_constant, "exp_stuffle needs a series without constant term");
    }
    const NCPoly base = p.truncated(weight_cap);
    NCPoly result = NCPoly::one(Alphabet::Y);
    NCPoly term = NCPoly::one(Alphabet::Y);
    for (std::size_t n = 1; n <= weight_cap && !term.is_zero(); ++n) {
        term = Rat(BigInt(1), BigInt(static_cast<unsigned long>(n))) * stuffle(term, base, weight_cap);
        result += term;
    }
    return result;
}

} // namespace polystuffle
