#include <polystuffle/coding.hpp>
#include <polystuffle/error.hpp>
#include <polystuffle/harmonic.hpp>
#include <polystuffle/negindex.hpp>
#include <polystuffle/products.hpp>

#include <algorithm>
#include <charconv>

namespace polystuffle
{

bool SignedIndex::all_nonpositive() const
{
    return std::all_of(entries.begin(), entries.end(), [](int s) { return s <= 0; });
}

std::string SignedIndex::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += (i ? "," : "") + std::to_string(entries[i]);
    }
    return out + ")";
}

SignedIndex SignedIndex::parse(std::string_view text)
{
    std::string body;
    for (char c : text) {
        if (c != ' ') {
            body.push_back(c);
        }
    }
    std::string_view v = body;
    if (!v.empty() && v.front() == '(') {
        if (v.back() != ')') {
            throw Error(Errc::parse, "unbalanced parenthesis in index '" + std::string(text) + "'");
        }
        v = v.substr(1, v.size() - 2);
    }
    SignedIndex out;
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto comma = v.find(',', pos);
        auto piece = v.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (!piece.empty() && piece[0] == '+') {
            piece.remove_prefix(1);
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
            throw Error(Errc::parse, "malformed index list '" + std::string(text) + "'");
        }
        out.entries.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
        if (pos == v.size()) {
            throw Error(Errc::parse, "trailing comma in index list '" + std::string(text) + "'");
        }
    }
    return out;
}

NPoly::NPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rat NPoly::operator()(const Rat &n) const
{
    Rat acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * n + coeffs_[i];
    }
    return acc;
}

NPoly &NPoly::operator+=(const NPoly &rhs)
{
    std::vector<Rat> c = coeffs_;
    c.resize(std::max(c.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        c[i] += rhs.coeffs_[i];
    }
    *this = NPoly(std::move(c));
    return *this;
}

NPoly &NPoly::operator*=(const NPoly &rhs)
{
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        *this = NPoly();
        return *this;
    }
    std::vector<Rat> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    *this = NPoly(std::move(c));
    return *this;
}

NPoly operator*(const Rat &c, const NPoly &p)
{
    std::vector<Rat> out = p.coeffs_;
    for (auto &v : out) {
        v *= c;
    }
    return NPoly(std::move(out));
}

std::string NPoly::str() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat &c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        Rat mag = c.sign() < 0 ? -c : c;
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? "N" : "N^" + std::to_string(i));
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

namespace
{

Rat inverse_power(std::size_t n, int s)
{
    return Rat(static_cast<long>(n)).pow(-static_cast<long>(s));
}

} // namespace

std::vector<Rat> h_signed_table(const SignedIndex &s, std::size_t n_max)
{
    // level holds H_{(s_i, ..., s_r)}(0..n_max), built from the innermost sum out.
    std::vector<Rat> level(n_max + 1, Rat(1));
    for (std::size_t i = s.entries.size(); i-- > 0;) {
        std::vector<Rat> next(n_max + 1);
        for (std::size_t n = 1; n <= n_max; ++n) {
            next[n] = next[n - 1];
            if (!level[n - 1].is_zero()) {
                next[n] += inverse_power(n, s.entries[i]) * level[n - 1];
            }
        }
        level = std::move(next);
    }
    return level;
}

Rat h_signed_eval(const SignedIndex &s, std::size_t n)
{
    return h_signed_table(s, n)[n];
}

Rat h_word_eval(const Word &w, std::size_t n)
{
    return h_signed_eval(SignedIndex{y_indices(w)}, n);
}

std::vector<Rat> h_poly_table(const NCPoly &q, std::size_t n_max)
{
    if (q.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, "harmonic sums are indexed by Y polynomials");
    }
    std::vector<Rat> out(n_max + 1);
    for (const auto &[w, c] : q.terms()) {
        if (w.size() > n_max) {
            // Depth exceeds every N in range: identically zero here.
            continue;
        }
        auto table = h_signed_table(SignedIndex{y_indices(w)}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out[n] += c * table[n];
        }
    }
    return out;
}

Rat h_poly_eval(const NCPoly &q, std::size_t n)
{
    return h_poly_table(q, n)[n];
}

NPoly h_x1star_closed_form(const X1StarPoly &s)
{
    NPoly out;
    for (const auto &[k, c] : s.terms()) {
        // binom(N+k, k) = Π_{j=1}^{k} (N + j)/j
        NPoly b(std::vector<Rat>{Rat(1)});
        for (unsigned long j = 1; j <= k; ++j) {
            Rat inv_j(BigInt(1), BigInt(j));
            b *= NPoly(std::vector<Rat>{Rat(static_cast<long>(j)) * inv_j, inv_j});
        }
        out += c * b;
    }
    return out;
}

std::vector<Rat> h_x1star_table(const X1StarPoly &s, std::size_t n_max)
{
    return h_poly_table(pi_Y(s.expand(n_max)), n_max);
}

NPoly h_negindex_closed_form(std::span<const int> s)
{
    return h_x1star_closed_form(ratfunc_to_x1star(li_nonpositive(s)));
}

bool h_stuffle_check(const Word &u, const Word &v, std::size_t n_max)
{
    auto lhs = h_poly_table(stuffle(u, v), n_max);
    auto hu = h_signed_table(SignedIndex{y_indices(u)}, n_max);
    auto hv = h_signed_table(SignedIndex{y_indices(v)}, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (lhs[n] != hu[n] * hv[n]) {
            return false;
        }
    }
    return true;
}

namespace
{

Rat q(long p, long d)
{
    return Rat(BigInt(p), BigInt(d));
}

X1StarPoly stars(std::initializer_list<std::pair<unsigned long, Rat>> terms)
{
    X1StarPoly out;
    for (const auto &[k, c] : terms) {
        out.add_term(k, c);
    }
    return out;
}

Word y(std::initializer_list<std::uint32_t> s)
{
    return Word(Alphabet::Y, s);
}

std::vector<MixedIdentity> build_mixed_identities()
{
    const Word unit(Alphabet::Y);
    const X1StarPoly one = X1StarPoly::constant(Rat(1));
    // Star forms of Li_{-2}, Li_{-2,-2} and the two depth-two subtractions of the
    // last identity come from the negative-index pipeline.
    const X1StarPoly li_m2 = stars({{3, 2}, {2, -3}, {1, 1}});
    const X1StarPoly li_m2m2 = stars({{6, 40}, {5, -132}, {4, 161}, {3, -87}, {2, 19}, {1, -1}});
    // Σ 1/n1 Σ n2^2 Σ n3^2. The commonly quoted coefficients
    // (…, -128/5, 153/4, -82/3, 653/72, -373/360, …) miss the nested sum
    // already at N = 1; these are fitted to the oracle.
    const X1StarPoly s_1m2m2 = stars({{6, q(20, 3)}, {5, q(-132, 5)}, {4, q(161, 4)}, {3, -29},
                                      {2, q(19, 2)}, {1, -1}, {0, q(-1, 60)}});
    const X1StarPoly s_m21m2 =
        stars({{6, q(40, 3)}, {5, -50}, {4, q(427, 6)}, {3, q(-281, 6)}, {2, q(27, 2)}, {1, q(-7, 6)}});
    const std::vector<int> m2m1{-2, -1};
    const std::vector<int> m1m2{-1, -2};

    std::vector<MixedIdentity> ids;
    ids.push_back({"H[1/2*star(2) - star(1) + 1/2] = S(1,-1)",
                   {{1, unit, stars({{2, q(1, 2)}, {1, -1}, {0, q(1, 2)}})}},
                   SignedIndex{{1, -1}},
                   NPoly({0, q(-1, 4), q(1, 4)})});
    ids.push_back({"H[y1 st (star(2) - star(1)) - 1/2*(star(2) - 1)] = S(-1,1)",
                   {{1, y({1}), stars({{2, 1}, {1, -1}})}, {q(-1, 2), unit, stars({{2, 1}, {0, -1}})}},
                   SignedIndex{{-1, 1}},
                   std::nullopt});
    ids.push_back({"H[2/3*star(3) - 3/2*star(2) + star(1) - 1/6] = S(1,-2)",
                   {{1, unit, stars({{3, q(2, 3)}, {2, q(-3, 2)}, {1, 1}, {0, q(-1, 6)}})}},
                   SignedIndex{{1, -2}},
                   NPoly({0, q(-1, 36), q(-1, 12), q(1, 9)})});
    ids.push_back({"H[y1 st (2*star(3) - 3*star(2) + star(1)) - (2/3*star(3) - 1/2*star(2) - 1/6)] = S(-2,1)",
                   {{1, y({1}), li_m2}, {-1, unit, stars({{3, q(2, 3)}, {2, q(-1, 2)}, {0, q(-1, 6)}})}},
                   SignedIndex{{-2, 1}},
                   std::nullopt});
    ids.push_back({"H[1/3*star(2) - 5/6*star(1) + 1/2 + 1/6*y1] = S(2,-2)",
                   {{1, unit, stars({{2, q(1, 3)}, {1, q(-5, 6)}, {0, q(1, 2)}})}, {q(1, 6), y({1}), one}},
                   SignedIndex{{2, -2}},
                   std::nullopt});
    ids.push_back({"H[y2 st (2*star(3) - 3*star(2) + star(1)) - (1/3*star(2) + 1/6*star(1) - 1/2 + 1/6*y1)] = S(-2,2)",
                   {{1, y({2}), li_m2},
                    {-1, unit, stars({{2, q(1, 3)}, {1, q(1, 6)}, {0, q(-1, 2)}})},
                    {q(-1, 6), y({1}), one}},
                   SignedIndex{{-2, 2}},
                   std::nullopt});
    ids.push_back({"H[20/3*star(6) - 132/5*star(5) + ... - 1/60] = S(1,-2,-2)",
                   {{1, unit, s_1m2m2}},
                   SignedIndex{{1, -2, -2}},
                   std::nullopt});
    ids.push_back({"H[40/3*star(6) - 50*star(5) + ... - 7/6*star(1)] = S(-2,1,-2)",
                   {{1, unit, s_m21m2}},
                   SignedIndex{{-2, 1, -2}},
                   std::nullopt});
    ids.push_back({"H[y1 st Li(-2,-2) - S(-2,1,-2) - S(1,-2,-2) - S(-2,-1) - S(-1,-2)] = S(-2,-2,1)",
                   {{1, y({1}), li_m2m2},
                    {-1, unit, s_m21m2},
                    {-1, unit, s_1m2m2},
                    {-1, unit, ratfunc_to_x1star(li_nonpositive(m2m1))},
                    {-1, unit, ratfunc_to_x1star(li_nonpositive(m1m2))}},
                   SignedIndex{{-2, -2, 1}},
                   std::nullopt});
    return ids;
}

} // namespace

const std::vector<MixedIdentity> &mixed_identities()
{
    static const std::vector<MixedIdentity> ids = build_mixed_identities();
    return ids;
}

MixedResult verify_mixed_identity(const MixedIdentity &id, std::size_t n_max)
{
    const auto oracle = h_signed_table(id.rhs, n_max);

    // Stuffle-character route.
    std::vector<Rat> by_character(n_max + 1);
    // Symbolic route: the element itself, truncated at depth n_max + 1.
    NCPoly element(Alphabet::Y);
    for (const auto &term : id.lhs) {
        const NPoly closed = h_x1star_closed_form(term.stars);
        const auto hu = h_signed_table(SignedIndex{y_indices(term.y_factor)}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            by_character[n] += term.coeff * hu[n] * closed(Rat(static_cast<long>(n)));
        }
        NCPoly expanded = pi_Y(term.stars.expand(n_max));
        element += term.coeff * stuffle(NCPoly(term.y_factor), expanded);
    }
    const auto by_words = h_poly_table(element, n_max);

    MixedResult result{id.name, true, std::nullopt};
    for (std::size_t n = 0; n <= n_max; ++n) {
        bool ok = by_character[n] == oracle[n] && by_words[n] == oracle[n];
        if (id.closed_form) {
            ok = ok && (*id.closed_form)(Rat(static_cast<long>(n))) == oracle[n];
        }
        if (!ok) {
            result.pass = false;
            result.first_failure_n = n;
            break;
        }
    }
    return result;
}

std::vector<MixedResult> verify_mixed_examples(std::size_t n_max)
{
    std::vector<MixedResult> out;
    for (const auto &id : mixed_identities()) {
        out.push_back(verify_mixed_identity(id, n_max));
    }
    return out;
}

} // namespace polystuffle
