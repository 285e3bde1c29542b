#ifndef POLYSTUFFLE_TEST_HELPERS_HPP
#define POLYSTUFFLE_TEST_HELPERS_HPP

#include <polystuffle/expr.hpp>

#include <random>
#include <vector>

namespace test_helpers
{
using namespace polystuffle;

inline Rat q(long p, long d = 1)
{
    return Rat(BigInt(p), BigInt(d));
}

inline NCPoly X(const char *text)
{
    return to_ncpoly(evaluate(text), Alphabet::X);
}

inline NCPoly Y(const char *text)
{
    return to_ncpoly(evaluate(text), Alphabet::Y);
}

inline Word xw(const char *bits)
{
    return Word::x(bits);
}

// Every X word of length <= n.
inline std::vector<Word> x_words_up_to(std::size_t n)
{
    std::vector<Word> out{Word(Alphabet::X)};
    std::vector<Word> layer{Word(Alphabet::X)};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto &w : layer) {
            for (std::uint32_t a : {0u, 1u}) {
                std::vector<std::uint32_t> l(w.letters().begin(), w.letters().end());
                l.push_back(a);
                next.emplace_back(Alphabet::X, std::move(l));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Every Y word of weight exactly w (compositions of w).
inline std::vector<Word> y_words_of_weight(std::size_t w)
{
    if (w == 0) {
        return {Word(Alphabet::Y)};
    }
    std::vector<Word> out;
    for (std::size_t first = 1; first <= w; ++first) {
        for (const auto &rest : y_words_of_weight(w - first)) {
            std::vector<std::uint32_t> l{static_cast<std::uint32_t>(first)};
            l.insert(l.end(), rest.letters().begin(), rest.letters().end());
            out.emplace_back(Alphabet::Y, std::move(l));
        }
    }
    return out;
}

inline std::vector<Word> y_words_up_to(std::size_t w)
{
    std::vector<Word> out;
    for (std::size_t k = 0; k <= w; ++k) {
        auto layer = y_words_of_weight(k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

inline Word random_x_word(std::mt19937_64 &rng, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::bernoulli_distribution bit(0.5);
    std::vector<std::uint32_t> l(len(rng));
    for (auto &a : l) {
        a = bit(rng) ? 1u : 0u;
    }
    return Word(Alphabet::X, std::move(l));
}

inline Word random_y_word(std::mt19937_64 &rng, std::size_t max_weight)
{
    std::uniform_int_distribution<std::size_t> weight(0, max_weight);
    std::size_t left = weight(rng);
    std::vector<std::uint32_t> l;
    while (left > 0) {
        std::uniform_int_distribution<std::size_t> part(1, left);
        std::size_t s = part(rng);
        l.push_back(static_cast<std::uint32_t>(s));
        left -= s;
    }
    return Word(Alphabet::Y, std::move(l));
}

inline Rat random_rat(std::mt19937_64 &rng, long bound = 5)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rat(BigInt(num(rng)), BigInt(den(rng)));
}

inline NCPoly random_x_poly(std::mt19937_64 &rng, std::size_t max_len, std::size_t terms)
{
    NCPoly p(Alphabet::X);
    for (std::size_t i = 0; i < terms; ++i) {
        p.add_term(random_x_word(rng, max_len), random_rat(rng));
    }
    return p;
}

inline NCPoly random_y_poly(std::mt19937_64 &rng, std::size_t max_weight, std::size_t terms)
{
    NCPoly p(Alphabet::Y);
    for (std::size_t i = 0; i < terms; ++i) {
        p.add_term(random_y_word(rng, max_weight), random_rat(rng));
    }
    return p;
}

} // namespace test_helpers

#endif
