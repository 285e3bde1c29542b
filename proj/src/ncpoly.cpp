#include <polystuffle/error.hpp>
#include <polystuffle/ncpoly.hpp>

#include <algorithm>

namespace polystuffle
{

namespace
{

void check_same(Alphabet a, Alphabet b, const char *what)
{
    if (a != b) {
        throw Error(Errc::alphabet_mismatch,
                    std::string(what) + ": alphabet mismatch (" + alphabet_name(a) + " vs " + alphabet_name(b) + ")");
    }
}

} // namespace

NCPoly::NCPoly(const Word &w, const Rat &c) : alphabet_(w.alphabet())
{
    add_term(w, c);
}

Rat NCPoly::coeff_of(const Word &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word &w, const Rat &c)
{
    check_same(alphabet_, w.alphabet(), "add_term");
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

NCPoly &NCPoly::operator+=(const NCPoly &rhs)
{
    check_same(alphabet_, rhs.alphabet_, "add");
    for (const auto &[w, c] : rhs.terms_) {
        add_term(w, c);
    }
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &rhs)
{
    check_same(alphabet_, rhs.alphabet_, "subtract");
    for (const auto &[w, c] : rhs.terms_) {
        add_term(w, -c);
    }
    return *this;
}

NCPoly &NCPoly::operator*=(const Rat &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[w, v] : terms_) {
        v *= c;
    }
    return *this;
}

NCPoly NCPoly::homogeneous_component(std::size_t n) const
{
    NCPoly out(alphabet_);
    for (const auto &[w, c] : terms_) {
        if (w.degree() == n) {
            out.terms_.emplace(w, c);
        }
    }
    return out;
}

NCPoly NCPoly::truncated(std::size_t cap) const
{
    NCPoly out(alphabet_);
    for (const auto &[w, c] : terms_) {
        if (w.degree() <= cap) {
            out.terms_.emplace(w, c);
        }
    }
    return out;
}

std::set<std::size_t> NCPoly::degrees() const
{
    std::set<std::size_t> out;
    for (const auto &[w, c] : terms_) {
        out.insert(w.degree());
    }
    return out;
}

std::size_t NCPoly::max_degree() const
{
    std::size_t d = 0;
    for (const auto &[w, c] : terms_) {
        d = std::max(d, w.degree());
    }
    return d;
}

std::size_t NCPoly::max_length() const
{
    // Canonical order sorts by length first.
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::string word_expr(const Word &w)
{
    if (w.empty()) {
        return "1";
    }
    if (w.alphabet() == Alphabet::X) {
        return "\"" + w.str() + "\"";
    }
    std::string out;
    for (auto l : w.letters()) {
        out += "y" + std::to_string(l);
    }
    return out;
}

std::string NCPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += word_expr(w);
        } else {
            out += mag.str() + "*" + word_expr(w);
        }
    }
    return out;
}

NCPoly NCPoly::normalized() const
{
    NCPoly out(alphabet_);
    for (const auto &[w, c] : terms_) {
        out.add_term(w, c);
    }
    return out;
}

NCPoly add(const NCPoly &p, const NCPoly &q)
{
    return p + q;
}

NCPoly scale(const Rat &c, const NCPoly &p)
{
    return c * p;
}

Rat coeff_of(const NCPoly &p, const Word &w)
{
    return p.coeff_of(w);
}

NCPoly homogeneous_component(const NCPoly &p, std::size_t n)
{
    return p.homogeneous_component(n);
}

} // namespace polystuffle
