#include <polystuffle/error.hpp>
#include <polystuffle/rat.hpp>

#include <cctype>

namespace polystuffle
{

const char *errc_name(Errc code) noexcept
{
    switch (code) {
        case Errc::invalid_index: return "invalid_index";
        case Errc::not_in_image: return "not_in_image";
        case Errc::alphabet_mismatch: return "alphabet_mismatch";
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::nonzero_constant: return "nonzero_constant";
        case Errc::not_representable: return "not_representable";
        case Errc::domain: return "domain";
        case Errc::precision_unattainable: return "precision_unattainable";
        case Errc::parse: return "parse";
        case Errc::type: return "type";
    }
    return "unknown";
}

Rat::Rat(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw Error(Errc::invalid_argument, "zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace
{

bool valid_integer(std::string_view s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s), 10);
}

} // namespace

Rat Rat::parse(std::string_view text)
{
    auto slash = text.find('/');
    auto num_part = text.substr(0, slash);
    if (!valid_integer(num_part)) {
        throw Error(Errc::parse, "malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rat(parse_integer(num_part));
    }
    auto den_part = text.substr(slash + 1);
    if (!valid_integer(den_part) || den_part[0] == '-' || den_part[0] == '+') {
        throw Error(Errc::parse, "malformed rational '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_part);
    if (den == 0) {
        throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
    }
    return Rat(parse_integer(num_part), den);
}

std::string Rat::str() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow(long e) const
{
    if (e < 0) {
        if (is_zero()) {
            throw Error(Errc::invalid_argument, "zero raised to a negative power");
        }
        Rat inv(den(), num());
        return inv.pow(-e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

Rat &Rat::operator/=(const Rat &o)
{
    if (o.is_zero()) {
        throw Error(Errc::invalid_argument, "division by zero");
    }
    v_ /= o.v_;
    return *this;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace polystuffle
