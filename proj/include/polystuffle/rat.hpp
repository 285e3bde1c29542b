#ifndef POLYSTUFFLE_RAT_HPP
#define POLYSTUFFLE_RAT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polystuffle
{

using BigInt = mpz_class;

/// Exact rational scalar, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that the rest of the library
/// never sees non-canonical fractions.
class Rat
{
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(const BigInt &n) : v_(n) {}
    Rat(const BigInt &num, const BigInt &den);
    explicit Rat(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws Error(Errc::parse) on malformed input
    /// or a zero denominator.
    static Rat parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class &raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    /// Integer power; negative exponents invert (zero base then throws).
    Rat pow(long e) const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
    Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
    Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
    Rat &operator/=(const Rat &o);

    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

    friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

} // namespace polystuffle

#endif
