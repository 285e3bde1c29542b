#ifndef POLYSTUFFLE_NEGINDEX_HPP
#define POLYSTUFFLE_NEGINDEX_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <polystuffle/ncpoly.hpp>
#include <polystuffle/stars.hpp>

namespace polystuffle
{

/// p(z) / (1 - z)^m with a pole at z = 1 only.
///
/// Canonical: if m > 0 then (1 - z) does not divide p, and p = 0 forces m = 0.
/// The constructor canonicalizes, so equality is structural.
class RatFuncAtOne
{
public:
    RatFuncAtOne() = default;
    RatFuncAtOne(std::vector<Rat> numerator, std::size_t pole_order);

    static RatFuncAtOne constant(const Rat &c) { return RatFuncAtOne({c}, 0); }

    /// Ascending coefficients of p; empty for the zero function.
    const std::vector<Rat> &numerator() const { return num_; }
    std::size_t pole_order() const { return pole_; }
    bool is_zero() const { return num_.empty(); }

    /// Taylor coefficients at 0 up to z^n_cap.
    std::vector<Rat> taylor(std::size_t n_cap) const;

    /// "(z^4 + 7*z^3 + 4*z^2)/(1-z)^5"
    std::string str() const;

    friend bool operator==(const RatFuncAtOne &, const RatFuncAtOne &) = default;

private:
    std::vector<Rat> num_;
    std::size_t pole_ = 0;
};

/// z f'(z), recanonicalized.
RatFuncAtOne theta_derivative(const RatFuncAtOne &f);

/// Li_{s1..sr}(z) for s_i <= 0 as an exact rational function. Built right to
/// left: F <- 1, then F <- θ^{-s_i}((z/(1-z)) F) for i = r..1.
/// Throws invalid_index if some s_i > 0. The empty list gives 1.
RatFuncAtOne li_nonpositive(std::span<const int> s);

/// Coefficients c_k with Σ_k c_k / (1-z)^k = f, i.e. Li_P = f for
/// P = Σ c_k (k x1)*. Needs deg p <= pole order (not_representable otherwise).
X1StarPoly ratfunc_to_x1star(const RatFuncAtOne &f);

/// P = Σ_k result[k] ⧢ x0^{⧢k} with every word of result[k] empty or ending
/// in x1. Zero parts are omitted from the map.
std::map<std::size_t, NCPoly> regularize_trailing_x0(const NCPoly &p);

} // namespace polystuffle

#endif
