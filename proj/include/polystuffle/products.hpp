#ifndef POLYSTUFFLE_PRODUCTS_HPP
#define POLYSTUFFLE_PRODUCTS_HPP

#include <cstddef>
#include <optional>

#include <polystuffle/ncpoly.hpp>

namespace polystuffle
{

// Every product below is bilinear. The optional cap drops every output word
// whose degree exceeds it (length on X, weight on Y); since both gradings are
// additive under these products, pairs that would overflow are skipped
// before expansion. Without a cap the result is exact.
using DegreeCap = std::optional<std::size_t>;

NCPoly conc(const NCPoly &p, const NCPoly &q, DegreeCap cap = std::nullopt);

// au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v). Either alphabet.
NCPoly shuffle(const NCPoly &p, const NCPoly &q, DegreeCap cap = std::nullopt);
NCPoly shuffle(const Word &u, const Word &v);

// y_s u ⊔⊔ y_t v = y_s(u ⊔⊔ y_t v) + y_t(y_s u ⊔⊔ v) + y_{s+t}(u ⊔⊔ v). Y only.
NCPoly stuffle(const NCPoly &p, const NCPoly &q, DegreeCap cap = std::nullopt);
NCPoly stuffle(const Word &u, const Word &v);

NCPoly shuffle_pow(const NCPoly &p, long k, DegreeCap cap = std::nullopt);
NCPoly stuffle_pow(const NCPoly &p, long k, DegreeCap cap = std::nullopt);

/// Σ_{n ≥ 0} P^{⊔⊔ n} / n!, keeping only words of weight <= weight_cap.
/// P must have zero constant term (nonzero_constant otherwise); each power
/// then raises the minimal weight by one, so n stops at weight_cap.
NCPoly exp_stuffle(const NCPoly &p, std::size_t weight_cap);

} // namespace polystuffle

#endif
