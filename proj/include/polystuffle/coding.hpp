#ifndef POLYSTUFFLE_CODING_HPP
#define POLYSTUFFLE_CODING_HPP

#include <cstddef>
#include <vector>

#include <polystuffle/ncpoly.hpp>

namespace polystuffle
{

/// Conc morphism y_n -> x0^{n-1} x1. The image lies in Q<X>x1 + Q.1.
NCPoly pi_X(const NCPoly &q);
Word pi_X(const Word &w);

/// Inverse of pi_X on its image. A word ending in x0 is outside the image
/// and raises not_in_image naming that word.
NCPoly pi_Y(const NCPoly &p);
Word pi_Y(const Word &w);

/// True iff w is empty or ends in x1.
bool in_image_of_pi_X(const Word &w);

/// Truncated series Σ_{n=1}^{S_max} α_n q^n with no constant term.
/// coeffs[0] is α_1.
struct QSeriesTrunc {
    std::vector<Rat> coeffs;

    std::size_t s_max() const { return coeffs.size(); }
    friend bool operator==(const QSeriesTrunc &, const QSeriesTrunc &) = default;
};

/// Degree-one element Σ_{s=1}^{S_max} α_s y_s of "the plane"; alpha[0] is α_1.
struct PlaneElement {
    std::vector<Rat> alpha;

    std::size_t s_max() const { return alpha.size(); }
    Rat at(std::size_t s) const { return s >= 1 && s <= alpha.size() ? alpha[s - 1] : Rat(0); }
    NCPoly to_poly() const;
    friend bool operator==(const PlaneElement &, const PlaneElement &) = default;
};

// Umbral coding q^n <-> y_n. Linear and bijective; the two maps are inverse.
PlaneElement umbra_to_plane(const QSeriesTrunc &s);
QSeriesTrunc plane_to_umbra(const PlaneElement &p);

} // namespace polystuffle

#endif
