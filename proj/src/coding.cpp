#include <polystuffle/coding.hpp>
#include <polystuffle/error.hpp>

namespace polystuffle
{

Word pi_X(const Word &w)
{
    if (w.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, "pi_X maps Y words");
    }
    std::vector<std::uint32_t> letters;
    letters.reserve(w.weight());
    for (auto s : w.letters()) {
        letters.insert(letters.end(), s - 1, 0u);
        letters.push_back(1u);
    }
    return Word(Alphabet::X, std::move(letters));
}

NCPoly pi_X(const NCPoly &q)
{
    if (q.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, "pi_X maps Y polynomials");
    }
    NCPoly out(Alphabet::X);
    for (const auto &[w, c] : q.terms()) {
        out.add_term(pi_X(w), c);
    }
    return out;
}

bool in_image_of_pi_X(const Word &w)
{
    return w.alphabet() == Alphabet::X && (w.empty() || w.back() == 1);
}

Word pi_Y(const Word &w)
{
    if (w.alphabet() != Alphabet::X) {
        throw Error(Errc::alphabet_mismatch, "pi_Y maps X words");
    }
    if (!in_image_of_pi_X(w)) {
        throw Error(Errc::not_in_image, "word '" + w.str() + "' ends with x0 and is not in the image of pi_X");
    }
    std::vector<std::uint32_t> letters;
    std::uint32_t run = 1;
    for (auto l : w.letters()) {
        if (l == 0) {
            ++run;
        } else {
            letters.push_back(run);
            run = 1;
        }
    }
    return Word(Alphabet::Y, std::move(letters));
}

NCPoly pi_Y(const NCPoly &p)
{
    if (p.alphabet() != Alphabet::X) {
        throw Error(Errc::alphabet_mismatch, "pi_Y maps X polynomials");
    }
    NCPoly out(Alphabet::Y);
    for (const auto &[w, c] : p.terms()) {
        out.add_term(pi_Y(w), c);
    }
    return out;
}

NCPoly PlaneElement::to_poly() const
{
    NCPoly out(Alphabet::Y);
    for (std::size_t s = 1; s <= alpha.size(); ++s) {
        out.add_term(Word(Alphabet::Y, {static_cast<std::uint32_t>(s)}), alpha[s - 1]);
    }
    return out;
}

PlaneElement umbra_to_plane(const QSeriesTrunc &s)
{
    return PlaneElement{s.coeffs};
}

QSeriesTrunc plane_to_umbra(const PlaneElement &p)
{
    return QSeriesTrunc{p.alpha};
}

} // namespace polystuffle
