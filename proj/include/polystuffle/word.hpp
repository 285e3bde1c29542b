#ifndef POLYSTUFFLE_WORD_HPP
#define POLYSTUFFLE_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polystuffle
{

// X = {x0, x1}, graded by length; Y = {y1, y2, ...}, graded by weight.
enum class Alphabet : std::uint8_t { X, Y };

const char *alphabet_name(Alphabet a) noexcept;

struct Letter {
    Alphabet alphabet;
    // 0/1 for x0/x1, s >= 1 for y_s.
    std::uint32_t value;

    static Letter x0() { return {Alphabet::X, 0}; }
    static Letter x1() { return {Alphabet::X, 1}; }
    static Letter y(std::uint32_t s);

    friend bool operator==(const Letter &, const Letter &) = default;
};

/// A word of X* or Y*. The empty word is the unit of its monoid.
class Word
{
public:
    explicit Word(Alphabet a = Alphabet::X) : alphabet_(a) {}
    Word(Alphabet a, std::vector<std::uint32_t> letters);
    Word(Alphabet a, std::initializer_list<std::uint32_t> letters)
        : Word(a, std::vector<std::uint32_t>(letters))
    {
    }

    static Word x(std::string_view bits) { return parse(Alphabet::X, bits); }
    static Word y(std::initializer_list<std::uint32_t> indices) { return Word(Alphabet::Y, indices); }

    /// Canonical text: X words as bit strings ("01" = x0x1), Y words as
    /// comma-joined indices ("2,1" = y2y1). The empty word is "".
    static Word parse(Alphabet a, std::string_view text);
    std::string str() const;

    Alphabet alphabet() const { return alphabet_; }
    std::span<const std::uint32_t> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return letters_[i]; }
    std::uint32_t back() const { return letters_.back(); }
    Letter letter(std::size_t i) const { return {alphabet_, letters_[i]}; }

    /// Sum of indices for Y words.
    std::size_t weight() const;
    /// Grading used by homogeneous components: length on X, weight on Y.
    std::size_t degree() const { return alphabet_ == Alphabet::X ? size() : weight(); }

    Word suffix(std::size_t from) const;
    Word prepend(std::uint32_t letter) const;
    Word operator+(const Word &rhs) const;

    // Length first, then lexicographic on letter values; alphabet tags first.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b);
    friend bool operator==(const Word &a, const Word &b) = default;

private:
    Alphabet alphabet_;
    std::vector<std::uint32_t> letters_;
};

// x0^{s1-1} x1 ... x0^{sr-1} x1. Throws invalid_index if some s_i <= 0.
Word word_from_index(std::span<const int> s);
Word word_from_index(std::initializer_list<int> s);
// Inverse of word_from_index. Throws not_in_image if w ends with x0.
std::vector<int> index_from_word(const Word &w);

// The index list (s1, ..., sr) of the Y word y_{s1} ... y_{sr}.
std::vector<int> y_indices(const Word &w);

struct WordHash {
    std::size_t operator()(const Word &w) const noexcept;
};

} // namespace polystuffle

#endif
