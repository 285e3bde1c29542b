#include <polystuffle/error.hpp>
#include <polystuffle/word.hpp>

#include <algorithm>
#include <charconv>

namespace polystuffle
{

const char *alphabet_name(Alphabet a) noexcept
{
    return a == Alphabet::X ? "X" : "Y";
}

Letter Letter::y(std::uint32_t s)
{
    if (s == 0) {
        throw Error(Errc::invalid_index, "Y letters are indexed from 1");
    }
    return {Alphabet::Y, s};
}

Word::Word(Alphabet a, std::vector<std::uint32_t> letters) : alphabet_(a), letters_(std::move(letters))
{
    for (auto l : letters_) {
        if (a == Alphabet::X && l > 1) {
            throw Error(Errc::invalid_index, "X letters are x0 and x1 only");
        }
        if (a == Alphabet::Y && l == 0) {
            throw Error(Errc::invalid_index, "Y letters are indexed from 1");
        }
    }
}

Word Word::parse(Alphabet a, std::string_view text)
{
    std::vector<std::uint32_t> letters;
    if (a == Alphabet::X) {
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw Error(Errc::parse, "X words are bit strings, got '" + std::string(text) + "'");
            }
            letters.push_back(static_cast<std::uint32_t>(c - '0'));
        }
        return Word(a, std::move(letters));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || v == 0) {
            throw Error(Errc::parse, "malformed Y word '" + std::string(text) + "'");
        }
        letters.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
        if (pos == text.size()) {
            throw Error(Errc::parse, "trailing comma in Y word '" + std::string(text) + "'");
        }
    }
    return Word(a, std::move(letters));
}

std::string Word::str() const
{
    std::string out;
    if (alphabet_ == Alphabet::X) {
        for (auto l : letters_) {
            out.push_back(static_cast<char>('0' + l));
        }
        return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) {
            out.push_back(',');
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::size_t Word::weight() const
{
    std::size_t w = 0;
    for (auto l : letters_) {
        w += l;
    }
    return w;
}

Word Word::suffix(std::size_t from) const
{
    Word w(alphabet_);
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end());
    return w;
}

Word Word::prepend(std::uint32_t letter) const
{
    Word w(alphabet_);
    w.letters_.reserve(letters_.size() + 1);
    w.letters_.push_back(letter);
    w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
    return w;
}

Word Word::operator+(const Word &rhs) const
{
    if (alphabet_ != rhs.alphabet_) {
        throw Error(Errc::alphabet_mismatch, "cannot concatenate words over different alphabets");
    }
    Word w = *this;
    w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return w;
}

std::strong_ordering operator<=>(const Word &a, const Word &b)
{
    if (auto c = a.alphabet_ <=> b.alphabet_; c != 0) {
        return c;
    }
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

Word word_from_index(std::span<const int> s)
{
    std::vector<std::uint32_t> letters;
    for (int si : s) {
        if (si <= 0) {
            throw Error(Errc::invalid_index,
                        "word coding needs positive indices, got " + std::to_string(si));
        }
        letters.insert(letters.end(), static_cast<std::size_t>(si - 1), 0u);
        letters.push_back(1u);
    }
    return Word(Alphabet::X, std::move(letters));
}

Word word_from_index(std::initializer_list<int> s)
{
    return word_from_index(std::span<const int>(s.begin(), s.size()));
}

std::vector<int> index_from_word(const Word &w)
{
    if (w.alphabet() != Alphabet::X) {
        throw Error(Errc::alphabet_mismatch, "index_from_word expects an X word");
    }
    if (!w.empty() && w.back() == 0) {
        throw Error(Errc::not_in_image, "word '" + w.str() + "' ends with x0");
    }
    std::vector<int> s;
    int run = 1;
    for (auto l : w.letters()) {
        if (l == 0) {
            ++run;
        } else {
            s.push_back(run);
            run = 1;
        }
    }
    return s;
}

std::vector<int> y_indices(const Word &w)
{
    if (w.alphabet() != Alphabet::Y) {
        throw Error(Errc::alphabet_mismatch, "expected a Y word");
    }
    return {w.letters().begin(), w.letters().end()};
}

std::size_t WordHash::operator()(const Word &w) const noexcept
{
    std::size_t h = static_cast<std::size_t>(w.alphabet()) + 0x9e3779b97f4a7c15ULL;
    for (auto l : w.letters()) {
        h ^= std::hash<std::uint32_t>{}(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace polystuffle
