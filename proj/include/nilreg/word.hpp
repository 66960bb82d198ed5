#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilreg {

// Generators of the two presentations. Within a presentation the letters
// are ordered q > x and b > a.
enum class Letter : std::uint8_t { x, q, a, b };

enum class Alphabet : std::uint8_t { xq, ab };

constexpr int letter_rank(Letter l) noexcept {
    return (l == Letter::q || l == Letter::b) ? 1 : 0;
}

constexpr Alphabet alphabet_of(Letter l) noexcept {
    return (l == Letter::x || l == Letter::q) ? Alphabet::xq : Alphabet::ab;
}

char letter_char(Letter l) noexcept;

struct Block {
    Letter letter;
    std::uint32_t exponent;

    friend bool operator==(const Block&, const Block&) = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// A word over one of the two-letter alphabets, stored run-length encoded.
/// Adjacent blocks always carry distinct letters; the empty word is 1.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Block> blocks);

    static Word letter(Letter l, std::uint32_t exponent = 1);
    static Word from_letters(const std::vector<Letter>& letters);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }
    std::size_t length() const noexcept { return length_; }

    Letter first_letter() const;
    Letter last_letter() const;
    const Block& front() const { return blocks_.front(); }
    const Block& back() const { return blocks_.back(); }

    bool starts_with(const Word& prefix) const;
    bool ends_with(const Word& suffix) const;

    std::vector<Letter> letters() const;

    // Appends a block, merging with the last block when letters agree.
    void push_back(Letter l, std::uint32_t exponent = 1);
    void pop_back(std::uint32_t count = 1);

    // Subword [pos, pos + len) in letter positions.
    Word slice(std::size_t pos, std::size_t len) const;

    std::string to_string() const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word& u, const Word& v) {
        return u.blocks_ == v.blocks_;
    }

  private:
    std::vector<Block> blocks_;
    std::size_t length_ = 0;
};

/// Left lexicographic comparison with q > x (b > a). A proper prefix
/// sorts below its extensions.
std::strong_ordering lex_compare(const Word& u, const Word& v);

/// Shortlex: length first, then lex_compare. Used for term-map ordering.
struct LengthLexLess {
    bool operator()(const Word& u, const Word& v) const {
        if (u.length() != v.length()) return u.length() < v.length();
        return lex_compare(u, v) < 0;
    }
};

// Word literal: tokens x, q, a, b with optional ^<positive int>, or 1.
Word parse_word(std::string_view text);

// Every word over the alphabet with exactly `length` letters, in lex order.
std::vector<Word> all_words(Alphabet alphabet, std::size_t length);

}  // namespace nilreg
