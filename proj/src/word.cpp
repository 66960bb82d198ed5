#include "nilreg/word.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace nilreg {

char letter_char(Letter l) noexcept {
    switch (l) {
        case Letter::x: return 'x';
        case Letter::q: return 'q';
        case Letter::a: return 'a';
        case Letter::b: return 'b';
    }
    return '?';
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what), position_(position) {}

Word::Word(std::vector<Block> blocks) {
    for (const Block& b : blocks) push_back(b.letter, b.exponent);
}

Word Word::letter(Letter l, std::uint32_t exponent) {
    Word w;
    w.push_back(l, exponent);
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (Letter l : letters) w.push_back(l);
    return w;
}

Letter Word::first_letter() const {
    if (blocks_.empty()) throw std::logic_error("first_letter of the empty word");
    return blocks_.front().letter;
}

Letter Word::last_letter() const {
    if (blocks_.empty()) throw std::logic_error("last_letter of the empty word");
    return blocks_.back().letter;
}

void Word::push_back(Letter l, std::uint32_t exponent) {
    if (exponent == 0) return;
    if (!blocks_.empty() && blocks_.back().letter == l)
        blocks_.back().exponent += exponent;
    else
        blocks_.push_back({l, exponent});
    length_ += exponent;
}

void Word::pop_back(std::uint32_t count) {
    while (count > 0) {
        if (blocks_.empty()) throw std::logic_error("pop_back past the empty word");
        Block& last = blocks_.back();
        std::uint32_t take = std::min(count, last.exponent);
        last.exponent -= take;
        length_ -= take;
        count -= take;
        if (last.exponent == 0) blocks_.pop_back();
    }
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(length_);
    for (const Block& b : blocks_) out.insert(out.end(), b.exponent, b.letter);
    return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    Word out;
    std::size_t offset = 0;
    for (const Block& b : blocks_) {
        std::size_t lo = std::max(pos, offset);
        std::size_t hi = std::min(pos + len, offset + b.exponent);
        if (lo < hi) out.push_back(b.letter, static_cast<std::uint32_t>(hi - lo));
        offset += b.exponent;
        if (offset >= pos + len) break;
    }
    return out;
}

bool Word::starts_with(const Word& prefix) const {
    return prefix.length() <= length_ && slice(0, prefix.length()) == prefix;
}

bool Word::ends_with(const Word& suffix) const {
    return suffix.length() <= length_ &&
           slice(length_ - suffix.length(), suffix.length()) == suffix;
}

std::string Word::to_string() const {
    if (blocks_.empty()) return "1";
    std::string out;
    for (const Block& b : blocks_) {
        if (!out.empty()) out += ' ';
        out += letter_char(b.letter);
        if (b.exponent != 1) out += '^' + std::to_string(b.exponent);
    }
    return out;
}

Word operator*(const Word& u, const Word& v) {
    Word out = u;
    for (const Block& b : v.blocks_) out.push_back(b.letter, b.exponent);
    return out;
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
    const auto& ub = u.blocks();
    const auto& vb = v.blocks();
    for (std::size_t k = 0;; ++k) {
        bool u_done = k >= ub.size();
        bool v_done = k >= vb.size();
        if (u_done || v_done) {
            if (u_done && v_done) return std::strong_ordering::equal;
            return u_done ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const Block& bu = ub[k];
        const Block& bv = vb[k];
        if (bu.letter != bv.letter)
            return letter_rank(bu.letter) <=> letter_rank(bv.letter);
        if (bu.exponent == bv.exponent) continue;
        // The shorter run is followed by a different letter (or ends); the
        // longer one continues with the same letter.
        if (bu.exponent < bv.exponent) {
            if (k + 1 >= ub.size()) return std::strong_ordering::less;
            return letter_rank(ub[k + 1].letter) <=> letter_rank(bu.letter);
        }
        if (k + 1 >= vb.size()) return std::strong_ordering::greater;
        return letter_rank(bv.letter) <=> letter_rank(vb[k + 1].letter);
    }
}

Word parse_word(std::string_view text) {
    detail::Lexer lex(text);
    Word w;
    if (lex.peek() == '1') {
        lex.expect('1');
    } else if (!lex.word_tokens(w)) {
        lex.fail("expected a word");
    }
    if (!lex.at_end()) lex.fail("unexpected character");
    return w;
}

std::vector<Word> all_words(Alphabet alphabet, std::size_t length) {
    Letter lo = alphabet == Alphabet::xq ? Letter::x : Letter::a;
    Letter hi = alphabet == Alphabet::xq ? Letter::q : Letter::b;
    std::vector<Word> out;
    std::vector<Letter> letters(length, lo);
    const std::uint64_t total = std::uint64_t{1} << length;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < length; ++i)
            letters[i] = (mask >> (length - 1 - i)) & 1 ? hi : lo;
        out.push_back(Word::from_letters(letters));
    }
    return out;
}

}  // namespace nilreg
