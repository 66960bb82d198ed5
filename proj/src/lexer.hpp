#pragma once

// Shared tokenizer for word, element and matrix literals.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "nilreg/word.hpp"

namespace nilreg::detail {

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t position() const noexcept { return pos_; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() { return is_digit(peek()); }

    static bool is_letter_token(char c) {
        return c == 'x' || c == 'q' || c == 'a' || c == 'b';
    }

    // Unsigned decimal integer as text (arbitrary length).
    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint32_t exponent() {
        std::size_t start = pos_;
        std::string d = digits();
        std::uint64_t value = 0;
        for (char c : d) {
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value > std::numeric_limits<std::uint32_t>::max())
                throw ParseError("exponent overflow", start);
        }
        if (value == 0) throw ParseError("exponent must be positive", start);
        return static_cast<std::uint32_t>(value);
    }

    // Reads a maximal run of letter tokens (with exponents) into a word.
    // Returns false when no letter token is present.
    bool word_tokens(Word& out) {
        bool any = false;
        while (is_letter_token(peek())) {
            char c = text_[pos_++];
            Letter l = c == 'x'   ? Letter::x
                       : c == 'q' ? Letter::q
                       : c == 'a' ? Letter::a
                                  : Letter::b;
            std::uint32_t e = 1;
            if (consume('^')) e = exponent();
            if (!out.empty() && alphabet_of(out.first_letter()) != alphabet_of(l))
                fail("letters from both alphabets in one word");
            out.push_back(l, e);
            any = true;
        }
        return any;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }

  private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '*';
    }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace nilreg::detail
