#include "nilreg/element.hpp"

#include <stdexcept>

#include "lexer.hpp"

namespace nilreg {

AlgebraElement AlgebraElement::one(RewriteSystem sys, Field field) {
    return of_word(sys, field.one(), Word{});
}

AlgebraElement AlgebraElement::of_word(RewriteSystem sys, Field field, const Word& w) {
    return of_word(sys, field.one(), w);
}

AlgebraElement AlgebraElement::of_word(RewriteSystem sys, const Scalar& coeff, const Word& w) {
    AlgebraElement e(sys, coeff.field());
    e.add_term(w, coeff);
    return e;
}

AlgebraElement AlgebraElement::constant(RewriteSystem sys, const Scalar& c) {
    return of_word(sys, c, Word{});
}

std::size_t AlgebraElement::degree() const noexcept {
    // Shortlex order puts the longest words last.
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

Scalar AlgebraElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
}

void AlgebraElement::accumulate(const Word& normal, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(normal, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
    if (!(c.field() == field_))
        throw std::invalid_argument("coefficient field " + c.field().name() +
                                    " does not match element field " + field_.name());
    ReductionOutcome r = reduce(w, sys_);
    if (!r.is_zero()) accumulate(*r.result, c);
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
    if (!(sys_ == o.sys_))
        throw std::invalid_argument("presentation mismatch: " + sys_.describe() + " vs " +
                                    o.sys_.describe());
    if (!(field_ == o.field_))
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                    o.field_.name());
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) accumulate(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) accumulate(w, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(sys_, field_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out(sys_, field_);
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
    return out;
}

AlgebraElement operator*(const AlgebraElement& p, const AlgebraElement& r) {
    p.check_compatible(r);
    AlgebraElement out(p.sys_, p.field_);
    for (const auto& [u, cu] : p.terms_) {
        for (const auto& [v, cv] : r.terms_) {
            ReductionOutcome prod = concat_reduce(u, v, p.sys_);
            if (!prod.is_zero()) out.accumulate(*prod.result, cu * cv);
        }
    }
    return out;
}

bool operator==(const AlgebraElement& p, const AlgebraElement& r) {
    p.check_compatible(r);
    return p.terms_ == r.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        // Rationals print with their sign pulled out; residues are nonnegative.
        bool negative = field_.is_rational() && sgn(c.rational()) < 0;
        Scalar mag = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (w.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + " ";
            out += w.to_string();
        }
    }
    return out;
}

nlohmann::json AlgebraElement::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, c] : terms_) j[w.to_string()] = c.to_string();
    return j;
}

AlgebraElement AlgebraElement::from_json(const nlohmann::json& j, RewriteSystem sys, Field field) {
    if (!j.is_object()) throw std::invalid_argument("element JSON must be an object");
    AlgebraElement out(sys, field);
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) throw std::invalid_argument("coefficient for '" + key + "' must be a string");
        Word w = parse_word(key);
        sys.check_alphabet(w);
        out.add_term(w, field.parse_scalar(value.get<std::string>()));
    }
    return out;
}

AlgebraElement add(const AlgebraElement& p, const AlgebraElement& r) { return p + r; }
AlgebraElement mul(const AlgebraElement& p, const AlgebraElement& r) { return p * r; }
bool equals(const AlgebraElement& p, const AlgebraElement& r) { return p == r; }

AlgebraElement power(const AlgebraElement& p, unsigned k) {
    AlgebraElement out = AlgebraElement::one(p.system(), p.field());
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

bool is_idempotent(const AlgebraElement& e) { return e * e == e; }

AlgebraElement corner(const AlgebraElement& e, const AlgebraElement& left_idem,
                      const AlgebraElement& right_idem) {
    if (!is_idempotent(left_idem))
        throw std::invalid_argument("left argument " + left_idem.to_string() + " is not idempotent");
    if (!is_idempotent(right_idem))
        throw std::invalid_argument("right argument " + right_idem.to_string() + " is not idempotent");
    return left_idem * e * right_idem;
}

AlgebraElement parse_element(std::string_view text, RewriteSystem sys, Field field) {
    detail::Lexer lex(text);
    AlgebraElement out(sys, field);
    bool first = true;
    for (;;) {
        Scalar sign = field.one();
        if (lex.consume('-'))
            sign = -sign;
        else if (!lex.consume('+') && !first)
            lex.fail("expected '+' or '-'");
        if (first && lex.at_end()) lex.fail("empty expression");
        first = false;

        Scalar coeff = field.one();
        bool have_coeff = false;
        if (lex.at_digit()) {
            std::size_t start = lex.position();
            std::string num = lex.digits();
            if (lex.consume('/')) num += "/" + lex.digits();
            try {
                coeff = field.parse_scalar(num);
            } catch (const std::exception& e) {
                throw ParseError(std::string(e.what()) + " at position " + std::to_string(start), start);
            }
            have_coeff = true;
        }
        Word w;
        std::size_t word_pos = lex.position();
        bool have_word = lex.word_tokens(w);
        if (!have_coeff && !have_word) lex.fail("expected a coefficient or a word");
        if (have_word && alphabet_of(w.first_letter()) != sys.alphabet())
            throw ParseError("word " + w.to_string() + " is not over the alphabet of " +
                                 sys.describe() + " at position " + std::to_string(word_pos),
                             word_pos);
        out.add_term(w, sign * coeff);
        if (lex.at_end()) break;
    }
    return out;
}

}  // namespace nilreg
