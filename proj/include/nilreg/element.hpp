#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nilreg/rewrite.hpp"
#include "nilreg/scalar.hpp"
#include "nilreg/word.hpp"

namespace nilreg {

/// A finite linear combination of normal-form words in S or R.
///
/// Keys are always basis words and coefficients are never zero, so two
/// elements are equal exactly when their term maps agree. Iteration is in
/// shortlex order.
class AlgebraElement {
  public:
    using TermMap = std::map<Word, Scalar, LengthLexLess>;

    AlgebraElement(RewriteSystem sys, Field field) : sys_(sys), field_(field) {}

    static AlgebraElement one(RewriteSystem sys, Field field);
    // The normal form of an arbitrary word (possibly zero), times coeff.
    static AlgebraElement of_word(RewriteSystem sys, Field field, const Word& w);
    static AlgebraElement of_word(RewriteSystem sys, const Scalar& coeff, const Word& w);
    static AlgebraElement constant(RewriteSystem sys, const Scalar& c);

    const TermMap& terms() const noexcept { return terms_; }
    const RewriteSystem& system() const noexcept { return sys_; }
    const Field& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    // Length of the longest word in the support; 0 for the zero element.
    std::size_t degree() const noexcept;
    Scalar coefficient(const Word& w) const;

    // Adds c * w, reducing w first.
    void add_term(const Word& w, const Scalar& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& c) const;

    friend AlgebraElement operator+(AlgebraElement p, const AlgebraElement& r) { return p += r; }
    friend AlgebraElement operator-(AlgebraElement p, const AlgebraElement& r) { return p -= r; }
    friend AlgebraElement operator*(const AlgebraElement& p, const AlgebraElement& r);
    friend bool operator==(const AlgebraElement& p, const AlgebraElement& r);

    std::string to_string() const;
    nlohmann::json to_json() const;
    static AlgebraElement from_json(const nlohmann::json& j, RewriteSystem sys, Field field);

  private:
    void check_compatible(const AlgebraElement& o) const;
    void accumulate(const Word& normal, const Scalar& c);

    RewriteSystem sys_;
    Field field_;
    TermMap terms_;
};

AlgebraElement add(const AlgebraElement& p, const AlgebraElement& r);
AlgebraElement mul(const AlgebraElement& p, const AlgebraElement& r);
bool equals(const AlgebraElement& p, const AlgebraElement& r);
AlgebraElement power(const AlgebraElement& p, unsigned k);

bool is_idempotent(const AlgebraElement& e);

/// left_idem * e * right_idem; throws std::invalid_argument unless both
/// idempotent arguments really are idempotent.
AlgebraElement corner(const AlgebraElement& e, const AlgebraElement& left_idem,
                      const AlgebraElement& right_idem);

/// Element literal, e.g. "1 - x q" or "2 q^2 x - 3/4".
AlgebraElement parse_element(std::string_view text, RewriteSystem sys, Field field);

}  // namespace nilreg
