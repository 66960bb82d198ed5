#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nilreg/rewrite.hpp"
#include "nilreg/scalar.hpp"
#include "nilreg/word.hpp"

namespace nilreg {

// Support words of the middle factors in alpha = (1-xq) u (1-qx) and
// beta = (1-qx) v (1-xq). Anything else is killed by the outer idempotents.

/// Basis word of the form 1, q, q^2 or q z q.
class LeftShapeWord {
  public:
    LeftShapeWord(Word w, const RewriteSystem& sys);
    static bool conforms(const Word& w, const RewriteSystem& sys);
    const Word& word() const noexcept { return word_; }
    friend bool operator==(const LeftShapeWord&, const LeftShapeWord&) = default;

  private:
    Word word_;
};

/// Basis word of the form 1, x, x^2 or x z x.
class RightShapeWord {
  public:
    RightShapeWord(Word w, const RewriteSystem& sys);
    static bool conforms(const Word& w, const RewriteSystem& sys);
    const Word& word() const noexcept { return word_; }
    friend bool operator==(const RightShapeWord&, const RightShapeWord&) = default;

  private:
    Word word_;
};

std::vector<LeftShapeWord> left_shape_words(std::size_t max_len, const RewriteSystem& sys);
std::vector<RightShapeWord> right_shape_words(std::size_t max_len, const RewriteSystem& sys);

/// w y, reduced.
ReductionOutcome type_I(const LeftShapeWord& w, const RightShapeWord& y, const RewriteSystem& sys);
/// w q x y, reduced.
ReductionOutcome type_II(const LeftShapeWord& w, const RightShapeWord& y, const RewriteSystem& sys);

enum class InterfaceClass { Zero, Reduced, NoReduction };
const char* to_string(InterfaceClass c);

/// How the product of two basis words behaves at the join.
InterfaceClass classify_interface(const Word& w, const Word& y, const RewriteSystem& sys);

enum class TermKind { TypeI, TypeII, Boundary };
const char* to_string(TermKind k);

struct COccurrence {
    Word word;          // reduced, begins in q, ends in x
    Word left;          // w
    Word right;         // y
    TermKind kind;
    Scalar coefficient; // signed product a_i b_j (+-1)
    std::uint32_t steps;
};

/// The words beginning in q and ending in x that appear in the uncollected
/// expansion of alpha * beta, with multiplicity and source attribution.
struct CSet {
    std::vector<COccurrence> occurrences;
    std::size_t expansion_terms = 0;  // 8 * |L| * |R|

    bool empty() const noexcept { return occurrences.empty(); }
    std::size_t multiplicity(const Word& w) const;
    std::vector<Word> distinct_words() const;  // lex order, ascending
};

using LeftFamily = std::vector<std::pair<Scalar, LeftShapeWord>>;
using RightFamily = std::vector<std::pair<Scalar, RightShapeWord>>;

/// Expands (1-xq)(sum a_i w_i)(1-qx)(sum b_j y_j)(1-xq) term by term.
/// Throws std::invalid_argument on repeated words or zero scalars.
CSet build_c_set(const LeftFamily& left, const RightFamily& right, const RewriteSystem& sys);

LeftFamily unit_family(const std::vector<LeftShapeWord>& words, const Field& field);
RightFamily unit_family(const std::vector<RightShapeWord>& words, const Field& field);

/// q^{i_1} x^2 q^{i_2} x^2 ... q^{i_r} x^c with i_1 >= 1, i_t >= 2 (t > 1),
/// c in {1, 2}. Meaningful for n = 3 only.
struct TauForm {
    std::vector<std::uint32_t> q_exponents;
    std::uint32_t tail = 1;

    static std::optional<TauForm> match(const Word& w);
    Word word() const;
    std::size_t groups() const noexcept { return q_exponents.size(); }
};

/// Lex-maximal word of C. Throws std::invalid_argument on an empty C-set,
/// and std::logic_error if n = 3 and the maximum is not a TauForm.
Word find_tau(const CSet& c, const RewriteSystem& sys);

enum class TauFormKind { Form1, Form2, Form3 };
const char* to_string(TauFormKind f);

struct TauOccurrence {
    Word left;
    Word right;
    TermKind kind;               // TypeI or TypeII
    bool reduced = false;        // type I word needed an interface reduction
    bool boundary = false;       // w = 1 or y = 1
    std::optional<TauFormKind> form;
    std::uint32_t r = 0;         // q-group index, 1-based
    std::uint32_t a = 0;         // Form2 only
    std::uint32_t b = 0;         // Form2 only

    nlohmann::json to_json() const;
};

/// Every pair in L x R whose type I or type II word reduces to tau, matched
/// against the three admissible shapes. Pairs with w = 1 or y = 1 are marked
/// `boundary` and left unclassified. Requires n = 3 and tau = find_tau(C).
std::vector<TauOccurrence> classify_tau_occurrences(const std::vector<LeftShapeWord>& left,
                                                    const std::vector<RightShapeWord>& right,
                                                    const Word& tau, const RewriteSystem& sys);

/// Everything the lemma checkers need about one (L, R) family.
struct TauAnalysis {
    bool c_empty = true;
    Word tau;
    std::vector<TauOccurrence> occurrences;
    bool q_in_left = false;
    bool x_in_right = false;
    std::size_t form2_or_form3 = 0;
    std::size_t form1 = 0;
    // Non-boundary occurrences that match none of the three forms, and
    // boundary occurrences when q is in L and x is in R.
    std::vector<TauOccurrence> unclassified;
    // Form1 occurrences whose w q x fails to exceed tau.
    std::vector<TauOccurrence> closing_failures;
    // When 1 is in both L and R: occurrences of qx other than the type II
    // word of (1, 1) that are not the type I word of (q, x).
    std::vector<COccurrence> qx_cancellers_outside_q_x;

    bool lemma_forms_hold() const { return unclassified.empty(); }
    bool uniqueness_holds() const { return form2_or_form3 <= 1; }
    nlohmann::json to_json() const;
};

TauAnalysis analyze_tau(const std::vector<LeftShapeWord>& left,
                        const std::vector<RightShapeWord>& right, const RewriteSystem& sys);

nlohmann::json words_to_json(const std::vector<LeftShapeWord>& left);
nlohmann::json words_to_json(const std::vector<RightShapeWord>& right);

}  // namespace nilreg
