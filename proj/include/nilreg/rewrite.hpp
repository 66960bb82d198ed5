#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilreg/word.hpp"

namespace nilreg {

enum class PresentationKind : std::uint8_t {
    S,  // F<x, q | x^n = 0, xqx = x, qxq = q>
    R,  // F<a, b | a^m = 0>
};

/// A monomial rule lhs -> rhs; an empty optional rhs means lhs -> 0.
struct Rule {
    Word lhs;
    std::optional<Word> rhs;
};

/// One of the two fixed rule families. Cheap to copy: the rule list is
/// materialized on demand.
class RewriteSystem {
  public:
    // S with x^n = 0, n >= 2.
    static RewriteSystem bergman(std::uint32_t n = 3);
    // R with a^m = 0. m = 1 encodes a = 0 (the degenerate n = 2 target);
    // m >= 2 otherwise.
    static RewriteSystem nilpotent_free(std::uint32_t m);

    PresentationKind kind() const noexcept { return kind_; }
    Alphabet alphabet() const noexcept {
        return kind_ == PresentationKind::S ? Alphabet::xq : Alphabet::ab;
    }
    Letter nilpotent_letter() const noexcept {
        return kind_ == PresentationKind::S ? Letter::x : Letter::a;
    }
    Letter other_letter() const noexcept {
        return kind_ == PresentationKind::S ? Letter::q : Letter::b;
    }
    std::uint32_t nilpotency_degree() const noexcept { return degree_; }

    std::vector<Rule> rules() const;

    // Throws std::invalid_argument if w uses letters of the other alphabet.
    void check_alphabet(const Word& w) const;

    std::string describe() const;

    friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;

  private:
    RewriteSystem(PresentationKind kind, std::uint32_t degree)
        : kind_(kind), degree_(degree) {}

    PresentationKind kind_;
    std::uint32_t degree_;
};

struct ReductionOutcome {
    std::optional<Word> result;  // nullopt is Zero
    std::uint32_t steps = 0;

    bool is_zero() const noexcept { return !result.has_value(); }
    friend bool operator==(const ReductionOutcome&, const ReductionOutcome&) = default;
};

/// Normal form of w. Rules are applied at the leftmost redex by end
/// position (a single left-to-right pass), so step counts are deterministic.
ReductionOutcome reduce(const Word& w, const RewriteSystem& sys);

/// reduce(u * v) for u, v in normal form; only the interface can reduce.
ReductionOutcome concat_reduce(const Word& u, const Word& v, const RewriteSystem& sys);

/// Closed-form basis predicate: alternating blocks, nilpotent-letter
/// exponents below the degree, and (in S) interior exponents >= 2.
bool is_basis_word(const Word& w, const RewriteSystem& sys);

/// All normal-form words of length <= max_len in shortlex order.
std::vector<Word> enumerate_basis(std::size_t max_len, const RewriteSystem& sys);

// Flat rewriting on explicit rule lists. Used for confluence checks and as
// an independent route to the normal form.
struct RedexSite {
    std::size_t rule;
    std::size_t position;
};

std::vector<RedexSite> find_redexes(const std::vector<Letter>& w,
                                    const std::vector<Rule>& rules);

// Applies one rule at a site; nullopt when the word becomes zero.
std::optional<std::vector<Letter>> apply_rule(const std::vector<Letter>& w,
                                              const Rule& rule,
                                              std::size_t position);

// Reduces by choosing a uniformly random redex at each step.
ReductionOutcome reduce_random_strategy(const Word& w, const RewriteSystem& sys,
                                        std::mt19937_64& rng);

struct CriticalPair {
    Word overlap;
    std::size_t first_rule;
    std::size_t second_rule;
    ReductionOutcome left;   // first rule applied first, then normalized
    ReductionOutcome right;  // second rule applied first, then normalized

    bool resolves() const { return left.result == right.result; }
};

/// Every overlap and inclusion ambiguity between rule left-hand sides.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);

}  // namespace nilreg
