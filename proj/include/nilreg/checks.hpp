#pragma once

#include <cstdint>

#include "nilreg/report.hpp"
#include "nilreg/rewrite.hpp"
#include "nilreg/scalar.hpp"
#include "nilreg/structure.hpp"

namespace nilreg {

// Bounded checks on S. Each returns a report; a failed check carries the
// offending instance as its witness.

/// Critical pairs resolve, and random-strategy reduction of every word of
/// length <= max_len agrees with reduce().
VerificationReport check_confluence(const RewriteSystem& sys, std::size_t max_len,
                                    std::uint64_t seed, unsigned strategies_per_word = 4);

/// enumerate_basis(max_len) equals the set of nonzero normal forms of all
/// words of length <= max_len.
VerificationReport check_basis_oracle(const RewriteSystem& sys, std::size_t max_len);

/// Zero/reduction behaviour of type I and type II words against the four
/// clauses, for all shape-word pairs of length <= max_len. n = 3 only.
VerificationReport check_types_lemma(const RewriteSystem& sys, std::size_t max_len,
                                     unsigned workers = 1);

/// Single-family uniqueness check: at most one form-2/form-3 occurrence of
/// tau, every non-boundary occurrence classified.
VerificationReport check_tau_uniqueness(const std::vector<LeftShapeWord>& left,
                                        const std::vector<RightShapeWord>& right,
                                        const RewriteSystem& sys);

struct TauHarnessOptions {
    std::size_t exhaustive_max_len = 3;  // all subsets of shape words up to this length
    std::size_t random_trials = 10000;
    std::size_t random_max_len = 6;
    std::size_t random_max_family = 6;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

enum class TauCheck { forms, uniqueness };

/// Exhaustive plus seeded random (L, R) families. `forms` asserts every
/// occurrence of tau is classified (and the tau-shape, closing-argument and
/// qx-cancellation invariants); `uniqueness` asserts at most one
/// form-2/form-3 occurrence.
VerificationReport run_tau_harness(TauCheck which, const TauHarnessOptions& opts);

struct SearchOptions {
    std::size_t max_word_len = 3;
    Field field = Field::prime(2);
    long rational_coefficient_bound = 1;  // coefficients in [-B, B] over Q
    unsigned workers = 1;
    std::uint32_t n = 3;
};

/// Number of (alpha, beta) candidates the search enumerates.
std::uint64_t analytic_search_count(const SearchOptions& opts);

/// Looks for alpha = (1-xq) u (1-qx), beta = (1-qx) v (1-xq) with
/// alpha beta = 1 - xq, u and v ranging over all coefficient vectors on the
/// shape words of length <= max_word_len.
VerificationReport search_unit_regular_witness(const SearchOptions& opts);

/// xqx = x, qxq = q, x^n = 0, x^(n-1) != 0 and (qxq) x (qxq) = qxq.
VerificationReport check_regularity_identities(const RewriteSystem& sys, const Field& field);

/// sum_k x^k (1-xq) q^k = 1 = sum_k q^k (1-qx) x^k for k < n, together with
/// idempotence of 1-xq and 1-qx.
VerificationReport check_separativity_identities(const RewriteSystem& sys, const Field& field);

/// For nonzero z supported on basis words of length <= max_len:
/// qz or xz is nonzero, and zq or zx is nonzero. Single words exhaustively,
/// random multi-word supports for `random_trials` draws. Requires n >= 3.
VerificationReport check_primeness_bounded(const RewriteSystem& sys, const Field& field,
                                           std::size_t max_len, std::uint64_t seed,
                                           std::size_t random_trials = 1000);

}  // namespace nilreg
