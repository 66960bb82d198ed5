#include "nilreg/checks.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "nilreg/element.hpp"
#include "parallel.hpp"

namespace nilreg {

namespace {

std::string outcome_string(const ReductionOutcome& r) {
    return r.is_zero() ? "0" : r.result->to_string();
}

void require_n3(const RewriteSystem& sys, const char* what) {
    if (sys.kind() != PresentationKind::S || sys.nilpotency_degree() != 3)
        throw std::invalid_argument(std::string(what) + " requires S with n = 3, got " +
                                    sys.describe());
}

void require_s(const RewriteSystem& sys, const char* what) {
    if (sys.kind() != PresentationKind::S)
        throw std::invalid_argument(std::string(what) + " requires S, got " + sys.describe());
}

AlgebraElement word_el(const RewriteSystem& sys, const Field& f, const char* text) {
    return AlgebraElement::of_word(sys, f, parse_word(text));
}

}  // namespace

VerificationReport check_confluence(const RewriteSystem& sys, std::size_t max_len,
                                    std::uint64_t seed, unsigned strategies_per_word) {
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "confluence";
    rep.parameters = {{"presentation", sys.describe()},
                      {"max_len", max_len},
                      {"seed", seed},
                      {"strategies_per_word", strategies_per_word}};

    std::size_t resolved = 0;
    const auto pairs = critical_pairs(sys);
    for (const CriticalPair& cp : pairs) {
        if (cp.resolves()) {
            ++resolved;
            continue;
        }
        rep.fail_with({{"critical_pair", cp.overlap.to_string()},
                       {"left", outcome_string(cp.left)},
                       {"right", outcome_string(cp.right)}});
    }

    std::mt19937_64 rng(seed);
    std::set<std::string> normal_forms;
    std::uint64_t words = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : all_words(sys.alphabet(), len)) {
            ++words;
            const ReductionOutcome expected = reduce(w, sys);
            normal_forms.insert(outcome_string(expected));
            for (unsigned s = 0; s < strategies_per_word; ++s) {
                ReductionOutcome got = reduce_random_strategy(w, sys, rng);
                if (got.result != expected.result)
                    rep.fail_with({{"word", w.to_string()},
                                   {"reduce", outcome_string(expected)},
                                   {"random_strategy", outcome_string(got)}});
            }
        }
    }
    rep.candidates_examined = words;
    rep.details = {{"critical_pairs", pairs.size()},
                   {"critical_pairs_resolved", resolved},
                   {"distinct_normal_forms", normal_forms.size()}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport check_basis_oracle(const RewriteSystem& sys, std::size_t max_len) {
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "basis-oracle";
    rep.parameters = {{"presentation", sys.describe()}, {"max_len", max_len}};

    std::set<Word, LengthLexLess> brute;
    std::uint64_t words = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : all_words(sys.alphabet(), len)) {
            ++words;
            ReductionOutcome r = reduce(w, sys);
            if (!r.is_zero()) brute.insert(*r.result);
        }
    }
    const std::vector<Word> basis = enumerate_basis(max_len, sys);
    const std::vector<Word> expected(brute.begin(), brute.end());
    if (basis != expected) {
        nlohmann::json missing = nlohmann::json::array();
        nlohmann::json extra = nlohmann::json::array();
        for (const Word& w : expected)
            if (std::find(basis.begin(), basis.end(), w) == basis.end()) missing.push_back(w.to_string());
        for (const Word& w : basis)
            if (!brute.count(w)) extra.push_back(w.to_string());
        rep.fail_with({{"missing_from_enumeration", missing}, {"not_normal_forms", extra}});
    }
    for (const Word& w : basis) {
        if (!(reduce(w, sys).result == std::optional<Word>(w)))
            rep.fail_with({{"word", w.to_string()}, {"reason", "basis word is not a fixpoint"}});
    }
    rep.candidates_examined = words;
    rep.details = {{"basis_size", basis.size()}, {"brute_force_size", expected.size()}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

namespace {

// Block-pattern predicates used to state the lemma's clauses directly.
bool ends_in_q(const Word& w) { return !w.empty() && w.last_letter() == Letter::q; }
bool begins_with_x(const Word& y) { return !y.empty() && y.first_letter() == Letter::x; }

bool ends_in_xq(const Word& w) {
    const auto& b = w.blocks();
    return b.size() >= 2 && b.back().letter == Letter::q && b.back().exponent == 1;
}

bool ends_in_x2q(const Word& w) {
    const auto& b = w.blocks();
    return ends_in_xq(w) && b[b.size() - 2].exponent >= 2;
}

bool begins_in_x2(const Word& y) {
    return begins_with_x(y) && y.front().exponent >= 2;
}

bool begins_in_xq(const Word& y) {
    return begins_with_x(y) && y.front().exponent == 1 && y.blocks().size() >= 2;
}

// w with its last letter and y with its first letter removed.
Word delete_interface_pair(const Word& w, const Word& y) {
    std::vector<Letter> letters = w.letters();
    letters.pop_back();
    std::vector<Letter> rest = y.letters();
    letters.insert(letters.end(), rest.begin() + 1, rest.end());
    return Word::from_letters(letters);
}

}  // namespace

VerificationReport check_types_lemma(const RewriteSystem& sys, std::size_t max_len, unsigned workers) {
    require_n3(sys, "types lemma");
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "types-lemma";
    rep.parameters = {{"presentation", sys.describe()}, {"max_len", max_len}};

    const auto left = left_shape_words(max_len, sys);
    const auto right = right_shape_words(max_len, sys);
    const std::uint64_t total = left.size() * right.size();

    struct Partial {
        std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
        nlohmann::json witness;
        std::array<std::uint64_t, 4> clause_failures{};
        std::uint64_t zero_I = 0, zero_II = 0, reduced_I = 0;
    };
    std::vector<Partial> parts(std::max(1u, workers));

    detail::parallel_chunks(total, workers, [&](unsigned wk, std::uint64_t begin, std::uint64_t end) {
        Partial& p = parts[wk];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const LeftShapeWord& w = left[idx / right.size()];
            const RightShapeWord& y = right[idx % right.size()];
            const ReductionOutcome one = type_I(w, y, sys);
            const ReductionOutcome two = type_II(w, y, sys);
            const Word& ww = w.word();
            const Word& yy = y.word();

            std::array<bool, 4> ok{};
            ok[0] = one.is_zero() == (ends_in_x2q(ww) && begins_in_x2(yy));
            ok[1] = two.is_zero() == begins_in_x2(yy);
            if (one.is_zero()) {
                ok[2] = true;
            } else {
                bool predicted = (ends_in_xq(ww) && begins_with_x(yy)) ||
                                 (ends_in_q(ww) && begins_in_xq(yy));
                ok[2] = (one.steps > 0) == predicted;
                if (ok[2] && predicted) ok[2] = *one.result == delete_interface_pair(ww, yy);
            }
            ok[3] = two.is_zero() || two.steps == 0;

            p.zero_I += one.is_zero();
            p.zero_II += two.is_zero();
            p.reduced_I += !one.is_zero() && one.steps > 0;
            for (std::size_t c = 0; c < 4; ++c) {
                if (ok[c]) continue;
                ++p.clause_failures[c];
                if (idx < p.first_failure) {
                    p.first_failure = idx;
                    p.witness = {{"w", ww.to_string()},
                                 {"y", yy.to_string()},
                                 {"clause", c + 1},
                                 {"type_I", outcome_string(one)},
                                 {"type_I_steps", one.steps},
                                 {"type_II", outcome_string(two)},
                                 {"type_II_steps", two.steps}};
                }
            }
        }
    });

    Partial merged;
    for (const Partial& p : parts) {
        for (std::size_t c = 0; c < 4; ++c) merged.clause_failures[c] += p.clause_failures[c];
        merged.zero_I += p.zero_I;
        merged.zero_II += p.zero_II;
        merged.reduced_I += p.reduced_I;
        if (p.first_failure < merged.first_failure) {
            merged.first_failure = p.first_failure;
            merged.witness = p.witness;
        }
    }
    if (merged.first_failure != std::numeric_limits<std::uint64_t>::max())
        rep.fail_with(merged.witness);
    rep.candidates_examined = total;
    rep.details = {{"left_words", left.size()},
                   {"right_words", right.size()},
                   {"clause_failures", merged.clause_failures},
                   {"type_I_zero", merged.zero_I},
                   {"type_II_zero", merged.zero_II},
                   {"type_I_reduced", merged.reduced_I}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport check_tau_uniqueness(const std::vector<LeftShapeWord>& left,
                                        const std::vector<RightShapeWord>& right,
                                        const RewriteSystem& sys) {
    require_n3(sys, "tau uniqueness");
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "tau-unique";
    rep.parameters = {{"L", words_to_json(left)}, {"R", words_to_json(right)}};
    rep.candidates_examined = 1;
    const TauAnalysis an = analyze_tau(left, right, sys);
    rep.details = an.to_json();
    if (!an.lemma_forms_hold())
        rep.fail_with({{"reason", "unclassified occurrence"}, {"occurrence", an.unclassified.front().to_json()}});
    if (!an.uniqueness_holds())
        rep.fail_with({{"reason", "tau occurs more than once in forms 2/3"}, {"analysis", an.to_json()}});
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport run_tau_harness(TauCheck which, const TauHarnessOptions& opts) {
    const RewriteSystem sys = RewriteSystem::bergman(3);
    Stopwatch clock;
    VerificationReport rep;
    rep.check = which == TauCheck::forms ? "tau-forms" : "tau-unique";
    rep.parameters = {{"exhaustive_max_len", opts.exhaustive_max_len},
                      {"random_trials", opts.random_trials},
                      {"random_max_len", opts.random_max_len},
                      {"random_max_family", opts.random_max_family},
                      {"seed", opts.seed}};

    const auto ex_left = left_shape_words(opts.exhaustive_max_len, sys);
    const auto ex_right = right_shape_words(opts.exhaustive_max_len, sys);
    if (ex_left.size() + ex_right.size() > 40)
        throw std::invalid_argument("exhaustive family space too large; lower exhaustive_max_len");
    const std::uint64_t left_subsets = std::uint64_t{1} << ex_left.size();
    const std::uint64_t exhaustive = left_subsets << ex_right.size();

    const auto rnd_left = left_shape_words(opts.random_max_len, sys);
    const auto rnd_right = right_shape_words(opts.random_max_len, sys);
    std::vector<std::uint64_t> trial_seeds(opts.random_trials);
    {
        std::mt19937_64 master(opts.seed);
        for (auto& s : trial_seeds) s = master();
    }
    const LeftShapeWord one_l(Word{}, sys), q_l(Word::letter(Letter::q), sys);
    const RightShapeWord one_r(Word{}, sys), x_r(Word::letter(Letter::x), sys);

    auto family = [&](std::uint64_t idx, std::vector<LeftShapeWord>& L, std::vector<RightShapeWord>& R) {
        L.clear();
        R.clear();
        if (idx < exhaustive) {
            const std::uint64_t ml = idx % left_subsets, mr = idx / left_subsets;
            for (std::size_t i = 0; i < ex_left.size(); ++i)
                if (ml >> i & 1) L.push_back(ex_left[i]);
            for (std::size_t j = 0; j < ex_right.size(); ++j)
                if (mr >> j & 1) R.push_back(ex_right[j]);
            return;
        }
        std::mt19937_64 rng(trial_seeds[idx - exhaustive]);
        auto sample = [&](const auto& pool, auto& out) {
            std::vector<std::size_t> order(pool.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::uniform_int_distribution<std::size_t> size(1, std::min(opts.random_max_family, pool.size()));
            order.resize(size(rng));
            std::sort(order.begin(), order.end());
            for (std::size_t i : order) out.push_back(pool[i]);
        };
        sample(rnd_left, L);
        sample(rnd_right, R);
        // Half the trials carry the 1, q / 1, x context of a genuine alpha, beta.
        if (rng() & 1) {
            for (const auto& extra : {one_l, q_l})
                if (std::find(L.begin(), L.end(), extra) == L.end()) L.insert(L.begin(), extra);
            for (const auto& extra : {one_r, x_r})
                if (std::find(R.begin(), R.end(), extra) == R.end()) R.insert(R.begin(), extra);
        }
    };

    const std::uint64_t total = exhaustive + opts.random_trials;
    struct Partial {
        std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
        nlohmann::json witness;
        std::uint64_t nonempty = 0, violations = 0, form1 = 0, form23 = 0, boundary = 0,
                      context_families = 0, max_form23 = 0;
    };
    std::vector<Partial> parts(std::max(1u, opts.workers));

    detail::parallel_chunks(total, opts.workers, [&](unsigned wk, std::uint64_t begin, std::uint64_t end) {
        Partial& p = parts[wk];
        std::vector<LeftShapeWord> L;
        std::vector<RightShapeWord> R;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            family(idx, L, R);
            nlohmann::json problem;
            try {
                const TauAnalysis an = analyze_tau(L, R, sys);
                if (an.c_empty) continue;
                ++p.nonempty;
                p.form1 += an.form1;
                p.form23 += an.form2_or_form3;
                p.max_form23 = std::max<std::uint64_t>(p.max_form23, an.form2_or_form3);
                p.context_families += an.q_in_left && an.x_in_right;
                for (const auto& o : an.occurrences) p.boundary += o.boundary;
                if (which == TauCheck::forms) {
                    if (!an.unclassified.empty())
                        problem = {{"reason", "occurrence matches no form"},
                                   {"occurrence", an.unclassified.front().to_json()}};
                    else if (!an.closing_failures.empty())
                        problem = {{"reason", "w q x does not exceed tau"},
                                   {"occurrence", an.closing_failures.front().to_json()}};
                    else if (!an.qx_cancellers_outside_q_x.empty())
                        problem = {{"reason", "qx produced by a pair other than (1,1), (q,x)"},
                                   {"pair", {an.qx_cancellers_outside_q_x.front().left.to_string(),
                                             an.qx_cancellers_outside_q_x.front().right.to_string()}}};
                } else if (!an.uniqueness_holds()) {
                    problem = {{"reason", "tau occurs more than once in forms 2/3"},
                               {"analysis", an.to_json()}};
                }
            } catch (const std::logic_error& e) {
                problem = {{"reason", e.what()}};
            }
            if (problem.is_null()) continue;
            ++p.violations;
            if (idx < p.first_failure) {
                p.first_failure = idx;
                problem["L"] = words_to_json(L);
                problem["R"] = words_to_json(R);
                problem["family_index"] = idx;
                p.witness = problem;
            }
        }
    });

    Partial m;
    for (const Partial& p : parts) {
        m.nonempty += p.nonempty;
        m.violations += p.violations;
        m.form1 += p.form1;
        m.form23 += p.form23;
        m.boundary += p.boundary;
        m.context_families += p.context_families;
        m.max_form23 = std::max(m.max_form23, p.max_form23);
        if (p.first_failure < m.first_failure) {
            m.first_failure = p.first_failure;
            m.witness = p.witness;
        }
    }
    if (m.violations > 0) rep.fail_with(m.witness);
    rep.candidates_examined = total;
    rep.details = {{"exhaustive_families", exhaustive},
                   {"random_families", opts.random_trials},
                   {"nonempty_c_sets", m.nonempty},
                   {"families_with_q_and_x", m.context_families},
                   {"form1_occurrences", m.form1},
                   {"form2_or_form3_occurrences", m.form23},
                   {"max_form2_or_form3_per_family", m.max_form23},
                   {"boundary_occurrences", m.boundary},
                   {"violations", m.violations}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

namespace {

std::vector<Scalar> coefficient_values(const SearchOptions& opts) {
    std::vector<Scalar> values;
    if (opts.field.is_rational()) {
        if (opts.rational_coefficient_bound < 0)
            throw std::invalid_argument("rational coefficient bound must be >= 0");
        values.push_back(opts.field.zero());
        for (long c = 1; c <= opts.rational_coefficient_bound; ++c) {
            values.push_back(opts.field.from_int(c));
            values.push_back(opts.field.from_int(-c));
        }
    } else {
        for (std::uint32_t r = 0; r < opts.field.characteristic(); ++r)
            values.push_back(opts.field.from_int(static_cast<long>(r)));
    }
    return values;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > (std::uint64_t{1} << 40) / base)
            throw std::invalid_argument("search space exceeds 2^40 candidates");
        out *= base;
    }
    return out;
}

// Element with coefficient vector number `index` (mixed radix) on `basis`.
AlgebraElement combination(std::uint64_t index, const std::vector<AlgebraElement>& basis,
                           const std::vector<Scalar>& values, const RewriteSystem& sys,
                           const Field& field) {
    AlgebraElement out(sys, field);
    for (const AlgebraElement& b : basis) {
        const Scalar& c = values[index % values.size()];
        index /= values.size();
        if (!c.is_zero()) out += b.scaled(c);
    }
    return out;
}

}  // namespace

std::uint64_t analytic_search_count(const SearchOptions& opts) {
    const RewriteSystem sys = RewriteSystem::bergman(opts.n);
    const std::uint64_t base = coefficient_values(opts).size();
    return checked_pow(base, left_shape_words(opts.max_word_len, sys).size()) *
           checked_pow(base, right_shape_words(opts.max_word_len, sys).size());
}

VerificationReport search_unit_regular_witness(const SearchOptions& opts) {
    Stopwatch clock;
    const RewriteSystem sys = RewriteSystem::bergman(opts.n);
    const Field& f = opts.field;
    VerificationReport rep;
    rep.check = "unit-regular-search";
    rep.parameters = {{"n", opts.n}, {"max_word_len", opts.max_word_len}, {"field", f.name()}};
    if (f.is_rational()) rep.parameters["coefficient_bound"] = opts.rational_coefficient_bound;

    const auto left = left_shape_words(opts.max_word_len, sys);
    const auto right = right_shape_words(opts.max_word_len, sys);
    const std::vector<Scalar> values = coefficient_values(opts);
    const std::uint64_t n_alpha = checked_pow(values.size(), left.size());
    const std::uint64_t n_beta = checked_pow(values.size(), right.size());
    const std::uint64_t total = n_alpha * n_beta;

    const AlgebraElement one = AlgebraElement::one(sys, f);
    const AlgebraElement e_xq = one - word_el(sys, f, "x q");
    const AlgebraElement e_qx = one - word_el(sys, f, "q x");
    std::vector<AlgebraElement> alpha_basis, beta_basis;
    for (const auto& w : left)
        alpha_basis.push_back(e_xq * AlgebraElement::of_word(sys, f, w.word()) * e_qx);
    for (const auto& y : right)
        beta_basis.push_back(e_qx * AlgebraElement::of_word(sys, f, y.word()) * e_xq);

    std::vector<AlgebraElement> betas;
    betas.reserve(n_beta);
    for (std::uint64_t v = 0; v < n_beta; ++v) betas.push_back(combination(v, beta_basis, values, sys, f));

    const AlgebraElement target = e_xq;
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> found(std::max(1u, opts.workers), none);
    detail::parallel_chunks(n_alpha, opts.workers, [&](unsigned wk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t u = begin; u < end && found[wk] == none; ++u) {
            const AlgebraElement alpha = combination(u, alpha_basis, values, sys, f);
            if (alpha.is_zero()) continue;
            for (std::uint64_t v = 0; v < n_beta; ++v) {
                if (alpha * betas[v] == target) {
                    found[wk] = u * n_beta + v;
                    break;
                }
            }
        }
    });

    const std::uint64_t first = *std::min_element(found.begin(), found.end());
    rep.details = {{"left_shape_words", words_to_json(left)},
                   {"right_shape_words", words_to_json(right)},
                   {"coefficient_values", values.size()},
                   {"analytic_count", total}};
    if (first == none) {
        rep.status = Status::exhausted;
        rep.candidates_examined = total;
    } else {
        const std::uint64_t u = first / n_beta, v = first % n_beta;
        std::vector<AlgebraElement> left_words, right_words;
        for (const auto& w : left) left_words.push_back(AlgebraElement::of_word(sys, f, w.word()));
        for (const auto& y : right) right_words.push_back(AlgebraElement::of_word(sys, f, y.word()));
        rep.fail_with({{"alpha", combination(u, alpha_basis, values, sys, f).to_string()},
                       {"beta", betas[v].to_string()},
                       {"u", combination(u, left_words, values, sys, f).to_string()},
                       {"v", combination(v, right_words, values, sys, f).to_string()}});
        rep.candidates_examined = first + 1;
    }
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

namespace {

void record_identity(VerificationReport& rep, const std::string& name, const AlgebraElement& lhs,
                     const AlgebraElement& rhs, bool expect_equal = true) {
    const bool equal = lhs == rhs;
    const bool holds = equal == expect_equal;
    rep.details["identities"].push_back({{"identity", name},
                                         {"lhs", lhs.to_string()},
                                         {"rhs", rhs.to_string()},
                                         {"holds", holds}});
    ++rep.candidates_examined;
    if (!holds) rep.fail_with({{"identity", name}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
}

}  // namespace

VerificationReport check_regularity_identities(const RewriteSystem& sys, const Field& f) {
    require_s(sys, "regularity identities");
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "regularity";
    rep.parameters = {{"presentation", sys.describe()}, {"field", f.name()}};
    rep.details["identities"] = nlohmann::json::array();

    const unsigned n = sys.nilpotency_degree();
    const AlgebraElement x = word_el(sys, f, "x");
    const AlgebraElement q = word_el(sys, f, "q");
    const AlgebraElement zero(sys, f);
    record_identity(rep, "x q x = x", x * q * x, x);
    record_identity(rep, "q x q = q", q * x * q, q);
    record_identity(rep, "x^" + std::to_string(n) + " = 0", power(x, n), zero);
    record_identity(rep, "x^" + std::to_string(n - 1) + " != 0", power(x, n - 1), zero, false);
    const AlgebraElement g = q * x * q;
    record_identity(rep, "(q x q) x (q x q) = q x q", g * x * g, g);
    record_identity(rep, "x (q x q) x = x", x * g * x, x);
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport check_separativity_identities(const RewriteSystem& sys, const Field& f) {
    require_s(sys, "separativity identities");
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "separativity";
    rep.parameters = {{"presentation", sys.describe()}, {"field", f.name()}};
    rep.details["identities"] = nlohmann::json::array();

    const unsigned n = sys.nilpotency_degree();
    const AlgebraElement one = AlgebraElement::one(sys, f);
    const AlgebraElement x = word_el(sys, f, "x");
    const AlgebraElement q = word_el(sys, f, "q");
    const AlgebraElement e = one - x * q;
    const AlgebraElement e2 = one - q * x;

    AlgebraElement left(sys, f), right(sys, f);
    std::string left_name, right_name;
    for (unsigned k = 0; k < n; ++k) {
        left += power(x, k) * e * power(q, k);
        right += power(q, k) * e2 * power(x, k);
        const std::string xk = Word::letter(Letter::x, k).to_string();
        const std::string qk = Word::letter(Letter::q, k).to_string();
        left_name += k ? " + " + xk + " (1 - x q) " + qk : "(1 - x q)";
        right_name += k ? " + " + qk + " (1 - q x) " + xk : "(1 - q x)";
    }
    record_identity(rep, "1 - x q is idempotent", e * e, e);
    record_identity(rep, "1 - q x is idempotent", e2 * e2, e2);
    record_identity(rep, left_name + " = 1", left, one);
    record_identity(rep, right_name + " = 1", right, one);
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

VerificationReport check_primeness_bounded(const RewriteSystem& sys, const Field& f,
                                           std::size_t max_len, std::uint64_t seed,
                                           std::size_t random_trials) {
    require_s(sys, "primeness");
    if (sys.nilpotency_degree() < 3)
        throw std::invalid_argument("bounded primeness check requires n >= 3");
    Stopwatch clock;
    VerificationReport rep;
    rep.check = "primeness";
    rep.parameters = {{"presentation", sys.describe()},
                      {"field", f.name()},
                      {"max_len", max_len},
                      {"seed", seed},
                      {"random_trials", random_trials}};

    const AlgebraElement x = word_el(sys, f, "x");
    const AlgebraElement q = word_el(sys, f, "q");
    auto test = [&](const AlgebraElement& z) {
        ++rep.candidates_examined;
        const bool left_ok = !(q * z).is_zero() || !(x * z).is_zero();
        const bool right_ok = !(z * q).is_zero() || !(z * x).is_zero();
        if (!left_ok || !right_ok)
            rep.fail_with({{"z", z.to_string()}, {"side", !left_ok ? "left" : "right"}});
    };

    const std::vector<Word> basis = enumerate_basis(max_len, sys);
    for (const Word& w : basis) test(AlgebraElement::of_word(sys, f, w));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<std::size_t> support(2, std::min<std::size_t>(5, basis.size()));
    const long span = f.is_rational() ? 5 : static_cast<long>(f.characteristic()) - 1;
    std::uniform_int_distribution<long> coeff(1, std::max(1L, span));
    for (std::size_t t = 0; t < random_trials; ++t) {
        AlgebraElement z(sys, f);
        const std::size_t k = support(rng);
        while (z.size() < k) {
            const Word& w = basis[pick(rng)];
            if (!z.coefficient(w).is_zero()) continue;
            long c = coeff(rng);
            if (f.is_rational() && (rng() & 1)) c = -c;
            z.add_term(w, f.from_int(c));
        }
        test(z);
    }
    rep.details = {{"single_words", basis.size()}, {"random_elements", random_trials}};
    rep.elapsed_ms = clock.elapsed_ms();
    return rep;
}

}  // namespace nilreg
