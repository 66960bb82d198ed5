// Acceptance criteria 1-10. One line per criterion; exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nilreg/checks.hpp"
#include "nilreg/element.hpp"
#include "nilreg/matrix_rep.hpp"

using namespace nilreg;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_ms;
    std::function<Outcome()> run;
};

const RewriteSystem S3 = RewriteSystem::bergman(3);

std::string nf(const Word& w) {
    auto r = reduce(w, S3);
    return r.is_zero() ? "0" : r.result->to_string();
}

Outcome normal_form_goldens() {
    Outcome o;
    o.require(nf(parse_word("q^2 x q x q^3 x^2 q")) == "q^4 x^2 q", "q^2xqxq^3x^2q");
    auto c = concat_reduce(parse_word("q^3 x^2 q"), parse_word("x q^4 x^2"), S3);
    o.require(!c.is_zero() && c.result->to_string() == "q^3 x^2 q^4 x^2", "(q^3x^2q)(xq^4x^2)");
    return o;
}

Outcome confluence() {
    Outcome o;
    auto rep = check_confluence(S3, 8, 1);
    o.require(rep.status == Status::pass, "confluence report failed: " + rep.to_json().dump());
    o.require(rep.details["critical_pairs"] == rep.details["critical_pairs_resolved"], "unresolved pair");
    o.require(rep.candidates_examined == 511, "word count");
    o.note = o.ok ? std::to_string(rep.candidates_examined) + " words, " +
                        rep.details["critical_pairs"].dump() + " critical pairs"
                  : o.note;
    return o;
}

Outcome basis_oracle() {
    Outcome o;
    std::string counts;
    for (std::size_t len = 0; len <= 8; ++len) {
        auto rep = check_basis_oracle(S3, len);
        o.require(rep.status == Status::pass, "mismatch at L = " + std::to_string(len));
        counts += (len ? "/" : "") + rep.details["basis_size"].dump();
    }
    if (o.ok) o.note = "sizes " + counts;
    return o;
}

Outcome types_lemma() {
    Outcome o;
    auto rep = check_types_lemma(S3, 7);
    o.require(rep.status == Status::pass, "witness " + (rep.witness ? rep.witness->dump() : ""));
    if (o.ok) o.note = std::to_string(rep.candidates_examined) + " pairs, 0 exceptions";
    return o;
}

Outcome tau_lemmas() {
    Outcome o;
    TauHarnessOptions opts;  // exhaustive <= 3, 10^4 random trials with words <= 6
    auto forms = run_tau_harness(TauCheck::forms, opts);
    auto unique = run_tau_harness(TauCheck::uniqueness, opts);
    o.require(forms.status == Status::pass, "forms: " + (forms.witness ? forms.witness->dump() : ""));
    o.require(unique.status == Status::pass, "uniqueness: " + (unique.witness ? unique.witness->dump() : ""));
    o.require(forms.details["random_families"] == 10000, "trial count");
    if (o.ok)
        o.note = std::to_string(forms.candidates_examined) + " families, " +
                 forms.details["nonempty_c_sets"].dump() + " with nonempty C, 0 violations";
    return o;
}

Outcome unit_regular_search() {
    Outcome o;
    SearchOptions opts;
    const std::uint64_t analytic = (std::uint64_t{1} << left_shape_words(3, S3).size()) *
                                   (std::uint64_t{1} << right_shape_words(3, S3).size());
    auto rep = search_unit_regular_witness(opts);
    o.require(rep.status == Status::exhausted, "status " + to_string(rep.status));
    o.require(!rep.witness, "witness present");
    o.require(rep.candidates_examined == analytic, "count " + std::to_string(rep.candidates_examined) +
                                                       " != analytic " + std::to_string(analytic));
    o.require(analytic_search_count(opts) == analytic, "analytic_search_count");
    if (o.ok) o.note = "exhausted " + std::to_string(analytic) + " candidates, no witness";
    return o;
}

Outcome identities() {
    Outcome o;
    auto reg = check_regularity_identities(S3, Field::rationals());
    auto sep = check_separativity_identities(S3, Field::rationals());
    o.require(reg.status == Status::pass, "regularity");
    o.require(sep.status == Status::pass, "separativity");
    return o;
}

Outcome isomorphism_evidence() {
    Outcome o;
    for (Field f : {Field::prime(2), Field::rationals()}) {
        const PhiMap map(3, f);
        const auto& ring = map.ring();
        const auto X = generator_X(ring, f), Q = generator_Q(ring, f);
        o.require(X * Q * X == X, "XQX");
        o.require(Q * X * Q == Q, "QXQ");
        o.require((X * X * X).is_zero(), "X^3");
        o.require(map.of_word(parse_word("q x^2")) ==
                      MatrixElement::unit(0, 0, parse_element("a", ring, f)), "phi(qx^2)");
        o.require(map.of_word(parse_word("q^2 x")) ==
                      MatrixElement::unit(0, 0, parse_element("b", ring, f)), "phi(q^2x)");
        auto rep = verify_phi_faithful(6, f, 3);
        o.require(rep.status == Status::pass, "faithfulness over " + f.name());
        if (o.ok) o.note += (o.note.empty() ? "" : ", ") + f.name() + " rank " +
                            rep.details["rank"].dump() + "/" + rep.details["basis_words"].dump();
    }
    return o;
}

Outcome determinant_obstruction() {
    Outcome o;
    const Field f = Field::prime(2);
    const auto ring = RewriteSystem::nilpotent_free(2);
    auto p = pi_eval(parse_element("1 - b a", ring, f));
    o.require(p(0, 0).is_zero() && p(0, 1).is_zero() && p(1, 0).is_zero() && p(1, 1).is_one(),
              "pi(1 - ba)");
    o.require(determinant(p).is_zero(), "det");
    auto rep = check_determinant_obstruction(1, 1000, f);
    o.require(rep.status == Status::pass && rep.candidates_examined == 1000, "random trials");
    return o;
}

Outcome n2_degenerate() {
    Outcome o;
    for (Field f : {Field::prime(2), Field::rationals()}) {
        auto rep = n2_variant_check(f);
        o.require(rep.status == Status::pass, "n2 variant over " + f.name());
        const PhiMap map(2, f);
        auto e = parse_element("1 - q x - x q + x q^2 x", map.source(), f);
        o.require(!e.is_zero() && e * e == e, "e idempotent");
        o.require(map(e).is_zero(), "phi(e) = 0");
        auto three = verify_phi_faithful(6, f, 3);
        o.require(three.status == Status::pass, "n = 3 kernel in degree <= 6");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "normal-form goldens", 1.0, normal_form_goldens},
        {2, "confluence, words of length <= 8", 5000.0, confluence},
        {3, "basis oracle equivalence, L <= 8", 10000.0, basis_oracle},
        {4, "lemma on types, |w|, |y| <= 7", 60000.0, types_lemma},
        {5, "tau lemmas, exhaustive <= 3 plus 10^4 random", 300000.0, tau_lemmas},
        {6, "unit-regularity search, GF(2), support <= 3", 600000.0, unit_regular_search},
        {7, "regularity and separativity identities", 1.0, identities},
        {8, "isomorphism evidence, degree <= 6", 60000.0, isomorphism_evidence},
        {9, "determinant obstruction", 1000.0, determinant_obstruction},
        {10, "n = 2 degenerate case", 10000.0, n2_degenerate},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Stopwatch clock;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double ms = clock.elapsed_ms();
        const bool in_budget = ms < c.budget_ms;
        const bool pass = o.ok && in_budget;
        failures += !pass;
        std::string note = o.note;
        if (o.ok && !in_budget) note = "over budget";
        std::printf("criterion %2d: %s  %-48s %10.3f ms (budget %.0f ms)%s%s\n", c.id, pass ? "PASS" : "FAIL",
                    c.title, ms, c.budget_ms, note.empty() ? "" : "  ", note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
