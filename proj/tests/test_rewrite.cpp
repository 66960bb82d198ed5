#include "doctest.h"

#include <random>

#include "nilreg/rewrite.hpp"

using namespace nilreg;

namespace {
std::string nf(const char* text, const RewriteSystem& sys = RewriteSystem::bergman(3)) {
    auto r = reduce(parse_word(text), sys);
    return r.is_zero() ? "0" : r.result->to_string();
}
}  // namespace

TEST_CASE("normal-form goldens") {
    CHECK(nf("q^2 x q x q^3 x^2 q") == "q^4 x^2 q");
    CHECK(nf("q^3 x^2 q x q^4 x^2") == "q^3 x^2 q^4 x^2");
    CHECK(nf("q x^2 q x^2 q") == "0");
    CHECK(nf("x^3") == "0");
    CHECK(nf("x q x") == "x");
    CHECK(nf("q x q") == "q");
    CHECK(nf("1") == "1");
    CHECK(nf("x q x q x q x") == "x");
    CHECK(nf("x q^2 x q^2 x") == "x q^3 x");
    CHECK(nf("x^2 q^2 x^2 q^2 x") == "x^2 q^2 x^2 q^2 x");
}

TEST_CASE("concat_reduce only touches the interface") {
    const auto s = RewriteSystem::bergman(3);
    auto r = concat_reduce(parse_word("q^3 x^2 q"), parse_word("x q^4 x^2"), s);
    REQUIRE_FALSE(r.is_zero());
    CHECK(r.result->to_string() == "q^3 x^2 q^4 x^2");
    CHECK(r.steps == 1);
    CHECK(concat_reduce(parse_word("q x^2 q"), parse_word("x^2 q"), s).is_zero());
    auto none = concat_reduce(parse_word("q^2"), parse_word("x^2"), s);
    CHECK(none.steps == 0);
}

TEST_CASE("critical pairs resolve") {
    const auto s = RewriteSystem::bergman(3);
    auto pairs = critical_pairs(s);
    CHECK(pairs.size() == 8);
    for (const auto& cp : pairs) CHECK(cp.resolves());
    CHECK(nf("x q x q") == "x q");
    CHECK(nf("q x q x") == "q x");
    CHECK(nf("x q x^3") == "0");
    CHECK(nf("x^3 q x") == "0");
    for (std::uint32_t n = 2; n <= 6; ++n)
        for (const auto& cp : critical_pairs(RewriteSystem::bergman(n))) CHECK(cp.resolves());
    for (const auto& cp : critical_pairs(RewriteSystem::nilpotent_free(2))) CHECK(cp.resolves());
}

TEST_CASE("basis counts at small lengths") {
    const auto s = RewriteSystem::bergman(3);
    std::size_t expected[] = {1, 3, 7, 12};
    for (std::size_t len = 0; len <= 3; ++len) CHECK(enumerate_basis(len, s).size() == expected[len]);
    CHECK(enumerate_basis(8, s).size() == 88);
    CHECK(enumerate_basis(0, s).front().empty());
}

TEST_CASE("basis predicate") {
    const auto s = RewriteSystem::bergman(3);
    CHECK(is_basis_word(parse_word("q^4 x^2 q"), s));
    CHECK(is_basis_word(parse_word("x q"), s));
    CHECK_FALSE(is_basis_word(parse_word("x q x"), s));
    CHECK_FALSE(is_basis_word(parse_word("x^3"), s));
    CHECK_FALSE(is_basis_word(parse_word("q x q^2"), s));
    CHECK(is_basis_word(parse_word("x^2 q^2 x^2"), s));
    const auto r = RewriteSystem::nilpotent_free(2);
    CHECK(is_basis_word(parse_word("a b a b^2 a"), r));
    CHECK_FALSE(is_basis_word(parse_word("b a^2"), r));
}

TEST_CASE("R reductions") {
    const auto r = RewriteSystem::nilpotent_free(2);
    CHECK(concat_reduce(parse_word("b a"), parse_word("a b"), r).is_zero());
    CHECK(nf("b b", r) == "b^2");
    CHECK(nf("a b a", r) == "a b a");
    const auto r1 = RewriteSystem::nilpotent_free(1);
    CHECK(nf("b a b", r1) == "0");
    CHECK(nf("b^3", r1) == "b^3");
}

TEST_CASE("alphabet mismatch") {
    CHECK_THROWS_AS(RewriteSystem::bergman(3).check_alphabet(parse_word("a b")), std::invalid_argument);
    CHECK_THROWS_AS(RewriteSystem::bergman(1), std::invalid_argument);
    CHECK(RewriteSystem::bergman(3).describe() == "S(n=3)");
    CHECK(RewriteSystem::nilpotent_free(2).describe() == "R(m=2)");
}

TEST_CASE("random strategies agree with reduce") {
    std::mt19937_64 rng(7);
    for (std::uint32_t n : {2u, 3u, 4u}) {
        const auto s = RewriteSystem::bergman(n);
        for (std::size_t len = 0; len <= 8; ++len)
            for (const auto& w : all_words(Alphabet::xq, len))
                CHECK(reduce_random_strategy(w, s, rng).result == reduce(w, s).result);
    }
}

TEST_CASE("normal forms are fixed points and are basis words") {
    const auto s = RewriteSystem::bergman(4);
    for (std::size_t len = 0; len <= 8; ++len)
        for (const auto& w : all_words(Alphabet::xq, len)) {
            auto r = reduce(w, s);
            CHECK((r.steps == 0) == is_basis_word(w, s));
            if (!r.is_zero()) {
                CHECK(is_basis_word(*r.result, s));
                CHECK(reduce(*r.result, s).steps == 0);
            }
        }
}
