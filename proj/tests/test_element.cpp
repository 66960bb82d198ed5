#include "doctest.h"

#include <random>

#include "nilreg/element.hpp"

using namespace nilreg;

namespace {
const RewriteSystem S3 = RewriteSystem::bergman(3);
AlgebraElement el(const char* text, const Field& f = Field::rationals(), const RewriteSystem& s = S3) {
    return parse_element(text, s, f);
}
}  // namespace

TEST_CASE("element literals") {
    CHECK(el("1 - x q").to_string() == "1 - x q");
    CHECK(el("2 q^2 x - 3/4").to_string() == "-3/4 + 2 q^2 x");
    CHECK(el("x q x").to_string() == "x");
    CHECK(el("x^3 + q").to_string() == "q");
    CHECK(el("x - x").to_string() == "0");
    CHECK(el("0").is_zero());
    CHECK(el("x + x", Field::prime(2)).is_zero());
    CHECK_THROWS_AS(el("x +"), ParseError);
    CHECK_THROWS_AS(el("a b"), ParseError);
    CHECK_THROWS_AS(el("1/0"), std::exception);
}

TEST_CASE("products of basis words") {
    CHECK((el("q^3 x^2 q") * el("x q^4 x^2")).to_string() == "q^3 x^2 q^4 x^2");
    CHECK((el("q x^2 q") * el("x^2 q")).is_zero());
    CHECK((el("1 - x q") * el("1 - x q")) == el("1 - x q"));
    CHECK(power(el("x"), 3).is_zero());
    CHECK(power(el("x"), 2).to_string() == "x^2");
    CHECK(power(el("q"), 0) == AlgebraElement::one(S3, Field::rationals()));
}

TEST_CASE("idempotents and corners") {
    const auto e = el("1 - x q");
    const auto g = el("1 - q x");
    CHECK(is_idempotent(e));
    CHECK(is_idempotent(g));
    CHECK(is_idempotent(el("q x")));
    CHECK_FALSE(is_idempotent(el("q")));
    CHECK(corner(el("x"), e, g).is_zero());  // (1 - xq) x = x - xqx
    CHECK(corner(el("q x"), el("q x"), el("q x")) == el("q x"));
    CHECK(corner(el("x q"), el("q x"), el("q x")).to_string() == "q x^2 q^2 x");
    CHECK_THROWS_AS(corner(el("x"), el("q"), e), std::invalid_argument);
    // qx S qx: q x^2 and q^2 x sit in it.
    CHECK(corner(el("q x^2"), el("q x"), el("q x")) == el("q x^2"));
    CHECK(corner(el("q^2 x"), el("q x"), el("q x")) == el("q^2 x"));
}

TEST_CASE("mismatched operands throw") {
    CHECK_THROWS_AS(el("x") + el("x", Field::prime(2)), std::invalid_argument);
    CHECK_THROWS_AS(el("x") * el("x", Field::rationals(), RewriteSystem::bergman(4)), std::invalid_argument);
}

TEST_CASE("json round trip") {
    for (Field f : {Field::prime(3), Field::rationals()}) {
        auto e = el("2 q^2 x - 1 + x^2 q", f);
        auto j = e.to_json();
        CHECK(AlgebraElement::from_json(j, S3, f) == e);
    }
    CHECK(el("1 - x q").to_json() == nlohmann::json{{"1", "1"}, {"x q", "-1"}});
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(11);
    for (std::uint32_t n : {2u, 3u, 4u}) {
        const auto s = RewriteSystem::bergman(n);
        for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
            const auto basis = enumerate_basis(5, s);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            std::uniform_int_distribution<long> coeff(-3, 3);
            auto random_el = [&] {
                AlgebraElement e(s, f);
                for (int k = 0; k < 4; ++k) e.add_term(basis[pick(rng)], f.from_int(coeff(rng)));
                return e;
            };
            for (int trial = 0; trial < 25; ++trial) {
                auto a = random_el(), b = random_el(), c = random_el();
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a + b) * c == a * c + b * c);
                CHECK(a + b == b + a);
                CHECK((a - a).is_zero());
                CHECK(a * AlgebraElement::one(s, f) == a);
            }
        }
    }
}
