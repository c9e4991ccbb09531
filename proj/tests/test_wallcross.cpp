#include <doctest.h>

#include "lgpot/expr.hpp"
#include "lgpot/wallcross.hpp"
#include "support/generators.hpp"

using namespace lgpot;
using namespace lgpot::test;

namespace {

const std::vector<std::string> UV = {"u", "v"};
const std::vector<std::string> X = {"x"};
const std::vector<std::string> XY = {"x", "y"};

// u -> u, v -> (1+u)^{-1} v^{-1}: the Clifford/Chekanov mutation.
SubstitutionMap chekanov_map() {
    SubstEntry eu{Scalar(1), {1, 0}, std::nullopt, 0};
    SubstEntry ev{Scalar(1), {0, -1},
                  std::make_pair(Scalar(1), ExpVec{1, 0}), -1};
    return SubstitutionMap(UV, UV, {eu, ev});
}

} // namespace

TEST_CASE("rational function construction and equality") {
    LaurentPoly x = parse_poly("x", X);
    CHECK_THROWS_AS(RationalFunction(x, LaurentPoly(X)), DomainError);

    // x/1 == x^2/x by cross-multiplication.
    CHECK(rf_equals(RationalFunction::from_poly(x),
                    RationalFunction(parse_poly("x^2", X), x)));
    CHECK(rf_equals(RationalFunction::from_poly(parse_poly("(u+1)*v", UV)),
                    RationalFunction::from_poly(parse_poly("u*v + v", UV))));
    CHECK(!rf_equals(RationalFunction::from_poly(parse_poly("x", XY)),
                     RationalFunction::from_poly(parse_poly("y", XY))));
}

TEST_CASE("rf_equals is an equivalence relation") {
    Rng rng(0xe96a1);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t m = 1 + iter % 2;
        auto rf = [&](Rng& r) {
            return RationalFunction(random_poly(r, m, 3, 2),
                                    random_nonzero_poly(r, m, 3, 2));
        };
        RationalFunction a = rf(rng), b = rf(rng), c = rf(rng);
        CHECK(rf_equals(a, a));
        CHECK(rf_equals(b, b));
        if (rf_equals(a, b)) CHECK(rf_equals(b, a));
        if (rf_equals(a, b) && rf_equals(b, c)) CHECK(rf_equals(a, c));
    }
}

TEST_CASE("substitute: identity and displayed examples") {
    LaurentPoly x = parse_poly("x", X);
    CHECK(rf_equals(substitute(x, SubstitutionMap::identity(X)),
                    RationalFunction::from_poly(x)));

    // v^{-1} o (v -> (1+u)^{-1} v^{-1}) = (1+u) v.
    LaurentPoly vinv = parse_poly("v^-1", UV);
    RationalFunction image = substitute(vinv, chekanov_map());
    CHECK(rf_equals(image, RationalFunction::from_poly(parse_poly("(1+u)*v", UV))));

    // x -> (1+y)x expands x+1 into x + xy + 1.
    SubstEntry ex{Scalar(1), {1, 0}, std::make_pair(Scalar(1), ExpVec{0, 1}), 1};
    SubstitutionMap phi({"x"}, XY, {ex});
    CHECK(rf_equals(substitute(parse_poly("x + 1", {"x"}), phi),
                    RationalFunction::from_poly(parse_poly("x + x*y + 1", XY))));
}

TEST_CASE("substitute: arity errors") {
    CHECK_THROWS_AS(substitute(parse_poly("x", X), chekanov_map()), DomainError);
    SubstEntry bad{Scalar(0), {1, 0}, std::nullopt, 0};
    CHECK_THROWS_AS(SubstitutionMap(UV, UV, {bad, bad}), DomainError);
    SubstEntry no_binom{Scalar(1), {1, 0}, std::nullopt, 2};
    CHECK_THROWS_AS(SubstitutionMap(UV, UV, {no_binom, no_binom}), DomainError);
}

TEST_CASE("substitute respects ring structure") {
    Rng rng(0x5b57);
    SubstitutionMap phi = chekanov_map();
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly f = random_poly(rng, 2, 3, 2);
        LaurentPoly g = random_poly(rng, 2, 3, 2);
        // random_poly names variables x,y; rebuild over (u,v).
        LaurentPoly fu(UV), gu(UV);
        for (const auto& [e, c] : f.terms()) fu.add_term(e, c);
        for (const auto& [e, c] : g.terms()) gu.add_term(e, c);
        CHECK(rf_equals(substitute(fu * gu, phi),
                        rf_mul(substitute(fu, phi), substitute(gu, phi))));
        CHECK(rf_equals(substitute(fu + gu, phi),
                        rf_add(substitute(fu, phi), substitute(gu, phi))));
    }
}

TEST_CASE("monomial-only maps keep denominator 1") {
    Rng rng(0x30303);
    for (int iter = 0; iter < 100; ++iter) {
        // x -> x y^2, y -> x^-1: a monomial substitution.
        SubstEntry e1{random_nonzero_scalar(rng), {1, 2}, std::nullopt, 0};
        SubstEntry e2{random_nonzero_scalar(rng), {-1, 0}, std::nullopt, 0};
        SubstitutionMap phi(XY, XY, {e1, e2});
        LaurentPoly f = random_poly(rng, 2, 4, 2);
        RationalFunction r = substitute(f, phi);
        CHECK(r.den == LaurentPoly::one(XY));
    }
}

TEST_CASE("coefficient-1 unimodular monomial maps agree with change_basis") {
    Rng rng(0xc4a6e);
    for (int iter = 0; iter < 100; ++iter) {
        UnimodularMatrix a = random_unimodular(rng, 2);
        std::vector<SubstEntry> entries;
        for (std::size_t i = 0; i < 2; ++i)
            entries.push_back(SubstEntry{
                Scalar(1), {a.at(i, 0), a.at(i, 1)}, std::nullopt, 0});
        SubstitutionMap phi(XY, XY, entries);
        LaurentPoly f = random_poly(rng, 2, 4, 2);
        RationalFunction r = substitute(f, phi);
        CHECK(r.den == LaurentPoly::one(XY));
        CHECK(r.num == f.change_basis(a));
    }
}

TEST_CASE("wall crossing: Clifford vs Chekanov") {
    LaurentPoly w0 = parse_poly("(u+1)*v", UV);
    LaurentPoly w1 = parse_poly("v^-1", UV);
    CHECK(wall_crossing_check(w0, w1, chekanov_map()));
    CHECK(!wall_crossing_check(w0, w1, SubstitutionMap::identity(UV)));
    CHECK(wall_crossing_check(w0, w0, SubstitutionMap::identity(UV)));
}

TEST_CASE("pointwise evaluation compatibility") {
    LaurentPoly w0 = parse_poly("(u+1)*v", UV);
    LaurentPoly w1 = parse_poly("v^-1", UV);
    SubstitutionMap phi = chekanov_map();
    REQUIRE(wall_crossing_check(w0, w1, phi));

    Rng rng(0x90177);
    int used = 0;
    for (int iter = 0; iter < 400 && used < 150; ++iter) {
        Scalar a = random_nonzero_scalar(rng);
        Scalar b = random_nonzero_scalar(rng);
        if ((a + Scalar(1)).is_zero()) continue; // binomial base vanishes
        TwistData rho({a, b});
        CHECK(w0.eval(rho) == w1.eval(phi.eval_at(rho)));
        ++used;
    }
    CHECK(used >= 150);
}

TEST_CASE("eval_at rejects vanishing binomial bases") {
    SubstitutionMap phi = chekanov_map();
    CHECK_THROWS_AS(phi.eval_at(TwistData({Scalar(-1), Scalar(1)})), DomainError);
}
