#include <doctest.h>

#include <complex>
#include <limits>

#include "lgpot/expr.hpp"
#include "lgpot/laurent.hpp"
#include "support/oracles.hpp"

using namespace lgpot;
using namespace lgpot::test;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X = {"x"};

LaurentPoly clifford() { return parse_poly("x + y + x^-1*y^-1", XY); }

} // namespace

TEST_CASE("add: cancellation and identity") {
    LaurentPoly f = parse_poly("x + x^-1", X);
    LaurentPoly g = parse_poly("-x", X);
    CHECK(f + g == parse_poly("x^-1", X));

    LaurentPoly zero(X);
    CHECK(f + zero == f);
}

TEST_CASE("add: term merge matches the map oracle") {
    LaurentPoly f = parse_poly("x + y", XY);
    LaurentPoly g = parse_poly("y + x^-1*y^-1", XY);
    // Oracle-derived: x + 2y + x^-1 y^-1.
    TermList expect = oracle_add(to_terms(f), to_terms(g));
    CHECK(f + g == from_terms(XY, expect));
    CHECK(f + g == parse_poly("x + 2*y + x^-1*y^-1", XY));
}

TEST_CASE("add: variable list and tower mismatches are errors") {
    CHECK_THROWS_AS(parse_poly("x", X) + parse_poly("x", XY), DomainError);

    LaurentPoly approx(X);
    approx.add_term({1}, Scalar(std::complex<double>(1.0, 0.0)));
    CHECK_THROWS_AS(parse_poly("x", X) + approx, DomainError);
}

TEST_CASE("mul: hand expansions") {
    LaurentPoly f = parse_poly("x + x^-1", X);
    CHECK(f * f == parse_poly("x^2 + 2 + x^-2", X));

    LaurentPoly w = clifford();
    CHECK(w * LaurentPoly::one(XY) == w);

    // Derived from the naive double-loop oracle.
    TermList expect = oracle_mul(to_terms(w), to_terms(w));
    CHECK(w * w == from_terms(XY, expect));
    CHECK(w * w ==
          parse_poly("x^2 + y^2 + x^-2*y^-2 + 2*x*y + 2*y^-1 + 2*x^-1", XY));
}

TEST_CASE("mul: exponent overflow is detected") {
    LaurentPoly big = LaurentPoly::monomial(
        X, {std::numeric_limits<std::int64_t>::max()}, Scalar(1));
    CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("pow: Clifford cube has constant term 6") {
    LaurentPoly w = clifford();
    CHECK(w.pow(3).constant_term() == Scalar(6));
}

TEST_CASE("pow: base cases agree with iterated mul") {
    LaurentPoly f = parse_poly("x + x^-1", X);
    CHECK(f.pow(0) == LaurentPoly::one(X));
    CHECK(f.pow(2) == parse_poly("x^2 + 2 + x^-2", X));
    CHECK(f.pow(2) == from_terms(X, oracle_pow(to_terms(f), 1, 2)));
}

TEST_CASE("eval: unit and mixed-sign local systems") {
    LaurentPoly w = clifford();
    CHECK(w.eval(TwistData({Scalar(1), Scalar(1)})) == Scalar(3));
    // 1 + (-1) + (-1)^-1 = -1.
    CHECK(w.eval(TwistData({Scalar(1), Scalar(-1)})) == Scalar(-1));
    CHECK(LaurentPoly::one(XY).eval(TwistData({Scalar(7), Scalar(-2)})) == Scalar(1));
}

TEST_CASE("eval: gaussian local system") {
    LaurentPoly w = clifford();
    TwistData rho({Scalar::i(), Scalar(-1)});
    // i + (-1) + (i * -1)^-1 = i - 1 + i = -1 + 2i.
    CHECK(w.eval(rho) == Scalar(GaussianRational(Rational(-1), Rational(2))));
    CHECK(w.eval(rho) == oracle_eval(to_terms(w), rho.entries()));
}

TEST_CASE("eval: zero monodromy is rejected at construction") {
    CHECK_THROWS_AS(TwistData({Scalar(1), Scalar(0)}), DomainError);
}

TEST_CASE("eval_approx: explicit approximate mode") {
    LaurentPoly w = clifford();
    auto v = w.eval_approx({{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(v.real() == doctest::Approx(-1.0));
    CHECK(v.imag() == doctest::Approx(0.0));
    CHECK_THROWS_AS(w.eval_approx({{0.0, 0.0}, {1.0, 0.0}}), DomainError);
}

TEST_CASE("change_basis: identity and shear") {
    LaurentPoly w = clifford();
    CHECK(w.change_basis(UnimodularMatrix::identity(2)) == w);

    UnimodularMatrix a({{1, 0}, {1, 1}});
    CHECK(parse_poly("x + y", XY).change_basis(a) == parse_poly("x + x*y", XY));
    CHECK(w.change_basis(a) == parse_poly("x + x*y + x^-2*y^-1", XY));
    CHECK(w.change_basis(a) ==
          from_terms(XY, oracle_change_basis(to_terms(w), {{1, 0}, {1, 1}})));
}

TEST_CASE("change_basis: non-unimodular matrices are rejected") {
    CHECK_THROWS_AS(UnimodularMatrix({{2, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(UnimodularMatrix({{1, 1}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(parse_poly("x", X).change_basis(UnimodularMatrix::identity(2)),
                    DomainError);
}

TEST_CASE("constant_term and is_constant") {
    LaurentPoly w = clifford();
    CHECK(w.pow(3).constant_term() == Scalar(6));
    CHECK(parse_poly("x + y", XY).constant_term() == Scalar(0));
    CHECK(parse_poly("7", XY).constant_term() == Scalar(7));

    CHECK(parse_poly("5", XY).is_constant());
    CHECK(!w.is_constant());
    CHECK(LaurentPoly(XY).is_constant()); // zero polynomial
}

TEST_CASE("degree_along") {
    LaurentPoly w = clifford();
    CHECK(w.degree_along({1, 0}) == std::pair<std::int64_t, std::int64_t>(-1, 1));
    CHECK(w.degree_along({1, 1}) == std::pair<std::int64_t, std::int64_t>(-2, 1));
    CHECK(LaurentPoly::one(XY).degree_along({5, -3}) ==
          std::pair<std::int64_t, std::int64_t>(0, 0));
    CHECK_THROWS_AS(LaurentPoly(XY).degree_along({1, 0}), DomainError);
}

TEST_CASE("units and unit inverses") {
    LaurentPoly u = parse_poly("-3*x^2*y^-1", XY);
    CHECK(u.is_unit());
    CHECK(u * u.unit_inverse() == LaurentPoly::one(XY));
    CHECK(LaurentPoly(XY).is_unit() == false);
    CHECK_THROWS_AS(parse_poly("x + y", XY).unit_inverse(), DomainError);
}

TEST_CASE("twist ratio pairs local systems entrywise") {
    TwistData a({Scalar(2), Scalar(-3)});
    TwistData b({Scalar(2), Scalar(-3)});
    CHECK(a.ratio(b).is_trivial());
    TwistData c({Scalar(1), Scalar(3)});
    CHECK(a.ratio(c) == TwistData({Scalar(2), Scalar(-1)}));
}
