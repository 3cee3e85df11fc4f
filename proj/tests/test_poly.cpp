#include "doctest.h"

#include "reeder/poly.hpp"

#include <random>

using namespace reeder;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<int> ex(lo, hi);
    LaurentPoly p;
    int n = len(rng);
    for (int i = 0; i < n; ++i) p.add_term(ex(rng), coef(rng));
    return p;
}

BiPoly random_bipoly(std::mt19937& rng, Vars v) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> ex(-2, 3);
    BiPoly p(v);
    for (int i = 0; i < 4; ++i) p.add_term(ex(rng), ex(rng) + 2, coef(rng));
    return p;
}

const LaurentPoly q = LaurentPoly::q();

}  // namespace

TEST_CASE("laurent arithmetic") {
    CHECK((q + 1) * (q - 1) == pow(q, 2) - 1);
    LaurentPoly p = LaurentPoly::q(-1) + q;
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    CHECK(p.str() == "1*q^-1 + 1*q^1");
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly::neg_q(3) == -pow(q, 3));
    CHECK(LaurentPoly::neg_q(-2) == LaurentPoly::q(-2));
}

TEST_CASE("exact division") {
    CHECK(exact_div(pow(q, 4) - 1, pow(q, 2) - 1) == pow(q, 2) + 1);
    CHECK(exact_div(pow(q, 3), q) == pow(q, 2));
    CHECK_THROWS_AS(exact_div(pow(q, 2) + 1, q + 1), NonDivisible);
    CHECK_THROWS_AS(exact_div(q, LaurentPoly()), std::domain_error);
    CHECK(exact_div(LaurentPoly::q(-3) - LaurentPoly::q(5), LaurentPoly::q(-1) - q) ==
          LaurentPoly::q(-2) + 1 + pow(q, 2) + pow(q, 4));
    CHECK_THROWS_AS(exact_div(2 * q + LaurentPoly(1), LaurentPoly(2)), NonDivisible);
}

TEST_CASE("rational normalization") {
    RationalFunction r(pow(q, 4) - 1, pow(q, 2) - 1);
    CHECK(r.is_polynomial());
    CHECK(r.num() == pow(q, 2) + 1);
    CHECK(r.den() == LaurentPoly(1));
    RationalFunction s(LaurentPoly(-2) * q, LaurentPoly(-4) * pow(q, 3) + LaurentPoly(4) * q);
    CHECK(s.den().leading_coeff() > 0);
    CHECK(s.den().min_exp() == 0);
    CHECK(s == RationalFunction(LaurentPoly(1), LaurentPoly(2) * pow(q, 2) - 2));
    CHECK_THROWS(RationalFunction(q, LaurentPoly()));
    CHECK((RationalFunction(1) / RationalFunction(q)).str() == "1*q^-1");
}

TEST_CASE("specializations") {
    BiPoly t = BiPoly::monomial(Vars::QT, 1, 0, 1);
    BiPoly qt_q = BiPoly::monomial(Vars::QT, 1, 1, 0);
    CHECK(specialize_qt(t) == pow(q, 2));
    CHECK(specialize_qt(qt_q) == -q);
    CHECK(specialize_qt(t * qt_q) == -pow(q, 3));
    BiPoly y = BiPoly::monomial(Vars::QY, 1, 0, 1);
    BiPoly qy_q = BiPoly::monomial(Vars::QY, 1, 1, 0);
    CHECK(specialize_qy(y) == q);
    CHECK(specialize_qy(qy_q) == pow(q, 2));
    CHECK(specialize_qy(qy_q + y) == pow(q, 2) + q);
    CHECK_THROWS_AS(specialize_qy(t), VariableMismatch);
    CHECK_THROWS_AS(t + y, VariableMismatch);
    CHECK_THROWS_AS(t * y, VariableMismatch);
}

TEST_CASE("eval at one") {
    CHECK(eval_at_one(q + pow(q, 2)) == 2);
    CHECK(eval_at_one(one_plus(1, 3)) == 2);
    CHECK(eval_at_one(LaurentPoly()) == 0);
}

TEST_CASE("canonical text round trip") {
    LaurentPoly p = LaurentPoly::from_terms({{-3, 7}, {0, -1}, {12, 123456789}});
    CHECK(LaurentPoly::parse(p.str()) == p);
    CHECK(LaurentPoly::parse("1 + q^3") == one_plus(1, 3));
    CHECK(LaurentPoly::parse("-q - 2*q^-1") == -q - LaurentPoly(2) * LaurentPoly::q(-1));
    CHECK_THROWS(LaurentPoly::parse("1 + x"));
}

TEST_CASE("ring axioms and division on random inputs") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly a = random_poly(rng, -4, 6), b = random_poly(rng, -4, 6), c = random_poly(rng, -4, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            CHECK(exact_div(a * b, b) == a);
            RationalFunction r(a, b);
            CHECK(r.num() * b == a * r.den());
            if (!c.is_zero()) CHECK(RationalFunction(a * c, b * c) == r);
        }
    }
}

TEST_CASE("specialization is multiplicative") {
    std::mt19937 rng(777);
    for (int it = 0; it < 100; ++it) {
        BiPoly f = random_bipoly(rng, Vars::QT), g = random_bipoly(rng, Vars::QT);
        CHECK(specialize_qt(f * g) == specialize_qt(f) * specialize_qt(g));
        BiPoly u = random_bipoly(rng, Vars::QY), v = random_bipoly(rng, Vars::QY);
        CHECK(specialize_qy(u * v) == specialize_qy(u) * specialize_qy(v));
    }
}

TEST_CASE("gcd") {
    LaurentPoly a = (q + 1) * (q - 2) * pow(q, 3), b = (q + 1) * (q + 5) * LaurentPoly(6);
    CHECK(gcd(a, b) == q + 1);
    CHECK(gcd(LaurentPoly(6) * (q + 1), LaurentPoly(4) * (q + 1)) == LaurentPoly(2) * (q + 1));
}

TEST_CASE("bivariate rational functions") {
    BiPoly num(Vars::QY, LaurentPoly(1));
    num += BiPoly::monomial(Vars::QY, 1, 1, 1);
    BiRational r(num, one_minus(2));
    BiRational twice = r + r;
    CHECK(twice == BiRational(num * LaurentPoly(2), one_minus(2)));
    BiRational p(num * (one_minus(2) * one_minus(4)), one_minus(2));
    CHECK(p.is_polynomial());
    CHECK(p.to_poly() == num * one_minus(4));
    CHECK(specialize_qy(r) == RationalFunction(one_plus(1, 3), one_minus(4)));
}
