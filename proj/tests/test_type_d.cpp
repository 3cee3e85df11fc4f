#include "doctest.h"

#include "reeder/type_d.hpp"

using namespace reeder;
using namespace reeder::typed;

namespace {
LaurentPoly q(int e) { return LaurentPoly::q(e); }
bool has_discrepancy(const SuiteReport& rep, const std::string& name) {
    for (const auto& c : rep.discrepancies)
        if (c.name == name) return true;
    return false;
}
}  // namespace

TEST_CASE("scalar coefficients") {
    CHECK(r(2) == (q(1) + LaurentPoly(1)) * (q(1) + q(-1)));
    CHECK(s(0) == one_minus(2));
    CHECK(b(1, 2) == r(2));
    CHECK(b(2, 4) == r(2) + r(3));
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k + 1 <= n; ++k) CHECK(d(k, n) == d_closed(k, n));
    CHECK(theta_count(4, 1, 0) == 4);
    CHECK(theta_count(6, 3, 0) == 1);
    CHECK(omega0_count(2, 6) == 9);
    CHECK_THROWS_AS(omega0_count(3, 5), DomainError);
    CHECK_THROWS_AS(theta_count(6, 1, 2), DomainError);
}

TEST_CASE("Lambda coefficients") {
    CHECK(lambda_kk(1, 4) == exact_div((q(4) - LaurentPoly(1)) * one_plus(1, 11), q(6) * (q(2) - LaurentPoly(1))));
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k) CHECK(lambda_kk(k, n) == lambda_kk_closed(k, n));
    CHECK(lambda_zero(1, 2) == -r(2));
    CHECK(lambda_zero(2, 4) == r(2) + r(4));
    CHECK(lambda2(0, 0, 6) == -s(0));
    CHECK(lambda2(0, 1, 3) == s(0) + s(-2));
    CHECK(lambda2(1, 1, 3) == -s(0));
    // the printed closed form for Lambda_{k+1}^{2|k,n} carries the opposite sign
    for (int n = 4; n <= 10; ++n)
        for (int k = 0; 2 * k + 2 <= n; ++k) CHECK(lambda2_kp1(k, n) == -lambda2_kp1_closed(k, n));
    CHECK_THROWS_AS(lambda2(3, 1, 6), DomainError);
}

TEST_CASE("reduction integers") {
    CHECK(a_int(1, 1, 4) == 1);
    CHECK(a_int(1, 2, 4) == theta_count(4, 2, 1).get_si());
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; 2 * k + 1 <= n; ++k)
            for (int h = 1; h <= k; ++h) CHECK(e_int(h, k, n) == a_int(h, k, n - 1));
}

TEST_CASE("relations extracted from the minuscule recurrence") {
    for (int n = 4; n <= 6; ++n) {
        CAPTURE(n);
        for (int k = 1; 2 * k <= n; ++k) CHECK(extracted_omega2k(k, n) == relation_omega2k(k, n));
        for (int k = 0; 2 * k + 1 <= n; ++k) CHECK(extracted_omega1(k, n) == relation_omega1(k, n));
    }
    // D_4, omega_2: the coefficient at C_0 is Lambda_0^{1,4}
    CHECK(extracted_omega2k(1, 4).at(0) == lambda_zero(1, 4));
}

TEST_CASE("closed forms") {
    for (int n = 4; n <= 8; ++n) {
        CHECK(cd_ratio(1, n).is_zero());
        for (int k = 1; 2 * k + 1 <= n; ++k) CHECK_FALSE(c2_value(k, n).is_zero());
    }
    CHECK_THROWS_AS(c_value(3, 4), DomainError);
}

TEST_CASE("suites pass on the default range") {
    SuiteRange range;
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        auto rep = run_suite(name, range);
        CHECK(rep.checks.size() > 0);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("printed statements that do not hold") {
    SuiteRange range;
    auto coeffs = suite_d_coeffs(range);
    CHECK(has_discrepancy(coeffs, "printed base Lambda_0^{1,2} = r(2)"));
    CHECK(has_discrepancy(coeffs, "printed Lambda_0^{2,4} = -(r(2)+r(4))"));
    auto p45 = suite_prop45(range);
    CHECK(has_discrepancy(p45, "printed Gamma_0^{k,n} = b_{k,n} k=2 n=6"));
    auto p47 = suite_prop47(range);
    CHECK(has_discrepancy(p47, "printed sum (-1)^i binom(n-i-1,i) E_i^{k,n} = 0 h=0 k=1 n=4"));
    CHECK(has_discrepancy(p47, "printed Gamma_k^{2|k,2k+1} = -(q^{4k}-1)^2/(q^{4k-2}(q^2-1)) k=2 n=5"));
    auto fin = suite_final(range);
    CHECK(has_discrepancy(fin, "printed final identity with C(k)/D(k) k=2 n=7"));
}
