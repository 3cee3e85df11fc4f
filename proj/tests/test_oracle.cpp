#include "doctest.h"

#include "reeder/oracle.hpp"

using namespace reeder;

namespace {
const LaurentPoly q = LaurentPoly::q();
}

TEST_CASE("A1 exterior character") {
    auto s = build_root_system('A', 1);
    auto cm = graded_exterior_character(s);
    CHECK(cm.size() == 3);
    CHECK(cm.at(s.theta) == q * (q + 1));
    CHECK(cm.at(-s.theta) == q * (q + 1));
    CHECK(cm.at(Weight{}) == (q + 1) * (pow(q, 2) + 1));
    CHECK(extract_graded_multiplicity(cm, s.theta, s) == q + pow(q, 2));
    CHECK(extract_graded_multiplicity(cm, Weight{}, s) == one_plus(1, 3));
}

TEST_CASE("character invariants") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}, {'D', 4}}) {
        auto s = build_root_system(t, n);
        auto cm = graded_exterior_character(s);
        CHECK(cm.total_dimension() == Int(1) << s.dim());
        for (const auto& w : cm.weights()) {
            CHECK(cm.contains(-w));
            if (s.is_dominant(w)) {
                auto o = weyl_orbit(w, s);
                for (const auto& v : o.points()) CHECK(cm.root_part(v) == cm.root_part(w));
            }
        }
    }
}

TEST_CASE("D4 trivial multiplicity") {
    auto s = build_root_system('D', 4);
    auto cm = graded_exterior_character(s);
    CHECK(extract_graded_multiplicity(cm, Weight{}, s) == one_plus(1, 3) * pow(one_plus(1, 7), 2) * one_plus(1, 11));
}

TEST_CASE("full decomposition accounts for every dimension") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        auto s = build_root_system(t, n);
        auto cm = graded_exterior_character(s);
        Int total = 0;
        for (const auto& w : cm.weights())
            if (s.is_dominant(w)) total += eval_at_one(extract_graded_multiplicity(cm, w, s)) * weyl_dimension(w, s);
        CHECK(total == Int(1) << s.dim());
    }
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(graded_exterior_character(build_root_system('E', 6)), OracleCapExceeded);
    CHECK_THROWS_AS(graded_exterior_character(build_root_system('B', 3), 10), OracleCapExceeded);
}

TEST_CASE("Freudenthal") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'B', 3}, {'D', 5}, {'E', 6}, {'F', 4}, {'G', 2}}) {
        auto s = build_root_system(t, n);
        CHECK(freudenthal_zero_mult(s.theta, s) == n);
        auto m = freudenthal_dominant(s.rho, s);
        Int dim = 0;
        for (const auto& [w, k] : m) dim += Int(static_cast<long>(weyl_orbit(w, s).size() * k));
        CHECK(dim == weyl_dimension(s.rho, s));
    }
    auto d4 = build_root_system('D', 4);
    // ((3,1),0) for B4/D4 restricts to the 35-dim 2 omega_1 with a 3-dim zero weight space
    CHECK(weyl_dimension(2 * d4.fundamental(0), d4) == 35);
    CHECK(freudenthal_zero_mult(2 * d4.fundamental(0), d4) == 3);
    CHECK(freudenthal_zero_mult(d4.fundamental(0), d4) == 0);
    auto e8 = build_root_system('E', 8);
    CHECK(weyl_dimension(e8.fundamental(7), e8) == 248);
}
