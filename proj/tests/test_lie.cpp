#include "doctest.h"

#include "reeder/lie.hpp"

#include <algorithm>
#include <set>

using namespace reeder;

namespace {

const std::vector<std::pair<char, int>> kAllTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4},
    {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Weight W(std::initializer_list<int> c) {
    Weight w;
    int i = 0;
    for (int x : c) w[i++] = static_cast<int16_t>(x);
    return w;
}

}  // namespace

TEST_CASE("root system invariants") {
    for (auto [t, n] : kAllTypes) {
        CAPTURE(t);
        CAPTURE(n);
        auto s = build_root_system(t, n);
        long sum_d = 0;
        Int prod = 1;
        for (int d : s.degrees) {
            sum_d += d;
            prod *= d;
        }
        CHECK(static_cast<long>(s.pos_roots.size()) == sum_d - n);
        CHECK(prod == s.weyl_order);
        for (int i = 0; i < n; ++i) CHECK(s.rho[i] == 1);
        // rho is the half-sum of positive roots
        Weight two_rho;
        for (const auto& a : s.pos_roots_w) two_rho += a;
        CHECK(two_rho == 2 * s.rho);
        int dominant_long = 0, dominant_short = 0;
        const int long_norm = *std::max_element(s.root_norm.begin(), s.root_norm.end());
        for (std::size_t k = 0; k < s.pos_roots.size(); ++k)
            if (s.is_dominant(s.pos_roots_w[k])) {
                if (s.root_norm[k] == long_norm) {
                    ++dominant_long;
                    CHECK(s.pos_roots_w[k] == s.theta);
                } else {
                    ++dominant_short;
                    CHECK(s.pos_roots_w[k] == s.theta_s);
                }
            }
        CHECK(dominant_long == 1);
        CHECK(dominant_short == (s.max_sym() == 1 ? 0 : 1));
        if (s.max_sym() == 1) CHECK(s.theta == s.theta_s);
    }
    CHECK_THROWS_AS(build_root_system('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('E', 5), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('X', 2), std::invalid_argument);
}

TEST_CASE("known orders and exponents") {
    CHECK(build_root_system('E', 6).weyl_order == 51840);
    CHECK(build_root_system('E', 7).weyl_order == 2903040);
    CHECK(build_root_system('E', 8).weyl_order == 696729600);
    CHECK(build_root_system('F', 4).weyl_order == 1152);
    CHECK(build_root_system('G', 2).exponents == std::vector<int>{1, 5});
    CHECK(build_root_system('E', 6).exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
}

TEST_CASE("D4 constants") {
    auto s = build_root_system('D', 4);
    CHECK(s.pos_roots.size() == 12);
    CHECK(s.exponents == std::vector<int>{1, 3, 3, 5});
    auto rho = to_ambient(s.rho, s);
    CHECK(rho.coords == std::vector<long>{6, 4, 2, 0});
    CHECK(rho.scale == 2);
    CHECK(s.theta == s.fundamental(1));
}

TEST_CASE("A1 constants") {
    auto s = build_root_system('A', 1);
    CHECK(s.exponents == std::vector<int>{1});
    CHECK(s.theta == W({2}));
    CHECK(2 * s.rho == s.theta);
}

TEST_CASE("dominant reduction") {
    auto s = build_root_system('D', 4);
    auto r = dominant_reduce(from_eps({-1, 1, -1, 1}, s), s);
    REQUIRE(r.has_value());
    CHECK(r->lambda.is_zero());
    CHECK(r->sign == 1);
    CHECK_FALSE(dominant_reduce(from_eps({0, 1, 0, 0}, s), s).has_value());
    Weight mu = W({1, 0, 2, 1});
    auto d = dominant_reduce(mu, s);
    REQUIRE(d.has_value());
    CHECK(d->lambda == mu);
    CHECK(d->sign == 1);
}

TEST_CASE("dot action reduction is constant on regular orbits with witness parity") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'D', 4}, {'G', 2}, {'A', 3}}) {
        auto s = build_root_system(t, n);
        Weight lambda = 2 * s.rho - s.rho;  // rho itself, then shifted
        lambda[0] = static_cast<int16_t>(lambda[0] + 1);
        Weight lr = lambda + s.rho;
        auto orbit = weyl_orbit(lr, s);
        CHECK(Int(static_cast<long>(orbit.size())) == s.weyl_order);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            auto word = orbit.witness(i);
            auto red = dominant_reduce(orbit[i] - s.rho, s);
            REQUIRE(red.has_value());
            CHECK(red->lambda == lambda);
            CHECK(red->sign == (word.size() % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("orbits") {
    auto s = build_root_system('D', 4);
    CHECK(weyl_orbit(s.fundamental(0), s).size() == 8);
    CHECK(weyl_orbit(s.fundamental(1), s).size() == 24);
    CHECK(weyl_orbit(Weight{}, s).size() == 1);
    auto o = weyl_orbit(W({1, 1, 0, 1}), s);
    for (std::size_t i = 0; i < o.size(); ++i) CHECK(apply_word(o.witness(i), W({1, 1, 0, 1}), s) == o[i]);
    CHECK_THROWS_AS(weyl_orbit(s.fundamental(1), s, 10), OrbitCapExceeded);
    CHECK_THROWS_AS(weyl_orbit(W({-1, 0, 0, 0}), s), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'D', 5}, {'F', 4}, {'G', 2}, {'E', 6}}) {
        auto s = build_root_system(t, n);
        for (const auto& lambda : dominant_below(2 * s.theta, s)) {
            auto o = weyl_orbit(lambda, s);
            CHECK(Int(static_cast<long>(o.size() * stabilizer_order_degrees_product(lambda, s))) == s.weyl_order);
        }
    }
}

TEST_CASE("stabilizer orbits") {
    auto s = build_root_system('D', 4);
    Coweight e1 = s.fundamental_coweight(0);
    auto o = stabilizer_orbit(s.fundamental(1), e1, s);
    CHECK(o.size() == 2);
    CHECK(std::find(o.begin(), o.end(), e1) != o.end());
    CHECK(stabilizer_orbit(s.fundamental(0) + s.fundamental(2), e1, s) == std::vector<Coweight>{e1});
    CHECK(stabilizer_orbit(s.rho, e1, s) == std::vector<Coweight>{e1});
    auto s6 = build_root_system('D', 6);
    CHECK(stabilizer_orbit(s6.fundamental(0) + s6.fundamental(2), s6.fundamental_coweight(0), s6).size() == 1);
    CHECK(coweight_orbit(e1, s).size() == 8);
}

TEST_CASE("small weights") {
    auto d4 = build_root_system('D', 4);
    CHECK(is_small(d4.theta, d4));
    CHECK_FALSE(is_small(2 * d4.theta, d4));
    CHECK(is_small(W({1, 0, 1, 1}), d4));
    std::set<Weight> want{Weight{}, W({0, 1, 0, 0}), W({2, 0, 0, 0}), W({0, 0, 2, 0}), W({0, 0, 0, 2}), W({1, 0, 1, 1})};
    auto got = enumerate_small(d4);
    CHECK(std::set<Weight>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
    CHECK(got.front().is_zero());

    auto e6 = build_root_system('E', 6);
    auto small = enumerate_small(e6);
    std::set<Weight> es(small.begin(), small.end());
    for (const char* w : {"0", "w2", "w1+w6", "w4", "w1+w3", "w5+w6", "3*w1", "3*w6"}) {
        CAPTURE(w);
        CHECK(es.count(parse_weight(w, e6)) == 1);
    }

    auto a1 = build_root_system('A', 1);
    CHECK(enumerate_small(a1) == std::vector<Weight>{Weight{}, a1.theta});
}

TEST_CASE("small weights are downward closed and linearly ordered") {
    for (auto [t, n] : kAllTypes) {
        if (t == 'E' && n == 8) continue;
        auto s = build_root_system(t, n);
        auto small = enumerate_small(s);
        std::set<Weight> set(small.begin(), small.end());
        for (std::size_t i = 0; i < small.size(); ++i) {
            for (const auto& mu : dominant_below(small[i], s)) CHECK(set.count(mu) == 1);
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(dominance_leq(small[i], small[j], s));
        }
    }
}

TEST_CASE("dominance") {
    auto s = build_root_system('D', 4);
    CHECK(dominance_leq(Weight{}, s.theta, s));
    CHECK_FALSE(dominance_leq(s.theta, Weight{}, s));
    CHECK(dominance_leq(s.fundamental(1), 2 * s.fundamental(0), s));
    CHECK_FALSE(dominance_leq(s.fundamental(0), s.theta, s));
}

TEST_CASE("zero-conjugate orbit points for D_n") {
    for (int n = 4; n <= 7; ++n) {
        auto s = build_root_system('D', n);
        for (int k = 1; 2 * k <= n - 2; ++k) {
            auto o = weyl_orbit(s.fundamental(2 * k - 1), s);
            long count = 0;
            for (const auto& w : o.points()) {
                auto r = dominant_reduce(w, s);
                if (r && r->lambda.is_zero()) ++count;
            }
            CAPTURE(n);
            CAPTURE(k);
            CHECK(count * k == n * binom(n - k - 1, k - 1));
        }
    }
}

TEST_CASE("coweights") {
    CHECK(minuscule_coweights(build_root_system('E', 6)) == std::vector<int>{0, 5});
    CHECK(minuscule_coweights(build_root_system('D', 5)) == std::vector<int>{0, 3, 4});
    CHECK(minuscule_coweights(build_root_system('F', 4)).empty());
    auto f4 = build_root_system('F', 4);
    CHECK(quasi_minuscule_coweight(f4) == f4.fundamental_coweight(0));
    auto g2 = build_root_system('G', 2);
    CHECK(quasi_minuscule_coweight(g2) == g2.fundamental_coweight(1));
    auto e8 = build_root_system('E', 8);
    CHECK(quasi_minuscule_coweight(e8) == e8.fundamental_coweight(7));
    auto b3 = build_root_system('B', 3);
    Coweight qm = quasi_minuscule_coweight(b3);
    for (const auto& r : b3.pos_roots) {
        long v = b3.root_pair(r, qm);
        CHECK((v >= 0 && v <= 2));
    }
}

TEST_CASE("weight parsing and ambient views") {
    auto s = build_root_system('D', 5);
    Weight w = parse_weight("w1+2*w3", s);
    CHECK(w == W({1, 0, 2, 0, 0}));
    CHECK(format_weight(w, s) == "w1+2*w3");
    CHECK(format_weight(Weight{}, s) == "0");
    CHECK(parse_weight(" 0 ", s).is_zero());
    CHECK(parse_weight("w2-w1", s) == W({-1, 1, 0, 0, 0}));
    CHECK_THROWS_AS(parse_weight("w6", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("x1", s), std::invalid_argument);
    CHECK(parse_weight("theta", s) == s.theta);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 5}}) {
        auto r = build_root_system(t, n);
        for (const auto& mu : dominant_below(2 * r.theta, r)) {
            auto a = to_ambient(mu, r);
            CHECK(from_ambient(a.coords, a.scale, r) == mu);
        }
    }
    CHECK(e6_involution(e6_involution(W({1, 2, 3, 4, 5, 6}))) == W({1, 2, 3, 4, 5, 6}));
    CHECK(e6_involution(W({1, 0, 0, 0, 0, 0})) == W({0, 0, 0, 0, 0, 1}));
}
