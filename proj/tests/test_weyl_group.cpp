#include "doctest.h"

#include "reeder/oracle.hpp"
#include "reeder/weyl_group.hpp"

#include <map>

using namespace reeder;

namespace {
BiPoly qy(long c, int a, int b) { return BiPoly::monomial(Vars::QY, c, a, b); }

std::vector<std::string> v0_labels(const char* type, int rank, const char* weight) {
    auto s = build_root_system(type[0], rank);
    auto g = build_weyl_group(s);
    auto t = character_table(g, s);
    return zero_weight_character(parse_weight(weight, s), s, g, t).labels;
}
}  // namespace

TEST_CASE("group orders and classes") {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> want{
        {"A1", {2, 2}},     {"A3", {24, 5}},   {"B2", {8, 5}},    {"B3", {48, 10}},
        {"G2", {12, 6}},    {"D4", {192, 13}}, {"F4", {1152, 25}}, {"E6", {51840, 25}}};
    for (const auto& [name, oc] : want) {
        CAPTURE(name);
        auto s = build_root_system(name[0], name[1] - '0');
        auto g = build_weyl_group(s);
        CHECK(g.order() == oc.first);
        CHECK(g.classes().size() == oc.second);
        std::size_t total = 0, reflections = 0;
        for (const auto& c : g.classes()) {
            total += c.size;
            if (c.reflection) reflections += c.size;
        }
        CHECK(total == g.order());
        CHECK(reflections == s.pos_roots.size());
        for (int i = 0; i < s.rank; ++i) CHECK(g.classes()[g.simple_reflection_class(i)].reflection);
    }
    CHECK_THROWS(build_weyl_group(build_root_system('E', 6), 1000));
}

TEST_CASE("character tables") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'D', 4}, {'F', 4}, {'E', 6}}) {
        auto s = build_root_system(t, n);
        auto g = build_weyl_group(s);
        auto tab = character_table(g, s);
        CAPTURE(s.name());
        REQUIRE(tab.irreducibles.size() == g.classes().size());
        Int sum = 0;
        for (const auto& x : tab.irreducibles) {
            sum += Int(x.degree) * Int(x.degree);
            CHECK(eval_at_one(x.fake_degree) == Int(x.degree));
            CHECK(inner_product(g, x.values, x.values) == 1);
        }
        CHECK(sum == Int(static_cast<unsigned long>(g.order())));
        // the reflection representation has fake degree sum q^{e_i}
        LaurentPoly refl;
        for (int e : s.exponents) refl += pow(LaurentPoly::q(), e);
        bool found = false;
        for (const auto& x : tab.irreducibles)
            if (x.degree == s.rank && x.b == 1) found = x.fake_degree == refl;
        CHECK(found);
        // the sign character sits in top degree N
        const auto& sign = tab.irreducibles[tab.index_of("phi_{1," + std::to_string(s.pos_roots.size()) + "}")];
        for (std::size_t c = 0; c < g.classes().size(); ++c)
            if (g.classes()[c].reflection) CHECK(sign.values[c] == -1);
    }
    auto f4 = build_root_system('F', 4);
    auto g = build_weyl_group(f4);
    auto tab = character_table(g, f4);
    CHECK_NOTHROW(tab.index_of("phi'_{8,3}"));
    CHECK_NOTHROW(tab.index_of("phi''_{1,12}"));
    CHECK_THROWS(tab.index_of("phi_{7,7}"));
}

TEST_CASE("Molien sums") {
    auto a1 = build_root_system('A', 1);
    auto g = build_weyl_group(a1);
    const ClassFunction triv(g.classes().size(), 1);
    ClassFunction sign(g.classes().size());
    for (std::size_t c = 0; c < sign.size(); ++c) sign[c] = g.classes()[c].reflection ? -1 : 1;
    CHECK(molien_pw(class_data(g, triv), a1) == qy(1, 0, 0) + qy(1, 1, 1));
    CHECK(molien_pw(class_data(g, sign), a1) == qy(1, 1, 0) + qy(1, 0, 1));

    // Solomon: the trivial character of B2 gives (1 + y q)(1 + y q^3)
    auto b2 = build_root_system('B', 2);
    auto h = build_weyl_group(b2);
    const ClassFunction t2(h.classes().size(), 1);
    CHECK(molien_pw(class_data(h, t2), b2) == (qy(1, 0, 0) + qy(1, 1, 1)) * (qy(1, 0, 0) + qy(1, 3, 1)));
    // a non-character is rejected
    ClassFunction bad(h.classes().size(), 0);
    bad[0] = 1;
    CHECK_THROWS(molien_pw(class_data(h, bad), b2));
}

TEST_CASE("Kostant q-analogue") {
    auto a1 = build_root_system('A', 1);
    CHECK(kostant_zero_weight(parse_weight("2w1", a1), a1) == LaurentPoly::q());
    CHECK(kostant_zero_weight(parse_weight("0", a1), a1) == LaurentPoly(1));
    auto g2 = build_root_system('G', 2);
    for (const auto& lambda : enumerate_small(g2))
        CHECK(eval_at_one(kostant_zero_weight(lambda, g2)) == Int(freudenthal_zero_mult(lambda, g2)));
}

TEST_CASE("zero weight modules") {
    CHECK(v0_labels("G", 2, "w1") == std::vector<std::string>{"phi'_{1,3}"});
    CHECK(v0_labels("G", 2, "w2") == std::vector<std::string>{"phi_{2,1}"});
    CHECK(v0_labels("B", 3, "2w3") == std::vector<std::string>{"phi_{3,2}"});
    CHECK(v0_labels("D", 4, "w1+w3+w4") == std::vector<std::string>{"phi_{8,3}", "phi_{6,4}"});
    CHECK(v0_labels("F", 4, "w3") == std::vector<std::string>{"phi'_{8,3}", "phi'_{1,12}"});
    CHECK(v0_labels("F", 4, "w4") == std::vector<std::string>{"phi'_{2,4}"});
}

TEST_CASE("E6 zero weight modules") {
    auto s = build_root_system('E', 6);
    auto g = build_weyl_group(s);
    auto t = character_table(g, s);
    const std::map<std::string, std::vector<std::string>> want{
        {"w1+w6", {"phi_{20,2}"}},
        {"w4", {"phi_{30,3}", "phi_{15,5}"}},
        {"w1+w3", {"phi_{64,4}"}},
        {"w5+w6", {"phi_{64,4}"}},
        {"3w1", {"phi_{24,6}"}},
        {"3w6", {"phi_{24,6}"}},
        {"w2", {"phi_{6,1}"}},
    };
    CHECK(enumerate_small(s).size() == want.size() + 1);
    for (const auto& [w, labels] : want) {
        CAPTURE(w);
        auto lambda = parse_weight(w, s);
        auto d = zero_weight_character(lambda, s, g, t);
        CHECK(d.labels == labels);
        // graded dimension of V^0 matches the harmonic multiplicities
        LaurentPoly fake;
        for (auto [i, m] : d.parts) fake += t.irreducibles[i].fake_degree * LaurentPoly(m);
        CHECK(fake == kostant_zero_weight(lambda, s));
    }
}
