#include "doctest.h"

#include "reeder/verify.hpp"

using namespace reeder;

TEST_CASE("verify D4") {
    auto s = build_root_system('D', 4);
    auto r = verify(s, {});
    CHECK(r.records.size() == 6);
    CHECK(r.pass());
    CHECK(r.spec_id == "D4");
    for (const auto& w : r.records) {
        CHECK(w.equal);
        CHECK(w.q1_check);
        CHECK(w.elapsed_ms == 0);
    }
    VerifyOptions o;
    o.lhs = LhsMode::Oracle;
    auto ro = verify(s, o);
    REQUIRE(ro.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(ro.records[i].lhs == r.records[i].lhs);
}

TEST_CASE("reports are deterministic") {
    auto s = build_root_system('E', 6);
    VerifyOptions a, b;
    b.threads = 3;
    CHECK(report_json(verify(s, a), &s) == report_json(verify(s, b), &s));
    CHECK(report_text(verify(s, a), &s) == report_text(verify(s, b), &s));
}

TEST_CASE("mismatch and errors") {
    auto s = build_root_system('G', 2);
    MolienContext ctx(s);
    auto rec = ctx.record(s.fundamental(1));
    BiPoly shifted(Vars::QY);
    for (const auto& [e, c] : rec.pw_qy.terms()) shifted.add_term(e.first + 1, e.second, c);
    rec.pw_qy = shifted;
    DataStore store;
    store.add(rec);
    VerifyOptions o;
    o.rhs = RhsMode::Data;
    o.store = &store;
    o.weights = {s.fundamental(1)};
    auto r = verify(s, o);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.records[0].equal);
    CHECK(report_text(r, &s).find("FAIL") != std::string::npos);

    o.weights = {s.fundamental(0)};
    CHECK_THROWS_AS(verify(s, o), DataError);
    o.weights = {2 * s.fundamental(1)};
    CHECK_THROWS_AS(verify(s, o), OperationalError);
    CHECK_THROWS_AS(verify(build_root_system('E', 8), {}), OperationalError);
    CHECK_THROWS_AS(run_identities({"nope"}, {}), OperationalError);
    CHECK_THROWS(parse_lhs_mode("solver"));
}

TEST_CASE("table serialization") {
    auto s = build_root_system('A', 1);
    auto t = solve_multiplicities(s, enumerate_small(s));
    CHECK(table_text(t, s) == "0\t1*q^0 + 1*q^3\n2*w1\t1*q^1 + 1*q^2\n");
    CHECK(table_json(t, s).find("\"c\": \"1*q^1 + 1*q^2\"") != std::string::npos);
}

TEST_CASE("identities report") {
    typed::SuiteRange range;
    range.max_k = 2;
    range.max_n = 6;
    range.max_extract_n = 5;
    auto r = run_identities({"d-coeffs", "e6-symmetry"}, range);
    CHECK(r.suites.size() == 2);
    CHECK(r.pass());
    CHECK(report_json(r, nullptr).find("\"suite\": \"e6-symmetry\"") != std::string::npos);
}
