#include "doctest.h"

#include "reeder/rhs.hpp"
#include "reeder/stembridge.hpp"

#include <filesystem>

using namespace reeder;

TEST_CASE("record json round trip") {
    auto s = build_root_system('G', 2);
    MolienContext ctx(s);
    auto rec = ctx.record(s.fundamental(0));
    CHECK(rec.labels == std::vector<std::string>{"phi'_{1,3}"});
    auto back = parse_records(records_json({rec}));
    REQUIRE(back.size() == 1);
    CHECK(back[0].type == 'G');
    CHECK(back[0].rank == 2);
    CHECK(back[0].weight == rec.weight);
    CHECK(back[0].labels == rec.labels);
    CHECK(back[0].pw_qy == rec.pw_qy);
    CHECK(back[0].provenance == "molien");
    CHECK_NOTHROW(validate_record(back[0], s));

    auto path = (std::filesystem::temp_directory_path() / "reeder_rhs_test.json").string();
    write_records(path, {rec});
    CHECK(read_records(path)[0].pw_qy == rec.pw_qy);
    std::filesystem::remove(path);
}

TEST_CASE("record validation") {
    auto s = build_root_system('G', 2);
    MolienContext ctx(s);
    auto rec = ctx.record(s.fundamental(1));
    rec.pw_qy.add_term(0, 0, 1);
    CHECK_THROWS_AS(validate_record(rec, s), DataError);
    rec = ctx.record(s.fundamental(1));
    CHECK_THROWS_AS(validate_record(rec, build_root_system('B', 2)), DataError);
    CHECK_THROWS_AS(parse_records("{\"records\": [{\"type\": \"G\", \"rank\": 2, \"weight\": [1], \"pw_qy\": []}]}"), DataError);
    CHECK_THROWS_AS(parse_records("not json"), DataError);
    CHECK_THROWS_AS(read_records("/nonexistent/x.json"), DataError);
}

TEST_CASE("assemble rhs routes") {
    auto d4 = build_root_system('D', 4);
    CHECK(assemble_rhs(d4, Weight{}, RhsMode::Data, nullptr).method == "base");
    CHECK(assemble_rhs(d4, Weight{}, RhsMode::Data, nullptr).value == base_value(d4));

    std::shared_ptr<MolienContext> ctx;
    for (const auto& lambda : enumerate_small(d4)) {
        CAPTURE(format_weight(lambda, d4));
        auto closed = assemble_rhs(d4, lambda, RhsMode::Closed, nullptr);
        auto molien = assemble_rhs(d4, lambda, RhsMode::Molien, nullptr, &ctx);
        if (!lambda.is_zero()) {
            CHECK(closed.method == "closed");
            CHECK(molien.method == "molien");
        }
        CHECK(closed.value == molien.value);
    }

    auto e6 = build_root_system('E', 6);
    CHECK_THROWS_AS(assemble_rhs(e6, e6.fundamental(1), RhsMode::Data, nullptr), DataError);
    DataStore store;
    CHECK_THROWS_AS(assemble_rhs(e6, e6.fundamental(1), RhsMode::Data, &store), DataError);

    auto g2 = build_root_system('G', 2);
    MolienContext g(g2);
    auto rec = g.record(g2.fundamental(1));
    store.add(rec);
    auto r = assemble_rhs(g2, g2.fundamental(1), RhsMode::Data, &store);
    CHECK(r.method == "data");
    CHECK(r.labels == std::vector<std::string>{"phi_{2,1}"});
    CHECK(assemble_rhs(g2, g2.fundamental(1), RhsMode::Closed, &store).method == "data");
    CHECK(assemble_rhs(g2, g2.fundamental(0), RhsMode::Closed, &store).method == "molien");
    CHECK_THROWS(parse_rhs_mode("exact"));
    CHECK(parse_rhs_mode(rhs_mode_name(RhsMode::Molien)) == RhsMode::Molien);
}

TEST_CASE("molien rhs matches the solver on small ranks") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}, {'B', 3}, {'C', 3}, {'F', 4}}) {
        auto s = build_root_system(t, n);
        CAPTURE(s.name());
        auto small = enumerate_small(s);
        auto table = solve_multiplicities(s, small);
        std::shared_ptr<MolienContext> ctx;
        for (const auto& lambda : small) {
            CAPTURE(format_weight(lambda, s));
            CHECK(assemble_rhs(s, lambda, RhsMode::Molien, nullptr, &ctx).value == table.at(lambda));
        }
    }
}

TEST_CASE("hook content agrees with Molien on hyperoctahedral groups") {
    for (int n : {1, 2}) {
        auto c = hyperoctahedral_check(n);
        CAPTURE(c.detail);
        CHECK(c.pass);
        CHECK(c.irreducibles == (n == 1 ? 2u : 5u));
    }
    CHECK_THROWS(hyperoctahedral_check(3));
}
