#include "reeder/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace reeder;

namespace {

struct Common {
    std::string type;
    int rank = 0;
    std::vector<std::string> weights;
    int threads = 1;
    std::size_t orbit_cap = kDefaultOrbitCap;
    std::string data_dir;
    std::string format = "text";
    std::string out;
    bool allow_long = false;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw OperationalError("cannot write " + out);
    f << text;
}

RootSystemSpec spec_of(const Common& c) {
    if (c.type.size() != 1) throw OperationalError("--type takes one letter A..G");
    try {
        return build_root_system(c.type[0], c.rank);
    } catch (const std::invalid_argument& e) {
        throw OperationalError(e.what());
    }
}

std::vector<Weight> weights_of(const Common& c, const RootSystemSpec& spec) {
    std::vector<Weight> out;
    try {
        for (const auto& w : c.weights) out.push_back(parse_weight(w, spec));
    } catch (const std::invalid_argument& e) {
        throw OperationalError(e.what());
    }
    return out;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("REEDER_DATA_DIR")) return env;
#ifdef REEDER_DEFAULT_DATA_DIR
    if (std::filesystem::is_directory(REEDER_DEFAULT_DATA_DIR)) return REEDER_DEFAULT_DATA_DIR;
#endif
    return {};
}

int cmd_verify(const Common& c, const std::string& lhs, const std::string& rhs, bool timings) {
    const RootSystemSpec spec = spec_of(c);
    VerifyOptions o;
    o.weights = weights_of(c, spec);
    o.lhs = parse_lhs_mode(lhs);
    o.rhs = parse_rhs_mode(rhs);
    o.threads = c.threads;
    o.orbit_cap = c.orbit_cap;
    o.allow_long = c.allow_long;
    o.timings = timings;
    std::optional<DataStore> store;
    const std::string dir = c.data_dir.empty() ? default_data_dir() : c.data_dir;
    if (!dir.empty()) store = DataStore::load_dir(dir);
    o.store = store ? &*store : nullptr;
    const VerificationReport r = verify(spec, o);
    emit(c.format == "json" ? report_json(r, &spec) : report_text(r, &spec), c.out);
    return r.pass() ? 0 : 1;
}

int cmd_identities(const Common& c, std::vector<std::string> suites, int max_k, int max_extract) {
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = typed::suite_names();
    typed::SuiteRange range;
    if (c.rank > 0) range.max_n = c.rank;
    if (max_k > 0) range.max_k = max_k;
    if (max_extract > 0) range.max_extract_n = std::min(max_extract, kMaxRank);
    const VerificationReport r = run_identities(suites, range);
    emit(c.format == "json" ? report_json(r, nullptr) : report_text(r, nullptr), c.out);
    return r.pass() ? 0 : 1;
}

int cmd_table(const Common& c) {
    const RootSystemSpec spec = spec_of(c);
    if (is_long_run(spec) && !c.allow_long) throw OperationalError(spec.name() + " tables run for hours; pass --allow-long to start them");
    std::vector<Weight> targets = weights_of(c, spec);
    if (targets.empty()) targets = enumerate_small(spec);
    SolveOptions so;
    so.threads = c.threads;
    so.orbit_cap = c.orbit_cap;
    const MultiplicityTable t = solve_multiplicities(spec, targets, so);
    emit(c.format == "json" ? table_json(t, spec) : table_text(t, spec), c.out);
    return 0;
}

int cmd_data(const Common& c, std::size_t group_cap) {
    const RootSystemSpec spec = spec_of(c);
    std::vector<Weight> targets = weights_of(c, spec);
    if (targets.empty())
        for (const auto& w : enumerate_small(spec))
            if (!w.is_zero()) targets.push_back(w);
    MolienContext ctx(spec, group_cap);
    std::vector<ExceptionalPWRecord> records;
    for (const auto& w : targets) {
        ExceptionalPWRecord r = ctx.record(w);
        r.provenance = std::string("molien sum over W(") + spec.name() + "), " + kToolVersion;
        validate_record(r, spec);
        records.push_back(std::move(r));
    }
    emit(records_json(records), c.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Reeder's conjecture on small representations"};
    app.require_subcommand(1);
    Common c;
    std::string lhs = "recurrence", rhs = "closed";
    bool timings = false;
    std::vector<std::string> suites;
    int max_k = 0, max_extract = 0;
    std::size_t group_cap = kDefaultGroupCap;

    auto add_spec = [&](CLI::App* sub, bool required) {
        auto* t = sub->add_option("--type", c.type, "root system type A..G");
        auto* r = sub->add_option("--rank", c.rank, "rank")->check(CLI::Range(1, kMaxRank));
        if (required) {
            t->required();
            r->required();
        }
        sub->add_option("--weights", c.weights, "weights such as w1+2*w3; default every small weight")->delimiter(',');
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", c.out, "write to this file instead of stdout");
    };
    auto add_solver = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "worker threads for relation construction")->check(CLI::PositiveNumber);
        sub->add_option("--orbit-cap", c.orbit_cap, "largest Weyl orbit enumerated");
        sub->add_flag("--allow-long", c.allow_long, "permit E7 and E8 runs");
    };

    auto* verify_cmd = app.add_subcommand("verify", "compare C_lambda with P_W(V^0_lambda; q^2, q)");
    add_spec(verify_cmd, true);
    add_output(verify_cmd);
    add_solver(verify_cmd);
    verify_cmd->add_option("--lhs", lhs, "recurrence or oracle")->check(CLI::IsMember({"recurrence", "oracle"}));
    verify_cmd->add_option("--rhs", rhs, "closed, data or molien")->check(CLI::IsMember({"closed", "data", "molien"}));
    verify_cmd->add_option("--data-dir", c.data_dir, "directory of exceptional records")->envname("REEDER_DATA_DIR");
    verify_cmd->add_flag("--timings", timings, "record elapsed time per weight");

    auto* ident_cmd = app.add_subcommand("identities", "type D coefficient identity suites");
    ident_cmd->add_option("--suite", suites, "d-coeffs, prop45, prop47, final, e6-symmetry or all")->delimiter(',');
    ident_cmd->add_option("--max-rank", c.rank, "largest n")->check(CLI::Range(4, 64));
    ident_cmd->add_option("--max-k", max_k, "largest k")->check(CLI::Range(1, 32));
    ident_cmd->add_option("--max-extract-rank", max_extract, "largest n for recurrence extraction")->check(CLI::Range(4, kMaxRank));
    add_output(ident_cmd);

    auto* table_cmd = app.add_subcommand("table", "solved C_lambda(-q, q^2) for small weights");
    add_spec(table_cmd, true);
    add_output(table_cmd);
    add_solver(table_cmd);

    auto* data_cmd = app.add_subcommand("data", "write P_W records computed by Molien sums");
    add_spec(data_cmd, true);
    data_cmd->add_option("--out", c.out, "output file");
    data_cmd->add_option("--group-cap", group_cap, "largest Weyl group enumerated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return cmd_verify(c, lhs, rhs, timings);
        if (*ident_cmd) return cmd_identities(c, suites, max_k, max_extract);
        if (*table_cmd) return cmd_table(c);
        if (*data_cmd) return cmd_data(c, group_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
