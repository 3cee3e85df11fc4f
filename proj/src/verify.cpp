#include "reeder/verify.hpp"

#include "reeder/oracle.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

namespace reeder {

using nlohmann::ordered_json;

LhsMode parse_lhs_mode(const std::string& s) {
    if (s == "recurrence") return LhsMode::Recurrence;
    if (s == "oracle") return LhsMode::Oracle;
    throw std::invalid_argument("unknown lhs mode '" + s + "'");
}

const char* lhs_mode_name(LhsMode m) { return m == LhsMode::Oracle ? "oracle" : "recurrence"; }

bool VerificationReport::pass() const {
    for (const auto& r : records)
        if (!r.pass()) return false;
    for (const auto& s : suites)
        if (!s.pass()) return false;
    return true;
}

bool is_long_run(const RootSystemSpec& spec) { return spec.type == 'E' && spec.rank >= 7; }

VerificationReport verify(const RootSystemSpec& spec, const VerifyOptions& opts) {
    using clock = std::chrono::steady_clock;
    if (is_long_run(spec) && !opts.allow_long)
        throw OperationalError(spec.name() + " verification runs for hours; pass --allow-long to start it");
    std::vector<Weight> weights = opts.weights.empty() ? enumerate_small(spec) : opts.weights;
    for (const auto& w : weights)
        if (!spec.is_dominant(w) || !is_small(w, spec)) throw OperationalError(format_weight(w, spec) + " is not a small dominant weight of " + spec.name());

    VerificationReport rep;
    rep.spec_id = spec.name();

    MultiplicityTable table;
    std::optional<WeightPolyMap> cm;
    if (opts.lhs == LhsMode::Recurrence) {
        SolveOptions so;
        so.threads = opts.threads;
        so.orbit_cap = opts.orbit_cap;
        table = solve_multiplicities(spec, weights, so);
    } else {
        cm = graded_exterior_character(spec);
    }

    std::shared_ptr<MolienContext> molien;
    const Int scale = Int(1) << spec.rank;
    for (const auto& w : weights) {
        const auto start = clock::now();
        WeightRecord r;
        r.weight = w;
        r.lhs_method = lhs_mode_name(opts.lhs);
        r.lhs = cm ? extract_graded_multiplicity(*cm, w, spec, opts.orbit_cap) : table.at(w);
        RhsResult rhs = assemble_rhs(spec, w, opts.rhs, opts.store, &molien);
        r.rhs_method = rhs.method;
        r.rhs = std::move(rhs.value);
        r.labels = std::move(rhs.labels);
        r.equal = r.lhs == r.rhs;
        r.m0 = freudenthal_zero_mult(w, spec);
        r.q1_check = eval_at_one(r.lhs) == scale * r.m0 && eval_at_one(r.rhs) == scale * r.m0;
        if (opts.timings) r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

VerificationReport run_identities(const std::vector<std::string>& suites, const typed::SuiteRange& range) {
    const auto known = typed::suite_names();
    VerificationReport rep;
    rep.spec_id = "identities";
    for (const auto& s : suites) {
        if (std::find(known.begin(), known.end(), s) == known.end()) throw OperationalError("unknown suite '" + s + "'");
        rep.suites.push_back(typed::run_suite(s, range));
    }
    return rep;
}

namespace {

ordered_json checks_json(const std::vector<typed::Check>& cs, bool failing_only) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs)
        if (!failing_only || !c.pass) a.push_back({{"name", c.name}, {"detail", c.detail}});
    return a;
}

}  // namespace

std::string report_json(const VerificationReport& r, const RootSystemSpec* spec) {
    ordered_json j;
    j["tool_version"] = r.tool_version;
    j["spec_id"] = r.spec_id;
    j["pass"] = r.pass();
    j["records"] = ordered_json::array();
    for (const auto& w : r.records) {
        ordered_json o;
        o["weight"] = spec ? format_weight(w.weight, *spec) : "";
        o["vector"] = spec ? weight_vector(w.weight, *spec) : std::vector<int>{};
        o["labels"] = w.labels;
        o["lhs_method"] = w.lhs_method;
        o["lhs"] = w.lhs.str();
        o["rhs_method"] = w.rhs_method;
        o["rhs"] = w.rhs.str();
        o["equal"] = w.equal;
        o["m0"] = w.m0;
        o["q1_check"] = w.q1_check;
        o["elapsed_ms"] = w.elapsed_ms;
        j["records"].push_back(o);
    }
    j["suites"] = ordered_json::array();
    for (const auto& s : r.suites) {
        ordered_json o;
        o["suite"] = s.suite;
        o["pass"] = s.pass();
        o["checks"] = s.checks.size();
        o["failures"] = checks_json(s.checks, true);
        o["discrepancies"] = checks_json(s.discrepancies, false);
        j["suites"].push_back(o);
    }
    return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r, const RootSystemSpec* spec) {
    std::ostringstream os;
    os << r.tool_version << "  " << r.spec_id << "\n";
    for (const auto& w : r.records) {
        os << (w.pass() ? "ok   " : "FAIL ") << (spec ? format_weight(w.weight, *spec) : "?") << "  lhs=" << w.lhs_method << " rhs=" << w.rhs_method
           << "  m0=" << w.m0 << (w.equal ? "" : "  lhs != rhs") << (w.q1_check ? "" : "  dimension check failed");
        if (!w.labels.empty()) {
            os << "  [";
            for (std::size_t i = 0; i < w.labels.size(); ++i) os << (i ? " + " : "") << w.labels[i];
            os << "]";
        }
        if (w.elapsed_ms > 0) os << "  " << static_cast<long>(w.elapsed_ms) << " ms";
        os << "\n    C = " << w.lhs.str() << "\n";
        if (!w.equal) os << "    P = " << w.rhs.str() << "\n";
    }
    for (const auto& s : r.suites) {
        os << (s.pass() ? "ok   " : "FAIL ") << "suite " << s.suite << ": " << s.checks.size() << " checks, " << s.failures() << " failures, "
           << s.discrepancies.size() << " printed statements not confirmed\n";
        for (const auto& c : s.checks)
            if (!c.pass) os << "    failed " << c.name << ": " << c.detail << "\n";
        for (const auto& c : s.discrepancies) os << "    noted  " << c.name << ": " << c.detail << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string table_json(const MultiplicityTable& t, const RootSystemSpec& spec) {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["spec_id"] = spec.name();
    j["values"] = ordered_json::array();
    for (const auto& [w, c] : t.values)
        j["values"].push_back({{"weight", format_weight(w, spec)}, {"vector", weight_vector(w, spec)}, {"c", c.str()}});
    return j.dump(2) + "\n";
}

std::string table_text(const MultiplicityTable& t, const RootSystemSpec& spec) {
    std::ostringstream os;
    for (const auto& [w, c] : t.values) os << format_weight(w, spec) << "\t" << c.str() << "\n";
    return os.str();
}

}  // namespace reeder
