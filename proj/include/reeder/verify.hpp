#pragma once

#include "reeder/rhs.hpp"
#include "reeder/stembridge.hpp"
#include "reeder/type_d.hpp"

#include <string>

namespace reeder {

constexpr const char* kToolVersion = "reeder 1.0.0";

// bad input, caps, missing data: exit code 2
class OperationalError : public std::runtime_error {
public:
    explicit OperationalError(const std::string& w) : std::runtime_error(w) {}
};

enum class LhsMode { Recurrence, Oracle };
LhsMode parse_lhs_mode(const std::string& s);
const char* lhs_mode_name(LhsMode m);

struct VerifyOptions {
    std::vector<Weight> weights;  // empty: every small weight
    LhsMode lhs = LhsMode::Recurrence;
    RhsMode rhs = RhsMode::Closed;
    int threads = 1;
    std::size_t orbit_cap = kDefaultOrbitCap;
    const DataStore* store = nullptr;
    bool allow_long = false;
    bool timings = false;  // elapsed_ms stays 0 otherwise, keeping reports byte-identical
};

struct WeightRecord {
    Weight weight;
    std::string lhs_method, rhs_method;
    LaurentPoly lhs, rhs;
    std::vector<std::string> labels;
    bool equal = false;
    long m0 = 0;
    bool q1_check = false;
    double elapsed_ms = 0;
    bool pass() const { return equal && q1_check; }
};

struct VerificationReport {
    std::string tool_version = kToolVersion;
    std::string spec_id;
    std::vector<WeightRecord> records;
    std::vector<typed::SuiteReport> suites;
    bool pass() const;
};

// E7 and E8 need allow_long
bool is_long_run(const RootSystemSpec& spec);

VerificationReport verify(const RootSystemSpec& spec, const VerifyOptions& opts);
VerificationReport run_identities(const std::vector<std::string>& suites, const typed::SuiteRange& range);

std::string report_json(const VerificationReport& r, const RootSystemSpec* spec);
std::string report_text(const VerificationReport& r, const RootSystemSpec* spec);

std::string table_json(const MultiplicityTable& t, const RootSystemSpec& spec);
std::string table_text(const MultiplicityTable& t, const RootSystemSpec& spec);

}  // namespace reeder
