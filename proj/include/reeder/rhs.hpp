#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"
#include "reeder/weyl_group.hpp"

#include <memory>
#include <string>

namespace reeder {

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& w) : std::runtime_error(w) {}
};

struct ExceptionalPWRecord {
    char type = 'E';
    int rank = 0;
    Weight weight;
    std::vector<std::string> labels;
    BiPoly pw_qy{Vars::QY};
    std::string provenance;
};

// one JSON document per type: {"type", "rank", "records": [{type, rank, weight, labels, pw_qy, provenance}]}
std::vector<ExceptionalPWRecord> read_records(const std::string& path);
void write_records(const std::string& path, const std::vector<ExceptionalPWRecord>& records);
std::string records_json(const std::vector<ExceptionalPWRecord>& records);
std::vector<ExceptionalPWRecord> parse_records(const std::string& text);

// specialize_qy(pw) at q = 1 must equal 2^n m^0_lambda
void validate_record(const ExceptionalPWRecord& rec, const RootSystemSpec& spec);

class DataStore {
public:
    // every *.json file in dir, validated
    static DataStore load_dir(const std::string& dir);
    void add(ExceptionalPWRecord rec) { records_.push_back(std::move(rec)); }
    const ExceptionalPWRecord* find(const RootSystemSpec& spec, const Weight& lambda) const;
    const std::vector<ExceptionalPWRecord>& records() const { return records_; }

private:
    std::vector<ExceptionalPWRecord> records_;
};

// the Weyl group, its character table and V^0 decompositions, built once per spec
class MolienContext {
public:
    explicit MolienContext(const RootSystemSpec& spec, std::size_t cap = kDefaultGroupCap);
    const WeylGroup& group() const { return group_; }
    const CharacterTable& table() const { return table_; }
    ExceptionalPWRecord record(const Weight& lambda) const;

private:
    RootSystemSpec spec_;
    WeylGroup group_;
    CharacterTable table_;
};

enum class RhsMode { Closed, Data, Molien };
RhsMode parse_rhs_mode(const std::string& s);
const char* rhs_mode_name(RhsMode m);

struct RhsResult {
    LaurentPoly value;
    std::string method;
    std::vector<std::string> labels;
};

// P_W(V^0_lambda; q^2, q). lambda = 0 gives prod (1 + q^{2 m_i + 1}). Closed mode uses the hook-content closed
// form for D_n and falls back to data, then Molien, elsewhere. Data mode needs a record.
RhsResult assemble_rhs(const RootSystemSpec& spec, const Weight& lambda, RhsMode mode, const DataStore* store,
                       std::shared_ptr<MolienContext>* molien = nullptr);

// hook-content products against Molien sums over every irreducible of the hyperoctahedral group of rank n (1 or 2)
struct HyperoctahedralCheck {
    int n = 0;
    std::size_t irreducibles = 0;
    bool pass = false;
    std::string detail;
};
HyperoctahedralCheck hyperoctahedral_check(int n);

}  // namespace reeder
