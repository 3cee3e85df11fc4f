#include "reeder/rhs.hpp"

#include "reeder/oracle.hpp"
#include "reeder/stembridge.hpp"
#include "reeder/weyl_side.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace reeder {

using nlohmann::json;

namespace {

json to_json(const ExceptionalPWRecord& r) {
    json terms = json::array();
    for (const auto& [e, c] : r.pw_qy.terms()) {
        if (c.fits_slong_p())
            terms.push_back({e.first, e.second, c.get_si()});
        else
            terms.push_back({e.first, e.second, c.get_str()});
    }
    return {{"type", std::string(1, r.type)},
            {"rank", r.rank},
            {"weight", weight_vector(r.weight, build_root_system(r.type, r.rank))},
            {"labels", r.labels},
            {"pw_qy", terms},
            {"provenance", r.provenance}};
}

ExceptionalPWRecord from_json(const json& j) {
    ExceptionalPWRecord r;
    const std::string t = j.at("type").get<std::string>();
    if (t.size() != 1) throw DataError("bad type '" + t + "'");
    r.type = t[0];
    r.rank = j.at("rank").get<int>();
    const RootSystemSpec spec = build_root_system(r.type, r.rank);
    const auto w = j.at("weight").get<std::vector<int>>();
    if (static_cast<int>(w.size()) != r.rank) throw DataError("weight has " + std::to_string(w.size()) + " entries for " + spec.name());
    r.weight = weight_from_vector(w, spec);
    r.labels = j.value("labels", std::vector<std::string>{});
    for (const auto& term : j.at("pw_qy")) {
        if (!term.is_array() || term.size() != 3) throw DataError("pw_qy terms are [q_exp, y_exp, coeff]");
        Int c;
        if (term[2].is_string()) {
            if (c.set_str(term[2].get<std::string>(), 10) != 0) throw DataError("bad coefficient " + term[2].dump());
        } else {
            c = term[2].get<long>();
        }
        r.pw_qy.add_term(term[0].get<int>(), term[1].get<int>(), c);
    }
    r.provenance = j.value("provenance", std::string());
    return r;
}

}  // namespace

std::string records_json(const std::vector<ExceptionalPWRecord>& records) {
    json doc;
    if (!records.empty()) {
        doc["type"] = std::string(1, records.front().type);
        doc["rank"] = records.front().rank;
    }
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(to_json(r));
    return doc.dump(1) + "\n";
}

std::vector<ExceptionalPWRecord> parse_records(const std::string& text) {
    std::vector<ExceptionalPWRecord> out;
    try {
        const json doc = json::parse(text);
        for (const auto& j : doc.at("records")) out.push_back(from_json(j));
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed record file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    return out;
}

std::vector<ExceptionalPWRecord> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_records(ss.str());
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_records(const std::string& path, const std::vector<ExceptionalPWRecord>& records) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << records_json(records);
}

void validate_record(const ExceptionalPWRecord& rec, const RootSystemSpec& spec) {
    if (rec.type != spec.type || rec.rank != spec.rank) throw DataError("record for " + std::string(1, rec.type) + std::to_string(rec.rank) + " used with " + spec.name());
    if (rec.pw_qy.vars() != Vars::QY) throw DataError("pw_qy must be in (q, y)");
    const Int at_one = specialize_qy(rec.pw_qy).eval_at_one();
    const Int expect = Int(freudenthal_zero_mult(rec.weight, spec)) << spec.rank;
    if (at_one != expect)
        throw DataError(spec.name() + " " + format_weight(rec.weight, spec) + ": P_W(1,1) = " + at_one.get_str() + ", expected 2^" +
                        std::to_string(spec.rank) + " * m^0 = " + expect.get_str());
}

DataStore DataStore::load_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    DataStore store;
    if (!fs::is_directory(dir)) throw DataError("data directory " + dir + " does not exist");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        for (auto& r : read_records(f.string())) {
            validate_record(r, build_root_system(r.type, r.rank));
            store.add(std::move(r));
        }
    }
    return store;
}

const ExceptionalPWRecord* DataStore::find(const RootSystemSpec& spec, const Weight& lambda) const {
    for (const auto& r : records_)
        if (r.type == spec.type && r.rank == spec.rank && r.weight == lambda) return &r;
    return nullptr;
}

MolienContext::MolienContext(const RootSystemSpec& spec, std::size_t cap)
    : spec_(spec), group_(build_weyl_group(spec, cap)), table_(character_table(group_, spec)) {}

ExceptionalPWRecord MolienContext::record(const Weight& lambda) const {
    const ZeroWeightDecomposition z = zero_weight_character(lambda, spec_, group_, table_);
    ExceptionalPWRecord r;
    r.type = spec_.type;
    r.rank = spec_.rank;
    r.weight = lambda;
    r.labels = z.labels;
    r.pw_qy = molien_pw(class_data(group_, z.character), spec_);
    r.provenance = "molien";
    return r;
}

RhsMode parse_rhs_mode(const std::string& s) {
    if (s == "closed") return RhsMode::Closed;
    if (s == "data") return RhsMode::Data;
    if (s == "molien") return RhsMode::Molien;
    throw std::invalid_argument("unknown rhs mode '" + s + "'");
}

const char* rhs_mode_name(RhsMode m) {
    switch (m) {
        case RhsMode::Closed: return "closed";
        case RhsMode::Data: return "data";
        case RhsMode::Molien: return "molien";
    }
    return "?";
}

RhsResult assemble_rhs(const RootSystemSpec& spec, const Weight& lambda, RhsMode mode, const DataStore* store,
                       std::shared_ptr<MolienContext>* molien) {
    if (lambda.is_zero()) return {base_value(spec), "base", {}};
    if (mode == RhsMode::Closed && spec.type == 'D' && d_label(lambda, spec)) return {closed_form_rhs(spec, lambda), "closed", {}};
    if (mode != RhsMode::Molien && store) {
        if (const auto* r = store->find(spec, lambda)) return {specialize_qy(r->pw_qy), "data", r->labels};
    }
    if (mode == RhsMode::Data)
        throw DataError("no record for " + spec.name() + " " + format_weight(lambda, spec) + (store ? "" : " (no data directory)"));
    std::shared_ptr<MolienContext> local;
    std::shared_ptr<MolienContext>& ctx = molien ? *molien : local;
    if (!ctx) ctx = std::make_shared<MolienContext>(spec);
    ExceptionalPWRecord r = ctx->record(lambda);
    return {specialize_qy(r.pw_qy), "molien", r.labels};
}

HyperoctahedralCheck hyperoctahedral_check(int n) {
    if (n < 1 || n > 2) throw std::invalid_argument("hyperoctahedral check covers ranks 1 and 2");
    // W(B_1) is W(A_1) acting on a line
    const RootSystemSpec spec = n == 1 ? build_root_system('A', 1) : build_root_system('B', 2);
    const WeylGroup g = build_weyl_group(spec);
    const CharacterTable t = character_table(g, spec);
    LaurentPoly norm(1);
    for (int j = 1; j <= n; ++j) norm *= LaurentPoly(1) - LaurentPoly::monomial(1, 2 * j);

    std::vector<std::string> hooks, molien;
    for (int a = 0; a <= n; ++a)
        for (const auto& alpha : partitions_of(a))
            for (const auto& beta : partitions_of(n - a)) {
                BiRational h = hook_content_poly(alpha, beta);
                h *= norm;
                hooks.push_back(h.to_poly().str());
            }
    for (const auto& irr : t.irreducibles) molien.push_back(molien_pw(class_data(g, irr.values), spec).str());
    std::sort(hooks.begin(), hooks.end());
    std::sort(molien.begin(), molien.end());

    HyperoctahedralCheck c;
    c.n = n;
    c.irreducibles = molien.size();
    c.pass = hooks == molien;
    if (!c.pass) {
        std::vector<std::string> missing;
        std::set_difference(hooks.begin(), hooks.end(), molien.begin(), molien.end(), std::back_inserter(missing));
        c.detail = std::to_string(hooks.size()) + " bipartitions, " + std::to_string(molien.size()) + " irreducibles";
        for (const auto& m : missing) c.detail += "; unmatched " + m;
    }
    return c;
}

}  // namespace reeder
