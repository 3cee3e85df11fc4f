#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"

#include <map>
#include <memory>

namespace reeder {

struct Relation {
    Weight source;
    Coweight omega;
    bool quasi = false;
    std::map<Weight, LaurentPoly> terms;

    LaurentPoly coeff(const Weight& mu) const {
        auto it = terms.find(mu);
        return it == terms.end() ? LaurentPoly() : it->second;
    }
};

class RelationError : public std::runtime_error {
public:
    explicit RelationError(const std::string& w) : std::runtime_error(w) {}
};

// C_lambda(-q, q^2) for dominant small weights
struct MultiplicityTable {
    std::map<Weight, LaurentPoly> values;
    std::vector<Relation> relations;

    bool contains(const Weight& w) const { return values.count(w) != 0; }
    const LaurentPoly& at(const Weight& w) const { return values.at(w); }
};

Relation minuscule_relation(const Weight& lambda, const Coweight& omega, const RootSystemSpec& spec,
                            std::size_t orbit_cap = kDefaultOrbitCap);

// L = prod_{a>0} prod_{i=1}^{m_a} (t - p^i e^a), R = prod_{a>0} prod_{j<m_a} (1 - t p^j e^a) at p = -q, t = q^2
// with m_a = (a, omega); the expansion depends only on omega and is shared by every source weight
class QuasiMinusculeExpansion {
public:
    QuasiMinusculeExpansion(const RootSystemSpec& spec, const Coweight& omega, std::size_t cap = kDefaultOrbitCap);
    const Coweight& omega() const { return omega_; }
    std::size_t size() const { return terms_.size(); }
    struct Term {
        Weight gamma;
        LaurentPoly l, r;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    Coweight omega_;
    std::vector<Term> terms_;
};

Relation quasi_minuscule_relation(const Weight& lambda, const RootSystemSpec& spec);
Relation quasi_minuscule_relation(const Weight& lambda, const QuasiMinusculeExpansion& ex, const RootSystemSpec& spec);

enum class CoweightPolicy { Auto, Minuscule, QuasiMinuscule };

struct SolveOptions {
    CoweightPolicy policy = CoweightPolicy::Auto;
    int threads = 1;
    std::size_t orbit_cap = kDefaultOrbitCap;
};

// C_0 = prod (1 + q^{2 m_i + 1})
LaurentPoly base_value(const RootSystemSpec& spec);
Coweight default_minuscule_coweight(const RootSystemSpec& spec);
bool uses_quasi_minuscule(const RootSystemSpec& spec, CoweightPolicy policy);

// solves every small weight below some target, in dominance-compatible order
MultiplicityTable solve_multiplicities(const RootSystemSpec& spec, const std::vector<Weight>& targets,
                                       const SolveOptions& opts = {});

LaurentPoly relation_residual(const MultiplicityTable& table, const Relation& rel);
bool relation_consistency(const MultiplicityTable& table, const Relation& rel);

// compares minuscule_relation(lambda, omega_1) with minuscule_relation(image, omega_6) relabelled by J
bool e6_involution_check(const Weight& lambda, const Weight& image, const RootSystemSpec& spec);
bool e6_involution_check(const Weight& lambda, const RootSystemSpec& spec);

struct TableInvariants {
    bool nonnegative = true;
    bool degree_bound = true;
    bool dimension = true;
    bool palindromic = true;
};
TableInvariants check_table_entry(const Weight& lambda, const LaurentPoly& c, const RootSystemSpec& spec);

}  // namespace reeder
