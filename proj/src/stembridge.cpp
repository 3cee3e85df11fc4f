#include "reeder/stembridge.hpp"

#include "reeder/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace reeder {

namespace {

void add_reduced(Relation& rel, const Weight& mu, const LaurentPoly& c, const RootSystemSpec& spec) {
    if (c.is_zero()) return;
    auto red = dominant_reduce(mu, spec);
    if (!red) return;
    auto& slot = rel.terms[red->lambda];
    if (red->sign > 0) slot += c;
    else slot -= c;
}

void prune(Relation& rel) {
    for (auto it = rel.terms.begin(); it != rel.terms.end();)
        it = it->second.is_zero() ? rel.terms.erase(it) : std::next(it);
}

}  // namespace

Relation minuscule_relation(const Weight& lambda, const Coweight& omega, const RootSystemSpec& spec, std::size_t orbit_cap) {
    if (!is_minuscule(omega, spec)) throw RelationError("coweight is not minuscule");
    if (!spec.is_dominant(lambda)) throw RelationError("source weight is not dominant");
    Relation rel;
    rel.source = lambda;
    rel.omega = omega;
    const long l = spec.pair(lambda, omega);
    const auto psis = stabilizer_orbit(lambda, omega, spec);
    Orbit orbit = weyl_orbit(lambda, spec, orbit_cap);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const auto word = orbit.witness(i);
        LaurentPoly c;
        for (const auto& psi : psis) {
            const long x2 = spec.two_rho_pair(apply_word(word, psi, spec));
            c += LaurentPoly::q(static_cast<int>(-x2));
            c -= LaurentPoly::neg_q(static_cast<int>(l)) * LaurentPoly::q(static_cast<int>(x2));
        }
        add_reduced(rel, orbit[i], c, spec);
    }
    prune(rel);
    return rel;
}

QuasiMinusculeExpansion::QuasiMinusculeExpansion(const RootSystemSpec& spec, const Coweight& omega, std::size_t cap)
    : omega_(omega) {
    using Map = std::unordered_map<Weight, LaurentPoly, CoordsHash>;
    auto multiply = [&](Map& m, const Weight& a, const LaurentPoly& c0, const LaurentPoly& c1) {
        Map next;
        next.reserve(m.size() * 2);
        for (const auto& [w, p] : m) {
            next[w] += p * c0;
            next[w + a] += p * c1;
        }
        for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
        if (next.size() > cap) throw OrbitCapExceeded("quasi-minuscule expansion exceeds cap");
        m = std::move(next);
    };
    Map L{{Weight{}, LaurentPoly(1)}}, R{{Weight{}, LaurentPoly(1)}};
    const LaurentPoly t = LaurentPoly::q(2);
    for (std::size_t k = 0; k < spec.pos_roots.size(); ++k) {
        const long m = spec.root_pair(spec.pos_roots[k], omega);
        if (m < 0) throw RelationError("coweight is not dominant");
        const Weight& a = spec.pos_roots_w[k];
        for (long i = 1; i <= m; ++i) multiply(L, a, t, -LaurentPoly::neg_q(static_cast<int>(i)));
        for (long j = 0; j < m; ++j) multiply(R, a, LaurentPoly(1), -(t * LaurentPoly::neg_q(static_cast<int>(j))));
    }
    Map merged;
    for (const auto& [g, p] : L) merged[g];
    for (const auto& [g, p] : R) merged[g];
    terms_.reserve(merged.size());
    for (const auto& [g, unused] : merged) {
        Term term{g, {}, {}};
        if (auto it = L.find(g); it != L.end()) term.l = it->second;
        if (auto it = R.find(g); it != R.end()) term.r = it->second;
        terms_.push_back(std::move(term));
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.gamma < b.gamma; });
}

Relation quasi_minuscule_relation(const Weight& lambda, const QuasiMinusculeExpansion& ex, const RootSystemSpec& spec) {
    if (!spec.is_dominant(lambda)) throw RelationError("source weight is not dominant");
    Relation rel;
    rel.source = lambda;
    rel.omega = ex.omega();
    rel.quasi = true;
    for (const auto& term : ex.terms()) {
        const Weight mu = lambda - term.gamma;
        const long e = spec.pair(mu, ex.omega());
        LaurentPoly c = term.l * LaurentPoly::neg_q(static_cast<int>(e));
        c -= term.r;
        add_reduced(rel, mu, c, spec);
    }
    prune(rel);
    return rel;
}

Relation quasi_minuscule_relation(const Weight& lambda, const RootSystemSpec& spec) {
    QuasiMinusculeExpansion ex(spec, quasi_minuscule_coweight(spec));
    return quasi_minuscule_relation(lambda, ex, spec);
}

LaurentPoly base_value(const RootSystemSpec& spec) {
    LaurentPoly p(1);
    for (int m : spec.exponents) p *= one_plus(1, 2 * m + 1);
    return p;
}

Coweight default_minuscule_coweight(const RootSystemSpec& spec) {
    auto idx = minuscule_coweights(spec);
    if (idx.empty()) throw RelationError(spec.name() + " has no minuscule coweight");
    return spec.fundamental_coweight(idx.front());
}

bool uses_quasi_minuscule(const RootSystemSpec& spec, CoweightPolicy policy) {
    switch (policy) {
    case CoweightPolicy::Minuscule: return false;
    case CoweightPolicy::QuasiMinuscule: return true;
    default: return minuscule_coweights(spec).empty();
    }
}

MultiplicityTable solve_multiplicities(const RootSystemSpec& spec, const std::vector<Weight>& targets, const SolveOptions& opts) {
    const auto small = enumerate_small(spec);
    for (const auto& t : targets)
        if (std::find(small.begin(), small.end(), t) == small.end())
            throw RelationError("target " + format_weight(t, spec) + " is not small");
    std::vector<Weight> order;
    for (const auto& mu : small)
        for (const auto& t : targets)
            if (dominance_leq(mu, t, spec)) {
                order.push_back(mu);
                break;
            }

    const bool quasi = uses_quasi_minuscule(spec, opts.policy);
    std::unique_ptr<QuasiMinusculeExpansion> ex;
    Coweight omega;
    if (quasi) ex = std::make_unique<QuasiMinusculeExpansion>(spec, quasi_minuscule_coweight(spec), opts.orbit_cap);
    else omega = default_minuscule_coweight(spec);

    std::vector<Relation> rels(order.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&]() {
        for (std::size_t i; (i = next++) < order.size();) {
            try {
                rels[i] = quasi ? quasi_minuscule_relation(order[i], *ex, spec)
                                : minuscule_relation(order[i], omega, spec, opts.orbit_cap);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(order.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < nthreads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    MultiplicityTable table;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Weight& lambda = order[i];
        const Relation& rel = rels[i];
        if (lambda.is_zero()) {
            table.values[lambda] = base_value(spec);
            continue;
        }
        LaurentPoly lead = rel.coeff(lambda);
        if (lead.is_zero()) throw RelationError("leading coefficient vanishes at " + format_weight(lambda, spec));
        LaurentPoly rest;
        for (const auto& [mu, c] : rel.terms) {
            if (mu == lambda) continue;
            auto it = table.values.find(mu);
            if (it == table.values.end())
                throw RelationError("relation for " + format_weight(lambda, spec) + " involves unsolved " + format_weight(mu, spec));
            rest += c * it->second;
        }
        try {
            table.values[lambda] = exact_div(-rest, lead);
        } catch (const NonDivisible&) {
            throw NonDivisible("relation for " + format_weight(lambda, spec) + " does not divide exactly");
        }
    }
    table.relations = std::move(rels);
    return table;
}

LaurentPoly relation_residual(const MultiplicityTable& table, const Relation& rel) {
    LaurentPoly s;
    for (const auto& [mu, c] : rel.terms) {
        auto it = table.values.find(mu);
        if (it == table.values.end()) throw RelationError("relation support is not covered by the table");
        s += c * it->second;
    }
    return s;
}

bool relation_consistency(const MultiplicityTable& table, const Relation& rel) { return relation_residual(table, rel).is_zero(); }

bool e6_involution_check(const Weight& lambda, const Weight& image, const RootSystemSpec& spec) {
    if (spec.type != 'E' || spec.rank != 6) throw std::invalid_argument("the involution check needs E6");
    Relation a = minuscule_relation(lambda, spec.fundamental_coweight(0), spec);
    Relation b = minuscule_relation(image, spec.fundamental_coweight(5), spec);
    if (e6_involution(lambda) != image) return false;
    std::map<Weight, LaurentPoly> relabelled;
    for (const auto& [mu, c] : a.terms) relabelled[e6_involution(mu)] = c;
    return relabelled == b.terms;
}

bool e6_involution_check(const Weight& lambda, const RootSystemSpec& spec) {
    return e6_involution_check(lambda, e6_involution(lambda), spec);
}

TableInvariants check_table_entry(const Weight& lambda, const LaurentPoly& c, const RootSystemSpec& spec) {
    TableInvariants inv;
    inv.nonnegative = c.nonnegative();
    inv.degree_bound = c.is_zero() || (c.min_exp() >= 0 && c.max_exp() <= spec.dim());
    inv.dimension = eval_at_one(c) == Int(freudenthal_zero_mult(lambda, spec)) * (Int(1) << spec.rank);
    inv.palindromic = c.palindromic(spec.dim());
    return inv;
}

}  // namespace reeder
