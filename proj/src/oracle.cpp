#include "reeder/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace reeder {

const int64_t* WeightPolyMap::row(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return nullptr;
    return rows_.data() + static_cast<std::size_t>(it->second) * static_cast<std::size_t>(width_);
}

LaurentPoly WeightPolyMap::root_part(const Weight& w) const {
    LaurentPoly p;
    if (const int64_t* r = row(w))
        for (int e = 0; e < width_; ++e)
            if (r[e]) p.add_term(e, Int(static_cast<long>(r[e])));
    return p;
}

LaurentPoly WeightPolyMap::at(const Weight& w) const { return root_part(w) * pow(one_plus(1, 1), rank_); }

std::vector<Weight> WeightPolyMap::weights() const {
    std::vector<Weight> out;
    out.reserve(index_.size());
    for (const auto& [w, i] : index_) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

Int WeightPolyMap::total_dimension() const {
    Int s = 0;
    for (int64_t x : rows_) s += Int(static_cast<long>(x));
    return s * (Int(1) << rank_);
}

WeightPolyMap graded_exterior_character(const RootSystemSpec& spec, int dim_cap) {
    if (spec.dim() > dim_cap)
        throw OracleCapExceeded("dim " + std::to_string(spec.dim()) + " of " + spec.name() + " exceeds the oracle cap");
    WeightPolyMap m;
    m.rank_ = spec.rank;
    m.width_ = 2 * static_cast<int>(spec.pos_roots.size()) + 1;
    const auto W = static_cast<std::size_t>(m.width_);
    m.index_.emplace(Weight{}, 0);
    m.rows_.assign(W, 0);
    m.rows_[0] = 1;
    // each positive root contributes (1 + q e^a)(1 + q e^-a) = 1 + q e^a + q e^-a + q^2
    for (const auto& a : spec.pos_roots_w) {
        std::unordered_map<Weight, uint32_t, CoordsHash> next_index;
        next_index.reserve(m.index_.size() * 2);
        std::vector<int64_t> next;
        auto slot = [&](const Weight& w) -> int64_t* {
            auto [it, fresh] = next_index.emplace(w, static_cast<uint32_t>(next_index.size()));
            if (fresh) next.resize(next.size() + W, 0);
            return next.data() + static_cast<std::size_t>(it->second) * W;
        };
        for (const auto& [w, i] : m.index_) {
            const int64_t* src = m.rows_.data() + static_cast<std::size_t>(i) * W;
            int top = m.width_ - 1;
            while (top >= 0 && src[top] == 0) --top;
            int64_t* d0 = slot(w);
            for (int e = 0; e <= top; ++e) {
                d0[e] += src[e];
                if (e + 2 < m.width_) d0[e + 2] += src[e];
            }
            int64_t* dp = slot(w + a);
            for (int e = 0; e <= top && e + 1 < m.width_; ++e) dp[e + 1] += src[e];
            int64_t* dm = slot(w - a);
            for (int e = 0; e <= top && e + 1 < m.width_; ++e) dm[e + 1] += src[e];
        }
        m.index_ = std::move(next_index);
        m.rows_ = std::move(next);
    }
    return m;
}

LaurentPoly extract_graded_multiplicity(const WeightPolyMap& cm, const Weight& lambda, const RootSystemSpec& spec,
                                        std::size_t weyl_cap) {
    if (!spec.is_dominant(lambda)) throw std::invalid_argument("extraction needs a dominant weight");
    Orbit orbit = weyl_orbit(lambda + spec.rho, spec, weyl_cap);
    std::vector<__int128> acc(static_cast<std::size_t>(cm.width_), 0);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const int64_t* r = cm.row(orbit[i] - spec.rho);
        if (!r) continue;
        const bool odd = orbit.witness(i).size() % 2 == 1;
        for (int e = 0; e < cm.width_; ++e) acc[e] += odd ? -static_cast<__int128>(r[e]) : static_cast<__int128>(r[e]);
    }
    LaurentPoly p;
    for (int e = 0; e < cm.width_; ++e) {
        __int128 v = acc[e];
        if (v == 0) continue;
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        Int c = Int(static_cast<unsigned long>(u >> 64));
        c <<= 64;
        c += Int(static_cast<unsigned long>(u & ~0ull));
        p.add_term(e, neg ? Int(-c) : c);
    }
    return p * pow(one_plus(1, 1), cm.rank_);
}

Weight dominant_conjugate(Weight w, const RootSystemSpec& spec) {
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < spec.rank; ++i)
            if (w[i] < 0) {
                w = spec.reflect(w, i);
                moved = true;
            }
    }
    return w;
}

std::unordered_map<Weight, long, CoordsHash> freudenthal_dominant(const Weight& lambda, const RootSystemSpec& spec) {
    if (!spec.is_dominant(lambda)) throw std::invalid_argument("Freudenthal needs a dominant weight");
    auto dom = dominant_below(lambda, spec);
    std::unordered_set<Weight, CoordsHash> below(dom.begin(), dom.end());
    std::unordered_map<Weight, long, CoordsHash> mult;
    const Weight lr = lambda + spec.rho;
    const long top = spec.inner_scaled(lr, lr);
    for (auto it = dom.rbegin(); it != dom.rend(); ++it) {
        const Weight& mu = *it;
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        long num = 0;
        for (const auto& a : spec.pos_roots_w) {
            for (int k = 1;; ++k) {
                Weight v = mu + k * a;
                Weight d = dominant_conjugate(v, spec);
                if (!below.count(d)) break;
                num += spec.inner_scaled(v, a) * mult.at(d);
            }
        }
        const Weight mr = mu + spec.rho;
        const long den = top - spec.inner_scaled(mr, mr);
        if (den <= 0 || (2 * num) % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
        mult[mu] = 2 * num / den;
    }
    return mult;
}

long freudenthal_zero_mult(const Weight& lambda, const RootSystemSpec& spec) {
    if (!spec.in_root_lattice(lambda)) return 0;
    auto m = freudenthal_dominant(lambda, spec);
    auto it = m.find(Weight{});
    return it == m.end() ? 0 : it->second;
}

Int weyl_dimension(const Weight& lambda, const RootSystemSpec& spec) {
    Int num = 1, den = 1;
    const Weight lr = lambda + spec.rho;
    for (const auto& a : spec.pos_roots_w) {
        num *= Int(spec.inner_scaled(lr, a));
        den *= Int(spec.inner_scaled(spec.rho, a));
    }
    return num / den;
}

}  // namespace reeder
