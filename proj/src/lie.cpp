#include "reeder/lie.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace reeder {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int n) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2;
        break;
    case 'G':
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    default:
        throw std::invalid_argument("unknown type");
    }
    return a;
}

std::vector<int> symmetrizer(char type, int n) {
    std::vector<int> d(static_cast<std::size_t>(n), 1);
    switch (type) {
    case 'B':
        for (int i = 0; i + 1 < n; ++i) d[i] = 2;
        break;
    case 'C':
        d[n - 1] = 2;
        break;
    case 'F':
        d[0] = d[1] = 2;
        break;
    case 'G':
        d[1] = 3;
        break;
    default:
        break;
    }
    return d;
}

long determinant(std::vector<std::vector<long>> m) {
    // fraction-free Bareiss elimination
    const std::size_t n = m.size();
    long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<long>> adjugate(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (n == 1) {
                adj[0][0] = 1;
                break;
            }
            std::vector<std::vector<long>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<long> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(row);
            }
            long d = determinant(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

void validate(char type, int n) {
    bool ok = false;
    switch (type) {
    case 'A': ok = n >= 1 && n <= kMaxRank; break;
    case 'B': ok = n >= 2 && n <= kMaxRank; break;
    case 'C': ok = n >= 2 && n <= kMaxRank; break;
    case 'D': ok = n >= 4 && n <= kMaxRank; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
    }
    if (!ok) throw std::invalid_argument("invalid root system " + std::string(1, type) + std::to_string(n));
}

}  // namespace

int RootSystemSpec::max_sym() const { return *std::max_element(sym.begin(), sym.end()); }

Weight RootSystemSpec::fundamental(int i) const {
    Weight w;
    w[i] = 1;
    return w;
}

Weight RootSystemSpec::simple_root(int i) const {
    Weight w;
    for (int j = 0; j < rank; ++j) w[j] = static_cast<int16_t>(cartan[j][i]);
    return w;
}

Weight RootSystemSpec::reflect(const Weight& w, int i) const {
    Weight r = w;
    const int a = w[i];
    if (a == 0) return r;
    for (int j = 0; j < rank; ++j) r[j] = static_cast<int16_t>(r[j] - a * cartan[j][i]);
    return r;
}

Coweight RootSystemSpec::reflect(const Coweight& c, int i) const {
    Coweight r = c;
    const int a = c[i];
    if (a == 0) return r;
    for (int j = 0; j < rank; ++j) r[j] = static_cast<int16_t>(r[j] - a * cartan[i][j]);
    return r;
}

Coweight RootSystemSpec::fundamental_coweight(int i) const {
    Coweight c;
    c[i] = 1;
    return c;
}

IntVec RootSystemSpec::root_coords_scaled(const Weight& w) const {
    IntVec c(static_cast<std::size_t>(rank), 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i] += adj[i][j] * w[j];
    return c;
}

std::optional<IntVec> RootSystemSpec::root_coords(const Weight& w) const {
    IntVec c = root_coords_scaled(w);
    for (auto& x : c) {
        if (x % det != 0) return std::nullopt;
        x /= det;
    }
    return c;
}

long RootSystemSpec::inner_scaled(const Weight& a, const Weight& b) const {
    IntVec c = root_coords_scaled(a);
    long s = 0;
    for (int i = 0; i < rank; ++i) s += c[i] * sym[i] * b[i];
    return s;
}

long RootSystemSpec::pair_scaled(const Weight& w, const Coweight& phi) const {
    IntVec c = root_coords_scaled(w);
    long s = 0;
    for (int i = 0; i < rank; ++i) s += c[i] * phi[i];
    return s;
}

long RootSystemSpec::pair(const Weight& w, const Coweight& phi) const {
    long s = pair_scaled(w, phi);
    if (s % det != 0) throw std::logic_error("non-integral weight/coweight pairing");
    return s / det;
}

long RootSystemSpec::two_rho_pair(const Coweight& phi) const {
    long s = 0;
    for (int i = 0; i < rank; ++i) s += two_rho_root[i] * phi[i];
    return s;
}

long RootSystemSpec::root_pair(const IntVec& alpha, const Coweight& phi) const {
    long s = 0;
    for (int i = 0; i < rank; ++i) s += alpha[i] * phi[i];
    return s;
}

bool RootSystemSpec::is_dominant(const Weight& w) const {
    for (int i = 0; i < rank; ++i)
        if (w[i] < 0) return false;
    return true;
}

int RootSystemSpec::height(const Weight& w) const {
    auto c = root_coords(w);
    if (!c) throw std::logic_error("height of a weight outside the root lattice");
    return static_cast<int>(std::accumulate(c->begin(), c->end(), 0L));
}

RootSystemSpec build_root_system(char type, int rank) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    validate(type, rank);
    RootSystemSpec s;
    s.type = type;
    s.rank = rank;
    s.cartan = cartan_matrix(type, rank);
    s.sym = symmetrizer(type, rank);
    {
        std::vector<std::vector<long>> m(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) m[i].assign(s.cartan[i].begin(), s.cartan[i].end());
        s.det = determinant(m);
        s.adj = adjugate(s.cartan);
    }
    // positive roots by reflection closure in simple-root coordinates
    std::vector<IntVec> roots;
    std::unordered_set<std::string> seen;
    auto key = [](const IntVec& v) {
        std::string k;
        for (long x : v) k += std::to_string(x) + ",";
        return k;
    };
    std::deque<IntVec> queue;
    for (int i = 0; i < rank; ++i) {
        IntVec e(static_cast<std::size_t>(rank), 0);
        e[i] = 1;
        roots.push_back(e);
        seen.insert(key(e));
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            long c = 0;
            for (int j = 0; j < rank; ++j) c += b[j] * s.cartan[i][j];
            IntVec x = b;
            x[i] -= c;
            bool pos = true, nonzero = false;
            for (long v : x) {
                if (v < 0) pos = false;
                if (v) nonzero = true;
            }
            if (pos && nonzero && seen.insert(key(x)).second) {
                roots.push_back(x);
                queue.push_back(x);
            }
        }
    }
    std::stable_sort(roots.begin(), roots.end(), [](const IntVec& a, const IntVec& b) {
        long ha = std::accumulate(a.begin(), a.end(), 0L), hb = std::accumulate(b.begin(), b.end(), 0L);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    s.pos_roots = roots;
    s.two_rho_root.assign(static_cast<std::size_t>(rank), 0);
    int max_height = 0;
    for (const auto& r : roots) {
        Weight w;
        for (int j = 0; j < rank; ++j) {
            long v = 0;
            for (int i = 0; i < rank; ++i) v += r[i] * s.cartan[j][i];
            w[j] = static_cast<int16_t>(v);
        }
        s.pos_roots_w.push_back(w);
        long norm = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) norm += r[i] * r[j] * s.sym[i] * s.cartan[i][j];
        s.root_norm.push_back(static_cast<int>(norm / 2));
        for (int i = 0; i < rank; ++i) s.two_rho_root[i] += r[i];
        max_height = std::max<int>(max_height, static_cast<int>(std::accumulate(r.begin(), r.end(), 0L)));
    }
    for (int i = 0; i < rank; ++i) s.rho[i] = 1;
    // highest root and highest short root: last of their length in height order
    const int short_norm = *std::min_element(s.root_norm.begin(), s.root_norm.end());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        s.theta = s.pos_roots_w[k];
        if (s.root_norm[k] == short_norm) s.theta_s = s.pos_roots_w[k];
    }
    // exponents from the height partition
    std::vector<int> count(static_cast<std::size_t>(max_height + 2), 0);
    for (const auto& r : roots) ++count[static_cast<std::size_t>(std::accumulate(r.begin(), r.end(), 0L))];
    for (int h = 1; h <= max_height; ++h)
        for (int t = 0; t < count[h] - count[h + 1]; ++t) s.exponents.push_back(h);
    std::sort(s.exponents.begin(), s.exponents.end());
    s.weyl_order = 1;
    for (int m : s.exponents) {
        s.degrees.push_back(m + 1);
        s.weyl_order *= (m + 1);
    }
    return s;
}

std::vector<int> Orbit::witness(std::size_t i) const {
    std::vector<int> word;
    auto k = static_cast<int32_t>(i);
    while (parent_[static_cast<std::size_t>(k)] >= 0) {
        word.push_back(gen_[static_cast<std::size_t>(k)]);
        k = parent_[static_cast<std::size_t>(k)];
    }
    return word;
}

Orbit weyl_orbit(const Weight& lambda, const RootSystemSpec& spec, std::size_t cap) {
    if (!spec.is_dominant(lambda)) throw std::invalid_argument("weyl_orbit needs a dominant weight");
    Orbit o;
    std::unordered_map<Weight, int32_t, CoordsHash> index;
    o.points_.push_back(lambda);
    o.parent_.push_back(-1);
    o.gen_.push_back(-1);
    index.emplace(lambda, 0);
    for (std::size_t k = 0; k < o.points_.size(); ++k) {
        for (int i = 0; i < spec.rank; ++i) {
            if (o.points_[k][i] <= 0) continue;
            Weight w = spec.reflect(o.points_[k], i);
            if (index.count(w)) continue;
            if (o.points_.size() >= cap) throw OrbitCapExceeded("orbit of " + format_weight(lambda, spec) + " exceeds cap");
            index.emplace(w, static_cast<int32_t>(o.points_.size()));
            o.points_.push_back(w);
            o.parent_.push_back(static_cast<int32_t>(k));
            o.gen_.push_back(static_cast<int8_t>(i));
        }
    }
    return o;
}

Weight apply_word(const std::vector<int>& word, Weight w, const RootSystemSpec& spec) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = spec.reflect(w, *it);
    return w;
}

Coweight apply_word(const std::vector<int>& word, Coweight c, const RootSystemSpec& spec) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) c = spec.reflect(c, *it);
    return c;
}

namespace {

std::vector<Coweight> coweight_orbit_under(const Coweight& omega, const std::vector<int>& gens, const RootSystemSpec& spec) {
    std::vector<Coweight> pts{omega};
    std::unordered_set<Coweight, CoordsHash> seen{omega};
    for (std::size_t k = 0; k < pts.size(); ++k)
        for (int i : gens) {
            Coweight c = spec.reflect(pts[k], i);
            if (seen.insert(c).second) pts.push_back(c);
        }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

std::vector<Coweight> stabilizer_orbit(const Weight& lambda, const Coweight& omega, const RootSystemSpec& spec) {
    std::vector<int> gens;
    for (int i = 0; i < spec.rank; ++i)
        if (lambda[i] == 0) gens.push_back(i);
    return coweight_orbit_under(omega, gens, spec);
}

std::vector<Coweight> coweight_orbit(const Coweight& omega, const RootSystemSpec& spec) {
    std::vector<int> gens(static_cast<std::size_t>(spec.rank));
    std::iota(gens.begin(), gens.end(), 0);
    return coweight_orbit_under(omega, gens, spec);
}

std::optional<Reduced> dominant_reduce(const Weight& mu, const RootSystemSpec& spec) {
    Weight v = mu + spec.rho;
    int sign = 1;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < spec.rank; ++i) {
            if (v[i] == 0) return std::nullopt;
            if (v[i] < 0 && neg < 0) neg = i;
        }
        if (neg < 0) break;
        v = spec.reflect(v, neg);
        sign = -sign;
    }
    return Reduced{v - spec.rho, sign};
}

bool dominance_leq(const Weight& mu, const Weight& lambda, const RootSystemSpec& spec) {
    auto c = spec.root_coords(lambda - mu);
    if (!c) return false;
    for (long x : *c)
        if (x < 0) return false;
    return true;
}

bool is_small(const Weight& lambda, const RootSystemSpec& spec) {
    if (!spec.is_dominant(lambda) || !spec.in_root_lattice(lambda)) return false;
    // 2 alpha lies in the convex hull of W lambda iff its dominant conjugate (2 theta or 2 theta_s) is <= lambda
    return !dominance_leq(2 * spec.theta, lambda, spec) && !dominance_leq(2 * spec.theta_s, lambda, spec);
}

std::vector<Weight> dominant_below(const Weight& top, const RootSystemSpec& spec) {
    std::vector<Weight> out{top};
    std::unordered_set<Weight, CoordsHash> seen{top};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& a : spec.pos_roots_w) {
            Weight w = out[k] - a;
            if (spec.is_dominant(w) && seen.insert(w).second) out.push_back(w);
        }
    const bool lattice = spec.in_root_lattice(top);
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        long ha = 0, hb = 0;
        IntVec ca = spec.root_coords_scaled(a), cb = spec.root_coords_scaled(b);
        for (long x : ca) ha += x;
        for (long x : cb) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    (void)lattice;
    return out;
}

std::vector<Weight> enumerate_small(const RootSystemSpec& spec) {
    // covers in the dominant poset differ by positive roots and smallness is downward closed
    std::vector<Weight> out{Weight{}};
    std::unordered_set<Weight, CoordsHash> seen{Weight{}};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const auto& a : spec.pos_roots_w) {
            Weight w = out[k] + a;
            if (spec.is_dominant(w) && is_small(w, spec) && seen.insert(w).second) out.push_back(w);
        }
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        int ha = spec.height(a), hb = spec.height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

std::vector<int> minuscule_coweights(const RootSystemSpec& spec) {
    std::vector<int> out;
    for (int i = 0; i < spec.rank; ++i) {
        bool ok = true;
        for (const auto& r : spec.pos_roots)
            if (r[i] > 1) ok = false;
        if (ok) out.push_back(i);
    }
    return out;
}

bool is_minuscule(const Coweight& c, const RootSystemSpec& spec) {
    for (const auto& r : spec.pos_roots) {
        long v = spec.root_pair(r, c);
        if (v < -1 || v > 1) return false;
    }
    return true;
}

Coweight quasi_minuscule_coweight(const RootSystemSpec& spec) {
    Coweight c;
    const int top = spec.max_sym();
    for (int j = 0; j < spec.rank; ++j) {
        int v = spec.theta[j] * spec.sym[j];
        if (v % top != 0) throw std::logic_error("theta coroot is not integral");
        c[j] = static_cast<int16_t>(v / top);
    }
    return c;
}

std::string format_weight(const Weight& w, const RootSystemSpec& spec) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < spec.rank; ++i) {
        int c = w[i];
        if (c == 0) continue;
        if (c < 0) os << (first ? "-" : "-");
        else if (!first) os << "+";
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << "w" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

Weight parse_weight(const std::string& text, const RootSystemSpec& spec) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    Weight w;
    if (s == "0") return w;
    if (s == "theta") return spec.theta;
    if (s == "theta_s") return spec.theta_s;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse weight: " + text); };
    if (s.empty()) fail();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        int coef = 1;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stoi(s.substr(i, j - i));
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (i >= s.size() || s[i] != 'w') fail();
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail();
        int idx = std::stoi(s.substr(i, j - i));
        if (idx < 1 || idx > spec.rank) fail();
        w[idx - 1] = static_cast<int16_t>(w[idx - 1] + sign * coef);
        i = j;
    }
    return w;
}

std::vector<int> weight_vector(const Weight& w, const RootSystemSpec& spec) {
    return std::vector<int>(w.v.begin(), w.v.begin() + spec.rank);
}

Weight weight_from_vector(const std::vector<int>& v, const RootSystemSpec& spec) {
    if (static_cast<int>(v.size()) != spec.rank) throw std::invalid_argument("weight vector has wrong length");
    Weight w;
    for (int i = 0; i < spec.rank; ++i) w[i] = static_cast<int16_t>(v[i]);
    return w;
}

Ambient to_ambient(const Weight& w, const RootSystemSpec& spec) {
    const int n = spec.rank;
    Ambient a;
    switch (spec.type) {
    case 'A': {
        // scale n+1; omega_i = e_1 + ... + e_i - i/(n+1) * (1,...,1)
        a.scale = n + 1;
        a.coords.assign(static_cast<std::size_t>(n + 1), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= n; ++j) a.coords[j] += static_cast<long>(w[i]) * ((j <= i ? (n + 1) : 0) - (i + 1));
        }
        break;
    }
    case 'B':
    case 'C':
    case 'D': {
        a.scale = 2;
        a.coords.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            const long c = w[i];
            if (spec.type == 'B' && i == n - 1) {
                for (int j = 0; j < n; ++j) a.coords[j] += c;
            } else if (spec.type == 'D' && i == n - 2) {
                for (int j = 0; j < n; ++j) a.coords[j] += (j == n - 1) ? -c : c;
            } else if (spec.type == 'D' && i == n - 1) {
                for (int j = 0; j < n; ++j) a.coords[j] += c;
            } else {
                for (int j = 0; j <= i; ++j) a.coords[j] += 2 * c;
            }
        }
        break;
    }
    default:
        throw std::invalid_argument("ambient coordinates are only provided for classical types");
    }
    return a;
}

Weight from_ambient(const std::vector<long>& x, long scale, const RootSystemSpec& spec) {
    const int n = spec.rank;
    Weight w;
    auto put = [&](int i, long num) {
        if (num % scale != 0) throw std::invalid_argument("ambient vector is not a weight");
        w[i] = static_cast<int16_t>(num / scale);
    };
    switch (spec.type) {
    case 'A':
        if (static_cast<int>(x.size()) != n + 1) throw std::invalid_argument("wrong ambient length");
        for (int i = 0; i < n; ++i) put(i, x[i] - x[i + 1]);
        break;
    case 'B':
    case 'C':
    case 'D':
        if (static_cast<int>(x.size()) != n) throw std::invalid_argument("wrong ambient length");
        for (int i = 0; i + 1 < n; ++i) put(i, x[i] - x[i + 1]);
        if (spec.type == 'B') put(n - 1, 2 * x[n - 1]);
        else if (spec.type == 'C') put(n - 1, x[n - 1]);
        else put(n - 1, x[n - 2] + x[n - 1]);
        break;
    default:
        throw std::invalid_argument("ambient coordinates are only provided for classical types");
    }
    return w;
}

Weight from_eps(const std::vector<int>& eps, const RootSystemSpec& spec) {
    return from_ambient(std::vector<long>(eps.begin(), eps.end()), 1, spec);
}

Weight e6_involution(const Weight& w) {
    Weight r = w;
    r[0] = w[5];
    r[5] = w[0];
    r[2] = w[4];
    r[4] = w[2];
    return r;
}

std::size_t subsystem_weyl_order(const RootSystemSpec& spec, const std::vector<int>& simple_subset) {
    // BFS on the orbit of a regular element of the parabolic subgroup
    Weight seed;
    for (int i = 0; i < spec.rank; ++i) seed[i] = 1;
    std::vector<Weight> pts{seed};
    std::unordered_set<Weight, CoordsHash> seen{seed};
    for (std::size_t k = 0; k < pts.size(); ++k)
        for (int i : simple_subset) {
            Weight w = spec.reflect(pts[k], i);
            if (seen.insert(w).second) pts.push_back(w);
        }
    return pts.size();
}

std::size_t stabilizer_order_degrees_product(const Weight& lambda, const RootSystemSpec& spec) {
    std::vector<int> sub;
    for (int i = 0; i < spec.rank; ++i)
        if (lambda[i] == 0) sub.push_back(i);
    return subsystem_weyl_order(spec, sub);
}

}  // namespace reeder
