#include "reeder/weyl_group.hpp"

#include "reeder/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace reeder {

namespace {

using Mat = std::vector<long>;

Mat to_mat(const int16_t* m, int n) { return Mat(m, m + n * n); }

Mat mul(const Mat& a, const Mat& b, int n) {
    Mat c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const long x = a[i * n + k];
            if (x)
                for (int j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
        }
    return c;
}

bool is_identity(const Mat& a, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i * n + j] != (i == j)) return false;
    return true;
}

// Faddeev-LeVerrier over the integers
CharPoly char_poly(const Mat& a, int n) {
    CharPoly c(static_cast<std::size_t>(n + 1), 0);
    c[n] = 1;
    Mat m(static_cast<std::size_t>(n * n), 0);
    for (int k = 1; k <= n; ++k) {
        Mat am = mul(a, m, n);
        for (int i = 0; i < n; ++i) am[i * n + i] += c[n - k + 1];
        m = am;
        Mat t = mul(a, m, n);
        long tr = 0;
        for (int i = 0; i < n; ++i) tr += t[i * n + i];
        if (tr % k != 0) throw std::logic_error("characteristic polynomial is not integral");
        c[n - k] = -tr / k;
    }
    return c;
}

// e_k = coefficient of y^k in det(1 + y w)
long elementary(const CharPoly& c, int k) {
    const int n = static_cast<int>(c.size()) - 1;
    return (k % 2 ? -1 : 1) * c[n - k];
}

// coefficients of 1 / det(1 - q w) up to q^top
std::vector<Int> inverse_series(const CharPoly& c, int top) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Int> s(static_cast<std::size_t>(top + 1));
    s[0] = 1;
    for (int m = 1; m <= top; ++m) {
        Int acc = 0;
        for (int j = 1; j <= std::min(m, n); ++j) acc -= Int(c[n - j]) * s[m - j];
        s[m] = acc;
    }
    return s;
}

struct UnionFind {
    std::vector<std::size_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::size_t WeylGroup::find(const Weight& image_of_rho) const {
    auto it = index_.find(image_of_rho);
    if (it == index_.end()) throw std::out_of_range("no Weyl group element sends rho there");
    return it->second;
}

Weight WeylGroup::apply(std::size_t i, const Weight& w) const {
    const int16_t* m = matrix(i);
    Weight r;
    for (int j = 0; j < rank_; ++j) {
        int s = 0;
        for (int k = 0; k < rank_; ++k) s += m[j * rank_ + k] * w[k];
        r[j] = static_cast<int16_t>(s);
    }
    return r;
}

WeylGroup build_weyl_group(const RootSystemSpec& spec, std::size_t cap) {
    if (spec.weyl_order > Int(static_cast<unsigned long>(cap)))
        throw OrbitCapExceeded("|W(" + spec.name() + ")| = " + spec.weyl_order.get_str() + " exceeds the group cap");
    const int n = spec.rank;
    const std::size_t nn = static_cast<std::size_t>(n * n);
    WeylGroup g;
    g.rank_ = n;
    g.mats_.assign(nn, 0);
    for (int i = 0; i < n; ++i) g.mats_[i * n + i] = 1;
    g.lengths_.push_back(0);
    g.simple_.assign(static_cast<std::size_t>(n), 0);

    auto& index = g.index_;
    index.emplace(spec.rho, 0);
    std::vector<int16_t> cur(nn), next(nn);
    auto key = [&](const std::vector<int16_t>& m) {
        Weight r;
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += m[j * n + k] * spec.rho[k];
            r[j] = static_cast<int16_t>(s);
        }
        return r;
    };
    // s_i M: row j loses A[j][i] times row i
    auto left = [&](const std::vector<int16_t>& m, int i, std::vector<int16_t>& out) {
        out = m;
        for (int j = 0; j < n; ++j) {
            const int a = spec.cartan[j][i];
            if (j == i || a == 0) continue;
            for (int k = 0; k < n; ++k) out[j * n + k] = static_cast<int16_t>(out[j * n + k] - a * m[i * n + k]);
        }
        for (int k = 0; k < n; ++k) out[i * n + k] = static_cast<int16_t>(-m[i * n + k]);
    };
    for (std::size_t at = 0; at < g.lengths_.size(); ++at) {
        std::copy(g.mats_.begin() + static_cast<long>(at * nn), g.mats_.begin() + static_cast<long>((at + 1) * nn), cur.begin());
        for (int i = 0; i < n; ++i) {
            left(cur, i, next);
            auto [it, fresh] = index.emplace(key(next), g.lengths_.size());
            if (!fresh) continue;
            g.mats_.insert(g.mats_.end(), next.begin(), next.end());
            g.lengths_.push_back(g.lengths_[at] + 1);
            if (at == 0) g.simple_[static_cast<std::size_t>(i)] = it->second;
        }
    }
    if (Int(static_cast<unsigned long>(g.order())) != spec.weyl_order) throw std::logic_error("Weyl group enumeration is incomplete");

    UnionFind uf(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::copy(g.mats_.begin() + static_cast<long>(x * nn), g.mats_.begin() + static_cast<long>((x + 1) * nn), cur.begin());
        for (int i = 0; i < n; ++i) {
            left(cur, i, next);
            // (N s_i): column i becomes col_i - sum_k A[k][i] col_k
            for (int r = 0; r < n; ++r) {
                int s = next[r * n + i];
                for (int k = 0; k < n; ++k) s -= next[r * n + k] * spec.cartan[k][i];
                next[r * n + i] = static_cast<int16_t>(s);
            }
            uf.unite(x, index.at(key(next)));
        }
    }
    std::map<std::size_t, std::size_t> root_to_class;
    g.class_of_.resize(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        const std::size_t r = uf.find(x);
        auto [it, fresh] = root_to_class.emplace(r, g.classes_.size());
        if (fresh) g.classes_.push_back({x, 0, {}, 1, false, false});
        g.class_of_[x] = it->second;
        ++g.classes_[it->second].size;
    }
    const int ms = spec.max_sym();
    for (auto& c : g.classes_) {
        const Mat m = to_mat(g.matrix(c.rep), n);
        c.charpoly = char_poly(m, n);
        Mat p = m;
        while (!is_identity(p, n)) {
            p = mul(p, m, n);
            ++c.element_order;
        }
        c.reflection = c.element_order == 2 && elementary(c.charpoly, 1) == n - 2;
    }
    for (int i = 0; i < n; ++i)
        if (spec.sym[static_cast<std::size_t>(i)] == ms) g.classes_[g.class_of_[g.simple_[static_cast<std::size_t>(i)]]].long_reflection = true;
    return g;
}

Int inner_product(const WeylGroup& g, const ClassFunction& a, const ClassFunction& b) {
    Int s = 0;
    for (std::size_t c = 0; c < g.classes().size(); ++c)
        s += Int(static_cast<unsigned long>(g.classes()[c].size)) * Int(a[c]) * Int(b[c]);
    Int order(static_cast<unsigned long>(g.order()));
    if (s % order != 0) throw CharacterTableError("inner product is not an integer");
    return s / order;
}

std::size_t CharacterTable::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].label == label) return i;
    throw CharacterTableError("no irreducible labelled " + label);
}

std::vector<ClassData> class_data(const WeylGroup& g, const ClassFunction& chi) {
    std::vector<ClassData> out;
    for (std::size_t c = 0; c < g.classes().size(); ++c)
        out.push_back({Int(static_cast<unsigned long>(g.classes()[c].size)), chi[c], g.classes()[c].charpoly});
    return out;
}

BiPoly molien_pw(const std::vector<ClassData>& classes, const std::vector<int>& degrees, const Int& order) {
    if (classes.empty()) throw std::invalid_argument("no class data");
    const int n = static_cast<int>(classes.front().charpoly.size()) - 1;
    Int total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order) throw std::invalid_argument("class sizes do not sum to the group order");
    int top = 0, maxd = 0;
    for (int d : degrees) {
        top += d - 1;
        maxd = std::max(maxd, d);
    }
    const int reach = top + maxd;
    std::vector<std::vector<Int>> acc(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(reach + 1)));
    for (const auto& c : classes) {
        if (c.chi == 0) continue;
        const auto s = inverse_series(c.charpoly, reach);
        for (int k = 0; k <= n; ++k) {
            const long e = elementary(c.charpoly, k);
            if (e == 0) continue;
            const Int w = c.size * Int(c.chi) * Int(e);
            for (int m = 0; m <= reach; ++m) acc[k][m] += w * s[m];
        }
    }
    LaurentPoly norm(1);
    for (int d : degrees) norm *= one_minus(d);
    BiPoly out(Vars::QY);
    for (int k = 0; k <= n; ++k) {
        LaurentPoly series;
        for (int m = 0; m <= reach; ++m) {
            if (acc[k][m] % order != 0) throw NonDivisible("Molien sum is not divisible by |W|");
            series.add_term(m, acc[k][m] / order);
        }
        LaurentPoly p = series * norm;
        for (const auto& [e, c] : p.terms()) {
            if (e > reach) continue;
            if (e > top) throw NonDivisible("Molien series does not terminate at degree " + std::to_string(top));
            out.add_term(e, k, c);
        }
    }
    return out;
}

BiPoly molien_pw(const std::vector<ClassData>& classes, const RootSystemSpec& spec) {
    return molien_pw(classes, spec.degrees, spec.weyl_order);
}

CharacterTable character_table(const WeylGroup& g, const RootSystemSpec& spec) {
    const std::size_t r = g.classes().size();
    const int n = g.rank();
    const std::size_t order = g.order();

    // inverses, exact since det = +-1
    std::vector<Mat> inv(order);
    for (std::size_t x = 0; x < order; ++x) {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = g.matrix(x)[i * n + j];
        Eigen::MatrixXd mi = m.inverse();
        Mat v(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = std::lround(mi(i, j));
        if (!is_identity(mul(to_mat(g.matrix(x), n), v, n), n)) throw CharacterTableError("inverse is not integral");
        inv[x] = std::move(v);
    }
    // a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}
    std::vector<long> a(r * r * r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const Weight zr = g.apply(g.classes()[k].rep, spec.rho);
        for (std::size_t x = 0; x < order; ++x) {
            Weight y;
            for (int i = 0; i < n; ++i) {
                long s = 0;
                for (int j = 0; j < n; ++j) s += inv[x][i * n + j] * zr[j];
                y[i] = static_cast<int16_t>(s);
            }
            ++a[(g.class_of(x) * r + g.class_of(g.find(y))) * r + k];
        }
    }
    // omega_chi(C_k) = |C_k| chi(z_k) / chi(1) is a common right eigenvector of M_i[j][k] = a[i][j][k]
    std::mt19937 rng(20240601);
    std::vector<std::vector<Int>> omegas;
    for (int attempt = 0; attempt < 20 && omegas.empty(); ++attempt) {
        std::vector<long> c(r);
        for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
        Eigen::MatrixXd md = Eigen::MatrixXd::Zero(static_cast<long>(r), static_cast<long>(r));
        std::vector<std::vector<Int>> mz(r, std::vector<Int>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k) mz[j][k] += Int(c[i] * a[(i * r + j) * r + k]);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) md(static_cast<long>(j), static_cast<long>(k)) = mz[j][k].get_d();
        Eigen::EigenSolver<Eigen::MatrixXd> es(md, false);
        std::vector<long> ev;
        for (long i = 0; i < static_cast<long>(r); ++i) {
            const auto z = es.eigenvalues()(i);
            if (std::abs(z.imag()) > 1e-6) break;
            ev.push_back(std::lround(z.real()));
        }
        std::sort(ev.begin(), ev.end());
        if (ev.size() != r || std::adjacent_find(ev.begin(), ev.end()) != ev.end()) continue;
        std::vector<std::vector<Int>> found;
        for (long lambda : ev) {
            // exact kernel of mz - lambda
            std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(r));
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k) m[j][k] = mpq_class(mz[j][k] - (j == k ? Int(lambda) : Int(0)));
            std::vector<long> pivot_col;
            std::size_t row = 0;
            for (std::size_t col = 0; col < r && row < r; ++col) {
                std::size_t p = row;
                while (p < r && m[p][col] == 0) ++p;
                if (p == r) continue;
                std::swap(m[p], m[row]);
                const mpq_class piv = m[row][col];
                for (auto& e : m[row]) e /= piv;
                for (std::size_t j = 0; j < r; ++j)
                    if (j != row && m[j][col] != 0) {
                        const mpq_class f = m[j][col];
                        for (std::size_t k = 0; k < r; ++k) m[j][k] -= f * m[row][k];
                    }
                pivot_col.push_back(static_cast<long>(col));
                ++row;
            }
            if (pivot_col.size() != r - 1) break;
            std::size_t free = 0;
            while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long>(free)) != pivot_col.end()) ++free;
            std::vector<mpq_class> v(r, 0);
            v[free] = 1;
            for (std::size_t t = 0; t < pivot_col.size(); ++t) v[static_cast<std::size_t>(pivot_col[t])] = -m[t][free];
            if (v[0] == 0) break;
            const mpq_class s = v[0];
            std::vector<Int> w(r);
            bool integral = true;
            for (std::size_t k = 0; k < r; ++k) {
                v[k] /= s;
                v[k].canonicalize();
                if (v[k].get_den() != 1) integral = false;
                w[k] = v[k].get_num();
            }
            if (!integral) break;
            found.push_back(w);
        }
        if (found.size() == r) omegas = std::move(found);
    }
    if (omegas.empty()) throw CharacterTableError("class matrices did not split into one-dimensional eigenspaces");

    std::vector<ClassFunction> irr;
    for (const auto& w : omegas) {
        // chi(1)^2 sum_k omega_k^2 / |C_k| = |W|
        mpq_class s = 0;
        for (std::size_t k = 0; k < r; ++k) s += mpq_class(w[k] * w[k], Int(static_cast<unsigned long>(g.classes()[k].size)));
        mpq_class d2 = mpq_class(Int(static_cast<unsigned long>(order))) / s;
        d2.canonicalize();
        if (d2.get_den() != 1 || !mpz_perfect_square_p(d2.get_num().get_mpz_t())) throw CharacterTableError("degree is not an integer");
        const Int d = sqrt(d2.get_num());
        ClassFunction chi(r);
        for (std::size_t k = 0; k < r; ++k) {
            const Int size(static_cast<unsigned long>(g.classes()[k].size));
            if ((d * w[k]) % size != 0) throw CharacterTableError("character value is not an integer");
            chi[k] = Int(d * w[k] / size).get_si();
        }
        irr.push_back(chi);
    }
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
            if (inner_product(g, irr[x], irr[y]) != (x == y ? 1 : 0)) throw CharacterTableError("row orthogonality fails");
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            long col = 0;
            for (const auto& chi : irr) col += chi[x] * chi[y];
            const long want = x == y ? static_cast<long>(order / g.classes()[x].size) : 0;
            if (col != want) throw CharacterTableError("column orthogonality fails");
        }

    CharacterTable table;
    for (auto& chi : irr) {
        Irreducible x;
        x.values = chi;
        x.degree = chi[0];
        BiPoly m = molien_pw(class_data(g, chi), spec);
        x.fake_degree = m.second_coeff(0);
        x.b = x.fake_degree.min_exp();
        table.irreducibles.push_back(std::move(x));
    }
    std::sort(table.irreducibles.begin(), table.irreducibles.end(), [](const Irreducible& a, const Irreducible& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.b != b.b) return a.b < b.b;
        return a.values > b.values;
    });
    // coinciding (d, b): ' marks the larger value on long reflections
    std::size_t long_class = r;
    for (std::size_t c = 0; c < r; ++c)
        if (g.classes()[c].long_reflection) long_class = c;
    auto& v = table.irreducibles;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string base = "phi_{" + std::to_string(v[i].degree) + "," + std::to_string(v[i].b) + "}";
        std::vector<std::size_t> same;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j].degree == v[i].degree && v[j].b == v[i].b) same.push_back(j);
        if (same.size() == 1) {
            v[i].label = base;
            continue;
        }
        const std::size_t other = same[0] == i ? same[1] : same[0];
        if (same.size() == 2 && long_class != r && v[i].values[long_class] != v[other].values[long_class]) {
            const bool prime = v[i].values[long_class] > v[other].values[long_class];
            v[i].label = "phi" + std::string(prime ? "'" : "''") + base.substr(3);
        } else {
            const auto pos = std::find(same.begin(), same.end(), i) - same.begin();
            v[i].label = base + "[" + std::to_string(pos + 1) + "]";
        }
    }
    return table;
}

LaurentPoly kostant_zero_weight(const Weight& lambda, const RootSystemSpec& spec) {
    auto rc = spec.root_coords(lambda);
    if (!rc) return LaurentPoly();
    const int n = spec.rank;
    const IntVec& b = *rc;
    for (long x : b)
        if (x < 0) return LaurentPoly();
    std::vector<std::size_t> stride(static_cast<std::size_t>(n));
    std::size_t cells = 1;
    for (int i = 0; i < n; ++i) {
        stride[i] = cells;
        cells *= static_cast<std::size_t>(b[i] + 1);
    }
    std::vector<LaurentPoly> p(cells);
    p[0] = LaurentPoly(1);
    const LaurentPoly q = LaurentPoly::q();
    std::vector<long> gamma(static_cast<std::size_t>(n));
    for (const auto& a : spec.pos_roots) {
        bool fits = true;
        std::size_t off = 0;
        for (int i = 0; i < n; ++i) {
            if (a[i] > b[i]) fits = false;
            off += static_cast<std::size_t>(a[i]) * stride[i];
        }
        if (!fits) continue;
        for (std::size_t idx = 0; idx < cells; ++idx) {
            std::size_t t = idx;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                gamma[i] = static_cast<long>(t % static_cast<std::size_t>(b[i] + 1));
                t /= static_cast<std::size_t>(b[i] + 1);
                if (gamma[i] < a[i]) ok = false;
            }
            if (ok && !p[idx - off].is_zero()) p[idx] += q * p[idx - off];
        }
    }
    LaurentPoly k;
    Orbit o = weyl_orbit(lambda + spec.rho, spec);
    for (std::size_t i = 0; i < o.size(); ++i) {
        auto c = spec.root_coords(o[i] - spec.rho);
        if (!c) continue;
        std::size_t idx = 0;
        bool inside = true;
        for (int j = 0; j < n; ++j) {
            if ((*c)[j] < 0 || (*c)[j] > b[j]) inside = false;
            idx += static_cast<std::size_t>(std::max(0L, (*c)[j])) * stride[j];
        }
        if (!inside) continue;
        if (o.witness(i).size() % 2) k -= p[idx];
        else k += p[idx];
    }
    return k;
}

long zero_weight_trace(const Weight& lambda, const std::vector<Weight>& roots, const RootSystemSpec& spec) {
    const auto mult = freudenthal_dominant(lambda, spec);
    auto m = [&](const Weight& w) -> long {
        auto it = mult.find(dominant_conjugate(w, spec));
        return it == mult.end() ? 0 : it->second;
    };
    const std::size_t r = roots.size();
    std::vector<int> top(r);
    for (std::size_t i = 0; i < r; ++i)
        while (m((top[i] + 1) * roots[i]) > 0) ++top[i];
    // n(j) counts the factors (2 j_1 + 1) x ... x (2 j_r + 1) of the sl2^r-module on the lattice spanned by the roots
    long tr = 0;
    std::vector<int> j(r, 0);
    for (;;) {
        long nj = 0;
        for (unsigned eps = 0; eps < (1u << r); ++eps) {
            Weight w;
            for (std::size_t i = 0; i < r; ++i) w += (j[i] + static_cast<int>((eps >> i) & 1u)) * roots[i];
            nj += (__builtin_popcount(eps) % 2 ? -1 : 1) * m(w);
        }
        int parity = 0;
        for (int x : j) parity += x;
        tr += (parity % 2 ? -1 : 1) * nj;
        std::size_t i = 0;
        while (i < r && j[i] == top[i]) j[i++] = 0;
        if (i == r) break;
        ++j[i];
    }
    return tr;
}

long zero_weight_reflection_trace(const Weight& lambda, const IntVec& alpha, const RootSystemSpec& spec) {
    Weight a;
    for (int j = 0; j < spec.rank; ++j) a += static_cast<int>(alpha[j]) * spec.simple_root(j);
    return zero_weight_trace(lambda, {a}, spec);
}

std::vector<std::pair<std::size_t, std::vector<Weight>>> strongly_orthogonal_classes(const RootSystemSpec& spec, const WeylGroup& g) {
    std::vector<std::pair<std::size_t, std::vector<Weight>>> out;
    std::vector<bool> seen(g.classes().size(), false);
    std::unordered_map<Weight, int, CoordsHash> is_root;
    for (const auto& a : spec.pos_roots_w) {
        is_root[a] = 1;
        is_root[-a] = 1;
    }
    const auto& pr = spec.pos_roots_w;
    auto reflect = [&](const Weight& mu, const Weight& b) {
        const long c = 2 * spec.inner_scaled(mu, b) / spec.inner_scaled(b, b);
        return mu - static_cast<int>(c) * b;
    };
    std::vector<Weight> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!chosen.empty()) {
            Weight img = spec.rho;
            for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) img = reflect(img, *it);
            const std::size_t c = g.class_of(g.find(img));
            if (!seen[c]) {
                seen[c] = true;
                out.emplace_back(c, chosen);
            }
        }
        for (std::size_t k = from; k < pr.size(); ++k) {
            bool ok = true;
            for (const auto& b : chosen)
                if (spec.inner_scaled(b, pr[k]) != 0 || is_root.count(b + pr[k])) ok = false;
            if (!ok) continue;
            chosen.push_back(pr[k]);
            rec(k + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

ZeroWeightDecomposition zero_weight_character(const Weight& lambda, const RootSystemSpec& spec, const WeylGroup& g,
                                              const CharacterTable& table) {
    const LaurentPoly target = kostant_zero_weight(lambda, spec);
    std::vector<std::pair<std::size_t, long>> traces;
    for (const auto& [c, roots] : strongly_orthogonal_classes(spec, g)) traces.emplace_back(c, zero_weight_trace(lambda, roots, spec));
    const auto& irr = table.irreducibles;
    std::vector<std::vector<int>> solutions;
    std::vector<int> mult(irr.size(), 0);
    std::function<void(std::size_t, const LaurentPoly&)> search = [&](std::size_t i, const LaurentPoly& rest) {
        if (rest.is_zero()) {
            for (const auto& [c, tr] : traces) {
                long s = 0;
                for (std::size_t j = 0; j < irr.size(); ++j) s += mult[j] * irr[j].values[c];
                if (s != tr) return;
            }
            solutions.push_back(mult);
            return;
        }
        if (i == irr.size()) return;
        LaurentPoly r = rest;
        int k = 0;
        for (; r.nonnegative(); ++k) {
            mult[i] = k;
            search(i + 1, r);
            r -= irr[i].fake_degree;
        }
        mult[i] = 0;
    };
    if (!target.nonnegative()) throw CharacterTableError("graded zero weight multiplicity has a negative coefficient");
    search(0, target);
    if (solutions.size() != 1)
        throw CharacterTableError(std::to_string(solutions.size()) + " candidate characters for V^0 of " + format_weight(lambda, spec));
    ZeroWeightDecomposition d;
    d.character.assign(g.classes().size(), 0);
    for (std::size_t j = 0; j < irr.size(); ++j) {
        const int m = solutions.front()[j];
        if (!m) continue;
        d.parts.emplace_back(j, m);
        for (std::size_t c = 0; c < d.character.size(); ++c) d.character[c] += m * irr[j].values[c];
    }
    std::stable_sort(d.parts.begin(), d.parts.end(), [&](const auto& a, const auto& b) { return irr[a.first].b < irr[b.first].b; });
    for (const auto& [j, m] : d.parts)
        for (int t = 0; t < m; ++t) d.labels.push_back(irr[j].label);
    return d;
}

}  // namespace reeder
