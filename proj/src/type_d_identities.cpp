#include "reeder/type_d.hpp"

#include "reeder/stembridge.hpp"
#include "reeder/weyl_side.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

namespace reeder::typed {

namespace {

LaurentPoly q(int e) { return LaurentPoly::q(e); }
long sgn(int k) { return k % 2 == 0 ? 1 : -1; }
LaurentPoly qm1(int e) { return q(e) - LaurentPoly(1); }  // q^e - 1

template <class Key, class Value>
class Memo {
public:
    Value get(const Key& key, const std::function<Value()>& make) {
        {
            std::lock_guard<std::mutex> lock(m_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        Value v = make();
        std::lock_guard<std::mutex> lock(m_);
        values_.emplace(key, v);
        return v;
    }

private:
    std::mutex m_;
    std::map<Key, Value> values_;
};

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

Partition row(int k) { return k > 0 ? Partition{k} : Partition{}; }

std::string key_name(int key) { return key >= 0 ? "C_" + std::to_string(key) : "C_{2|" + std::to_string(-1 - key) + "}"; }

std::string diff_text(const ReducedRelation& a, const ReducedRelation& b) {
    std::ostringstream out;
    std::map<int, bool> keys;
    for (const auto& kv : a) keys[kv.first] = true;
    for (const auto& kv : b) keys[kv.first] = true;
    for (const auto& kv : keys) {
        auto ia = a.find(kv.first);
        auto ib = b.find(kv.first);
        LaurentPoly va = ia == a.end() ? LaurentPoly() : ia->second;
        LaurentPoly vb = ib == b.end() ? LaurentPoly() : ib->second;
        if (va != vb) out << key_name(kv.first) << ": " << (va - vb).str() << "; ";
    }
    return out.str();
}

ReducedRelation pruned(ReducedRelation m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
}

void add_scaled(ReducedRelation& into, const ReducedRelation& rel, long c) {
    for (const auto& [k, v] : rel) into[k] += v * LaurentPoly(c);
}

std::vector<int> eps_omega2k(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 2 * k; ++i) e[static_cast<std::size_t>(i)] = 1;
    return e;
}

std::vector<int> eps_omega1(int k, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = 2;
    for (int i = 1; i <= 2 * k; ++i) e[static_cast<std::size_t>(i)] = 1;
    return e;
}

ReducedRelation extract(const std::vector<int>& source, int n) {
    const auto spec = build_root_system('D', n);
    std::map<Weight, int> keys;
    for (int h = 0; 2 * h <= n; ++h) keys[from_eps(eps_omega2k(h, n), spec)] = h;
    for (int h = 0; 2 * h + 1 <= n; ++h) keys[from_eps(eps_omega1(h, n), spec)] = -1 - h;
    if (n % 2 == 0) {
        auto e = eps_omega2k(n / 2, n);
        e.back() = -1;
        keys[from_eps(e, spec)] = n / 2;  // 2 omega_{n-1} merged with 2 omega_n
    }
    if (n % 2 == 1) {
        auto e = eps_omega1((n - 1) / 2, n);
        e.back() = -1;
        keys[from_eps(e, spec)] = -1 - (n - 1) / 2;
    }
    const Relation rel = minuscule_relation(from_eps(source, spec), spec.fundamental_coweight(0), spec);
    ReducedRelation out;
    for (const auto& [mu, c] : rel.terms) {
        auto it = keys.find(mu);
        if (it == keys.end()) throw DomainError("relation leaves the omega_{2h} / omega_1 + omega_{2h+1} families");
        out[it->second] += c;
    }
    return pruned(out);
}

}  // namespace

LaurentPoly r(int n) { return (q(1) + LaurentPoly(1)) * (q(2 * n - 3) + q(-2 * n + 3)); }

LaurentPoly s(int n) { return q(-2 * n) - q(2 * n + 2); }

LaurentPoly b(int k, int n) {
    if (n == 2 * k) return exact_div(qm1(4 * k), q(2 * k - 1) * qm1(1));
    return exact_div(qm1(2 * n) * (q(2 * (n - 2 * k)) + LaurentPoly(1)), q(2 * (n - k) - 1) * qm1(1));
}

LaurentPoly d(int k, int n) { return s(k) + s(n - k - 1); }

LaurentPoly d_closed(int k, int n) {
    return q(2 * k - 2 * (n - 1)) * one_minus(2 * n) * one_plus(1, 2 * (n - 2 * k - 1));
}

Int omega0_count(int k, int n) {
    require(k >= 0 && 2 * k <= n, "|Omega_0^{k,n}| needs 0 <= 2k <= n");
    if (k == 0 || n == 2 * k) return 1;
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - k - 1), static_cast<unsigned long>(k - 1));
    return Int(n) * c / Int(k);
}

Int theta_count(int n, int k, int h) {
    require(0 <= h && h <= k, "Theta needs 0 <= h <= k");
    return omega0_count(k - h, n - 2 * h);
}

Int phi_count(int n, int k, int h) { return theta_count(n - 1, k, h); }

LaurentPoly lambda_kk(int k, int n) {
    LaurentPoly out;
    for (int i = 1; i <= 2 * k; ++i) out += q(-2 * (n - i)) + q(2 * (n - i) + 1);
    return out;
}

LaurentPoly lambda_kk_closed(int k, int n) {
    return exact_div(qm1(4 * k) * one_plus(1, 4 * (n - k) - 1), q(2 * (n - 1)) * qm1(2));
}

LaurentPoly lambda_zero(int k, int n) {
    static Memo<std::pair<int, int>, LaurentPoly> memo;
    require(k >= 0 && 2 * k <= n, "Lambda_0^{k,n} needs 2k <= n");
    return memo.get({k, n}, [k, n] {
        if (k == 0) return LaurentPoly();
        if (n == 2 * k) {
            LaurentPoly sum;
            for (int i = 1; i <= k; ++i) sum += r(2 * i);
            return sum * LaurentPoly(sgn(k));
        }
        if (n == 2 * k + 1)
            return r(n) * LaurentPoly(sgn(k) * omega0_count(k - 1, n - 2)) - lambda_zero(k - 1, n - 2) +
                   LaurentPoly(2) * lambda_zero(k, n - 1);
        return r(n) * LaurentPoly(sgn(k) * omega0_count(k - 1, n - 2)) - lambda_zero(k - 1, n - 2) + lambda_zero(k, n - 1);
    });
}

LaurentPoly lambda_coeff(int h, int k, int n) {
    require(0 <= h && h <= k && 2 * k <= n, "Lambda_h^{k,n} needs 0 <= h <= k, 2k <= n");
    if (h == k) return lambda_kk(k, n);
    if (h == 0) return lambda_zero(k, n);
    return lambda_kk(h, n) * LaurentPoly(sgn(k - h) * omega0_count(k - h, n - 2 * h)) + lambda_zero(k - h, n - 2 * h);
}

LaurentPoly lambda2_2h(int h, int k, int n) {
    require(0 <= h && h <= k && 2 * k + 1 <= n, "Lambda_{2|h}^{2|k,n} needs 0 <= h <= k, 2k+1 <= n");
    return s(n - 1) * LaurentPoly(sgn(k - h) * omega0_count(k - h, n - 2 * h - 1));
}

LaurentPoly lambda2_kp1(int k, int n) {
    LaurentPoly out;
    for (int j = 2; j <= 2 * k + 2; ++j) out -= s(n - j);
    return out;
}

LaurentPoly lambda2_kp1_closed(int k, int n) {
    return -exact_div(qm1(4 * (n - k - 1) - 2) * qm1(4 * (k + 1) - 2), q(2 * (n - 2)) * qm1(2));
}

LaurentPoly lambda2(int h, int k, int n) {
    static Memo<std::tuple<int, int, int>, LaurentPoly> memo;
    require(k >= 0 && 2 * k + 1 <= n && 0 <= h && h <= k + 1, "Lambda_h^{2|k,n} needs 2k+1 <= n, 0 <= h <= k+1");
    return memo.get({h, k, n}, [h, k, n]() -> LaurentPoly {
        if (h == k + 1) {
            require(2 * h <= n, "Lambda_{k+1}^{2|k,n} needs 2k+2 <= n");
            return lambda2_kp1(k, n);
        }
        if (k == 0) return -s(0);
        if (k == 1 && n == 3) return h == 0 ? s(0) + s(-2) : -s(0);
        if (h > 1) {
            if (n == 2 * k + 1) return lambda2(h - 1, k - 1, 2 * k - 1);
            if (n == 2 * k + 2)
                return lambda2(h - 1, k - 1, 2 * k) - LaurentPoly(2) * lambda2_2h(h - 1, k, 2 * k + 1) -
                       LaurentPoly(2 * sgn(k - h + 1)) * s(2 * k - 1);
            return lambda2(h - 1, k - 1, n - 2) - lambda2_2h(h - 1, k, n - 1) -
                   s(n - 3) * LaurentPoly(sgn(k - h + 1) * omega0_count(k - h + 1, n - 2 * h));
        }
        if (h == 1) {
            if (n == 2 * k + 1) return lambda2(0, k - 1, 2 * k - 1) - LaurentPoly(sgn(k - 1)) * s(2 * k - 2);
            if (n == 2 * k + 2)
                return lambda2(0, k - 1, 2 * k) - LaurentPoly(2) * lambda2_2h(0, k, 2 * k + 1) -
                       s(2 * k - 1) * LaurentPoly(sgn(k - 1) * omega0_count(k - 1, 2 * k - 1));
            return lambda2(0, k - 1, n - 2) - lambda2_2h(0, k, n - 1) -
                   s(n - 3) * LaurentPoly(sgn(k - 1) * omega0_count(k - 1, n - 3));
        }
        if (n == 2 * k + 1) return -lambda2(0, k - 1, 2 * k - 1) + LaurentPoly(sgn(k - 1)) * (s(2 * k - 2) + s(-2 * k));
        if (n == 2 * k + 2)
            return LaurentPoly(2) * lambda2(0, k, 2 * k + 1) - lambda2(0, k - 1, 2 * k) +
                   (s(2 * k - 1) + s(-2 * k - 1)) * LaurentPoly(sgn(k - 1) * omega0_count(k - 1, 2 * k - 1));
        return lambda2(0, k, n - 1) - lambda2(0, k - 1, n - 2) +
               (s(n - 3) + s(-n + 1)) * LaurentPoly(sgn(k - 1) * omega0_count(k - 1, n - 3));
    });
}

long a_int(int h, int k, int n) {
    static Memo<std::tuple<int, int, int>, long> memo;
    if (h > k || h <= 0) return 0;
    if (h == k) return 1;
    return memo.get({h, k, n}, [h, k, n] {
        long sum = 0;
        for (int i = h + 1; i <= k; ++i) sum += sgn(i - h) * theta_count(n, i, h).get_si() * a_int(i, k, n);
        return -sum;
    });
}

long e_int(int h, int k, int n) {
    static Memo<std::tuple<int, int, int>, long> memo;
    if (h > k || h < 0) return 0;
    if (h == k) return 1;
    return memo.get({h, k, n}, [h, k, n] {
        long sum = 0;
        for (int i = h + 1; i <= k; ++i) sum += sgn(i - h) * phi_count(n, i, h).get_si() * e_int(i, k, n);
        return -sum;
    });
}

RationalFunction c_value(int k, int n) {
    static Memo<std::pair<int, int>, RationalFunction> memo;
    require(0 <= k && 2 * k <= n, "C_{k,n} needs 0 <= 2k <= n");
    return memo.get({k, n}, [k, n] {
        if (2 * k == n) return specialize_qy(d_restriction_poly(row(k), row(k), Split::I));
        return specialize_qy(d_restriction_poly(row(k), row(n - k)));
    });
}

RationalFunction c2_value(int k, int n) {
    static Memo<std::pair<int, int>, RationalFunction> memo;
    require(0 <= k && 2 * k + 1 <= n, "C_{2|k,n} needs 2k+1 <= n");
    return memo.get({k, n}, [k, n] {
        if (k == 0) return specialize_qy(d_restriction_poly(Partition{n - 1, 1}, {}));
        BiRational sum = d_restriction_poly(Partition{k, 1}, row(n - k - 1));
        if (n - k - 1 != k) sum += d_restriction_poly(Partition{n - k - 1, 1}, row(k));
        return specialize_qy(sum);
    });
}

RationalFunction t_ratio(int k, int n) { return c_value(k, n) / c_value(k - 1, n); }

RationalFunction cd_ratio(int k, int n) {
    require(1 <= k && 2 * k <= n, "C(k,n,q)/D(k,n,q) needs 1 <= k, 2k <= n");
    const RationalFunction lkk = lambda_kk(k, n), lk1 = lambda_kk(k - 1, n);
    if (2 * k == n) {
        RationalFunction c = RationalFunction(2) * lkk * t_ratio(k, n) - RationalFunction(LaurentPoly(2) * b(1, 2)) - lk1;
        RationalFunction dd(-(q(1) + LaurentPoly(1)) * qm1(2), q(n + 1));
        return c / dd;
    }
    RationalFunction c = lkk * t_ratio(k, n) - RationalFunction(b(1, n - 2 * (k - 1))) - lk1;
    RationalFunction dd(-(q(1) + LaurentPoly(1)) * qm1(2 * (n - 2 * k + 1)), q(2 * (n - k) + 1));
    return c / dd;
}

ReducedRelation relation_omega2k(int k, int n) {
    ReducedRelation out;
    for (int h = 0; h <= k; ++h) out[h] = lambda_coeff(h, k, n);
    return pruned(out);
}

ReducedRelation relation_omega1(int k, int n) {
    ReducedRelation out;
    for (int h = 0; h <= k; ++h) out[-1 - h] = lambda2_2h(h, k, n);
    for (int h = 0; h <= k; ++h) out[h] = lambda2(h, k, n);
    if (2 * (k + 1) < n) out[k + 1] = lambda2_kp1(k, n);
    if (2 * (k + 1) == n) out[k + 1] = LaurentPoly(2) * lambda2_kp1(k, n);  // both spin weights
    return pruned(out);
}

ReducedRelation extracted_omega2k(int k, int n) {
    static Memo<std::pair<int, int>, ReducedRelation> memo;
    return memo.get({k, n}, [k, n] { return extract(eps_omega2k(k, n), n); });
}

ReducedRelation extracted_omega1(int k, int n) {
    static Memo<std::pair<int, int>, ReducedRelation> memo;
    return memo.get({k, n}, [k, n] { return extract(eps_omega1(k, n), n); });
}

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.pass ? 0 : 1;
    return f;
}

namespace {

std::string cell(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }
std::string cell(int h, int k, int n) { return "h=" + std::to_string(h) + " " + cell(k, n); }

void check(SuiteReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, ok ? "" : detail});
}

template <class T>
void check_eq(SuiteReport& rep, const std::string& name, const T& a, const T& b) {
    const bool ok = a == b;
    rep.checks.push_back({name, ok, ok ? "" : "difference " + (a - b).str()});
}

// printed statements: recorded as discrepancies when they fail
void claim(SuiteReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
    if (ok)
        rep.checks.push_back({name, true, ""});
    else
        rep.discrepancies.push_back({name, false, detail});
}

// the reduced relations vanish on the closed forms C_h = c_value, C_{2|h} = c2_value
RationalFunction evaluate(const ReducedRelation& rel, int n) {
    RationalFunction sum;
    for (const auto& [key, c] : rel) sum += RationalFunction(c) * (key >= 0 ? c_value(key, n) : c2_value(-1 - key, n));
    return sum;
}

ReducedRelation reduction_a(int k, int n) {
    ReducedRelation s;
    for (int i = 1; i <= k; ++i) add_scaled(s, relation_omega2k(i, n), a_int(i, k, n));
    return pruned(s);
}

ReducedRelation reduction_e(int k, int n) {
    ReducedRelation s;
    for (int i = 0; i <= k; ++i) add_scaled(s, relation_omega1(i, n), e_int(i, k, n));
    return pruned(s);
}

LaurentPoly at(const ReducedRelation& rel, int key) {
    auto it = rel.find(key);
    return it == rel.end() ? LaurentPoly() : it->second;
}

// evaluates f and reports a thrown domain or divisibility error as a failure
void guarded(SuiteReport& rep, const std::string& name, const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        rep.checks.push_back({name, false, e.what()});
    }
}

}  // namespace

SuiteReport suite_d_coeffs(const SuiteRange& range) {
    SuiteReport rep{"d-coeffs", {}, {}};
    check_eq(rep, "r(2)", r(2), (q(1) + LaurentPoly(1)) * (q(1) + q(-1)));
    check_eq(rep, "s(0)", s(0), one_minus(2));
    check_eq(rep, "s(-1) = -s(0)", s(-1), -s(0));
    check(rep, "Theta(4,1,0) = 4", theta_count(4, 1, 0) == 4);
    for (int k = 1; k <= range.max_k; ++k) check(rep, "Theta(2k,k,0) = 1 " + cell(k, 2 * k), theta_count(2 * k, k, 0) == 1);
    for (int n = 3; n <= range.max_n; ++n)
        for (int k = 1; 2 * k <= n - 1 && k <= range.max_k; ++k)
            for (int h = 0; h < k; ++h) {
                const bool ok = theta_count(n, k, h) == theta_count(n, k, h + 1) + theta_count(n - 1, k, h);
                if (n == 2 * k + 1)
                    claim(rep, "Theta recurrence at n = 2k+1 " + cell(h, k, n), ok, "the odd recurrence applies");
                else
                    check(rep, "Theta recurrence " + cell(h, k, n), ok);
            }
    for (int k = 1; k <= range.max_k && 2 * k + 1 <= range.max_n; ++k)
        for (int h = 0; h < k; ++h)
            check(rep, "Theta odd recurrence " + cell(h, k, 2 * k + 1),
                  theta_count(2 * k + 1, k, h) == theta_count(2 * k + 1, k, h + 1) + Int(2) * theta_count(2 * k, k, h));
    for (int n = 3; n <= range.max_n; ++n)
        for (int k = 1; k <= range.max_k && 2 * k + 1 <= n; ++k) check_eq(rep, "d closed form " + cell(k, n), d(k, n), d_closed(k, n));
    for (int n = 2; n <= range.max_n; ++n)
        for (int k = 1; k <= range.max_k && 2 * k <= n; ++k)
            check_eq(rep, "Lambda_k^{k,n} closed form " + cell(k, n), lambda_kk(k, n), lambda_kk_closed(k, n));
    for (int n = 4; n <= range.max_n; ++n)
        for (int k = 0; k <= range.max_k && 2 * k + 2 <= n; ++k) {
            LaurentPoly closed;
            bool divisible = try_exact_div(-(qm1(4 * (n - k - 1) - 2) * qm1(4 * (k + 1) - 2)), q(2 * (n - 2)) * qm1(2), closed);
            claim(rep, "printed Lambda_{k+1}^{2|k,n} closed form " + cell(k, n), divisible && closed == lambda2_kp1(k, n),
                  "the sum equals the closed form with a plus sign");
            check_eq(rep, "Lambda_{k+1}^{2|k,n} = -closed " + cell(k, n), lambda2_kp1(k, n), -lambda2_kp1_closed(k, n));
        }
    for (int n = 4; n <= range.max_n; ++n) check_eq(rep, "Lambda_0^{2|0,n} = -s(0) n=" + std::to_string(n), lambda2(0, 0, n), -s(0));
    check_eq(rep, "Lambda_0^{2,4} = r(2)+r(4)", lambda_zero(2, 4), r(2) + r(4));
    check_eq(rep, "Lambda_k^{k,n} at k=1 n=4", lambda_kk(1, 4), exact_div(qm1(4) * one_plus(1, 11), q(6) * qm1(2)));
    // footnote base values as printed, against the values forced by the n = 2k display
    check_eq(rep, "Lambda_0^{1,2} from the n = 2k display", lambda_zero(1, 2), -r(2));
    claim(rep, "printed base Lambda_0^{1,2} = r(2)", lambda_zero(1, 2) == r(2), "the n = 2k display gives -r(2)");
    claim(rep, "printed base Lambda_0^{1,3} = r(3)+2r(2)", lambda_zero(1, 3) == r(3) + LaurentPoly(2) * r(2),
          "the recurrence gives " + lambda_zero(1, 3).str());
    claim(rep, "printed Lambda_0^{2,4} = -(r(2)+r(4))", lambda_zero(2, 4) == -(r(2) + r(4)), "the n = 2k display gives +(r(2)+r(4))");
    // cross-module: the relations extracted from the minuscule recurrence
    for (int n = 4; n <= std::min(range.max_extract_n, kMaxRank); ++n) {
        for (int k = 1; 2 * k <= n; ++k)
            guarded(rep, "extracted omega_{2k} " + cell(k, n), [&] {
                auto a = extracted_omega2k(k, n), e = relation_omega2k(k, n);
                check(rep, "extracted omega_{2k} " + cell(k, n), a == e, diff_text(a, e));
            });
        for (int k = 0; 2 * k + 1 <= n; ++k)
            guarded(rep, "extracted omega_1+omega_{2k+1} " + cell(k, n), [&] {
                auto a = extracted_omega1(k, n), e = relation_omega1(k, n);
                check(rep, "extracted omega_1+omega_{2k+1} " + cell(k, n), a == e, diff_text(a, e));
            });
    }
    return rep;
}

SuiteReport suite_prop45(const SuiteRange& range) {
    SuiteReport rep{"prop45", {}, {}};
    for (int n = 2; n <= range.max_n; ++n)
        for (int k = 1; k <= range.max_k && 2 * k <= n; ++k) {
            check(rep, "A_k^{k,n} = 1 " + cell(k, n), a_int(k, k, n) == 1);
            for (int h = 1; h <= k; ++h) {
                if (h > 1 && n - 2 >= 2 * (k - 1))
                    check(rep, "A property (1) " + cell(h, k, n), a_int(h, k, n) == a_int(h - 1, k - 1, n - 2));
                if (n != 2 * k && n != 2 * k + 1)
                    check(rep, "A property (2) " + cell(h, k, n), a_int(h, k, n) == a_int(h, k, n - 1) + a_int(h, k - 1, n - 1));
                // items (3) and (4) fail at h = k, where A_k^{k,n} = 1 by definition
                auto item = h < k ? check : claim;
                if (n == 2 * k) item(rep, "A property (3) " + cell(h, k, n), a_int(h, k, n) == a_int(h, k - 1, n - 1), "");
                if (n == 2 * k + 1)
                    item(rep, "A property (4) " + cell(h, k, n), a_int(h, k, n) == 2 * a_int(h, k, n - 1) + a_int(h, k - 1, n - 1), "");
            }
        }
    for (int n = 4; n <= range.max_n; ++n)
        for (int k = 1; k <= range.max_k && 2 * k <= n; ++k) {
            const auto red = reduction_a(k, n);
            ReducedRelation want{{k, lambda_kk(k, n)}};
            for (int i = 0; i < k; ++i) want[i] = -b(k - i, n - 2 * i);
            check(rep, "sum A_i R_i " + cell(k, n), red == pruned(want), diff_text(red, want));
            for (int h = 1; h < k; ++h) {
                check_eq(rep, "Gamma_h = Gamma_0^{k-h,n-2h} " + cell(h, k, n), at(red, h), at(reduction_a(k - h, n - 2 * h), 0));
                check_eq(rep, "Gamma_h = -b_{k-h,n-2h} " + cell(h, k, n), at(red, h), -b(k - h, n - 2 * h));
            }
            const LaurentPoly g0 = at(red, 0);
            if (n == 2 * k) {
                LaurentPoly sum;
                for (int j = 2; j <= k + 1; ++j) sum -= r(j);
                check_eq(rep, "Gamma_0^{k,2k} = -sum r(j) " + cell(k, n), g0, sum);
            } else if (n == 2 * k + 1) {
                check_eq(rep, "Gamma_0^{k,2k+1} " + cell(k, n), g0, LaurentPoly(2) * at(reduction_a(k, 2 * k), 0) - r(k + 2));
            } else {
                check_eq(rep, "Gamma_0^{k,n} = Gamma_0^{k,n-1} - r(n-k+1) " + cell(k, n), g0, at(reduction_a(k, n - 1), 0) - r(n - k + 1));
            }
            claim(rep, "printed Gamma_0^{k,n} = b_{k,n} " + cell(k, n), g0 == b(k, n), "the reduction gives -b_{k,n}");
            check(rep, "sum A_i R_i vanishes on the closed forms " + cell(k, n), evaluate(red, n).is_zero());
        }
    for (int n = 4; n <= std::min(range.max_extract_n, kMaxRank); ++n)
        for (int k = 1; 2 * k <= n; ++k)
            guarded(rep, "sum A_i R_i on extracted relations " + cell(k, n), [&] {
                ReducedRelation s;
                for (int i = 1; i <= k; ++i) add_scaled(s, extracted_omega2k(i, n), a_int(i, k, n));
                check(rep, "sum A_i R_i on extracted relations " + cell(k, n), pruned(s) == reduction_a(k, n));
            });
    return rep;
}

SuiteReport suite_prop47(const SuiteRange& range) {
    SuiteReport rep{"prop47", {}, {}};
    for (int n = 3; n <= range.max_n; ++n)
        for (int k = 0; k <= range.max_k && 2 * k + 1 <= n; ++k) {
            check(rep, "E_k^{k,n} = 1 " + cell(k, n), e_int(k, k, n) == 1);
            for (int h = 0; h <= k; ++h) {
                check(rep, "E_h^{k,n} = A_h^{k,n-1} " + cell(h, k, n), h == 0 || e_int(h, k, n) == a_int(h, k, n - 1));
                if (h > 1) check(rep, "E property (1) " + cell(h, k, n), e_int(h, k, n) == e_int(h - 1, k - 1, n - 2));
                if (k >= 1 && n != 2 * k + 1 && n != 2 * k + 2)
                    check(rep, "E property (2) " + cell(h, k, n), e_int(h, k, n) == e_int(h, k, n - 1) + e_int(h, k - 1, n - 1));
                auto item = h < k ? check : claim;
                if (k >= 1 && n == 2 * k + 1) item(rep, "E property (3) " + cell(h, k, n), e_int(h, k, n) == e_int(h, k - 1, n - 1), "");
                if (k >= 1 && n == 2 * k + 2)
                    item(rep, "E property (4) " + cell(h, k, n), e_int(h, k, n) == 2 * e_int(h, k, n - 1) + e_int(h, k - 1, n - 1), "");
            }
            // the printed side condition on binomial sums
            for (int h = 0; h <= k; ++h) {
                Int sum = 0;
                for (int i = h; i <= k; ++i) {
                    Int c = 0;
                    if (n - i - 1 >= i) mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - i - 1), static_cast<unsigned long>(i));
                    sum += Int(sgn(i)) * c * Int(e_int(i, k, n));
                }
                claim(rep, "printed sum (-1)^i binom(n-i-1,i) E_i^{k,n} = 0 " + cell(h, k, n), sum == 0, "sum is " + sum.get_str());
            }
        }
    for (int n = 4; n <= range.max_n; ++n)
        for (int k = 0; k <= range.max_k && 2 * k + 1 <= n; ++k) {
            const auto red = reduction_e(k, n);
            for (int h = 0; h < k; ++h) check(rep, "Gamma_{2|h} = 0 " + cell(h, k, n), at(red, -1 - h).is_zero());
            check_eq(rep, "Lambda_{2|k}^{2|k,n} = s(n-1) " + cell(k, n), at(red, -1 - k), s(n - 1));
            for (int j = 0; j < k; ++j)
                check_eq(rep, "coefficient of C_j " + cell(j, k, n), at(red, j), n == 2 * k + 1 ? -s(k - j) : -d(k - j, n - 2 * j));
            const LaurentPoly gk = at(red, k);
            if (n == 2 * k + 1) {
                LaurentPoly sum;
                for (int j = 0; j <= 2 * k - 1; ++j) sum -= s(j);
                check_eq(rep, "Gamma_k^{2|k,2k+1} = -sum s(j) " + cell(k, n), gk, sum);
                if (k >= 1) {
                    const LaurentPoly closed = exact_div(pow(qm1(4 * k), 2), q(4 * k - 2) * qm1(2));
                    check_eq(rep, "Gamma_k^{2|k,2k+1} = (q^{4k}-1)^2/(q^{4k-2}(q^2-1)) " + cell(k, n), gk, closed);
                    claim(rep, "printed Gamma_k^{2|k,2k+1} = -(q^{4k}-1)^2/(q^{4k-2}(q^2-1)) " + cell(k, n), gk == -closed,
                          "the sum equals the closed form with a plus sign");
                }
            } else {
                const LaurentPoly per_weight = lambda2_kp1(k, n);
                check_eq(rep, "Gamma_{k+1}^{2|k,n} " + cell(k, n), at(red, k + 1),
                         n == 2 * k + 2 ? LaurentPoly(2) * per_weight : per_weight);
                check_eq(rep, "Gamma_k = -s(0) + s(n-2k-2) + Gamma_{k+1} " + cell(k, n), gk, -s(0) + s(n - 2 * k - 2) + per_weight);
                if (k == 1) check_eq(rep, "Gamma_1^{2|1,n} " + cell(k, n), gk, -s(0) - s(n - 2) - s(n - 3));
                if (k >= 2 && n - 2 >= 2 * (k - 1) + 2)
                    check_eq(rep, "Gamma_k^{2|k,n} recursion " + cell(k, n), gk, at(reduction_e(k - 1, n - 2), k - 1) - (s(n - 2) + s(n - 3)));
            }
            for (int h = 1; h < k; ++h)
                check_eq(rep, "Gamma_h^{2|k,n} = Gamma_{h-1}^{2|k-1,n-2} " + cell(h, k, n), at(red, h), at(reduction_e(k - 1, n - 2), h - 1));
            if (k >= 1) check_eq(rep, "Gamma_0^{2|k,n} " + cell(k, n), at(red, 0), n == 2 * k + 1 ? -s(k) : -s(k) - s(n - k - 1));
            check(rep, "sum E_i R_i vanishes on the closed forms " + cell(k, n), evaluate(red, n).is_zero());
        }
    if (range.max_n >= 5) {
        check_eq(rep, "Gamma_0^{2|2,5} = -s(2)", at(reduction_e(2, 5), 0), -s(2));
        check_eq(rep, "Gamma_2^{2|2,5} = -sum_{j<4} s(j)", at(reduction_e(2, 5), 2), -(s(0) + s(1) + s(2) + s(3)));
    }
    for (int n = 4; n <= std::min(range.max_extract_n, kMaxRank); ++n)
        for (int k = 0; 2 * k + 1 <= n; ++k)
            guarded(rep, "sum E_i R_i on extracted relations " + cell(k, n), [&] {
                ReducedRelation s;
                for (int i = 0; i <= k; ++i) add_scaled(s, extracted_omega1(i, n), e_int(i, k, n));
                check(rep, "sum E_i R_i on extracted relations " + cell(k, n), pruned(s) == reduction_e(k, n));
            });
    return rep;
}

SuiteReport suite_final(const SuiteRange& range) {
    SuiteReport rep{"final", {}, {}};
    auto geometric = [](int i, int n) { return RationalFunction(q(2 * i) * qm1(2 * (n - 2 * i))); };
    for (int n = 4; n <= range.max_n; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            RationalFunction rhs;
            for (int i = 0; i <= k - 2; ++i) rhs += geometric(i, n) * c_value(i, n);
            check(rep, "C(k,n)/D(k,n) C_{k-1} = sum " + cell(k, n), cd_ratio(k, n) * c_value(k - 1, n) == rhs);
        }
        for (int k = 2; 2 * k <= n; ++k) {
            RationalFunction lhs = cd_ratio(k, n) * c_value(k - 1, n);
            RationalFunction rhs = (RationalFunction(q(2 * (k - 2)) * qm1(2 * (n - 2 * (k - 2)))) + cd_ratio(k - 1, n)) * c_value(k - 2, n);
            check(rep, "polidCk " + cell(k, n), lhs == rhs);
        }
        for (int k = 1; 2 * k + 1 <= n; ++k) {
            const auto red = reduction_e(k, n);
            const RationalFunction l2 = at(red, -1 - k);
            const RationalFunction gk = at(red, k);
            RationalFunction direct = -gk * c_value(k, n);
            for (int j = 0; j < k; ++j) direct -= RationalFunction(at(red, j)) * c_value(j, n);
            if (n != 2 * k + 1) direct -= RationalFunction(at(red, k + 1)) * c_value(k + 1, n);
            check(rep, "Lambda_{2|k} C_{2|k} from the reduction " + cell(k, n), l2 * c2_value(k, n) == direct);
            if (n == 2 * k + 1) {
                if (k < 2) continue;
                RationalFunction rhs = -c_value(k - 1, n) / RationalFunction(q(2 * k)) *
                                       (RationalFunction(q(2 * k)) * gk * t_ratio(k, n) + RationalFunction(q(2 * (k - 1)) * qm1(6)) + cd_ratio(k, n));
                check(rep, "final identity n = 2k+1 " + cell(k, n), l2 * c2_value(k, n) == rhs);
            } else {
                const RationalFunction g1 = at(red, k + 1);
                const RationalFunction factor(one_plus(1, 2 * (n - 2 * k - 1)), q(2 * (n - k - 1)));
                auto rhs = [&](int kk) { return -c_value(k, n) * (g1 * t_ratio(k + 1, n) + gk + factor * cd_ratio(kk, n)); };
                check(rep, "final identity generic n with C(k+1)/D(k+1) " + cell(k, n), l2 * c2_value(k, n) == rhs(k + 1));
                if (k >= 2) claim(rep, "printed final identity with C(k)/D(k) " + cell(k, n), l2 * c2_value(k, n) == rhs(k), "holds with k+1");
            }
        }
    }
    for (int k = 2; k <= range.max_k; ++k)
        for (int i = 2; i <= k; ++i)
            for (int n = 2 * k; n <= range.max_n; ++n) {
                const int m = n - 2 * (k - i);
                if (m < 2 * i) continue;
                RationalFunction rhs = RationalFunction(-(q(1) + LaurentPoly(1)) * qm1(2 * (n - 2 * k + 1)), q(2 * (n - 2 * k) + 1)) *
                                       RationalFunction(qm1(2 * m), q(2 * i));
                RationalFunction lhs = b(i, m) - b(i - 1, m);
                if (n != 2 * k)
                    check(rep, "b difference " + cell(i, k, n), lhs == rhs);
                else
                    claim(rep, "printed b difference at n = 2k " + cell(i, k, n), lhs == rhs, "the split form applies at n = 2k");
            }
    for (int i = 1; i <= range.max_k; ++i) {
        RationalFunction lhs = LaurentPoly(2) * b(i, 2 * i) - b(i - 1, 2 * i);
        RationalFunction rhs = RationalFunction(-(q(1) + LaurentPoly(1)) * qm1(2), q(1)) * RationalFunction(qm1(4 * i), q(2 * i));
        check(rep, "split b difference i=" + std::to_string(i), lhs == rhs);
    }
    return rep;
}

SuiteReport suite_e6_symmetry() {
    SuiteReport rep{"e6-symmetry", {}, {}};
    const auto spec = build_root_system('E', 6);
    for (const auto& lambda : enumerate_small(spec))
        check(rep, "R^{w1}_lambda vs R^{w6}_{J lambda} " + format_weight(lambda, spec), e6_involution_check(lambda, spec));
    return rep;
}

std::vector<std::string> suite_names() { return {"d-coeffs", "prop45", "prop47", "final", "e6-symmetry"}; }

SuiteReport run_suite(const std::string& name, const SuiteRange& range) {
    if (name == "d-coeffs") return suite_d_coeffs(range);
    if (name == "prop45") return suite_prop45(range);
    if (name == "prop47") return suite_prop47(range);
    if (name == "final") return suite_final(range);
    if (name == "e6-symmetry") return suite_e6_symmetry();
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace reeder::typed
