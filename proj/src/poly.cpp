#include "reeder/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reeder {

namespace {

using Dense = std::vector<Int>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const LaurentPoly& f) {
    Dense d;
    if (f.is_zero()) return d;
    int lo = f.min_exp();
    d.assign(static_cast<std::size_t>(f.max_exp() - lo + 1), 0);
    for (const auto& [e, c] : f.terms()) d[static_cast<std::size_t>(e - lo)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    LaurentPoly f;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) f.add_term(static_cast<int>(i), d[i]);
    return f;
}

Int dense_content(const Dense& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense& a) {
    Int g = dense_content(a);
    if (g > 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Dense pseudo_rem(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t shift = a.size() - 1 - db;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Int& c, int e) {
    LaurentPoly p;
    if (c != 0) p.c_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::neg_q(int e) {
    return monomial((e % 2 == 0) ? 1 : -1, e);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Int>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

Int LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

const Int& LaurentPoly::leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.rbegin()->second;
}

void LaurentPoly::add_term(int e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Int& s, int shift) {
    if (s == 0) return;
    for (const auto& [e, c] : o.c_) add_term(e + shift, c * s);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_.emplace_hint(r.c_.end(), k + e, c);
    return r;
}

LaurentPoly LaurentPoly::subs_power(int k) const {
    if (k == 0) return LaurentPoly(eval_at_one());
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.add_term(e * k, c);
    return r;
}

LaurentPoly LaurentPoly::subs_neg() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.c_)
        if (e % 2 != 0) c = -c;
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

Int LaurentPoly::eval(long x) const {
    Int s = 0;
    for (const auto& [e, c] : c_) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), Int(x).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e < 0) {
            if (p == 0) throw std::domain_error("negative exponent at zero");
            if (c % p != 0) throw std::domain_error("non-integral evaluation");
            s += c / p;
        } else {
            s += c * p;
        }
    }
    return s;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [e, c] : c_)
        if (c < 0 || e < 0) return false;
    return true;
}

bool LaurentPoly::palindromic(int degree) const {
    for (const auto& [e, c] : c_)
        if (coeff(degree - e) != c) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (first) {
            os << c.get_str();
            first = false;
        } else if (c < 0) {
            os << " - " << Int(-c).get_str();
        } else {
            os << " + " << c.get_str();
        }
        os << "*q^" << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    LaurentPoly p;
    if (s.empty() || s == "0") return p;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse polynomial: " + text); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Int c = 1;
        bool has_c = j > i;
        if (has_c) c = Int(s.substr(i, j - i));
        i = j;
        int e = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
            if (s[i] == '*') {
                if (!has_c) fail();
                ++i;
            }
            if (i >= s.size() || s[i] != 'q') fail();
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                std::size_t m = k;
                while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
                if (m == k) fail();
                e = std::stoi(s.substr(i, m - i));
                i = m;
            }
        } else if (!has_c) {
            fail();
        }
        p.add_term(e, sign * c);
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
    }
    return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<Int> acc(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) {
            Int& slot = acc[static_cast<std::size_t>(e1 + e2 - lo)];
            mpz_addmul(slot.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
        }
    LaurentPoly r;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) r.add_term(static_cast<int>(i) + lo, acc[i]);
    return r;
}

LaurentPoly pow(const LaurentPoly& a, unsigned n) {
    LaurentPoly r(1), b(a);
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1u;
        if (n) b *= b;
    }
    return r;
}

LaurentPoly one_plus(const Int& c, int e) { return LaurentPoly(1) + LaurentPoly::monomial(c, e); }
LaurentPoly one_minus(int e) { return LaurentPoly(1) - LaurentPoly::q(e); }

bool try_exact_div(const LaurentPoly& f, const LaurentPoly& g, LaurentPoly& out) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    out = LaurentPoly();
    if (f.is_zero()) return true;
    const int glo = g.min_exp(), ghi = g.max_exp();
    const int floor_exp = f.min_exp() - glo;
    const Int& lg = g.leading_coeff();
    LaurentPoly r(f);
    while (!r.is_zero()) {
        int d = r.max_exp() - ghi;
        if (d < floor_exp) return false;
        const Int& lr = r.leading_coeff();
        if (!mpz_divisible_p(lr.get_mpz_t(), lg.get_mpz_t())) return false;
        Int t;
        mpz_divexact(t.get_mpz_t(), lr.get_mpz_t(), lg.get_mpz_t());
        out.add_term(d, t);
        r.add_scaled(g, -t, d);
    }
    return true;
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly h;
    if (!try_exact_div(f, g, h)) throw NonDivisible("(" + f.str() + ") is not divisible by (" + g.str() + ")");
    return h;
}

Int eval_at_one(const LaurentPoly& f) { return f.eval_at_one(); }

Int content(const LaurentPoly& a) {
    Int g = 0;
    for (const auto& [e, c] : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    Dense x = to_dense(a), y = to_dense(b);
    if (x.empty()) std::swap(x, y);
    if (y.empty()) {
        make_primitive(x);
        Int c = content(a.is_zero() ? b : a);
        for (auto& v : x) v *= c;
        if (x.back() < 0)
            for (auto& v : x) v = -v;
        return from_dense(x);
    }
    Int cx = dense_content(x), cy = dense_content(y), c;
    mpz_gcd(c.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Dense r = pseudo_rem(x, y);
        x = std::move(y);
        make_primitive(r);
        y = std::move(r);
    }
    if (x.back() < 0)
        for (auto& v : x) v = -v;
    for (auto& v : x) v *= c;
    // strip the power of q: q is a unit
    std::size_t k = 0;
    while (k < x.size() && x[k] == 0) ++k;
    x.erase(x.begin(), x.begin() + static_cast<long>(k));
    return from_dense(x);
}

const char* vars_name(Vars v) { return v == Vars::QT ? "(q,t)" : "(q,y)"; }

BiPoly::BiPoly(Vars v, const LaurentPoly& in_q) : vars_(v) {
    for (const auto& [e, c] : in_q.terms()) c_.emplace(std::make_pair(e, 0), c);
}

BiPoly BiPoly::monomial(Vars v, const Int& c, int e1, int e2) {
    BiPoly p(v);
    p.add_term(e1, e2, c);
    return p;
}

Int BiPoly::coeff(int e1, int e2) const {
    auto it = c_.find({e1, e2});
    return it == c_.end() ? Int(0) : it->second;
}

void BiPoly::check(const BiPoly& o) const {
    if (vars_ != o.vars_)
        throw VariableMismatch(std::string("variable mismatch: ") + vars_name(vars_) + " vs " + vars_name(o.vars_));
}

void BiPoly::add_term(int e1, int e2, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = c_.try_emplace({e1, e2}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.c_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.c_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const LaurentPoly& in_q) {
    BiPoly r(vars_);
    for (const auto& [e, c] : c_)
        for (const auto& [k, d] : in_q.terms()) r.add_term(e.first + k, e.second, c * d);
    c_ = std::move(r.c_);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentPoly BiPoly::second_coeff(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        if (e.second == k) r.add_term(e.first, c);
    return r;
}

std::vector<int> BiPoly::second_exps() const {
    std::vector<int> v;
    for (const auto& [e, c] : c_) v.push_back(e.second);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    const char second = vars_ == Vars::QT ? 't' : 'y';
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (first) {
            os << c.get_str();
            first = false;
        } else if (c < 0) {
            os << " - " << Int(-c).get_str();
        } else {
            os << " + " << c.get_str();
        }
        os << "*q^" << e.first << "*" << second << "^" << e.second;
    }
    return os.str();
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.vars() != b.vars())
        throw VariableMismatch(std::string("variable mismatch: ") + vars_name(a.vars()) + " vs " + vars_name(b.vars()));
    BiPoly r(a.vars());
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

BiPoly operator*(BiPoly a, const LaurentPoly& b) { return a *= b; }

LaurentPoly specialize_qt(const BiPoly& f) {
    if (f.vars() != Vars::QT) throw VariableMismatch("specialize_qt needs (q,t)");
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(e.first + 2 * e.second, (e.first % 2 == 0) ? c : Int(-c));
    return r;
}

LaurentPoly specialize_qy(const BiPoly& f) {
    if (f.vars() != Vars::QY) throw VariableMismatch("specialize_qy needs (q,y)");
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.add_term(2 * e.first + e.second, c);
    return r;
}

BiPoly exact_div(const BiPoly& f, const LaurentPoly& g) {
    BiPoly r(f.vars());
    for (int k : f.second_exps()) {
        LaurentPoly h = exact_div(f.second_coeff(k), g);
        for (const auto& [e, c] : h.terms()) r.add_term(e, k, c);
    }
    return r;
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (g != LaurentPoly(1)) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    int s = -den_.min_exp();
    if (s != 0) {
        num_ = num_.shifted(s);
        den_ = den_.shifted(s);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RationalFunction::is_polynomial() const { return den_.size() == 1; }

LaurentPoly RationalFunction::to_poly() const { return exact_div(num_, den_); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

BiRational::BiRational(const BiPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void BiRational::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = den_;
    for (int k : num_.second_exps()) {
        g = gcd(g, num_.second_coeff(k));
        if (g == LaurentPoly(1)) break;
    }
    if (g != LaurentPoly(1)) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    int s = -den_.min_exp();
    if (s != 0) {
        num_ *= LaurentPoly::q(s);
        den_ = den_.shifted(s);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool BiRational::is_polynomial() const { return den_.size() == 1; }

BiPoly BiRational::to_poly() const { return exact_div(num_, den_); }

BiRational& BiRational::operator+=(const BiRational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

BiRational& BiRational::operator*=(const BiRational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

BiRational& BiRational::operator*=(const LaurentPoly& o) {
    num_ *= o;
    normalize();
    return *this;
}

std::string BiRational::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

BiRational operator+(BiRational a, const BiRational& b) { return a += b; }
BiRational operator*(BiRational a, const BiRational& b) { return a *= b; }

RationalFunction specialize_qt(const BiRational& f) {
    return RationalFunction(specialize_qt(f.num()), f.den().subs_neg());
}

RationalFunction specialize_qy(const BiRational& f) {
    return RationalFunction(specialize_qy(f.num()), f.den().subs_power(2));
}

}  // namespace reeder
