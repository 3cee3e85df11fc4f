#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reeder {

using Int = mpz_class;

class NonDivisible : public std::runtime_error {
public:
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

class VariableMismatch : public std::runtime_error {
public:
    explicit VariableMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Int& c);

    static LaurentPoly monomial(const Int& c, int e);
    static LaurentPoly q(int e = 1) { return monomial(1, e); }
    // (-q)^e
    static LaurentPoly neg_q(int e);
    static LaurentPoly from_terms(const std::vector<std::pair<int, Int>>& terms);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Int coeff(int e) const;
    const Terms& terms() const { return c_; }
    std::size_t size() const { return c_.size(); }
    const Int& leading_coeff() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    void add_term(int e, const Int& c);
    void add_scaled(const LaurentPoly& o, const Int& s, int shift = 0);

    LaurentPoly shifted(int e) const;
    // f(q^k), k may be negative
    LaurentPoly subs_power(int k) const;
    // f(-q)
    LaurentPoly subs_neg() const;
    Int eval_at_one() const;
    Int eval(long x) const;  // x != 0 when negative exponents are present

    bool nonnegative() const;
    bool palindromic(int degree) const;

    std::string str() const;
    static LaurentPoly parse(const std::string& s);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    Terms c_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& a, unsigned n);
// 1 - c q^e style helpers used all over the formulas
LaurentPoly one_plus(const Int& c, int e);
LaurentPoly one_minus(int e);

// h with f = g*h; throws NonDivisible otherwise
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
// division with remainder of ordinary polynomials shifted to min exponent 0; leading coefficient of g must divide
bool try_exact_div(const LaurentPoly& f, const LaurentPoly& g, LaurentPoly& out);
Int eval_at_one(const LaurentPoly& f);
// gcd up to units, normalized to positive leading coefficient and min exponent 0
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
Int content(const LaurentPoly& a);

enum class Vars { QT, QY };
const char* vars_name(Vars v);

// polynomial in two variables, tagged (q,t) or (q,y); exponents may be negative
class BiPoly {
public:
    using Terms = std::map<std::pair<int, int>, Int>;

    explicit BiPoly(Vars v) : vars_(v) {}
    BiPoly(Vars v, const LaurentPoly& in_q);

    static BiPoly monomial(Vars v, const Int& c, int e1, int e2);

    Vars vars() const { return vars_; }
    bool is_zero() const { return c_.empty(); }
    const Terms& terms() const { return c_; }
    Int coeff(int e1, int e2) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly operator-() const;
    BiPoly& operator*=(const LaurentPoly& in_q);
    void add_term(int e1, int e2, const Int& c);

    // coefficient of second variable^k, as a Laurent polynomial in q
    LaurentPoly second_coeff(int k) const;
    std::vector<int> second_exps() const;

    std::string str() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.vars_ == b.vars_ && a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    void check(const BiPoly& o) const;
    Vars vars_;
    Terms c_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(BiPoly a, const LaurentPoly& b);

// q -> -q, t -> q^2
LaurentPoly specialize_qt(const BiPoly& f);
// q -> q^2, y -> q
LaurentPoly specialize_qy(const BiPoly& f);
// quotient of a bivariate polynomial by a polynomial in q, exact
BiPoly exact_div(const BiPoly& f, const LaurentPoly& g);

// num/den of Laurent polynomials, kept in lowest terms
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    // throws NonDivisible when not a Laurent polynomial
    LaurentPoly to_poly() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    std::string str() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void normalize();
    LaurentPoly num_, den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

// bivariate numerator over a denominator in q alone
class BiRational {
public:
    explicit BiRational(Vars v) : num_(v), den_(1) {}
    BiRational(const BiPoly& num, const LaurentPoly& den = LaurentPoly(1));

    Vars vars() const { return num_.vars(); }
    const BiPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_polynomial() const;
    BiPoly to_poly() const;

    BiRational& operator+=(const BiRational& o);
    BiRational& operator*=(const BiRational& o);
    BiRational& operator*=(const LaurentPoly& o);

    std::string str() const;

    friend bool operator==(const BiRational& a, const BiRational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    void normalize();
    BiPoly num_;
    LaurentPoly den_;
};

BiRational operator+(BiRational a, const BiRational& b);
BiRational operator*(BiRational a, const BiRational& b);

RationalFunction specialize_qt(const BiRational& f);
RationalFunction specialize_qy(const BiRational& f);

}  // namespace reeder
