#include "reeder/weyl_side.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace reeder {

namespace {

BiPoly qy(long c, int qe, int ye) { return BiPoly::monomial(Vars::QY, c, qe, ye); }
// 1 + y q^e
BiPoly one_plus_y(int e) { return qy(1, 0, 0) + qy(1, e, 1); }

Partition part_of(std::initializer_list<int> p) {
    std::vector<int> v;
    for (int x : p)
        if (x > 0) v.push_back(x);
    return Partition(v);
}

}  // namespace

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::n() const {
    int s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) s += static_cast<int>(i) * parts[i];
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts.empty())
        for (int j = 0; j < parts[0]; ++j) {
            int len = 0;
            for (int r : parts)
                if (r > j) ++len;
            c.push_back(len);
        }
    return Partition(c);
}

int Partition::hook(int i, int j) const {
    if (i < 0 || i >= length() || j < 0 || j >= parts[i]) throw std::out_of_range("box outside the diagram");
    int leg = 0;
    for (int r = i + 1; r < length() && parts[r] > j; ++r) ++leg;
    return parts[i] - j + leg;
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts[i]; ++j) b.emplace_back(i, j);
    return b;
}

std::string Partition::str() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BiRational hook_content_poly(const Partition& alpha, const Partition& beta) {
    BiPoly num = qy(1, 2 * alpha.n() + 2 * beta.n() + beta.size(), 0);
    LaurentPoly den(1);
    for (auto [i, j] : alpha.boxes()) {
        num *= one_plus_y(2 * alpha.content(i, j) + 1);
        den *= one_minus(2 * alpha.hook(i, j));
    }
    for (auto [i, j] : beta.boxes()) {
        num *= one_plus_y(2 * beta.content(i, j) - 1);
        den *= one_minus(2 * beta.hook(i, j));
    }
    return BiRational(num, den);
}

BiRational d_restriction_poly(const Partition& alpha, const Partition& beta, Split split) {
    if ((split != Split::None) != (alpha == beta))
        throw std::invalid_argument("split marker is used exactly when alpha = beta");
    if (split != Split::None) return hook_content_poly(alpha, alpha);
    return hook_content_poly(alpha, beta) + hook_content_poly(beta, alpha);
}

BiPoly s_poly(const Partition& lambda, int n) {
    BiPoly p(Vars::QY, one_plus(1, n));
    for (auto [i, j] : lambda.boxes()) p *= one_plus_y(2 * lambda.content(i, j) + 1);
    return p;
}

BiPoly r_poly(const Partition& lambda, int n) {
    BiPoly p(Vars::QY, one_plus(1, n));
    for (auto [i, j] : lambda.boxes()) p *= qy(1, 1, 0) + qy(1, 2 * lambda.content(i, j), 1);
    return p;
}

LaurentPoly h_poly(const Partition& lambda) {
    LaurentPoly h(1);
    for (auto [i, j] : lambda.boxes()) h *= one_minus(4 * lambda.hook(i, j));
    return h;
}

LaurentPoly box_normalization(const Partition& lambda) {
    LaurentPoly h(1);
    for (auto [i, j] : lambda.boxes()) h *= one_plus(1, 2 * lambda.hook(i, j));
    return h;
}

BiPoly p_poly(int n, int k) {
    BiPoly a = qy(1, k - 2, 0) * (qy(1, 1, 0) + qy(1, 0, 1)) * one_plus_y(2 * (n - k - 2) + 1);
    BiPoly b = qy(1, n - k - 4, 0) * (qy(1, 3, 0) + qy(1, 0, 1)) * one_plus_y(2 * (k - 1) + 1);
    return a + b;
}

BiPoly q_poly(int n, int k) {
    auto m1 = [](int e) { return LaurentPoly::q(e) - LaurentPoly(1); };
    return p_poly(n, k) * (m1(2 * (k + 1)) * m1(2 * (n - k - 1))) + p_poly(n, n - k - 1) * (m1(2 * k) * m1(2 * (n - k)));
}

BiRational compact_two_row_sr(int k, int n) {
    const Partition a = part_of({k}), b = part_of({n - k});
    BiPoly num = s_poly(a, n) * r_poly(b, n) + r_poly(a, n) * s_poly(b, n);
    return BiRational(num, h_poly(a) * h_poly(b) * one_plus(1, n));
}

BiRational compact_two_row_factored(int k, int n, int y_shift) {
    const Partition a = part_of({k}), b = part_of({n - k});
    BiPoly num = qy(1, k - 1, 0) * s_poly(part_of({k - 1}), n) * s_poly(part_of({n - k - 1}), n);
    num *= qy(1, 1, 0) + qy(1, 0, 1);
    num *= one_plus(1, n - 2 * k);
    num *= one_plus_y(n + y_shift);
    return BiRational(num, h_poly(a) * h_poly(b) * one_plus(1, n));
}

BiRational compact_adjoint_pair(int n) {
    const Partition a{n - 1, 1};
    return BiRational(qy(1, 2, 0) * (r_poly(a, n) + s_poly(a, n)), h_poly(a));
}

BiRational compact_hook_summand(const Partition& a, const Partition& b, int n) {
    BiPoly num = qy(1, 2, 0) * (s_poly(a, n) * r_poly(b, n) + r_poly(a, n) * s_poly(b, n));
    return BiRational(num, h_poly(a) * h_poly(b) * one_plus(1, n));
}

BiRational compact_hook_pair_sr(int k, int n) {
    return compact_hook_summand(part_of({k}), part_of({n - k - 1, 1}), n) +
           compact_hook_summand(part_of({n - k - 1}), part_of({k, 1}), n);
}

BiRational compact_hook_pair_q(int k, int n) {
    BiPoly num = qy(1, 2, 0) * s_poly(part_of({k - 1}), n) * s_poly(part_of({n - k - 2}), n);
    num *= qy(1, 1, 0) + qy(1, 0, 1);
    num *= q_poly(n, k);
    return BiRational(num, h_poly(part_of({k + 1})) * h_poly(part_of({n - k})) * one_plus(1, n) * one_minus(2));
}

std::string DLabel::str() const {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + t.alpha.str() + "," + t.beta.str() + ")";
        if (t.split == Split::I) s += "^I";
        if (t.split == Split::II) s += "^II";
    }
    return s;
}

std::optional<DLabel> d_label(const Weight& lambda, const RootSystemSpec& spec) {
    if (spec.type != 'D' || spec.rank < 4) throw std::invalid_argument("Table 1 labels need D_n, n >= 4");
    const int n = spec.rank;
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (lambda[i] != 0) support.push_back(i);
    auto only = [&](std::initializer_list<std::pair<int, int>> want) {
        if (support.size() != want.size()) return false;
        for (auto [i, c] : want)
            if (lambda[i] != c) return false;
        return true;
    };
    auto one = [](Partition a, Partition b, Split s = Split::None) {
        DLabel l;
        l.terms.push_back({std::move(a), std::move(b), s});
        return l;
    };
    const int s1 = n - 2, s2 = n - 1;  // spin nodes
    if (support.empty()) return one(part_of({n}), Partition{});
    if (only({{0, 2}})) return one(Partition{n - 1, 1}, Partition{});
    for (int i = 1; 2 * i <= n - 2; ++i)
        if (only({{2 * i - 1, 1}})) return one(part_of({n - i}), part_of({i}));
    if (n % 2 == 0) {
        if (only({{s1, 2}})) return one(part_of({n / 2}), part_of({n / 2}), Split::I);
        if (only({{s2, 2}})) return one(part_of({n / 2}), part_of({n / 2}), Split::II);
    } else if (only({{s1, 1}, {s2, 1}})) {
        return one(part_of({(n + 1) / 2}), part_of({(n - 1) / 2}));
    }
    auto hook_pair = [&](int i) {
        DLabel l;
        l.terms.push_back({part_of({n - i - 1, 1}), part_of({i}), Split::None});
        l.terms.push_back({part_of({n - i - 1}), part_of({i, 1}), Split::None});
        return l;
    };
    for (int i = 1; 2 * i + 1 <= n - 2; ++i)
        if (only({{0, 1}, {2 * i, 1}})) return hook_pair(i);
    if (n % 2 == 0 && only({{0, 1}, {s1, 1}, {s2, 1}})) return hook_pair((n - 2) / 2);
    if (n % 2 == 1 && (only({{0, 1}, {s1, 2}}) || only({{0, 1}, {s2, 2}})))
        return one(part_of({(n - 1) / 2, 1}), part_of({(n - 1) / 2}));
    return std::nullopt;
}

LaurentPoly normalization_qq(const RootSystemSpec& spec) {
    LaurentPoly p(1);
    for (int d : spec.degrees) p *= one_minus(2 * d);
    return p;
}

LaurentPoly closed_form_rhs(const RootSystemSpec& spec, const Weight& lambda) {
    auto label = d_label(lambda, spec);
    if (!label) throw std::invalid_argument(format_weight(lambda, spec) + " has no Table 1 label");
    BiRational total(Vars::QY);
    for (const auto& t : label->terms) total += d_restriction_poly(t.alpha, t.beta, t.split);
    RationalFunction r = specialize_qy(total);
    r *= RationalFunction(normalization_qq(spec));
    try {
        return r.to_poly();
    } catch (const NonDivisible&) {
        throw NonDivisible("closed form for " + format_weight(lambda, spec) + " is not a polynomial");
    }
}

RationalFunction bold_c(int k, int n) {
    return specialize_qy(hook_content_poly(part_of({k}), part_of({n - k})) + hook_content_poly(part_of({n - k}), part_of({k})));
}

RationalFunction bold_c2(int k, int n) {
    auto pd = [](const Partition& a, const Partition& b) { return hook_content_poly(a, b) + hook_content_poly(b, a); };
    if (k == 0) return specialize_qy(pd(Partition{n - 1, 1}, Partition{}));
    return specialize_qy(pd(part_of({k, 1}), part_of({n - k - 1})) + pd(part_of({n - k - 1, 1}), part_of({k})));
}

RationalFunction ratio_recursion_pw(int k, int n) {
    LaurentPoly num = LaurentPoly::q(2) * one_plus(1, 2 * (n - 2 * k - 2)) * one_plus(1, 4 * k - 1) * one_minus(4 * n - 4 * k);
    LaurentPoly den = one_plus(1, 2 * n - 4 * k) * one_plus(1, 4 * n - 4 * k - 5) * one_minus(4 * k + 4);
    return RationalFunction(num, den);
}

RationalFunction ratio_t2kk(int k, int n) {
    LaurentPoly num = specialize_qy(q_poly(n, k));
    LaurentPoly den = LaurentPoly::q(2 * k - 6) * one_minus(4) * one_minus(4 * k + 4) * one_plus(1, 2 * n - 1) *
                      one_plus(1, 2 * n - 4 * k) * one_plus(1, 4 * n - 4 * k - 5);
    return RationalFunction(num, den);
}

RationalFunction ratio_remark(int k) {
    LaurentPoly num = LaurentPoly(2) * LaurentPoly::q(2) * one_plus(1, 4 * k - 5) * one_minus(4 * k + 4);
    LaurentPoly den = one_plus(1, 4) * one_plus(1, 4 * k - 1) * one_minus(4 * k);
    return RationalFunction(num, den);
}

}  // namespace reeder
