#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"

#include <optional>

namespace reeder {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    // sum (i-1) lambda_i
    int n() const;
    int hook(int i, int j) const;
    int content(int i, int j) const { return j - i; }
    std::vector<std::pair<int, int>> boxes() const;
    Partition conjugate() const;
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

std::vector<Partition> partitions_of(int n);

// bar P_{B_n}(pi_{alpha,beta}; q, y), normalized by prod (1 - q^{d_i}) of B_n
BiRational hook_content_poly(const Partition& alpha, const Partition& beta);

enum class Split { None, I, II };
// bar P_D of the restriction of pi_{alpha,beta}: sum rule, or the split rule when alpha = beta
BiRational d_restriction_poly(const Partition& alpha, const Partition& beta, Split split = Split::None);

// S_lambda, R_lambda, H(lambda), P(n,k), Q(n,k) literally as displayed; S and R carry the (q^n + 1) factor
BiPoly s_poly(const Partition& lambda, int n);
BiPoly r_poly(const Partition& lambda, int n);
LaurentPoly h_poly(const Partition& lambda);
BiPoly p_poly(int n, int k);
BiPoly q_poly(int n, int k);
// prod over boxes of (1 + q^{2h}); relates H (built from q^{4h}) to the hook-content denominators
LaurentPoly box_normalization(const Partition& lambda);

// compact displays for bar P_D
BiRational compact_two_row_sr(int k, int n);                    // (S_k R_{n-k} + R_k S_{n-k}) / (H H (1+q^n))
BiRational compact_two_row_factored(int k, int n, int y_shift);  // ... (q+y)(q^{n-2k}+1)(1+y q^{n+y_shift}) / ...
BiRational compact_adjoint_pair(int n);                          // q^2 (R_{(n-1,1)} + S_{(n-1,1)}) / H(n-1,1)
BiRational compact_hook_summand(const Partition& a, const Partition& b, int n);  // q^2 (S_a R_b + R_a S_b) / (H H (1+q^n))
BiRational compact_hook_pair_sr(int k, int n);                   // sum of the summands for ((k),(n-k-1,1)) and ((n-k-1),(k,1))
BiRational compact_hook_pair_q(int k, int n);                    // the Q(n,k) form

struct DLabelTerm {
    Partition alpha, beta;
    Split split = Split::None;
};
struct DLabel {
    std::vector<DLabelTerm> terms;
    std::string str() const;
};

// Table 1 label of a small weight of D_n
std::optional<DLabel> d_label(const Weight& lambda, const RootSystemSpec& spec);

// prod (1 - q^{2 d_i}) over the degrees of W
LaurentPoly normalization_qq(const RootSystemSpec& spec);

// P_W(V^0_lambda; q^2, q) for D_n from the hook-content formula and the Table 1 label
LaurentPoly closed_form_rhs(const RootSystemSpec& spec, const Weight& lambda);

// bold C_{k,n} and bold C_{2|k,n} at (q^2, q), unsplit: at n = 2k the value is twice the split one,
// and at n = 2k+1 C_{2|k,n} counts the coinciding summands twice
RationalFunction bold_c(int k, int n);
RationalFunction bold_c2(int k, int n);
// the displayed factors C_{k+1,n}/C_{k,n}, C_{2|k,n}/C_{k,n}, and T_k^{2k} = C_{k,2k}/C_{k-1,2k}
RationalFunction ratio_recursion_pw(int k, int n);
RationalFunction ratio_t2kk(int k, int n);
RationalFunction ratio_remark(int k);

}  // namespace reeder
