#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"

#include <map>
#include <string>

namespace reeder::typed {

class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& w) : std::invalid_argument(w) {}
};

// scalar coefficients
LaurentPoly r(int n);
LaurentPoly s(int n);
LaurentPoly b(int k, int n);
LaurentPoly d(int k, int n);
LaurentPoly d_closed(int k, int n);

// |Omega_0^{k,n}| and Theta(n,k,h) = |Omega_0^{k-h,n-2h}|, Phi(n,k,h) = Theta(n-1,k,h)
Int omega0_count(int k, int n);
Int theta_count(int n, int k, int h);
Int phi_count(int n, int k, int h);

// coefficients of C_h in the reduced relation for omega_{2k}
LaurentPoly lambda_kk(int k, int n);         // summation form
LaurentPoly lambda_kk_closed(int k, int n);  // (q^{4k}-1)(q^{4(n-k)-1}+1) / (q^{2(n-1)}(q^2-1))
LaurentPoly lambda_zero(int k, int n);
LaurentPoly lambda_coeff(int h, int k, int n);

// coefficients in the reduced relation for omega_1 + omega_{2k+1}: at C_{2|h}, at C_h, and at C_{k+1}
LaurentPoly lambda2_2h(int h, int k, int n);
LaurentPoly lambda2_kp1(int k, int n);
LaurentPoly lambda2_kp1_closed(int k, int n);
LaurentPoly lambda2(int h, int k, int n);

long a_int(int h, int k, int n);
long e_int(int h, int k, int n);

// closed forms at (q^2, q): C_{k,n} with the split value at n = 2k, C_{2|k,n} counting each D-irrep once
RationalFunction c_value(int k, int n);
RationalFunction c2_value(int k, int n);
RationalFunction t_ratio(int k, int n);
// C(k,n,q) / D(k,n,q); at n = 2k the doubled variant for 2 omega_n
RationalFunction cd_ratio(int k, int n);

// one reduced relation as coefficients on C_h (key h) and C_{2|h} (key -1-h)
using ReducedRelation = std::map<int, LaurentPoly>;
ReducedRelation relation_omega2k(int k, int n);
ReducedRelation relation_omega1(int k, int n);
// the same relations extracted from the minuscule recurrence of D_n with the spin images merged
ReducedRelation extracted_omega2k(int k, int n);
ReducedRelation extracted_omega1(int k, int n);

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    // printed statements that do not hold; informational, they do not fail the suite
    std::vector<Check> discrepancies;
    bool pass() const;
    std::size_t failures() const;
};

struct SuiteRange {
    int max_k = 5;
    int max_n = 12;
    int max_extract_n = 8;  // stembridge extraction is limited by kMaxRank
};

SuiteReport suite_d_coeffs(const SuiteRange& range = {});
SuiteReport suite_prop45(const SuiteRange& range = {});
SuiteReport suite_prop47(const SuiteRange& range = {});
SuiteReport suite_final(const SuiteRange& range = {});
SuiteReport suite_e6_symmetry();
SuiteReport run_suite(const std::string& name, const SuiteRange& range = {});
std::vector<std::string> suite_names();

}  // namespace reeder::typed
