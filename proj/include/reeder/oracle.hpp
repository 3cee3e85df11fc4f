#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"

#include <unordered_map>

namespace reeder {

class OracleCapExceeded : public std::runtime_error {
public:
    explicit OracleCapExceeded(const std::string& w) : std::runtime_error(w) {}
};

constexpr int kDefaultOracleDimCap = 60;

// graded character of the exterior algebra, weight -> polynomial in q
// rows hold prod_{alpha in Phi} (1 + q e^alpha); the Cartan factor (1+q)^rank is applied on read
class WeightPolyMap {
public:
    std::size_t size() const { return index_.size(); }
    int rank() const { return rank_; }
    bool contains(const Weight& w) const { return index_.count(w) != 0; }
    LaurentPoly at(const Weight& w) const;
    // without the Cartan factor
    LaurentPoly root_part(const Weight& w) const;
    std::vector<Weight> weights() const;
    Int total_dimension() const;

private:
    friend WeightPolyMap graded_exterior_character(const RootSystemSpec&, int);
    friend LaurentPoly extract_graded_multiplicity(const WeightPolyMap&, const Weight&, const RootSystemSpec&, std::size_t);
    const int64_t* row(const Weight& w) const;
    int rank_ = 0;
    int width_ = 1;
    std::unordered_map<Weight, uint32_t, CoordsHash> index_;
    std::vector<int64_t> rows_;
};

WeightPolyMap graded_exterior_character(const RootSystemSpec& spec, int dim_cap = kDefaultOracleDimCap);

// alternating sum over W of cm[w(lambda + rho) - rho]
LaurentPoly extract_graded_multiplicity(const WeightPolyMap& cm, const Weight& lambda, const RootSystemSpec& spec,
                                        std::size_t weyl_cap = kDefaultOrbitCap);

// dominant weight multiplicities of V_lambda by Freudenthal's recursion
std::unordered_map<Weight, long, CoordsHash> freudenthal_dominant(const Weight& lambda, const RootSystemSpec& spec);
long freudenthal_zero_mult(const Weight& lambda, const RootSystemSpec& spec);

Int weyl_dimension(const Weight& lambda, const RootSystemSpec& spec);
// dominant conjugate under the linear action
Weight dominant_conjugate(Weight w, const RootSystemSpec& spec);

}  // namespace reeder
