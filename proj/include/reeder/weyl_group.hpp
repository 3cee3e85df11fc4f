#pragma once

#include "reeder/lie.hpp"
#include "reeder/poly.hpp"

#include <unordered_map>

namespace reeder {

constexpr std::size_t kDefaultGroupCap = 200'000;

// characteristic polynomial det(t - w), coefficients c_0 .. c_n
using CharPoly = std::vector<long>;

// one conjugacy class as seen by the Molien sum
struct ClassData {
    Int size;
    long chi = 0;
    CharPoly charpoly;
};

// the reflection representation of W by integer matrices on fundamental coordinates
class WeylGroup {
public:
    struct ConjugacyClass {
        std::size_t rep;
        std::size_t size;
        CharPoly charpoly;
        int element_order;
        bool reflection;
        bool long_reflection;  // reflection in a long root (all roots long when simply laced)
    };

    int rank() const { return rank_; }
    std::size_t order() const { return lengths_.size(); }
    const int16_t* matrix(std::size_t i) const { return mats_.data() + i * static_cast<std::size_t>(rank_ * rank_); }
    int length(std::size_t i) const { return lengths_[i]; }
    Weight apply(std::size_t i, const Weight& w) const;
    // the element w with w(rho) = image_of_rho
    std::size_t find(const Weight& image_of_rho) const;
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    // class of the simple reflection s_i
    std::size_t simple_reflection_class(int i) const { return class_of_[simple_[static_cast<std::size_t>(i)]]; }

private:
    friend WeylGroup build_weyl_group(const RootSystemSpec&, std::size_t);
    int rank_ = 0;
    std::vector<int16_t> mats_;
    std::vector<int> lengths_;
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> simple_;
    std::vector<ConjugacyClass> classes_;
    std::unordered_map<Weight, std::size_t, CoordsHash> index_;
};

WeylGroup build_weyl_group(const RootSystemSpec& spec, std::size_t cap = kDefaultGroupCap);

using ClassFunction = std::vector<long>;

struct Irreducible {
    ClassFunction values;
    long degree = 0;
    LaurentPoly fake_degree;
    int b = 0;
    std::string label;  // phi_{d,b} with ' and '' for coinciding pairs
};

struct CharacterTable {
    std::vector<Irreducible> irreducibles;
    std::size_t index_of(const std::string& label) const;
};

class CharacterTableError : public std::runtime_error {
public:
    explicit CharacterTableError(const std::string& w) : std::runtime_error(w) {}
};

Int inner_product(const WeylGroup& g, const ClassFunction& a, const ClassFunction& b);
// irreducible characters by decomposing tensor, exterior, symmetric and permutation characters
CharacterTable character_table(const WeylGroup& g, const RootSystemSpec& spec);

std::vector<ClassData> class_data(const WeylGroup& g, const ClassFunction& chi);
// prod (1 - q^{d_i}) |W|^{-1} sum size chi(w) det(1 + y w) / det(1 - q w)
BiPoly molien_pw(const std::vector<ClassData>& classes, const RootSystemSpec& spec);
BiPoly molien_pw(const std::vector<ClassData>& classes, const std::vector<int>& degrees, const Int& order);

// Kostant's q-analogue of the zero weight multiplicity, sum_w sgn(w) P_q(w(lambda + rho) - rho)
LaurentPoly kostant_zero_weight(const Weight& lambda, const RootSystemSpec& spec);
// trace of the reflection s_alpha on the zero weight space, from the alpha-strings through 0
long zero_weight_reflection_trace(const Weight& lambda, const IntVec& alpha, const RootSystemSpec& spec);
// trace on the zero weight space of s_{b_1} ... s_{b_r} for mutually strongly orthogonal roots b_i
long zero_weight_trace(const Weight& lambda, const std::vector<Weight>& roots, const RootSystemSpec& spec);
// one product of strongly orthogonal reflections for each class reached that way
std::vector<std::pair<std::size_t, std::vector<Weight>>> strongly_orthogonal_classes(const RootSystemSpec& spec, const WeylGroup& g);

struct ZeroWeightDecomposition {
    std::vector<std::pair<std::size_t, int>> parts;  // irreducible index, multiplicity
    ClassFunction character;
    std::vector<std::string> labels;
};

// the W-module V^0_lambda, pinned down by graded harmonic multiplicities and traces of strongly orthogonal reflection products
ZeroWeightDecomposition zero_weight_character(const Weight& lambda, const RootSystemSpec& spec, const WeylGroup& g,
                                              const CharacterTable& table);

}  // namespace reeder
