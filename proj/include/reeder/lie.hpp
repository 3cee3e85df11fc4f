#pragma once

#include "reeder/poly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reeder {

constexpr int kMaxRank = 8;

template <class Tag>
struct Coords {
    std::array<int16_t, kMaxRank> v{};

    int operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    int16_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

    Coords& operator+=(const Coords& o) {
        for (int i = 0; i < kMaxRank; ++i) v[i] = static_cast<int16_t>(v[i] + o.v[i]);
        return *this;
    }
    Coords& operator-=(const Coords& o) {
        for (int i = 0; i < kMaxRank; ++i) v[i] = static_cast<int16_t>(v[i] - o.v[i]);
        return *this;
    }
    friend Coords operator+(Coords a, const Coords& b) { return a += b; }
    friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
    friend Coords operator*(int k, Coords a) {
        for (auto& x : a.v) x = static_cast<int16_t>(k * x);
        return a;
    }
    Coords operator-() const { return -1 * *this; }
    bool is_zero() const {
        for (auto x : v)
            if (x) return false;
        return true;
    }
    friend bool operator==(const Coords& a, const Coords& b) { return a.v == b.v; }
    friend bool operator!=(const Coords& a, const Coords& b) { return a.v != b.v; }
    friend bool operator<(const Coords& a, const Coords& b) { return a.v < b.v; }
};

struct WeightTag {};
struct CoweightTag {};
// fundamental-weight coordinates (lambda, alpha_i^vee)
using Weight = Coords<WeightTag>;
// values on the simple roots (alpha_i, phi)
using Coweight = Coords<CoweightTag>;

struct CoordsHash {
    template <class T>
    std::size_t operator()(const Coords<T>& c) const {
        uint64_t h = 1469598103934665603ull;
        for (auto x : c.v) {
            h ^= static_cast<uint16_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using IntVec = std::vector<long>;

struct RootSystemSpec {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<int> sym;                  // (alpha_i, alpha_i) = 2 sym[i]
    long det = 1;
    std::vector<std::vector<long>> adj;    // det * cartan^{-1}
    std::vector<IntVec> pos_roots;         // simple-root coefficients, sorted by height
    std::vector<Weight> pos_roots_w;       // same roots in fundamental coordinates
    std::vector<int> root_norm;            // (alpha, alpha) / 2
    Weight rho;
    Weight theta;
    Weight theta_s;
    std::vector<int> exponents;
    std::vector<int> degrees;
    Int weyl_order;
    IntVec two_rho_root;  // simple-root coefficients of 2 rho

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    int dim() const { return rank + 2 * static_cast<int>(pos_roots.size()); }
    int max_sym() const;

    Weight fundamental(int i) const;
    Weight simple_root(int i) const;
    Weight reflect(const Weight& w, int i) const;
    Coweight reflect(const Coweight& c, int i) const;
    Coweight fundamental_coweight(int i) const;

    // det * simple-root coordinates
    IntVec root_coords_scaled(const Weight& w) const;
    // simple-root coordinates if w lies in the root lattice
    std::optional<IntVec> root_coords(const Weight& w) const;
    bool in_root_lattice(const Weight& w) const { return root_coords(w).has_value(); }
    // det * (a, b)
    long inner_scaled(const Weight& a, const Weight& b) const;
    // det * (w, phi)
    long pair_scaled(const Weight& w, const Coweight& phi) const;
    // (w, phi), throws if not integral
    long pair(const Weight& w, const Coweight& phi) const;
    // 2 (rho, phi), always integral
    long two_rho_pair(const Coweight& phi) const;
    // (alpha, phi) for alpha given by simple-root coefficients
    long root_pair(const IntVec& alpha, const Coweight& phi) const;

    bool is_dominant(const Weight& w) const;
    int height(const Weight& w) const;  // requires root lattice
};

RootSystemSpec build_root_system(char type, int rank);

struct OrbitPoint {
    Weight weight;
    std::vector<int> witness;  // simple reflection indices, applied right to left: w = s_{i1} ... s_{ik}
};

class Orbit {
public:
    Orbit() = default;
    std::size_t size() const { return points_.size(); }
    const Weight& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Weight>& points() const { return points_; }
    // reduced word of a coset representative sending the seed to point i
    std::vector<int> witness(std::size_t i) const;
    OrbitPoint point(std::size_t i) const { return {points_[i], witness(i)}; }

private:
    friend Orbit weyl_orbit(const Weight&, const RootSystemSpec&, std::size_t);
    std::vector<Weight> points_;
    std::vector<int32_t> parent_;
    std::vector<int8_t> gen_;
};

class OrbitCapExceeded : public std::runtime_error {
public:
    explicit OrbitCapExceeded(const std::string& w) : std::runtime_error(w) {}
};

constexpr std::size_t kDefaultOrbitCap = 50'000'000;

Orbit weyl_orbit(const Weight& lambda, const RootSystemSpec& spec, std::size_t cap = kDefaultOrbitCap);

// apply a word s_{w0} s_{w1} ... (rightmost first)
Weight apply_word(const std::vector<int>& word, Weight w, const RootSystemSpec& spec);
Coweight apply_word(const std::vector<int>& word, Coweight c, const RootSystemSpec& spec);

std::vector<Coweight> stabilizer_orbit(const Weight& lambda, const Coweight& omega, const RootSystemSpec& spec);
std::vector<Coweight> coweight_orbit(const Coweight& omega, const RootSystemSpec& spec);

struct Reduced {
    Weight lambda;
    int sign;
};
// dot-action reduction of mu: nullopt when mu + rho is singular
std::optional<Reduced> dominant_reduce(const Weight& mu, const RootSystemSpec& spec);

bool dominance_leq(const Weight& mu, const Weight& lambda, const RootSystemSpec& spec);
bool is_small(const Weight& lambda, const RootSystemSpec& spec);
// dominant weights mu <= top, sorted by height then coordinates
std::vector<Weight> dominant_below(const Weight& top, const RootSystemSpec& spec);
std::vector<Weight> enumerate_small(const RootSystemSpec& spec);
std::size_t stabilizer_order_degrees_product(const Weight& lambda, const RootSystemSpec& spec);

std::vector<int> minuscule_coweights(const RootSystemSpec& spec);
bool is_minuscule(const Coweight& c, const RootSystemSpec& spec);
Coweight quasi_minuscule_coweight(const RootSystemSpec& spec);

// "w1+2*w3" style, 0 for the zero weight
std::string format_weight(const Weight& w, const RootSystemSpec& spec);
Weight parse_weight(const std::string& s, const RootSystemSpec& spec);
std::vector<int> weight_vector(const Weight& w, const RootSystemSpec& spec);
Weight weight_from_vector(const std::vector<int>& v, const RootSystemSpec& spec);

// ambient coordinates for classical types, doubled to stay integral (A uses rank+1 coordinates scaled by rank+1)
struct Ambient {
    std::vector<long> coords;
    long scale;
};
Ambient to_ambient(const Weight& w, const RootSystemSpec& spec);
Weight from_ambient(const std::vector<long>& coords, long scale, const RootSystemSpec& spec);
Weight from_eps(const std::vector<int>& eps, const RootSystemSpec& spec);

// E6 diagram involution 1<->6, 3<->5
Weight e6_involution(const Weight& w);

// Weyl group elements: matrices on fundamental coordinates
std::size_t subsystem_weyl_order(const RootSystemSpec& spec, const std::vector<int>& simple_subset);

}  // namespace reeder
