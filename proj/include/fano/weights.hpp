#pragma once

#include "fano/rational.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class WeightSystem {
public:
    WeightSystem() = default;
    explicit WeightSystem(std::vector<int> weights);

    std::size_t size() const { return weights_.size(); }
    int operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<int>& values() const { return weights_; }
    long long sum() const;
    Integer product() const;

    bool operator==(const WeightSystem&) const = default;

private:
    std::vector<int> weights_;
};

using Monomial = std::vector<int>;

// Graded-lex order on exponent vectors of one ambient: higher total
// exponent first, then lexicographically larger first.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialSupport {
    int degree = 0;
    std::set<Monomial, GradedLex> monomials;

    bool contains(const Monomial& m) const { return monomials.count(m) != 0; }
    bool empty() const { return monomials.empty(); }
    std::size_t size() const { return monomials.size(); }
    bool operator==(const MonomialSupport&) const = default;
};

long long weighted_degree(const Monomial& m, const WeightSystem& w);

MonomialSupport monomials_of_degree(int d, const WeightSystem& w);

// Max of lcm(a_j, a_k) over unordered pairs j != k in `keep`.
long long max_pair_lcm(const WeightSystem& w, const std::vector<std::size_t>& keep);

// All indices of w except `dropped`.
std::vector<std::size_t> all_but(const WeightSystem& w, std::size_t dropped);

// d / prod(a) for a hypersurface, d1 d2 / prod(a) in codimension two.
// Requires sum(a) - sum(d) = 1.
Rational anticanonical_cube(const WeightSystem& w, const std::vector<int>& degrees,
                            const std::string& label = {});

// Product of two monomials of the same ambient.
Monomial operator*(const Monomial& a, const Monomial& b);

Monomial unit_monomial(std::size_t n, std::size_t i, int e = 1);

bool divides(const Monomial& a, const Monomial& b);

// Renders "x0^2 y w^3" style, "1" for the empty monomial.
std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);

// Parses the rendering above. Throws std::invalid_argument on unknown names.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace fano
