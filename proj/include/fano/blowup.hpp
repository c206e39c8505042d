#pragma once

#include "fano/rational.hpp"
#include "fano/singularities.hpp"
#include "fano/weights.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace fano {

// Numerical classes on an n-fold obtained by a tower of weighted blowups,
// written in the pullback basis {A, E_1, ..., E_k}.  The top product is
// diagonal: A^n = a_top, E_i^n = e_top_i and every mixed product vanishes.
template <class Scalar = Rational>
class BlowupLattice {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    struct Exceptional {
        std::string label;
        int r = 1;
        Scalar e_top;
        Scalar discrepancy;
    };

    explicit BlowupLattice(Scalar a_top, int dimension = 3)
        : a_top_(std::move(a_top)), dimension_(dimension) {
        if (dimension < 2) throw StructuralError("lattice dimension must be at least 2");
    }

    void add_exceptional(std::string label, int r, Scalar e_top, Scalar discrepancy) {
        exceptionals_.push_back({std::move(label), r, std::move(e_top), std::move(discrepancy)});
    }

    int dimension() const { return dimension_; }
    std::size_t rank() const { return 1 + exceptionals_.size(); }
    const Scalar& a_top() const { return a_top_; }
    const std::vector<Exceptional>& exceptionals() const { return exceptionals_; }

    Vector zero() const { return Vector::Constant(static_cast<Eigen::Index>(rank()), Scalar(0)); }
    Vector pullback() const {
        Vector v = zero();
        v(0) = Scalar(1);
        return v;
    }
    Vector exceptional(std::size_t i) const {
        if (i >= exceptionals_.size()) throw StructuralError("no such exceptional divisor");
        Vector v = zero();
        v(static_cast<Eigen::Index>(i + 1)) = Scalar(1);
        return v;
    }
    Vector cls(const Scalar& a, const std::vector<Scalar>& e) const {
        if (e.size() != exceptionals_.size())
            throw StructuralError("class has the wrong number of exceptional coefficients");
        Vector v = zero();
        v(0) = a;
        for (std::size_t i = 0; i < e.size(); ++i) v(static_cast<Eigen::Index>(i + 1)) = e[i];
        return v;
    }
    // -K of the top of the tower: A - sum discrepancy_i E_i.
    Vector anticanonical() const {
        Vector v = pullback();
        for (std::size_t i = 0; i < exceptionals_.size(); ++i)
            v(static_cast<Eigen::Index>(i + 1)) = -exceptionals_[i].discrepancy;
        return v;
    }

    Scalar product(const std::vector<Vector>& classes) const {
        if (classes.size() != static_cast<std::size_t>(dimension_))
            throw StructuralError("top product needs exactly dimension many classes");
        for (const auto& c : classes)
            if (static_cast<std::size_t>(c.size()) != rank())
                throw StructuralError("class dimension does not match the lattice");
        Scalar total(0);
        for (std::size_t b = 0; b < rank(); ++b) {
            Scalar term = b == 0 ? a_top_ : exceptionals_[b - 1].e_top;
            for (const auto& c : classes) term *= c(static_cast<Eigen::Index>(b));
            total += term;
        }
        return total;
    }

    Scalar triple(const Vector& c1, const Vector& c2, const Vector& c3) const {
        return product({c1, c2, c3});
    }

private:
    Scalar a_top_;
    int dimension_;
    std::vector<Exceptional> exceptionals_;
};

using Lattice = BlowupLattice<Rational>;
using DivisorClass = Lattice::Vector;

struct KawamataNumbers {
    Rational discrepancy;
    Rational e_cube;
};

KawamataNumbers kawamata_numbers(const QuotientSingularity& q);

// E^n of the exceptional divisor of the weighted blowup with weights
// (w_1, ..., w_n)/r at a smooth point of an n-fold quotient by Z_r:
// (-1)^(n-1) r^(n-1) / prod(w).
Rational weighted_blowup_top(int r, const std::vector<int>& weights);

// Base lattice with one Kawamata blowup at q.
Lattice kawamata_lattice(const Rational& a_cube, const QuotientSingularity& q);

// (-K)^3 after the Kawamata blowup at q: A^3 - 1/(r a (r-a)).
Rational b_cubed(const Rational& a_cube, const QuotientSingularity& q);

// Minimum weighted order over the support.  With `eliminated` set, the
// coordinate with weight 0 is the vertex v, the support must contain a
// tangent monomial v^k * x_eliminated, and the result is the order of
// x_eliminated: the minimum over the terms divisible by neither
// x_eliminated nor v^k.
Rational vanishing_order(const MonomialSupport& support, const std::vector<Rational>& weights,
                         std::optional<std::size_t> eliminated = std::nullopt);

// Blowup weights of the coordinates at q (vertex and eliminated get 0).
std::vector<Rational> kawamata_weights(const QuotientSingularity& q, std::size_t n);

// The equation after the point q has been moved to its vertex.
MonomialSupport chart_support(const MonomialSupport& support, const QuotientSingularity& q);

struct SectionLift {
    int degree = 0;
    Rational vanishing_order;
    Rational class_b;
    Rational class_e;
};

SectionLift section_lift(int degree, const Rational& order, int r);

// Lift of the coordinate section x_c at q.
SectionLift coordinate_lift(const MonomialSupport& support, const WeightSystem& w,
                            const QuotientSingularity& q, std::size_t c);

struct NefBound {
    Rational c;
    bool certified = false;
};

NefBound nef_bound_check(const std::vector<SectionLift>& lifts, const QuotientSingularity& q);

// (alpha A + sum beta_i E_i) . C~ from deg C = (A . C) and the (E_i . C~).
Rational curve_pairing(const Rational& alpha, const std::vector<Rational>& beta,
                       const Rational& degree, const std::vector<Rational>& e_dot);

}  // namespace fano
