#pragma once

#include "fano/blowup.hpp"
#include "fano/catalog.hpp"
#include "fano/singularities.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace fano {

struct DispatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using FlagSet = std::set<std::string>;

enum class CenterKind { Curve, SmoothPoint, QuotientPoint, CAxPoint };

struct Center {
    CenterKind kind = CenterKind::SmoothPoint;
    std::string locus;      // "p2p4", "p4", "smooth", "curve"
    std::string condition;  // catalog branch this center was built for, if any
    Rational degree;        // curves only
    std::optional<Rational> gamma_sq_bound;
    std::optional<QuotientSingularity> quotient;
    std::optional<CAxPoint> cax;
    std::optional<CenterEntry> data;  // catalog inputs for special smooth points and curves
};

Center curve_center(const Rational& degree, std::optional<Rational> gamma_sq = std::nullopt);
Center smooth_center();
Center quotient_center(const QuotientSingularity& q);
Center cax_center(const CAxPoint& p);

struct CurveDegree {
    Rational deg;
    Rational a_cube;
};

// 3(A^3) - 2 deg + Gamma^2 for a curve on a surface in |A|, the cycle
// inequality (deg Delta - Gamma.Delta) for a pencil with residual curve
// Delta, or 2/m - 1 when the pencil restricts to m Gamma.
struct CurveGamma {
    enum class Form { SelfIntersection, CycleDelta, DoublePencil };
    Form form = Form::SelfIntersection;
    Rational a_cube;
    Rational deg;
    Rational gamma_sq;
    Rational delta_degree;
    int multiplicity = 2;
};

struct Isolation {
    long long bound = 0;
    Rational limit;
};

struct SurfacePair {
    int a1 = 0;
    Rational b_cube;
    MonomialSupport gamma_support;
    bool irreducible = false;
};

struct NefDivisor {
    std::vector<SectionLift> lifts;
    QuotientSingularity q;
    Rational m_b2;
    Rational c;
};

// [[s - m, m], [m, t - s - m]]: Gamma^2 + Gamma.C = s and (Gamma + C)^2 = t.
struct NegDefMatrix {
    Rational s;
    Rational t;
    Rational parameter_floor;

    std::array<std::array<Rational, 2>, 2> at(const Rational& m) const;
};

struct InfiniteCurves {
    Rational b_dot_c;
    Rational e_dot_c;
};

// min over gamma in [0,1] and real delta of
// 4(1 - gamma) - (A|_S - gamma Gamma - delta Delta)^2.
struct QuadraticBound {
    Rational a_sq;
    Rational gamma_degree;
    Rational delta_degree;
    Rational gamma_sq;
    Rational gamma_delta;
    Rational delta_sq;
    Rational minimum;
};

struct Untwist {
    std::string tag;  // QI | EI | II | link
    std::optional<int> counterpart;
    std::optional<ExtractionDescriptor> extraction;
};

using Certificate = std::variant<CurveDegree, CurveGamma, Isolation, SurfacePair, NefDivisor,
                                 NegDefMatrix, InfiniteCurves, QuadraticBound, Untwist>;

struct Verdict {
    bool excluded = false;
    std::string method;
    std::optional<Rational> witness;
};

std::string method_of(const Certificate& c);

Verdict curve_degree_test(const Rational& deg, const Rational& a_cube);
Verdict curve_gamma_test(const Rational& a_cube, const Rational& deg, const Rational& gamma_sq);
Verdict curve_gamma_verdict(const CurveGamma& c);
Verdict isolation_test(const WeightSystem& w, std::optional<std::size_t> dropped,
                       const Rational& a_cube);
Verdict isolation_verdict(const Isolation& iso);
Verdict surface_pair_test(int a1, const Rational& b_cube, const MonomialSupport& gamma_support,
                          bool irreducibility_flag);
Verdict nef_divisor_verdict(const NefDivisor& n);
Verdict infinite_curves_test(const Rational& b_dot_c, const Rational& e_dot_c);
Verdict quadratic_bound_verdict(const QuadraticBound& q);

bool negdef2(const std::array<std::array<Rational, 2>, 2>& m);

// Negative-definite at the floor and for every larger m.
bool negdef_for_all_from_floor(const NegDefMatrix& m);
Verdict negdef_verdict(const NegDefMatrix& m);

QuadraticBound quadratic_bound(const Rational& a_sq, const Rational& gamma_degree,
                               const Rational& delta_degree, const Rational& gamma_sq);

// Max lcm(a_j, a_k) over k != j, maximized over the anchors j.
long long anchored_isolation_bound(const WeightSystem& w, const std::vector<int>& anchors);

// The drop-vertex isolation used for general smooth points: the smallest
// bound over coordinates x_m with a pure power in the equation.
Isolation default_isolation(const FamilyRecord& gprime);

// Equation support of the general member adjusted by condition flags.
MonomialSupport flagged_support(const FamilyRecord& gprime, const FlagSet& flags);

// The monomial a condition flag refers to, e.g. "y z^2" for exists-wci(1,1,2) on No.19.
std::optional<Monomial> condition_monomial(const FamilyRecord& gprime, const std::string& flag);

// Restriction of the equation to (x2, x3, w) as in the surface test; families
// whose point is normalized to a vertex drop its pure power.
MonomialSupport gamma_polynomial(const FamilyRecord& gprime, const FlagSet& flags = {});

bool no_common_variable(const MonomialSupport& s);

bool qi_eligible(const FamilyRecord& gprime, const QuotientSingularity& q, const FlagSet& flags);

struct Dispatch {
    Certificate certificate;
    Verdict verdict;
};

Dispatch dispatch(const FamilyRecord& gprime, const Center& center, const FlagSet& flags);

// The condition strings under which a quotient point is treated separately
// (empty list: unconditional).
std::vector<std::string> branch_conditions(int family_id, const std::string& locus);

// The Untwist tag assigned to the point under the branch, or "none".
std::string link_tag(int family_id, const std::string& locus, const std::string& condition);

}  // namespace fano
