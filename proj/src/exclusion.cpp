#include "fano/exclusion.hpp"

#include "fano/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fano {

Center curve_center(const Rational& degree, std::optional<Rational> gamma_sq) {
    if (degree <= 0) throw StructuralError("curve degree must be positive");
    Center c;
    c.kind = CenterKind::Curve;
    c.locus = "curve";
    c.degree = degree;
    c.gamma_sq_bound = std::move(gamma_sq);
    return c;
}

Center smooth_center() {
    Center c;
    c.kind = CenterKind::SmoothPoint;
    c.locus = "smooth";
    return c;
}

Center quotient_center(const QuotientSingularity& q) {
    Center c;
    c.kind = CenterKind::QuotientPoint;
    c.locus = q.locus;
    c.quotient = q;
    return c;
}

Center cax_center(const CAxPoint& p) {
    Center c;
    c.kind = CenterKind::CAxPoint;
    c.locus = "p" + std::to_string(p.vertex);
    c.cax = p;
    return c;
}

std::array<std::array<Rational, 2>, 2> NegDefMatrix::at(const Rational& m) const {
    return {{{s - m, m}, {m, t - s - m}}};
}

std::string method_of(const Certificate& c) {
    struct Visitor {
        std::string operator()(const CurveDegree&) const { return "curve-degree"; }
        std::string operator()(const CurveGamma& g) const {
            switch (g.form) {
                case CurveGamma::Form::SelfIntersection: return "curve-gamma";
                case CurveGamma::Form::CycleDelta: return "curve-cycle";
                case CurveGamma::Form::DoublePencil: return "curve-double";
            }
            return "curve-gamma";
        }
        std::string operator()(const Isolation&) const { return "isolation"; }
        std::string operator()(const SurfacePair&) const { return "surface-pair"; }
        std::string operator()(const NefDivisor&) const { return "nef-divisor"; }
        std::string operator()(const NegDefMatrix&) const { return "negdef-matrix"; }
        std::string operator()(const InfiniteCurves&) const { return "infinite-curves"; }
        std::string operator()(const QuadraticBound&) const { return "quadratic-bound"; }
        std::string operator()(const Untwist&) const { return "untwist"; }
    };
    return std::visit(Visitor{}, c);
}

Verdict curve_degree_test(const Rational& deg, const Rational& a_cube) {
    return {deg >= a_cube, "curve-degree", deg - a_cube};
}

Verdict curve_gamma_test(const Rational& a_cube, const Rational& deg, const Rational& gamma_sq) {
    const Rational w = 3 * a_cube - 2 * deg + gamma_sq;
    return {gamma_sq < 0 && w <= 0, "curve-gamma", w};
}

Verdict curve_gamma_verdict(const CurveGamma& c) {
    switch (c.form) {
        case CurveGamma::Form::SelfIntersection:
            return curve_gamma_test(c.a_cube, c.deg, c.gamma_sq);
        case CurveGamma::Form::CycleDelta: {
            // Gamma.Delta = deg Gamma - Gamma^2 must dominate deg Delta.
            const Rational gamma_delta = c.deg - c.gamma_sq;
            const Rational w = c.delta_degree - gamma_delta;
            return {c.delta_degree > 0 && w <= 0, "curve-cycle", w};
        }
        case CurveGamma::Form::DoublePencil: {
            const Rational w = frac(2, c.multiplicity) - 1;
            return {c.multiplicity >= 2 && w <= 0, "curve-double", w};
        }
    }
    throw StructuralError("unknown curve certificate form");
}

Verdict isolation_verdict(const Isolation& iso) {
    return {Rational(iso.bound) <= iso.limit, "isolation", Rational(iso.bound) - iso.limit};
}

Verdict isolation_test(const WeightSystem& w, std::optional<std::size_t> dropped,
                       const Rational& a_cube) {
    std::vector<std::size_t> keep;
    if (dropped) keep = all_but(w, *dropped);
    else
        for (std::size_t i = 0; i < w.size(); ++i) keep.push_back(i);
    return isolation_verdict({max_pair_lcm(w, keep), 4 / a_cube});
}

Verdict surface_pair_test(int a1, const Rational& b_cube, const MonomialSupport& gamma_support,
                          bool irreducibility_flag) {
    if (!irreducibility_flag)
        throw DispatchError("surface pair: the curve cut by S and T is not irreducible; "
                            "use the family-specific certificate for this branch");
    if (gamma_support.empty()) throw DispatchError("surface pair: empty curve support");
    const Rational w = Rational(a1) * a1 * b_cube;
    return {w <= 0, "surface-pair", w};
}

Verdict nef_divisor_verdict(const NefDivisor& n) {
    const NefBound bound = nef_bound_check(n.lifts, n.q);
    return {bound.certified && n.m_b2 <= 0, "nef-divisor", n.m_b2};
}

Verdict infinite_curves_test(const Rational& b_dot_c, const Rational& e_dot_c) {
    return {b_dot_c <= 0 && e_dot_c > 0, "infinite-curves", b_dot_c};
}

bool negdef2(const std::array<std::array<Rational, 2>, 2>& m) {
    if (m[0][1] != m[1][0]) throw StructuralError("negdef2: matrix is not symmetric");
    return m[0][0] < 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0;
}

bool negdef_for_all_from_floor(const NegDefMatrix& m) {
    // Leading entry s - m decreases in m; det = s(t - s) - t m is affine in m.
    if (!negdef2(m.at(m.parameter_floor))) return false;
    return -m.t >= 0;
}

Verdict negdef_verdict(const NegDefMatrix& m) {
    const auto at_floor = m.at(m.parameter_floor);
    const Rational det = at_floor[0][0] * at_floor[1][1] - at_floor[0][1] * at_floor[1][0];
    return {negdef_for_all_from_floor(m), "negdef-matrix", det};
}

QuadraticBound quadratic_bound(const Rational& a_sq, const Rational& gamma_degree,
                               const Rational& delta_degree, const Rational& gamma_sq) {
    QuadraticBound q;
    q.a_sq = a_sq;
    q.gamma_degree = gamma_degree;
    q.delta_degree = delta_degree;
    q.gamma_sq = gamma_sq;
    // A|_S = Gamma + Delta.
    q.gamma_delta = gamma_degree - gamma_sq;
    q.delta_sq = delta_degree - q.gamma_delta;
    if (q.delta_sq >= 0) throw DispatchError("quadratic bound: Delta^2 must be negative");

    // f = c2 delta^2 + c1(gamma) delta + c0(gamma); minimizing over delta
    // leaves g(gamma) = c0 - c1^2 / (4 c2), a quadratic in gamma.
    const Rational c2 = -q.delta_sq;
    auto g = [&](const Rational& gamma) -> Rational {
        const Rational c1 = 2 * delta_degree - 2 * gamma * q.gamma_delta;
        const Rational c0 = 4 * (1 - gamma) - a_sq + 2 * gamma * gamma_degree -
                            gamma * gamma * gamma_sq;
        return c0 - c1 * c1 / (4 * c2);
    };
    Rational best = std::min(g(Rational(0)), g(Rational(1)));
    // g(gamma) = p gamma^2 + r gamma + const; recover p and r from three samples.
    const Rational g0 = g(Rational(0));
    const Rational g1 = g(Rational(1));
    const Rational gh = g(frac(1, 2));
    const Rational p = 2 * (g1 + g0 - 2 * gh);
    const Rational r = g1 - g0 - p;
    if (p > 0) {
        const Rational vertex = -r / (2 * p);
        if (vertex > 0 && vertex < 1) best = std::min(best, g(vertex));
    }
    q.minimum = best;
    return q;
}

Verdict quadratic_bound_verdict(const QuadraticBound& q) {
    return {q.minimum >= 0, "quadratic-bound", q.minimum};
}

long long anchored_isolation_bound(const WeightSystem& w, const std::vector<int>& anchors) {
    long long best = 0;
    for (int j : anchors) {
        if (j < 0 || static_cast<std::size_t>(j) >= w.size())
            throw ValidationError("isolation anchor out of range");
        for (std::size_t k = 0; k < w.size(); ++k)
            if (k != static_cast<std::size_t>(j)) best = std::max(best, std::lcm<long long>(w[j], w[k]));
    }
    return best;
}

Isolation default_isolation(const FamilyRecord& gp) {
    const MonomialSupport support = standard_support(gp);
    const int d = gp.degrees.at(0);
    const std::size_t n = gp.weights.size();
    std::optional<long long> best;
    for (std::size_t m = 0; m + 1 < n; ++m) {
        if (d % gp.weights[m] != 0) continue;
        if (!support.contains(unit_monomial(n, m, d / gp.weights[m]))) continue;
        const long long bound = max_pair_lcm(gp.weights, all_but(gp.weights, m));
        if (!best || bound < *best) best = bound;
    }
    if (!best) throw DispatchError("family " + std::to_string(gp.id) + ": no pure power to drop");
    return {*best, 4 / anticanonical_cube(gp)};
}

namespace {

struct WciFlag {
    int family;
    const char* type;
    const char* monomial;
};

// A WCI curve of the given type through the point exists iff the monomial is absent.
const std::vector<WciFlag>& wci_flags() {
    static const std::vector<WciFlag> flags{
        {19, "(1,1,2)", "y z^2"}, {23, "(1,1,4)", "y^2 z^2"}, {50, "(1,3,4)", "y^2 t^2"}};
    return flags;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

std::string inside_parens(const std::string& s) {
    const auto open = s.find('(');
    const auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw DispatchError("malformed condition flag '" + s + "'");
    return s.substr(open + 1, close - open - 1);
}

enum class FlagEffect { None, Present, Absent };

FlagEffect effect_of(const std::string& flag) {
    if (starts_with(flag, "monomial-present(") || starts_with(flag, "not-exists-wci("))
        return FlagEffect::Present;
    if (starts_with(flag, "monomial-absent(") || starts_with(flag, "exists-wci("))
        return FlagEffect::Absent;
    return FlagEffect::None;
}

}  // namespace

std::optional<Monomial> condition_monomial(const FamilyRecord& gp, const std::string& flag) {
    const auto names = coordinate_names(gp.weights);
    if (starts_with(flag, "monomial-present(") || starts_with(flag, "monomial-absent("))
        return parse_monomial(inside_parens(flag), names);
    if (starts_with(flag, "exists-wci(") || starts_with(flag, "not-exists-wci(")) {
        const std::string type = "(" + inside_parens(flag) + ")";
        for (const auto& f : wci_flags())
            if (f.family == gp.id && type == f.type) return parse_monomial(f.monomial, names);
        throw DispatchError("family " + std::to_string(gp.id) + ": no WCI curve criterion for " +
                            flag);
    }
    return std::nullopt;
}

MonomialSupport flagged_support(const FamilyRecord& gp, const FlagSet& flags) {
    MonomialSupport s = standard_support(gp);
    for (const auto& flag : flags) {
        const auto m = condition_monomial(gp, flag);
        if (!m) continue;
        if (weighted_degree(*m, gp.weights) != s.degree)
            throw DispatchError("condition " + flag + " names a monomial of the wrong degree");
        if (effect_of(flag) == FlagEffect::Absent) s.monomials.erase(*m);
        else s.monomials.insert(*m);
    }
    return s;
}

namespace {

const std::set<int>& surface_table_families() {
    static const std::set<int> ids{23, 29, 42, 49, 50, 55, 74, 77, 82};
    return ids;
}

// Families whose surface-test point is first moved to the vertex p2.
const std::set<int>& vertex_normalized_families() {
    static const std::set<int> ids{23};
    return ids;
}

}  // namespace

MonomialSupport gamma_polynomial(const FamilyRecord& gp, const FlagSet& flags) {
    if (!surface_table_families().count(gp.id))
        throw std::out_of_range("family " + std::to_string(gp.id) +
                                " has no surface-test curve");
    const MonomialSupport full = flagged_support(gp, flags);
    MonomialSupport out;
    out.degree = full.degree;
    const bool normalized = vertex_normalized_families().count(gp.id) != 0;
    for (const auto& m : full.monomials) {
        if (m[0] != 0 || m[1] != 0) continue;
        if (normalized && m[3] == 0 && m[4] == 0) continue;
        out.monomials.insert(m);
    }
    return out;
}

bool no_common_variable(const MonomialSupport& s) {
    if (s.empty()) return false;
    const std::size_t n = s.monomials.begin()->size();
    for (std::size_t i = 0; i < n; ++i) {
        bool divides_all = true;
        for (const auto& m : s.monomials)
            if (m[i] == 0) divides_all = false;
        if (divides_all) return false;
    }
    return true;
}

bool qi_eligible(const FamilyRecord& gp, const QuotientSingularity& q, const FlagSet& flags) {
    const MonomialSupport s = flagged_support(gp, flags);
    const std::size_t n = gp.weights.size();
    // The pivot is the coordinate not vanishing at the point with weight r.
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string tag = "p" + std::to_string(i);
        if (q.locus.find(tag) != std::string::npos && gp.weights[i] == q.r) {
            pivot = i;
            break;
        }
    }
    if (!pivot) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == *pivot) continue;
        const Monomial m = unit_monomial(n, *pivot, 2) * unit_monomial(n, j);
        if (weighted_degree(m, gp.weights) == s.degree && s.contains(m)) return true;
    }
    return false;
}

namespace {

enum class RuleKind { SurfacePair, Nef, NegDefWci, NegDefAmbient, Infinite, QI, EI, II };

struct FixedCurve {
    Rational degree;
    Rational e_dot;
    int multiplicity;
};

struct PointRule {
    int family;
    std::string locus;
    std::string condition;
    RuleKind kind;
    std::vector<std::size_t> sections{};
    std::vector<FixedCurve> fixed{};
    std::vector<int> wci_degrees{};
    Rational floor{};
};

const std::vector<PointRule>& point_rules() {
    static const std::vector<PointRule> rules{
        {19, "p2p4", "not-exists-wci(1,1,2)", RuleKind::EI},
        {19, "p2p4", "exists-wci(1,1,2)", RuleKind::II},
        {19, "p3", "", RuleKind::QI},
        {23, "p2p4", "not-exists-wci(1,1,4)", RuleKind::SurfacePair},
        {23, "p2p4", "exists-wci(1,1,4)", RuleKind::Infinite, {1, 4}, {{frac(1, 6), 1, 1}}},
        {23, "p3", "", RuleKind::QI},
        {29, "p2p4", "", RuleKind::SurfacePair},
        {30, "p2", "monomial-present(y^2 z)", RuleKind::QI},
        {30, "p2", "monomial-absent(y^2 z)", RuleKind::Infinite, {0, 4}, {{frac(1, 12), 1, 2}}},
        {30, "p3", "", RuleKind::QI},
        {41, "p2p3", "", RuleKind::QI},
        {42, "p2p4", "", RuleKind::SurfacePair},
        {42, "p3", "", RuleKind::QI},
        {49, "p2p4", "", RuleKind::SurfacePair},
        {50, "p1p4", "not-exists-wci(1,3,4)", RuleKind::Nef, {0, 2, 4}},
        {50, "p1p4", "exists-wci(1,3,4)", RuleKind::NegDefWci, {2}, {}, {1, 3, 10}, Rational(1)},
        {50, "p2", "monomial-present(z^3 t)", RuleKind::SurfacePair},
        {50, "p2", "monomial-absent(z^3 t)", RuleKind::NegDefAmbient, {0, 1, 4}, {}, {}, frac(1, 2)},
        {50, "p3", "", RuleKind::QI},
        {55, "p2", "", RuleKind::Infinite, {4, 1}},
        {55, "p2p4", "", RuleKind::SurfacePair},
        {69, "p2", "", RuleKind::Infinite, {0, 4}},
        {74, "p1p4", "", RuleKind::Nef, {0, 2, 4}},
        {74, "p2p3", "", RuleKind::SurfacePair},
        {77, "p2p3", "", RuleKind::SurfacePair},
        {77, "p2p4", "", RuleKind::SurfacePair},
        {82, "p1p4", "", RuleKind::Nef, {0, 2, 4}},
        {82, "p2", "", RuleKind::SurfacePair},
    };
    return rules;
}

std::vector<const PointRule*> rules_for(int family, const std::string& locus) {
    std::vector<const PointRule*> out;
    for (const auto& r : point_rules())
        if (r.family == family && r.locus == locus) out.push_back(&r);
    return out;
}

const PointRule& select_rule(int family, const std::string& locus, const FlagSet& flags) {
    const auto candidates = rules_for(family, locus);
    if (candidates.empty())
        throw DispatchError("uncovered case: family " + std::to_string(family) + " point " + locus +
                            " has no certificate");
    for (const auto* r : candidates)
        if (r->condition.empty() || flags.count(r->condition)) return *r;
    std::string missing;
    for (const auto* r : candidates) missing += (missing.empty() ? "" : " or ") + r->condition;
    throw DispatchError("uncovered case: family " + std::to_string(family) + " point " + locus +
                        " needs condition " + missing);
}

DivisorClass lift_class(const Lattice& lattice, const SectionLift& lift, int r) {
    return lattice.cls(lift.class_b, {lift.class_e - lift.class_b / r});
}

Dispatch untwist(const std::string& tag) {
    Untwist u;
    u.tag = tag;
    return {u, {false, "untwist", std::nullopt}};
}

Dispatch dispatch_point(const FamilyRecord& gp, const QuotientSingularity& q, const FlagSet& flags) {
    const PointRule& rule = select_rule(gp.id, q.locus, flags);
    const Rational a_cube = anticanonical_cube(gp);
    const MonomialSupport support = flagged_support(gp, flags);
    const Lattice lattice = kawamata_lattice(a_cube, q);
    const DivisorClass b = lattice.anticanonical();
    const DivisorClass e = lattice.exceptional(0);

    switch (rule.kind) {
        case RuleKind::QI:
            if (!qi_eligible(gp, q, flags))
                throw DispatchError("family " + std::to_string(gp.id) + " point " + q.locus +
                                    ": no x_i^2 x_j term for the quadratic involution");
            return untwist("QI");
        case RuleKind::EI: return untwist("EI");
        case RuleKind::II: return untwist("II");
        case RuleKind::SurfacePair: {
            SurfacePair c;
            c.a1 = gp.weights[1];
            c.b_cube = b_cubed(a_cube, q);
            c.gamma_support = gamma_polynomial(gp, flags);
            c.irreducible = no_common_variable(c.gamma_support);
            const Verdict v = surface_pair_test(c.a1, c.b_cube, c.gamma_support, c.irreducible);
            return {c, v};
        }
        case RuleKind::Nef: {
            NefDivisor c;
            c.q = q;
            for (auto s : rule.sections) c.lifts.push_back(coordinate_lift(support, gp.weights, q, s));
            const NefBound bound = nef_bound_check(c.lifts, q);
            c.c = bound.c;
            const SectionLift* m = nullptr;
            for (const auto& l : c.lifts)
                if (l.class_e / l.class_b == bound.c && (!m || l.class_b < m->class_b)) m = &l;
            c.m_b2 = lattice.triple(lift_class(lattice, *m, q.r), b, b);
            return {c, nef_divisor_verdict(c)};
        }
        case RuleKind::NegDefWci: {
            NegDefMatrix c;
            Rational s(1);
            for (int d : rule.wci_degrees) s *= d;
            c.s = s / Rational(gp.weights.product());
            const SectionLift t = coordinate_lift(support, gp.weights, q, rule.sections.at(0));
            c.t = lattice.triple(b, b, lift_class(lattice, t, q.r));
            c.parameter_floor = rule.floor;
            return {c, negdef_verdict(c)};
        }
        case RuleKind::NegDefAmbient: {
            // Embedded weighted blowup of the ambient 4-fold at the vertex.
            const std::size_t n = gp.weights.size();
            std::vector<int> wts;
            std::vector<int> residue(n, 0);
            for (std::size_t c = 0; c < n; ++c) {
                if (c == q.vertex) continue;
                residue[c] = static_cast<int>((static_cast<long long>(q.unit) * gp.weights[c]) % q.r);
                if (residue[c] == 0)
                    throw DispatchError("ambient blowup weight vanishes at " + q.locus);
                wts.push_back(residue[c]);
            }
            Lattice ambient(Rational(1) / Rational(gp.weights.product()), 4);
            ambient.add_exceptional("F", q.r, weighted_blowup_top(q.r, wts), frac(1, q.r));
            auto coordinate = [&](std::size_t c) {
                return ambient.cls(gp.weights[c], {-frac(residue[c], q.r)});
            };
            const Lattice::Vector b4 = ambient.cls(1, {-frac(1, q.r)});
            std::vector<Lattice::Vector> classes{b4};
            for (auto c : rule.sections) classes.push_back(coordinate(c));
            NegDefMatrix m;
            m.s = ambient.product(classes);
            m.t = gp.weights[1] * b_cubed(a_cube, q);
            m.parameter_floor = rule.floor;
            return {m, negdef_verdict(m)};
        }
        case RuleKind::Infinite: {
            if (rule.sections.size() != 2) throw StructuralError("curve family needs two sections");
            const auto s1 = lift_class(lattice, coordinate_lift(support, gp.weights, q, rule.sections[0]), q.r);
            const auto s2 = lift_class(lattice, coordinate_lift(support, gp.weights, q, rule.sections[1]), q.r);
            InfiniteCurves c;
            c.b_dot_c = lattice.triple(b, s1, s2);
            c.e_dot_c = lattice.triple(e, s1, s2);
            for (const auto& f : rule.fixed) {
                c.b_dot_c -= f.multiplicity * curve_pairing(1, {-frac(1, q.r)}, f.degree, {f.e_dot});
                c.e_dot_c -= f.multiplicity * f.e_dot;
            }
            return {c, infinite_curves_test(c.b_dot_c, c.e_dot_c)};
        }
    }
    throw StructuralError("unknown rule");
}

Dispatch dispatch_curve(const FamilyRecord& gp, const Center& center) {
    const Rational a_cube = anticanonical_cube(gp);
    if (center.data) {
        const CenterEntry& d = *center.data;
        CurveGamma c;
        c.a_cube = a_cube;
        c.deg = center.degree;
        if (d.method == "curve-gamma") {
            if (!d.gamma_sq) throw DispatchError("curve-gamma needs gamma_sq");
            c.form = CurveGamma::Form::SelfIntersection;
            c.gamma_sq = *d.gamma_sq;
        } else if (d.method == "curve-cycle") {
            if (!d.gamma_sq) throw DispatchError("curve-cycle needs gamma_sq");
            c.form = CurveGamma::Form::CycleDelta;
            c.gamma_sq = *d.gamma_sq;
            c.delta_degree = a_cube - center.degree;
        } else if (d.method == "curve-double") {
            c.form = CurveGamma::Form::DoublePencil;
            c.multiplicity = d.pencil_multiplicity.value_or(2);
        } else {
            throw DispatchError("unknown curve method '" + d.method + "'");
        }
        return {c, curve_gamma_verdict(c)};
    }
    if (center.gamma_sq_bound) {
        CurveGamma c{CurveGamma::Form::SelfIntersection, a_cube, center.degree,
                     *center.gamma_sq_bound, Rational(0), 2};
        return {c, curve_gamma_verdict(c)};
    }
    CurveDegree c{center.degree, a_cube};
    return {c, curve_degree_test(c.deg, c.a_cube)};
}

Dispatch dispatch_smooth(const FamilyRecord& gp, const Center& center) {
    const Rational a_cube = anticanonical_cube(gp);
    if (!center.data || (center.data->method == "isolation" && center.data->anchors.empty() &&
                         center.data->isolating_degrees.empty())) {
        const Isolation iso = default_isolation(gp);
        return {iso, isolation_verdict(iso)};
    }
    const CenterEntry& d = *center.data;
    if (d.method == "isolation") {
        Isolation iso;
        iso.bound = anchored_isolation_bound(gp.weights, d.anchors);
        for (int deg : d.isolating_degrees) iso.bound = std::max<long long>(iso.bound, deg);
        iso.limit = 4 / a_cube;
        return {iso, isolation_verdict(iso)};
    }
    if (d.method == "quadratic-bound") {
        if (!d.degree || !d.delta_degree || !d.gamma_sq)
            throw DispatchError("quadratic-bound needs degree, delta_degree and gamma_sq");
        const QuadraticBound q = quadratic_bound(a_cube, *d.degree, *d.delta_degree, *d.gamma_sq);
        return {q, quadratic_bound_verdict(q)};
    }
    throw DispatchError("unknown smooth-point method '" + d.method + "'");
}

}  // namespace

Dispatch dispatch(const FamilyRecord& gp, const Center& center, const FlagSet& flags) {
    switch (center.kind) {
        case CenterKind::Curve: return dispatch_curve(gp, center);
        case CenterKind::SmoothPoint: return dispatch_smooth(gp, center);
        case CenterKind::QuotientPoint:
            if (!center.quotient) throw StructuralError("quotient center without singularity data");
            return dispatch_point(gp, *center.quotient, flags);
        case CenterKind::CAxPoint: {
            if (!center.cax) throw StructuralError("cAx center without point data");
            Untwist u;
            u.tag = "link";
            u.counterpart = gp.id;
            u.extraction = extractions_at_cax(*center.cax, build_counterpart(counterpart_inverse(gp)));
            return {u, {false, "untwist", std::nullopt}};
        }
    }
    throw StructuralError("unknown center kind");
}

std::vector<std::string> branch_conditions(int family_id, const std::string& locus) {
    std::vector<std::string> out;
    for (const auto* r : rules_for(family_id, locus))
        if (!r->condition.empty()) out.push_back(r->condition);
    return out;
}

std::string link_tag(int family_id, const std::string& locus, const std::string& condition) {
    for (const auto* r : rules_for(family_id, locus)) {
        if (r->condition != condition) continue;
        switch (r->kind) {
            case RuleKind::QI: return "QI";
            case RuleKind::EI: return "EI";
            case RuleKind::II: return "II";
            default: return "none";
        }
    }
    throw DispatchError("uncovered case: family " + std::to_string(family_id) + " point " + locus +
                        (condition.empty() ? "" : " under " + condition));
}

}  // namespace fano
