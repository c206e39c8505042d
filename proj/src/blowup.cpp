#include "fano/blowup.hpp"

namespace fano {

KawamataNumbers kawamata_numbers(const QuotientSingularity& q) {
    return {frac(1, q.r), frac(static_cast<long long>(q.r) * q.r,
                               static_cast<long long>(q.a) * (q.r - q.a))};
}

Rational weighted_blowup_top(int r, const std::vector<int>& weights) {
    if (weights.empty()) throw StructuralError("weighted blowup needs weights");
    Integer num = 1;
    Integer den = 1;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) num *= r;
    for (int w : weights) {
        if (w <= 0) throw StructuralError("blowup weights must be positive");
        den *= w;
    }
    Rational v(num, den);
    return weights.size() % 2 == 0 ? Rational(-v) : v;
}

Lattice kawamata_lattice(const Rational& a_cube, const QuotientSingularity& q) {
    Lattice lattice(a_cube);
    const auto k = kawamata_numbers(q);
    lattice.add_exceptional("E", q.r, k.e_cube, k.discrepancy);
    return lattice;
}

Rational b_cubed(const Rational& a_cube, const QuotientSingularity& q) {
    return a_cube - frac(1, static_cast<long long>(q.r) * q.a * (q.r - q.a));
}

namespace {

Rational order_of(const Monomial& m, const std::vector<Rational>& weights) {
    Rational o(0);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) o += weights[i] * m[i];
    return o;
}

}  // namespace

Rational vanishing_order(const MonomialSupport& support, const std::vector<Rational>& weights,
                         std::optional<std::size_t> eliminated) {
    std::optional<Rational> best;
    auto consider = [&](const Monomial& m) {
        if (m.size() != weights.size())
            throw StructuralError("vanishing_order: weight vector length mismatch");
        const Rational o = order_of(m, weights);
        if (!best || o < *best) best = o;
    };

    if (!eliminated) {
        for (const auto& m : support.monomials) consider(m);
    } else {
        const std::size_t e = *eliminated;
        std::optional<std::size_t> vertex;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (i != e && weights[i] == 0) {
                if (vertex) throw StructuralError("vanishing_order: more than one vertex coordinate");
                vertex = i;
            }
        if (!vertex) throw StructuralError("vanishing_order: no vertex coordinate");
        std::optional<int> k;
        for (const auto& m : support.monomials) {
            bool tangent = m[e] == 1 && m[*vertex] > 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != e && i != *vertex && m[i] != 0) tangent = false;
            if (tangent) k = m[*vertex];
        }
        if (!k) throw StructuralError("vanishing_order: tangent monomial missing from support");
        for (const auto& m : support.monomials) {
            if (m[e] != 0 || m[*vertex] >= *k) continue;
            consider(m);
        }
    }
    if (!best) throw ValidationError("vanishing order undefined: empty residual support");
    return *best;
}

std::vector<Rational> kawamata_weights(const QuotientSingularity& q, std::size_t n) {
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) w[q.transverse[i]] = frac(q.residues[i], q.r);
    return w;
}

MonomialSupport chart_support(const MonomialSupport& support, const QuotientSingularity& q) {
    MonomialSupport s = support;
    if (q.tangent_exponent <= 0 || s.monomials.empty()) return s;
    const std::size_t n = s.monomials.begin()->size();
    s.monomials.insert(unit_monomial(n, q.vertex, q.tangent_exponent) *
                       unit_monomial(n, q.eliminated));
    return s;
}

SectionLift section_lift(int degree, const Rational& order, int r) {
    SectionLift lift;
    lift.degree = degree;
    lift.vanishing_order = order;
    lift.class_b = degree;
    lift.class_e = frac(degree, r) - order;
    return lift;
}

SectionLift coordinate_lift(const MonomialSupport& support, const WeightSystem& w,
                            const QuotientSingularity& q, std::size_t c) {
    const auto weights = kawamata_weights(q, w.size());
    Rational order(0);
    if (c == q.eliminated)
        order = vanishing_order(chart_support(support, q), weights, c);
    else if (c != q.vertex)
        order = weights[c];
    return section_lift(w[c], order, q.r);
}

NefBound nef_bound_check(const std::vector<SectionLift>& lifts, const QuotientSingularity& q) {
    if (lifts.empty()) throw StructuralError("nef_bound_check: no lifts");
    NefBound out;
    bool first = true;
    for (const auto& l : lifts) {
        if (l.class_b <= 0 || l.class_e < 0)
            throw StructuralError("nef_bound_check: lift classes out of range");
        const Rational c = l.class_e / l.class_b;
        if (first || c > out.c) out.c = c;
        first = false;
    }
    out.certified = out.c <= frac(1, q.r);
    return out;
}

Rational curve_pairing(const Rational& alpha, const std::vector<Rational>& beta,
                       const Rational& degree, const std::vector<Rational>& e_dot) {
    if (beta.size() != e_dot.size()) throw StructuralError("curve_pairing: length mismatch");
    Rational v = alpha * degree;
    for (std::size_t i = 0; i < beta.size(); ++i) v += beta[i] * e_dot[i];
    return v;
}

}  // namespace fano
