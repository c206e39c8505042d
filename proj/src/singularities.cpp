#include "fano/singularities.hpp"

#include <algorithm>
#include <numeric>

namespace fano {

namespace {

int mod(long long v, int r) {
    const long long m = v % r;
    return static_cast<int>(m < 0 ? m + r : m);
}

int inverse_mod(int u, int r) {
    for (int v = 1; v < r; ++v)
        if (mod(static_cast<long long>(u) * v, r) == 1) return v;
    return 0;
}

std::vector<std::size_t> locus_indices(const QuotientSingularity& q) {
    std::vector<std::size_t> idx;
    for (std::size_t p = 1; p < q.locus.size(); ++p)
        if (q.locus[p - 1] == 'p') idx.push_back(static_cast<std::size_t>(q.locus[p] - '0'));
    return idx;
}

std::array<std::size_t, 3> others(std::size_t n, std::size_t i, std::size_t j) {
    std::array<std::size_t, 3> out{};
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (c != i && c != j) out[k++] = c;
    return out;
}

QuotientSingularity with_chart(QuotientSingularity q, std::size_t vertex, std::size_t eliminated,
                               int k, const std::array<std::size_t, 3>& transverse) {
    q.vertex = vertex;
    q.eliminated = eliminated;
    q.tangent_exponent = k;
    q.transverse = transverse;
    return q;
}

}  // namespace

std::string QuotientSingularity::type() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," + std::to_string(r - a) + ")";
}

std::string locus_name(const std::vector<std::size_t>& indices) {
    std::string s;
    for (auto i : indices) s += "p" + std::to_string(i);
    return s;
}

QuotientSingularity normalize_quotient(int r, const std::array<int, 3>& raw) {
    if (r < 2) throw StructuralError("normalize_quotient: index must be at least 2");
    std::array<int, 3> red{};
    for (std::size_t i = 0; i < 3; ++i) red[i] = mod(raw[i], r);

    for (std::size_t p = 0; p < 3; ++p) {
        if (std::gcd(red[p], r) != 1) continue;
        const int u = inverse_mod(red[p], r);
        std::array<int, 3> res{};
        for (std::size_t i = 0; i < 3; ++i) res[i] = mod(static_cast<long long>(u) * red[i], r);
        std::array<int, 2> pair{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != p) pair[k++] = res[i];
        if (pair[0] == 0 || pair[1] == 0 || (pair[0] + pair[1]) % r != 0) continue;
        if (std::gcd(pair[0], r) != 1) continue;
        QuotientSingularity q;
        q.r = r;
        q.a = std::min(pair[0], pair[1]);
        q.residues = res;
        q.unit = u;
        return q;
    }
    throw ClassificationError("1/" + std::to_string(r) + "(" + std::to_string(raw[0]) + "," +
                              std::to_string(raw[1]) + "," + std::to_string(raw[2]) +
                              ") is not a terminal quotient singularity");
}

std::vector<QuotientSingularity> vertex_singularities(const FamilyRecord& gp) {
    const MonomialSupport support = standard_support(gp);
    const auto& w = gp.weights;
    const std::size_t n = w.size();
    const int d = gp.degrees.at(0);
    std::vector<QuotientSingularity> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w[i] < 2) continue;
        if (d % w[i] == 0 && support.contains(unit_monomial(n, i, d / w[i]))) continue;

        std::optional<std::size_t> best;
        int best_k = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || (d - w[j]) <= 0 || (d - w[j]) % w[i] != 0) continue;
            const int k = (d - w[j]) / w[i];
            if (!support.contains(unit_monomial(n, i, k) * unit_monomial(n, j))) continue;
            if (!best || w[j] < w[*best]) {
                best = j;
                best_k = k;
            }
        }
        if (!best)
            throw ClassificationError("family " + std::to_string(gp.id) +
                                      ": not quasismooth at vertex p" + std::to_string(i));
        const auto tr = others(n, i, *best);
        QuotientSingularity q = normalize_quotient(w[i], {w[tr[0]], w[tr[1]], w[tr[2]]});
        q.locus = locus_name({i});
        out.push_back(with_chart(q, i, *best, best_k, tr));
    }
    return out;
}

QuotientSingularity edge_singularities(const FamilyRecord& gp, std::size_t i, std::size_t j) {
    const auto& w = gp.weights;
    const std::size_t n = w.size();
    if (i > j) std::swap(i, j);
    const int g = std::gcd(w[i], w[j]);
    if (g < 2) throw StructuralError("edge_singularities: edge weights are coprime");

    int p_min = -1;
    int p_max = -1;
    for (const auto& m : standard_support(gp).monomials) {
        bool on_edge = true;
        for (std::size_t c = 0; c < n; ++c)
            if (c != i && c != j && m[c] != 0) on_edge = false;
        if (!on_edge) continue;
        p_min = p_min < 0 ? m[i] : std::min(p_min, m[i]);
        p_max = std::max(p_max, m[i]);
    }
    if (p_min < 0)
        throw ClassificationError("family " + std::to_string(gp.id) +
                                  ": non-isolated singularity along edge " +
                                  locus_name({i, j}));

    const auto tr = others(n, i, j);
    QuotientSingularity q = normalize_quotient(g, {w[tr[0]], w[tr[1]], w[tr[2]]});
    q.locus = locus_name({i, j});
    q.count = (p_max - p_min) / (w[j] / g);

    // Chart: move one point to the vertex of the edge coordinate of weight g.
    std::size_t v = w[i] == g ? i : j;
    if (w[v] != g) v = i;
    const std::size_t e = v == i ? j : i;
    const int d = gp.degrees.at(0);
    const int k = (d - w[e]) % w[v] == 0 ? (d - w[e]) / w[v] : 0;
    return with_chart(q, v, e, k, tr);
}

CAxPoint cax_classify(const FamilyRecord& gp, bool f_is_zero, bool g1_is_zero) {
    CAxPoint p;
    p.modulus = modulus(gp.subfamily);
    p.square_type = is_single_prime(gp.subfamily) ? !f_is_zero : !g1_is_zero;
    p.vertex = 4;

    const LinkData link = build_counterpart(counterpart_inverse(gp));
    const int a1 = link.standard.a(1);
    const int a2 = link.standard.a(2);
    const int a3 = link.standard.a(3);
    const int a4 = link.standard.a(4);
    const int lo = std::min(a1, a4);
    const int hi = std::max(a1, a4);
    if (p.modulus == 2 && a2 == 1 && a3 == 1 && hi == lo + 1) p.k = lo;
    if (p.modulus == 4 && std::min(a2, a3) == 1 && std::max(a2, a3) == 2 && hi == lo + 2 &&
        lo % 2 == 1)
        p.k = (lo - 1) / 2;
    return p;
}

CAxPoint cax_point(const FamilyRecord& gp) {
    const bool square = generic_square_type(gp);
    return cax_classify(gp, !square, !square);
}

ExtractionDescriptor extractions_at_cax(const CAxPoint& p, const LinkData& link) {
    ExtractionDescriptor e;
    e.count = p.square_type ? 2 : 1;
    const auto& s = link.standard;
    e.ambient_weights = {frac(s.a(4), link.b), frac(s.a(1), link.b), frac(s.a(2), link.b),
                         frac(s.a(3), link.b)};
    e.discrepancy = frac(1, p.modulus);
    return e;
}

std::vector<QuotientSingularity> quotient_points(const FamilyRecord& gp) {
    std::vector<QuotientSingularity> out = vertex_singularities(gp);
    const std::size_t n = gp.weights.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::gcd(gp.weights[i], gp.weights[j]) < 2) continue;
            QuotientSingularity q = edge_singularities(gp, i, j);
            if (q.count > 0) out.push_back(q);
        }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return locus_indices(a) < locus_indices(b);
    });
    return out;
}

std::vector<BasketEntry> basket(const FamilyRecord& gp) {
    std::vector<BasketEntry> out;
    for (const auto& q : quotient_points(gp)) out.push_back({q.type(), q.count, q.locus});
    const CAxPoint c = cax_point(gp);
    out.push_back({"cAx/" + std::to_string(c.modulus), 1, "p4"});
    return out;
}

}  // namespace fano
