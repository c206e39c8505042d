#include "fano/links.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fano {

namespace {

bool satisfies(const std::array<int, 6>& a, int d1, int d2, bool single_prime) {
    if (a[2] > a[3]) return false;
    if (single_prime)
        return a[5] == a[4] && d1 == a[0] + a[5] && d1 == 2 * a[1] && d2 == a[4] + a[5] &&
               d2 == 2 * a[4];
    for (std::size_t i = 0; i < 5; ++i)
        if (a[5] <= a[i]) return false;
    return d1 == a[0] + a[5] && d1 == 2 * a[4] && d2 == a[4] + a[5] && d2 == 2 * a[1];
}

}  // namespace

StandardForm to_standard_form(const FamilyRecord& g) {
    if (g.kind != Kind::G || g.weights.size() != 6 || g.degrees.size() != 2)
        throw ValidationError("family " + std::to_string(g.id) +
                              ": standard form needs a codimension-two record");
    const int d1 = std::min(g.degrees[0], g.degrees[1]);
    const int d2 = std::max(g.degrees[0], g.degrees[1]);
    const bool single = is_single_prime(g.subfamily);

    std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
    std::set<std::array<int, 6>> seen;
    StandardForm found;
    // Lexicographic permutation order resolves equal weights by input order.
    do {
        std::array<int, 6> a{};
        for (std::size_t r = 0; r < 6; ++r) a[r] = g.weights[perm[r]];
        if (!satisfies(a, d1, d2, single) || seen.count(a)) continue;
        if (seen.empty()) {
            found.role_map = perm;
            found.reordered_weights = WeightSystem(std::vector<int>(a.begin(), a.end()));
        }
        seen.insert(a);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (seen.empty())
        throw ValidationError("family " + std::to_string(g.id) + ": standard form unsolvable");
    if (seen.size() > 1)
        throw ValidationError("family " + std::to_string(g.id) + ": standard form ambiguous");
    found.d1 = d1;
    found.d2 = d2;
    return found;
}

LinkData build_counterpart(const FamilyRecord& g) {
    LinkData link;
    link.id = g.id;
    link.standard = to_standard_form(g);
    const auto& s = link.standard;
    link.b = s.a(4) - s.a(0);
    if (link.b <= 0)
        throw ValidationError("family " + std::to_string(g.id) + ": b = a4 - a0 is not positive");
    link.xprime_weights = WeightSystem({s.a(0), s.a(1), s.a(2), s.a(3), link.b});
    link.equation_shape =
        is_single_prime(g.subfamily) ? EquationShape::SinglePrime : EquationShape::DoublePrime;
    link.xprime_degree = link.equation_shape == EquationShape::SinglePrime
                             ? 2 * link.b + 2 * s.a(0)
                             : 3 * link.b + 2 * s.a(0);
    link.z_degree = s.d1 + s.d2 - s.a(5);
    link.z_weights = WeightSystem({s.a(0), s.a(1), s.a(2), s.a(3), s.a(4)});
    return link;
}

WeightSystem canonical_xprime_weights(const LinkData& link) {
    std::vector<int> x(link.xprime_weights.values().begin(),
                       link.xprime_weights.values().begin() + 4);
    std::sort(x.begin(), x.end());
    x.push_back(link.b);
    return WeightSystem(x);
}

FamilyRecord counterpart_record(const LinkData& link, Subfamily subfamily) {
    FamilyRecord r;
    r.id = link.id;
    r.kind = Kind::GPrime;
    r.weights = canonical_xprime_weights(link);
    r.degrees = {link.xprime_degree};
    r.subfamily = subfamily;
    return r;
}

PrimeRoles prime_roles(const FamilyRecord& gp) {
    if (gp.kind != Kind::GPrime || gp.weights.size() != 5 || gp.degrees.size() != 1)
        throw ValidationError("family " + std::to_string(gp.id) +
                              ": expected a hypersurface record");
    PrimeRoles roles;
    roles.shape = is_single_prime(gp.subfamily) ? EquationShape::SinglePrime
                                                : EquationShape::DoublePrime;
    roles.b = gp.weights[4];
    roles.d = gp.degrees[0];
    const int k = roles.shape == EquationShape::SinglePrime ? 2 : 3;
    const int twice_a0 = roles.d - k * roles.b;
    const int twice_a1 = roles.shape == EquationShape::SinglePrime ? roles.d - roles.b : roles.d;
    if (twice_a0 <= 0 || twice_a0 % 2 != 0 || twice_a1 % 2 != 0)
        throw ValidationError("family " + std::to_string(gp.id) +
                              ": degree and b are incompatible with the equation shape");
    roles.a0 = twice_a0 / 2;
    roles.a1 = twice_a1 / 2;

    std::vector<std::size_t> free{0, 1, 2, 3};
    auto take = [&](int weight) {
        for (auto it = free.begin(); it != free.end(); ++it)
            if (gp.weights[*it] == weight) {
                const std::size_t i = *it;
                free.erase(it);
                return i;
            }
        throw ValidationError("family " + std::to_string(gp.id) + ": no coordinate of weight " +
                              std::to_string(weight) + " for the standard form");
    };
    roles.x[0] = take(roles.a0);
    roles.x[1] = take(roles.a1);
    roles.x[2] = free[0];
    roles.x[3] = free[1];
    return roles;
}

FamilyRecord counterpart_inverse(const FamilyRecord& gp) {
    const PrimeRoles roles = prime_roles(gp);
    const int a4 = roles.a0 + roles.b;
    const int a5 = roles.d - a4;
    std::vector<int> w{gp.weights[roles.x[0]], gp.weights[roles.x[1]], gp.weights[roles.x[2]],
                       gp.weights[roles.x[3]], a4, a5};
    std::sort(w.begin(), w.end());
    int d1 = 0;
    int d2 = 0;
    if (roles.shape == EquationShape::SinglePrime) {
        d1 = 2 * roles.a1;
        d2 = 2 * a4;
    } else {
        d1 = 2 * a4;
        d2 = 2 * roles.a1;
    }
    FamilyRecord g;
    g.id = gp.id;
    g.kind = Kind::G;
    g.weights = WeightSystem(w);
    g.degrees = {std::min(d1, d2), std::max(d1, d2)};
    g.subfamily = gp.subfamily;
    return g;
}

namespace {

// Monomials of degree k in the coordinates `vars` of the 5-coordinate
// ambient, embedded with zero exponents elsewhere.
std::vector<Monomial> monomials_in(const FamilyRecord& gp, const std::vector<std::size_t>& vars,
                                   int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    std::vector<int> sub;
    for (auto v : vars) sub.push_back(gp.weights[v]);
    for (const auto& m : monomials_of_degree(k, WeightSystem(sub)).monomials) {
        Monomial full(gp.weights.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) full[vars[i]] = m[i];
        out.push_back(full);
    }
    return out;
}

}  // namespace

MonomialSupport standard_support(const FamilyRecord& gp) {
    const PrimeRoles roles = prime_roles(gp);
    const std::size_t n = gp.weights.size();
    const std::vector<std::size_t> xs(roles.x.begin(), roles.x.end());
    const Monomial x0 = unit_monomial(n, roles.x[0]);
    const Monomial w1 = unit_monomial(n, roles.w);
    const Monomial w2 = unit_monomial(n, roles.w, 2);

    MonomialSupport s;
    s.degree = roles.d;
    if (roles.shape == EquationShape::SinglePrime) {
        s.monomials.insert(w2 * x0 * x0);
        for (const auto& m : monomials_in(gp, {roles.x[2], roles.x[3]}, roles.a0))
            s.monomials.insert(w2 * x0 * m);
    } else {
        s.monomials.insert(unit_monomial(n, roles.w, 3) * x0 * x0);
        for (const auto& m : monomials_in(gp, xs, roles.b + roles.a0))
            s.monomials.insert(w2 * x0 * m);
    }
    for (const auto& m : monomials_in(gp, xs, roles.d - roles.b)) s.monomials.insert(w1 * m);
    for (const auto& m : monomials_in(gp, xs, roles.d)) s.monomials.insert(m);
    for (const auto& m : s.monomials)
        if (weighted_degree(m, gp.weights) != roles.d)
            throw StructuralError("standard support produced a monomial of the wrong degree");
    return s;
}

bool generic_square_type(const FamilyRecord& gp) {
    const PrimeRoles roles = prime_roles(gp);
    const int k = roles.shape == EquationShape::SinglePrime ? roles.a0
                                                            : roles.d - roles.b - roles.a1;
    return !monomials_in(gp, {roles.x[2], roles.x[3]}, k).empty();
}

std::vector<std::string> coordinate_names(const WeightSystem& w) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 1) ++ones;
    std::vector<std::string> names;
    static const char* const letters[] = {"y", "z", "t", "s"};
    std::size_t next_letter = 0;
    std::size_t next_x = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == 1 && ones >= 2) names.push_back("x" + std::to_string(next_x++));
        else if (w[i] == 1) names.push_back("x");
        else names.push_back(letters[next_letter++]);
    }
    names.push_back("w");
    return names;
}

}  // namespace fano
