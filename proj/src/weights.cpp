#include "fano/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano {

WeightSystem::WeightSystem(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw StructuralError("weight system is empty");
    for (int a : weights_)
        if (a < 1) throw StructuralError("weights must be positive");
}

long long WeightSystem::sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

Integer WeightSystem::product() const {
    Integer p = 1;
    for (int a : weights_) p *= a;
    return p;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    const int ta = std::accumulate(a.begin(), a.end(), 0);
    const int tb = std::accumulate(b.begin(), b.end(), 0);
    if (ta != tb) return ta > tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

long long weighted_degree(const Monomial& m, const WeightSystem& w) {
    if (m.size() != w.size())
        throw StructuralError("monomial length " + std::to_string(m.size()) +
                              " does not match weight system length " + std::to_string(w.size()));
    long long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(m[i]) * w[i];
    return d;
}

namespace {

void enumerate(const WeightSystem& w, std::size_t i, int remaining, Monomial& current,
               MonomialSupport& out) {
    if (i + 1 == w.size()) {
        if (remaining % w[i] == 0) {
            current[i] = remaining / w[i];
            out.monomials.insert(current);
            current[i] = 0;
        }
        return;
    }
    for (int e = remaining / w[i]; e >= 0; --e) {
        current[i] = e;
        enumerate(w, i + 1, remaining - e * w[i], current, out);
    }
    current[i] = 0;
}

}  // namespace

MonomialSupport monomials_of_degree(int d, const WeightSystem& w) {
    if (d < 0) throw StructuralError("negative degree");
    MonomialSupport out;
    out.degree = d;
    if (w.size() == 0) return out;
    Monomial current(w.size(), 0);
    enumerate(w, 0, d, current, out);
    return out;
}

long long max_pair_lcm(const WeightSystem& w, const std::vector<std::size_t>& keep) {
    if (keep.size() < 2) throw StructuralError("max_pair_lcm needs at least two indices");
    long long best = 0;
    for (std::size_t s = 0; s < keep.size(); ++s)
        for (std::size_t t = s + 1; t < keep.size(); ++t) {
            if (keep[s] >= w.size() || keep[t] >= w.size())
                throw StructuralError("index out of range in max_pair_lcm");
            best = std::max(best, std::lcm<long long>(w[keep[s]], w[keep[t]]));
        }
    return best;
}

std::vector<std::size_t> all_but(const WeightSystem& w, std::size_t dropped) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != dropped) keep.push_back(i);
    return keep;
}

Rational anticanonical_cube(const WeightSystem& w, const std::vector<int>& degrees,
                            const std::string& label) {
    const long long index = w.sum() - std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (index != 1)
        throw ValidationError((label.empty() ? std::string("record") : label) +
                              ": Fano index is " + std::to_string(index) + ", expected 1");
    Integer num = 1;
    for (int d : degrees) num *= d;
    return Rational(num, w.product());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial length mismatch");
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Monomial unit_monomial(std::size_t n, std::size_t i, int e) {
    Monomial m(n, 0);
    m.at(i) = e;
    return m;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw StructuralError("monomial length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += names.at(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
    Monomial m(names.size(), 0);
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        int e = 1;
        const auto caret = token.find('^');
        std::string name = token.substr(0, caret);
        if (caret != std::string::npos) e = std::stoi(token.substr(caret + 1));
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::invalid_argument("unknown variable '" + name + "'");
        m[static_cast<std::size_t>(it - names.begin())] += e;
    }
    return m;
}

}  // namespace fano
