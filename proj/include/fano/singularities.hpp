#pragma once

#include "fano/catalog.hpp"
#include "fano/links.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fano {

struct ClassificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A terminal cyclic quotient point 1/r(1,a,r-a).  The chart fields describe
// the point after it has been moved to the coordinate vertex `vertex`:
// the equation contains the tangent monomial vertex^k * eliminated and the
// Kawamata blowup has weights residues[i]/r on transverse[i].
struct QuotientSingularity {
    int r = 0;
    int a = 0;
    int count = 1;
    std::string locus;

    std::size_t vertex = 0;
    std::size_t eliminated = 0;
    int tangent_exponent = 0;
    std::array<std::size_t, 3> transverse{};
    std::array<int, 3> residues{};
    int unit = 1;  // residues = unit * weights mod r

    std::string type() const;  // "1/r(1,a,r-a)"
};

// Reduces raw mod r and normalizes to 1/r(1,a,r-a) with a <= r-a.
// residues holds (u * raw) mod r for the unit u used.
QuotientSingularity normalize_quotient(int r, const std::array<int, 3>& raw);

struct CAxPoint {
    int modulus = 2;
    bool square_type = true;
    std::size_t vertex = 4;
    std::optional<int> k;
};

struct ExtractionDescriptor {
    int count = 1;
    std::array<Rational, 4> ambient_weights;
    Rational discrepancy;
};

// Quotient points at coordinate vertices.  The w vertex is the cAx point
// and is not reported here.
std::vector<QuotientSingularity> vertex_singularities(const FamilyRecord& gprime);

// Points of index gcd(a_i, a_j) on the edge x_i x_j, away from the vertices.
// Returns count 0 when the generic binary form has no such roots.
QuotientSingularity edge_singularities(const FamilyRecord& gprime, std::size_t i, std::size_t j);

CAxPoint cax_classify(const FamilyRecord& gprime, bool f_is_zero, bool g1_is_zero);

// Classification of the general member.
CAxPoint cax_point(const FamilyRecord& gprime);

ExtractionDescriptor extractions_at_cax(const CAxPoint& p, const LinkData& link);

// Quotient points (vertices and edges) and the cAx point, as catalog basket
// entries ordered by locus with the cAx point last.
std::vector<QuotientSingularity> quotient_points(const FamilyRecord& gprime);
std::vector<BasketEntry> basket(const FamilyRecord& gprime);

std::string locus_name(const std::vector<std::size_t>& indices);

}  // namespace fano
