#pragma once

#include "fano/catalog.hpp"

#include <array>
#include <string>
#include <vector>

namespace fano {

// Role order (x0, x1, x2, x3, u, v) of the codimension-two ambient.
struct StandardForm {
    std::array<std::size_t, 6> role_map{};  // role -> index into the record's weights
    WeightSystem reordered_weights;          // (a0, ..., a5)
    int d1 = 0;
    int d2 = 0;

    int a(std::size_t role) const { return reordered_weights[role]; }
};

enum class EquationShape { SinglePrime, DoublePrime };

struct LinkData {
    int id = 0;
    StandardForm standard;
    int b = 0;
    WeightSystem xprime_weights;  // (a0, a1, a2, a3, b) in role order
    int xprime_degree = 0;
    int z_degree = 0;
    WeightSystem z_weights;  // (a0, a1, a2, a3, a4)
    EquationShape equation_shape = EquationShape::SinglePrime;
};

StandardForm to_standard_form(const FamilyRecord& g);

LinkData build_counterpart(const FamilyRecord& g);

// Catalog convention for X': x-weights sorted ascending, then b.
WeightSystem canonical_xprime_weights(const LinkData& link);

// The hypersurface record X' in catalog convention.
FamilyRecord counterpart_record(const LinkData& link, Subfamily subfamily);

FamilyRecord counterpart_inverse(const FamilyRecord& gprime);

// Roles of the coordinates of a hypersurface record X' ⊂ P(a0,...,a3,b):
// x[r] is the coordinate index playing x_r; w is always index 4.
struct PrimeRoles {
    std::array<std::size_t, 4> x{};
    std::size_t w = 4;
    int a0 = 0;
    int a1 = 0;
    int b = 0;
    int d = 0;
    EquationShape shape = EquationShape::SinglePrime;
};

PrimeRoles prime_roles(const FamilyRecord& gprime);

// Support of the general member in standard form:
//   I':  w^2 x0^2 + w^2 x0 f(x2,x3) + w g + h
//   I'': w^3 x0^2 + w^2 x0 f + w g + h
MonomialSupport standard_support(const FamilyRecord& gprime);

// Whether the general member has a nonzero f (I') or a nonzero
// (dg/dx1)(0,0,x2,x3) (I''), i.e. the cAx point is of square type.
bool generic_square_type(const FamilyRecord& gprime);

// x0,x1,y,z,w when at least two weights are 1, else x,y,z,t,w; three
// weights equal to 1 give x0,x1,x2,y,w.
std::vector<std::string> coordinate_names(const WeightSystem& w);

}  // namespace fano
