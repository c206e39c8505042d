#pragma once

#include "fano/catalog.hpp"
#include "fano/exclusion.hpp"
#include "fano/links.hpp"
#include "fano/singularities.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fano {

struct CenterResult {
    Center center;
    std::string label;  // "p2p4 = 1/2(1,1,1)", "smooth points", "curves of degree 1"
    std::optional<Dispatch> result;
    std::string error;  // dispatch failure, if any
};

struct Report {
    int family_id = 0;
    FamilyRecord g;
    FamilyRecord gprime;
    Rational a_cube;
    std::vector<BasketEntry> basket;
    LinkData link_data;
    CAxPoint cax;
    ExtractionDescriptor extraction;
    std::vector<CenterResult> centers;
    std::vector<std::string> uncovered;

    bool all_resolved() const { return uncovered.empty(); }
};

Report analyze(const Catalog& catalog, int family_id);

// Link rows in catalog form, one per point and condition branch.
std::vector<LinkEntry> computed_links(const Report& r);

// Smooth-point rows and the catalog-supplied curve rows.
std::vector<CenterEntry> computed_centers(const Report& r);

// Monomials are rendered with `names` when given, else as exponent vectors.
nlohmann::json certificate_to_json(const Certificate& c, const std::vector<std::string>& names = {});
nlohmann::json render_json(const Report& r);
std::string render_markdown(const Report& r);
std::string render_links(const Report& r);
std::string render_basket(const Report& r);

// Differences between computed and golden data, one line each, each naming
// its family.  Empty means the catalog verifies.
std::vector<std::string> verify_catalog(const Catalog& catalog);

}  // namespace fano
