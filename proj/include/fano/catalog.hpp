#pragma once

#include "fano/rational.hpp"
#include "fano/weights.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

enum class Kind { G, GPrime };

// I'_b families have X' of equation shape w^2 x0 (x0 + f) + w g + h,
// I''_b families have w^3 x0^2 + w^2 x0 f + w g + h.
enum class Subfamily { I2p, I2pp, I4p, I4pp };

bool is_single_prime(Subfamily s);
int modulus(Subfamily s);
std::string to_string(Subfamily s);
Subfamily parse_subfamily(const std::string& s);

const std::vector<int>& catalog_ids();

// Throws std::out_of_range for ids outside the catalog.
Subfamily subfamily_of(int id);

struct FamilyRecord {
    int id = 0;
    Kind kind = Kind::GPrime;
    WeightSystem weights;
    std::vector<int> degrees;
    Subfamily subfamily = Subfamily::I2p;

    bool operator==(const FamilyRecord&) const = default;
};

std::string describe(const FamilyRecord& r);  // "X'_8 ⊂ P(1,1,2,3,2)"

Rational anticanonical_cube(const FamilyRecord& r);

struct BasketEntry {
    std::string type;  // "1/r(1,a,r-a)", "cAx/2", "cAx/4"
    int count = 1;
    std::string locus;  // "p3", "p2p4"
    bool operator==(const BasketEntry&) const = default;
};

struct LinkEntry {
    std::string point;
    std::string tag;  // none | QI | EI | II | link
    std::string condition;
    std::optional<std::string> method;
    std::optional<std::string> b3_sign;  // "<0" | "=0" | ">0"
    std::optional<Rational> witness;
    bool operator==(const LinkEntry&) const = default;
};

// Smooth-point and curve centers: inputs that cannot be derived from
// supports (Gamma^2 bounds, explicit isolating sets) and expected outputs.
struct CenterEntry {
    std::string center;  // "smooth" | "curve"
    std::string condition;
    std::string method;
    std::optional<Rational> degree;
    std::optional<Rational> gamma_sq;
    std::optional<Rational> delta_degree;
    std::optional<int> pencil_multiplicity;
    std::vector<int> anchors;  // coordinates whose nonvanishing isolates with max lcm
    std::vector<int> isolating_degrees;
    std::optional<long long> bound;
    std::optional<Rational> limit;
    std::optional<Rational> witness;
    bool operator==(const CenterEntry&) const = default;
};

struct GoldenRow {
    int id = 0;
    Rational a_cube;
    std::vector<BasketEntry> basket;
    std::vector<LinkEntry> links;
    std::vector<CenterEntry> centers;
    bool operator==(const GoldenRow&) const = default;
};

struct CatalogEntry {
    FamilyRecord record;
    GoldenRow golden;
};

struct Catalog {
    std::vector<CatalogEntry> g;       // sorted by id
    std::vector<CatalogEntry> gprime;  // sorted by id

    const CatalogEntry& family(int id) const;         // G' entry
    const CatalogEntry& codim2_family(int id) const;  // G entry
};

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-element parsing and structural validation (no count checks).
std::vector<CatalogEntry> parse_catalog_entries(const std::string& text);
CatalogEntry parse_catalog_entry(const nlohmann::json& j);

// Full load: exactly 14 G and 14 G' records with the catalog ids.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

nlohmann::json to_json(const CatalogEntry& e);

// Default catalog path: FANO_WCI_CATALOG if set, else the shipped file.
std::string default_catalog_path();

}  // namespace fano
