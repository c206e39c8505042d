#include "fano/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifndef FANO_WCI_DEFAULT_CATALOG
#define FANO_WCI_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace fano {

using nlohmann::json;

bool is_single_prime(Subfamily s) { return s == Subfamily::I2p || s == Subfamily::I4p; }

int modulus(Subfamily s) { return (s == Subfamily::I2p || s == Subfamily::I2pp) ? 2 : 4; }

std::string to_string(Subfamily s) {
    switch (s) {
        case Subfamily::I2p: return "I'_2";
        case Subfamily::I2pp: return "I''_2";
        case Subfamily::I4p: return "I'_4";
        case Subfamily::I4pp: return "I''_4";
    }
    return "?";
}

Subfamily parse_subfamily(const std::string& s) {
    if (s == "I'_2") return Subfamily::I2p;
    if (s == "I''_2") return Subfamily::I2pp;
    if (s == "I'_4") return Subfamily::I4p;
    if (s == "I''_4") return Subfamily::I4pp;
    throw std::invalid_argument("unknown subfamily '" + s + "'");
}

const std::vector<int>& catalog_ids() {
    static const std::vector<int> ids{17, 19, 23, 29, 30, 41, 42, 49, 50, 55, 69, 74, 77, 82};
    return ids;
}

Subfamily subfamily_of(int id) {
    static const std::map<int, Subfamily> table = {
        {19, Subfamily::I2p},  {30, Subfamily::I2p},  {42, Subfamily::I2p},
        {17, Subfamily::I2pp}, {29, Subfamily::I2pp}, {41, Subfamily::I2pp},
        {55, Subfamily::I2pp}, {69, Subfamily::I2pp}, {77, Subfamily::I2pp},
        {23, Subfamily::I4p},  {50, Subfamily::I4p},
        {49, Subfamily::I4pp}, {74, Subfamily::I4pp}, {82, Subfamily::I4pp},
    };
    const auto it = table.find(id);
    if (it == table.end()) throw std::out_of_range("unknown family id " + std::to_string(id));
    return it->second;
}

std::string describe(const FamilyRecord& r) {
    std::ostringstream out;
    out << (r.kind == Kind::G ? "X_" : "X'_");
    for (std::size_t i = 0; i < r.degrees.size(); ++i) out << (i ? "," : "") << r.degrees[i];
    out << " ⊂ P(";
    for (std::size_t i = 0; i < r.weights.size(); ++i) out << (i ? "," : "") << r.weights[i];
    out << ")";
    return out.str();
}

Rational anticanonical_cube(const FamilyRecord& r) {
    return anticanonical_cube(r.weights, r.degrees,
                              "family " + std::to_string(r.id) +
                                  (r.kind == Kind::G ? " (G)" : " (G')"));
}

const CatalogEntry& Catalog::family(int id) const {
    for (const auto& e : gprime)
        if (e.record.id == id) return e;
    throw std::out_of_range("unknown family id " + std::to_string(id));
}

const CatalogEntry& Catalog::codim2_family(int id) const {
    for (const auto& e : g)
        if (e.record.id == id) return e;
    throw std::out_of_range("unknown family id " + std::to_string(id));
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw CatalogError(where + ": " + what);
}

template <typename T>
T field(const json& j, const char* name, const std::string& where) {
    if (!j.contains(name)) fail(where, std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        fail(where, std::string("field '") + name + "' has the wrong type");
    }
}

Rational rational_field(const json& j, const char* name, const std::string& where) {
    const auto text = field<std::string>(j, name, where);
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        fail(where, std::string("field '") + name + "': " + e.what());
    }
}

std::optional<Rational> optional_rational(const json& j, const char* name,
                                          const std::string& where) {
    if (!j.contains(name)) return std::nullopt;
    return rational_field(j, name, where);
}

std::optional<std::string> optional_string(const json& j, const char* name,
                                           const std::string& where) {
    if (!j.contains(name)) return std::nullopt;
    return field<std::string>(j, name, where);
}

const std::vector<std::string>& link_tags() {
    static const std::vector<std::string> tags{"none", "QI", "EI", "II", "link"};
    return tags;
}

}  // namespace

CatalogEntry parse_catalog_entry(const json& j) {
    std::string where = "catalog element";
    if (!j.is_object()) fail(where, "not an object");
    CatalogEntry e;
    e.record.id = field<int>(j, "id", where);
    where = "family " + std::to_string(e.record.id);
    const auto& ids = catalog_ids();
    if (std::find(ids.begin(), ids.end(), e.record.id) == ids.end())
        fail(where, "field 'id': not a catalog family");

    const auto kind = field<std::string>(j, "kind", where);
    if (kind == "G") e.record.kind = Kind::G;
    else if (kind == "Gprime") e.record.kind = Kind::GPrime;
    else fail(where, "field 'kind': expected \"G\" or \"Gprime\"");
    where += e.record.kind == Kind::G ? " (G)" : " (G')";

    const auto weights = field<std::vector<int>>(j, "weights", where);
    try {
        e.record.weights = WeightSystem(weights);
    } catch (const StructuralError& err) {
        fail(where, std::string("field 'weights': ") + err.what());
    }
    e.record.degrees = field<std::vector<int>>(j, "degrees", where);
    const std::size_t nw = e.record.kind == Kind::G ? 6 : 5;
    const std::size_t nd = e.record.kind == Kind::G ? 2 : 1;
    if (weights.size() != nw)
        fail(where, "field 'weights': expected " + std::to_string(nw) + " entries");
    if (e.record.degrees.size() != nd)
        fail(where, "field 'degrees': expected " + std::to_string(nd) + " entries");
    for (int d : e.record.degrees)
        if (d < 1) fail(where, "field 'degrees': entries must be positive");

    try {
        e.record.subfamily = parse_subfamily(field<std::string>(j, "subfamily", where));
    } catch (const std::invalid_argument& err) {
        fail(where, std::string("field 'subfamily': ") + err.what());
    }
    if (e.record.subfamily != subfamily_of(e.record.id))
        fail(where, "field 'subfamily': expected " + to_string(subfamily_of(e.record.id)));

    e.golden.id = e.record.id;
    e.golden.a_cube = rational_field(j, "a_cube", where);

    for (const auto& b : field<json>(j, "basket", where)) {
        const std::string w = where + " basket";
        BasketEntry entry{field<std::string>(b, "type", w), field<int>(b, "count", w),
                          field<std::string>(b, "locus", w)};
        if (entry.count < 1) fail(w, "field 'count' must be positive");
        e.golden.basket.push_back(entry);
    }
    for (const auto& l : field<json>(j, "links", where)) {
        const std::string w = where + " links";
        LinkEntry entry;
        entry.point = field<std::string>(l, "point", w);
        entry.tag = field<std::string>(l, "tag", w);
        entry.condition = field<std::string>(l, "condition", w);
        const auto& tags = link_tags();
        if (std::find(tags.begin(), tags.end(), entry.tag) == tags.end())
            fail(w, "field 'tag': unknown tag '" + entry.tag + "'");
        entry.method = optional_string(l, "method", w);
        entry.b3_sign = optional_string(l, "b3_sign", w);
        entry.witness = optional_rational(l, "witness", w);
        e.golden.links.push_back(entry);
    }
    if (j.contains("centers")) {
        for (const auto& c : j.at("centers")) {
            const std::string w = where + " centers";
            CenterEntry entry;
            entry.center = field<std::string>(c, "center", w);
            if (entry.center != "smooth" && entry.center != "curve")
                fail(w, "field 'center': expected \"smooth\" or \"curve\"");
            entry.condition = c.contains("condition") ? field<std::string>(c, "condition", w) : "";
            entry.method = field<std::string>(c, "method", w);
            entry.degree = optional_rational(c, "degree", w);
            entry.gamma_sq = optional_rational(c, "gamma_sq", w);
            entry.delta_degree = optional_rational(c, "delta_degree", w);
            if (c.contains("pencil_multiplicity"))
                entry.pencil_multiplicity = field<int>(c, "pencil_multiplicity", w);
            if (c.contains("anchors")) entry.anchors = field<std::vector<int>>(c, "anchors", w);
            if (c.contains("isolating_degrees"))
                entry.isolating_degrees = field<std::vector<int>>(c, "isolating_degrees", w);
            if (c.contains("bound")) entry.bound = field<long long>(c, "bound", w);
            entry.limit = optional_rational(c, "limit", w);
            entry.witness = optional_rational(c, "witness", w);
            e.golden.centers.push_back(entry);
        }
    }
    return e;
}

std::vector<CatalogEntry> parse_catalog_entries(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw CatalogError(std::string("parse error: ") + err.what());
    }
    if (!doc.is_array()) throw CatalogError("parse error: top level must be a JSON array");
    std::vector<CatalogEntry> out;
    for (const auto& element : doc) out.push_back(parse_catalog_entry(element));
    return out;
}

Catalog parse_catalog(const std::string& text) {
    Catalog cat;
    for (auto& e : parse_catalog_entries(text))
        (e.record.kind == Kind::G ? cat.g : cat.gprime).push_back(std::move(e));
    const auto by_id = [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.record.id < b.record.id;
    };
    std::sort(cat.g.begin(), cat.g.end(), by_id);
    std::sort(cat.gprime.begin(), cat.gprime.end(), by_id);
    for (const auto* list : {&cat.g, &cat.gprime}) {
        std::vector<int> ids;
        for (const auto& e : *list) ids.push_back(e.record.id);
        if (ids != catalog_ids())
            throw CatalogError(std::string("catalog must contain each family exactly once as ") +
                               (list == &cat.g ? "G" : "Gprime"));
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

json to_json(const CatalogEntry& e) {
    json j;
    j["id"] = e.record.id;
    j["kind"] = e.record.kind == Kind::G ? "G" : "Gprime";
    j["weights"] = e.record.weights.values();
    j["degrees"] = e.record.degrees;
    j["subfamily"] = to_string(e.record.subfamily);
    j["a_cube"] = to_string(e.golden.a_cube);
    j["basket"] = json::array();
    for (const auto& b : e.golden.basket)
        j["basket"].push_back({{"type", b.type}, {"count", b.count}, {"locus", b.locus}});
    j["links"] = json::array();
    for (const auto& l : e.golden.links) {
        json lj{{"point", l.point}, {"tag", l.tag}, {"condition", l.condition}};
        if (l.method) lj["method"] = *l.method;
        if (l.b3_sign) lj["b3_sign"] = *l.b3_sign;
        if (l.witness) lj["witness"] = to_string(*l.witness);
        j["links"].push_back(lj);
    }
    if (!e.golden.centers.empty()) {
        j["centers"] = json::array();
        for (const auto& c : e.golden.centers) {
            json cj{{"center", c.center}, {"condition", c.condition}, {"method", c.method}};
            if (c.degree) cj["degree"] = to_string(*c.degree);
            if (c.gamma_sq) cj["gamma_sq"] = to_string(*c.gamma_sq);
            if (c.delta_degree) cj["delta_degree"] = to_string(*c.delta_degree);
            if (c.pencil_multiplicity) cj["pencil_multiplicity"] = *c.pencil_multiplicity;
            if (!c.anchors.empty()) cj["anchors"] = c.anchors;
            if (!c.isolating_degrees.empty()) cj["isolating_degrees"] = c.isolating_degrees;
            if (c.bound) cj["bound"] = *c.bound;
            if (c.limit) cj["limit"] = to_string(*c.limit);
            if (c.witness) cj["witness"] = to_string(*c.witness);
            j["centers"].push_back(cj);
        }
    }
    return j;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("FANO_WCI_CATALOG"); env && *env) return env;
    return FANO_WCI_DEFAULT_CATALOG;
}

}  // namespace fano
