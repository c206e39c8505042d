#include "fano/report.hpp"

#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>

using namespace fano;
using nlohmann::json;

namespace {

std::string shipped_text() {
    std::ifstream in(FANO_WCI_TEST_CATALOG);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const Catalog& catalog() {
    static const Catalog c = load_catalog(FANO_WCI_TEST_CATALOG);
    return c;
}

// Index of the G' element of a family in the shipped array.
std::size_t gprime_index(const json& doc, int id) {
    for (std::size_t i = 0; i < doc.size(); ++i)
        if (doc[i]["id"] == id && doc[i]["kind"] == "Gprime") return i;
    FAIL("family " << id << " missing");
    return 0;
}

std::vector<std::string> verify_with(const std::function<void(json&)>& edit) {
    json doc = json::parse(shipped_text());
    edit(doc);
    return verify_catalog(parse_catalog(doc.dump()));
}

bool names_only(const std::vector<std::string>& diffs, int id) {
    if (diffs.empty()) return false;
    const std::string tag = "family " + std::to_string(id);
    for (const auto& d : diffs)
        if (d.rfind(tag, 0) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("the shipped catalog verifies") {
    const auto diffs = verify_catalog(catalog());
    for (const auto& d : diffs) MESSAGE(d);
    CHECK(diffs.empty());
}

TEST_CASE("every family resolves all centers") {
    for (int id : catalog_ids()) {
        CAPTURE(id);
        const Report r = analyze(catalog(), id);
        CHECK(r.all_resolved());
        CHECK(r.a_cube == catalog().family(id).golden.a_cube);
    }
}

TEST_CASE("No.50 report") {
    const Report r = analyze(catalog(), 50);
    const std::string md = render_markdown(r);
    CHECK(md.find("A^3 = 7/60") != std::string::npos);
    // four point rows: half point, third point, fifth point and the cAx point
    int rows = 0;
    std::istringstream lines(md);
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("| p", 0) == 0) ++rows;
    CHECK(rows == 4);
    CHECK(md.find("Link to X_10,14 ∈ G_50") != std::string::npos);
}

TEST_CASE("No.19 report lists both half point branches") {
    const std::string md = render_markdown(analyze(catalog(), 19));
    CHECK(md.find("EI [not-exists-wci(1,1,2)]") != std::string::npos);
    CHECK(md.find("II [exists-wci(1,1,2)]") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    for (int id : {17, 23, 50, 82}) {
        CHECK(render_markdown(analyze(catalog(), id)) == render_markdown(analyze(catalog(), id)));
        CHECK(render_json(analyze(catalog(), id)).dump() == render_json(analyze(catalog(), id)).dump());
    }
}

TEST_CASE("JSON output round trips through the catalog parser") {
    for (int id : catalog_ids()) {
        CAPTURE(id);
        const json out = render_json(analyze(catalog(), id));
        const auto entries = parse_catalog_entries(out.dump());
        REQUIRE(entries.size() == 2);
        CHECK(entries[0].record == catalog().codim2_family(id).record);
        CHECK(entries[1].record == catalog().family(id).record);
        CHECK(entries[1].golden.basket == catalog().family(id).golden.basket);
        CHECK(entries[1].golden.a_cube == catalog().family(id).golden.a_cube);
        CHECK(out[1]["birigid_summary"] == "all-centers-resolved");
    }
}

TEST_CASE("links and basket renderings") {
    const Report r = analyze(catalog(), 82);
    const std::string links = render_links(r);
    CHECK(links.find("X'_22 ⊂ P(1,2,5,11,4)") != std::string::npos);
    CHECK(links.find("b = 4") != std::string::npos);
    CHECK(render_basket(analyze(catalog(), 29)).find("p2p4 = 3 × 1/2(1,1,1)") != std::string::npos);
}

TEST_CASE("matrix certificates serialize as nested arrays") {
    const Dispatch d =
        dispatch(catalog().family(50).record,
                 quotient_center(quotient_points(catalog().family(50).record).front()), {"exists-wci(1,3,4)"});
    const json j = certificate_to_json(d.certificate);
    const json expected = json::array({json::array({"-3/4", "1"}), json::array({"1", "-7/5"})});
    CHECK(j["matrix_at_floor"] == expected);
}

TEST_CASE("a single injected fault names its family") {
    SUBCASE("cube of No.19") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 19)]["a_cube"] = "1/2"; }), 19));
    }
    SUBCASE("cube of a G record") {
        CHECK(names_only(verify_with([](json& d) { d[2]["a_cube"] = "1/3"; }), 23));
    }
    SUBCASE("basket count") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 29)]["basket"][0]["count"] = 2; }), 29));
    }
    SUBCASE("basket type") {
        CHECK(names_only(verify_with([](json& d) {
            d[gprime_index(d, 41)]["basket"][0]["type"] = "1/3(1,1,1)";
        }), 41));
    }
    SUBCASE("link tag") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 42)]["links"][1]["tag"] = "EI"; }), 42));
    }
    SUBCASE("link method") {
        CHECK(names_only(verify_with([](json& d) {
            d[gprime_index(d, 49)]["links"][0]["method"] = "nef-divisor";
        }), 49));
    }
    SUBCASE("link sign") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 77)]["links"][0]["b3_sign"] = "<0"; }), 77));
    }
    SUBCASE("nef witness") {
        CHECK(names_only(verify_with([](json& d) {
            d[gprime_index(d, 50)]["links"][0]["witness"] = "-1/4";
        }), 50));
    }
    SUBCASE("link condition") {
        CHECK(names_only(verify_with([](json& d) {
            d[gprime_index(d, 30)]["links"][0]["condition"] = "monomial-present(y z^2)";
        }), 30));
    }
    SUBCASE("missing link row") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 55)]["links"].erase(0); }), 55));
    }
    SUBCASE("isolation bound") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 42)]["centers"][0]["bound"] = 12; }), 42));
    }
    SUBCASE("isolation limit") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 69)]["centers"][0]["limit"] = "10"; }), 69));
    }
    SUBCASE("curve witness") {
        CHECK(names_only(verify_with([](json& d) { d[gprime_index(d, 19)]["centers"][1]["witness"] = "-1/3"; }), 19));
    }
    SUBCASE("curve input that no longer excludes") {
        CHECK(names_only(verify_with([](json& d) {
            auto& c = d[gprime_index(d, 23)]["centers"][1];
            c["gamma_sq"] = "0";
            c.erase("witness");
        }), 23));
    }
    SUBCASE("G' weights") {
        CHECK(names_only(verify_with([](json& d) {
            d[gprime_index(d, 74)]["weights"] = json::array({1, 2, 3, 9, 4});
            d[gprime_index(d, 74)]["weights"][3] = 8;
            d[gprime_index(d, 74)]["degrees"][0] = 17;
        }), 74));
    }
}
