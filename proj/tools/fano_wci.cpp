#include "fano/catalog.hpp"
#include "fano/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

bool known_family(int id) {
    for (int known : fano::catalog_ids())
        if (known == id) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Birational data of Fano weighted complete intersections"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "catalog file (default: $FANO_WCI_CATALOG or the shipped one)");

    int family = 0;
    std::string format = "md";
    auto* analyze = app.add_subcommand("analyze", "analyze one family");
    analyze->add_option("--family", family, "family number")->required();
    analyze->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md"}));

    auto* verify = app.add_subcommand("verify-tables", "check computed data against the catalog");
    verify->add_option("--catalog", catalog_path, "catalog file");

    auto* links = app.add_subcommand("links", "link construction data of one family");
    links->add_option("--family", family, "family number")->required();

    auto* basket = app.add_subcommand("basket", "singular points of one family");
    basket->add_option("--family", family, "family number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    fano::Catalog catalog;
    try {
        catalog = fano::load_catalog(catalog_path.empty() ? fano::default_catalog_path() : catalog_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (verify->parsed()) {
        const auto diffs = fano::verify_catalog(catalog);
        for (const auto& d : diffs) std::cout << d << "\n";
        if (!diffs.empty()) {
            std::cout << diffs.size() << " mismatch(es)\n";
            return kMismatch;
        }
        std::cout << "all " << fano::catalog_ids().size() << " families verified\n";
        return 0;
    }

    if (!known_family(family)) {
        std::cerr << "error: no family " << family << " in the catalog\n";
        return kUsage;
    }
    try {
        const fano::Report report = fano::analyze(catalog, family);
        if (analyze->parsed()) {
            if (format == "json") std::cout << fano::render_json(report).dump(2) << "\n";
            else std::cout << fano::render_markdown(report);
        } else if (links->parsed()) {
            std::cout << fano::render_links(report);
        } else {
            std::cout << fano::render_basket(report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: family " << family << ": " << e.what() << "\n";
        return kMismatch;
    }
    return 0;
}
