#include "fano/report.hpp"

#include <map>
#include <sstream>

namespace fano {

using nlohmann::json;

namespace {

std::string sign_tag(const Rational& q) {
    if (q < 0) return "<0";
    if (q > 0) return ">0";
    return "=0";
}

std::string point_label(const QuotientSingularity& q) {
    std::string s = q.locus + " = ";
    if (q.count > 1) s += std::to_string(q.count) + " × ";
    return s + q.type();
}

bool is_untwist(const Dispatch& d) { return std::holds_alternative<Untwist>(d.certificate); }

std::vector<CenterEntry> catalog_centers(const Catalog& catalog, int id, const std::string& kind) {
    std::vector<CenterEntry> out;
    for (const auto& c : catalog.family(id).golden.centers)
        if (c.center == kind) out.push_back(c);
    return out;
}

bool has_isolation_inputs(const CenterEntry& c) {
    return !c.anchors.empty() || !c.isolating_degrees.empty();
}

std::string weights_text(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

}  // namespace

Report analyze(const Catalog& catalog, int id) {
    Report r;
    r.family_id = id;
    r.gprime = catalog.family(id).record;
    r.g = catalog.codim2_family(id).record;
    r.a_cube = anticanonical_cube(r.gprime);
    r.link_data = build_counterpart(r.g);
    r.basket = basket(r.gprime);
    r.cax = cax_point(r.gprime);
    r.extraction = extractions_at_cax(r.cax, r.link_data);

    auto run = [&](Center c, std::string label, const FlagSet& flags) {
        CenterResult cr;
        cr.label = std::move(label);
        try {
            cr.result = dispatch(r.gprime, c, flags);
        } catch (const DispatchError& e) {
            cr.error = e.what();
        }
        cr.center = std::move(c);
        if (!cr.result) {
            r.uncovered.push_back(cr.label + ": " + cr.error);
        } else if (!cr.result->verdict.excluded && !is_untwist(*cr.result)) {
            r.uncovered.push_back(cr.label + (cr.center.condition.empty()
                                                  ? ""
                                                  : " (" + cr.center.condition + ")") +
                                  ": " + cr.result->verdict.method + " does not exclude");
        }
        r.centers.push_back(std::move(cr));
    };

    // Curves: those in the smooth locus have degree at least 1; through the
    // cAx point the degree is a positive multiple of 1/modulus.
    run(curve_center(Rational(1)), "curves in the smooth locus", {});
    const auto curves = catalog_centers(catalog, id, "curve");
    if (curves.empty()) {
        run(curve_center(frac(1, r.cax.modulus)), "curves through p4", {});
    } else {
        for (const auto& entry : curves) {
            if (!entry.degree) throw CatalogError("family " + std::to_string(id) +
                                                  ": curve center without degree");
            Center c = curve_center(*entry.degree);
            c.condition = entry.condition;
            c.data = entry;
            run(c, "curves of degree " + to_string(*entry.degree) + " through p4", {});
        }
    }

    std::vector<CenterEntry> smooth;
    for (const auto& entry : catalog_centers(catalog, id, "smooth"))
        if (has_isolation_inputs(entry) || entry.method != "isolation") smooth.push_back(entry);
    if (smooth.empty()) {
        run(smooth_center(), "smooth points", {});
    } else {
        for (const auto& entry : smooth) {
            Center c = smooth_center();
            c.condition = entry.condition;
            c.data = entry;
            run(c, "smooth points", {});
        }
    }

    for (const auto& q : quotient_points(r.gprime)) {
        const auto conditions = branch_conditions(id, q.locus);
        if (conditions.empty()) {
            run(quotient_center(q), point_label(q), {});
            continue;
        }
        for (const auto& cond : conditions) {
            Center c = quotient_center(q);
            c.condition = cond;
            run(c, point_label(q), {cond});
        }
    }
    run(cax_center(r.cax), "p4 = cAx/" + std::to_string(r.cax.modulus), {});
    return r;
}

std::vector<LinkEntry> computed_links(const Report& r) {
    std::vector<LinkEntry> out;
    for (const auto& cr : r.centers) {
        const Center& c = cr.center;
        if (c.kind != CenterKind::QuotientPoint && c.kind != CenterKind::CAxPoint) continue;
        LinkEntry e;
        e.point = c.locus;
        e.condition = c.condition;
        if (!cr.result) {
            e.tag = "none";
            e.method = "uncovered";
            out.push_back(e);
            continue;
        }
        e.method = cr.result->verdict.method;
        if (const auto* u = std::get_if<Untwist>(&cr.result->certificate)) {
            e.tag = u->tag;
        } else {
            e.tag = "none";
            e.b3_sign = sign_tag(b_cubed(r.a_cube, *c.quotient));
            e.witness = cr.result->verdict.witness;
        }
        out.push_back(e);
    }
    return out;
}

std::vector<CenterEntry> computed_centers(const Report& r) {
    std::vector<CenterEntry> out;
    for (const auto& cr : r.centers) {
        const Center& c = cr.center;
        const bool smooth = c.kind == CenterKind::SmoothPoint;
        if (!smooth && !(c.kind == CenterKind::Curve && c.data)) continue;
        CenterEntry e = c.data.value_or(CenterEntry{});
        e.center = smooth ? "smooth" : "curve";
        e.condition = c.condition;
        if (!cr.result) {
            e.method = "uncovered";
            out.push_back(e);
            continue;
        }
        e.method = cr.result->verdict.method;
        e.witness = std::nullopt;
        std::visit(
            [&](const auto& cert) {
                using T = std::decay_t<decltype(cert)>;
                if constexpr (std::is_same_v<T, Isolation>) {
                    e.bound = cert.bound;
                    e.limit = cert.limit;
                } else if constexpr (std::is_same_v<T, CurveGamma>) {
                    e.witness = cr.result->verdict.witness;
                    if (cert.form == CurveGamma::Form::CycleDelta) e.delta_degree = cert.delta_degree;
                } else if constexpr (std::is_same_v<T, QuadraticBound>) {
                    e.witness = cert.minimum;
                }
            },
            cr.result->certificate);
        out.push_back(e);
    }
    return out;
}

json certificate_to_json(const Certificate& c, const std::vector<std::string>& names) {
    json j;
    j["method"] = method_of(c);
    std::visit(
        [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, CurveDegree>) {
                j["degree"] = to_string(cert.deg);
                j["a_cube"] = to_string(cert.a_cube);
            } else if constexpr (std::is_same_v<T, CurveGamma>) {
                j["degree"] = to_string(cert.deg);
                j["a_cube"] = to_string(cert.a_cube);
                if (cert.form != CurveGamma::Form::DoublePencil) j["gamma_sq"] = to_string(cert.gamma_sq);
                if (cert.form == CurveGamma::Form::CycleDelta)
                    j["delta_degree"] = to_string(cert.delta_degree);
                if (cert.form == CurveGamma::Form::DoublePencil)
                    j["pencil_multiplicity"] = cert.multiplicity;
            } else if constexpr (std::is_same_v<T, Isolation>) {
                j["bound"] = cert.bound;
                j["limit"] = to_string(cert.limit);
            } else if constexpr (std::is_same_v<T, SurfacePair>) {
                j["a1"] = cert.a1;
                j["b_cube"] = to_string(cert.b_cube);
                j["irreducible"] = cert.irreducible;
                json support = json::array();
                for (const auto& m : cert.gamma_support.monomials) {
                    if (names.empty()) support.push_back(m);
                    else support.push_back(render_monomial(m, names));
                }
                j["gamma_support"] = support;
            } else if constexpr (std::is_same_v<T, NefDivisor>) {
                json lifts = json::array();
                for (const auto& l : cert.lifts)
                    lifts.push_back({{"degree", l.degree},
                                     {"vanishing_order", to_string(l.vanishing_order)},
                                     {"class_b", to_string(l.class_b)},
                                     {"class_e", to_string(l.class_e)}});
                j["lifts"] = lifts;
                j["c"] = to_string(cert.c);
                j["m_b2"] = to_string(cert.m_b2);
            } else if constexpr (std::is_same_v<T, NegDefMatrix>) {
                const auto m = cert.at(cert.parameter_floor);
                j["parameter_floor"] = to_string(cert.parameter_floor);
                j["gamma_dot_sum"] = to_string(cert.s);
                j["sum_sq"] = to_string(cert.t);
                j["matrix_at_floor"] =
                    json::array({json::array({to_string(m[0][0]), to_string(m[0][1])}),
                                 json::array({to_string(m[1][0]), to_string(m[1][1])})});
            } else if constexpr (std::is_same_v<T, InfiniteCurves>) {
                j["b_dot_c"] = to_string(cert.b_dot_c);
                j["e_dot_c"] = to_string(cert.e_dot_c);
            } else if constexpr (std::is_same_v<T, QuadraticBound>) {
                j["a_sq"] = to_string(cert.a_sq);
                j["gamma_degree"] = to_string(cert.gamma_degree);
                j["delta_degree"] = to_string(cert.delta_degree);
                j["gamma_sq"] = to_string(cert.gamma_sq);
                j["gamma_delta"] = to_string(cert.gamma_delta);
                j["delta_sq"] = to_string(cert.delta_sq);
                j["minimum"] = to_string(cert.minimum);
            } else if constexpr (std::is_same_v<T, Untwist>) {
                j["tag"] = cert.tag;
                if (cert.counterpart) j["counterpart"] = *cert.counterpart;
            }
        },
        c);
    return j;
}

json render_json(const Report& r) {
    CatalogEntry g;
    g.record = r.g;
    g.golden.id = r.family_id;
    g.golden.a_cube = anticanonical_cube(r.g);

    CatalogEntry gp;
    gp.record = r.gprime;
    gp.golden.id = r.family_id;
    gp.golden.a_cube = r.a_cube;
    gp.golden.basket = r.basket;
    gp.golden.links = computed_links(r);
    gp.golden.centers = computed_centers(r);

    json gpj = to_json(gp);
    const auto& s = r.link_data.standard;
    json roles = json::array();
    for (auto i : s.role_map) roles.push_back(i);
    gpj["link_data"] = {{"b", r.link_data.b},
                        {"role_map", roles},
                        {"standard_weights", s.reordered_weights.values()},
                        {"xprime_weights", r.link_data.xprime_weights.values()},
                        {"xprime_degree", r.link_data.xprime_degree},
                        {"z_weights", r.link_data.z_weights.values()},
                        {"z_degree", r.link_data.z_degree},
                        {"equation_shape", r.link_data.equation_shape == EquationShape::SinglePrime
                                               ? "I'"
                                               : "I''"}};
    json weights = json::array();
    for (const auto& w : r.extraction.ambient_weights) weights.push_back(to_string(w));
    gpj["cax"] = {{"modulus", r.cax.modulus},
                  {"square_type", r.cax.square_type},
                  {"vertex", r.cax.vertex},
                  {"extraction",
                   {{"count", r.extraction.count},
                    {"ambient_weights", weights},
                    {"discrepancy", to_string(r.extraction.discrepancy)}}}};
    if (r.cax.k) gpj["cax"]["k"] = *r.cax.k;

    json verdicts = json::array();
    for (const auto& cr : r.centers) {
        json v{{"center", cr.label}, {"condition", cr.center.condition}};
        if (cr.result) {
            v["excluded"] = cr.result->verdict.excluded;
            v["certificate"] =
                certificate_to_json(cr.result->certificate, coordinate_names(r.gprime.weights));
            if (cr.result->verdict.witness) v["witness"] = to_string(*cr.result->verdict.witness);
        } else {
            v["error"] = cr.error;
        }
        verdicts.push_back(v);
    }
    gpj["verdicts"] = verdicts;
    if (r.all_resolved()) gpj["birigid_summary"] = "all-centers-resolved";
    else gpj["birigid_summary"] = {{"uncovered-cases", r.uncovered}};

    return json::array({to_json(g), gpj});
}

namespace {

std::string method_cell(const Report& r, const CenterResult& cr) {
    if (!cr.result) return "uncovered: " + cr.error;
    if (is_untwist(*cr.result)) return "";
    std::string s;
    if (cr.center.quotient) {
        const Rational b3 = b_cubed(r.a_cube, *cr.center.quotient);
        s = "B^3 " + std::string(b3 < 0 ? "< 0" : b3 > 0 ? "> 0" : "= 0") + ", ";
    }
    s += cr.result->verdict.method;
    if (const auto* n = std::get_if<NefDivisor>(&cr.result->certificate)) {
        for (const auto& l : n->lifts)
            if (l.class_b != 0 && l.class_e / l.class_b == n->c) {
                s += ", M = " + to_string(l.class_b) + "B + " +
                     (l.class_e == 1 ? std::string() : to_string(l.class_e)) + "E";
                break;
            }
    }
    if (cr.result->verdict.witness) s += ", witness " + to_string(*cr.result->verdict.witness);
    return s;
}

std::string link_cell(const Report& r, const CenterResult& cr) {
    if (!cr.result) return "";
    const auto* u = std::get_if<Untwist>(&cr.result->certificate);
    if (!u) return "none";
    if (u->tag == "link")
        return "Link to X_" + std::to_string(r.g.degrees.at(0)) + "," +
               std::to_string(r.g.degrees.at(1)) + " ∈ G_" + std::to_string(r.family_id);
    return u->tag;
}

}  // namespace

std::string render_markdown(const Report& r) {
    std::ostringstream out;
    out << "## No. " << r.family_id << ": " << describe(r.gprime) << "\n\n";
    out << "A^3 = " << to_string(r.a_cube) << ", b = " << r.link_data.b << ", counterpart "
        << describe(r.g) << ", subfamily " << to_string(r.gprime.subfamily) << "\n\n";
    out << "| center | method | link |\n|---|---|---|\n";

    // One row per point; condition branches share the row.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const CenterResult*>> rows;
    for (const auto& cr : r.centers) {
        if (cr.center.kind != CenterKind::QuotientPoint && cr.center.kind != CenterKind::CAxPoint)
            continue;
        if (!rows.count(cr.label)) order.push_back(cr.label);
        rows[cr.label].push_back(&cr);
    }
    for (const auto& label : order) {
        std::string method;
        std::string link;
        for (const auto* cr : rows[label]) {
            const std::string suffix =
                cr->center.condition.empty() ? "" : " [" + cr->center.condition + "]";
            const std::string m = method_cell(r, *cr);
            if (!m.empty()) method += (method.empty() ? "" : "; ") + m + suffix;
            link += (link.empty() ? "" : "; ") + link_cell(r, *cr) + suffix;
        }
        out << "| " << label << " | " << method << " | " << link << " |\n";
    }

    out << "\n| other centers | method | verdict |\n|---|---|---|\n";
    for (const auto& cr : r.centers) {
        if (cr.center.kind != CenterKind::Curve && cr.center.kind != CenterKind::SmoothPoint)
            continue;
        const std::string suffix =
            cr.center.condition.empty() ? "" : " [" + cr.center.condition + "]";
        std::string verdict = cr.result ? (cr.result->verdict.excluded ? "excluded" : "not excluded")
                                        : "uncovered";
        out << "| " << cr.label << suffix << " | " << method_cell(r, cr) << " | " << verdict
            << " |\n";
    }
    out << "\n" << (r.all_resolved() ? "all centers resolved" : "uncovered cases:") << "\n";
    for (const auto& u : r.uncovered) out << "- " << u << "\n";
    return out.str();
}

std::string render_links(const Report& r) {
    std::ostringstream out;
    const auto& s = r.link_data.standard;
    out << "No. " << r.family_id << ": " << describe(r.g) << " <-> " << describe(r.gprime) << "\n";
    out << "standard form (a0..a5) = " << weights_text(s.reordered_weights.values()) << ", b = "
        << r.link_data.b << ", Z of degree " << r.link_data.z_degree << " in P"
        << weights_text(r.link_data.z_weights.values()) << "\n";
    out << "cAx/" << r.cax.modulus << " point, " << (r.cax.square_type ? "square" : "non-square")
        << " type, " << r.extraction.count << " extraction(s) with weights (";
    for (std::size_t i = 0; i < 4; ++i)
        out << (i ? "," : "") << to_string(r.extraction.ambient_weights[i]);
    out << "), discrepancy " << to_string(r.extraction.discrepancy);
    if (r.cax.k) out << ", k = " << *r.cax.k;
    out << "\n";
    for (const auto& l : computed_links(r)) {
        out << l.point << " " << l.tag;
        if (!l.condition.empty()) out << " [" << l.condition << "]";
        out << "\n";
    }
    return out.str();
}

std::string render_basket(const Report& r) {
    std::ostringstream out;
    out << "No. " << r.family_id << ": " << describe(r.gprime) << ", A^3 = " << to_string(r.a_cube)
        << "\n";
    for (const auto& b : r.basket) {
        out << b.locus << " = ";
        if (b.count > 1) out << b.count << " × ";
        out << b.type << "\n";
    }
    return out.str();
}

namespace {

std::string link_key(const LinkEntry& l) { return l.point + " [" + l.condition + "]"; }

std::string center_key(const CenterEntry& c) {
    return c.center + " [" + c.condition + "] " + c.method;
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
    if (!v) return "absent";
    if constexpr (std::is_same_v<T, Rational>) return to_string(*v);
    else if constexpr (std::is_same_v<T, std::string>) return *v;
    else return std::to_string(*v);
}

template <class T>
void compare_optional(std::vector<std::string>& diffs, const std::string& where, const char* name,
                      const std::optional<T>& golden, const std::optional<T>& computed) {
    if (golden && golden != computed)
        diffs.push_back(where + ": " + name + " golden " + opt_text(golden) + ", computed " +
                        opt_text(computed));
}

void verify_family(const Catalog& catalog, int id, std::vector<std::string>& diffs) {
    const std::string fam = "family " + std::to_string(id);
    const auto& ge = catalog.codim2_family(id);
    const auto& gpe = catalog.family(id);

    const Rational g_cube = anticanonical_cube(ge.record);
    if (g_cube != ge.golden.a_cube)
        diffs.push_back(fam + " (G): a_cube golden " + to_string(ge.golden.a_cube) + ", computed " +
                        to_string(g_cube));

    const Report r = analyze(catalog, id);
    if (r.a_cube != gpe.golden.a_cube)
        diffs.push_back(fam + " (G'): a_cube golden " + to_string(gpe.golden.a_cube) +
                        ", computed " + to_string(r.a_cube));

    const FamilyRecord built = counterpart_record(r.link_data, ge.record.subfamily);
    if (built.weights != gpe.record.weights || built.degrees != gpe.record.degrees)
        diffs.push_back(fam + ": counterpart of the G record is " + describe(built) +
                        ", catalog has " + describe(gpe.record));
    if (gpe.record.subfamily != ge.record.subfamily)
        diffs.push_back(fam + ": G and G' subfamilies differ");
    const FamilyRecord back = counterpart_inverse(gpe.record);
    if (back.weights != ge.record.weights || back.degrees != ge.record.degrees)
        diffs.push_back(fam + ": inverse construction gives " + describe(back) + ", catalog has " +
                        describe(ge.record));

    if (r.basket != gpe.golden.basket) {
        std::string got;
        for (const auto& b : r.basket)
            got += " " + b.locus + ":" + std::to_string(b.count) + "x" + b.type;
        diffs.push_back(fam + ": basket differs, computed" + got);
    }

    const auto links = computed_links(r);
    std::map<std::string, const LinkEntry*> by_key;
    for (const auto& l : links) by_key[link_key(l)] = &l;
    std::set<std::string> seen;
    for (const auto& golden : gpe.golden.links) {
        const std::string key = link_key(golden);
        const std::string where = fam + " link " + key;
        seen.insert(key);
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            diffs.push_back(where + ": not produced");
            continue;
        }
        const LinkEntry& c = *it->second;
        if (golden.tag != c.tag)
            diffs.push_back(where + ": tag golden " + golden.tag + ", computed " + c.tag);
        compare_optional(diffs, where, "method", golden.method, c.method);
        compare_optional(diffs, where, "b3_sign", golden.b3_sign, c.b3_sign);
        compare_optional(diffs, where, "witness", golden.witness, c.witness);
    }
    for (const auto& l : links)
        if (!seen.count(link_key(l)))
            diffs.push_back(fam + " link " + link_key(l) + ": computed but not in catalog");

    const auto centers = computed_centers(r);
    std::map<std::string, const CenterEntry*> center_by_key;
    for (const auto& c : centers) center_by_key[center_key(c)] = &c;
    std::set<std::string> center_seen;
    for (const auto& golden : gpe.golden.centers) {
        const std::string key = center_key(golden);
        const std::string where = fam + " center " + key;
        center_seen.insert(key);
        const auto it = center_by_key.find(key);
        if (it == center_by_key.end()) {
            diffs.push_back(where + ": not produced");
            continue;
        }
        const CenterEntry& c = *it->second;
        compare_optional(diffs, where, "bound", golden.bound, c.bound);
        compare_optional(diffs, where, "limit", golden.limit, c.limit);
        compare_optional(diffs, where, "witness", golden.witness, c.witness);
        compare_optional(diffs, where, "delta_degree", golden.delta_degree, c.delta_degree);
    }
    for (const auto& c : centers)
        if (!center_seen.count(center_key(c)))
            diffs.push_back(fam + " center " + center_key(c) + ": computed but not in catalog");

    for (const auto& u : r.uncovered) diffs.push_back(fam + ": uncovered case " + u);
}

}  // namespace

std::vector<std::string> verify_catalog(const Catalog& catalog) {
    std::vector<std::string> diffs;
    for (int id : catalog_ids()) {
        try {
            verify_family(catalog, id, diffs);
        } catch (const std::exception& e) {
            diffs.push_back("family " + std::to_string(id) + ": " + e.what());
        }
    }
    return diffs;
}

}  // namespace fano
