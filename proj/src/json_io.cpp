#include "benz/json_io.hpp"

#include <fstream>

namespace benz {

Json geometry_to_json(const CircleGeometry& g) {
    Json j;
    j["version"] = 1;
    j["rho"] = g.rho;
    j["q"] = g.q;
    j["extended"] = g.extended;
    j["provenance"] = Json{{"construction", g.prov.construction}, {"q", g.prov.q}, {"phi", g.prov.phi}};
    j["points"] = g.point_labels;
    j["circles"] = g.circles;
    Json par = Json::array();
    for (const auto& rel : g.parallel) {
        Json classes = Json::array();
        for (const auto& cls : rel) classes.push_back(cls);
        par.push_back(classes);
    }
    j["parallel"] = par;
    if (!g.circle_type.empty()) {
        std::vector<int> t(g.circle_type.begin(), g.circle_type.end());
        j["circle_types"] = t;
    }
    if (!g.nucleus_pts.empty()) j["nucleus_points"] = g.nucleus_pts;
    return j;
}

CircleGeometry geometry_from_json(const Json& j) {
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw Error(Err::Invalid, "unsupported geometry file version");
    CircleGeometry g;
    g.rho = j["rho"].get<int>();
    g.q = j["q"].get<int64_t>();
    g.extended = j["extended"].get<bool>();
    g.prov.construction = j["provenance"]["construction"].get<std::string>();
    g.prov.q = j["provenance"]["q"].get<int64_t>();
    g.prov.phi = j["provenance"]["phi"].get<int>();
    g.point_labels = j["points"].get<std::vector<std::string>>();
    g.circles = j["circles"].get<std::vector<std::vector<int32_t>>>();
    for (const auto& rel : j["parallel"]) {
        std::vector<std::vector<int32_t>> classes;
        for (const auto& cls : rel) classes.push_back(cls.get<std::vector<int32_t>>());
        g.parallel.push_back(std::move(classes));
    }
    if (j.contains("circle_types")) {
        auto t = j["circle_types"].get<std::vector<int>>();
        g.circle_type.assign(t.begin(), t.end());
    }
    if (j.contains("nucleus_points")) g.nucleus_pts = j["nucleus_points"].get<std::vector<int32_t>>();
    g.class_of.assign(g.parallel.size(), std::vector<int32_t>(g.point_labels.size(), -1));
    for (size_t r = 0; r < g.parallel.size(); ++r)
        for (int32_t c = 0; c < int32_t(g.parallel[r].size()); ++c)
            for (int32_t p : g.parallel[r][c]) g.class_of[r][p] = c;
    g.finalize();
    return g;
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Err::Invalid, "cannot write " + path);
    out << j.dump(1) << "\n";
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::Invalid, "cannot read " + path);
    return Json::parse(in);
}

Json rat_to_json(const Rat& r) {
    if (r.is_integer()) return Json(r.as_int());
    return Json::array({(long long)r.num, (long long)r.den});
}

Json scheme_to_json(const SchemeData& s, bool ok, const std::string& witness) {
    Json j;
    j["version"] = 1;
    j["scheme_ok"] = ok;
    if (!ok) {
        j["witness"] = witness;
        return j;
    }
    j["relations"] = s.labels;
    j["valencies"] = s.valencies;
    j["p_matrix"] = s.P;
    j["multiplicities"] = s.multiplicities;
    j["intersection_numbers"] = s.p;
    return j;
}

Json gp_to_json(const GPProfile& p) {
    Json j;
    j["version"] = 1;
    j["point"] = p.base;
    j["L_size"] = int64_t(p.L.size());
    j["R_size"] = int64_t(p.R.size());
    j["delta"] = p.delta;
    j["r_degree"] = p.r_degree;
    j["degrees_ok"] = p.degrees_ok;
    Json spec = Json::array();
    for (auto [lam, mult] : p.spectrum) spec.push_back(Json::array({lam, mult}));
    j["N_spectrum"] = spec;
    j["lambda2_squared"] = p.lambda2_squared;
    if (p.lambda2_closed_form >= 0) j["lambda2_closed_form"] = p.lambda2_closed_form;
    j["eigenvectors_ok"] = p.eigenvectors_ok;
    return j;
}

Json bounds_to_json(const BoundsReport& rep) {
    Json j;
    j["f"] = rep.f;
    j["E"] = rep.E;
    j["point_bound"] = rat_to_json(rep.count_bound);
    j["prop_bound"] = rat_to_json(rep.prop_bound);
    j["a"] = rep.a;
    j["best_point"] = rep.best_point;
    j["best_coverage"] = rep.best_coverage;
    j["count_bound_achieved"] = rep.count_bound_achieved;
    j["prop_achieved"] = rep.prop_achieved;
    j["hm_threshold"] = rep.hm_threshold;
    j["stability_applies"] = rep.stability_applies;
    j["stability_threshold_approx"] = rep.stability_threshold_approx;
    j["mixing_available"] = rep.mixing_available;
    Json mix = Json::array();
    for (const auto& row : rep.mixing)
        mix.push_back(Json{{"point", row.point},
                           {"S", row.S},
                           {"T", row.T},
                           {"lhs", rat_to_json(row.lhs)},
                           {"rhs", rat_to_json(row.rhs)},
                           {"slack", rat_to_json(row.slack)},
                           {"holds", row.holds}});
    j["mixing"] = mix;
    j["mixing_all_hold"] = rep.mixing_all_hold;
    return j;
}

Json search_to_json(const CircleGeometry& g, const SearchResult& res) {
    Json j;
    j["version"] = 1;
    j["geometry"] = g.name();
    j["maximum"] = res.maximum;
    j["complete"] = res.complete;
    j["upper_bound"] = res.upper_bound;
    j["nodes"] = res.nodes;
    Json fams = Json::array();
    Json classes = Json::array();
    Json bounds = Json::array();
    for (const auto& ids : res.families) {
        fams.push_back(ids);
        IntersectingFamily fam{&g, ids};
        classes.push_back(family_class_name(classify_family(fam).cls));
        bounds.push_back(bounds_to_json(bounds_report(fam)));
    }
    j["families"] = fams;
    j["classifications"] = classes;
    j["bounds_reports"] = bounds;
    return j;
}

} // namespace benz
