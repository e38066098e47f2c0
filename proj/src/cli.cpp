#include "benz/cli.hpp"

#include <iostream>

#include "CLI11.hpp"

#include "benz/json_io.hpp"

namespace benz {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

void print_parameter_table(const CircleGeometry& g, std::ostream& os) {
    os << g.name() << "\n";
    os << "  rho                 " << g.rho << (g.extended ? " (extended)" : "") << "\n";
    os << "  q                   " << g.q << "\n";
    os << "  points              " << g.num_points() << "\n";
    os << "  circles             " << g.num_circles() << "\n";
    os << "  circle size         " << g.circle_size() << "\n";
    os << "  circles per point   " << (g.num_points() ? int64_t(g.pencil(0).size()) : 0) << "\n";
    if (g.rho_classes() > 0)
        os << "  parallel classes    " << g.rho_classes() << " x " << g.parallel[0].size()
           << " of size " << g.parallel[0][0].size() << "\n";
}

MatrixKind matrix_kind_for(const CircleGeometry& g, bool spliced) {
    if (g.extended) return MatrixKind::ExtendedLaguerre;
    if (g.rho == 0 && g.q % 2 == 0) return MatrixKind::MobiusEven;
    if (g.rho == 1 && g.q % 2 == 1) return MatrixKind::LaguerreOdd;
    if (g.rho == 2 && g.q % 2 == 0) return MatrixKind::MinkowskiEven;
    if (g.rho == 2 && g.q % 2 == 1 && spliced) return MatrixKind::MinkowskiOddSpliced;
    throw Error(Err::Invalid, "no reference matrix for this geometry");
}

std::vector<int> disjoint_relation_indices(const SchemeData& s) {
    std::vector<int> idx;
    for (size_t r = 0; r < s.labels.size(); ++r)
        if (s.labels[r].find("|s|=0") != std::string::npos) idx.push_back(int(r));
    if (idx.empty()) throw Error(Err::Invalid, "no disjointness relation present");
    return idx;
}

int64_t pencil_size_of(const CircleGeometry& g) {
    return g.extended ? g.q * g.q : g.q * g.q + (1 - g.rho) * g.q;
}

int cmd_construct(const std::string& type, int64_t q, int phi, const std::string& out) {
    CircleGeometry g = build_geometry(type, q, phi);
    Json j = geometry_to_json(g);
    if (out.empty()) {
        print_parameter_table(g, std::cerr);
        std::cout << j.dump(1) << "\n";
    } else {
        save_json(j, out);
        print_parameter_table(g, std::cout);
        std::cout << "written " << out << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& in) {
    CircleGeometry g = geometry_from_json(load_json(in));
    VerifyReport rep = verify_geometry(g);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                  << (c.pass ? "" : ": " + c.witness) << "\n";
    return rep.pass() ? kExitOk : kExitMismatch;
}

int cmd_scheme(const std::string& in, bool splice, const std::string& expect,
               const std::string& out) {
    CircleGeometry g = geometry_from_json(load_json(in));
    RelationFamily fam = splice ? splice_minkowski_odd(g) : intersection_relations(g);
    SchemeResult res = verify_scheme(fam);
    if (!res.ok) {
        Json j = scheme_to_json(res.data, false, res.witness);
        std::cout << j.dump(1) << "\n";
        std::cerr << "scheme verification failed: " << res.witness << "\n";
        return kExitMismatch;
    }
    eigenvalue_matrix(res.data);
    Json j = scheme_to_json(res.data, true, "");
    if (!out.empty()) save_json(j, out);
    std::cout << j.dump(1) << "\n";
    if (!expect.empty()) {
        if (expect != "paper" && expect != "reference") {
            std::cerr << "unknown --expect value, use 'reference'\n";
            return kExitUsage;
        }
        auto want = reference_matrix(matrix_kind_for(g, splice), g.q);
        if (!same_rows_up_to_permutation(res.data.P, want)) {
            std::cerr << "eigenvalue matrix differs from the reference closed form\n";
            return kExitMismatch;
        }
        std::cerr << "eigenvalue matrix matches the reference closed form\n";
    }
    return kExitOk;
}

int cmd_gp(const std::string& in, std::vector<int64_t> points) {
    CircleGeometry g = geometry_from_json(load_json(in));
    if (points.empty()) points = {0, g.num_points() / 2, g.num_points() - 1};
    Json arr = Json::array();
    for (int64_t p : points) {
        if (p < 0 || p >= g.num_points()) throw Error(Err::Invalid, "point id out of range");
        arr.push_back(gp_to_json(gp_profile(g, int32_t(p))));
    }
    std::cout << arr.dump(1) << "\n";
    return kExitOk;
}

int cmd_search(const std::string& in, const std::string& method, int64_t budget,
               const std::string& out) {
    CircleGeometry g = geometry_from_json(load_json(in));
    Json j;
    int code = kExitOk;
    if (method == "exact") {
        SearchResult res = max_families_exact(g, budget, [](int64_t nodes, int64_t best) {
            std::cerr << "search: " << nodes << " nodes, incumbent " << best << "\n";
        });
        j = search_to_json(g, res);
        if (!res.complete) code = kExitBudget;
    } else if (method == "ratio") {
        j["version"] = 1;
        j["geometry"] = g.name();
        j["method"] = "ratio";
        bool spliceable = g.rho == 2 && g.q % 2 == 1 && !g.circle_type.empty();
        RelationFamily fam = spliceable ? splice_minkowski_odd(g) : intersection_relations(g);
        SchemeResult res = verify_scheme(fam);
        if (res.ok) {
            eigenvalue_matrix(res.data);
            RatioBound rb = ratio_bound(res.data, disjoint_relation_indices(res.data),
                                        pencil_size_of(g));
            j["source"] = "scheme";
            j["k"] = rb.k;
            j["lambda_min"] = rb.lambda_min;
            j["upper_bound"] = rat_to_json(rb.bound);
            j["pencil_tight"] = rb.pencil_tight;
        } else {
            // exact spectrum of the disjointness graph directly
            int64_t n = g.num_circles();
            std::vector<std::vector<int64_t>> adj(n, std::vector<int64_t>(n, 0));
            int64_t k = -1;
            for (int32_t x = 0; x < n; ++x) {
                int64_t deg = 0;
                for (int32_t y = 0; y < n; ++y)
                    if (x != y && g.intersection_size(x, y) == 0) { adj[x][y] = 1; ++deg; }
                if (k < 0) k = deg;
                else if (k != deg) throw Error(Err::Invalid, "disjointness graph is irregular");
            }
            auto spec = exact_integer_spectrum(adj);
            int64_t lmin = spec.back().first;
            j["source"] = "disjointness_spectrum";
            j["k"] = k;
            j["lambda_min"] = lmin;
            Rat bound = Rat(n * (-lmin), k - lmin);
            j["upper_bound"] = rat_to_json(bound);
            j["pencil_tight"] = (bound == Rat(pencil_size_of(g)));
        }
    } else if (method == "greedy") {
        auto ids = greedy_family(g);
        IntersectingFamily fam{&g, ids};
        j["version"] = 1;
        j["geometry"] = g.name();
        j["method"] = "greedy";
        j["family"] = ids;
        j["size"] = int64_t(ids.size());
        j["classification"] = family_class_name(classify_family(fam).cls);
        j["bounds"] = bounds_to_json(bounds_report(fam));
    } else {
        std::cerr << "unknown method " << method << "\n";
        return kExitUsage;
    }
    if (!out.empty()) save_json(j, out);
    std::cout << j.dump(1) << "\n";
    return code;
}

int cmd_report(const std::string& in, const std::string& family_csv, int64_t pencil_point) {
    CircleGeometry g = geometry_from_json(load_json(in));
    std::vector<int32_t> ids;
    if (!family_csv.empty()) {
        size_t pos = 0;
        while (pos < family_csv.size()) {
            size_t comma = family_csv.find(',', pos);
            if (comma == std::string::npos) comma = family_csv.size();
            ids.push_back(int32_t(std::stol(family_csv.substr(pos, comma - pos))));
            pos = comma + 1;
        }
    } else if (pencil_point >= 0) {
        ids = g.pencil(int32_t(pencil_point));
    } else {
        std::cerr << "need --family or --pencil\n";
        return kExitUsage;
    }
    IntersectingFamily fam = make_family(g, ids);
    Json j;
    j["version"] = 1;
    j["geometry"] = g.name();
    j["family"] = fam.ids;
    j["size"] = fam.size();
    j["classification"] = family_class_name(classify_family(fam).cls);
    j["bounds"] = bounds_to_json(bounds_report(fam));
    std::cout << j.dump(1) << "\n";
    return kExitOk;
}

} // namespace

CircleGeometry build_geometry(const std::string& type, int64_t q, int phi) {
    if (type == "mobius")
        return from_quadratic_set(build_quadratic_set(QKind::Elliptic, ProjSpace::get(3, q)));
    if (type == "laguerre")
        return from_quadratic_set(build_quadratic_set(QKind::Cone, ProjSpace::get(3, q)));
    if (type == "laguerre-ext")
        return from_quadratic_set(build_quadratic_set(QKind::HyperovalCone, ProjSpace::get(3, q)));
    if (type == "minkowski")
        return from_quadratic_set(build_quadratic_set(QKind::Hyperbolic, ProjSpace::get(3, q)));
    if (type == "minkowski-phi") return minkowski_sharply3(FieldSpec::get(q), phi);
    if (type == "laguerre-poly") return polynomial_laguerre(FieldSpec::get(q), false);
    if (type == "laguerre-poly-ext") return polynomial_laguerre(FieldSpec::get(q), true);
    throw Error(Err::Invalid, "unknown geometry type " + type);
}

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"finite circle geometry laboratory"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "parallelism hint (accepted, current code is sequential)");

    std::string type, in, out, expect, family_csv, method = "exact";
    int64_t q = 0, budget = 200'000'000, pencil_point = -1;
    int phi = 0;
    std::vector<int64_t> points;
    bool splice = false;

    auto* c = app.add_subcommand("construct", "build a geometry and write its JSON");
    c->add_option("--type", type,
                  "mobius|laguerre|laguerre-ext|minkowski|minkowski-phi|laguerre-poly|laguerre-poly-ext")
        ->required();
    c->add_option("--q", q, "order (prime power)")->required();
    c->add_option("--phi", phi, "frobenius exponent for minkowski-phi");
    c->add_option("--out", out, "output path (default: JSON to stdout)");

    auto* v = app.add_subcommand("verify", "check the axioms and parameter formulas");
    v->add_option("--in", in, "geometry JSON")->required();

    auto* s = app.add_subcommand("scheme", "relations, scheme check, exact eigenvalue matrix");
    s->add_option("--in", in, "geometry JSON")->required();
    s->add_flag("--splice", splice, "split by square type (odd Minkowski)");
    s->add_option("--expect", expect, "compare against the built-in closed form ('reference')");
    s->add_option("--out", out, "also write the report JSON here");

    auto* gpc = app.add_subcommand("gp", "bipartite disjointness profile at base points");
    gpc->add_option("--in", in, "geometry JSON")->required();
    gpc->add_option("--point", points, "base point id (repeatable)");

    auto* se = app.add_subcommand("search", "maximum intersecting families / bounds");
    se->add_option("--in", in, "geometry JSON")->required();
    se->add_option("--method", method, "exact|ratio|greedy");
    se->add_option("--budget", budget, "node budget for exact search");
    se->add_option("--out", out, "also write the report JSON here");

    auto* r = app.add_subcommand("report", "bounds report for a given family");
    r->add_option("--in", in, "geometry JSON")->required();
    r->add_option("--family", family_csv, "comma-separated circle ids");
    r->add_option("--pencil", pencil_point, "use the pencil of this point");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("construct")) return cmd_construct(type, q, phi, out);
        if (app.got_subcommand("verify")) return cmd_verify(in);
        if (app.got_subcommand("scheme")) return cmd_scheme(in, splice, expect, out);
        if (app.got_subcommand("gp")) return cmd_gp(in, points);
        if (app.got_subcommand("search")) return cmd_search(in, method, budget, out);
        if (app.got_subcommand("report")) return cmd_report(in, family_csv, pencil_point);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
        case Err::BudgetExceeded: return kExitBudget;
        case Err::SchemeFailure:
        case Err::NonIntegerEigenvalue: return kExitMismatch;
        default: return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace benz
