#include "benz/geometry.hpp"

#include <algorithm>
#include <map>

#include "benz/pgl2.hpp"

namespace benz {

void CircleGeometry::finalize() {
    size_t np = point_labels.size();
    circle_bits.clear();
    circle_bits.reserve(circles.size());
    pencils_.assign(np, {});
    for (int32_t c = 0; c < int32_t(circles.size()); ++c) {
        Bits b(np);
        for (int32_t p : circles[c]) {
            b.set(p);
            pencils_[p].push_back(c);
        }
        circle_bits.push_back(std::move(b));
    }
    pair_circles_.assign(np * np, {});
    for (int32_t c = 0; c < int32_t(circles.size()); ++c)
        for (size_t i = 0; i < circles[c].size(); ++i)
            for (size_t j = i + 1; j < circles[c].size(); ++j) {
                int32_t a = circles[c][i], b = circles[c][j];
                pair_circles_[size_t(a) * np + b].push_back(c);
                pair_circles_[size_t(b) * np + a].push_back(c);
            }
}

bool CircleGeometry::is_nucleus_point(int32_t p) const {
    return std::binary_search(nucleus_pts.begin(), nucleus_pts.end(), p);
}

std::string CircleGeometry::name() const {
    std::string s = "CM(" + std::to_string(rho) + "," + std::to_string(q);
    if (prov.construction == "sharply_3_transitive" && prov.phi != 0)
        s += ",phi=" + std::to_string(prov.phi);
    s += ")";
    if (extended) s += "+";
    s += "[" + prov.construction + "]";
    return s;
}

CircleGeometry from_quadratic_set(const QuadraticSet& set) {
    const ProjSpace& S = *set.S;
    const FieldSpec& F = S.field();
    int64_t q = F.q();

    CircleGeometry g;
    g.q = q;
    switch (set.kind) {
    case QKind::Elliptic: g.rho = 0; g.prov.construction = "elliptic_quadric"; break;
    case QKind::Cone: g.rho = 1; g.prov.construction = "oval_cone"; break;
    case QKind::HyperovalCone:
        g.rho = 1;
        g.extended = true;
        g.prov.construction = "hyperoval_cone";
        break;
    case QKind::Hyperbolic: g.rho = 2; g.prov.construction = "hyperbolic_quadric"; break;
    }
    g.prov.q = q;

    // point universe: the set minus its degenerate point
    std::vector<int32_t> pg_pts;
    set.points.for_each([&](size_t i) {
        if (!set.vertex || int32_t(i) != *set.vertex) pg_pts.push_back(int32_t(i));
    });
    std::vector<int32_t> pg_to_geom(S.num_points(), -1);
    for (int32_t i = 0; i < int32_t(pg_pts.size()); ++i) {
        pg_to_geom[pg_pts[i]] = i;
        g.point_labels.push_back(S.point_label(pg_pts[i]));
    }

    auto ovals = oval_circles(set);
    std::optional<Polarity> pol;
    if (q % 2 == 1 && set.form && !set.vertex) pol.emplace(S, *set.form);
    for (const auto& oc : ovals) {
        std::vector<int32_t> circ;
        for (int32_t pg : oc.points) circ.push_back(pg_to_geom[pg]);
        std::sort(circ.begin(), circ.end());
        g.circles.push_back(std::move(circ));
        if (pol) {
            int32_t pole = pol->plane_perp(oc.plane);
            SquareClass sc = set.form->kappa_class(S.point(pole));
            if (sc == SquareClass::Zero)
                throw Error(Err::Invalid, "oval plane pole lies on the quadric");
            g.circle_type.push_back(sc == SquareClass::Square ? 0 : 1);
        }
    }

    // parallel classes
    if (g.rho == 1) {
        // generator lines through the vertex (the nucleus generator included
        // automatically for the hyperoval cone), punctured at the vertex
        std::vector<std::vector<int32_t>> classes;
        for (int32_t l : S.lines_on_point(*set.vertex)) {
            if (Bits::count_and(S.line_bits(l), set.points) != size_t(q + 1)) continue;
            std::vector<int32_t> cls;
            for (int32_t pg : S.line(l))
                if (pg != *set.vertex) cls.push_back(pg_to_geom[pg]);
            std::sort(cls.begin(), cls.end());
            if (set.nucleus_line && l == *set.nucleus_line)
                g.nucleus_pts = cls;
            classes.push_back(std::move(cls));
        }
        g.parallel.push_back(std::move(classes));
    } else if (g.rho == 2) {
        // the two rulings of the hyperbolic quadric
        std::vector<int32_t> gen_lines;
        for (int32_t l = 0; l < S.num_lines(); ++l)
            if (Bits::count_and(S.line_bits(l), set.points) == size_t(q + 1)) gen_lines.push_back(l);
        if (int64_t(gen_lines.size()) != 2 * (q + 1))
            throw Error(Err::Invalid, "ruling count mismatch");
        std::vector<std::vector<int32_t>> ruling(2);
        for (int32_t l : gen_lines) {
            bool meets_first = S.line_bits(l).intersects(S.line_bits(gen_lines[0]));
            ruling[(l == gen_lines[0] || !meets_first) ? 0 : 1].push_back(l);
        }
        for (auto& r : ruling) {
            std::vector<std::vector<int32_t>> classes;
            for (int32_t l : r) {
                std::vector<int32_t> cls;
                for (int32_t pg : S.line(l)) cls.push_back(pg_to_geom[pg]);
                std::sort(cls.begin(), cls.end());
                classes.push_back(std::move(cls));
            }
            g.parallel.push_back(std::move(classes));
        }
    }

    // class_of
    g.class_of.assign(g.parallel.size(), std::vector<int32_t>(g.point_labels.size(), -1));
    for (size_t r = 0; r < g.parallel.size(); ++r)
        for (int32_t c = 0; c < int32_t(g.parallel[r].size()); ++c)
            for (int32_t p : g.parallel[r][c]) g.class_of[r][p] = c;

    g.finalize();
    return g;
}

CircleGeometry minkowski_sharply3(const FieldSpec& F, int phi_exponent) {
    int64_t q = F.q();
    if (phi_exponent < 0 || phi_exponent >= F.degree())
        throw Error(Err::Invalid, "phi exponent out of range");
    if (phi_exponent != 0 && F.degree() == 1)
        throw Error(Err::NonTrivialPhi, "prime field has no non-trivial automorphism");
    if (phi_exponent != 0 && q % 2 == 0)
        throw Error(Err::NonTrivialPhi, "even q: PSL = PGL, phi would not change the plane");

    const PGL2& G = PGL2::get(q);
    int64_t npg1 = G.num_pg1_points();

    CircleGeometry g;
    g.rho = 2;
    g.q = q;
    g.prov = {"sharply_3_transitive", q, phi_exponent};

    for (int32_t a = 0; a < npg1; ++a)
        for (int32_t b = 0; b < npg1; ++b) {
            auto pa = G.pg1_point(a), pb = G.pg1_point(b);
            g.point_labels.push_back("(" + std::to_string(pa[0]) + ":" + std::to_string(pa[1]) +
                                     "|" + std::to_string(pb[0]) + ":" + std::to_string(pb[1]) + ")");
        }

    // frobenius^k acting on PG(1,q) point ids
    std::vector<int32_t> frob(npg1);
    for (int32_t p = 0; p < npg1; ++p) {
        auto c = G.pg1_point(p);
        frob[p] = G.pg1_id(F.frobenius(c[0], phi_exponent), F.frobenius(c[1], phi_exponent));
    }

    for (int32_t m = 0; m < G.order(); ++m) {
        bool psl = G.in_psl(m);
        std::vector<int32_t> circ;
        for (int32_t a = 0; a < npg1; ++a) {
            int32_t img = psl ? G.apply(m, a) : G.apply(m, frob[a]);
            circ.push_back(int32_t(a * npg1 + img));
        }
        std::sort(circ.begin(), circ.end());
        g.circles.push_back(std::move(circ));
        g.circle_type.push_back(psl ? 0 : 1);
    }

    g.parallel.resize(2);
    for (int32_t a = 0; a < npg1; ++a) {
        std::vector<int32_t> row, col;
        for (int32_t b = 0; b < npg1; ++b) {
            row.push_back(int32_t(a * npg1 + b));
            col.push_back(int32_t(b * npg1 + a));
        }
        g.parallel[0].push_back(row);
        g.parallel[1].push_back(col);
    }
    g.class_of.assign(2, std::vector<int32_t>(g.point_labels.size(), -1));
    for (size_t r = 0; r < 2; ++r)
        for (int32_t c = 0; c < int32_t(g.parallel[r].size()); ++c)
            for (int32_t p : g.parallel[r][c]) g.class_of[r][p] = c;

    g.finalize();
    return g;
}

CircleGeometry polynomial_laguerre(const FieldSpec& F, bool extended) {
    int64_t q = F.q();
    if (extended && q % 2 != 0)
        throw Error(Err::WrongParity, "extended polynomial model needs even q");

    CircleGeometry g;
    g.rho = 1;
    g.q = q;
    g.extended = extended;
    g.prov = {extended ? "polynomial_extended" : "polynomial", q, 0};

    // x-index: 0..q-1 field codes, q = infinity, q+1 = -infinity (extended)
    int64_t nx = extended ? q + 2 : q + 1;
    for (int64_t xi = 0; xi < nx; ++xi)
        for (int64_t y = 0; y < q; ++y) {
            std::string xl = xi < q ? std::to_string(xi) : (xi == q ? "inf" : "-inf");
            g.point_labels.push_back("(" + xl + "," + std::to_string(y) + ")");
        }
    auto pid = [&](int64_t xi, int64_t y) { return int32_t(xi * q + y); };

    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::vector<int32_t> circ;
                for (int x = 0; x < q; ++x)
                    circ.push_back(pid(x, F.add(F.mul(a, F.mul(x, x)), F.add(F.mul(b, x), c))));
                circ.push_back(pid(q, a));
                if (extended) circ.push_back(pid(q + 1, b));
                std::sort(circ.begin(), circ.end());
                g.circles.push_back(std::move(circ));
            }

    g.parallel.resize(1);
    for (int64_t xi = 0; xi < nx; ++xi) {
        std::vector<int32_t> cls;
        for (int64_t y = 0; y < q; ++y) cls.push_back(pid(xi, y));
        g.parallel[0].push_back(cls);
    }
    if (extended) {
        for (int64_t y = 0; y < q; ++y) g.nucleus_pts.push_back(pid(q + 1, y));
    }
    g.class_of.assign(1, std::vector<int32_t>(g.point_labels.size(), -1));
    for (int32_t c = 0; c < int32_t(g.parallel[0].size()); ++c)
        for (int32_t p : g.parallel[0][c]) g.class_of[0][p] = c;

    g.finalize();
    return g;
}

// ---------------------------------------------------------------- verify ---

VerifyReport verify_geometry(const CircleGeometry& g) {
    VerifyReport rep;
    int64_t q = g.q;
    int64_t np = g.num_points(), b = g.num_circles();
    auto add = [&](const std::string& name, bool ok, const std::string& wit = "") {
        rep.checks.push_back({name, ok, ok ? "" : wit});
    };

    // axiom 1: unique circle through pairwise non-parallel triples
    {
        bool ok = true;
        std::string wit;
        for (int32_t i = 0; i < np && ok; ++i)
            for (int32_t j = i + 1; j < np && ok; ++j) {
                if (g.parallel_pts(i, j)) continue;
                const auto& through_ij = g.circles_through_pair(i, j);
                for (int32_t k = j + 1; k < np; ++k) {
                    if (g.parallel_pts(i, k) || g.parallel_pts(j, k)) continue;
                    int cnt = 0;
                    for (int32_t c : through_ij)
                        if (g.circle_bits[c].test(k)) ++cnt;
                    if (cnt != 1) {
                        ok = false;
                        wit = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ") lies on " + std::to_string(cnt) + " circles";
                        break;
                    }
                }
            }
        add("axiom1_unique_circle", ok, wit);
    }

    // axiom 2: tangency (ordinary) / 0-or-2 intersections (extended)
    if (!g.extended) {
        bool ok = true;
        std::string wit;
        for (int32_t p = 0; p < np && ok; ++p) {
            for (int32_t r = 0; r < np && ok; ++r) {
                if (r == p || g.parallel_pts(p, r)) continue;
                const auto& through_pr = g.circles_through_pair(p, r);
                for (int32_t c : g.pencil(p)) {
                    if (g.circle_bits[c].test(r)) continue;
                    int cnt = 0;
                    for (int32_t c2 : through_pr)
                        if (g.intersection_size(c, c2) == 1) ++cnt;
                    if (cnt != 1) {
                        ok = false;
                        wit = "P=" + std::to_string(p) + " Q=" + std::to_string(r) + " circle " +
                              std::to_string(c) + ": " + std::to_string(cnt) + " tangent circles";
                        break;
                    }
                }
            }
        }
        add("axiom2_unique_tangent", ok, wit);
    } else {
        bool ok = true;
        std::string wit;
        for (int32_t c1 = 0; c1 < b && ok; ++c1)
            for (int32_t c2 = c1 + 1; c2 < b; ++c2) {
                int64_t s = g.intersection_size(c1, c2);
                if (s != 0 && s != 2) {
                    ok = false;
                    wit = "circles " + std::to_string(c1) + "," + std::to_string(c2) +
                          " meet in " + std::to_string(s) + " points";
                    break;
                }
            }
        add("axiom2_intersections_0_or_2", ok, wit);
    }

    // axiom 3: each circle has one point in each parallel class
    {
        bool ok = true;
        std::string wit;
        for (int r = 0; r < g.rho_classes() && ok; ++r) {
            int64_t ncls = int64_t(g.parallel[r].size());
            for (int32_t c = 0; c < b && ok; ++c) {
                std::vector<int> seen(ncls, 0);
                for (int32_t p : g.circles[c]) seen[g.class_of[r][p]]++;
                for (int64_t cl = 0; cl < ncls; ++cl)
                    if (seen[cl] != 1) {
                        ok = false;
                        wit = "circle " + std::to_string(c) + " meets class " + std::to_string(cl) +
                              " of relation " + std::to_string(r) + " " + std::to_string(seen[cl]) + " times";
                        break;
                    }
            }
        }
        add("axiom3_one_point_per_class", ok, wit);
    }

    // axiom 4: classes from different relations meet in a unique point
    if (g.rho_classes() == 2) {
        bool ok = true;
        std::string wit;
        for (size_t c0 = 0; c0 < g.parallel[0].size() && ok; ++c0)
            for (size_t c1 = 0; c1 < g.parallel[1].size(); ++c1) {
                int cnt = 0;
                for (int32_t p : g.parallel[0][c0])
                    if (g.class_of[1][p] == int32_t(c1)) ++cnt;
                if (cnt != 1) {
                    ok = false;
                    wit = "classes (" + std::to_string(c0) + "," + std::to_string(c1) + ") meet " +
                          std::to_string(cnt) + " times";
                    break;
                }
            }
        add("axiom4_classes_meet_once", ok, wit);
    }

    // axiom 5
    {
        bool ok = b > 0;
        for (int32_t c = 0; c < b && ok; ++c)
            if (int64_t(g.circles[c].size()) < 3) ok = false;
        if (ok) {
            bool found = false;
            for (int32_t p = 0; p < np && !found; ++p)
                if (!g.circle_bits[0].test(p)) found = true;
            ok = found;
        }
        add("axiom5_nondegeneracy", ok, "degenerate incidence structure");
    }

    // parameter formulas
    {
        int64_t want_np, want_b, want_size, want_deg, want_pair, want_cls;
        if (!g.extended) {
            want_np = (q * q + 1 - g.rho) * (q + 1) / (q + 1 - g.rho);
            want_b = q * q * q + (1 - g.rho) * q;
            want_size = q + 1;
            want_deg = q * q + (1 - g.rho) * q;
            want_pair = q + 1 - g.rho;
            want_cls = q + g.rho - 1;
        } else {
            want_np = q * (q + 2);
            want_b = q * q * q;
            want_size = q + 2;
            want_deg = q * q;
            want_pair = q;
            want_cls = q;
        }
        add("param_points", np == want_np,
            std::to_string(np) + " != " + std::to_string(want_np));
        add("param_circles", b == want_b, std::to_string(b) + " != " + std::to_string(want_b));
        {
            bool ok = true;
            for (int32_t c = 0; c < b; ++c)
                if (int64_t(g.circles[c].size()) != want_size) { ok = false; break; }
            add("param_circle_size", ok, "expected " + std::to_string(want_size));
        }
        {
            bool ok = true;
            for (int32_t p = 0; p < np; ++p)
                if (int64_t(g.pencil(p).size()) != want_deg) { ok = false; break; }
            add("param_point_degree", ok, "expected " + std::to_string(want_deg));
        }
        {
            bool ok = true;
            for (int32_t i = 0; i < np && ok; ++i)
                for (int32_t j = i + 1; j < np; ++j) {
                    if (g.parallel_pts(i, j)) continue;
                    if (int64_t(g.circles_through_pair(i, j).size()) != want_pair) {
                        ok = false;
                        break;
                    }
                }
            add("param_pair_circles", ok, "expected " + std::to_string(want_pair));
        }
        {
            bool ok = true;
            for (int r = 0; r < g.rho_classes(); ++r)
                for (const auto& cls : g.parallel[r])
                    if (int64_t(cls.size()) != want_cls) { ok = false; break; }
            add("param_class_size", ok, "expected " + std::to_string(want_cls));
        }
    }
    return rep;
}

Residue residue_at(const CircleGeometry& g, int32_t p) {
    Residue r;
    r.base = p;
    int64_t np = g.num_points();
    std::vector<char> keep(np, 1);
    keep[p] = 0;
    for (int32_t x = 0; x < np; ++x)
        if (x != p && g.parallel_pts(p, x)) keep[x] = 0;
    for (int32_t x = 0; x < np; ++x)
        if (keep[x]) r.points.push_back(x);

    for (int32_t c : g.pencil(p)) {
        std::vector<int32_t> line;
        for (int32_t x : g.circles[c])
            if (keep[x]) line.push_back(x);
        r.lines.push_back(std::move(line));
        r.line_circle.push_back(c);
    }
    for (int rel = 0; rel < g.rho_classes(); ++rel)
        for (size_t cl = 0; cl < g.parallel[rel].size(); ++cl) {
            if (g.class_of[rel][p] == int32_t(cl)) continue;
            std::vector<int32_t> line;
            for (int32_t x : g.parallel[rel][cl])
                if (keep[x]) line.push_back(x);
            r.lines.push_back(std::move(line));
            r.line_circle.push_back(-1);
        }
    return r;
}

VerifyReport verify_affine_plane(const CircleGeometry& g, const Residue& r) {
    VerifyReport rep;
    int64_t q = g.q;
    auto add = [&](const std::string& name, bool ok, const std::string& wit = "") {
        rep.checks.push_back({name, ok, ok ? "" : wit});
    };
    add("residue_points", int64_t(r.points.size()) == q * q,
        std::to_string(r.points.size()) + " != q^2");
    add("residue_lines", int64_t(r.lines.size()) == q * q + q,
        std::to_string(r.lines.size()) + " != q^2+q");
    {
        bool ok = true;
        for (const auto& l : r.lines)
            if (int64_t(l.size()) != q) { ok = false; break; }
        add("residue_line_size", ok, "line of size != q");
    }
    {
        // every pair of residue points on exactly one line
        bool ok = true;
        std::string wit;
        std::map<int32_t, int32_t> idx;
        for (int32_t i = 0; i < int32_t(r.points.size()); ++i) idx[r.points[i]] = i;
        std::vector<int> cnt(r.points.size() * r.points.size(), 0);
        for (const auto& l : r.lines)
            for (size_t i = 0; i < l.size(); ++i)
                for (size_t j = i + 1; j < l.size(); ++j) {
                    int32_t a = idx[l[i]], b = idx[l[j]];
                    cnt[size_t(a) * r.points.size() + b]++;
                }
        for (size_t a = 0; a < r.points.size() && ok; ++a)
            for (size_t b = a + 1; b < r.points.size(); ++b)
                if (cnt[a * r.points.size() + b] != 1) {
                    ok = false;
                    wit = "pair covered " + std::to_string(cnt[a * r.points.size() + b]) + " times";
                    break;
                }
        add("residue_pair_coverage", ok, wit);
    }
    return rep;
}

std::vector<std::vector<int32_t>> pencil_blocks(const CircleGeometry& g, int32_t p) {
    const auto& pen = g.pencil(p);
    if (g.extended) return {pen};
    std::vector<std::vector<int32_t>> blocks;
    std::vector<char> used(pen.size(), 0);
    for (size_t i = 0; i < pen.size(); ++i) {
        if (used[i]) continue;
        std::vector<int32_t> blk = {pen[i]};
        used[i] = 1;
        for (size_t j = i + 1; j < pen.size(); ++j) {
            if (used[j]) continue;
            if (g.intersection_size(pen[i], pen[j]) == 1) {
                blk.push_back(pen[j]);
                used[j] = 1;
            }
        }
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    }
    auto type_of = [&](const std::vector<int32_t>& blk) {
        return g.circle_type.empty() ? 0 : g.circle_type[blk[0]];
    };
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& bq) {
        if (type_of(a) != type_of(bq)) return type_of(a) < type_of(bq);
        return a[0] < bq[0];
    });
    return blocks;
}

// ----------------------------------------------------------- isomorphisms ---

namespace {

MinkowskiIso map_by_circles(const CircleGeometry& from, const CircleGeometry& to,
                            const std::vector<int32_t>& point_map) {
    MinkowskiIso iso;
    iso.point_map = point_map;
    std::map<std::vector<int32_t>, int32_t> circle_index;
    for (int32_t c = 0; c < to.num_circles(); ++c) circle_index[to.circles[c]] = c;
    iso.verified = true;
    for (int32_t c = 0; c < from.num_circles(); ++c) {
        std::vector<int32_t> img;
        for (int32_t p : from.circles[c]) img.push_back(point_map[p]);
        std::sort(img.begin(), img.end());
        auto it = circle_index.find(img);
        if (it == circle_index.end()) {
            iso.verified = false;
            iso.circle_map.push_back(-1);
        } else {
            iso.circle_map.push_back(it->second);
        }
    }
    // bijectivity
    std::vector<int32_t> seen(to.num_circles(), 0);
    for (int32_t c : iso.circle_map)
        if (c >= 0) seen[c]++;
    for (int32_t s : seen)
        if (s != 1) iso.verified = false;
    return iso;
}

} // namespace

MinkowskiIso minkowski_isomorphism(const CircleGeometry& group_model,
                                   const CircleGeometry& quadric_model) {
    if (group_model.prov.construction != "sharply_3_transitive" || group_model.prov.phi != 0 ||
        quadric_model.prov.construction != "hyperbolic_quadric" ||
        group_model.q != quadric_model.q)
        throw Error(Err::Invalid, "expected the two ovoidal Minkowski models of equal order");
    int64_t q = group_model.q;
    const PGL2& G = PGL2::get(q);
    const FieldSpec& F = G.field();
    const ProjSpace& S = ProjSpace::get(3, q);

    // quadric-model geometry ids are PG(3,q) points of the quadric in id order
    std::map<std::string, int32_t> label_to_geom;
    for (int32_t i = 0; i < quadric_model.num_points(); ++i)
        label_to_geom[quadric_model.point_labels[i]] = i;

    int64_t npg1 = G.num_pg1_points();
    std::vector<int32_t> point_map(group_model.num_points());
    for (int32_t a = 0; a < npg1; ++a)
        for (int32_t bb = 0; bb < npg1; ++bb) {
            auto A = G.pg1_point(a), B = G.pg1_point(bb);
            Coords x{F.mul(B[0], A[1]), F.neg(F.mul(B[0], A[0])),
                     F.mul(B[1], A[1]), F.neg(F.mul(B[1], A[0]))};
            int32_t pg = S.point_id(x);
            auto it = label_to_geom.find(S.point_label(pg));
            if (it == label_to_geom.end()) throw Error(Err::Invalid, "image not on the quadric");
            point_map[a * npg1 + bb] = it->second;
        }
    return map_by_circles(group_model, quadric_model, point_map);
}

MinkowskiIso laguerre_isomorphism(const CircleGeometry& poly_model,
                                  const CircleGeometry& cone_model) {
    if (poly_model.q != cone_model.q || poly_model.extended != cone_model.extended)
        throw Error(Err::Invalid, "models of different order or extension");
    int64_t q = poly_model.q;
    const ProjSpace& S = ProjSpace::get(3, q);
    const FieldSpec& F = S.field();

    std::map<std::string, int32_t> label_to_geom;
    for (int32_t i = 0; i < cone_model.num_points(); ++i)
        label_to_geom[cone_model.point_labels[i]] = i;

    std::vector<int32_t> point_map(poly_model.num_points());
    int64_t nx = poly_model.extended ? q + 2 : q + 1;
    for (int64_t xi = 0; xi < nx; ++xi)
        for (int64_t y = 0; y < q; ++y) {
            Coords c{};
            if (xi < q)
                c = Coords{int(y), 1, int(xi), F.mul(int(xi), int(xi))};
            else if (xi == q)
                c = Coords{int(y), 0, 0, 1};
            else
                c = Coords{int(y), 0, 1, 0};
            auto it = label_to_geom.find(S.point_label(S.point_id(c)));
            if (it == label_to_geom.end()) throw Error(Err::Invalid, "image not on the cone");
            point_map[xi * q + y] = it->second;
        }
    return map_by_circles(poly_model, cone_model, point_map);
}

} // namespace benz
