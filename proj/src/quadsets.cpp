#include "benz/quadsets.hpp"

#include <algorithm>

namespace benz {

namespace {

// smallest (alpha, beta, gamma) with alpha*u^2 + beta*uv + gamma*v^2 having no
// zero on PG(1,q)
std::array<int, 3> smallest_irreducible_binary_quadratic(const FieldSpec& F) {
    int64_t q = F.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (a == 0) continue; // (1,0) would be a zero
                bool zero_free = true;
                for (int t = 0; t < q && zero_free; ++t) {
                    // u = t, v = 1
                    int val = F.add(F.add(F.mul(a, F.mul(t, t)), F.mul(b, t)), c);
                    if (val == 0) zero_free = false;
                }
                if (zero_free) return {a, b, c};
            }
    throw Error(Err::Invalid, "no irreducible binary quadratic found");
}

Bits zero_set(const ProjSpace& S, const QuadForm& f) {
    Bits out(S.num_points());
    for (int32_t i = 0; i < S.num_points(); ++i)
        if (f.kappa(S.point(i)) == 0) out.set(i);
    return out;
}

} // namespace

QuadraticSet build_quadratic_set(QKind kind, const ProjSpace& S3) {
    if (S3.n() != 3) throw Error(Err::Invalid, "quadratic sets live in PG(3,q)");
    const FieldSpec& F = S3.field();
    int64_t q = F.q();
    QuadraticSet set;
    set.kind = kind;
    set.S = &S3;
    set.points = Bits(S3.num_points());

    switch (kind) {
    case QKind::Hyperbolic: {
        QuadForm f{&F, {}};
        f.a[0][3] = 1;
        f.a[1][2] = F.neg(1);
        set.form = f;
        set.epsilon = +1;
        set.points = zero_set(S3, f);
        if (int64_t(set.points.count()) != (q + 1) * (q + 1))
            throw Error(Err::Invalid, "hyperbolic quadric size mismatch");
        break;
    }
    case QKind::Elliptic: {
        auto [a, b, c] = smallest_irreducible_binary_quadratic(F);
        QuadForm f{&F, {}};
        f.a[0][1] = 1;
        f.a[2][2] = a;
        f.a[2][3] = b;
        f.a[3][3] = c;
        set.form = f;
        set.epsilon = -1;
        set.points = zero_set(S3, f);
        if (int64_t(set.points.count()) != q * q + 1)
            throw Error(Err::Invalid, "elliptic quadric size mismatch");
        break;
    }
    case QKind::Cone:
    case QKind::HyperovalCone: {
        if (kind == QKind::HyperovalCone && F.p() != 2)
            throw Error(Err::WrongParity, "hyperoval cone needs even q");
        // cone x1*x3 = x2^2 with vertex (1,0,0,0); base conic in x0 = 0
        QuadForm f{&F, {}};
        f.a[1][3] = 1;
        f.a[2][2] = F.neg(1);
        set.points = zero_set(S3, f);
        set.vertex = S3.point_id(Coords{1, 0, 0, 0});
        if (int64_t(set.points.count()) != 1 + (q + 1) * q)
            throw Error(Err::Invalid, "cone size mismatch");
        if (kind == QKind::HyperovalCone) {
            int32_t base_plane = S3.point_id(Coords{1, 0, 0, 0}); // plane x0 = 0
            Bits conic = set.points & S3.plane_bits(base_plane);
            // nucleus: common point of two tangent lines of the base conic
            std::vector<int32_t> cpts = conic.to_vector();
            std::vector<int32_t> tangents;
            for (int32_t cp : cpts) {
                if (tangents.size() >= 2) break;
                for (int32_t l : S3.lines_in_plane_through(base_plane, cp))
                    if (Bits::count_and(S3.line_bits(l), conic) == 1) { tangents.push_back(l); break; }
            }
            if (tangents.size() < 2) throw Error(Err::Invalid, "tangent lines not found");
            Bits common = S3.line_bits(tangents[0]) & S3.line_bits(tangents[1]);
            std::vector<int32_t> nuc = common.to_vector();
            if (nuc.size() != 1) throw Error(Err::Invalid, "nucleus not unique");
            int32_t nucleus = nuc[0];
            int32_t nl = S3.line_through(*set.vertex, nucleus);
            set.nucleus_line = nl;
            set.points |= S3.line_bits(nl);
        }
        break;
    }
    }
    return set;
}

PlaneClass classify_plane(const QuadraticSet& set, int32_t plane) {
    const ProjSpace& S = *set.S;
    int64_t q = S.q();
    if (set.vertex) {
        if (set.has_degenerate(plane)) return PlaneClass::Generated;
        return PlaneClass::Oval;
    }
    int64_t isz = int64_t(Bits::count_and(set.points, S.plane_bits(plane)));
    if (isz == q + 1) return PlaneClass::Oval;
    if (set.kind == QKind::Elliptic && isz == 1) return PlaneClass::Tangent;
    if (set.kind == QKind::Hyperbolic && isz == 2 * q + 1) return PlaneClass::Tangent;
    throw Error(Err::Invalid, "unexpected plane section size " + std::to_string(isz));
}

std::vector<OvalCircle> oval_circles(const QuadraticSet& set) {
    const ProjSpace& S = *set.S;
    std::vector<OvalCircle> out;
    for (int32_t pl = 0; pl < S.num_points(); ++pl) {
        if (classify_plane(set, pl) != PlaneClass::Oval) continue;
        Bits sect = set.points & S.plane_bits(pl);
        out.push_back(OvalCircle{pl, sect.to_vector()});
    }
    return out;
}

ConicPosition external_internal(const QuadraticSet& set, int32_t plane, int32_t point) {
    const ProjSpace& S = *set.S;
    if (!S.plane_bits(plane).test(point))
        throw Error(Err::Invalid, "point not in the plane");
    Bits sect = set.points & S.plane_bits(plane);
    if (sect.test(point)) return ConicPosition::OnConic;
    int tangent_count = 0;
    for (int32_t l : S.lines_in_plane_through(plane, point))
        if (Bits::count_and(S.line_bits(l), sect) == 1) ++tangent_count;
    if (tangent_count == 2) return ConicPosition::External;
    if (tangent_count == 0) return ConicPosition::Internal;
    throw Error(Err::Invalid, "point lies on " + std::to_string(tangent_count) +
                                  " tangents; external/internal split needs odd q");
}

bool is_oval_section(const QuadraticSet& set, int32_t plane) {
    const ProjSpace& S = *set.S;
    int64_t q = S.q();
    Bits sect = set.points & S.plane_bits(plane);
    int64_t want = (set.kind == QKind::HyperovalCone) ? q + 2 : q + 1;
    if (int64_t(sect.count()) != want) return false;
    std::vector<int32_t> pts = sect.to_vector();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            int32_t l = S.line_through(pts[i], pts[j]);
            if (Bits::count_and(S.line_bits(l), sect) > 2) return false;
        }
    return true;
}

QuadSetAxiomReport check_quadratic_set_axioms(const QuadraticSet& set) {
    const ProjSpace& S = *set.S;
    int64_t q = S.q();
    QuadSetAxiomReport rep;

    // 1. every line meets the set in 0, 1, 2 or q+1 points
    rep.line_trichotomy = true;
    for (int32_t l = 0; l < S.num_lines(); ++l) {
        int64_t c = int64_t(Bits::count_and(S.line_bits(l), set.points));
        if (!(c == 0 || c == 1 || c == 2 || c == q + 1)) { rep.line_trichotomy = false; break; }
    }

    // 2. at each point, the union of 1- and (q+1)-secants through it is a
    // plane or the whole space
    rep.tangent_hyperplanes = true;
    std::vector<int32_t> in_set = set.points.to_vector();
    for (int32_t p : in_set) {
        Bits unionpts(S.num_points());
        for (int32_t l : S.lines_on_point(p)) {
            int64_t c = int64_t(Bits::count_and(S.line_bits(l), set.points));
            if (c == 1 || c == q + 1) unionpts |= S.line_bits(l);
        }
        int64_t sz = int64_t(unionpts.count());
        bool whole = (sz == S.num_points());
        bool hyperplane = false;
        if (!whole && sz == q * q + q + 1) {
            for (int32_t pl = 0; pl < S.num_planes(); ++pl)
                if (S.plane_bits(pl) == unionpts) { hyperplane = true; break; }
        }
        if (!whole && !hyperplane) { rep.tangent_hyperplanes = false; break; }
    }

    // 3. the set is not a union of two subspaces contained in it
    rep.not_two_subspaces = true;
    int64_t total = int64_t(set.points.count());
    std::vector<const Bits*> inside;
    for (int32_t l = 0; l < S.num_lines(); ++l)
        if (int64_t(Bits::count_and(S.line_bits(l), set.points)) == q + 1)
            inside.push_back(&S.line_bits(l));
    for (int32_t pl = 0; pl < S.num_planes(); ++pl)
        if (int64_t(Bits::count_and(S.plane_bits(pl), set.points)) == q * q + q + 1)
            inside.push_back(&S.plane_bits(pl));
    for (size_t i = 0; i < inside.size() && rep.not_two_subspaces; ++i)
        for (size_t j = i; j < inside.size(); ++j) {
            Bits u = *inside[i] | *inside[j];
            if (int64_t(u.count()) == total) { rep.not_two_subspaces = false; break; }
        }
    return rep;
}

} // namespace benz
