#include "benz/ekr.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace benz {

IntersectWitness is_intersecting(const CircleGeometry& g, const std::vector<int32_t>& ids) {
    IntersectWitness w;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (!g.circle_bits[ids[i]].intersects(g.circle_bits[ids[j]])) {
                w.a = ids[i];
                w.b = ids[j];
                return w;
            }
    w.ok = true;
    return w;
}

IntersectingFamily make_family(const CircleGeometry& g, std::vector<int32_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    IntersectWitness w = is_intersecting(g, ids);
    if (!w.ok)
        throw Error(Err::Invalid, "family contains the disjoint pair (" + std::to_string(w.a) +
                                      "," + std::to_string(w.b) + ")");
    return IntersectingFamily{&g, std::move(ids)};
}

IntersectingFamily pencil_family(const CircleGeometry& g, int32_t p) {
    return IntersectingFamily{&g, g.pencil(p)};
}

MixingRow mixing_gap_test(const IntersectingFamily& fam, int32_t point) {
    const CircleGeometry& g = *fam.g;
    int64_t q = g.q;
    int rho = g.rho;
    if (q % 2 == 0 && rho == 1 && !g.extended)
        throw Error(Err::Invalid, "even-order Laguerre mixing runs on the extended plane");
    MixingRow row;
    row.point = point;
    for (int32_t c : fam.ids)
        if (g.circle_bits[c].test(point)) ++row.S;
    row.T = fam.size() - row.S;

    int64_t lambda = (q % 2 == 1) ? q * (q * q - 1)
                                  : q * (q - 2 + rho) * (q + (1 - rho) * (2 - rho));
    Rat factor = Rat(q * q, (q + rho - 2) * (q + rho - 2)) * Rat(lambda);
    Rat sterm = Rat(1) - Rat(row.S, q * (q + 1 - rho));
    Rat tterm = Rat(1) - Rat(row.T, q * q * (q - 1));
    row.lhs = Rat(row.S) * Rat(row.T);
    row.rhs = factor * sterm * tterm;
    row.slack = row.rhs - row.lhs;
    row.holds = row.lhs <= row.rhs;
    return row;
}

BoundsReport bounds_report(const IntersectingFamily& fam) {
    const CircleGeometry& g = *fam.g;
    int64_t q = g.q;
    int rho = g.rho;
    BoundsReport rep;
    rep.f = fam.size();
    if (rep.f == 0) throw Error(Err::Invalid, "empty family");

    for (size_t i = 0; i < fam.ids.size(); ++i)
        for (size_t j = i + 1; j < fam.ids.size(); ++j)
            if (g.intersection_size(fam.ids[i], fam.ids[j]) == 1) ++rep.E;

    rep.count_bound = Rat(2 * rep.f * rep.f + (q - 1) * rep.f - 2 * rep.E, rep.f * (q + 1));

    bool even = (q % 2 == 0);
    if (rho == 1 && even) rep.a = 0;
    else if (((rho == 0 || rho == 2) && even) || (rho == 1 && !even)) rep.a = 1;
    else rep.a = 2;
    rep.prop_bound = (Rat(2) - Rat(rep.a * (q - 1), q * q + 1 - rho)) * Rat(rep.f, q + 1);

    for (int32_t p = 0; p < g.num_points(); ++p) {
        int64_t cov = 0;
        for (int32_t c : fam.ids)
            if (g.circle_bits[c].test(p)) ++cov;
        if (cov > rep.best_coverage) {
            rep.best_coverage = cov;
            rep.best_point = p;
        }
    }
    rep.count_bound_achieved = Rat(rep.best_coverage) >= rep.count_bound;
    rep.prop_achieved = Rat(rep.best_coverage) >= rep.prop_bound;

    rep.hm_threshold = (q + 2 - rho) * (q + 1 - rho) / 2;

    rep.stability_applies = stability_bound_met(q, rep.f);
    rep.stability_threshold_approx = double(q * q + 4 * q) / std::sqrt(2.0) + 8.0;

    rep.mixing_available = !(q % 2 == 0 && rho == 1 && !g.extended);
    rep.mixing_all_hold = true;
    if (rep.mixing_available)
        for (int32_t p = 0; p < g.num_points(); ++p) {
            MixingRow row = mixing_gap_test(fam, p);
            if (!row.holds) rep.mixing_all_hold = false;
            rep.mixing.push_back(std::move(row));
        }
    return rep;
}

bool stability_bound_met(int64_t q, int64_t f) {
    // q^2/sqrt(2) + 2 sqrt(2) q + 8 = (q^2 + 4q)/sqrt(2) + 8, so the bound is
    // f - 8 >= (q^2+4q)/sqrt(2), i.e. 2 (f-8)^2 >= (q^2+4q)^2 with f >= 8
    int64_t lin = q * q + 4 * q;
    return f >= 8 && 2 * (f - 8) * (f - 8) >= lin * lin;
}

bool hm_absorption_ok(const IntersectingFamily& fam) {
    const CircleGeometry& g = *fam.g;
    int64_t thr = (g.q + 2 - g.rho) * (g.q + 1 - g.rho) / 2;
    for (int32_t p = 0; p < g.num_points(); ++p) {
        int64_t cov = 0;
        for (int32_t c : fam.ids)
            if (g.circle_bits[c].test(p)) ++cov;
        if (cov > thr && cov != fam.size()) return false;
    }
    return true;
}

RatioBound ratio_bound(const SchemeData& s, const std::vector<int>& disjoint_rels,
                       int64_t pencil_size) {
    RatioBound rb;
    for (int r : disjoint_rels) rb.k += s.valencies[r];
    bool first = true;
    for (size_t m = 1; m < s.P.size(); ++m) {
        int64_t theta = 0;
        for (int r : disjoint_rels) theta += s.P[m][r];
        if (first || theta < rb.lambda_min) { rb.lambda_min = theta; first = false; }
    }
    if (rb.lambda_min >= 0) throw Error(Err::Invalid, "disjointness graph has no negative eigenvalue");
    rb.bound = Rat(s.n * (-rb.lambda_min), rb.k - rb.lambda_min);
    rb.pencil_tight = (rb.bound == Rat(pencil_size));
    return rb;
}

// ------------------------------------------------------------ exact search ---

namespace {

struct CliqueSearcher {
    int64_t n;
    std::vector<Bits> adj; // meets graph in permuted order
    std::vector<int32_t> orig;
    int64_t budget, nodes = 0;
    bool truncated = false;
    int64_t best = 0;
    std::set<std::vector<int32_t>> sols;
    SearchProgress progress;

    void record(const std::vector<int32_t>& clique) {
        if (int64_t(clique.size()) > best) {
            best = int64_t(clique.size());
            sols.clear();
        }
        if (int64_t(clique.size()) == best) {
            std::vector<int32_t> ids;
            for (int32_t v : clique) ids.push_back(orig[v]);
            std::sort(ids.begin(), ids.end());
            sols.insert(std::move(ids));
        }
    }

    void expand(std::vector<int32_t>& clique, const Bits& cand) {
        if (truncated) return;
        if (++nodes > budget) { truncated = true; return; }
        if (progress && (nodes & ((1 << 20) - 1)) == 0) progress(nodes, best);
        if (cand.none()) {
            record(clique);
            return;
        }
        // greedy colouring in index order; classes give the bound
        std::vector<int32_t> order;
        std::vector<int32_t> colour;
        Bits uncoloured = cand;
        int c = 0;
        while (uncoloured.any()) {
            ++c;
            Bits cls = uncoloured;
            while (cls.any()) {
                int32_t v = int32_t(cls.next(0));
                order.push_back(v);
                colour.push_back(c);
                uncoloured.reset(v);
                cls.reset(v);
                cls.andnot(adj[v]); // keep only non-neighbours in this class
            }
        }
        Bits avail = cand;
        for (int64_t i = int64_t(order.size()) - 1; i >= 0; --i) {
            int32_t v = order[i];
            if (int64_t(clique.size()) + colour[i] < best) return; // cannot even tie
            clique.push_back(v);
            Bits next = avail;
            next &= adj[v];
            expand(clique, next);
            clique.pop_back();
            avail.reset(v);
            if (truncated) return;
        }
    }
};

} // namespace

SearchResult max_families_exact(const CircleGeometry& g, int64_t node_budget,
                                const SearchProgress& progress) {
    int64_t n = g.num_circles();
    std::vector<int64_t> deg(n, 0);
    std::vector<Bits> meets(n, Bits(n));
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = x + 1; y < n; ++y)
            if (g.circle_bits[x].intersects(g.circle_bits[y])) {
                meets[x].set(y);
                meets[y].set(x);
                ++deg[x];
                ++deg[y];
            }
    std::vector<int32_t> perm(n);
    for (int32_t i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int32_t a, int32_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    std::vector<int32_t> where(n);
    for (int32_t i = 0; i < n; ++i) where[perm[i]] = i;

    CliqueSearcher cs;
    cs.n = n;
    cs.orig = perm;
    cs.budget = node_budget;
    cs.progress = progress;
    cs.adj.assign(n, Bits(n));
    for (int32_t x = 0; x < n; ++x)
        meets[x].for_each([&](size_t y) { cs.adj[where[x]].set(where[y]); });

    Bits all(n);
    for (int32_t i = 0; i < n; ++i) all.set(i);
    std::vector<int32_t> clique;
    cs.expand(clique, all);

    SearchResult res;
    res.maximum = cs.best;
    res.nodes = cs.nodes;
    res.complete = !cs.truncated;
    for (const auto& s : cs.sols) res.families.push_back(s);
    if (res.complete) {
        res.upper_bound = res.maximum;
    } else {
        // root colouring bound still certifies an upper bound
        Bits uncoloured = all;
        int64_t c = 0;
        while (uncoloured.any()) {
            ++c;
            Bits cls = uncoloured;
            while (cls.any()) {
                int32_t v = int32_t(cls.next(0));
                uncoloured.reset(v);
                cls.reset(v);
                cls.andnot(cs.adj[v]);
            }
        }
        res.upper_bound = c;
    }
    return res;
}

std::vector<int32_t> greedy_family(const CircleGeometry& g) {
    int64_t n = g.num_circles();
    std::vector<int64_t> deg(n, 0);
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y)
            if (x != y && g.circle_bits[x].intersects(g.circle_bits[y])) ++deg[x];
    std::vector<int32_t> order(n);
    for (int32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    std::vector<int32_t> fam;
    for (int32_t v : order) {
        bool ok = true;
        for (int32_t u : fam)
            if (!g.circle_bits[u].intersects(g.circle_bits[v])) { ok = false; break; }
        if (ok) fam.push_back(v);
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

FamilyClassification classify_family(const IntersectingFamily& fam) {
    const CircleGeometry& g = *fam.g;
    FamilyClassification out;
    if (fam.ids.empty()) return out;
    Bits common = g.circle_bits[fam.ids[0]];
    for (int32_t c : fam.ids) common &= g.circle_bits[c];
    if (common.any()) {
        out.point = int32_t(common.next(0));
        out.cls = (g.extended && g.is_nucleus_point(out.point)) ? FamilyClass::NucleusPencil
                                                                : FamilyClass::Pencil;
        return out;
    }
    if (g.rho == 0 && g.q == 3 && !g.circle_type.empty()) {
        for (int8_t t = 0; t <= 1; ++t) {
            std::vector<int32_t> half;
            for (int32_t c = 0; c < g.num_circles(); ++c)
                if (g.circle_type[c] == t) half.push_back(c);
            if (half == fam.ids) {
                out.cls = FamilyClass::TwoPointMobius3;
                return out;
            }
        }
    }
    return out;
}

std::string family_class_name(FamilyClass c) {
    switch (c) {
    case FamilyClass::Pencil: return "Pencil";
    case FamilyClass::NucleusPencil: return "NucleusPencil";
    case FamilyClass::TwoPointMobius3: return "TwoPointMobius3";
    case FamilyClass::Other: return "Other";
    }
    return "Other";
}

} // namespace benz
